//! The `rat` command-line tool.

mod render;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use render::{render_fillings_strip, render_svg};

use crate::algebra::parse_rational;
use crate::closed_forms::{equivalence_class_count, macmahon_box, mct_count, mct_count_by_k};
use crate::diagram::{build_diagram, parse_word, Word};
use crate::limits::Limits;
use crate::markov::{verify_main_theorem, ChainParams};
use crate::tableau::{
    enumerate_fillings, symbol_weight_of_word, weight_of_filling, weight_of_word, Filling,
};
use crate::tiling::{
    enumerate_tilings, height, maximal_tiling, minimal_tiling, tiling_to_paths, Tiling,
};
use crate::{Error, Result};

pub const SCHEMA_VERSION: &str = "1";

/// Longest word accepted by word commands unless an area limit is given.
pub const DEFAULT_MAX_WORD: usize = 8;
/// Largest `n` accepted by sector commands unless an area limit is given.
pub const DEFAULT_MAX_SECTOR: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "rat",
    version,
    about = "Rhombic alternative tableaux and the two-species PASEP"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest diagram area to enumerate. Setting it lifts the default
    /// word-length caps.
    #[arg(long, global = true, env = "RAT_MAX_AREA")]
    pub max_area: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight of a word, summed over the fillings of its minimal tiling.
    Weight {
        word: String,
        /// Leave out the boundary factor a^k b^l.
        #[arg(long)]
        symbols_only: bool,
    },
    /// List the fillings of a tiling with their weights.
    Fillings {
        word: String,
        /// Use the maximal tiling instead of the minimal one.
        #[arg(long)]
        maximal: bool,
    },
    /// List every tiling of a diagram with its height.
    Tilings { word: String },
    /// Exact stationary distribution next to the tableau prediction.
    Stationary {
        n: usize,
        r: usize,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Run property suites; all of them when none is selected.
    Verify(VerifyArgs),
    /// Closed-form counts.
    Count(CountArgs),
    /// Draw a diagram, one filling or all fillings as SVG.
    Render {
        word: String,
        /// Index of the filling to draw, as listed by `fillings`.
        #[arg(long, conflicts_with = "all_fillings")]
        filling: Option<usize>,
        /// Draw every filling side by side.
        #[arg(long)]
        all_fillings: bool,
        #[arg(long)]
        maximal: bool,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// The five word-weight recurrences.
    #[arg(long)]
    pub ansatz: bool,
    /// Same weight from every tiling.
    #[arg(long)]
    pub tiling_independence: bool,
    /// q = 0 fillings against multi-Catalan tableaux.
    #[arg(long)]
    pub bijection: bool,
    /// Closed forms against enumeration.
    #[arg(long)]
    pub closed_forms: bool,
    /// Stationary distributions against weights.
    #[arg(long)]
    pub theorem: bool,
    /// Largest word length checked.
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("formula").required(true).args(["mct", "by_k", "classes", "macmahon"])))]
pub struct CountArgs {
    /// q = 0 tableaux of size (n, r): N R
    #[arg(long)]
    pub mct: bool,
    /// q = 0 tableaux of size (n, r) with k D's: N R K
    #[arg(long)]
    pub by_k: bool,
    /// Tableau classes of size (n, r): N R
    #[arg(long)]
    pub classes: bool,
    /// Plane partitions in a box: A B C
    #[arg(long)]
    pub macmahon: bool,
    pub values: Vec<usize>,
}

/// Result of one command: a text rendering, a JSON payload and whether
/// every check in it passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        })
    }
}

struct Ctx {
    limits: Limits,
    capped: bool,
}

impl Ctx {
    fn word(&self, text: &str) -> Result<Word> {
        let w = parse_word(text)?;
        if self.capped && w.len() > DEFAULT_MAX_WORD {
            return Err(Error::LimitExceeded {
                what: "word length",
                limit: DEFAULT_MAX_WORD,
                actual: w.len(),
            });
        }
        self.limits.check_area(w.inversions())?;
        Ok(w)
    }

    fn sector(&self, n: usize) -> Result<()> {
        if self.capped && n > DEFAULT_MAX_SECTOR {
            return Err(Error::LimitExceeded {
                what: "sector length",
                limit: DEFAULT_MAX_SECTOR,
                actual: n,
            });
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Ctx {
        limits: cli
            .max_area
            .map_or_else(Limits::default, |a| Limits::default().with_max_area(a)),
        capped: cli.max_area.is_none(),
    };
    match &cli.command {
        Command::Weight { word, symbols_only } => weight(&ctx, word, *symbols_only),
        Command::Fillings { word, maximal } => fillings(&ctx, word, *maximal),
        Command::Tilings { word } => tilings(&ctx, word),
        Command::Stationary {
            n,
            r,
            alpha,
            beta,
            q,
        } => stationary(&ctx, *n, *r, alpha, beta, q),
        Command::Verify(args) => run_verify(&ctx, args),
        Command::Count(args) => count(args),
        Command::Render {
            word,
            filling,
            all_fillings,
            maximal,
            output,
        } => render(
            &ctx,
            word,
            *filling,
            *all_fillings,
            *maximal,
            output.as_ref(),
        ),
    }
}

fn weight(ctx: &Ctx, text: &str, symbols_only: bool) -> Result<Outcome> {
    let w = ctx.word(text)?;
    let p = if symbols_only {
        symbol_weight_of_word(&w, &ctx.limits)?
    } else {
        weight_of_word(&w, &ctx.limits)?
    };
    Ok(Outcome {
        command: "weight",
        inputs: json!({ "word": w.to_string(), "symbols_only": symbols_only }),
        results: json!({ "weight": p.to_string() }),
        text: p.to_string(),
        ok: true,
    })
}

fn tiling_for(w: &Word, maximal: bool) -> Tiling {
    let d = build_diagram(w);
    if maximal {
        maximal_tiling(&d)
    } else {
        minimal_tiling(&d)
    }
}

fn filling_json(index: usize, f: &Filling) -> Value {
    let entries: Vec<Value> = f
        .entries()
        .iter()
        .map(|(t, e)| json!({ "tile": t.to_string(), "entry": e.as_char().to_string() }))
        .collect();
    json!({ "index": index, "entries": entries, "weight": weight_of_filling(f).to_string() })
}

fn fillings(ctx: &Ctx, text: &str, maximal: bool) -> Result<Outcome> {
    let w = ctx.word(text)?;
    let t = tiling_for(&w, maximal);
    let all = enumerate_fillings(&t, &ctx.limits)?;
    let mut lines = Vec::new();
    for (i, f) in all.iter().enumerate() {
        let entries: Vec<String> = f
            .entries()
            .iter()
            .map(|(t, e)| format!("{t}={}", e.as_char()))
            .collect();
        lines.push(format!(
            "{i}: {}  weight {}",
            entries.join(" "),
            weight_of_filling(f)
        ));
    }
    lines.push(format!("{} fillings", all.len()));
    Ok(Outcome {
        command: "fillings",
        inputs: json!({ "word": w.to_string(), "tiling": if maximal { "maximal" } else { "minimal" } }),
        results: json!({
            "count": all.len(),
            "fillings": all.iter().enumerate().map(|(i, f)| filling_json(i, f)).collect::<Vec<_>>(),
        }),
        text: lines.join("\n"),
        ok: true,
    })
}

fn tilings(ctx: &Ctx, text: &str) -> Result<Outcome> {
    let w = ctx.word(text)?;
    let all = enumerate_tilings(&build_diagram(&w), &ctx.limits)?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for (i, t) in all.iter().enumerate() {
        let pc = tiling_to_paths(t);
        let h = height(&pc);
        lines.push(format!("{i}: height {h}  paths {pc}"));
        rows.push(json!({
            "index": i,
            "height": h,
            "paths": pc.to_string(),
            "tiles": t.tiles().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        }));
    }
    lines.push(format!("{} tilings", all.len()));
    Ok(Outcome {
        command: "tilings",
        inputs: json!({ "word": w.to_string() }),
        results: json!({ "count": all.len(), "tilings": rows }),
        text: lines.join("\n"),
        ok: true,
    })
}

fn stationary(ctx: &Ctx, n: usize, r: usize, a: &str, b: &str, q: &str) -> Result<Outcome> {
    ctx.sector(n)?;
    let params = ChainParams::new(parse_rational(a)?, parse_rational(b)?, parse_rational(q)?)?;
    let report = verify_main_theorem(n, r, &params, &ctx.limits)?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for s in &report.states {
        lines.push(format!(
            "{}  {}  predicted {}  match={}",
            s.word,
            s.stationary,
            s.predicted,
            s.ok()
        ));
        rows.push(json!({
            "word": s.word.to_string(),
            "stationary": s.stationary.to_string(),
            "predicted": s.predicted.to_string(),
            "match": s.ok(),
        }));
    }
    lines.push(format!(
        "Z = {}  match={}",
        report.partition,
        report.passed()
    ));
    Ok(Outcome {
        command: "stationary",
        inputs: json!({
            "n": n, "r": r,
            "alpha": params.alpha.to_string(),
            "beta": params.beta.to_string(),
            "q": params.q.to_string(),
        }),
        results: json!({
            "partition": report.partition.to_string(),
            "states": rows,
            "match": report.passed(),
        }),
        text: lines.join("\n"),
        ok: report.passed(),
    })
}

fn run_verify(ctx: &Ctx, args: &VerifyArgs) -> Result<Outcome> {
    ctx.sector(args.max_n)?;
    let none = !(args.ansatz
        || args.tiling_independence
        || args.bijection
        || args.closed_forms
        || args.theorem);
    type Suite = fn(usize, &Limits) -> Result<verify::SuiteResult>;
    let suites: [(bool, Suite); 5] = [
        (args.ansatz, verify::ansatz),
        (args.tiling_independence, verify::tiling_independence),
        (args.bijection, verify::bijection),
        (args.closed_forms, verify::closed_forms),
        (args.theorem, verify::theorem),
    ];
    let mut results = Vec::new();
    for (selected, suite) in suites {
        if selected || none {
            results.push(suite(args.max_n, &ctx.limits)?);
        }
    }
    let ok = results.iter().all(|s| s.passed());
    let mut lines = Vec::new();
    for s in &results {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        lines.push(format!("{status} {} ({} checks)", s.name, s.checked));
        for f in s.failures.iter().take(10) {
            lines.push(format!("  {f}"));
        }
    }
    Ok(Outcome {
        command: "verify",
        inputs: json!({ "max_n": args.max_n }),
        results: json!({
            "passed": ok,
            "suites": results.iter().map(|s| json!({
                "name": s.name,
                "checked": s.checked,
                "passed": s.passed(),
                "failures": s.failures,
            })).collect::<Vec<_>>(),
        }),
        text: lines.join("\n"),
        ok,
    })
}

fn count(args: &CountArgs) -> Result<Outcome> {
    let v = &args.values;
    let need = |k: usize, usage: &str| {
        if v.len() == k {
            Ok(())
        } else {
            Err(Error::Precondition(format!("expected {usage}")))
        }
    };
    let (name, value) = if args.mct {
        need(2, "N R")?;
        check_r(v[0], v[1])?;
        ("mct", mct_count(v[0], v[1]))
    } else if args.by_k {
        need(3, "N R K")?;
        check_r(v[0], v[1] + v[2])?;
        ("by_k", mct_count_by_k(v[0], v[1], v[2]))
    } else if args.classes {
        need(2, "N R")?;
        check_r(v[0], v[1])?;
        ("classes", equivalence_class_count(v[0], v[1]))
    } else {
        need(3, "A B C")?;
        ("macmahon", macmahon_box(v[0], v[1], v[2]))
    };
    Ok(Outcome {
        command: "count",
        inputs: json!({ "formula": name, "values": v }),
        results: json!({ "value": value.to_string() }),
        text: value.to_string(),
        ok: true,
    })
}

fn check_r(n: usize, r: usize) -> Result<()> {
    if r > n {
        return Err(Error::Precondition(format!("{r} exceeds n = {n}")));
    }
    Ok(())
}

fn render(
    ctx: &Ctx,
    text: &str,
    index: Option<usize>,
    all: bool,
    maximal: bool,
    output: Option<&PathBuf>,
) -> Result<Outcome> {
    let w = ctx.word(text)?;
    let t = tiling_for(&w, maximal);
    let svg = if all {
        render_fillings_strip(&enumerate_fillings(&t, &ctx.limits)?)?
    } else if let Some(i) = index {
        let fs = enumerate_fillings(&t, &ctx.limits)?;
        let f = fs.get(i).ok_or_else(|| {
            Error::Precondition(format!("filling index {i} out of range (0..{})", fs.len()))
        })?;
        render_svg(&w, Some(f), Some(&t))?
    } else {
        render_svg(&w, None, Some(&t))?
    };
    let (text, results) = match output {
        Some(path) => {
            std::fs::write(path, &svg).map_err(|e| {
                Error::Precondition(format!("cannot write {}: {e}", path.display()))
            })?;
            (
                format!("wrote {}", path.display()),
                json!({ "file": path.display().to_string(), "bytes": svg.len() }),
            )
        }
        None => (svg.clone(), json!({ "svg": svg })),
    };
    Ok(Outcome {
        command: "render",
        inputs: json!({ "word": w.to_string(), "filling": index, "all_fillings": all, "maximal": maximal }),
        results,
        text,
        ok: true,
    })
}

/// Parses `args`, runs the command and returns the exit code together
/// with what goes to standard output and standard error.
pub fn run_args<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, String::new(), e.render().to_string());
        }
    };
    match run(&cli) {
        Ok(out) => {
            let stdout = if cli.json {
                serde_json::to_string_pretty(&out.to_json()).expect("JSON values serialize")
            } else {
                out.text.clone()
            };
            (if out.ok { 0 } else { 1 }, stdout, String::new())
        }
        Err(e) => (2, String::new(), format!("error: {e}")),
    }
}
