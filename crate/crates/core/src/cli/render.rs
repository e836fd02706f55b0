//! SVG figures of tilings and fillings.
//!
//! Lattice points sit on a 40-unit grid, so tile centroids and edge
//! midpoints land on integer coordinates.

use std::fmt::Write;

use crate::diagram::{Edge, EdgeKind, LatticePoint, Word};
use crate::tableau::{weight_of_filling, Entry, Filling};
use crate::tiling::{minimal_tiling, Tile, TileKind, Tiling};
use crate::{Error, Result};

const PITCH: i64 = 40;
const MARGIN: i64 = 40;
const CAPTION: i64 = 24;

struct Frame {
    imin: i64,
    jmax: i64,
    width: i64,
    height: i64,
}

impl Frame {
    fn new(t: &Tiling) -> Self {
        let corner = t.diagram().southwest_corner();
        Frame {
            imin: corner.i,
            jmax: 0,
            width: PITCH * -corner.i + 2 * MARGIN,
            height: PITCH * -corner.j + 2 * MARGIN,
        }
    }

    /// Canvas coordinates of the average of `points`.
    fn at(&self, points: &[LatticePoint]) -> (i64, i64) {
        let n = points.len() as i64;
        let x: i64 = points.iter().map(|p| p.i - self.imin).sum();
        let y: i64 = points.iter().map(|p| self.jmax - p.j).sum();
        (PITCH * x / n + MARGIN, PITCH * y / n + MARGIN)
    }
}

fn kind_class(k: TileKind) -> &'static str {
    match k {
        TileKind::DE => "de",
        TileKind::DA => "da",
        TileKind::AE => "ae",
    }
}

fn edge_points(e: &Edge) -> [LatticePoint; 2] {
    [e.anchor, e.end()]
}

fn points_attr(pts: &[(i64, i64)]) -> String {
    pts.iter()
        .map(|(x, y)| format!("{x},{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

const STYLE: &str = "<style>\
.de{fill:#f4d58d}.da{fill:#a8d5ba}.ae{fill:#9fc5e8}\
polygon{stroke:#333;stroke-width:1}\
.boundary{fill:none;stroke:#000;stroke-width:2}\
.line{fill:none;stroke:#c0392b;stroke-width:1.5;stroke-dasharray:4 3}\
text{font-family:serif;font-size:16px;text-anchor:middle;dominant-baseline:central}\
.q{fill:#777;font-size:13px}.label{font-size:12px}.caption{font-size:13px}\
</style>";

/// Body of one panel (no `<svg>` wrapper).
fn panel(t: &Tiling, filling: Option<&Filling>) -> String {
    let frame = Frame::new(t);
    let mut out = String::new();
    for tile in t.tiles() {
        let pts: Vec<(i64, i64)> = tile.vertices().iter().map(|p| frame.at(&[*p])).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"{}\" points=\"{}\"/>",
            kind_class(tile.kind),
            points_attr(&pts)
        );
    }
    let d = t.diagram();
    for path in [d.p1(), d.p2()] {
        let mut pts = vec![frame.at(&[LatticePoint::ORIGIN])];
        pts.extend(path.iter().map(|e| frame.at(&[e.end()])));
        let _ = writeln!(
            out,
            "<polyline class=\"boundary\" points=\"{}\"/>",
            points_attr(&pts)
        );
    }
    for e in d.p1() {
        let (x, y) = frame.at(&edge_points(e));
        let (dx, dy) = match e.kind {
            EdgeKind::South => (12, 0),
            EdgeKind::West => (0, 14),
            EdgeKind::Southwest => (10, 10),
        };
        let letter = match e.kind {
            EdgeKind::South => 'D',
            EdgeKind::West => 'E',
            EdgeKind::Southwest => 'A',
        };
        let _ = writeln!(
            out,
            "<text class=\"label\" x=\"{}\" y=\"{}\">{letter}</text>",
            x + dx,
            y + dy
        );
    }
    if let Some(f) = filling {
        let on_line = f.on_line();
        for tile in t.tiles() {
            let (x, y) = frame.at(&tile.vertices());
            let glyph = match f.entry(tile) {
                Entry::Alpha => Some(("", "α")),
                Entry::Beta => Some(("", "β")),
                Entry::Empty if !on_line.contains(tile) => Some((" class=\"q\"", "q")),
                Entry::Empty => None,
            };
            if let Some((class, g)) = glyph {
                let _ = writeln!(out, "<text{class} x=\"{x}\" y=\"{y}\">{g}</text>");
            }
        }
        for strip in t.north_strips() {
            line(&mut out, &frame, f, &strip.tiles, Entry::Alpha, |tile| {
                tile.e_edges().map(|(_, top)| top)
            });
        }
        for strip in t.west_strips() {
            line(&mut out, &frame, f, &strip.tiles, Entry::Beta, |tile| {
                tile.d_edges().map(|(_, west)| west)
            });
        }
    }
    out
}

fn line(
    out: &mut String,
    frame: &Frame,
    f: &Filling,
    tiles: &[Tile],
    symbol: Entry,
    exit: impl Fn(&Tile) -> Option<Edge>,
) {
    let Some(p) = tiles.iter().position(|t| f.entry(t) == symbol) else {
        return;
    };
    let mut pts = vec![frame.at(&tiles[p].vertices())];
    for t in &tiles[p..] {
        if let Some(e) = exit(t) {
            pts.push(frame.at(&edge_points(&e)));
        }
    }
    let _ = writeln!(
        out,
        "<polyline class=\"line\" points=\"{}\"/>",
        points_attr(&pts)
    );
}

fn wrap(width: i64, height: i64, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
{STYLE}\n{body}</svg>\n"
    )
}

/// Figure of Γ(w) tiled by `tiling` (the minimal tiling by default), with
/// the symbols, q's and lines of `filling` if given.
pub fn render_svg(w: &Word, filling: Option<&Filling>, tiling: Option<&Tiling>) -> Result<String> {
    let owned;
    let t = match (tiling, filling) {
        (Some(t), Some(f)) if f.tiling() != t => {
            return Err(Error::InconsistentInputs(
                "filling is on a different tiling".into(),
            ))
        }
        (Some(t), _) => t,
        (None, Some(f)) => f.tiling(),
        (None, None) => {
            owned = minimal_tiling(&crate::diagram::build_diagram(w));
            &owned
        }
    };
    if t.word() != w {
        return Err(Error::InconsistentInputs(format!(
            "tiling is of type {}, not {w}",
            t.word()
        )));
    }
    let frame = Frame::new(t);
    Ok(wrap(frame.width, frame.height, &panel(t, filling)))
}

/// Fillings side by side, each captioned with its weight.
pub fn render_fillings_strip(fillings: &[Filling]) -> Result<String> {
    let Some(first) = fillings.first() else {
        return Err(Error::InconsistentInputs("no fillings to draw".into()));
    };
    if fillings.iter().any(|f| f.tiling() != first.tiling()) {
        return Err(Error::InconsistentInputs(
            "fillings are on different tilings".into(),
        ));
    }
    let frame = Frame::new(first.tiling());
    let mut body = String::new();
    for (k, f) in fillings.iter().enumerate() {
        let dx = k as i64 * frame.width;
        let _ = writeln!(body, "<g transform=\"translate({dx},0)\">");
        body.push_str(&panel(f.tiling(), Some(f)));
        let _ = writeln!(
            body,
            "<text class=\"caption\" x=\"{}\" y=\"{}\">{}</text>",
            frame.width / 2,
            frame.height + CAPTION / 2,
            weight_of_filling(f)
        );
        body.push_str("</g>\n");
    }
    Ok(wrap(
        frame.width * fillings.len() as i64,
        frame.height + CAPTION,
        &body,
    ))
}
