//! Non-crossing lattice-path encoding of tilings.
//!
//! Each D-letter contributes the path traced by its west-strip: a W step
//! for every DE tile and an SW step for every DA tile. The AE tiles sit at
//! the lattice points no path touches.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::{Tile, TileKind, Tiling};
use crate::diagram::{LatticePoint, RhombicDiagram};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    W,
    SW,
}

impl Step {
    fn delta(self) -> (i64, i64) {
        match self {
            Step::W => (-1, 0),
            Step::SW => (-1, -1),
        }
    }
}

/// One path per D-letter, top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathConfig {
    pub paths: Vec<Vec<Step>>,
}

impl PathConfig {
    pub fn new(paths: Vec<Vec<Step>>) -> Self {
        PathConfig { paths }
    }

    /// Vertices of path `index` when it starts at `start`.
    pub fn vertices_from(&self, index: usize, start: LatticePoint) -> Vec<LatticePoint> {
        let mut at = start;
        let mut out = vec![at];
        for s in &self.paths[index] {
            let (di, dj) = s.delta();
            at = at.offset(di, dj);
            out.push(at);
        }
        out
    }

    /// Positions `(path, step)` where an `SW, W` pair can become `W, SW`
    /// and still describe a tiling. Each one lowers the height by one.
    pub fn slides(&self, d: &RhombicDiagram) -> Vec<(usize, usize)> {
        self.moves(d, Step::SW, (-1, 0))
    }

    /// Positions where a `W, SW` pair can become `SW, W`.
    pub fn lifts(&self, d: &RhombicDiagram) -> Vec<(usize, usize)> {
        self.moves(d, Step::W, (-1, -1))
    }

    fn moves(&self, d: &RhombicDiagram, first: Step, moved: (i64, i64)) -> Vec<(usize, usize)> {
        let all = self.all_vertices(d);
        let mut out = Vec::new();
        for (p, start) in d.d_labels().iter().enumerate().take(self.paths.len()) {
            let path = &self.paths[p];
            let verts = self.vertices_from(p, start.anchor);
            for s in 0..path.len().saturating_sub(1) {
                if path[s] == first && path[s + 1] != first {
                    let new = verts[s].offset(moved.0, moved.1);
                    if !all.contains(&new) && paths_to_tiling(d, &self.swap_steps(p, s)).is_ok() {
                        out.push((p, s));
                    }
                }
            }
        }
        out
    }

    /// Swaps steps `step` and `step + 1` of path `path`.
    pub fn swap_steps(&self, path: usize, step: usize) -> PathConfig {
        let mut next = self.clone();
        next.paths[path].swap(step, step + 1);
        next
    }

    fn all_vertices(&self, d: &RhombicDiagram) -> HashSet<LatticePoint> {
        d.d_labels()
            .iter()
            .enumerate()
            .take(self.paths.len())
            .flat_map(|(p, e)| self.vertices_from(p, e.anchor))
            .collect()
    }
}

impl fmt::Display for PathConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, path) in self.paths.iter().enumerate() {
            if n > 0 {
                write!(f, " | ")?;
            }
            for s in path {
                write!(f, "{}", if *s == Step::W { "W" } else { "S" })?;
            }
        }
        Ok(())
    }
}

/// Number of W and SW steps in path `i`.
fn step_counts(d: &RhombicDiagram, i: usize) -> (usize, usize) {
    let w = d.word();
    let start = d.d_labels()[i].anchor;
    let end = LatticePoint::new(-((w.l() + w.r()) as i64), -(w.r() as i64) - i as i64);
    let sw = (start.j - end.j) as usize;
    let total = (start.i - end.i) as usize;
    (total - sw, sw)
}

fn path_ends(d: &RhombicDiagram) -> Vec<LatticePoint> {
    let w = d.word();
    (0..w.k())
        .map(|i| LatticePoint::new(-((w.l() + w.r()) as i64), -(w.r() as i64) - i as i64))
        .collect()
}

/// All W steps before all SW steps: the configuration of the minimal tiling.
pub fn minimal_path_config(d: &RhombicDiagram) -> PathConfig {
    PathConfig::new(
        (0..d.word().k())
            .map(|i| {
                let (w, sw) = step_counts(d, i);
                let mut p = vec![Step::W; w];
                p.extend(std::iter::repeat_n(Step::SW, sw));
                p
            })
            .collect(),
    )
}

/// Total number of `SW` steps preceding a `W` step, over all paths.
pub fn height(config: &PathConfig) -> usize {
    config
        .paths
        .iter()
        .map(|p| {
            let mut sw = 0;
            let mut h = 0;
            for s in p {
                match s {
                    Step::SW => sw += 1,
                    Step::W => h += sw,
                }
            }
            h
        })
        .sum()
}

pub fn tiling_to_paths(t: &Tiling) -> PathConfig {
    PathConfig::new(
        t.west_strips()
            .into_iter()
            .map(|s| {
                s.tiles
                    .iter()
                    .map(|tile| match tile.kind {
                        TileKind::DE => Step::W,
                        _ => Step::SW,
                    })
                    .collect()
            })
            .collect(),
    )
}

pub fn paths_to_tiling(d: &RhombicDiagram, config: &PathConfig) -> Result<Tiling> {
    if config.paths.len() != d.word().k() {
        return Err(Error::BadEndpoints);
    }
    let ends = path_ends(d);
    let mut seen = HashSet::new();
    let mut tiles = BTreeSet::new();
    for (p, start) in d.d_labels().iter().enumerate() {
        let verts = config.vertices_from(p, start.anchor);
        if verts.last() != Some(&ends[p]) {
            return Err(Error::BadEndpoints);
        }
        for v in &verts {
            if !seen.insert(*v) {
                return Err(Error::CrossingPaths);
            }
        }
        for (s, v) in config.paths[p].iter().zip(&verts) {
            let kind = match s {
                Step::W => TileKind::DE,
                Step::SW => TileKind::DA,
            };
            tiles.insert(Tile { kind, anchor: *v });
        }
    }
    let boundary: HashSet<LatticePoint> = d.p1_vertices().into_iter().collect();
    for p in d.region_points() {
        if !seen.contains(&p) && !boundary.contains(&p) {
            tiles.insert(Tile {
                kind: TileKind::AE,
                anchor: p.offset(1, 0),
            });
        }
    }
    Tiling::new(d.clone(), tiles)
}
