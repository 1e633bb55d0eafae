//! Exhaustive search for layouts on a quantized grid.
//!
//! Corners are restricted to multiples of `step`. The first vertex is pinned
//! at the origin; the others range over `[-extent, extent]^2` subject to the
//! whole layout fitting in an `extent x extent` box of corners, which covers
//! every grid layout inside `[0, extent]^2` up to translation. Exhaustion is
//! evidence only: placements off the grid are never tried.
//!
//! Pruning relies on monotonicity: adding a square can only destroy
//! visibilities, so every required edge between placed squares must already
//! be visible. Vertices with the same neighbourhood are interchangeable and
//! are placed in increasing lexicographic order.

use rayon::prelude::*;
use serde::Serialize;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::grid::{adjacent_cells, overlaps_any, Cell};
use crate::geom::Layout;
use crate::graph::Graph;
use crate::rational::Rational;

/// Largest target the public entry point accepts.
pub const MAX_SEARCH_VERTICES: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// extraction must equal the target
    Strong,
    /// extraction must contain the target
    Weak,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Layout),
    Exhausted,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// partial placements visited (all workers)
    pub nodes: u64,
}

struct Problem {
    /// target vertices in placement order
    order: Vec<usize>,
    /// for each position in `order`, earlier positions adjacent in the target
    back_edges: Vec<Vec<usize>>,
    /// required edges as position pairs
    edges: Vec<(usize, usize)>,
    /// non-edges as position pairs (strong mode only)
    non_edges: Vec<(usize, usize)>,
    /// earlier interchangeable position, if any
    twin_of: Vec<Option<usize>>,
    unit: i64,
    span: i64,
    mode: SearchMode,
}

impl Problem {
    fn new(target: &Graph, unit: i64, extent: i64, mode: SearchMode) -> Problem {
        let n = target.order();
        // greedy order: most constrained next (most placed neighbours, then degree, then index)
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let back = target.neighbors(v).filter(|&w| placed[w]).count();
                    (back, target.degree(v), std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let pos_of: Vec<usize> = {
            let mut p = vec![0; n];
            for (k, &v) in order.iter().enumerate() {
                p[v] = k;
            }
            p
        };
        let back_edges: Vec<Vec<usize>> =
            order.iter().enumerate().map(|(k, &v)| target.neighbors(v).map(|w| pos_of[w]).filter(|&p| p < k).collect()).collect();
        let mut edges = Vec::new();
        let mut non_edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if target.has_edge(order[a], order[b]) {
                    edges.push((a, b));
                } else {
                    non_edges.push((a, b));
                }
            }
        }
        let twins = |u: usize, v: usize| {
            let nu: Vec<usize> = target.neighbors(u).filter(|&w| w != v).collect();
            let nv: Vec<usize> = target.neighbors(v).filter(|&w| w != u).collect();
            nu == nv
        };
        let twin_of = (0..n).map(|k| (0..k).rev().find(|&p| twins(order[p], order[k]))).collect();
        Problem { order, back_edges, edges, non_edges, twin_of, unit, span: extent * unit, mode }
    }

    fn candidates(&self, k: usize, cells: &[Cell], bbox: (i64, i64, i64, i64)) -> Vec<Cell> {
        let (x0, x1, y0, y1) = bbox;
        let s = self.unit;
        let mut out = Vec::new();
        for x in (x1 - self.span)..=(x0 + self.span) {
            for y in (y1 - self.span)..=(y0 + self.span) {
                let c = (x, y);
                if let Some(t) = self.twin_of[k] {
                    if c <= cells[t] {
                        continue;
                    }
                }
                if overlaps_any(cells, s, c) {
                    continue;
                }
                out.push(c);
            }
        }
        out
    }

    /// Required visibilities among the first `cells.len()` positions survive.
    fn consistent(&self, cells: &[Cell]) -> bool {
        let k = cells.len() - 1;
        let s = self.unit;
        if !self.back_edges[k].iter().all(|&p| adjacent_cells(cells, s, p, k)) {
            return false;
        }
        // the new square may have blocked an older required edge
        self.edges.iter().filter(|&&(a, b)| b < k && a < k).all(|&(a, b)| adjacent_cells(cells, s, a, b))
    }

    fn complete(&self, cells: &[Cell]) -> bool {
        self.mode == SearchMode::Weak || !self.non_edges.iter().any(|&(a, b)| adjacent_cells(cells, self.unit, a, b))
    }

    fn dfs(&self, cells: &mut Vec<Cell>, bbox: (i64, i64, i64, i64), nodes: &mut u64) -> bool {
        *nodes += 1;
        let k = cells.len();
        if k == self.order.len() {
            return self.complete(cells);
        }
        for c in self.candidates(k, cells, bbox) {
            cells.push(c);
            if self.consistent(cells) {
                let nb = (bbox.0.min(c.0), bbox.1.max(c.0), bbox.2.min(c.1), bbox.3.max(c.1));
                if self.dfs(cells, nb, nodes) {
                    return true;
                }
            }
            cells.pop();
        }
        false
    }
}

fn step_denominator(step: Rational) -> Option<i64> {
    if step.numer() != 1 {
        return None;
    }
    match step.denom() {
        d @ 1..=3 => Some(d as i64),
        _ => None,
    }
}

/// Searches the grid for a layout of `target`. `workers` only changes speed:
/// the first layout in the canonical enumeration order is returned.
pub fn grid_search(target: &Graph, step: Rational, extent: i64, mode: SearchMode, workers: usize) -> Result<SearchReport> {
    if target.order() > MAX_SEARCH_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "grid search supports at most {MAX_SEARCH_VERTICES} vertices, target has {}",
            target.order()
        )));
    }
    if !(1..=8).contains(&extent) {
        return Err(Error::InvalidArgument(format!("extent must be in 1..=8, got {extent}")));
    }
    let unit = step_denominator(step)
        .ok_or_else(|| Error::InvalidArgument(format!("step must be 1, 1/2 or 1/3, got {step}")))?;
    grid_search_unchecked(target, unit, extent, mode, workers)
}

/// [`grid_search`] without the size limits; `unit` grid cells per square side.
pub fn grid_search_unchecked(target: &Graph, unit: i64, extent: i64, mode: SearchMode, workers: usize) -> Result<SearchReport> {
    let n = target.order();
    let to_layout = |cells: &[Cell], p: &Problem| {
        let mut sq: Vec<(usize, Cell)> = p.order.iter().copied().zip(cells.iter().copied()).collect();
        sq.sort_unstable();
        let mut l = Layout::new();
        for (v, (x, y)) in sq {
            l.place(target.label(v), Rational::new(x as i128, unit as i128), Rational::new(y as i128, unit as i128));
        }
        l
    };
    if n == 0 {
        return Ok(SearchReport { outcome: SearchOutcome::Found(Layout::new()), nodes: 1 });
    }
    let p = Problem::new(target, unit, extent, mode);
    let root = vec![(0i64, 0i64)];
    if n == 1 {
        return Ok(SearchReport { outcome: SearchOutcome::Found(to_layout(&root, &p)), nodes: 1 });
    }
    let firsts: Vec<Cell> = p.candidates(1, &root, (0, 0, 0, 0));
    let nodes = AtomicU64::new(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let found = pool.install(|| {
        firsts.par_iter().find_map_first(|&c| {
            let mut cells = vec![(0, 0), c];
            let mut local = 0u64;
            let hit = p.consistent(&cells) && p.dfs(&mut cells, (c.0.min(0), c.0.max(0), c.1.min(0), c.1.max(0)), &mut local);
            nodes.fetch_add(local, Ordering::Relaxed);
            hit.then_some(cells)
        })
    });
    let outcome = match found {
        Some(cells) => {
            let layout = to_layout(&cells, &p);
            let g = layout.extract_graph()?;
            let ok = match mode {
                SearchMode::Strong => g == *target,
                SearchMode::Weak => target.is_labeled_subgraph_of(&g),
            };
            if !ok {
                return Err(Error::Invariant("grid search result fails exact extraction".into()));
            }
            SearchOutcome::Found(layout)
        }
        None => SearchOutcome::Exhausted,
    };
    Ok(SearchReport { outcome, nodes: nodes.into_inner() })
}
