//! Extremal families: depth-s trees with the most edges, level-count
//! recurrences and their closed forms, the universal edge bounds, and dense
//! layouts whose edge counts come within `O(sqrt n)` of those bounds.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::decompose::{Decomposition, Forest};
use crate::error::{Error, Result};
use crate::geom::Layout;
use crate::graph::{Graph, Role};
use crate::grid::{adjacent_cells, cells_to_layout, overlaps_any, Cell};

type EdgeSet = BTreeSet<(usize, usize)>;

/// A tree with a distinguished root and the depth of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub tree: Graph,
    pub root: usize,
    pub depth: Vec<usize>,
}

impl RootedTree {
    fn new() -> Self {
        let mut tree = Graph::new();
        tree.add_vertex("0");
        RootedTree { tree, root: 0, depth: vec![0] }
    }

    fn child(&mut self, parent: usize) -> usize {
        let v = self.tree.add_vertex(&self.tree.order().to_string());
        self.tree.add_edge(parent, v);
        self.depth.push(self.depth[parent] + 1);
        v
    }

    /// Number of vertices at each depth `0..=max`.
    pub fn level_sizes(&self) -> Vec<u64> {
        let max = self.depth.iter().copied().max().unwrap_or(0);
        let mut out = vec![0; max + 1];
        for &d in &self.depth {
            out[d] += 1;
        }
        out
    }
}

fn require_depth(s: usize) -> Result<()> {
    if s == 0 {
        return Err(Error::InvalidArgument("depth s must be at least 1".into()));
    }
    Ok(())
}

/// The depth-s caterpillar: a spine of `2s + 1` vertices centred at the root,
/// each spine vertex carrying a leg that reaches depth `s`. `s^2 + 2s` edges.
pub fn gen_tbs(s: usize) -> Result<RootedTree> {
    require_depth(s)?;
    let mut t = RootedTree::new();
    let leg = |t: &mut RootedTree, from: usize| {
        let mut v = from;
        while t.depth[v] < s {
            v = t.child(v);
        }
    };
    leg(&mut t, 0);
    for _side in 0..2 {
        let mut v = 0;
        for _ in 0..s {
            v = t.child(v);
            leg(&mut t, v);
        }
    }
    Ok(t)
}

/// The depth-s two-forest tree with the most vertices on every level. Red
/// edges are `F1`, blue ones `F2`; the returned decomposition carries the
/// construction's own spine/leg roles.
pub fn gen_trs(s: usize) -> Result<(RootedTree, Decomposition)> {
    require_depth(s)?;
    let mut t = RootedTree::new();
    let mut forest = BTreeMap::new();
    let mut role = BTreeMap::new();
    let mut frontier: Vec<(usize, Option<(Forest, Role)>)> = vec![(0, None)];
    for _level in 0..s {
        let mut next = Vec::new();
        for (v, up) in frontier {
            let kids: Vec<(Forest, Role)> = match up {
                None => vec![
                    (Forest::F1, Role::Spine),
                    (Forest::F1, Role::Spine),
                    (Forest::F2, Role::Spine),
                    (Forest::F2, Role::Spine),
                    (Forest::F1, Role::Leg),
                    (Forest::F2, Role::Leg),
                ],
                Some((c, Role::Spine)) => vec![
                    (c, Role::Spine),
                    (c.other(), Role::Spine),
                    (c.other(), Role::Spine),
                    (c, Role::Leg),
                    (c.other(), Role::Leg),
                ],
                Some((c, Role::Leg)) => {
                    vec![(c.other(), Role::Spine), (c.other(), Role::Spine), (c, Role::Leg), (c.other(), Role::Leg)]
                }
            };
            for (f, r) in kids {
                let w = t.child(v);
                forest.insert((v, w), f);
                role.insert((v, w), r);
                next.push((w, Some((f, r))));
            }
        }
        frontier = next;
    }
    let d = Decomposition { forest, role };
    d.verify(&t.tree)?;
    Ok((t, d))
}

/// Per-level vertex counts of the extremal two-forest tree, levels `1..=s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCounts {
    /// vertices whose parent edge is a spine edge
    pub a: Vec<u64>,
    /// vertices whose parent edge is a leg edge
    pub b: Vec<u64>,
    pub c: Vec<u64>,
}

/// Counts from the `(a, c)` recurrence: `a_k = a + 2c`, `c_k = a + 4c`.
pub fn level_counts(s: usize) -> LevelCounts {
    let (mut a, mut c) = (Vec::with_capacity(s), Vec::with_capacity(s));
    let (mut ak, mut ck) = (4u64, 6u64);
    for _ in 0..s {
        a.push(ak);
        c.push(ck);
        (ak, ck) = (ak + 2 * ck, ak + 4 * ck);
    }
    let b = a.iter().zip(&c).map(|(a, c)| c - a).collect();
    LevelCounts { a, b, c }
}

/// Counts from the `(a, b)` recurrence: `a_k = 3a + 2b`, `b_k = 2a + 2b`.
pub fn level_counts_ab(s: usize) -> LevelCounts {
    let (mut a, mut b) = (Vec::with_capacity(s), Vec::with_capacity(s));
    let (mut ak, mut bk) = (4u64, 2u64);
    for _ in 0..s {
        a.push(ak);
        b.push(bk);
        (ak, bk) = (3 * ak + 2 * bk, 2 * ak + 2 * bk);
    }
    let c = a.iter().zip(&b).map(|(a, b)| a + b).collect();
    LevelCounts { a, b, c }
}

/// Closed form of `c_k`, floating point, for cross-checking only.
pub fn c_closed(k: u32) -> f64 {
    let r = 17f64.sqrt();
    let k = k as i32;
    let t1 = (17.0 - 7.0 * r) * (10.0 - 2.0 * r).powi(k);
    let t2 = 2f64.powi(1 + k) * r * (5.0 + r).powi(k);
    let t3 = (2.0 * (5.0 + r)).powi(k) * (17.0 + 5.0 * r);
    2f64.powi(-1 - 2 * k) * (t1 + t2 + t3) / 17.0
}

/// Closed form of `c_1 + ... + c_s`, the most edges of a depth-s tree.
pub fn edges_closed(s: u32) -> f64 {
    let r = 17f64.sqrt();
    let s = s as i32;
    -2.0 + (1.0 - 3.0 / r) * ((5.0 - r) / 2.0).powi(s) + (1.0 + 3.0 / r) * ((5.0 + r) / 2.0).powi(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    /// most edges of any URVG on `n` vertices
    pub urvg_bound: i64,
    /// most edges of a bipartite URVG (stated for `n >= 7`)
    pub bipartite_bound: i64,
    /// edges achieved by the dense construction
    pub dense_target: i64,
    /// edges achieved by the dense bipartite construction
    pub dense_bipartite_target: i64,
}

fn ceil_sqrt(n: u64) -> i64 {
    let r = n.isqrt();
    (if r * r == n { r } else { r + 1 }) as i64
}

pub fn bounds(n: u64) -> Result<BoundsReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let ni = n as i64;
    let (fl, ce) = (n.isqrt() as i64, ceil_sqrt(n));
    Ok(BoundsReport {
        n,
        urvg_bound: 6 * ni - 4 * ce + 1,
        bipartite_bound: 4 * ni - 2 * ce + 5,
        dense_target: 6 * ni - 12 * fl + 6,
        dense_bipartite_target: 4 * ni - 8 * ce + 4,
    })
}

/// A square patch of the lattice `i*u + j*v`, grown square by square.
struct LatticePatch {
    unit: i64,
    cells: Vec<Cell>,
    edges: BTreeSet<(usize, usize)>,
}

impl LatticePatch {
    fn new(unit: i64, u: Cell, v: Cell, k: i64) -> LatticePatch {
        let mut cells = Vec::new();
        for j in 0..k {
            for i in 0..k {
                cells.push((i * u.0 + j * v.0, i * u.1 + j * v.1));
            }
        }
        let mut edges = BTreeSet::new();
        for a in 0..cells.len() {
            for b in a + 1..cells.len() {
                if adjacent_cells(&cells, unit, a, b) {
                    edges.insert((a, b));
                }
            }
        }
        LatticePatch { unit, cells, edges }
    }

    /// Edge set after adding `c`, or `None` if `c` overlaps a square.
    fn edges_with(&mut self, c: Cell) -> Option<BTreeSet<(usize, usize)>> {
        if overlaps_any(&self.cells, self.unit, c) {
            return None;
        }
        self.cells.push(c);
        let new = self.cells.len() - 1;
        let s = self.unit;
        let between = |p: i64, q: i64, x: i64| p.min(q) < x && x < p.max(q);
        let mut edges = BTreeSet::new();
        for &(a, b) in &self.edges {
            let (pa, pb) = (self.cells[a], self.cells[b]);
            // only an edge whose strip contains the new square can be lost
            let maybe_blocked = between(pa.0, pb.0, c.0) || between(pa.1, pb.1, c.1);
            if !maybe_blocked || adjacent_cells(&self.cells, s, a, b) {
                edges.insert((a, b));
            }
        }
        for a in 0..new {
            if adjacent_cells(&self.cells, s, a, new) {
                edges.insert((a, new));
            }
        }
        self.cells.pop();
        Some(edges)
    }

    /// Adds squares one at a time until there are `n`. Each step scans the
    /// grid around the layout, coarse positions first, and takes the first
    /// position whose net edge gain is at least `min_gain`; failing that, the
    /// best position that still meets `floor(len)` edges. `accept` vets every
    /// new edge set.
    fn grow(
        &mut self,
        n: usize,
        min_gain: usize,
        floor: impl Fn(usize) -> usize,
        accept: impl Fn(usize, &BTreeSet<(usize, usize)>) -> bool,
    ) -> Result<()> {
        while self.cells.len() < n {
            let s = self.unit;
            let len = self.cells.len() + 1;
            let (x0, x1) = (self.cells.iter().map(|c| c.0).min().unwrap(), self.cells.iter().map(|c| c.0).max().unwrap());
            let (y0, y1) = (self.cells.iter().map(|c| c.1).min().unwrap(), self.cells.iter().map(|c| c.1).max().unwrap());
            let mut first = None;
            let mut best: Option<(usize, Cell, EdgeSet)> = None;
            'scan: for stride in [2, 1] {
                for y in (y0 - 2 * s..=y1 + 2 * s).rev() {
                    for x in x0 - 2 * s..=x1 + 2 * s {
                        if stride == 2 && (x.rem_euclid(2) != 0 || y.rem_euclid(2) != 0) {
                            continue;
                        }
                        let Some(edges) = self.edges_with((x, y)) else { continue };
                        let gain = edges.len().saturating_sub(self.edges.len());
                        let improves = best.as_ref().is_none_or(|b| gain > b.0);
                        if edges.len() < floor(len) || !(gain >= min_gain || improves) || !accept(len, &edges) {
                            continue;
                        }
                        if gain >= min_gain {
                            first = Some(((x, y), edges));
                            break 'scan;
                        }
                        best = Some((gain, (x, y), edges));
                    }
                }
            }
            let Some((c, edges)) = first.or(best.map(|(_, c, e)| (c, e))) else {
                return Err(Error::Invariant(format!("no square keeps {} edges at n = {len}", floor(len))));
            };
            self.cells.push(c);
            self.edges = edges;
        }
        Ok(())
    }
}

fn dense_floor(n: usize, bipartite: bool) -> usize {
    let b = bounds(n as u64).expect("n >= 1");
    (if bipartite { b.dense_bipartite_target } else { b.dense_target }).max(0) as usize
}

fn bipartite_edges(n: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    let mut g = Graph::with_order(n);
    for &(a, b) in edges {
        g.add_edge(a, b);
    }
    g.bipartition().is_some()
}

/// Dense layout on `n >= 64` squares with at least `6n - 12 floor(sqrt n) + 6`
/// edges: a `k x k` patch of the lattice spanned by `(4/3, 2/3)` and
/// `(-2/3, 4/3)`, then squares around it that each add six edges.
pub fn gen_dense_layout(n: usize) -> Result<Layout> {
    if n < 64 {
        return Err(Error::InvalidArgument(format!("the dense construction needs n >= 64, got {n}")));
    }
    let k = (n as u64).isqrt() as i64;
    // sixths: the lattice sits on thirds, added squares need the finer grid
    let mut patch = LatticePatch::new(6, (8, 4), (-4, 8), k);
    patch.grow(n, 6, |m| dense_floor(m, false), |_, _| true)?;
    Ok(cells_to_layout(&patch.cells, 6))
}

/// Bipartite layout on `n >= 81` squares with at least `4n - 8 ceil(sqrt n) + 4`
/// edges: a `k x k` patch of the lattice spanned by `(5/4, 1/4)` and
/// `(-1, 1)`, then squares that each add four edges (a few may add fewer
/// while the count stays on target) and keep the graph bipartite.
pub fn gen_dense_bipartite_layout(n: usize) -> Result<Layout> {
    if n < 81 {
        return Err(Error::InvalidArgument(format!("the dense bipartite construction needs n >= 81, got {n}")));
    }
    let k = (n as u64).isqrt() as i64;
    let mut patch = LatticePatch::new(8, (10, 2), (-8, 8), k);
    patch.grow(n, 4, |m| dense_floor(m, true), bipartite_edges)?;
    Ok(cells_to_layout(&patch.cells, 8))
}

/// Degree multiset `degree -> count` of the dense `k x k` base case as the
/// construction intends it: 4 of degree 4, 4 of 6, `4(k-3)` of 7, 4 of 10,
/// `4(k-4)` of 11 and the rest 12.
pub fn dense_degree_profile(k: u64) -> BTreeMap<usize, u64> {
    let mut m = BTreeMap::new();
    m.insert(4, 4);
    m.insert(6, 4);
    m.insert(7, 4 * (k - 3));
    m.insert(10, 4);
    m.insert(11, 4 * (k - 4));
    m.insert(12, (k - 4) * (k - 4));
    m.retain(|_, c| *c > 0);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tbs_edge_counts() {
        for (s, e) in [(1, 3), (2, 8), (3, 15), (4, 24), (5, 35), (6, 48)] {
            let t = gen_tbs(s).unwrap();
            assert_eq!(t.tree.size(), e);
            assert!(t.tree.is_tree());
            assert!(crate::graph::is_subdivided_caterpillar_forest_deg3(&t.tree));
            assert_eq!(t.depth.iter().copied().max(), Some(s));
        }
        assert!(gen_tbs(0).is_err());
    }

    #[test]
    fn trs_levels_follow_the_recurrence() {
        for s in 1..=5 {
            let (t, _) = gen_trs(s).unwrap();
            let levels = t.level_sizes();
            assert_eq!(&levels[1..], &level_counts(s).c[..]);
        }
        let (t, _) = gen_trs(2).unwrap();
        assert_eq!((t.tree.order(), t.tree.size()), (35, 34));
    }

    #[test]
    fn recurrences_agree() {
        let c = level_counts(20);
        assert_eq!(c, level_counts_ab(20));
        assert_eq!(&c.c[..3], &[6, 28, 128]);
        assert_eq!(c.a[0], 4);
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(64).unwrap();
        assert_eq!((b.urvg_bound, b.dense_target), (353, 294));
        let b = bounds(81).unwrap();
        assert_eq!((b.bipartite_bound, b.dense_bipartite_target), (311, 256));
        assert_eq!(bounds(1).unwrap().urvg_bound, 3);
    }

    #[test]
    fn dense_base_matches_the_degree_profile() {
        let g = gen_dense_layout(64).unwrap().extract_graph().unwrap();
        assert_eq!(g.size(), 294);
        let mut seen = BTreeMap::new();
        for v in 0..g.order() {
            *seen.entry(g.degree(v)).or_insert(0u64) += 1;
        }
        assert_eq!(seen, dense_degree_profile(8));
    }

    #[test]
    fn extensions_meet_the_targets() {
        let g = gen_dense_layout(65).unwrap().extract_graph().unwrap();
        assert!(g.size() >= 300);
        let g = gen_dense_bipartite_layout(82).unwrap().extract_graph().unwrap();
        assert!(g.size() as i64 >= bounds(82).unwrap().dense_bipartite_target);
        assert!(g.bipartition().is_some());
        assert!(gen_dense_layout(63).is_err() && gen_dense_bipartite_layout(80).is_err());
    }

    #[test]
    fn dense_profile_sums_to_the_edge_count() {
        for k in 8..12u64 {
            let sum: u64 = dense_degree_profile(k).iter().map(|(d, c)| *d as u64 * c).sum();
            assert_eq!(sum, 12 * (k - 1) * (k - 1));
        }
    }
}
