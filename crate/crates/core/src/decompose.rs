//! Edge 2-colorings certifying the tree and linear-arboricity
//! characterizations, found by exhaustive backtracking.
//!
//! Both searches are exponential in the worst case and meant for desk-scale
//! inputs (tens of edges).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    fields_with_columns, ordered_pair, strip_comment, subdivided_caterpillar_forest, syntax, Graph, Role,
};

/// The two forests of a decomposition. `F1` is realized by horizontal
/// visibilities, `F2` by vertical ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Forest {
    F1,
    F2,
}

impl Forest {
    pub fn as_str(self) -> &'static str {
        match self {
            Forest::F1 => "f1",
            Forest::F2 => "f2",
        }
    }

    pub fn other(self) -> Forest {
        match self {
            Forest::F1 => Forest::F2,
            Forest::F2 => Forest::F1,
        }
    }
}

/// Edge partition of a graph into two subdivided caterpillar forests with a
/// spine/leg role per edge. Keys are index pairs `(a, b)`, `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub forest: BTreeMap<(usize, usize), Forest>,
    pub role: BTreeMap<(usize, usize), Role>,
}

impl Decomposition {
    /// Builds roles from the canonical spine of each color class.
    pub fn from_coloring(g: &Graph, forest: BTreeMap<(usize, usize), Forest>) -> Result<Decomposition> {
        let mut role = BTreeMap::new();
        for f in [Forest::F1, Forest::F2] {
            let class = Self::class_graph(g, &forest, f);
            let cert = subdivided_caterpillar_forest(&class).ok_or_else(|| {
                Error::InvalidDecomposition(format!("{} is not a subdivided caterpillar forest of max degree 3", f.as_str()))
            })?;
            role.extend(cert.edge_roles(&class));
        }
        Ok(Decomposition { forest, role })
    }

    fn class_graph(g: &Graph, forest: &BTreeMap<(usize, usize), Forest>, f: Forest) -> Graph {
        g.spanning_subgraph(forest.iter().filter(|(_, &c)| c == f).map(|(&e, _)| e))
    }

    /// The spanning subgraph formed by one forest.
    pub fn forest_graph(&self, g: &Graph, f: Forest) -> Graph {
        Self::class_graph(g, &self.forest, f)
    }

    pub fn edges_of(&self, f: Forest) -> Vec<(usize, usize)> {
        self.forest.iter().filter(|(_, &c)| c == f).map(|(&e, _)| e).collect()
    }

    /// Checks the certificate against `g` without reference to any search:
    /// the colors partition the edges, each class is a forest of maximum
    /// degree 3, and in every component the spine edges form one
    /// leaf-to-leaf path through all degree-3 vertices.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDecomposition(m));
        let edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
        let colored: BTreeSet<(usize, usize)> = self.forest.keys().copied().collect();
        let roled: BTreeSet<(usize, usize)> = self.role.keys().copied().collect();
        if edges != colored || edges != roled {
            return bad("colors and roles must cover exactly the edges of the graph".into());
        }
        for f in [Forest::F1, Forest::F2] {
            let class = self.forest_graph(g, f);
            if !class.is_forest() {
                return bad(format!("{} contains a cycle", f.as_str()));
            }
            if class.max_degree() > 3 {
                return bad(format!("{} has a vertex of degree > 3", f.as_str()));
            }
            for comp in class.components() {
                if comp.len() == 1 {
                    continue;
                }
                let in_comp: BTreeSet<usize> = comp.iter().copied().collect();
                let spine: Vec<(usize, usize)> = self
                    .edges_of(f)
                    .into_iter()
                    .filter(|(a, _)| in_comp.contains(a))
                    .filter(|e| self.role[e] == Role::Spine)
                    .collect();
                let sg = g.spanning_subgraph(spine.iter().copied());
                let spine_vertices: BTreeSet<usize> = spine.iter().flat_map(|&(a, b)| [a, b]).collect();
                let label = g.label(comp[0]);
                if spine.is_empty() {
                    return bad(format!("{} component of `{label}` has no spine", f.as_str()));
                }
                let ends: Vec<usize> = spine_vertices.iter().copied().filter(|&v| sg.degree(v) == 1).collect();
                let is_path = sg.max_degree() <= 2 && ends.len() == 2 && spine.len() + 1 == spine_vertices.len();
                if !is_path || sg.tree_path(ends[0], ends[1]).is_none_or(|p| p.len() != spine_vertices.len()) {
                    return bad(format!("{} spine through `{label}` is not a single path", f.as_str()));
                }
                if ends.iter().any(|&v| class.degree(v) != 1) {
                    return bad(format!("{} spine through `{label}` does not end at leaves", f.as_str()));
                }
                if comp.iter().any(|&v| class.degree(v) == 3 && !spine_vertices.contains(&v)) {
                    return bad(format!("{} has a degree-3 vertex off its spine", f.as_str()));
                }
            }
        }
        Ok(())
    }

    /// `u v f1|f2 spine|leg` per edge, sorted by label.
    pub fn to_text(&self, g: &Graph) -> String {
        let mut lines: Vec<(String, String, &str, &str)> = self
            .forest
            .iter()
            .map(|(&(a, b), f)| {
                let (u, v) = ordered_pair(g.label(a), g.label(b));
                (u, v, f.as_str(), self.role[&(a, b)].as_str())
            })
            .collect();
        lines.sort();
        let mut out = String::new();
        for (u, v, f, r) in lines {
            let _ = writeln!(out, "{u} {v} {f} {r}");
        }
        out
    }

    /// Parses the text form; the graph is formed by the listed edges.
    pub fn from_text(text: &str) -> Result<(Graph, Decomposition)> {
        let mut g = Graph::new();
        let mut forest = BTreeMap::new();
        let mut role = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let fields = fields_with_columns(strip_comment(raw));
            match fields.as_slice() {
                [] => {}
                [(_, u), (cv, v), (cf, f), (cr, r)] => {
                    if u == v {
                        return Err(syntax(lineno, *cv, format!("self-loop on `{u}`")));
                    }
                    let f = match *f {
                        "f1" => Forest::F1,
                        "f2" => Forest::F2,
                        other => return Err(syntax(lineno, *cf, format!("expected f1 or f2, found `{other}`"))),
                    };
                    let r = match *r {
                        "spine" => Role::Spine,
                        "leg" => Role::Leg,
                        other => return Err(syntax(lineno, *cr, format!("expected spine or leg, found `{other}`"))),
                    };
                    let (a, b) = (g.add_vertex(u), g.add_vertex(v));
                    g.add_edge(a, b);
                    forest.insert((a.min(b), a.max(b)), f);
                    role.insert((a.min(b), a.max(b)), r);
                }
                [.., (col, _)] => return Err(syntax(lineno, *col, "expected `u v f1|f2 spine|leg`".into())),
            }
        }
        Ok((g, Decomposition { forest, role }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// A URVG, with the decomposition that certifies it.
    Urvg(Decomposition),
    /// Only a weak URVG (every tree is one).
    WeakOnly,
}

fn ensure_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree(format!("{} vertices, {} edges, {} components", t.order(), t.size(), t.components().len())))
    }
}

/// Tree edges in breadth-first order from vertex 0, as `(a, b)` with `a < b`.
fn bfs_edges(g: &Graph) -> Vec<(usize, usize)> {
    let (order, parent) = g.bfs(0);
    order.iter().filter_map(|&v| parent[v].map(|p| (p.min(v), p.max(v)))).collect()
}

/// Per-color partial assignment with incremental feasibility checks.
struct CaterpillarSearch {
    edges: Vec<(usize, usize)>,
    class: [Graph; 2],
}

impl CaterpillarSearch {
    fn new(g: &Graph) -> Self {
        let empty = g.spanning_subgraph(std::iter::empty());
        CaterpillarSearch { edges: bfs_edges(g), class: [empty.clone(), empty] }
    }

    /// Whether the component of `v` in color `c` still has its degree-3
    /// vertices on one path. Adding edges never repairs a violation.
    fn component_ok(&self, c: usize, v: usize) -> bool {
        let class = &self.class[c];
        let (comp, _) = class.bfs(v);
        let branch: Vec<usize> = comp.iter().copied().filter(|&w| class.degree(w) == 3).collect();
        if branch.len() <= 2 {
            return true;
        }
        // All branch points lie on the path between the two farthest apart.
        let dist = |from: usize| -> Vec<usize> {
            let mut d = vec![usize::MAX; class.order()];
            d[from] = 0;
            let mut queue = std::collections::VecDeque::from([from]);
            while let Some(x) = queue.pop_front() {
                for y in class.neighbors(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            d
        };
        let d0 = dist(branch[0]);
        let a = *branch.iter().max_by_key(|&&w| d0[w]).unwrap();
        let da = dist(a);
        let b = *branch.iter().max_by_key(|&&w| da[w]).unwrap();
        let db = dist(b);
        branch.iter().all(|&w| da[w] + db[w] == da[b])
    }

    fn run(&mut self, k: usize, colors: &mut Vec<usize>) -> bool {
        if k == self.edges.len() {
            return true;
        }
        let (a, b) = self.edges[k];
        let choices: &[usize] = if k == 0 { &[0] } else { &[0, 1] };
        for &c in choices {
            if k < colors.len() && colors[k] != c {
                continue;
            }
            if self.class[c].degree(a) >= 3 || self.class[c].degree(b) >= 3 {
                continue;
            }
            self.class[c].add_edge(a, b);
            if self.component_ok(c, a) {
                let fixed = k < colors.len();
                if !fixed {
                    colors.push(c);
                }
                if self.run(k + 1, colors) {
                    return true;
                }
                if !fixed {
                    colors.pop();
                }
            }
            self.class[c].remove_edge(a, b);
        }
        false
    }
}

fn caterpillar_search(t: &Graph, prefix: &[usize]) -> Option<Decomposition> {
    if t.size() == 0 {
        return Some(Decomposition { forest: BTreeMap::new(), role: BTreeMap::new() });
    }
    let mut s = CaterpillarSearch::new(t);
    let mut colors = prefix.to_vec();
    if !s.run(0, &mut colors) {
        return None;
    }
    let forest = s
        .edges
        .iter()
        .zip(&colors)
        .map(|(&e, &c)| (e, if c == 0 { Forest::F1 } else { Forest::F2 }))
        .collect();
    Decomposition::from_coloring(t, forest).ok()
}

/// Splits a tree into two subdivided caterpillar forests of maximum degree 3,
/// if possible. `F1` is tried first for every edge, and the first edge is
/// always in `F1`.
pub fn tree_caterpillar_bipartition(t: &Graph) -> Result<Option<Decomposition>> {
    ensure_tree(t)?;
    Ok(caterpillar_search(t, &[]))
}

/// Same result as [`tree_caterpillar_bipartition`], with the search split
/// over the colors of the first `split` edges and run on `workers` threads.
/// The lowest-ordered successful branch wins, so the answer does not depend
/// on `workers`.
pub fn tree_caterpillar_bipartition_parallel(t: &Graph, split: usize, workers: usize) -> Result<Option<Decomposition>> {
    ensure_tree(t)?;
    let k = split.min(t.size()).max(1);
    let prefixes: Vec<Vec<usize>> = (0..1usize << (k - 1))
        .map(|bits| std::iter::once(0).chain((0..k - 1).rev().map(|i| (bits >> i) & 1)).collect())
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(pool.install(|| prefixes.par_iter().find_map_first(|p| caterpillar_search(t, p))))
}

pub fn classify_tree(t: &Graph) -> Result<TreeClass> {
    Ok(match tree_caterpillar_bipartition(t)? {
        Some(d) => TreeClass::Urvg(d),
        None => TreeClass::WeakOnly,
    })
}

/// Two edge-disjoint linear forests covering a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForests {
    pub f1: Vec<(usize, usize)>,
    pub f2: Vec<(usize, usize)>,
}

impl LinearForests {
    /// Each class is a disjoint union of paths and together they partition
    /// the edges of `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let mut all: Vec<(usize, usize)> = self.f1.iter().chain(&self.f2).map(|&(a, b)| (a.min(b), a.max(b))).collect();
        all.sort_unstable();
        let before = all.len();
        all.dedup();
        if before != all.len() || all != g.edges() {
            return Err(Error::InvalidDecomposition("linear forests must partition the edges".into()));
        }
        for (name, class) in [("f1", &self.f1), ("f2", &self.f2)] {
            let h = g.spanning_subgraph(class.iter().copied());
            if !h.is_forest() || h.max_degree() > 2 {
                return Err(Error::InvalidDecomposition(format!("{name} is not a linear forest")));
            }
        }
        Ok(())
    }

    pub fn to_decomposition(&self, g: &Graph) -> Result<Decomposition> {
        let forest = self
            .f1
            .iter()
            .map(|&(a, b)| ((a.min(b), a.max(b)), Forest::F1))
            .chain(self.f2.iter().map(|&(a, b)| ((a.min(b), a.max(b)), Forest::F2)))
            .collect();
        Decomposition::from_coloring(g, forest)
    }
}

/// Union-find with undo, for acyclicity under backtracking.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], history: Vec::new() }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Returns false (and records nothing) if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

/// Splits the edges into two linear forests (linear arboricity at most 2),
/// by exhaustive search.
pub fn linear_forest_bipartition(g: &Graph) -> Option<LinearForests> {
    if g.max_degree() > 4 {
        return None;
    }
    // Depth-first edge order keeps each new edge near the previous ones.
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for comp in g.components() {
        let mut stack = vec![comp[0]];
        let mut visited = BTreeSet::new();
        while let Some(v) = stack.pop() {
            if !visited.insert(v) {
                continue;
            }
            for w in g.neighbors(v) {
                let e = (v.min(w), v.max(w));
                if seen.insert(e) {
                    edges.push(e);
                }
                if !visited.contains(&w) {
                    stack.push(w);
                }
            }
        }
    }
    struct S {
        deg: [Vec<usize>; 2],
        dsu: [Dsu; 2],
        colors: Vec<usize>,
    }
    fn go(s: &mut S, edges: &[(usize, usize)], k: usize) -> bool {
        if k == edges.len() {
            return true;
        }
        let (a, b) = edges[k];
        let choices: &[usize] = if k == 0 { &[0] } else { &[0, 1] };
        for &c in choices {
            if s.deg[c][a] >= 2 || s.deg[c][b] >= 2 || !s.dsu[c].union(a, b) {
                continue;
            }
            s.deg[c][a] += 1;
            s.deg[c][b] += 1;
            s.colors.push(c);
            if go(s, edges, k + 1) {
                return true;
            }
            s.colors.pop();
            s.deg[c][a] -= 1;
            s.deg[c][b] -= 1;
            s.dsu[c].undo();
        }
        false
    }
    let n = g.order();
    let mut s = S { deg: [vec![0; n], vec![0; n]], dsu: [Dsu::new(n), Dsu::new(n)], colors: Vec::new() };
    if !go(&mut s, &edges, 0) {
        return None;
    }
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    for (&e, &c) in edges.iter().zip(&s.colors) {
        if c == 0 { f1.push(e) } else { f2.push(e) }
    }
    f1.sort_unstable();
    f2.sort_unstable();
    Some(LinearForests { f1, f2 })
}
