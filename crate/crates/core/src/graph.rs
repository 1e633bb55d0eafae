//! Labeled simple graphs and the combinatorial predicates used by the
//! classifiers and audits.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;

/// Undirected simple graph over string labels. Vertices are also addressable
/// by their insertion index.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for Graph {
    /// Labeled equality: same vertex labels and same labeled edge set.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_labels() == other.vertex_labels() && self.labeled_edges() == other.labeled_edges()
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on vertices `0..n` labeled by their decimal index.
    pub fn with_order(n: usize) -> Self {
        let mut g = Graph::new();
        for i in 0..n {
            g.add_vertex(&i.to_string());
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::with_order(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Returns the index of `label`, adding the vertex if it is new.
    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(BTreeSet::new());
        i
    }

    /// Adds edge `{a, b}`; loops are ignored, repeated edges collapse.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) {
        let i = self.add_vertex(a);
        let j = self.add_vertex(b);
        self.add_edge(i, j);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a].remove(&b);
        self.adj[b].remove(&a);
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    /// Edges as index pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (a, nb) in self.adj.iter().enumerate() {
            for &b in nb.range(a + 1..) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn vertex_labels(&self) -> BTreeSet<&str> {
        self.labels.iter().map(String::as_str).collect()
    }

    /// Edges as label pairs, each pair sorted.
    pub fn labeled_edges(&self) -> BTreeSet<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| ordered_pair(&self.labels[a], &self.labels[b]))
            .collect()
    }

    /// True when every vertex and edge of `self` (by label) occurs in `other`.
    pub fn is_labeled_subgraph_of(&self, other: &Graph) -> bool {
        self.labels.iter().all(|l| other.index.contains_key(l))
            && self.edges().into_iter().all(|(a, b)| {
                let (a, b) = (other.index[&self.labels[a]], other.index[&self.labels[b]]);
                other.has_edge(a, b)
            })
    }

    /// Same vertex set, only the listed edges.
    pub fn spanning_subgraph(&self, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
        let mut g = Graph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            adj: vec![BTreeSet::new(); self.order()],
        };
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.size() + 1 == self.order()
    }

    /// Two-coloring (`false`/`true` per vertex) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in 0..self.order() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// Edges whose removal disconnects their endpoints.
    pub fn bridges(&self) -> BTreeSet<(usize, usize)> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = BTreeSet::new();
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbor cursor)
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.neighbors(root).collect(), 0));
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.3 < top.2.len() {
                    let w = top.2[top.3];
                    top.3 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, self.neighbors(w).collect(), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(up) = stack.last() {
                        let p = up.0;
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.insert((p.min(v), p.max(v)));
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertices incident to at least one non-bridge edge.
    pub fn vertices_on_cycles(&self) -> BTreeSet<usize> {
        let bridges = self.bridges();
        self.edges()
            .into_iter()
            .filter(|e| !bridges.contains(e))
            .flat_map(|(a, b)| [a, b])
            .collect()
    }

    /// A 5-clique, if one exists (vertex indices ascending).
    pub fn find_k5(&self) -> Option<[usize; 5]> {
        fn extend(g: &Graph, clique: &mut Vec<usize>, cands: &[usize]) -> bool {
            if clique.len() == 5 {
                return true;
            }
            for (i, &v) in cands.iter().enumerate() {
                if clique.len() + cands.len() - i < 5 {
                    break;
                }
                let next: Vec<usize> = cands[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
                clique.push(v);
                if extend(g, clique, &next) {
                    return true;
                }
                clique.pop();
            }
            false
        }
        let all: Vec<usize> = (0..self.order()).filter(|&v| self.degree(v) >= 4).collect();
        let mut clique = Vec::new();
        extend(self, &mut clique, &all).then(|| [clique[0], clique[1], clique[2], clique[3], clique[4]])
    }

    pub fn contains_k5(&self) -> bool {
        self.find_k5().is_some()
    }

    pub fn predicates(&self) -> GraphPredicates {
        GraphPredicates {
            is_tree: self.is_tree(),
            is_forest: self.is_forest(),
            max_degree: self.max_degree(),
            bipartition: self.bipartition(),
            vertices_on_cycles: self.vertices_on_cycles(),
            contains_k5: self.contains_k5(),
        }
    }

    /// Breadth-first order from `root`, with each vertex's parent.
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut parent = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Vertex path between `a` and `b` in a forest, if connected.
    pub fn tree_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let (_, parent) = self.bfs(a);
        if a != b && parent[b].is_none() {
            return None;
        }
        let mut path = vec![b];
        let mut v = b;
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path.reverse();
        Some(path)
    }

    /// Canonical text form: one `u v` line per edge and one `id` line per
    /// isolated vertex, both sorted by label.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.labeled_edges() {
            let _ = writeln!(out, "{a} {b}");
        }
        let mut isolated: Vec<&str> = (0..self.order()).filter(|&v| self.degree(v) == 0).map(|v| self.label(v)).collect();
        isolated.sort_unstable();
        for v in isolated {
            let _ = writeln!(out, "{v}");
        }
        out
    }

    /// Parses the text form. `#` starts a comment; blank lines are skipped.
    pub fn from_text(text: &str) -> Result<Graph> {
        let mut g = Graph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            let fields = fields_with_columns(line);
            match fields.as_slice() {
                [] => {}
                [(_, v)] => {
                    g.add_vertex(v);
                }
                [(_, a), (col, b)] => {
                    if a == b {
                        return Err(syntax(lineno, *col, format!("self-loop on `{a}`")));
                    }
                    g.add_edge_by_label(a, b);
                }
                [.., (col, _)] => {
                    return Err(syntax(lineno, *col, "expected `id` or `u v`".into()));
                }
            }
        }
        Ok(g)
    }

    /// Undirected DOT with labels as node names.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for l in &self.labels {
            let _ = writeln!(out, "  \"{}\";", escape_dot(l));
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", escape_dot(&self.labels[a]), escape_dot(&self.labels[b]));
        }
        out.push_str("}\n");
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub(crate) fn ordered_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Whitespace-separated fields with their 1-based column.
pub(crate) fn fields_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub(crate) fn syntax(lineno: usize, column: usize, message: String) -> Error {
    Error::Parse(ParseError::Syntax {
        line: lineno + 1,
        column,
        message,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphPredicates {
    pub is_tree: bool,
    pub is_forest: bool,
    pub max_degree: usize,
    pub bipartition: Option<Vec<bool>>,
    pub vertices_on_cycles: BTreeSet<usize>,
    pub contains_k5: bool,
}

impl GraphPredicates {
    pub fn is_bipartite(&self) -> bool {
        self.bipartition.is_some()
    }
}

/// Whether an edge lies on the spine or on a leg of its caterpillar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    Spine,
    Leg,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Spine => "spine",
            Role::Leg => "leg",
        }
    }
}

/// Spine of one component. `spine` lists the path's vertices in order; it is
/// a single vertex for an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpine {
    pub vertices: Vec<usize>,
    pub spine: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaterpillarCertificate {
    pub components: Vec<ComponentSpine>,
}

impl CaterpillarCertificate {
    /// Role of every edge `(a, b)`, `a < b`.
    pub fn edge_roles(&self, g: &Graph) -> BTreeMap<(usize, usize), Role> {
        let mut spine_edges = BTreeSet::new();
        for c in &self.components {
            for w in c.spine.windows(2) {
                spine_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        g.edges()
            .into_iter()
            .map(|e| (e, if spine_edges.contains(&e) { Role::Spine } else { Role::Leg }))
            .collect()
    }

    /// Vertices that lie on legs, i.e. off every spine.
    pub fn leg_vertices(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for c in &self.components {
            let on: BTreeSet<usize> = c.spine.iter().copied().collect();
            out.extend(c.vertices.iter().copied().filter(|v| !on.contains(v)));
        }
        out
    }
}

/// Decides whether `g` is a forest of subdivided caterpillars with maximum
/// degree 3 (every component's degree-3 vertices lie on one path), and if so
/// returns a spine for each component.
///
/// The spine is a leaf-to-leaf path through all degree-3 vertices; among the
/// candidates the one with the smallest `(min, max)` endpoint index pair wins.
pub fn subdivided_caterpillar_forest(g: &Graph) -> Option<CaterpillarCertificate> {
    if !g.is_forest() || g.max_degree() > 3 {
        return None;
    }
    let mut components = Vec::new();
    for comp in g.components() {
        let spine = component_spine(g, &comp)?;
        components.push(ComponentSpine { vertices: comp, spine });
    }
    Some(CaterpillarCertificate { components })
}

pub fn is_subdivided_caterpillar_forest_deg3(g: &Graph) -> bool {
    subdivided_caterpillar_forest(g).is_some()
}

fn component_spine(g: &Graph, comp: &[usize]) -> Option<Vec<usize>> {
    if comp.len() == 1 {
        return Some(vec![comp[0]]);
    }
    let branch_points: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 3).collect();
    if branch_points.is_empty() {
        let mut leaves = comp.iter().copied().filter(|&v| g.degree(v) == 1);
        let a = leaves.next()?;
        let b = leaves.next()?;
        return g.tree_path(a, b);
    }
    // Shortest path through every branch point: between the two that are
    // farthest apart.
    let far = |from: usize| -> usize {
        let dist = distances(g, from);
        *branch_points.iter().max_by_key(|&&v| (dist[v], std::cmp::Reverse(v))).unwrap()
    };
    let a = far(branch_points[0]);
    let b = far(a);
    let core = g.tree_path(a, b)?;
    let on_core: BTreeSet<usize> = core.iter().copied().collect();
    if branch_points.iter().any(|v| !on_core.contains(v)) {
        return None;
    }
    let prev_of = |end: usize| -> Option<usize> {
        if core.len() >= 2 {
            Some(if end == core[0] { core[1] } else { core[core.len() - 2] })
        } else {
            None
        }
    };
    // Off-core branches hanging from an endpoint, each walked to its leaf.
    let tails = |end: usize| -> Vec<Vec<usize>> {
        let skip = prev_of(end);
        g.neighbors(end)
            .filter(|&w| Some(w) != skip)
            .map(|w| walk_to_leaf(g, end, w))
            .collect()
    };
    let mut best: Option<((usize, usize), Vec<usize>)> = None;
    let mut consider = |left: &[usize], right: &[usize]| {
        // left tail runs outward from core[0], right tail from core[last]
        let mut path: Vec<usize> = left.iter().rev().copied().collect();
        path.extend(core.iter().copied());
        path.extend(right.iter().copied());
        let (s, t) = (path[0], *path.last().unwrap());
        let key = (s.min(t), s.max(t));
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            if s > t {
                path.reverse();
            }
            best = Some((key, path));
        }
    };
    if a == b {
        let ts = tails(a);
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                consider(&ts[i], &ts[j]);
            }
        }
    } else {
        let (la, lb) = (tails(core[0]), tails(*core.last().unwrap()));
        for x in &la {
            for y in &lb {
                consider(x, y);
            }
        }
    }
    best.map(|(_, p)| p)
}

/// Vertices from `first` onward, walking away from `from` until a leaf.
fn walk_to_leaf(g: &Graph, from: usize, first: usize) -> Vec<usize> {
    let mut out = vec![first];
    let (mut prev, mut cur) = (from, first);
    loop {
        let next = g.neighbors(cur).find(|&w| w != prev);
        match next {
            Some(w) if g.degree(cur) == 2 => {
                out.push(w);
                prev = cur;
                cur = w;
            }
            _ => return out,
        }
    }
}

fn distances(g: &Graph, from: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Monotone {
    NonDecreasing,
    NonIncreasing,
}

/// Indices of a monotone subsequence and its direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneWitness {
    pub indices: Vec<usize>,
    pub direction: Monotone,
}

/// Longest monotone subsequence (nondecreasing preferred on ties).
pub fn longest_monotone_subsequence(seq: &[Rational]) -> MonotoneWitness {
    let up = longest_chain(seq, |a, b| a <= b);
    let down = longest_chain(seq, |a, b| a >= b);
    if down.len() > up.len() {
        MonotoneWitness { indices: down, direction: Monotone::NonIncreasing }
    } else {
        MonotoneWitness { indices: up, direction: Monotone::NonDecreasing }
    }
}

fn longest_chain(seq: &[Rational], ok: impl Fn(&Rational, &Rational) -> bool) -> Vec<usize> {
    let n = seq.len();
    let mut len = vec![1usize; n];
    let mut prev = vec![usize::MAX; n];
    for j in 0..n {
        for i in 0..j {
            if ok(&seq[i], &seq[j]) && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let Some(mut end) = (0..n).max_by_key(|&j| (len[j], std::cmp::Reverse(j))) else {
        return Vec::new();
    };
    let mut out = vec![end];
    while prev[end] != usize::MAX {
        end = prev[end];
        out.push(end);
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                e.push((a, b));
            }
        }
        Graph::from_edges(n, &e)
    }

    #[test]
    fn path_is_its_own_spine() {
        let cert = subdivided_caterpillar_forest(&path(9)).unwrap();
        assert_eq!(cert.components[0].spine, (0..9).collect::<Vec<_>>());
        assert!(cert.leg_vertices().is_empty());
    }

    #[test]
    fn claw_is_caterpillar() {
        let g = star(3);
        let cert = subdivided_caterpillar_forest(&g).unwrap();
        assert_eq!(cert.components[0].spine, vec![1, 0, 2]);
        assert_eq!(cert.leg_vertices(), BTreeSet::from([3]));
    }

    #[test]
    fn two_claws_joined_by_a_path() {
        // centers 0 and 3 joined by 0-1-2-3; extra leaves 4,5 on 0 and 6,7 on 3
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (0, 4), (0, 5), (3, 6), (3, 7)]);
        let cert = subdivided_caterpillar_forest(&g).unwrap();
        let spine = &cert.components[0].spine;
        assert!(spine.contains(&0) && spine.contains(&3));
        assert_eq!((spine[0], *spine.last().unwrap()), (4, 6));
    }

    #[test]
    fn degree_four_rejected() {
        assert!(!is_subdivided_caterpillar_forest_deg3(&star(4)));
    }

    #[test]
    fn spread_branch_points_rejected() {
        // spider with three legs of length 2, then a branch at each leg tip
        let g = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (2, 7), (2, 8), (4, 9)],
        );
        // degree-3 vertices 0 and 2 lie on a path, plus leg vertex 4 has degree 2: ok
        assert!(is_subdivided_caterpillar_forest_deg3(&g));
        let mut g2 = g.clone();
        for (at, label) in [(4, "10"), (6, "11"), (6, "12")] {
            let x = g2.add_vertex(label);
            g2.add_edge(at, x);
        }
        // branch points now sit on all three legs of the spider
        assert_eq!(g2.max_degree(), 3);
        assert!(!is_subdivided_caterpillar_forest_deg3(&g2));
    }

    #[test]
    fn monotone_examples() {
        let s: Vec<Rational> = [1, 2, 3].iter().map(|&v| Rational::int(v)).collect();
        assert_eq!(longest_monotone_subsequence(&s).indices, vec![0, 1, 2]);
        let s: Vec<Rational> = [2, 4, 1, 5, 3].iter().map(|&v| Rational::int(v)).collect();
        let w = longest_monotone_subsequence(&s);
        assert_eq!(w.indices.len(), 3);
        assert!(longest_monotone_subsequence(&[]).indices.is_empty());
        let s = vec![q(1, 2), q(1, 3), q(1, 4)];
        assert_eq!(longest_monotone_subsequence(&s).direction, Monotone::NonIncreasing);
    }

    #[test]
    fn predicate_examples() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let p = c6.predicates();
        assert!(p.is_bipartite());
        assert_eq!(p.vertices_on_cycles.len(), 6);
        assert!(complete(5).contains_k5());
        assert!(!complete(4).contains_k5());
        let s7 = star(7).predicates();
        assert!(s7.is_tree && s7.max_degree == 7 && s7.vertices_on_cycles.is_empty());
    }

    #[test]
    fn bridges_of_a_lollipop() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        assert_eq!(g.bridges(), BTreeSet::from([(2, 3), (3, 4)]));
        assert_eq!(g.vertices_on_cycles(), BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn text_format_is_canonical() {
        let g = Graph::from_text("b a\n# note\n\nc\na d  # trailing\n").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.to_text(), "a b\na d\nc\n");
        assert_eq!(Graph::from_text(&g.to_text()).unwrap(), g);
        let err = Graph::from_text("a b c\n").unwrap_err();
        assert!(err.to_string().contains("line 1, column 5"), "{err}");
        assert!(Graph::from_text("a a").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let dot = path(3).to_dot();
        assert_eq!(dot.matches("--").count(), 2);
    }
}
