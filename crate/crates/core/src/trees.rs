//! Tree generators: exhaustive enumeration of unlabeled trees and seeded
//! random labeled trees.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::Graph;

/// Canonical string of `t` rooted at `root` (AHU encoding).
fn rooted_code(t: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t.neighbors(root).filter(|&w| Some(w) != parent).map(|w| rooted_code(t, w, Some(root))).collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// The one or two centers of a tree.
pub fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            deg[v] = 0;
        }
        layer = next;
    }
    layer
}

/// Isomorphism-invariant code of an unrooted tree.
pub fn tree_code(t: &Graph) -> String {
    centers(t).into_iter().map(|c| rooted_code(t, c, None)).min().unwrap_or_default()
}

/// All unlabeled trees on `n` vertices, one representative each, in a
/// deterministic order. Grows trees leaf by leaf and deduplicates by
/// canonical code; fine up to a dozen or so vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::with_order(1)];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.order() {
                let mut g = t.clone();
                let w = g.add_vertex(&(k - 1).to_string());
                g.add_edge(v, w);
                if seen.insert(tree_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    level
}

/// Uniformly random labeled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::with_order(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        g.add_edge(leaf, s);
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]);
    g
}
