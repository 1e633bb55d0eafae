//! Product layouts from two linear forests, plus cycles and small complete
//! graphs built on top of them.
//!
//! Each path of `f1` is laid out as a staircase of y-intervals `[k*2/3, k*2/3 + 1]`
//! and each path of `f2` as x-intervals the same way; vertex `v` gets
//! `(x(v), y(v))`. Consecutive path vertices overlap on an interval of length
//! 1/3, vertices two apart only touch, so horizontal visibilities are exactly
//! `f1` and vertical ones exactly `f2`. Path components are separated by a
//! gap of 2.

use crate::decompose::LinearForests;
use crate::error::{Error, Result};
use crate::geom::Layout;
use crate::graph::Graph;
use crate::rational::{q, Rational};

/// Positions of the vertices along the paths of a linear forest.
fn staircase(g: &Graph, edges: &[(usize, usize)]) -> Result<Vec<Rational>> {
    let h = g.spanning_subgraph(edges.iter().copied());
    if !h.is_forest() || h.max_degree() > 2 {
        return Err(Error::InvalidDecomposition("not a linear forest".into()));
    }
    let mut coord = vec![Rational::ZERO; g.order()];
    let mut base = Rational::ZERO;
    let step = q(2, 3);
    for comp in h.components() {
        // walk from the lower-index end
        let start = comp.iter().copied().filter(|&v| h.degree(v) <= 1).min().unwrap_or(comp[0]);
        let mut prev = None;
        let mut cur = Some(start);
        let mut k = 0i128;
        while let Some(v) = cur {
            coord[v] = base + step * Rational::int(k);
            let next = h.neighbors(v).find(|&w| Some(w) != prev);
            prev = Some(v);
            cur = next;
            k += 1;
        }
        base = base + step * Rational::int(k - 1) + Rational::int(3);
    }
    Ok(coord)
}

/// Layout whose horizontal visibility graph is `f1` and vertical one is `f2`.
pub fn layout_linear_arb2(g: &Graph, forests: &LinearForests) -> Result<Layout> {
    forests.verify(g)?;
    let ys = staircase(g, &forests.f1)?;
    let xs = staircase(g, &forests.f2)?;
    let mut layout = Layout::new();
    for v in 0..g.order() {
        layout.place(g.label(v), xs[v], ys[v]);
    }
    let split = layout.split_xy()?;
    if split.gx != g.spanning_subgraph(forests.f1.iter().copied())
        || split.gy != g.spanning_subgraph(forests.f2.iter().copied())
    {
        return Err(Error::Invariant("product layout does not reproduce the forests".into()));
    }
    Ok(layout)
}

/// The cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::with_order(n);
    for a in 0..n {
        for b in a + 1..n {
            g.add_edge(a, b);
        }
    }
    g
}

/// Strong layout of the cycle on `n >= 3` vertices labeled `0..n`.
pub fn layout_cycle(n: usize) -> Result<Layout> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    let g = cycle_graph(n);
    let forests = LinearForests { f1: (0..n - 1).map(|i| (i, i + 1)).collect(), f2: vec![(0, n - 1)] };
    layout_linear_arb2(&g, &forests)
}

/// Strong layout of `K_n` for `n <= 4`; `None` for `n >= 5`, which contain K5.
pub fn layout_complete(n: usize) -> Result<Option<Layout>> {
    if n >= 5 {
        return Ok(None);
    }
    // two Hamiltonian paths of K4: 0-1-2-3 horizontal, 1-3-0-2 vertical
    let k4 = complete_graph(4);
    let forests = LinearForests { f1: vec![(0, 1), (1, 2), (2, 3)], f2: vec![(1, 3), (0, 3), (0, 2)] };
    let mut layout = layout_linear_arb2(&k4, &forests)?;
    // deleting squares keeps the remaining ones pairwise visible here since
    // no square of K4 blocks another pair
    layout.retain(|s| s.id.parse::<usize>().map(|v| v < n).unwrap_or(false));
    if layout.extract_graph()? != complete_graph(n) {
        return Err(Error::Invariant(format!("sub-layout of K4 is not K{n}")));
    }
    Ok(Some(layout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::linear_forest_bipartition;

    #[test]
    fn k4_layout_has_the_expected_coordinates() {
        let l = layout_complete(4).unwrap().unwrap();
        let got: Vec<(Rational, Rational)> = l.squares().iter().map(|s| (s.x, s.y)).collect();
        assert_eq!(
            got,
            vec![(q(4, 3), Rational::ZERO), (Rational::ZERO, q(2, 3)), (Rational::int(2), q(4, 3)), (q(2, 3), Rational::int(2))]
        );
    }

    #[test]
    fn small_complete_graphs() {
        for n in 1..=4 {
            let l = layout_complete(n).unwrap().unwrap();
            assert_eq!(l.extract_graph().unwrap(), complete_graph(n));
        }
        assert!(layout_complete(5).unwrap().is_none());
    }

    #[test]
    fn cycles_three_to_twelve() {
        for n in 3..=12 {
            assert_eq!(layout_cycle(n).unwrap().extract_graph().unwrap(), cycle_graph(n));
        }
    }

    #[test]
    fn isolated_vertices_and_several_components() {
        // two triangles, an edge and an isolated vertex
        let g = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7)]);
        let lf = linear_forest_bipartition(&g).unwrap();
        let l = layout_linear_arb2(&g, &lf).unwrap();
        assert_eq!(l.extract_graph().unwrap(), g);
    }
}
