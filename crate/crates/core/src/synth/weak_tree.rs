//! Weak layouts of arbitrary trees.
//!
//! Bars of a weak bar-visibility layout, realized directly as unit squares.
//! Level by level, a band as tall as a vertex's number of children is opened
//! below it and child `i` of `k` goes to `(x + 1 - i/k, y - i)`; each child
//! sees its parent through a sliver of width `1/k` that its elder siblings
//! leave uncovered. Extra visibilities between non-adjacent vertices may
//! appear.

use crate::error::{Error, Result};
use crate::geom::Layout;
use crate::graph::Graph;
use crate::rational::Rational;

pub fn layout_tree_weak(t: &Graph) -> Result<Layout> {
    if t.order() == 0 {
        return Ok(Layout::new());
    }
    if !t.is_tree() {
        return Err(Error::NotATree(format!("{} vertices, {} edges", t.order(), t.size())));
    }
    let (order, parent) = t.bfs(0);
    let mut depth = vec![0usize; t.order()];
    for &v in &order[1..] {
        depth[v] = depth[parent[v].unwrap()] + 1;
    }
    let mut slot = vec![None; t.order()];
    let mut layout = Layout::new();
    slot[0] = Some(layout.place(t.label(0), Rational::ZERO, Rational::ZERO));
    let max_depth = depth.iter().copied().max().unwrap_or(0);
    for level in 0..max_depth {
        for &p in order.iter().filter(|&&v| depth[v] == level) {
            let children: Vec<usize> = t.neighbors(p).filter(|&w| parent[w] == Some(p)).collect();
            if children.is_empty() {
                continue;
            }
            let k = children.len() as i128;
            let (xp, yp) = {
                let s = layout.square(slot[p].unwrap());
                (s.x, s.y)
            };
            // open the band (yp - k, yp): everything at or below y = yp - 1 moves down by k
            for i in 0..layout.len() {
                let s = layout.square(i);
                if s.y < yp {
                    let (x, y) = (s.x, s.y - Rational::int(k));
                    layout.set_position(i, x, y);
                }
            }
            for (i, &c) in children.iter().enumerate() {
                let i = i as i128 + 1;
                let x = xp + Rational::ONE - Rational::new(i, k);
                let y = yp - Rational::int(i);
                slot[c] = Some(layout.place(t.label(c), x, y));
            }
        }
    }
    let mut out = Layout::new();
    for i in slot {
        out.push(layout.square(i.expect("every vertex is placed")).clone())?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_of_seven_contains_all_edges() {
        let s7 = Graph::from_edges(8, &(1..=7).map(|i| (0, i)).collect::<Vec<_>>());
        let l = layout_tree_weak(&s7).unwrap();
        assert!(l.validate().is_ok());
        assert!(s7.is_labeled_subgraph_of(&l.extract_graph().unwrap()));
    }

    #[test]
    fn path_of_five() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let l = layout_tree_weak(&p5).unwrap();
        assert!(p5.is_labeled_subgraph_of(&l.extract_graph().unwrap()));
    }
}
