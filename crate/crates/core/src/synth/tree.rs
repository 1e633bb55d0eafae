//! Strong layouts of trees from a two-forest caterpillar decomposition.
//!
//! Vertices are placed in breadth-first order. Each child goes just outside
//! the current bounding box on the axis of its forest, level with its parent
//! (leg edge) or offset by 2/3 (spine edge). Before a protruding child is
//! placed, a unit band is inserted along the parent's top or bottom edge so
//! the part of the child that sticks out faces empty space. Every placement
//! is checked: the new square must see its parent, on the right axis, and
//! nothing else.

use crate::decompose::{Decomposition, Forest};
use crate::error::{Error, Result};
use crate::geom::{Axis, Layout, Transform};
use crate::graph::{Graph, Role};
use crate::rational::{q, Rational};

fn axis_of(f: Forest) -> Axis {
    match f {
        Forest::F1 => Axis::Horizontal,
        Forest::F2 => Axis::Vertical,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Low,
    High,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Low => Side::High,
            Side::High => Side::Low,
        }
    }
}

/// Cross-axis offset of a child relative to its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Offset {
    Flush,
    Up,
    Down,
}

struct Builder<'a> {
    t: &'a Graph,
    layout: Layout,
    /// layout index per tree vertex
    slot: Vec<Option<usize>>,
}

impl Builder<'_> {
    fn pos(&self, v: usize) -> &crate::geom::Square {
        self.layout.square(self.slot[v].expect("placed"))
    }

    fn place_child(&mut self, parent: usize, child: usize, axis: Axis, side: Side, offset: Offset) -> Result<()> {
        let cross = axis.other();
        let third2 = q(2, 3);
        // open an empty corridor on the side the child protrudes to
        match offset {
            Offset::Flush => {}
            Offset::Up => {
                let t = self.pos(parent).along(cross) + Rational::ONE;
                self.layout.insert_band_in_place(cross, t).map_err(|e| self.fail(parent, child, e))?;
            }
            Offset::Down => {
                let t = self.pos(parent).along(cross);
                self.layout.insert_band_in_place(cross, t).map_err(|e| self.fail(parent, child, e))?;
            }
        }
        let p = self.pos(parent).clone();
        let ext = self.layout.extents().expect("parent placed");
        let along = match side {
            Side::Low => ext.min(axis) - Rational::int(2),
            Side::High => ext.max(axis) + Rational::int(2),
        };
        let across = match offset {
            Offset::Flush => p.along(cross),
            Offset::Up => p.along(cross) + third2,
            Offset::Down => p.along(cross) - third2,
        };
        let (x, y) = match axis {
            Axis::Horizontal => (along, across),
            Axis::Vertical => (across, along),
        };
        let idx = self.layout.place(self.t.label(child), x, y);
        self.slot[child] = Some(idx);
        let seen = self.layout.visibilities_of(idx);
        let parent_idx = self.slot[parent].unwrap();
        if seen != [(parent_idx, axis)] {
            let names: Vec<String> = seen.iter().map(|&(j, a)| format!("{}({a:?})", self.layout.square(j).id)).collect();
            return Err(Error::Invariant(format!(
                "square `{}` placed at ({x}, {y}) as child of `{}` sees [{}]",
                self.t.label(child),
                self.t.label(parent),
                names.join(", ")
            )));
        }
        Ok(())
    }

    fn fail(&self, parent: usize, child: usize, e: Error) -> Error {
        Error::Invariant(format!(
            "no room next to `{}` for child `{}`: {e}",
            self.t.label(parent),
            self.t.label(child)
        ))
    }
}

/// Strong layout of tree `t` realizing `d`: the extracted graph equals `t`,
/// its horizontal part equals `F1` and its vertical part `F2`. `root` is placed
/// at the origin.
pub fn layout_tree_rooted(t: &Graph, d: &Decomposition, root: usize) -> Result<Layout> {
    if !t.is_tree() {
        return Err(Error::NotATree(format!("{} vertices, {} edges", t.order(), t.size())));
    }
    d.verify(t)?;
    let (order, parent) = t.bfs(root);
    let mut b = Builder { t, layout: Layout::new(), slot: vec![None; t.order()] };
    b.slot[root] = Some(b.layout.place(t.label(root), Rational::ZERO, Rational::ZERO));
    let key = |a: usize, c: usize| (a.min(c), a.max(c));

    for &v in &order {
        let children: Vec<usize> = t.neighbors(v).filter(|&w| parent[w] == Some(v)).collect();
        for f in [Forest::F1, Forest::F2] {
            let axis = axis_of(f);
            let cross = axis.other();
            let legs: Vec<usize> =
                children.iter().copied().filter(|&c| d.forest[&key(v, c)] == f && d.role[&key(v, c)] == Role::Leg).collect();
            let spines: Vec<usize> =
                children.iter().copied().filter(|&c| d.forest[&key(v, c)] == f && d.role[&key(v, c)] == Role::Spine).collect();
            if legs.is_empty() && spines.is_empty() {
                continue;
            }
            let up = parent[v].filter(|&p| d.forest[&key(v, p)] == f);
            let mut plan: Vec<(usize, Side, Offset)> = Vec::new();
            let bad = |what: &str| Err(Error::Invariant(format!("vertex `{}`: {what}", t.label(v))));
            match up {
                None => {
                    if spines.is_empty() {
                        if legs.len() > 2 {
                            return bad("more than two leg children in one forest");
                        }
                        for (&c, side) in legs.iter().zip([Side::Low, Side::High]) {
                            plan.push((c, side, Offset::Flush));
                        }
                    } else {
                        if legs.len() > 1 || spines.len() > 2 {
                            return bad("spine vertex with too many children in one forest");
                        }
                        for &c in &legs {
                            plan.push((c, Side::Low, Offset::Flush));
                        }
                        for (&c, off) in spines.iter().zip([Offset::Up, Offset::Down]) {
                            plan.push((c, Side::High, off));
                        }
                    }
                }
                Some(p) => {
                    let (ps, vs) = (b.pos(p).clone(), b.pos(v).clone());
                    let parent_side = if ps.along(axis) < vs.along(axis) { Side::Low } else { Side::High };
                    match d.role[&key(v, p)] {
                        Role::Leg => {
                            if !legs.is_empty() && !spines.is_empty() || legs.len() > 1 || spines.len() > 2 {
                                return bad("children incompatible with a leg parent edge");
                            }
                            for &c in &legs {
                                plan.push((c, parent_side.flip(), Offset::Flush));
                            }
                            for (&c, off) in spines.iter().zip([Offset::Up, Offset::Down]) {
                                plan.push((c, parent_side.flip(), off));
                            }
                        }
                        Role::Spine => {
                            if legs.len() > 1 || spines.len() > 1 {
                                return bad("children incompatible with a spine parent edge");
                            }
                            for &c in &legs {
                                plan.push((c, parent_side.flip(), Offset::Flush));
                            }
                            let parent_above = ps.along(cross) > vs.along(cross);
                            for &c in &spines {
                                let off = if parent_above { Offset::Down } else { Offset::Up };
                                plan.push((c, parent_side, off));
                            }
                        }
                    }
                }
            }
            for (c, side, off) in plan {
                b.place_child(v, c, axis, side, off)?;
            }
        }
    }

    let mut layout = Layout::new();
    for v in 0..t.order() {
        layout.push(b.pos(v).clone())?;
    }
    let r = layout.square(root).clone();
    let layout = layout.transform(Transform::Translate(-r.x, -r.y));

    let split = layout.split_xy()?;
    if split.gx != d.forest_graph(t, Forest::F1) || split.gy != d.forest_graph(t, Forest::F2) {
        return Err(Error::Invariant("extracted horizontal/vertical parts differ from F1/F2".into()));
    }
    Ok(layout)
}

/// [`layout_tree_rooted`] with vertex 0 as the root.
pub fn layout_tree(t: &Graph, d: &Decomposition) -> Result<Layout> {
    if t.order() == 0 {
        return Ok(Layout::new());
    }
    layout_tree_rooted(t, d, 0)
}
