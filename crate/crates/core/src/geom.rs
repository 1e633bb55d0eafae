//! Unit-square layouts and their visibility graphs.
//!
//! A square is identified by its bottom-left corner and occupies the closed
//! region `[x, x+1] × [y, y+1]`. Two squares see each other along an axis when
//! some open band of positive width joins their facing sides without meeting
//! the interior of a third square. Everything here is exact.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{fields_with_columns, strip_comment, syntax, Graph};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    /// Bands parallel to the x-axis (squares side by side).
    Horizontal,
    /// Bands parallel to the y-axis (squares stacked).
    Vertical,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Horizontal => Axis::Vertical,
            Axis::Vertical => Axis::Horizontal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Square {
    pub id: String,
    pub x: Rational,
    pub y: Rational,
}

impl Square {
    pub fn new(id: impl Into<String>, x: Rational, y: Rational) -> Self {
        Square { id: id.into(), x, y }
    }

    /// Coordinate along `axis` (x for horizontal, y for vertical).
    pub fn along(&self, axis: Axis) -> Rational {
        match axis {
            Axis::Horizontal => self.x,
            Axis::Vertical => self.y,
        }
    }

    /// Coordinate across `axis`.
    pub fn across(&self, axis: Axis) -> Rational {
        self.along(axis.other())
    }

    pub fn interiors_overlap(&self, other: &Square) -> bool {
        (self.x - other.x).abs() < Rational::ONE && (self.y - other.y).abs() < Rational::ONE
    }
}

/// Smallest and largest corner coordinates over a non-empty layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Extents {
    pub x_min: Rational,
    pub x_max: Rational,
    pub y_min: Rational,
    pub y_max: Rational,
}

impl Extents {
    pub fn min(&self, axis: Axis) -> Rational {
        match axis {
            Axis::Horizontal => self.x_min,
            Axis::Vertical => self.y_min,
        }
    }

    pub fn max(&self, axis: Axis) -> Rational {
        match axis {
            Axis::Horizontal => self.x_max,
            Axis::Vertical => self.y_max,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Translate(Rational, Rational),
    /// Mirror in the y-axis; corners re-anchored (`x -> -x - 1`).
    ReflectX,
    /// Mirror in the x-axis (`y -> -y - 1`).
    ReflectY,
    /// Swap the coordinates of every square.
    Transpose,
}

/// Outcome of [`Layout::validate`]: every pair of squares whose interiors meet.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub overlaps: Vec<(String, String)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.overlaps.is_empty()
    }
}

/// Horizontal and vertical parts of an extracted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitGraphs {
    pub gx: Graph,
    pub gy: Graph,
}

#[derive(Clone, Debug, Default)]
pub struct Layout {
    squares: Vec<Square>,
    index: HashMap<String, usize>,
}

impl PartialEq for Layout {
    fn eq(&self, other: &Self) -> bool {
        self.squares == other.squares
    }
}

impl Eq for Layout {}

impl Layout {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_squares(squares: impl IntoIterator<Item = Square>) -> Result<Self> {
        let mut l = Layout::new();
        for s in squares {
            l.push(s)?;
        }
        Ok(l)
    }

    pub fn push(&mut self, square: Square) -> Result<usize> {
        if self.index.contains_key(&square.id) {
            return Err(Error::DuplicateVertex(square.id));
        }
        let i = self.squares.len();
        self.index.insert(square.id.clone(), i);
        self.squares.push(square);
        Ok(i)
    }

    /// Adds a square; panics on a duplicate id. For generators with
    /// known-distinct labels.
    pub fn place(&mut self, id: impl Into<String>, x: Rational, y: Rational) -> usize {
        self.push(Square::new(id, x, y)).expect("distinct square ids")
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn square(&self, i: usize) -> &Square {
        &self.squares[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn get(&self, id: &str) -> Option<&Square> {
        self.index_of(id).map(|i| &self.squares[i])
    }

    pub fn set_position(&mut self, i: usize, x: Rational, y: Rational) {
        self.squares[i].x = x;
        self.squares[i].y = y;
    }

    /// Removes the square with `id`, keeping the order of the rest.
    pub fn remove(&mut self, id: &str) -> Option<Square> {
        let i = self.index_of(id)?;
        let s = self.squares.remove(i);
        self.reindex();
        Some(s)
    }

    /// Keeps only the squares whose id satisfies `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&Square) -> bool) {
        self.squares.retain(|s| keep(s));
        self.reindex();
    }

    fn reindex(&mut self) {
        self.index = self.squares.iter().enumerate().map(|(i, s)| (s.id.clone(), i)).collect();
    }

    pub fn extents(&self) -> Option<Extents> {
        let first = self.squares.first()?;
        let mut e = Extents { x_min: first.x, x_max: first.x, y_min: first.y, y_max: first.y };
        for s in &self.squares[1..] {
            e.x_min = e.x_min.min(s.x);
            e.x_max = e.x_max.max(s.x);
            e.y_min = e.y_min.min(s.y);
            e.y_max = e.y_max.max(s.y);
        }
        Some(e)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut overlaps = Vec::new();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.squares[i].interiors_overlap(&self.squares[j]) {
                    overlaps.push((self.squares[i].id.clone(), self.squares[j].id.clone()));
                }
            }
        }
        ValidationReport { overlaps }
    }

    fn ensure_valid(&self) -> Result<()> {
        match self.validate().overlaps.into_iter().next() {
            None => Ok(()),
            Some((a, b)) => Err(Error::Overlap(a, b)),
        }
    }

    /// Whether squares `a` and `b` see each other along `axis`.
    pub fn visible(&self, a: &str, b: &str, axis: Axis) -> Result<bool> {
        let i = self.index_of(a).ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
        let j = self.index_of(b).ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
        if i == j {
            return Err(Error::InvalidArgument(format!("`{a}` cannot see itself")));
        }
        Ok(self.visible_idx(i, j, axis))
    }

    /// Index form of [`Layout::visible`]; assumes a valid layout.
    pub fn visible_idx(&self, i: usize, j: usize, axis: Axis) -> bool {
        visible_among(&self.squares, i, j, axis)
    }

    /// Every square that `i` sees, with the axis of the visibility.
    pub fn visibilities_of(&self, i: usize) -> Vec<(usize, Axis)> {
        let mut out = Vec::new();
        for j in 0..self.len() {
            if j == i {
                continue;
            }
            for axis in [Axis::Horizontal, Axis::Vertical] {
                if self.visible_idx(i, j, axis) {
                    out.push((j, axis));
                }
            }
        }
        out
    }

    fn extract_axes(&self, axes: &[Axis]) -> Graph {
        let mut g = Graph::new();
        for s in &self.squares {
            g.add_vertex(&s.id);
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if axes.iter().any(|&ax| self.visible_idx(i, j, ax)) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// The visibility graph, vertices in layout order.
    pub fn extract_graph(&self) -> Result<Graph> {
        self.ensure_valid()?;
        Ok(self.extract_axes(&[Axis::Horizontal, Axis::Vertical]))
    }

    pub fn split_xy(&self) -> Result<SplitGraphs> {
        self.ensure_valid()?;
        Ok(SplitGraphs {
            gx: self.extract_axes(&[Axis::Horizontal]),
            gy: self.extract_axes(&[Axis::Vertical]),
        })
    }

    /// Shifts every square with `y >= t` up by one, opening an empty
    /// horizontal corridor `t < y < t + 1`. The line `y = t` must not cross
    /// any interior.
    pub fn insert_horizontal_band(&self, t: Rational) -> Result<Layout> {
        self.insert_band(Axis::Vertical, t)
    }

    /// Shifts every square with `x >= t` right by one.
    pub fn insert_vertical_band(&self, t: Rational) -> Result<Layout> {
        self.insert_band(Axis::Horizontal, t)
    }

    /// Translates squares whose coordinate along `shift` is `>= t` by one
    /// unit along that axis.
    pub(crate) fn insert_band(&self, shift: Axis, t: Rational) -> Result<Layout> {
        let mut out = self.clone();
        out.insert_band_in_place(shift, t)?;
        Ok(out)
    }

    pub(crate) fn insert_band_in_place(&mut self, shift: Axis, t: Rational) -> Result<()> {
        if let Some(s) = self.piercing(shift, t) {
            return Err(Error::BandPierced {
                axis: match shift {
                    Axis::Horizontal => "x",
                    Axis::Vertical => "y",
                },
                at: t,
                id: s.id.clone(),
            });
        }
        for s in &mut self.squares {
            match shift {
                Axis::Horizontal if s.x >= t => s.x += Rational::ONE,
                Axis::Vertical if s.y >= t => s.y += Rational::ONE,
                _ => {}
            }
        }
        Ok(())
    }

    /// A square whose interior meets the line at coordinate `t` along `axis`.
    pub fn piercing(&self, axis: Axis, t: Rational) -> Option<&Square> {
        self.squares.iter().find(|s| {
            let c = s.along(axis);
            c < t && t < c + Rational::ONE
        })
    }

    pub fn transform(&self, op: Transform) -> Layout {
        let one = Rational::ONE;
        let mut out = self.clone();
        for s in &mut out.squares {
            let (x, y) = (s.x, s.y);
            (s.x, s.y) = match op {
                Transform::Translate(dx, dy) => (x + dx, y + dy),
                Transform::ReflectX => (-x - one, y),
                Transform::ReflectY => (x, -y - one),
                Transform::Transpose => (y, x),
            };
        }
        out
    }

    /// One `id x y` line per square, in layout order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.squares {
            let _ = writeln!(out, "{} {} {}", s.id, s.x, s.y);
        }
        out
    }

    /// Parses `id x y` lines. Does not check interiors; see
    /// [`Layout::validate`].
    pub fn from_text(text: &str) -> Result<Layout> {
        let mut l = Layout::new();
        for (lineno, raw) in text.lines().enumerate() {
            let fields = fields_with_columns(strip_comment(raw));
            match fields.as_slice() {
                [] => {}
                [(_, id), (cx, x), (cy, y)] => {
                    let x = x.parse::<Rational>().map_err(|e| syntax(lineno, *cx, e.to_string()))?;
                    let y = y.parse::<Rational>().map_err(|e| syntax(lineno, *cy, e.to_string()))?;
                    if l.index.contains_key(*id) {
                        return Err(syntax(lineno, 1, format!("duplicate square `{id}`")));
                    }
                    l.place(*id, x, y);
                }
                [.., (col, _)] => {
                    return Err(syntax(lineno, *col, "expected `id x y`".into()));
                }
            }
        }
        Ok(l)
    }
}

/// Band visibility between `squares[i]` and `squares[j]` along `axis`.
///
/// The open cross-section interval shared by the two squares must survive
/// after removing the closed cross-sections of every square whose interior
/// meets the strip between them.
pub(crate) fn visible_among(squares: &[Square], i: usize, j: usize, axis: Axis) -> bool {
    let one = Rational::ONE;
    let (a, b) = if squares[i].along(axis) <= squares[j].along(axis) { (i, j) } else { (j, i) };
    let (pa, pb) = (squares[a].along(axis), squares[b].along(axis));
    if pb < pa + one {
        return false;
    }
    let (sa, sb) = (squares[a].across(axis), squares[b].across(axis));
    let lo = sa.max(sb);
    let hi = sa.min(sb) + one;
    if lo >= hi {
        return false;
    }
    let mut blockers: Vec<(Rational, Rational)> = Vec::new();
    for (k, c) in squares.iter().enumerate() {
        if k == a || k == b {
            continue;
        }
        let pc = c.along(axis);
        if pc > pa && pc < pb {
            let sc = c.across(axis);
            if sc < hi && sc + one > lo {
                blockers.push((sc, sc + one));
            }
        }
    }
    blockers.sort_unstable();
    let mut covered = lo;
    for (start, end) in blockers {
        if start > covered {
            return true;
        }
        covered = covered.max(end);
        if covered >= hi {
            return false;
        }
    }
    covered < hi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn layout(pts: &[(i128, i128, i128, i128)]) -> Layout {
        // (xn, xd, yn, yd), ids a, b, c, ...
        Layout::from_squares(pts.iter().enumerate().map(|(k, &(xn, xd, yn, yd))| {
            Square::new(((b'a' + k as u8) as char).to_string(), q(xn, xd), q(yn, yd))
        }))
        .unwrap()
    }

    fn ints(pts: &[(i128, i128)]) -> Layout {
        layout(&pts.iter().map(|&(x, y)| (x, 1, y, 1)).collect::<Vec<_>>())
    }

    #[test]
    fn validation_examples() {
        assert!(ints(&[(0, 0)]).validate().is_ok());
        assert!(ints(&[(0, 0), (1, 0)]).validate().is_ok());
        let bad = layout(&[(0, 1, 0, 1), (1, 2, 1, 2)]).validate();
        assert_eq!(bad.overlaps, vec![("a".to_string(), "b".to_string())]);
    }

    #[test]
    fn visibility_examples() {
        let l = ints(&[(0, 0), (2, 0)]);
        assert!(l.visible("a", "b", Axis::Horizontal).unwrap());
        assert!(!l.visible("a", "b", Axis::Vertical).unwrap());

        let l = ints(&[(0, 0), (4, 0), (2, 0)]);
        assert!(!l.visible("a", "b", Axis::Horizontal).unwrap());

        let l = layout(&[(0, 1, 0, 1), (4, 1, 0, 1), (2, 1, 1, 2)]);
        assert!(l.visible("a", "b", Axis::Horizontal).unwrap());

        let l = ints(&[(0, 0), (1, 1)]);
        assert!(!l.visible("a", "b", Axis::Horizontal).unwrap());
        assert!(!l.visible("a", "b", Axis::Vertical).unwrap());

        assert!(matches!(l.visible("a", "zz", Axis::Vertical), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn stacked_blockers_meeting_at_a_point_block() {
        // blockers cover [-1/2, 1/2] and [1/2, 3/2]: no gap of positive width
        let l = layout(&[(0, 1, 0, 1), (4, 1, 0, 1), (2, 1, -1, 2), (2, 1, 1, 2)]);
        assert!(!l.visible("a", "b", Axis::Horizontal).unwrap());
        // tangent blocker does not block
        let l = ints(&[(0, 0), (4, 0), (2, 1)]);
        assert!(l.visible("a", "b", Axis::Horizontal).unwrap());
    }

    #[test]
    fn extraction_examples() {
        let g = ints(&[(0, 0), (2, 0), (4, 0)]).extract_graph().unwrap();
        assert_eq!(g.size(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
        let g = ints(&[(7, 7)]).extract_graph().unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert!(layout(&[(0, 1, 0, 1), (1, 2, 1, 2)]).extract_graph().is_err());
    }

    #[test]
    fn split_and_transpose() {
        let l = ints(&[(0, 0), (2, 0)]);
        let s = l.split_xy().unwrap();
        assert_eq!((s.gx.size(), s.gy.size()), (1, 0));
        let t = l.transform(Transform::Transpose).split_xy().unwrap();
        assert_eq!((t.gx.size(), t.gy.size()), (0, 1));
        assert_eq!(ints(&[(0, 0), (0, 2)]).transform(Transform::Transpose), ints(&[(0, 0), (2, 0)]));
    }

    #[test]
    fn reflection_reanchors() {
        let r = ints(&[(0, 0), (2, 0)]).transform(Transform::ReflectX);
        assert_eq!(r, ints(&[(-1, 0), (-3, 0)]));
        assert_eq!(r.extract_graph().unwrap(), ints(&[(0, 0), (2, 0)]).extract_graph().unwrap());
    }

    #[test]
    fn band_insertion_examples() {
        let l = ints(&[(0, 0), (0, 2)]);
        let out = l.insert_horizontal_band(q(3, 2)).unwrap();
        assert_eq!(out, ints(&[(0, 0), (0, 3)]));
        assert_eq!(out.extract_graph().unwrap(), l.extract_graph().unwrap());

        let l = ints(&[(0, 0), (2, 0)]);
        assert_eq!(l.insert_horizontal_band(Rational::ONE).unwrap(), l);

        let err = ints(&[(0, 0)]).insert_horizontal_band(q(1, 2)).unwrap_err();
        assert!(matches!(err, Error::BandPierced { .. }));
        assert!(ints(&[(0, 0)]).insert_vertical_band(q(1, 3)).is_err());
    }

    #[test]
    fn text_round_trip() {
        let text = "# k2\na 0 0\n\nb 4/2 -1/3   # comment\n";
        let l = Layout::from_text(text).unwrap();
        assert_eq!(l.to_text(), "a 0 0\nb 2 -1/3\n");
        assert_eq!(Layout::from_text(&l.to_text()).unwrap(), l);
        let err = Layout::from_text("a 0\n").unwrap_err().to_string();
        assert!(err.contains("line 1"), "{err}");
        let err = Layout::from_text("a 0 0\nb 1/0 0\n").unwrap_err().to_string();
        assert!(err.contains("line 2, column 3"), "{err}");
        assert!(Layout::from_text("a 0 0\na 3 3\n").is_err());
    }
}
