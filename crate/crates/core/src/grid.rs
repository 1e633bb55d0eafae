//! Integer-coordinate visibility for layouts whose corners share a common
//! denominator. Squares have side `s` grid units. Same band semantics as
//! the rational extractor, used where many layouts are evaluated.

use crate::geom::Layout;
use crate::rational::Rational;

pub(crate) type Cell = (i64, i64);

pub(crate) fn visible_cells(cells: &[Cell], s: i64, i: usize, j: usize, horizontal: bool) -> bool {
    let proj = |c: Cell| if horizontal { c } else { (c.1, c.0) };
    let (mut a, mut b) = (proj(cells[i]), proj(cells[j]));
    if a.0 > b.0 {
        std::mem::swap(&mut a, &mut b);
    }
    if b.0 < a.0 + s {
        return false;
    }
    let (lo, hi) = (a.1.max(b.1), a.1.min(b.1) + s);
    if lo >= hi {
        return false;
    }
    let mut blockers: Vec<i64> = cells
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, &c)| proj(c))
        .filter(|&(cx, cy)| a.0 < cx && cx < b.0 && cy < hi && cy + s > lo)
        .map(|(_, cy)| cy)
        .collect();
    blockers.sort_unstable();
    let mut cover = lo;
    for cy in blockers {
        if cy > cover {
            return true;
        }
        cover = cover.max(cy + s);
        if cover >= hi {
            return false;
        }
    }
    cover < hi
}

pub(crate) fn adjacent_cells(cells: &[Cell], s: i64, i: usize, j: usize) -> bool {
    visible_cells(cells, s, i, j, true) || visible_cells(cells, s, i, j, false)
}

pub(crate) fn overlaps_any(cells: &[Cell], s: i64, c: Cell) -> bool {
    cells.iter().any(|&o| (o.0 - c.0).abs() < s && (o.1 - c.1).abs() < s)
}

/// Converts grid cells to a layout with ids `0..n`.
pub(crate) fn cells_to_layout(cells: &[Cell], s: i64) -> Layout {
    let mut l = Layout::new();
    for (k, &(x, y)) in cells.iter().enumerate() {
        l.place(k.to_string(), Rational::new(x as i128, s as i128), Rational::new(y as i128, s as i128));
    }
    l
}
