//! Complete bipartite graphs: the classification table and layouts.
//!
//! The two maximal strong layouts (K_{2,6} and K_{3,4}) were found by grid
//! search and are stored as fixed coordinates; smaller cases delete squares
//! from them, keeping the first deletion (in lexicographic order) whose
//! extraction is exactly the requested graph. Stars are trees and go
//! through the caterpillar construction instead. The weak K_{2,n} layout puts
//! the leaves on a descending staircase between the two hubs so that each
//! leaf keeps a sliver of height `1/(n+1)` towards both.

use serde::Serialize;

use crate::decompose::tree_caterpillar_bipartition;
use crate::error::{Error, Result};
use crate::geom::Layout;
use crate::graph::Graph;
use crate::rational::{q, Rational};
use crate::synth::layout_tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KmnClass {
    #[serde(rename = "URVG")]
    Urvg,
    WeakOnly,
    NotWeak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KmnMode {
    Strong,
    Weak,
}

/// Where K_{m,n} sits in the classification, `m <= n`.
pub fn classify_kmn(m: usize, n: usize) -> Result<KmnClass> {
    if m == 0 || m > n {
        return Err(Error::InvalidArgument(format!("expected 1 <= m <= n, got m = {m}, n = {n}")));
    }
    Ok(if (m <= 2 && n <= 6) || (m == 3 && n <= 4) {
        KmnClass::Urvg
    } else if m <= 2 || (m <= 3 && n <= 4) {
        KmnClass::WeakOnly
    } else {
        KmnClass::NotWeak
    })
}

/// K_{m,n} on vertices `0..m` (one side) and `m..m+n` (other side).
pub fn complete_bipartite_graph(m: usize, n: usize) -> Graph {
    let mut g = Graph::with_order(m + n);
    for a in 0..m {
        for b in m..m + n {
            g.add_edge(a, b);
        }
    }
    g
}

// corners as (x, y) in halves; the first `m` squares form the small side
const K26_HALVES: [(i128, i128); 8] = [(0, 0), (2, -2), (-7, -1), (-1, -3), (1, -9), (1, 3), (3, 1), (5, -1)];
const K34_HALVES: [(i128, i128); 7] = [(0, 0), (2, -2), (4, -4), (-1, -3), (1, -5), (3, 1), (5, -1)];

fn from_halves(m: usize, pts: &[(i128, i128)], keep_a: &[usize], keep_b: &[usize]) -> Layout {
    let mut l = Layout::new();
    for (label, &k) in keep_a.iter().chain(keep_b).enumerate() {
        debug_assert!(k < pts.len() && (label < keep_a.len()) == (k < m));
        let (x, y) = pts[k];
        l.place(label.to_string(), q(x, 2), q(y, 2));
    }
    l
}

fn subsets(from: std::ops::Range<usize>, size: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = from.collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == size {
            out.push(pick.clone());
            return;
        }
        for i in start..items.len() {
            pick.push(items[i]);
            rec(items, size, i + 1, pick, out);
            pick.pop();
        }
    }
    rec(&items, size, 0, &mut pick, &mut out);
    out
}

fn strong_layout(m: usize, n: usize) -> Result<Layout> {
    let (pts, big_m): (&[(i128, i128)], usize) = if m <= 2 { (&K26_HALVES, 2) } else { (&K34_HALVES, 3) };
    let big_n = pts.len() - big_m;
    let target = complete_bipartite_graph(m, n);
    for keep_a in subsets(0..big_m, m) {
        for keep_b in subsets(big_m..big_m + big_n, n) {
            let l = from_halves(big_m, pts, &keep_a, &keep_b);
            if l.extract_graph()? == target {
                return Ok(l);
            }
        }
    }
    Err(Error::Invariant(format!("no deletion of the stored layout gives K_{{{m},{n}}}")))
}

/// Hubs `0` and `1` (when `m = 2`) with `n` leaves between them.
fn weak_two_hub_layout(m: usize, n: usize) -> Layout {
    let d = Rational::new(1, n as i128 + 1);
    let mut l = Layout::new();
    l.place("0", Rational::ZERO, Rational::ZERO);
    if m == 2 {
        l.place("1", Rational::int(n as i128 + 3), d * q(1, 2) - Rational::ONE);
    }
    for k in 1..=n {
        let kk = k as i128;
        l.place((m + k - 1).to_string(), Rational::int(1 + kk), d * Rational::int(kk) - Rational::ONE);
    }
    l
}

/// A layout of K_{m,n} (`m <= n`): exact in strong mode, containing it in weak
/// mode. `None` when the classification rules the mode out.
pub fn layout_kmn(m: usize, n: usize, mode: KmnMode) -> Result<Option<Layout>> {
    let class = classify_kmn(m, n)?;
    let target = complete_bipartite_graph(m, n);
    let layout = match (class, mode) {
        (KmnClass::Urvg, _) if m == 1 => {
            // stars are trees; use the caterpillar construction
            let d = tree_caterpillar_bipartition(&target)?
                .ok_or_else(|| Error::Invariant(format!("K_{{1,{n}}} has no caterpillar decomposition")))?;
            layout_tree(&target, &d)?
        }
        (KmnClass::Urvg, _) => strong_layout(m, n)?,
        (KmnClass::WeakOnly, KmnMode::Weak) => weak_two_hub_layout(m, n),
        _ => return Ok(None),
    };
    let g = layout.extract_graph()?;
    let ok = match (class, mode) {
        (KmnClass::Urvg, KmnMode::Strong) => g == target,
        _ => target.is_labeled_subgraph_of(&g),
    };
    if !ok {
        return Err(Error::Invariant(format!("layout of K_{{{m},{n}}} fails extraction")));
    }
    Ok(Some(layout))
}
