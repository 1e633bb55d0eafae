//! Consistency checks, refuters and exhaustive grid search.

mod sample;
mod search;

use std::fmt;

use serde::Serialize;

use crate::extremal::bounds;
use crate::geom::Layout;

pub use sample::{random_layout, refute_k5_random, RefutationReport, SamplerConfig};
pub use search::{grid_search, grid_search_unchecked, SearchMode, SearchOutcome, SearchReport, MAX_SEARCH_VERTICES};

/// Largest graph the K5 check searches exhaustively.
pub const K5_CHECK_MAX_VERTICES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub vertices: usize,
    pub edges: Option<usize>,
    pub checks: Vec<Check>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.edges {
            Some(e) => writeln!(f, "{} squares, {e} edges", self.vertices)?,
            None => writeln!(f, "{} squares", self.vertices)?,
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            writeln!(f, "{:<4}  {:<width$}  {}", c.status.as_str(), c.name, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, status: Status, detail: impl Into<String>) -> Check {
    Check { name, status, detail: detail.into() }
}

/// Runs every universal check on `layout`. Never fails itself; problems are
/// reported as `fail` entries with a witness.
pub fn audit_layout(layout: &Layout) -> AuditReport {
    let n = layout.len();
    let mut checks = Vec::new();
    let validation = layout.validate();
    if validation.is_ok() {
        checks.push(check("disjoint-interiors", Status::Pass, "no overlapping interiors"));
    } else {
        let pairs: Vec<String> = validation.overlaps.iter().map(|(a, b)| format!("{a}/{b}")).collect();
        checks.push(check("disjoint-interiors", Status::Fail, format!("overlapping pairs: {}", pairs.join(", "))));
        return AuditReport { vertices: n, edges: None, checks };
    }
    let g = layout.extract_graph().expect("validated");
    let e = g.size();
    if n == 0 {
        checks.push(check("edge-bound", Status::Info, "empty layout"));
    } else {
        let b = bounds(n as u64).expect("n >= 1");
        let ok = e as i64 <= b.urvg_bound;
        checks.push(check(
            "edge-bound",
            if ok { Status::Pass } else { Status::Fail },
            format!("{e} edges, bound 6n - 4 ceil(sqrt n) + 1 = {}", b.urvg_bound),
        ));
        let bip = g.bipartition().is_some();
        if bip && n >= 7 {
            let ok = e as i64 <= b.bipartite_bound;
            checks.push(check(
                "bipartite-edge-bound",
                if ok { Status::Pass } else { Status::Fail },
                format!("{e} edges, bound 4n - 2 ceil(sqrt n) + 5 = {}", b.bipartite_bound),
            ));
        } else {
            let why = if bip { "fewer than 7 vertices" } else { "not bipartite" };
            checks.push(check("bipartite-edge-bound", Status::Info, format!("not applicable: {why}")));
        }
    }
    if n <= K5_CHECK_MAX_VERTICES {
        match g.find_k5() {
            None => checks.push(check("k5-free", Status::Pass, "no K5 subgraph")),
            Some(k) => {
                let ids: Vec<&str> = k.iter().map(|&v| g.label(v)).collect();
                checks.push(check("k5-free", Status::Fail, format!("K5 on {}", ids.join(" "))));
            }
        }
    } else {
        checks.push(check("k5-free", Status::Info, format!("skipped: more than {K5_CHECK_MAX_VERTICES} vertices")));
    }
    let on_cycles = g.vertices_on_cycles();
    let offenders: Vec<String> = (0..g.order())
        .filter(|&v| g.degree(v) >= 7 && !on_cycles.contains(&v))
        .map(|v| format!("{} (degree {})", g.label(v), g.degree(v)))
        .collect();
    if offenders.is_empty() {
        checks.push(check("high-degree-on-cycle", Status::Pass, "every vertex of degree >= 7 lies on a cycle"));
    } else {
        checks.push(check("high-degree-on-cycle", Status::Fail, format!("not on a cycle: {}", offenders.join(", "))));
    }
    let split = layout.split_xy().expect("validated");
    let (ex, ey) = (split.gx.labeled_edges(), split.gy.labeled_edges());
    let both: Vec<String> = ex.intersection(&ey).map(|(a, b)| format!("{a}-{b}")).collect();
    let union: std::collections::BTreeSet<_> = ex.union(&ey).cloned().collect();
    if !both.is_empty() {
        checks.push(check("split-consistency", Status::Fail, format!("edges both horizontal and vertical: {}", both.join(", "))));
    } else if union != g.labeled_edges() {
        checks.push(check("split-consistency", Status::Fail, "horizontal and vertical parts do not cover the graph"));
    } else {
        checks.push(check(
            "split-consistency",
            Status::Pass,
            format!("{} horizontal + {} vertical = {e}", split.gx.size(), split.gy.size()),
        ));
    }
    AuditReport { vertices: n, edges: Some(e), checks }
}
