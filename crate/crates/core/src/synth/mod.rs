//! Constructive layouts for the graph families the characterizations cover.

mod kmn;
mod linear;
mod tree;
mod weak_tree;

pub use kmn::{classify_kmn, complete_bipartite_graph, layout_kmn, KmnClass, KmnMode};
pub use linear::{complete_graph, cycle_graph, layout_complete, layout_cycle, layout_linear_arb2};
pub use tree::{layout_tree, layout_tree_rooted};
pub use weak_tree::layout_tree_weak;
