pub mod audit;
pub mod decompose;
pub mod error;
pub mod extremal;
pub mod geom;
pub mod graph;
mod grid;
pub mod rational;
pub mod render;
pub mod synth;
pub mod trees;

pub use error::{Error, ParseError, Result};
pub use geom::{Axis, Layout, SplitGraphs, Square, Transform};
pub use graph::{Graph, Role};
pub use rational::{q, Rational};
