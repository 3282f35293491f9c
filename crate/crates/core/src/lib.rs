//! Colour-biased Hamilton cycles in randomly perturbed and dense graphs.

pub mod absorber;
pub mod adversary;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod matching;
pub mod models;
pub mod oracle;
pub mod paths;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{BiasReport, Colour, CycleSeq, EdgeColouring, Graph, Matching, PathSeq, Vertex};
