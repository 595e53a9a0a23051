//! Restricted frame graphs: deciding which ≥2-subdivisions of a multigraph
//! are restricted frame graphs, building and validating frame
//! representations, and certifying membership in the Burling construction.

pub mod burling;
pub mod decision;
pub mod error;
pub mod frames;
pub mod generators;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Multigraph, SimpleGraph};

pub type Frame = frames::Frame<i64>;
pub type FrameRepresentation = frames::FrameRepresentation<i64>;
