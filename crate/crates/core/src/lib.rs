pub mod api;
pub mod baselines;
pub mod constraints;
pub mod document;
pub mod error;
pub mod generate;
pub mod grid;
pub mod infinite;
pub mod paths;
pub mod region;
pub mod render;
pub mod solver;
pub mod thurston;
pub mod tiling;

pub use error::{Error, Result};

/// Cube heights, distances and path weights.
pub type Height = i64;
