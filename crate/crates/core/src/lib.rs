//! Exact double Roman domination (`γ_dR`) and double Roman bondage (`b_dR`)
//! numbers for graphs on at most 64 vertices.

pub mod audit;
pub mod bits;
pub mod bondage;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod reduction;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph};
pub use labeling::{is_valid_drdf, normalize_no_ones, Labeling};
