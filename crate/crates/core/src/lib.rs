pub mod degree;
pub mod error;
pub mod theta;

pub use degree::Degree;
pub use error::{Error, Result};
pub use theta::{validate_theta, Color, Edge, Path, ThetaGraph, ThetaSpec};
pub mod doubling;
pub mod periodicity;
pub mod algebra;
pub mod groups;
pub mod cli;
