//! Exact arithmetic in the core of a θ-graph algebra: words `s_μ s_ν^*`
//! with rational coefficients, the endomorphisms `α_n`, the transfer
//! operators `L_n`, and the modules `M_n` they generate.

mod element;
mod module;
pub mod suite;

pub use element::{rational, Coeff, GradedElement};
pub use module::{check_covariance, rank_one, rational_sqrt, ModuleVector};
pub use suite::{run_identity_suite, CheckOutcome, SuiteConfig, SuiteReport};
