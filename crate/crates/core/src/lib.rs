//! Real-argument special functions: gamma family, Gauss hypergeometric 2F1,
//! generalized elliptic integrals and classical means.

pub mod consts;
mod dd;
pub mod elliptic;
pub mod error;
pub mod hypergeo;
mod maclaurin;
pub mod means;
pub mod quad;
pub mod residual;
pub mod series;
pub mod special;

pub use error::{Result, SpecFunError};
pub use residual::Residual;
pub use series::{SeriesConfig, SeriesEval};
