//! Exact symbolic workbench for finitely presented partial exponential
//! fields: Gröbner-based ideal queries, exponential polynomials,
//! differential modules, predimension reports, strong-extension and
//! Khovanskii-certificate checking.

pub mod error;
pub mod rational;
pub mod linalg;
pub mod poly;
pub mod presentation;
pub mod ideal;
pub mod field;
pub mod exp_poly;
pub mod differentials;
pub mod khovanskii;
pub mod schanuel;
pub mod doc;
pub mod cli;

pub use error::{Error, Result};
