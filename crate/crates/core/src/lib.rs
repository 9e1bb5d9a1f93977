//! Exact Seidel-matrix spectra and certificate checks for equiangular lines
//! with common angle `arccos(1/5)`.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod exactspec;
pub mod factor;
pub mod graphs;
pub mod matrix;
pub mod poly;
pub mod psd;
pub mod quotient;
pub mod rational;
pub mod report;
pub mod seidel;
pub mod suites;

pub use error::{Error, Result};
