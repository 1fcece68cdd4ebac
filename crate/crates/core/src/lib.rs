pub mod error;
pub mod exactlin;
pub mod fvect;
pub mod monoid_alg;
pub mod bialgebroid;
pub mod hopf_algebroid;
pub mod constructions;
pub mod format;
pub mod cli;
pub mod report;

pub use error::{Error, Result};
pub use exactlin::{Field, Fp, Matrix, Rational, SparseVec, Subspace};
pub use report::Report;
