//! Exact and numeric distance spectra of joins of regular graphs and of
//! generalized wheels `GW(a, m, n) = aK_m ∇ C_n`.
//!
//! Closed forms live in [`spectra`], integrality predicates and the
//! number-theoretic enumerations in [`integrality`], and a Jacobi
//! eigensolver used as an independent cross-check in [`oracle`].

pub mod error;
pub mod graph;
pub mod integrality;
pub mod oracle;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, SquareMatrix, WheelParams};
pub use spectra::{ExactEigenvalue, MatrixKind, RegularPart, Sign, Spectrum};
