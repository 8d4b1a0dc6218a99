//! Exact-arithmetic workbench for Z2-graded Malcev, pre-Malcev, alternative
//! and pre-alternative superalgebras, their representations, O-operators,
//! Rota–Baxter operators and the super Malcev Yang–Baxter equation.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod graded;
pub mod io;
pub mod linalg;
pub mod modules;
pub mod operators;
pub mod report;
pub mod scalar;
pub mod search;
pub mod yangbaxter;

pub use algebra::{Superalgebra, MUL, PREC, SUCC};
pub use error::{Error, Result};
pub use graded::{GradedLinearMap, GradedVector, Parity, SuperSpace, Tensor2, Tensor3};
pub use report::ViolationReport;
pub use scalar::{q, Scalar};
