//! Exact coefficients of falling factorial powers of products.
//!
//! `(x_1 ... x_n)^(k)` expands as a combination of products
//! `x_1^(l_1) ... x_n^(l_n)` of falling factorial powers. The [`engine`]
//! computes the coefficients four independent ways; [`oracle`] counts them
//! by brute force; [`matrix`] checks the algebraic structure of the
//! two-variable coefficient matrix.

pub mod arith;
pub mod cli;
pub mod engine;
pub mod error;
pub mod golden;
pub mod matrix;
pub mod oracle;
pub mod output;
pub mod stirling;
pub mod verify;

pub use arith::{ExactInteger, ExactRational};
pub use engine::{CoeffTable2D, CoeffTableND, Method, MultiIndex};
pub use error::{Error, Result};
