//! Exact verification of adjoint-functor calculus in categories of
//! finite-dimensional modules over cocommutative Hopf algebras.

pub mod battery;
pub mod category;
pub mod config;
pub mod context;
pub mod error;
pub mod hopf;
pub mod linalg;
pub mod maps;
pub mod report;

pub use error::{Error, Result};
