//! Lie-theoretic Stokes data for the tt*-Toda connection of a complex simple
//! Lie algebra, and a numerical monodromy check of it.

pub mod chevalley;
pub mod coxeter;
pub mod error;
pub mod linalg;
pub mod oracle;
pub mod rep;
pub mod rootcore;
pub mod spectrum;
pub mod steinberg;
pub mod surd;

pub use error::{Error, Result};
pub use rootcore::{AlgebraType, Family, Root, RootSystem};
pub use surd::Surd;
