//! Type-A matrix model of the connection, its formal solution at `λ = 0`,
//! and numerical monodromy compared against the Stokes data.

pub mod dopri;
pub mod formal;
pub mod monodromy;
pub mod system;

pub use formal::{formal_solution, FormalSolution};
pub use monodromy::{numerical_monodromy, MonodromyReport};
pub use system::{build_system, standard_rep_sl, MeromorphicSystem};
