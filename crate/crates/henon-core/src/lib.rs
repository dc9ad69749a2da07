//! Ground states of the mixed local-nonlocal Hénon problem on the unit ball.
//!
//! The operator is the convex combination `(1-β)(-Δ_p) + β(-Δ_p)^s` acting on
//! radial functions that vanish outside the unit ball; the right-hand side is
//! the Hénon nonlinearity `|x|^α u^{q-1}`. Everything here reduces to one
//! radial dimension: the fractional seminorm becomes a double integral against
//! a reduced angular kernel plus an exterior tail, and ground states are
//! minimizers of the Rayleigh quotient `R = Z/N` over a graded radial mesh.
//!
//! The crate is `no_std` + `alloc`; all IO, file formats and the batch CLI
//! live in the companion `henon-lab` crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod energy;
pub mod experiments;
pub mod kernel;
pub mod math;
pub mod mesh;
pub mod problem;
pub mod quad;
pub mod selftest;
pub mod solver;
pub mod special;
pub mod symmetry;

pub use energy::{EnergyReport, EnergyError};
pub use kernel::{KernelError, KernelTable};
pub use mesh::{DiscreteField, MeshError, RadialMesh};
pub use problem::{Normalization, ProblemSpec, ProblemError, Regime, RegimeReport};
pub use solver::{GroundState, OperatorMode, SolveOptions, SolverError};
