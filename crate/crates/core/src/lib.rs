//! Feasible characters of finite subgroups of the exceptional simple
//! algebraic groups F4, E6, E7 and E8.
//!
//! A finite group H inside G acts on the adjoint module L(G) and on the
//! minimal module V_min. Every semisimple element of H is conjugate into a
//! maximal torus of G, so its trace on either module is fixed by its class in
//! G. Solving for nonnegative combinations of Brauer characters of H that
//! match some compatible choice of classes gives the feasible characters.

pub mod brauer;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod feasible;
pub mod repchar;
pub mod rootsystem;
pub mod torsion;

pub use brauer::{parse_table, serialize_table, BrauerTable};
pub use cyclotomic::CyclotomicNumber;
pub use error::{Error, Result};
pub use feasible::{FeasibleCharacter, Flag, FusionPattern, GroupContext};
pub use repchar::{ModuleKind, WeightSystem};
pub use rootsystem::{build_root_system, LieType, RootSystem, Weight};
pub use torsion::TorsionClass;
