//! Exact q-combinatorics behind the change of basis between conformal block
//! functions and multiple-SLE pure partition functions, and the quantum-group
//! construction of conformal-block vectors.
//!
//! * [`qfield`]: exact arithmetic in Q[q, q^-1] and Q(q).
//! * [`dyck`]: Dyck paths, their canonical order, wedges and slopes.
//! * [`tilings`]: Dyck tiles, nested and cover-inclusive Dyck tilings.
//! * [`qmatrix`]: the weighted incidence matrix and its inverse, built three
//!   independent ways.
//! * [`uqsl2`]: U_q(sl2) acting on tensor powers of the two-dimensional
//!   irreducible, singlet projections, conformal-block vectors.
//! * [`blocks`]: floating-point two-point conformal blocks, their ODEs and
//!   asymptotics.
//!
//! Data-parallel loops go through [`Exec`]; see the `parallel` feature.

pub mod blocks;
pub mod dyck;
pub mod error;
pub mod exec;
pub mod field;
pub mod linalg;
pub mod qfield;
pub mod qmatrix;
pub mod tilings;
pub mod uqsl2;

pub use dyck::{DyckPath, LocalShape};
pub use error::{Error, Result};
pub use exec::Exec;
pub use field::Field;
pub use qfield::{LaurentPoly, QNumeric, RatQ};
