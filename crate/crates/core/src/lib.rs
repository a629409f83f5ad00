//! Exact symbolic-numeric engine for interpolating sesqui-harmonic vector
//! fields on Lie groups with left-invariant orthonormal frames.
//!
//! The layers, bottom up:
//! - [`rat`] / [`poly`] / [`parse`]: arbitrary-precision rationals and
//!   canonical multivariate polynomials with a literal syntax.
//! - [`frame`]: Lie algebra structure constants, the Levi-Civita connection
//!   and curvature tensor they determine, and frame derivations.
//! - [`field`]: covariant calculus of frame vector fields and the two
//!   Euler-Lagrange conditions (vertical: critical among vector fields;
//!   horizontal: the extra condition making the field a critical map).
//! - [`engine`]: checkers, energy density, the finite-difference first
//!   variation test, and the same-sign rigidity scan.
//! - [`cases`]: the two built-in case studies (Sol-space profile ODE,
//!   Heisenberg-group classification).
//!
//! Everything outside `engine::variation_test` is exact; floats never touch
//! the algebraic paths.

pub mod cases;
pub mod engine;
pub mod error;
pub mod field;
pub mod frame;
pub mod parse;
pub mod poly;
pub mod rat;

pub use error::{Error, Result};
pub use field::{FieldJacobian, TauPair, VectorFieldExpr};
pub use frame::{
    connection_from_structure, curvature_from_connection, Connection, CurvatureTensor, Frame,
    FrameAlgebra, Mode,
};
pub use parse::{identifiers, parse_poly};
pub use poly::{Derivation, Monomial, Poly, Symbols, DEFAULT_EXPONENT_CAP};
pub use rat::Rat;
