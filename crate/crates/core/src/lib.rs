//! Exact Schubert calculus on the incidence variety `Fl(1,n-1)`.
//!
//! * [`basis`]: the Schubert basis `O_{i,j}`, lengths and duality;
//! * [`poly`]: exact arithmetic over `ℤ[Q1,Q2]`;
//! * [`kring`]: closed-form products in `K(X)` and the Chow ring;
//! * [`qkring`]: Chevalley operators and the quantum multiplication table;
//! * [`verify`]: positivity, ring-axiom and consistency sweeps;
//! * [`conjecture`]: the conjectural closed formula and its comparison;
//! * [`correlators`]: closed-form two- and three-point correlators;
//! * [`flags`]: balanced admissible sequences and stabilization inequalities;
//! * [`render`]: deterministic text, JSON and CSV serialization.

pub mod basis;
pub mod conjecture;
pub mod correlators;
pub mod error;
pub mod flags;
pub mod kring;
pub mod poly;
pub mod qkring;
mod par;
pub mod render;
pub mod verify;

pub use basis::SchubertIndex;
pub use error::{Error, Result};
pub use poly::{Coeff, CurveDegree, KClass, NovikovPolynomial, QKClass};
pub use qkring::{build_table, Divisor, MultiplicationTable};
