//! Exact computations in the universal enveloping algebra of the general
//! linear Lie superalgebra `gl(m|n)`.
//!
//! The crate builds the quantum Berezinian `B(t)`, its factorization into
//! quasideterminants, the four families of Casimir elements coming from
//! noncommutative symmetric functions, and their Harish-Chandra images.
//! All arithmetic is over exact rationals, so every identity is checked as
//! an equality of canonical forms.

pub mod algebra;
pub mod casimir;
pub mod cli;
pub mod error;
pub mod free;
pub mod hc;
pub mod matrix;
pub mod ncsf;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod series;
pub mod verify;

pub use algebra::{Algebra, Element, GenIdx, Monomial, Parity, SuperDims};
pub use casimir::{CasimirFamily, Centrality, LeadingSubmatrix};
pub use error::{Error, Result};
pub use free::FreeElement;
pub use hc::SusyKind;
pub use matrix::Matrix;
pub use ncsf::NcsfKind;
pub use poly::{VarSet, WeightPolynomial};
pub use ring::Ring;
pub use scalar::Scalar;
pub use series::{SeriesMatrix, TruncSeries};
