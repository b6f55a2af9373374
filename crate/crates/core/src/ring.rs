use std::fmt::Debug;

use num_traits::One;

use crate::scalar::Scalar;

/// Coefficient ring for truncated series and matrices.
///
/// Multiplication need not be commutative. Elements carry whatever context
/// they need (dimensions, variable sets), so constants are produced from an
/// existing element rather than from nothing.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;

    /// `Some(c)` when the element equals `c * 1`.
    fn as_scalar(&self) -> Option<Scalar>;

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn negated(&self) -> Self {
        self.scaled(&-Scalar::one())
    }

    fn scalar_like(&self, c: &Scalar) -> Self {
        self.one_like().scaled(c)
    }

    fn add_assign_ring(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }
}
