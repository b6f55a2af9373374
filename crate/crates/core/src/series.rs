//! Power series in `t` truncated at a fixed order, over a possibly
//! noncommutative coefficient ring, and square matrices of such series.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};

/// `c_0 + c_1 t + ... + c_K t^K` modulo `t^{K+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Panics if `coeffs` is empty; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncSeries { coeffs }
    }

    pub fn zero(proto: &R, order: usize) -> Self {
        TruncSeries { coeffs: vec![proto.zero_like(); order + 1] }
    }

    pub fn one(proto: &R, order: usize) -> Self {
        Self::constant(proto.one_like(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(&c, order);
        s.coeffs[0] = c;
        s
    }

    /// `c0 + c1 t`, truncated.
    pub fn linear(c0: R, c1: R, order: usize) -> Self {
        let mut s = Self::constant(c0, order);
        if order >= 1 {
            s.coeffs[1] = c1;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect() })
    }

    /// Cauchy product; `self` is the left factor of every coefficient product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut coeffs: Vec<R> = vec![self.coeffs[0].zero_like(); order + 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.coeffs[..=order - a].iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                coeffs[a + b].add_assign_ring(&x.times(y));
            }
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x.scaled(c)).collect() }
    }

    pub fn negated(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(Ring::negated).collect() }
    }

    /// `f(t) -> f(-t)`.
    pub fn reflect(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// `t * f(t)`, dropping the top coefficient.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(self.coeffs[0].zero_like());
        coeffs.extend(self.coeffs[..self.order()].iter().cloned());
        TruncSeries { coeffs }
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Formal derivative. The order is kept and the top coefficient is zero.
    pub fn derivative(&self) -> Self {
        let order = self.order();
        let mut coeffs: Vec<R> = (1..=order)
            .map(|k| self.coeffs[k].scaled(&scalar::int(k as i64)))
            .collect();
        coeffs.push(self.coeffs[0].zero_like());
        TruncSeries { coeffs }
    }

    /// Two-sided inverse for a constant term `s * 1` with `s != 0`.
    pub fn invert(&self) -> Result<Self> {
        let s = self.coeffs[0]
            .as_scalar()
            .filter(|s| !s.is_zero())
            .ok_or(Error::NonInvertibleConstant)?;
        let s_inv = s.recip();
        // self = s (1 - u)
        let one = Self::one(&self.coeffs[0], self.order());
        let u = one.sub(&self.scaled(&s_inv))?;
        let mut power = one.clone();
        let mut sum = one;
        for _ in 0..self.order() {
            power = power.mul(&u)?;
            sum = sum.add(&power)?;
        }
        Ok(sum.scaled(&s_inv))
    }

    /// `log(1 + s) = Σ (-1)^{j-1} s^j / j` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0].as_scalar().map_or(true, |c| !c.is_one()) {
            return Err(Error::ConstantNotOne);
        }
        let one = Self::one(&self.coeffs[0], self.order());
        let s = self.sub(&one)?;
        let mut power = one;
        let mut sum = Self::zero(&self.coeffs[0], self.order());
        for j in 1..=self.order() {
            power = power.mul(&s)?;
            let c = scalar::ratio(if j % 2 == 1 { 1 } else { -1 }, j as i64);
            sum = sum.add(&power.scaled(&c))?;
        }
        Ok(sum)
    }

    pub fn to_json_with(&self, encode: impl Fn(&R) -> Value) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(encode).collect::<Vec<_>>(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncSeries<R> {
    /// `c0 + c1*t + c2*t^2 + ...`, zero coefficients omitted, multi-term
    /// coefficients parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let body = if text.contains(" + ") || text.contains(" - ") {
                format!("({text})")
            } else {
                text
            };
            parts.push(match k {
                0 => body,
                1 => format!("{body}*t"),
                _ => format!("{body}*t^{k}"),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Square matrix of truncated series sharing one order.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix<R> {
    size: usize,
    order: usize,
    entries: Vec<TruncSeries<R>>,
}

impl<R: Ring> SeriesMatrix<R> {
    pub fn from_fn(size: usize, order: usize, mut f: impl FnMut(usize, usize) -> TruncSeries<R>) -> Result<Self> {
        let mut entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                let e = f(i, j);
                if e.order() != order {
                    return Err(Error::OrderMismatch(order, e.order()));
                }
                entries.push(e);
            }
        }
        Ok(SeriesMatrix { size, order, entries })
    }

    pub fn identity(proto: &R, size: usize, order: usize) -> Self {
        let entries = (0..size * size)
            .map(|p| {
                if p / size == p % size {
                    TruncSeries::one(proto, order)
                } else {
                    TruncSeries::zero(proto, order)
                }
            })
            .collect();
        SeriesMatrix { size, order, entries }
    }

    /// `I + sign * t * A`.
    pub fn one_plus_t(a: &Matrix<R>, sign: i64, order: usize) -> Self {
        let size = a.size();
        let s = scalar::int(sign);
        let mut entries = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                let x = a.get(i, j);
                let c0 = if i == j { x.one_like() } else { x.zero_like() };
                entries.push(TruncSeries::linear(c0, x.scaled(&s), order));
            }
        }
        SeriesMatrix { size, order, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &TruncSeries<R> {
        &self.entries[(i - 1) * self.size + j - 1]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size {
            return Err(Error::IndexOutOfRange { index: i, bound: self.size });
        }
        Ok(())
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    fn proto(&self) -> &R {
        self.entries[0].coeff(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(SeriesMatrix { size: self.size, order: self.order, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<_>>()?;
        Ok(SeriesMatrix { size: self.size, order: self.order, entries })
    }

    /// Matrix product; entries are computed in parallel.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let size = self.size;
        let entries = (0..size * size)
            .into_par_iter()
            .map(|p| {
                let (i, j) = (p / size + 1, p % size + 1);
                let mut acc = TruncSeries::zero(self.proto(), self.order);
                for k in 1..=size {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesMatrix { size, order: self.order, entries })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.proto(), self.size, self.order)
    }

    fn constant_is_identity(&self) -> bool {
        (1..=self.size).all(|i| {
            (1..=self.size).all(|j| {
                let c = self.get(i, j).coeff(0);
                if i == j {
                    c.as_scalar().is_some_and(|s| s.is_one())
                } else {
                    c.is_zero()
                }
            })
        })
    }

    /// Inverse of `I + tN` as the Neumann sum `Σ_{k<=K} (I - M)^k`.
    pub fn invert(&self) -> Result<Self> {
        if !self.constant_is_identity() {
            return Err(Error::ConstantNotIdentity);
        }
        let identity = Self::identity(self.proto(), self.size, self.order);
        let deviation = identity.sub(self)?;
        let mut power = identity.clone();
        let mut sum = identity;
        for _ in 0..self.order {
            power = power.mul(&deviation)?;
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    /// `|X|_ij = ((X^{-1})_ji)^{-1}`.
    pub fn quasideterminant(&self, i: usize, j: usize) -> Result<TruncSeries<R>> {
        self.check_index(i)?;
        self.check_index(j)?;
        let inverse = self.invert()?;
        inverse.get(j, i).invert().map_err(|e| match e {
            Error::NonInvertibleConstant => Error::UndefinedQuasideterminant { i, j },
            other => other,
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        SeriesMatrix {
            size: self.size,
            order,
            entries: self.entries.iter().map(|e| e.truncate(order)).collect(),
        }
    }
}

/// Sum of the series in `terms`, each term a product taken left to right.
pub fn sum_of_products<R: Ring>(proto: &R, order: usize, terms: &[(Scalar, Vec<TruncSeries<R>>)]) -> Result<TruncSeries<R>> {
    let mut acc = TruncSeries::zero(proto, order);
    for (c, factors) in terms {
        let mut prod = TruncSeries::one(proto, order);
        for f in factors {
            prod = prod.mul(f)?;
        }
        acc = acc.add(&prod.scaled(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Element};
    use crate::free::FreeElement;
    use crate::scalar::{int, ratio};
    use std::sync::Arc;

    fn gl(m: usize, n: usize) -> Arc<Algebra> {
        Algebra::with_dims(m, n).unwrap()
    }

    fn e(a: &Arc<Algebra>, i: usize, j: usize) -> Element {
        a.generator(i, j).unwrap()
    }

    fn q(c: i64) -> FreeElement {
        FreeElement::scalar(int(c))
    }

    fn scalar_series(cs: &[i64]) -> TruncSeries<FreeElement> {
        TruncSeries::new(cs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn ordered_product() {
        let a = gl(1, 1);
        let one = a.one();
        let x = TruncSeries::linear(one.clone(), e(&a, 1, 1), 2);
        let y = TruncSeries::linear(one.clone(), e(&a, 2, 2), 2);
        let p = x.mul(&y).unwrap();
        assert_eq!(p.coeff(1), &(&e(&a, 1, 1) + &e(&a, 2, 2)));
        assert_eq!(p.coeff(2), &(&e(&a, 1, 1) * &e(&a, 2, 2)));
        assert_eq!(x.mul(&TruncSeries::one(&one, 2)).unwrap(), x);
    }

    #[test]
    fn product_order_matters_for_odd_generators() {
        let a = gl(1, 1);
        let one = a.one();
        let x = TruncSeries::linear(one.clone(), e(&a, 1, 2), 2);
        let y = TruncSeries::linear(one.clone(), e(&a, 2, 1), 2);
        let (xy, yx) = (x.mul(&y).unwrap(), y.mul(&x).unwrap());
        assert_eq!(xy.coeff(1), yx.coeff(1));
        assert_ne!(xy.coeff(2), yx.coeff(2));
        // both generators are odd, so the super-bracket is the anticommutator
        assert_eq!(&xy.coeff(2).clone() + yx.coeff(2), &e(&a, 1, 1) + &e(&a, 2, 2));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let x = scalar_series(&[1, 2]);
        let y = scalar_series(&[1, 2, 3]);
        assert_eq!(x.add(&y), Err(Error::OrderMismatch(1, 2)));
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn geometric_inverse() {
        let a = gl(1, 1);
        let x = TruncSeries::linear(a.one(), -&e(&a, 1, 1), 2);
        let inv = x.invert().unwrap();
        let e11 = e(&a, 1, 1);
        assert_eq!(inv.coeffs(), &[a.one(), e11.clone(), &e11 * &e11]);
        assert_eq!(TruncSeries::one(&a.one(), 3).invert().unwrap(), TruncSeries::one(&a.one(), 3));
        assert_eq!(
            TruncSeries::linear(a.zero(), a.one(), 2).invert(),
            Err(Error::NonInvertibleConstant)
        );
        assert_eq!(TruncSeries::linear(e11.clone(), a.one(), 2).invert(), Err(Error::NonInvertibleConstant));
    }

    #[test]
    fn inverse_with_scalar_constant() {
        let x = scalar_series(&[2, 1, 0]);
        let inv = x.invert().unwrap();
        assert_eq!(inv.coeffs(), &[FreeElement::scalar(ratio(1, 2)), FreeElement::scalar(ratio(-1, 4)), FreeElement::scalar(ratio(1, 8))]);
    }

    #[test]
    fn derivative_examples() {
        let d = scalar_series(&[1, 2, 3]).derivative();
        assert_eq!(d, scalar_series(&[2, 6, 0]));
        assert!(scalar_series(&[5, 0, 0]).derivative().is_zero());
        let a = gl(1, 1);
        let x = TruncSeries::linear(a.zero(), e(&a, 2, 1), 3);
        assert_eq!(x.derivative().coeffs(), &[e(&a, 2, 1), a.zero(), a.zero(), a.zero()]);
    }

    #[test]
    fn log_examples() {
        let a = gl(1, 1);
        assert!(TruncSeries::one(&a.one(), 3).log().unwrap().is_zero());
        let e11 = e(&a, 1, 1);
        let l = TruncSeries::linear(a.one(), e11.clone(), 2).log().unwrap();
        assert_eq!(l.coeffs(), &[a.zero(), e11.clone(), (&e11 * &e11).scale(&ratio(-1, 2))]);
        // d/dt log(1 - ct) = -c - c^2 t - c^3 t^2
        let c = 3;
        let dl = scalar_series(&[1, -c, 0, 0]).log().unwrap().derivative();
        assert_eq!(dl, scalar_series(&[-c, -c * c, -c * c * c, 0]));
        assert_eq!(scalar_series(&[2, 1]).log(), Err(Error::ConstantNotOne));
    }

    #[test]
    fn identity_inverse() {
        let a = gl(2, 1);
        let id = SeriesMatrix::identity(&a.one(), 3, 3);
        assert_eq!(id.invert().unwrap(), id);
    }

    #[test]
    fn ehat_inverse_entry_gl11() {
        let a = gl(1, 1);
        // Ê_11 = E_11, Ê_12 = -E_12, Ê_21 = E_21, Ê_22 = -E_22
        let ehat = Matrix::from_rows(vec![
            vec![e(&a, 1, 1), -&e(&a, 1, 2)],
            vec![e(&a, 2, 1), -&e(&a, 2, 2)],
        ])
        .unwrap();
        let m = SeriesMatrix::one_plus_t(&ehat, 1, 2);
        let inv = m.invert().unwrap();
        let e22 = e(&a, 2, 2);
        let expected = &(&e22 * &e22) - &(&e(&a, 2, 1) * &e(&a, 1, 2));
        assert_eq!(inv.get(2, 2).coeffs(), &[a.one(), e22.clone(), expected]);
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn one_by_one_reduces_to_scalar_case() {
        let a = gl(1, 1);
        let u = &e(&a, 1, 2) + &e(&a, 2, 1);
        let m = SeriesMatrix::one_plus_t(&Matrix::from_rows(vec![vec![u.clone()]]).unwrap(), 1, 3);
        let direct = TruncSeries::linear(a.one(), u, 3).invert().unwrap();
        assert_eq!(m.invert().unwrap().get(1, 1), &direct);
        assert_eq!(&m.quasideterminant(1, 1).unwrap(), m.get(1, 1));
    }

    #[test]
    fn invert_requires_identity_constant() {
        let a = gl(1, 1);
        let mut id = SeriesMatrix::identity(&a.one(), 2, 2);
        id.entries[1] = TruncSeries::constant(a.one(), 2);
        assert_eq!(id.invert(), Err(Error::ConstantNotIdentity));
    }

    #[test]
    fn quasideterminant_off_diagonal_undefined_for_diagonal_matrix() {
        let a = gl(1, 1);
        let id = SeriesMatrix::identity(&a.one(), 2, 2);
        assert_eq!(id.quasideterminant(1, 2), Err(Error::UndefinedQuasideterminant { i: 1, j: 2 }));
        assert!(id.quasideterminant(3, 1).is_err());
    }

    #[test]
    fn quasideterminant_gl11_self_consistent() {
        let a = gl(1, 1);
        let ehat = Matrix::from_rows(vec![
            vec![e(&a, 1, 1), -&e(&a, 1, 2)],
            vec![e(&a, 2, 1), -&e(&a, 2, 2)],
        ])
        .unwrap();
        let m = SeriesMatrix::one_plus_t(&ehat, 1, 2);
        let qd = m.quasideterminant(1, 1).unwrap();
        let inv = m.invert().unwrap();
        assert!(qd.mul(inv.get(1, 1)).unwrap() == TruncSeries::one(&a.one(), 2));
        // |1+tÊ|_11 = 1 + tE_11 - t^2 Ê_12 Ê_21 = 1 + tE_11 + t^2 E_12 E_21
        assert_eq!(qd.coeff(1), &e(&a, 1, 1));
        assert_eq!(qd.coeff(2), &(&e(&a, 1, 2) * &e(&a, 2, 1)));
    }

    #[test]
    fn display_forms() {
        let a = gl(1, 1);
        let s = TruncSeries::linear(a.one(), &e(&a, 1, 1) + &e(&a, 2, 2), 2);
        assert_eq!(s.to_string(), "1 + (1 * E[1,1] + 1 * E[2,2])*t");
        assert_eq!(TruncSeries::one(&a.one(), 0).to_string(), "1");
        let j = s.to_json_with(Element::to_json);
        assert_eq!(j["order"], 2);
        assert_eq!(j["coeffs"].as_array().unwrap().len(), 3);
    }
}
