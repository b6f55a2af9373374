//! The quantum Berezinian and the four Casimir families built from it.

use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element, GenIdx};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ncsf::{ncsf_series, NcsfKind};
use crate::scalar::{self, Scalar};
use crate::series::{SeriesMatrix, TruncSeries};

/// `Ê` with `Ê_ij = (-1)^{j̄} E_ij`.
pub fn ehat(alg: &Arc<Algebra>) -> Matrix<Element> {
    let dims = alg.dims();
    Matrix::from_fn(dims.size(), |i, j| {
        let g = alg.generator(i, j).expect("index in range");
        if j > dims.m() {
            -&g
        } else {
            g
        }
    })
}

/// `sign * Ê^{(size)} + shift`, the leading `size x size` block of `Ê`
/// scaled by `±1` with `shift` added on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct LeadingSubmatrix {
    pub size: usize,
    pub negated: bool,
    pub shift: Scalar,
}

impl LeadingSubmatrix {
    pub fn new(size: usize, negated: bool, shift: Scalar) -> Self {
        LeadingSubmatrix { size, negated, shift }
    }

    /// Matrix attached to noncommutative symmetric function index `index`:
    /// `Ê^{(i)} - i + 1` for `i <= m`, `-Ê^{(m+j)} + m - j` above.
    pub fn for_index(m: usize, index: usize) -> Self {
        if index <= m {
            LeadingSubmatrix::new(index, false, scalar::int(1 - index as i64))
        } else {
            let j = (index - m) as i64;
            LeadingSubmatrix::new(index, true, scalar::int(m as i64 - j))
        }
    }

    pub fn build(&self, alg: &Arc<Algebra>) -> Result<Matrix<Element>> {
        let sign = if self.negated { -1 } else { 1 };
        Ok(ehat(alg).leading(self.size)?.affine(sign, &self.shift))
    }
}

/// Sign of a permutation of `0..len` given as images.
fn permutation_sign(p: &[usize]) -> Scalar {
    let inversions = (0..p.len())
        .flat_map(|a| (a + 1..p.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| p[a] > p[b])
        .count();
    scalar::int(if inversions % 2 == 0 { 1 } else { -1 })
}

fn product(alg: &Arc<Algebra>, order: usize, factors: &[TruncSeries<Element>]) -> Result<TruncSeries<Element>> {
    let mut acc = TruncSeries::one(&alg.one(), order);
    for f in factors {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}

/// `B(t)` from its defining double sum over `S_m x S_n`.
pub fn berezinian_direct(alg: &Arc<Algebra>, order: usize) -> Result<TruncSeries<Element>> {
    let dims = alg.dims();
    let (m, n) = (dims.m(), dims.n());
    let e = ehat(alg);
    let one = alg.one();

    // Σ_σ sgn σ (1 + tÊ)_{σ(1),1} (1 + t(Ê - 1))_{σ(2),2} ... (1 + t(Ê - m + 1))_{σ(m),m}
    let even_terms: Vec<(Scalar, Vec<TruncSeries<Element>>)> = (0..m)
        .permutations(m)
        .map(|sigma| {
            let factors = (1..=m)
                .map(|s| {
                    let row = sigma[s - 1] + 1;
                    let c0 = if row == s {
                        one.clone()
                    } else {
                        alg.zero()
                    };
                    let mut c1 = e.get(row, s).clone();
                    if row == s {
                        c1 = &c1 + &alg.scalar(scalar::int(1 - s as i64));
                    }
                    TruncSeries::linear(c0, c1, order)
                })
                .collect();
            (permutation_sign(&sigma), factors)
        })
        .collect();
    let first = crate::series::sum_of_products(&one, order, &even_terms)?;

    // Σ_τ sgn τ (1 + t(Ê - m + 1))^{-1}_{m+1,m+τ(1)} ... (1 + t(Ê - m + n))^{-1}_{m+n,m+τ(n)}
    let inverses = (1..=n)
        .map(|s| {
            let shifted = e.affine(1, &scalar::int(s as i64 - m as i64));
            SeriesMatrix::one_plus_t(&shifted, 1, order).invert()
        })
        .collect::<Result<Vec<_>>>()?;
    let odd_terms: Vec<(Scalar, Vec<TruncSeries<Element>>)> = (0..n)
        .permutations(n)
        .map(|tau| {
            let factors = (1..=n)
                .map(|s| inverses[s - 1].get(m + s, m + tau[s - 1] + 1).clone())
                .collect();
            (permutation_sign(&tau), factors)
        })
        .collect();
    let second = crate::series::sum_of_products(&one, order, &odd_terms)?;

    first.mul(&second)
}

/// The `m + n` factors of the quasideterminant decomposition of `B(t)`, in
/// order: `|1 + t(Ê^{(i)} - i + 1)|_ii` for `i <= m`, then
/// `|1 + t(Ê^{(m+j)} - m + j)|^{-1}_{m+j,m+j}`.
pub fn berezinian_factors(alg: &Arc<Algebra>, order: usize) -> Result<Vec<TruncSeries<Element>>> {
    let dims = alg.dims();
    let m = dims.m();
    (1..=dims.size())
        .map(|k| {
            if k <= m {
                let block = LeadingSubmatrix::new(k, false, scalar::int(1 - k as i64)).build(alg)?;
                SeriesMatrix::one_plus_t(&block, 1, order).quasideterminant(k, k)
            } else {
                let j = (k - m) as i64;
                let block = LeadingSubmatrix::new(k, false, scalar::int(j - m as i64)).build(alg)?;
                // the inverse of |X|_kk is (X^{-1})_kk
                Ok(SeriesMatrix::one_plus_t(&block, 1, order).invert()?.get(k, k).clone())
            }
        })
        .collect()
}

pub fn berezinian_factored(alg: &Arc<Algebra>, order: usize) -> Result<TruncSeries<Element>> {
    let factors = berezinian_factors(alg, order)?;
    product(alg, order, &factors)
}

/// Ordered product of `factors` with positions `a` and `a + 1` exchanged.
pub fn product_with_swap(
    alg: &Arc<Algebra>,
    order: usize,
    factors: &[TruncSeries<Element>],
    a: usize,
) -> Result<TruncSeries<Element>> {
    let mut swapped = factors.to_vec();
    swapped.swap(a, a + 1);
    product(alg, order, &swapped)
}

/// A Casimir element of one of the four families.
#[derive(Debug, Clone, PartialEq)]
pub struct CasimirFamily {
    pub kind: NcsfKind,
    pub degree: usize,
    pub value: Element,
}

/// Per-index generating series, `index` in `1..=m+n`, all normalized so the
/// `t^k` coefficient is the degree-`k` function.
pub fn index_series(alg: &Arc<Algebra>, index: usize, kind: NcsfKind, order: usize) -> Result<TruncSeries<Element>> {
    let a = LeadingSubmatrix::for_index(alg.dims().m(), index).build(alg)?;
    ncsf_series(&a, index, kind, order)
}

/// `Λ_k` (or `S_k`, `Ψ_k`, `Φ_k`) for `k = 1..=order`.
///
/// Λ and S are the `t^k` coefficients of the ordered products
/// `Λ^{(1)}(t)...Λ^{(m)}(t) S^{(m+1)}(t)...S^{(m+n)}(t)` and
/// `S^{(1)}(t)...S^{(m)}(t) Λ^{(m+1)}(t)...Λ^{(m+n)}(t)`, which expand to the
/// sums over compositions with zero parts allowed. Ψ and Φ add the bosonic
/// terms and `(-1)^{k-1}` times the fermionic ones.
pub fn casimir_families(alg: &Arc<Algebra>, kind: NcsfKind, order: usize) -> Result<Vec<CasimirFamily>> {
    let dims = alg.dims();
    let m = dims.m();
    let combined = match kind {
        NcsfKind::Elementary | NcsfKind::Complete => {
            let (bosonic, fermionic) = if kind == NcsfKind::Elementary {
                (NcsfKind::Elementary, NcsfKind::Complete)
            } else {
                (NcsfKind::Complete, NcsfKind::Elementary)
            };
            let factors = (1..=dims.size())
                .map(|i| index_series(alg, i, if i <= m { bosonic } else { fermionic }, order))
                .collect::<Result<Vec<_>>>()?;
            product(alg, order, &factors)?
        }
        NcsfKind::PsiFirstKind | NcsfKind::PhiSecondKind => {
            let mut acc = TruncSeries::zero(&alg.one(), order);
            for i in 1..=dims.size() {
                let s = index_series(alg, i, kind, order)?;
                let s = if i <= m { s } else { s.reflect().negated() };
                acc = acc.add(&s)?;
            }
            acc
        }
    };
    Ok(combined
        .into_coeffs()
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(degree, value)| CasimirFamily { kind, degree, value })
        .collect())
}

pub fn casimir(alg: &Arc<Algebra>, kind: NcsfKind, k: usize) -> Result<CasimirFamily> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(casimir_families(alg, kind, k)?.pop().expect("k >= 1"))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Centrality {
    Central,
    NotCentral { generator: GenIdx, remainder: Element },
}

impl Centrality {
    pub fn is_central(&self) -> bool {
        matches!(self, Centrality::Central)
    }
}

/// Checks `[z, E_ab] = 0` (graded) for every generator; on failure reports
/// the first offending `E_ab` in row-major order of `(a, b)`.
pub fn check_central(z: &Element) -> Centrality {
    let alg = z.algebra();
    let size = alg.dims().size();
    let generators: Vec<GenIdx> = (1..=size)
        .flat_map(|i| (1..=size).map(move |j| GenIdx { i, j }))
        .collect();
    let witnesses: Vec<Option<(GenIdx, Element)>> = generators
        .par_iter()
        .map(|&g| {
            let e = alg.generator(g.i, g.j).expect("generator index");
            let c = z.supercommutator(&e).expect("same algebra");
            (!c.is_zero()).then_some((g, c))
        })
        .collect();
    match witnesses.into_iter().flatten().next() {
        None => Centrality::Central,
        Some((generator, remainder)) => Centrality::NotCentral { generator, remainder },
    }
}
