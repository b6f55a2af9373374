//! Noncommutative symmetric functions of a square matrix `A` and an index `i`.
//!
//! Generating series:
//!
//! ```text
//! 1 + Σ Λ_k t^k     = |1 + tA|_ii
//! 1 + Σ S_k t^k     = |1 - tA|_ii^{-1}
//! Σ Ψ_k t^{k-1}     = |1 - tA|_ii · d/dt |1 - tA|_ii^{-1}
//! Σ Φ_k t^{k-1}     = -d/dt log |1 - tA|_ii
//! ```
//!
//! The same functions are sums over closed paths at `i` in the complete
//! directed graph labelled by `A`, which [`ncsf_paths`] enumerates directly.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::series::{SeriesMatrix, TruncSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NcsfKind {
    /// Λ
    Elementary,
    /// S
    Complete,
    /// Ψ
    PsiFirstKind,
    /// Φ
    PhiSecondKind,
}

impl NcsfKind {
    pub const ALL: [NcsfKind; 4] = [
        NcsfKind::Elementary,
        NcsfKind::Complete,
        NcsfKind::PsiFirstKind,
        NcsfKind::PhiSecondKind,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NcsfKind::Elementary => "lambda",
            NcsfKind::Complete => "s",
            NcsfKind::PsiFirstKind => "psi",
            NcsfKind::PhiSecondKind => "phi",
        }
    }
}

impl fmt::Display for NcsfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NcsfKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lambda" | "elementary" => Ok(NcsfKind::Elementary),
            "s" | "complete" => Ok(NcsfKind::Complete),
            "psi" => Ok(NcsfKind::PsiFirstKind),
            "phi" => Ok(NcsfKind::PhiSecondKind),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// Generating series of the requested family, normalized so that the
/// coefficient of `t^k` is the degree-`k` function for every kind (the Ψ and
/// Φ series are multiplied by `t`; their constant term is zero).
pub fn ncsf_series<R: Ring>(a: &Matrix<R>, i: usize, kind: NcsfKind, order: usize) -> Result<TruncSeries<R>> {
    a.check_index(i)?;
    match kind {
        NcsfKind::Elementary => SeriesMatrix::one_plus_t(a, 1, order).quasideterminant(i, i),
        NcsfKind::Complete => {
            // |X|_ii^{-1} is the (i, i) entry of X^{-1}
            Ok(SeriesMatrix::one_plus_t(a, -1, order).invert()?.get(i, i).clone())
        }
        NcsfKind::PsiFirstKind => {
            let x = SeriesMatrix::one_plus_t(a, -1, order);
            let qd = x.quasideterminant(i, i)?;
            let qd_inv = x.invert()?.get(i, i).clone();
            Ok(qd.mul(&qd_inv.derivative())?.shift_up())
        }
        NcsfKind::PhiSecondKind => {
            let qd = SeriesMatrix::one_plus_t(a, -1, order).quasideterminant(i, i)?;
            Ok(qd.log()?.derivative().negated().shift_up())
        }
    }
}

/// Path weight for a closed path at `i` of length `k` given the positions
/// (1-based, endpoint included) at which the path visits `i`.
fn path_weight(kind: NcsfKind, k: usize, returns: &[usize]) -> Option<Scalar> {
    match kind {
        NcsfKind::Elementary => {
            (returns.len() == 1).then(|| scalar::int(if k % 2 == 1 { 1 } else { -1 }))
        }
        NcsfKind::Complete => Some(scalar::int(1)),
        NcsfKind::PsiFirstKind => Some(scalar::int(returns[0] as i64)),
        NcsfKind::PhiSecondKind => Some(scalar::ratio(k as i64, returns.len() as i64)),
    }
}

/// Degree-`k` function as a weighted sum over the `l^{k-1}` closed paths
/// `i -> r_1 -> ... -> r_{k-1} -> i`; each path contributes the ordered
/// product `A_{i r_1} A_{r_1 r_2} ... A_{r_{k-1} i}`.
///
/// Weights: Λ keeps only simple paths with sign `(-1)^{k-1}`, S weighs all
/// paths by 1, Ψ by the length of the first return to `i`, and Φ by `k`
/// divided by the number of returns (the endpoint counts, the start does not).
pub fn ncsf_paths<R: Ring>(a: &Matrix<R>, i: usize, kind: NcsfKind, k: usize) -> Result<R> {
    a.check_index(i)?;
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let l = a.size();
    let proto = a.get(i, i);
    let mut acc = proto.zero_like();
    let interiors = (0..k - 1).map(|_| 1..=l).multi_cartesian_product();
    // multi_cartesian_product yields nothing for zero factors
    let interiors: Box<dyn Iterator<Item = Vec<usize>>> = if k == 1 {
        Box::new(std::iter::once(Vec::new()))
    } else {
        Box::new(interiors)
    };
    for interior in interiors {
        let mut vertices = Vec::with_capacity(k + 1);
        vertices.push(i);
        vertices.extend(interior);
        vertices.push(i);
        let returns: Vec<usize> = (1..=k).filter(|&s| vertices[s] == i).collect();
        let Some(weight) = path_weight(kind, k, &returns) else {
            continue;
        };
        let mut monomial = proto.one_like();
        for (from, to) in vertices.iter().tuple_windows() {
            monomial = monomial.times(a.get(*from, *to));
            if monomial.is_zero() {
                break;
            }
        }
        acc.add_assign_ring(&monomial.scaled(&weight));
    }
    Ok(acc)
}
