//! Harish-Chandra images of central elements and the supersymmetric
//! polynomials they should equal.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::algebra::{Element, SuperDims};
use crate::casimir::berezinian_direct;
use crate::error::{Error, Result};
use crate::poly::{VarKind, VarSet, WeightPolynomial};
use crate::ring::Ring;
use crate::scalar::{self, Scalar};
use crate::series::TruncSeries;

/// Eigenvalue of `z` on the highest vector of `L(λ|μ)`.
///
/// In the canonical order every monomial ends with its raising generators
/// and starts with its lowering ones, so only purely diagonal monomials can
/// contribute; `E_ii` becomes `λ_i` and `E_{m+j,m+j}` becomes `μ_j`. The
/// result is the eigenvalue only when `z` is central.
pub fn hc_project(z: &Element) -> WeightPolynomial {
    let dims = z.dims();
    let vars = VarSet::weight(dims.m(), dims.n());
    let mut out = WeightPolynomial::zero(vars);
    for (mono, c) in z.terms() {
        let factors = z.factors(mono);
        if factors.iter().any(|(g, _)| !g.is_diagonal()) {
            continue;
        }
        let mut exps = vec![0; vars.len()];
        for (g, e) in factors {
            exps[g.i - 1] += e;
        }
        out.add_term(exps, c.clone());
    }
    out
}

/// Rewrites a polynomial in `λ, μ` in the shifted variables
/// `x_i = λ_i - i + 1`, `y_j = μ_j + m - j`.
pub fn shift_to_xy(p: &WeightPolynomial) -> Result<WeightPolynomial> {
    let vars = p.vars();
    if vars.kind != VarKind::Weight {
        return Err(Error::Parse("shift_to_xy expects a polynomial in lambda, mu".into()));
    }
    let target = VarSet::shifted(vars.m, vars.n);
    let images: Vec<WeightPolynomial> = (0..vars.len())
        .map(|v| {
            // λ_i = x_i + i - 1, μ_j = y_j - m + j
            let offset = if v < vars.m {
                v as i64
            } else {
                (v - vars.m + 1) as i64 - vars.m as i64
            };
            WeightPolynomial::variable(target, v).plus(&WeightPolynomial::constant(target, scalar::int(offset)))
        })
        .collect();
    Ok(p.substitute(&images))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SusyKind {
    Elementary,
    Complete,
    PowerSum,
}

impl FromStr for SusyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(SusyKind::Elementary),
            "h" => Ok(SusyKind::Complete),
            "p" => Ok(SusyKind::PowerSum),
            _ => Err(Error::Parse(format!("unknown supersymmetric family {s:?}"))),
        }
    }
}

impl fmt::Display for SusyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SusyKind::Elementary => "e",
            SusyKind::Complete => "h",
            SusyKind::PowerSum => "p",
        })
    }
}

fn monomial(vars: VarSet, xs: &[usize], ys: &[usize]) -> Vec<u32> {
    let mut exps = vec![0; vars.len()];
    for &i in xs {
        exps[i] += 1;
    }
    for &j in ys {
        exps[vars.m + j] += 1;
    }
    exps
}

/// `e_k`, `h_k` or `p_k` in `x, y`, straight from the defining sums.
pub fn susy_oracle(dims: SuperDims, kind: SusyKind, k: usize) -> Result<WeightPolynomial> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let (m, n) = (dims.m(), dims.n());
    let vars = VarSet::shifted(m, n);
    let mut out = WeightPolynomial::zero(vars);
    match kind {
        SusyKind::PowerSum => {
            let sign = scalar::int(if k % 2 == 1 { 1 } else { -1 });
            for i in 0..m {
                out.add_term(monomial(vars, &vec![i; k], &[]), Scalar::one());
            }
            for j in 0..n {
                out.add_term(monomial(vars, &[], &vec![j; k]), sign.clone());
            }
        }
        SusyKind::Elementary | SusyKind::Complete => {
            // e: strictly increasing x indices, weakly increasing y indices; h: the reverse
            for p in 0..=k {
                let q = k - p;
                let (xs, ys): (Vec<Vec<usize>>, Vec<Vec<usize>>) = if kind == SusyKind::Elementary {
                    ((0..m).combinations(p).collect(), (0..n).combinations_with_replacement(q).collect())
                } else {
                    ((0..m).combinations_with_replacement(p).collect(), (0..n).combinations(q).collect())
                };
                for x in &xs {
                    for y in &ys {
                        out.add_term(monomial(vars, x, y), Scalar::one());
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Symmetric in `x` and in `y` separately, and free of `z` after
/// `x_m = z, y_n = -z`.
pub fn check_supersymmetric(p: &WeightPolynomial) -> bool {
    let vars = p.vars();
    let (m, n) = (vars.m, vars.n);
    let symmetric = (0..m.saturating_sub(1))
        .chain((m..m + n.saturating_sub(1)).filter(|_| n > 0))
        .all(|v| p.swap_vars(v, v + 1) == *p);
    if !symmetric || m == 0 || n == 0 {
        return symmetric;
    }
    let (xm, yn) = (m - 1, m + n - 1);
    let mut reduced: std::collections::BTreeMap<(Vec<u32>, u32), Scalar> = Default::default();
    for (exps, c) in p.terms() {
        let (a, b) = (exps[xm], exps[yn]);
        let mut rest = exps.clone();
        rest[xm] = 0;
        rest[yn] = 0;
        let sign = if b % 2 == 0 { c.clone() } else { -c.clone() };
        *reduced.entry((rest, a + b)).or_insert_with(Scalar::zero) += sign;
    }
    reduced.iter().all(|((_, zdeg), c)| *zdeg == 0 || c.is_zero())
}

/// `Π(1 + t x_i) / Π(1 - t y_j)` expanded to order `K`.
pub fn hc_image_berezinian(dims: SuperDims, order: usize) -> TruncSeries<WeightPolynomial> {
    let vars = VarSet::shifted(dims.m(), dims.n());
    let one = WeightPolynomial::constant(vars, Scalar::one());
    let mut acc = TruncSeries::one(&one, order);
    for i in 0..dims.m() {
        let factor = TruncSeries::linear(one.clone(), WeightPolynomial::variable(vars, i), order);
        acc = acc.mul(&factor).expect("same order");
    }
    for j in 0..dims.n() {
        let y = WeightPolynomial::variable(vars, dims.m() + j);
        let geometric = TruncSeries::new((0..=order).map(|k| y.pow(k as u32)).collect());
        acc = acc.mul(&geometric).expect("same order");
    }
    acc
}

/// `χ(B(t))` coefficientwise, in shifted variables.
pub fn hc_berezinian(alg: &std::sync::Arc<crate::Algebra>, order: usize) -> Result<TruncSeries<WeightPolynomial>> {
    let b = berezinian_direct(alg, order)?;
    let coeffs = b
        .coeffs()
        .iter()
        .map(|c| shift_to_xy(&hc_project(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::new(coeffs))
}

/// `e(t) = 1 + Σ e_k t^k`, `h(t) = 1 + Σ h_k t^k`, or `p(t) = Σ p_k t^{k-1}`.
pub fn susy_series(dims: SuperDims, kind: SusyKind, order: usize) -> Result<TruncSeries<WeightPolynomial>> {
    let vars = VarSet::shifted(dims.m(), dims.n());
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order {
        coeffs.push(match kind {
            SusyKind::PowerSum => susy_oracle(dims, kind, k + 1)?,
            _ if k == 0 => WeightPolynomial::constant(vars, Scalar::one()),
            _ => susy_oracle(dims, kind, k)?,
        });
    }
    Ok(TruncSeries::new(coeffs))
}
