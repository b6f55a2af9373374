#![allow(dead_code)]

use std::sync::Arc;

use glmn_casimir::scalar::{int, ratio};
use glmn_casimir::{Algebra, Element, GenIdx, Scalar};
use rand::Rng;

pub const DIMS: [(usize, usize); 4] = [(1, 1), (2, 1), (1, 2), (2, 2)];

pub fn gl(m: usize, n: usize) -> Arc<Algebra> {
    Algebra::with_dims(m, n).unwrap()
}

pub fn e(a: &Arc<Algebra>, i: usize, j: usize) -> Element {
    a.generator(i, j).unwrap()
}

pub fn random_gen(rng: &mut impl Rng, a: &Algebra) -> GenIdx {
    let size = a.dims().size();
    GenIdx { i: rng.gen_range(1..=size), j: rng.gen_range(1..=size) }
}

pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let p = rng.gen_range(-4..=4);
    if rng.gen_bool(0.3) {
        ratio(p, rng.gen_range(1..=3))
    } else {
        int(p)
    }
}

/// Sum of up to `terms` random words of length up to `max_len`.
pub fn random_element(rng: &mut impl Rng, a: &Arc<Algebra>, terms: usize, max_len: usize) -> Element {
    let mut acc = a.zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<GenIdx> = (0..len).map(|_| random_gen(rng, a)).collect();
        acc = &acc + &a.normal_order(&word).unwrap().scale(&random_scalar(rng));
    }
    acc
}

pub fn sign(a: &Algebra, x: GenIdx, y: GenIdx) -> Scalar {
    if a.gen_parity(x).is_odd() && a.gen_parity(y).is_odd() {
        int(-1)
    } else {
        int(1)
    }
}

/// `(-1)^{l̄}` for index `l`.
fn parity_sign(m: usize, l: usize) -> i64 {
    if l > m {
        -1
    } else {
        1
    }
}

/// `Ψ_1 = Σ_i (E_ii - i + 1) + Σ_j (E_{m+j,m+j} + m - j)`, written out.
pub fn golden_psi1(a: &Arc<Algebra>) -> Element {
    let (m, n) = (a.dims().m(), a.dims().n());
    let mut acc = a.zero();
    for i in 1..=m {
        acc = &acc + &(&e(a, i, i) + &a.scalar(int(1 - i as i64)));
    }
    for j in 1..=n {
        acc = &acc + &(&e(a, m + j, m + j) + &a.scalar(int(m as i64 - j as i64)));
    }
    acc
}

/// `Ψ_2 = Σ_i ((E_ii - i + 1)^2 + 2 Σ_{k<i} E_ik E_ki)
///      - Σ_j ((E_{m+j,m+j} + m - j)^2 - 2 Σ_{l<m+j} (-1)^{l̄} E_{m+j,l} E_{l,m+j})`.
pub fn golden_psi2(a: &Arc<Algebra>) -> Element {
    let (m, n) = (a.dims().m(), a.dims().n());
    let two = int(2);
    let mut acc = a.zero();
    for i in 1..=m {
        let d = &e(a, i, i) + &a.scalar(int(1 - i as i64));
        acc = &acc + &(&d * &d);
        for k in 1..i {
            acc = &acc + &(&e(a, i, k) * &e(a, k, i)).scale(&two);
        }
    }
    for j in 1..=n {
        let r = m + j;
        let d = &e(a, r, r) + &a.scalar(int(m as i64 - j as i64));
        let mut inner = &d * &d;
        for l in 1..r {
            let c = int(-2 * parity_sign(m, l));
            inner = &inner + &(&e(a, r, l) * &e(a, l, r)).scale(&c);
        }
        acc = &acc - &inner;
    }
    acc
}

/// All `(k_1, ..., k_parts)` with nonnegative parts summing to `total`.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            weak_compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}
