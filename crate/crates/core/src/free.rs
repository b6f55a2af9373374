//! Free associative algebra on matrix-entry letters `A[i,j]`, used to feed
//! formal matrices to the noncommutative symmetric function routines.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::scalar::{self, Scalar};

type Letter = (u8, u8);
type Word = SmallVec<[Letter; 8]>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::new(), c);
        }
        FreeElement { terms }
    }

    /// The letter `A[i,j]`.
    pub fn letter(i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(smallvec::smallvec![(i as u8, j as u8)], Scalar::one());
        FreeElement { terms }
    }

    /// Letter built from a word of `(i, j)` pairs with a coefficient.
    pub fn word(letters: &[(usize, usize)], c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(letters.iter().map(|&(i, j)| (i as u8, j as u8)).collect(), c);
        }
        FreeElement { terms }
    }

    /// Matrix with independent noncommuting entries `A[i,j]`.
    pub fn formal_matrix(size: usize) -> Matrix<FreeElement> {
        Matrix::from_fn(size, FreeElement::letter)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<(usize, usize)>, &Scalar)> {
        self.terms
            .iter()
            .map(|(w, c)| (w.iter().map(|&(i, j)| (i as usize, j as usize)).collect(), c))
    }

    fn insert(&mut self, w: Word, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl Ring for FreeElement {
    fn zero_like(&self) -> Self {
        FreeElement::zero()
    }

    fn one_like(&self) -> Self {
        FreeElement::one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    fn times(&self, rhs: &Self) -> Self {
        let mut out = FreeElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.insert(w, ca * cb);
            }
        }
        out
    }

    fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::new()).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (w, c) in &self.terms {
            let mut parts: Vec<(Letter, u32)> = Vec::new();
            for &l in w {
                match parts.last_mut() {
                    Some((last, e)) if *last == l => *e += 1,
                    _ => parts.push((l, 1)),
                }
            }
            let body = parts
                .iter()
                .map(|&((i, j), e)| {
                    if e == 1 {
                        format!("A[{i},{j}]")
                    } else {
                        format!("A[{i},{j}]^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            scalar::push_term(&mut out, c, &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
