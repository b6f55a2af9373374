//! The universal enveloping algebra `U(gl(m|n))` in a PBW basis.
//!
//! Generators `E_ij` are ordered lowering (`i > j`) before diagonal before
//! raising (`i < j`), lexicographically by `(i, j)` inside each class. A PBW
//! monomial is stored as the non-decreasing word of generator ranks in that
//! order, so the raising generators of a monomial always sit on the right.
//! Products are straightened with the super-commutation relations
//!
//! ```text
//! [E_ij, E_kl] = δ_kj E_il - (-1)^{(ī+j̄)(k̄+l̄)} δ_il E_kj
//! ```
//!
//! and memoized per algebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use parking_lot::RwLock;
use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::{self, Scalar};

/// Element of `Z/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Block sizes of `gl(m|n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperDims {
    m: usize,
    n: usize,
}

impl SuperDims {
    /// Largest supported `m + n`; generator ranks are stored in a byte.
    pub const MAX_SIZE: usize = 15;

    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 || m + n > Self::MAX_SIZE {
            return Err(Error::InvalidDims { m, n, max: Self::MAX_SIZE });
        }
        Ok(SuperDims { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// `ī`: even for `i <= m`, odd above.
    pub fn parity(&self, i: usize) -> Result<Parity> {
        self.check_index(i)?;
        Ok(self.bar(i))
    }

    pub(crate) fn bar(&self, i: usize) -> Parity {
        if i <= self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.size() {
            return Err(Error::IndexOutOfRange { index: i, bound: self.size() });
        }
        Ok(())
    }
}

impl fmt::Display for SuperDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// Index pair of the generator `E_ij`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenIdx {
    pub i: usize,
    pub j: usize,
}

impl GenIdx {
    pub fn new(dims: SuperDims, i: usize, j: usize) -> Result<Self> {
        dims.check_index(i)?;
        dims.check_index(j)?;
        Ok(GenIdx { i, j })
    }

    pub fn parity(&self, dims: SuperDims) -> Parity {
        dims.bar(self.i) + dims.bar(self.j)
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }

    fn class(&self) -> u8 {
        match self.i.cmp(&self.j) {
            std::cmp::Ordering::Greater => 0,
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => 2,
        }
    }
}

impl fmt::Display for GenIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.i, self.j)
    }
}

type Rank = u8;
type Word = SmallVec<[Rank; 8]>;

/// PBW monomial: non-decreasing word of generator ranks.
///
/// The derived ordering (lexicographic on words) is the canonical term order
/// used for printing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Word);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Word::new())
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn ranks(&self) -> &[Rank] {
        &self.0
    }

    fn pushed(&self, g: Rank) -> Monomial {
        let mut w = self.0.clone();
        w.push(g);
        Monomial(w)
    }
}

type Terms = BTreeMap<Monomial, Scalar>;
type CachedProduct = Arc<Vec<(Monomial, Scalar)>>;

/// Structure data and product cache for one `gl(m|n)`.
pub struct Algebra {
    dims: SuperDims,
    gens: Vec<GenIdx>,
    rank_of: Vec<Rank>,
    odd: Vec<bool>,
    brackets: Vec<SmallVec<[(Rank, i8); 2]>>,
    cache: RwLock<HashMap<(Monomial, Rank), CachedProduct>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra").field("dims", &self.dims).finish()
    }
}

impl Algebra {
    pub fn new(dims: SuperDims) -> Arc<Self> {
        let size = dims.size();
        let mut gens: Vec<GenIdx> = (1..=size)
            .flat_map(|i| (1..=size).map(move |j| GenIdx { i, j }))
            .collect();
        gens.sort_by_key(|g| (g.class(), g.i, g.j));
        let mut rank_of = vec![0; size * size];
        for (r, g) in gens.iter().enumerate() {
            rank_of[(g.i - 1) * size + g.j - 1] = r as Rank;
        }
        let odd = gens.iter().map(|g| g.parity(dims).is_odd()).collect();
        let mut alg = Algebra {
            dims,
            gens,
            rank_of,
            odd,
            brackets: Vec::new(),
            cache: RwLock::new(HashMap::new()),
        };
        let count = alg.gens.len();
        let mut brackets = Vec::with_capacity(count * count);
        for a in 0..count {
            for b in 0..count {
                brackets.push(alg.compute_bracket(a as Rank, b as Rank));
            }
        }
        alg.brackets = brackets;
        Arc::new(alg)
    }

    pub fn with_dims(m: usize, n: usize) -> Result<Arc<Self>> {
        Ok(Self::new(SuperDims::new(m, n)?))
    }

    pub fn dims(&self) -> SuperDims {
        self.dims
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> &[GenIdx] {
        &self.gens
    }

    fn rank(&self, g: GenIdx) -> Rank {
        self.rank_of[(g.i - 1) * self.dims.size() + g.j - 1]
    }

    fn gen(&self, r: Rank) -> GenIdx {
        self.gens[r as usize]
    }

    fn compute_bracket(&self, a: Rank, b: Rank) -> SmallVec<[(Rank, i8); 2]> {
        let (x, y) = (self.gen(a), self.gen(b));
        let mut out: SmallVec<[(Rank, i8); 2]> = SmallVec::new();
        let mut push = |g: GenIdx, c: i8| {
            let r = self.rank(g);
            if let Some(slot) = out.iter_mut().find(|(s, _)| *s == r) {
                slot.1 += c;
            } else {
                out.push((r, c));
            }
        };
        if y.i == x.j {
            push(GenIdx { i: x.i, j: y.j }, 1);
        }
        if x.i == y.j {
            let sign = if self.odd[a as usize] && self.odd[b as usize] { -1 } else { 1 };
            push(GenIdx { i: y.i, j: x.j }, -sign);
        }
        out.retain(|(_, c)| *c != 0);
        out
    }

    pub fn bracket(self: &Arc<Self>, a: GenIdx, b: GenIdx) -> Result<Element> {
        let (ra, rb) = (self.checked_rank(a)?, self.checked_rank(b)?);
        let terms = self.brackets[ra as usize * self.gens.len() + rb as usize]
            .iter()
            .map(|&(r, c)| (Monomial(smallvec::smallvec![r]), scalar::int(c as i64)))
            .collect();
        Ok(Element::from_terms(self, terms))
    }

    fn checked_rank(&self, g: GenIdx) -> Result<Rank> {
        self.dims.check_index(g.i)?;
        self.dims.check_index(g.j)?;
        Ok(self.rank(g))
    }

    /// Canonical form of the product of a word of generators.
    pub fn normal_order(self: &Arc<Self>, word: &[GenIdx]) -> Result<Element> {
        let ranks = word
            .iter()
            .map(|&g| self.checked_rank(g))
            .collect::<Result<Word>>()?;
        let mut current: Terms = BTreeMap::new();
        current.insert(Monomial::unit(), Scalar::one());
        for g in ranks {
            let mut next = BTreeMap::new();
            for (m, c) in &current {
                self.accumulate_right_mul(m, g, c, &mut next);
            }
            current = next;
        }
        Ok(Element::from_terms(self, current))
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(self: &Arc<Self>) -> Element {
        self.scalar(Scalar::one())
    }

    pub fn scalar(self: &Arc<Self>, c: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::unit(), c);
        Element::from_terms(self, terms)
    }

    pub fn generator(self: &Arc<Self>, i: usize, j: usize) -> Result<Element> {
        let r = self.checked_rank(GenIdx { i, j })?;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(smallvec::smallvec![r]), Scalar::one());
        Ok(Element { alg: self.clone(), terms })
    }

    fn is_odd(&self, r: Rank) -> bool {
        self.odd[r as usize]
    }

    /// Adds `coeff * (mono * g)` to `acc`.
    fn accumulate_right_mul(&self, mono: &Monomial, g: Rank, coeff: &Scalar, acc: &mut Terms) {
        match mono.ranks().last() {
            None => add_term(acc, Monomial(smallvec::smallvec![g]), coeff.clone()),
            Some(&last) if last < g || (last == g && !self.is_odd(g)) => {
                add_term(acc, mono.pushed(g), coeff.clone())
            }
            // odd generators square to zero
            Some(&last) if last == g => {}
            Some(_) => {
                let product = self.right_mul_cached(mono, g);
                for (m, c) in product.iter() {
                    add_term(acc, m.clone(), c * coeff);
                }
            }
        }
    }

    fn right_mul_cached(&self, mono: &Monomial, g: Rank) -> CachedProduct {
        let key = (mono.clone(), g);
        if let Some(hit) = self.cache.read().get(&key) {
            return hit.clone();
        }
        let value = Arc::new(self.straighten(mono, g));
        self.cache.write().entry(key).or_insert(value).clone()
    }

    /// `mono * g` for `g` smaller than the last letter of `mono`:
    /// `prefix * x * g = ± prefix * g * x + prefix * [x, g]`.
    fn straighten(&self, mono: &Monomial, g: Rank) -> Vec<(Monomial, Scalar)> {
        let (&x, prefix) = mono.ranks().split_last().expect("nonempty monomial");
        let prefix = Monomial(prefix.iter().copied().collect());
        let sign = if self.is_odd(x) && self.is_odd(g) { -Scalar::one() } else { Scalar::one() };

        let mut swapped = BTreeMap::new();
        self.accumulate_right_mul(&prefix, g, &sign, &mut swapped);
        let mut acc = BTreeMap::new();
        for (m, c) in &swapped {
            self.accumulate_right_mul(m, x, c, &mut acc);
        }
        let count = self.gens.len();
        for &(h, c) in &self.brackets[x as usize * count + g as usize] {
            self.accumulate_right_mul(&prefix, h, &scalar::int(c as i64), &mut acc);
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn multiply_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut acc = BTreeMap::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let coeff = ca * cb;
                self.accumulate_mono_mul(ma, mb, coeff, &mut acc);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc
    }

    fn accumulate_mono_mul(&self, ma: &Monomial, mb: &Monomial, coeff: Scalar, acc: &mut Terms) {
        let (left, right) = (ma.ranks(), mb.ranks());
        let ordered = match (left.last(), right.first()) {
            (Some(&l), Some(&r)) => l < r || (l == r && !self.is_odd(l)),
            _ => true,
        };
        if ordered {
            let mut w = Word::with_capacity(left.len() + right.len());
            w.extend_from_slice(left);
            w.extend_from_slice(right);
            add_term(acc, Monomial(w), coeff);
            return;
        }
        let mut current: Terms = BTreeMap::new();
        current.insert(ma.clone(), coeff);
        for &g in right {
            let mut next = BTreeMap::new();
            for (m, c) in &current {
                self.accumulate_right_mul(m, g, c, &mut next);
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        for (m, c) in current {
            add_term(acc, m, c);
        }
    }

    /// Number of memoized straightening results.
    pub fn cache_len(&self) -> usize {
        self.cache.read().len()
    }
}

fn add_term(acc: &mut Terms, m: Monomial, c: Scalar) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
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

/// Finite linear combination of PBW monomials with rational coefficients.
#[derive(Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    terms: Terms,
}

impl Element {
    fn from_terms(alg: &Arc<Algebra>, mut terms: Terms) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Element { alg: alg.clone(), terms }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn dims(&self) -> SuperDims {
        self.alg.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Generators of `m` with exponents, in canonical order.
    pub fn factors(&self, m: &Monomial) -> Vec<(GenIdx, u32)> {
        let mut out: Vec<(GenIdx, u32)> = Vec::new();
        for &r in m.ranks() {
            let g = self.alg.gen(r);
            match out.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    /// Generators of `m` as a word, repeated by exponent.
    pub fn word(&self, m: &Monomial) -> Vec<GenIdx> {
        m.ranks().iter().map(|&r| self.alg.gen(r)).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn monomial_parity(&self, m: &Monomial) -> Parity {
        let odd = m.ranks().iter().filter(|&&r| self.alg.is_odd(r)).count();
        if odd % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Splits into even and odd homogeneous parts.
    pub fn homogeneous_parts(&self) -> (Element, Element) {
        let (even, odd): (Terms, Terms) = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .partition(|(m, _)| self.monomial_parity(m) == Parity::Even);
        (Element { alg: self.alg.clone(), terms: even }, Element { alg: self.alg.clone(), terms: odd })
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| self.monomial_parity(m) == Parity::Even)
    }

    fn check_same(&self, other: &Element) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg.dims == other.alg.dims {
            Ok(())
        } else {
            let (a, b) = (self.alg.dims, other.alg.dims);
            Err(Error::DimsMismatch(a.m, a.n, b.m, b.n))
        }
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        Ok(Element { alg: self.alg.clone(), terms: self.alg.multiply_terms(&self.terms, &other.terms) })
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(Element { alg: self.alg.clone(), terms })
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return self.alg.zero();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Element { alg: self.alg.clone(), terms }
    }

    /// Super-commutator `[self, other] = self*other - (-1)^{|self||other|} other*self`,
    /// extended bilinearly over homogeneous parts.
    pub fn supercommutator(&self, other: &Element) -> Result<Element> {
        self.check_same(other)?;
        let (a0, a1) = self.homogeneous_parts();
        let (b0, b1) = other.homogeneous_parts();
        let mut acc = self.alg.zero();
        for (a, pa) in [(&a0, false), (&a1, true)] {
            for (b, pb) in [(&b0, false), (&b1, true)] {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let ba = b * a;
                acc = if pa && pb { &(&acc + &ab) + &ba } else { &(&acc + &ab) - &ba };
            }
        }
        Ok(acc)
    }

    /// Re-straightens every monomial from its generator word.
    pub fn renormalized(&self) -> Element {
        let mut acc = self.alg.zero();
        for (m, c) in &self.terms {
            let expanded = self.alg.normal_order(&self.word(m)).expect("indices valid");
            acc = &acc + &expanded.scale(c);
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<Value> = self
                    .factors(m)
                    .into_iter()
                    .map(|(g, e)| json!([g.i, g.j, e]))
                    .collect();
                json!({ "coeff": scalar::format(c), "monomial": mono })
            })
            .collect();
        json!({ "terms": terms })
    }

    /// Reads the JSON encoding; monomials need not be PBW-ordered.
    pub fn from_json(alg: &Arc<Algebra>, value: &Value) -> Result<Element> {
        let bad = |what: &str| Error::Parse(format!("element JSON: {what}"));
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut acc = alg.zero();
        for term in terms {
            let coeff = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing coeff"))?;
            let coeff = scalar::parse(coeff)?;
            let factors = term
                .get("monomial")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing monomial"))?;
            let mut word = Vec::new();
            for f in factors {
                let triple: Vec<usize> = f
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .and_then(|a| a.iter().map(|v| v.as_u64().map(|x| x as usize)).collect())
                    .ok_or_else(|| bad("factor must be [i, j, e]"))?;
                let g = GenIdx::new(alg.dims, triple[0], triple[1])?;
                word.extend(std::iter::repeat(g).take(triple[2]));
            }
            acc = &acc + &alg.normal_order(&word)?.scale(&coeff);
        }
        Ok(acc)
    }
}

/// `Σ c_i a_i` in canonical form.
pub fn linear_combine(alg: &Arc<Algebra>, pairs: &[(Scalar, Element)]) -> Result<Element> {
    let mut terms = BTreeMap::new();
    for (c, a) in pairs {
        if a.alg.dims != alg.dims {
            let (x, y) = (alg.dims, a.alg.dims);
            return Err(Error::DimsMismatch(x.m, x.n, y.m, y.n));
        }
        for (m, v) in &a.terms {
            add_term(&mut terms, m.clone(), v * c);
        }
    }
    Ok(Element { alg: alg.clone(), terms })
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.alg.dims == other.alg.dims && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            let body = self
                .factors(m)
                .into_iter()
                .map(|(g, e)| if e == 1 { g.to_string() } else { format!("{g}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            scalar::push_term(&mut out, c, &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg.dims, self)
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.checked_add(&-rhs).expect("elements of different algebras")
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

/// Panics when the operands live in different algebras; see [`Element::checked_mul`].
impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("elements of different algebras")
    }
}

impl Ring for Element {
    fn zero_like(&self) -> Self {
        self.alg.zero()
    }

    fn one_like(&self) -> Self {
        self.alg.one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }

    fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }
}

impl Algebra {
    pub fn gen_parity(&self, g: GenIdx) -> Parity {
        g.parity(self.dims)
    }
}
