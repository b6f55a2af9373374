//! Commutative polynomials in highest-weight coordinates `λ, μ` or in the
//! shifted variables `x, y`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarKind {
    /// `λ_1..λ_m, μ_1..μ_n`
    Weight,
    /// `x_1..x_m, y_1..y_n`
    Shifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarSet {
    pub m: usize,
    pub n: usize,
    pub kind: VarKind,
}

impl VarSet {
    pub fn weight(m: usize, n: usize) -> Self {
        VarSet { m, n, kind: VarKind::Weight }
    }

    pub fn shifted(m: usize, n: usize) -> Self {
        VarSet { m, n, kind: VarKind::Shifted }
    }

    pub fn len(&self) -> usize {
        self.m + self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Name of the variable at 0-based position `v`.
    pub fn name(&self, v: usize) -> String {
        let (even, odd) = match self.kind {
            VarKind::Weight => ("lambda", "mu"),
            VarKind::Shifted => ("x", "y"),
        };
        if v < self.m {
            format!("{even}{}", v + 1)
        } else {
            format!("{odd}{}", v - self.m + 1)
        }
    }
}

pub type Exponents = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct WeightPolynomial {
    vars: VarSet,
    terms: BTreeMap<Exponents, Scalar>,
}

impl WeightPolynomial {
    pub fn zero(vars: VarSet) -> Self {
        WeightPolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    /// The variable at 0-based position `v`.
    pub fn variable(vars: VarSet, v: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[v] = 1;
        let mut p = Self::zero(vars);
        p.add_term(exps, Scalar::one());
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Exponents, c: Scalar) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    /// Same coefficients read over another variable set of equal length.
    pub fn relabel(&self, vars: VarSet) -> Self {
        assert_eq!(vars.len(), self.vars.len());
        WeightPolynomial { vars, terms: self.terms.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.vars, Scalar::one());
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }

    /// Replaces variable `v` by `images[v]` everywhere.
    pub fn substitute(&self, images: &[WeightPolynomial]) -> Self {
        assert_eq!(images.len(), self.vars.len());
        let target = images.first().map_or(self.vars, |p| p.vars);
        let mut acc = Self::zero(target);
        for (exps, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (v, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.times(&images[v].pow(e));
                }
            }
            acc = acc.plus(&term);
        }
        acc
    }

    /// Swaps variables at 0-based positions `a` and `b`.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            e.swap(a, b);
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn total_degree(exps: &[u32]) -> u32 {
        exps.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        let kind = match self.vars.kind {
            VarKind::Weight => "lambda_mu",
            VarKind::Shifted => "x_y",
        };
        let terms: Vec<Value> = self
            .display_order()
            .into_iter()
            .map(|(e, c)| json!({ "exponents": e, "coeff": scalar::format(c) }))
            .collect();
        json!({ "vars": kind, "m": self.vars.m, "n": self.vars.n, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let kind = match value.get("vars").and_then(Value::as_str) {
            Some("lambda_mu") => VarKind::Weight,
            Some("x_y") => VarKind::Shifted,
            _ => return Err(bad("vars must be lambda_mu or x_y")),
        };
        let field = |k: &str| value.get(k).and_then(Value::as_u64).map(|v| v as usize).ok_or_else(|| bad(k));
        let vars = VarSet { m: field("m")?, n: field("n")?, kind };
        let mut p = Self::zero(vars);
        for t in value.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let exps: Exponents = t
                .get("exponents")
                .and_then(Value::as_array)
                .and_then(|a| a.iter().map(|v| v.as_u64().map(|x| x as u32)).collect())
                .ok_or_else(|| bad("exponents"))?;
            if exps.len() != vars.len() {
                return Err(bad("exponent vector length"));
            }
            let c = scalar::parse(t.get("coeff").and_then(Value::as_str).ok_or_else(|| bad("coeff"))?)?;
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Terms by descending total degree, then descending exponent vector.
    fn display_order(&self) -> Vec<(&Exponents, &Scalar)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            Self::total_degree(b)
                .cmp(&Self::total_degree(a))
                .then_with(|| b.cmp(a))
        });
        terms
    }
}

impl Ring for WeightPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars)
    }

    fn one_like(&self) -> Self {
        Self::constant(self.vars, Scalar::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars, "polynomials over different variables");
        let mut out = Self::zero(self.vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        WeightPolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&vec![0; self.vars.len()]).cloned(),
            _ => None,
        }
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (exps, c) in self.display_order() {
            let body = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    let name = self.vars.name(v);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            scalar::push_term(&mut out, c, &body);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn display_order_and_names() {
        let vars = VarSet::shifted(1, 1);
        let x = WeightPolynomial::variable(vars, 0);
        let y = WeightPolynomial::variable(vars, 1);
        let p = x.times(&y).plus(&y.times(&y));
        assert_eq!(p.to_string(), "1 * x1*y1 + 1 * y1^2");
        let q = x.times(&x).times(&y).scaled(&ratio(3, 2)).plus(&x.one_like());
        assert_eq!(q.to_string(), "3/2 * x1^2*y1 + 1");
        let lam = WeightPolynomial::variable(VarSet::weight(1, 1), 1);
        assert_eq!(lam.to_string(), "1 * mu1");
    }

    #[test]
    fn json_round_trip() {
        let vars = VarSet::shifted(2, 1);
        let p = WeightPolynomial::variable(vars, 2).pow(2).scaled(&ratio(-5, 3)).plus(&WeightPolynomial::variable(vars, 0));
        assert_eq!(WeightPolynomial::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn substitution() {
        let vars = VarSet::shifted(1, 1);
        let x = WeightPolynomial::variable(vars, 0);
        let y = WeightPolynomial::variable(vars, 1);
        // (x + y)^2 with y -> -x vanishes
        let p = x.plus(&y).pow(2);
        let q = p.substitute(&[x.clone(), x.negated()]);
        assert!(q.is_zero());
    }
}
