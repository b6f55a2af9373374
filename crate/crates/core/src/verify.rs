//! Identity checks over a grid of `(m, n)` and truncation orders. Each check
//! yields one [`CheckLine`] per grid cell, in a fixed order.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, Element};
use crate::casimir::{berezinian_direct, berezinian_factors, casimir_families, check_central, product_with_swap, Centrality, LeadingSubmatrix};
use crate::error::Result;
use crate::free::FreeElement;
use crate::hc::{check_supersymmetric, hc_berezinian, hc_image_berezinian, hc_project, shift_to_xy, susy_oracle, susy_series, SusyKind};
use crate::matrix::Matrix;
use crate::ncsf::{ncsf_paths, ncsf_series, NcsfKind};
use crate::ring::Ring;
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckLine {
    pub check: &'static str,
    pub cell: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl CheckLine {
    fn pass(check: &'static str, cell: String) -> Self {
        CheckLine { check, cell, passed: true, counterexample: None }
    }

    fn fail(check: &'static str, cell: String, detail: String) -> Self {
        CheckLine { check, cell, passed: false, counterexample: Some(detail) }
    }

    fn from_diff<T: fmt::Display + PartialEq>(check: &'static str, cell: String, left: &T, right: &T) -> Self {
        if left == right {
            Self::pass(check, cell)
        } else {
            Self::fail(check, cell, format!("{left} != {right}"))
        }
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.check, self.cell)?;
        if let Some(detail) = &self.counterexample {
            write!(f, "\n  counterexample: {detail}")?;
        }
        Ok(())
    }
}

fn cell(alg: &Arc<Algebra>, extra: &str) -> String {
    let d = alg.dims();
    format!("m={} n={} {extra}", d.m(), d.n())
}

/// First coefficient index where two series differ.
fn first_difference<R: Ring + fmt::Display>(a: &TruncSeries<R>, b: &TruncSeries<R>) -> Option<String> {
    (0..=a.order().min(b.order()))
        .find(|&k| a.coeff(k) != b.coeff(k))
        .map(|k| format!("t^{k}: {} != {}", a.coeff(k), b.coeff(k)))
}

pub fn decomposition(alg: &Arc<Algebra>, order: usize) -> Result<CheckLine> {
    let direct = berezinian_direct(alg, order)?;
    let factored = crate::casimir::berezinian_factored(alg, order)?;
    let c = cell(alg, &format!("K={order}"));
    Ok(match first_difference(&direct, &factored) {
        None => CheckLine::pass("decomposition", c),
        Some(d) => CheckLine::fail("decomposition", c, d),
    })
}

/// One line per adjacent swap, then one per unordered pair of factors.
pub fn permutability(alg: &Arc<Algebra>, order: usize) -> Result<Vec<CheckLine>> {
    let factors = berezinian_factors(alg, order)?;
    let full = crate::casimir::berezinian_factored(alg, order)?;
    let mut lines = Vec::new();
    for a in 0..factors.len().saturating_sub(1) {
        let swapped = product_with_swap(alg, order, &factors, a)?;
        let c = cell(alg, &format!("K={order} swap={}<->{}", a + 1, a + 2));
        lines.push(match first_difference(&full, &swapped) {
            None => CheckLine::pass("permutability", c),
            Some(d) => CheckLine::fail("permutability", c, d),
        });
    }
    for a in 0..factors.len() {
        for b in a + 1..factors.len() {
            let ab = factors[a].mul(&factors[b])?;
            let ba = factors[b].mul(&factors[a])?;
            let c = cell(alg, &format!("K={order} commute={},{}", a + 1, b + 1));
            lines.push(match first_difference(&ab, &ba) {
                None => CheckLine::pass("permutability", c),
                Some(d) => CheckLine::fail("permutability", c, d),
            });
        }
    }
    Ok(lines)
}

fn central_line(alg: &Arc<Algebra>, what: String, z: &Element) -> CheckLine {
    match check_central(z) {
        Centrality::Central => CheckLine::pass("centrality", cell(alg, &what)),
        Centrality::NotCentral { generator, remainder } => CheckLine::fail(
            "centrality",
            cell(alg, &what),
            format!("[{what}, {generator}] = {remainder}"),
        ),
    }
}

/// Coefficients of `B(t)` up to `t^order` and the four families up to degree `order`.
pub fn centrality(alg: &Arc<Algebra>, order: usize) -> Result<Vec<CheckLine>> {
    let b = berezinian_direct(alg, order)?;
    let mut lines: Vec<CheckLine> = (1..=order)
        .map(|k| central_line(alg, format!("B_{k}"), b.coeff(k)))
        .collect();
    for kind in NcsfKind::ALL {
        for fam in casimir_families(alg, kind, order)? {
            lines.push(central_line(alg, format!("{}_{}", kind, fam.degree), &fam.value));
        }
    }
    Ok(lines)
}

pub fn psi_eq_phi(alg: &Arc<Algebra>, max_degree: usize) -> Result<Vec<CheckLine>> {
    let psi = casimir_families(alg, NcsfKind::PsiFirstKind, max_degree)?;
    let phi = casimir_families(alg, NcsfKind::PhiSecondKind, max_degree)?;
    Ok(psi
        .iter()
        .zip(&phi)
        .map(|(a, b)| CheckLine::from_diff("psi-eq-phi", cell(alg, &format!("k={}", a.degree)), &a.value, &b.value))
        .collect())
}

fn susy_target(kind: NcsfKind) -> SusyKind {
    match kind {
        NcsfKind::Elementary => SusyKind::Elementary,
        NcsfKind::Complete => SusyKind::Complete,
        NcsfKind::PsiFirstKind | NcsfKind::PhiSecondKind => SusyKind::PowerSum,
    }
}

/// `χ(family_k)` against the supersymmetric oracle, each image's
/// supersymmetry, and `χ(B(t))` against the rational-function expansion.
pub fn hc_images(alg: &Arc<Algebra>, order: usize) -> Result<Vec<CheckLine>> {
    let dims = alg.dims();
    let mut lines = Vec::new();
    for kind in NcsfKind::ALL {
        let target = susy_target(kind);
        for fam in casimir_families(alg, kind, order)? {
            let image = shift_to_xy(&hc_project(&fam.value))?;
            let expected = susy_oracle(dims, target, fam.degree)?;
            let what = format!("chi({}_{})={}_{}", kind, fam.degree, target, fam.degree);
            lines.push(CheckLine::from_diff("hc-images", cell(alg, &what), &image, &expected));
            let what = format!("supersymmetric({}_{})", kind, fam.degree);
            lines.push(if check_supersymmetric(&image) {
                CheckLine::pass("hc-images", cell(alg, &what))
            } else {
                CheckLine::fail("hc-images", cell(alg, &what), image.to_string())
            });
        }
    }
    let image = hc_berezinian(alg, order)?;
    let expected = hc_image_berezinian(dims, order);
    let c = cell(alg, &format!("chi(B(t)) K={order}"));
    lines.push(match first_difference(&image, &expected) {
        None => CheckLine::pass("hc-images", c),
        Some(d) => CheckLine::fail("hc-images", c, d),
    });
    Ok(lines)
}

/// `h(t) e(-t) = 1`, `p(t) = e(-t) d/dt e(-t)^{-1}` and `p(t) = -d/dt log e(-t)`,
/// compared through `t^order`.
pub fn oracle_identities(alg: &Arc<Algebra>, order: usize) -> Result<Vec<CheckLine>> {
    let dims = alg.dims();
    let work = order + 1;
    let e = susy_series(dims, SusyKind::Elementary, work)?;
    let h = susy_series(dims, SusyKind::Complete, work)?;
    let p = susy_series(dims, SusyKind::PowerSum, work)?.truncate(order);
    let e_neg = e.reflect();
    let one = TruncSeries::one(e.coeff(0), work);
    let he = h.mul(&e_neg)?;
    let via_inverse = e_neg.mul(&e_neg.invert()?.derivative())?.truncate(order);
    let via_log = e_neg.log()?.derivative().negated().truncate(order);
    let c = |what: &str| cell(alg, &format!("{what} mod t^{}", order + 1));
    Ok(vec![
        CheckLine::from_diff("oracle-identities", c("h(t)e(-t)=1"), &he, &one),
        CheckLine::from_diff("oracle-identities", c("p(t)=e(-t)d/dt e(-t)^-1"), &via_inverse, &p),
        CheckLine::from_diff("oracle-identities", c("p(t)=-d/dt log e(-t)"), &via_log, &p),
    ])
}

fn series_paths_lines<R: Ring + fmt::Display>(label: &str, a: &Matrix<R>, order: usize) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    for i in 1..=a.size() {
        for kind in NcsfKind::ALL {
            let series = ncsf_series(a, i, kind, order)?;
            for k in 1..=order {
                let paths = ncsf_paths(a, i, kind, k)?;
                let what = format!("{label} i={i} {kind}_{k}");
                lines.push(CheckLine::from_diff("series-vs-paths", what, series.coeff(k), &paths));
            }
        }
    }
    Ok(lines)
}

/// Series against path sums on the formal `size x size` matrix.
pub fn series_vs_paths_formal(size: usize, order: usize) -> Result<Vec<CheckLine>> {
    series_paths_lines(&format!("formal {size}x{size}"), &FreeElement::formal_matrix(size), order)
}

/// Series against path sums on every shifted `Ê` block of `gl(m|n)`, at its
/// own index.
pub fn series_vs_paths_ehat(alg: &Arc<Algebra>, order: usize) -> Result<Vec<CheckLine>> {
    let dims = alg.dims();
    let mut lines = Vec::new();
    for index in 1..=dims.size() {
        let a = LeadingSubmatrix::for_index(dims.m(), index).build(alg)?;
        for kind in NcsfKind::ALL {
            let series = ncsf_series(&a, index, kind, order)?;
            for k in 1..=order {
                let paths = ncsf_paths(&a, index, kind, k)?;
                let what = cell(alg, &format!("ehat i={index} {kind}_{k}"));
                lines.push(CheckLine::from_diff("series-vs-paths", what, series.coeff(k), &paths));
            }
        }
    }
    Ok(lines)
}
