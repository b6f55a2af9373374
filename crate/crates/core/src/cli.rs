//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error.

use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::casimir::{berezinian_direct, berezinian_factored, casimir, LeadingSubmatrix};
use crate::error::{Error, Result};
use crate::free::FreeElement;
use crate::hc::{hc_berezinian, hc_project, shift_to_xy};
use crate::matrix::Matrix;
use crate::ncsf::{ncsf_paths, ncsf_series, NcsfKind};
use crate::ring::Ring;
use crate::series::TruncSeries;
use crate::verify::{self, CheckLine};

#[derive(Debug, Parser)]
#[command(name = "glmn", about = "Casimir elements of U(gl(m|n)) in exact arithmetic")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<std::num::NonZeroUsize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Lambda,
    S,
    Psi,
    Phi,
}

impl From<Family> for NcsfKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Lambda => NcsfKind::Elementary,
            Family::S => NcsfKind::Complete,
            Family::Psi => NcsfKind::PsiFirstKind,
            Family::Phi => NcsfKind::PhiSecondKind,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BerezinianMethod {
    Direct,
    Factored,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NcsfMethod {
    Series,
    Paths,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixChoice {
    /// The shifted block of Ê attached to index `--i`.
    Ehat,
    /// A matrix of free noncommuting letters A[i,j].
    Formal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HcTarget {
    Lambda,
    S,
    Psi,
    Phi,
    Berezinian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Centrality,
    Decomposition,
    Permutability,
    PsiEqPhi,
    HcImages,
    SeriesVsPaths,
    OracleIdentities,
    All,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantum Berezinian B(t) truncated at --order.
    Berezinian {
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, value_enum, default_value_t = BerezinianMethod::Direct)]
        method: BerezinianMethod,
    },
    /// One Casimir element of degree --k.
    Casimir {
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
    },
    /// Noncommutative symmetric functions of a matrix at index --i.
    Ncsf {
        #[arg(long, value_enum, default_value_t = MatrixChoice::Ehat)]
        matrix: MatrixChoice,
        #[arg(long, required_if_eq("matrix", "ehat"))]
        m: Option<usize>,
        #[arg(long, required_if_eq("matrix", "ehat"))]
        n: Option<usize>,
        /// Size of the formal matrix.
        #[arg(long, required_if_eq("matrix", "formal"))]
        size: Option<usize>,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum)]
        kind: Family,
        #[arg(long, value_enum, default_value_t = NcsfMethod::Series)]
        method: NcsfMethod,
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Print only the degree-k function.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Harish-Chandra image of a Casimir element or of B(t).
    Hc {
        #[command(flatten)]
        dims: DimsArgs,
        #[arg(long, value_enum, visible_alias = "of")]
        family: HcTarget,
        #[arg(long, required_unless_present("order"))]
        k: Option<usize>,
        /// Truncation order for --family berezinian.
        #[arg(long)]
        order: Option<usize>,
        /// Express the image in x_i = λ_i - i + 1, y_j = μ_j + m - j.
        #[arg(long)]
        shifted: bool,
    },
    /// Run theorem checks and print one line per grid cell.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Largest Casimir degree (defaults to the order).
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    let execute = || execute(&cli);
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.get()).build() {
            Ok(pool) => pool.install(execute),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {n} threads: {e}");
                return 2;
            }
        },
        None => execute(),
    };
    match result {
        Ok(Outcome::Printed(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::Report(lines)) => report(&cli, &lines, out),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum Outcome {
    Printed(String),
    Report(Vec<CheckLine>),
}

fn report(cli: &Cli, lines: &[CheckLine], out: &mut dyn Write) -> i32 {
    match cli.format {
        Format::Text => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
        }
        Format::Json => {
            let v: Vec<Value> = lines
                .iter()
                .map(|l| json!({ "check": l.check, "cell": l.cell, "passed": l.passed, "counterexample": l.counterexample }))
                .collect();
            let _ = writeln!(out, "{}", Value::Array(v));
        }
    }
    if lines.iter().all(|l| l.passed) {
        0
    } else {
        1
    }
}

fn algebra(m: usize, n: usize) -> Result<Arc<Algebra>> {
    Algebra::with_dims(m, n)
}

fn degree(k: usize) -> Result<usize> {
    if k == 0 {
        Err(Error::ZeroDegree)
    } else {
        Ok(k)
    }
}

fn render_element(format: Format, z: &Element) -> String {
    match format {
        Format::Text => z.to_string(),
        Format::Json => z.to_json().to_string(),
    }
}

fn render_series(format: Format, s: &TruncSeries<Element>) -> String {
    match format {
        Format::Text => s.to_string(),
        Format::Json => s.to_json_with(Element::to_json).to_string(),
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    let text = match &cli.command {
        Command::Berezinian { dims, order, method } => {
            let alg = algebra(dims.m, dims.n)?;
            let b = match method {
                BerezinianMethod::Direct => berezinian_direct(&alg, *order)?,
                BerezinianMethod::Factored => berezinian_factored(&alg, *order)?,
            };
            render_series(format, &b)
        }
        Command::Casimir { dims, family, k } => {
            let alg = algebra(dims.m, dims.n)?;
            let z = casimir(&alg, (*family).into(), degree(*k)?)?;
            render_element(format, &z.value)
        }
        Command::Ncsf { matrix, m, n, size, i, kind, method, order, k } => {
            let kind: NcsfKind = (*kind).into();
            match matrix {
                MatrixChoice::Ehat => {
                    let alg = algebra(m.unwrap_or(0), n.unwrap_or(0))?;
                    alg.dims().check_index(*i)?;
                    let a = LeadingSubmatrix::for_index(alg.dims().m(), *i).build(&alg)?;
                    ncsf_output(&a, *i, kind, *method, *order, *k, format, Element::to_json)?
                }
                MatrixChoice::Formal => {
                    let size = size.unwrap_or(0);
                    if size == 0 || size > 8 {
                        return Err(Error::IndexOutOfRange { index: size, bound: 8 });
                    }
                    let a = FreeElement::formal_matrix(size);
                    ncsf_output(&a, *i, kind, *method, *order, *k, format, free_json)?
                }
            }
        }
        Command::Hc { dims, family, k, order, shifted } => {
            let alg = algebra(dims.m, dims.n)?;
            match family {
                HcTarget::Berezinian => {
                    let order = order.or(*k).unwrap_or(4);
                    let s = if *shifted {
                        hc_berezinian(&alg, order)?
                    } else {
                        berezinian_direct(&alg, order)?.map(hc_project)
                    };
                    match format {
                        Format::Text => s.to_string(),
                        Format::Json => s.to_json_with(|p| p.to_json()).to_string(),
                    }
                }
                other => {
                    let kind = match other {
                        HcTarget::Lambda => NcsfKind::Elementary,
                        HcTarget::S => NcsfKind::Complete,
                        HcTarget::Psi => NcsfKind::PsiFirstKind,
                        _ => NcsfKind::PhiSecondKind,
                    };
                    let k = degree(k.ok_or(Error::ZeroDegree)?)?;
                    let z = casimir(&alg, kind, k)?;
                    let p = hc_project(&z.value);
                    let p = if *shifted { shift_to_xy(&p)? } else { p };
                    match format {
                        Format::Text => p.to_string(),
                        Format::Json => p.to_json().to_string(),
                    }
                }
            }
        }
        Command::Verify { check, m, n, order, k } => {
            return Ok(Outcome::Report(run_checks(*check, m.zip(*n), *order, *k)?));
        }
    };
    Ok(Outcome::Printed(text))
}

fn free_json(x: &FreeElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(w, c)| {
            let word: Vec<Value> = w.iter().map(|&(i, j)| json!([i, j])).collect();
            json!({ "coeff": crate::scalar::format(c), "word": word })
        })
        .collect();
    json!({ "terms": terms })
}

#[allow(clippy::too_many_arguments)]
fn ncsf_output<R: Ring + std::fmt::Display>(
    a: &Matrix<R>,
    i: usize,
    kind: NcsfKind,
    method: NcsfMethod,
    order: usize,
    k: Option<usize>,
    format: Format,
    encode: impl Fn(&R) -> Value,
) -> Result<String> {
    a.check_index(i)?;
    let order = k.map_or(order, |k| k.max(1));
    let series = match method {
        NcsfMethod::Series => ncsf_series(a, i, kind, order)?,
        NcsfMethod::Paths => {
            let proto = a.get(i, i);
            let c0 = match kind {
                NcsfKind::Elementary | NcsfKind::Complete => proto.one_like(),
                _ => proto.zero_like(),
            };
            let mut coeffs = vec![c0];
            for d in 1..=order {
                coeffs.push(ncsf_paths(a, i, kind, d)?);
            }
            TruncSeries::new(coeffs)
        }
    };
    Ok(match (k, format) {
        (Some(k), Format::Text) => degree(k).map(|k| series.coeff(k).to_string())?,
        (Some(k), Format::Json) => degree(k).map(|k| encode(series.coeff(k)).to_string())?,
        (None, Format::Text) => series.to_string(),
        (None, Format::Json) => series.to_json_with(encode).to_string(),
    })
}

/// Grid cells each check covers when `--m/--n` are not given.
pub fn default_grid(check: Check) -> Vec<(usize, usize)> {
    match check {
        Check::Permutability => vec![(1, 1), (2, 1), (1, 2)],
        Check::SeriesVsPaths => vec![(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)],
        _ => vec![(1, 1), (2, 1), (1, 2), (2, 2)],
    }
}

pub fn default_order(check: Check) -> usize {
    match check {
        Check::Permutability => 3,
        _ => 4,
    }
}

pub fn run_checks(check: Check, dims: Option<(usize, usize)>, order: Option<usize>, k: Option<usize>) -> Result<Vec<CheckLine>> {
    if check == Check::All {
        let mut lines = Vec::new();
        for c in [
            Check::Decomposition,
            Check::Permutability,
            Check::Centrality,
            Check::PsiEqPhi,
            Check::HcImages,
            Check::SeriesVsPaths,
            Check::OracleIdentities,
        ] {
            lines.extend(run_checks(c, dims, order, k)?);
        }
        return Ok(lines);
    }
    let grid = dims.map_or_else(|| default_grid(check), |d| vec![d]);
    let order = order.unwrap_or_else(|| default_order(check));
    let max_k = k.unwrap_or(order);
    let mut lines = Vec::new();
    if check == Check::SeriesVsPaths && dims.is_none() {
        lines.extend(verify::series_vs_paths_formal(2, order)?);
        lines.extend(verify::series_vs_paths_formal(3, order)?);
    }
    for (m, n) in grid {
        let alg = algebra(m, n)?;
        match check {
            Check::Decomposition => lines.push(verify::decomposition(&alg, order)?),
            Check::Permutability => lines.extend(verify::permutability(&alg, order)?),
            Check::Centrality => lines.extend(verify::centrality(&alg, max_k)?),
            Check::PsiEqPhi => lines.extend(verify::psi_eq_phi(&alg, max_k)?),
            Check::HcImages => lines.extend(verify::hc_images(&alg, max_k)?),
            Check::SeriesVsPaths => lines.extend(verify::series_vs_paths_ehat(&alg, max_k)?),
            Check::OracleIdentities => lines.extend(verify::oracle_identities(&alg, order)?),
            Check::All => unreachable!(),
        }
    }
    Ok(lines)
}
