//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// `p` for integers, `p/q` otherwise.
pub fn format(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => Ok(Scalar::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Writes `c * body` into a sum of terms: leading term keeps its sign,
/// later terms are joined with ` + ` or ` - `.
pub(crate) fn push_term(out: &mut String, c: &Scalar, body: &str) {
    if out.is_empty() {
        out.push_str(&format(c));
    } else if c.is_negative() {
        out.push_str(" - ");
        out.push_str(&format(&c.abs()));
    } else {
        out.push_str(" + ");
        out.push_str(&format(c));
    }
    if !body.is_empty() {
        out.push_str(" * ");
        out.push_str(body);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format(&ratio(3, 2)), "3/2");
        assert_eq!(format(&ratio(-4, 2)), "-2");
        assert_eq!(parse("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse("7").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
