//! Exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn one() -> Coeff {
    Coeff::one()
}

pub fn zero() -> Coeff {
    Coeff::zero()
}

pub fn signed(c: &Coeff, sign: i8) -> Coeff {
    if sign < 0 {
        -c.clone()
    } else {
        c.clone()
    }
}

/// Parses `"3"`, `"-1/2"`, or `"−1/2"` (unicode minus).
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let t = s.trim().replace('\u{2212}', "-");
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn format_coeff(c: &Coeff) -> String {
    c.to_string()
}
