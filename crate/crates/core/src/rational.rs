//! Exact rational helpers shared across the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or an integer. Decimal notation is rejected.
pub fn parse(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty rational".into());
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(format!("`{t}` is not an exact rational (use p/q or an integer)"));
    }
    let r: Rational = t
        .parse()
        .map_err(|_| format!("`{t}` is not a rational of the form p/q"))?;
    Ok(r)
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// `true` when `a` is an integer multiple of the nonzero `d`.
pub fn is_multiple_of(a: &Rational, d: &Rational) -> bool {
    debug_assert!(!d.is_zero());
    (a / d).is_integer()
}
