//! Rational scalars and a few logarithm helpers on big integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Natural logarithm of |n| for a nonzero big integer, accurate to a few ulps.
pub fn ln_abs(n: &BigInt) -> f64 {
    assert!(!n.is_zero(), "ln of zero");
    let bits = n.bits();
    if bits <= 1000 {
        if let Some(f) = n.to_f64() {
            if f.is_finite() {
                return f.abs().ln();
            }
        }
    }
    let shift = bits - 64;
    let top = (n.abs() >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Weil height of a rational number: log max(|num|, den).
pub fn rational_height(x: &BigRat) -> f64 {
    let m = x.numer().abs().max(x.denom().clone());
    if m.is_zero() {
        0.0
    } else {
        ln_abs(&m)
    }
}

/// Bit length of the larger of numerator and denominator.
pub fn rat_bits(x: &BigRat) -> u64 {
    x.numer().bits().max(x.denom().bits())
}

/// Least common multiple of the denominators.
pub fn lcm_denoms<'a>(xs: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Gcd of a list of integers, nonnegative; zero for an empty or all-zero list.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for x in xs {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Formats a rational as `a` or `a/b`.
pub fn fmt_rat(x: &BigRat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rat(s: &str) -> Option<BigRat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRat::new(n, d))
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn height_of_rationals() {
        assert_eq!(rational_height(&rat(1, 2)), 2f64.ln());
        assert_eq!(rational_height(&rat(3, 2)), 3f64.ln());
        assert_eq!(rational_height(&rat(-7, 3)), 7f64.ln());
        assert_eq!(rational_height(&int(0)), 0.0);
    }

    #[test]
    fn ln_of_huge_integer() {
        let n = BigInt::one() << 3000u32;
        let want = 3000.0 * std::f64::consts::LN_2;
        assert!((ln_abs(&n) - want).abs() < 1e-12 * want);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-6/4"), Some(rat(-3, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
        assert_eq!(fmt_rat(&rat(-1, 3)), "-1/3");
    }
}
