//! Resultants of bivariate polynomials with respect to `X`.
//!
//! The Sylvester determinant is evaluated exactly (Bareiss) at enough
//! integer values of `Y` and the resultant recovered by interpolation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::linalg::{det, IntMatrix};
use crate::rational::BigRat;
use crate::upoly::RatPoly;

/// Sylvester matrix of two integer polynomials given by coefficients
/// (lowest degree first, leading coefficient nonzero).
pub fn sylvester(f: &[BigInt], g: &[BigInt]) -> IntMatrix {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for r in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    for r in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[r + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two univariate integer polynomials of positive degree,
/// `lc(f)^deg g · Π g(α)` over the roots `α` of `f`.
pub fn resultant_int(f: &[BigInt], g: &[BigInt]) -> BigInt {
    det(&sylvester(f, g))
}

/// Coefficients of `P(X, y)` in `X` up to the formal degree `deg`, as integers.
fn specialize(p: &BiPoly, y: &BigInt, deg: u32) -> Vec<BigInt> {
    let yr = BigRat::from_integer(y.clone());
    let rows = p.eval_partial_y(&yr);
    (0..=deg as usize).map(|i| rows.coeff(i).to_integer()).collect()
}

/// Newton interpolation through `(x_k, v_k)`, returned in monomial form.
fn interpolate(xs: &[BigRat], vs: &[BigRat]) -> RatPoly {
    let n = xs.len();
    let mut dd = vs.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = RatPoly::zero();
    for i in (0..n).rev() {
        let lin = RatPoly::new(vec![-xs[i].clone(), BigRat::one()]);
        acc = &(&acc * &lin) + &RatPoly::constant(dd[i].clone());
    }
    acc
}

/// `Res_X(P, Q)` as a polynomial in `Y`, using the formal `X`-degrees.
pub fn resultant_wrt_x(p: &BiPoly, q: &BiPoly) -> Result<RatPoly> {
    let (m, n) = (p.deg_x(), q.deg_x());
    if p.is_zero() || q.is_zero() || m == 0 || n == 0 {
        return Err(Error::ZeroXDegree);
    }
    let (cp, cq) = (p.content(), q.content());
    let (pn, qn) = (p.normalized(), q.normalized());
    let bound = (n * pn.deg_y() + m * qn.deg_y()) as i64;
    let mut xs = Vec::with_capacity(bound as usize + 1);
    let mut vs = Vec::with_capacity(bound as usize + 1);
    for k in 0..=bound {
        let y = BigInt::from(k);
        let r = resultant_int(&specialize(&pn, &y, m), &specialize(&qn, &y, n));
        xs.push(BigRat::from_integer(y));
        vs.push(BigRat::from_integer(r));
    }
    let scale = num_traits::pow(cp, n as usize) * num_traits::pow(cq, m as usize);
    Ok(interpolate(&xs, &vs).scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipoly;
    use crate::rational::int;

    fn res(a: &str, b: &str) -> RatPoly {
        resultant_wrt_x(&parse_bipoly(a).unwrap(), &parse_bipoly(b).unwrap()).unwrap()
    }

    #[test]
    fn hand_computed_resultants() {
        assert_eq!(res("x^2 - y", "2*x"), RatPoly::new(vec![int(0), int(-4)]));
        assert_eq!(res("x - y", "x + y"), RatPoly::new(vec![int(0), int(2)]));
        assert!(res("x^2 - y^3 + x*y", "x^2 - y^3 + x*y").is_zero());
    }

    #[test]
    fn rational_coefficients_scale() {
        // root 2Y of X/2 - Y, so lc · (2Y + Y) = 3Y/2
        assert_eq!(res("1/2*x - y", "x + y"), RatPoly::new(vec![int(0), BigRat::new(3.into(), 2.into())]));
    }

    #[test]
    fn zero_degree_is_an_error() {
        let p = parse_bipoly("y^2 + 1").unwrap();
        let q = parse_bipoly("x + y").unwrap();
        assert_eq!(resultant_wrt_x(&p, &q), Err(Error::ZeroXDegree));
    }

    #[test]
    fn conic_discriminant() {
        // Res_X(X^2 - Y^2 - 1, 2X) = 4 * (-(Y^2 + 1))
        assert_eq!(
            res("x^2 - y^2 - 1", "2*x"),
            RatPoly::new(vec![int(-4), int(0), int(-4)])
        );
    }

    #[test]
    fn vanishes_at_repeated_root_fibres() {
        // P(X, 0) = X^2 has a double root, so Res_X(P, P_X) vanishes at Y = 0
        let p = parse_bipoly("x^2 - y^3").unwrap();
        let d = resultant_wrt_x(&p, &p.partial_x()).unwrap();
        assert!(d.eval(&int(0)).is_zero());
        assert!(!d.is_zero());
    }
}
