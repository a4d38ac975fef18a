//! The derivation `D(A) = ∂P/∂Y·∂A/∂X − ∂P/∂X·∂A/∂Y`, branch series at
//! regular zeros, and vanishing orders computed both ways.

use num_traits::Zero;
use serde::Serialize;

use crate::auxiliary::AuxParams;
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::rational::BigRat;
use crate::Limits;

pub fn apply_d(p: &BiPoly, a: &BiPoly) -> BiPoly {
    &(&p.partial_y() * &a.partial_x()) - &(&p.partial_x() * &a.partial_y())
}

/// `D^s(A)`, aborting when a coefficient outgrows the bit budget.
pub fn iterate_d(p: &BiPoly, a: &BiPoly, s: u32, limits: &Limits) -> Result<BiPoly> {
    let (px, py) = (p.partial_x(), p.partial_y());
    let mut cur = a.clone();
    for _ in 0..s {
        cur = &(&py * &cur.partial_x()) - &(&px * &cur.partial_y());
        cur.check_bits(limits.bits_cap)?;
    }
    Ok(cur)
}

type Series = Vec<BigRat>;

fn series_mul(a: &[BigRat], b: &[BigRat], n: usize) -> Series {
    let mut out = vec![BigRat::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Inverse of a series with nonzero constant term, to `n` terms.
fn series_inv(a: &[BigRat], n: usize) -> Series {
    let mut out = vec![BigRat::zero(); n];
    let c0 = a[0].recip();
    out[0] = c0.clone();
    for k in 1..n {
        let mut s = BigRat::zero();
        for j in 1..=k.min(a.len() - 1) {
            s += &a[j] * &out[k - j];
        }
        out[k] = -s * &c0;
    }
    out
}

/// `F(T, E(T))` truncated to `n` terms, for `F` in the variables `(T, E)`.
fn substitute(f: &BiPoly, e: &[BigRat], n: usize) -> Series {
    let mut tpow_e = vec![vec![BigRat::zero(); n]];
    tpow_e[0][0] = BigRat::from_integer(1.into());
    for _ in 0..f.deg_y() {
        let next = series_mul(tpow_e.last().unwrap(), e, n);
        tpow_e.push(next);
    }
    let mut out = vec![BigRat::zero(); n];
    for (&(i, j), c) in f.terms() {
        let i = i as usize;
        if i >= n {
            continue;
        }
        for (k, v) in tpow_e[j as usize].iter().enumerate().take(n - i) {
            if !v.is_zero() {
                out[i + k] += c * v;
            }
        }
    }
    out
}

/// Formal branch through a regular zero: `P(x + T, y + E(T)) = 0`, or with
/// `swapped`, `P(x + E(T), y + T) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSeries {
    pub x: BigRat,
    pub y: BigRat,
    pub coeffs: Vec<BigRat>,
    pub order: usize,
    pub swapped: bool,
}

impl BranchSeries {
    /// `ord_T A(x + T, y + E)`, or `None` if it vanishes to the truncation order.
    pub fn order_of(&self, a: &BiPoly) -> Option<usize> {
        let a = if self.swapped { a.swap_xy() } else { a.clone() };
        let (u, v) = if self.swapped { (&self.y, &self.x) } else { (&self.x, &self.y) };
        let s = substitute(&a.shift(u, v), &self.coeffs, self.order);
        s.iter().position(|c| !c.is_zero())
    }
}

/// Partial derivatives at a point of the curve, checking membership.
fn regular_point(p: &BiPoly, x: &BigRat, y: &BigRat) -> Result<(BigRat, BigRat)> {
    if !p.eval(x, y).is_zero() {
        return Err(Error::NotOnCurve);
    }
    let px = p.partial_x().eval(x, y);
    let py = p.partial_y().eval(x, y);
    if px.is_zero() && py.is_zero() {
        return Err(Error::NotRegular);
    }
    Ok((px, py))
}

/// Series Newton iteration from `E = 0`, doubling the correct terms per step.
pub fn branch_series(p: &BiPoly, x: &BigRat, y: &BigRat, order: usize) -> Result<BranchSeries> {
    let (_, py) = regular_point(p, x, y)?;
    let swapped = py.is_zero();
    let (f, u, v) = if swapped { (p.swap_xy(), y, x) } else { (p.clone(), x, y) };
    let f = f.shift(u, v);
    let fe = f.partial_y();
    let order = order.max(1);
    let mut e = vec![BigRat::zero(); order];
    let mut prec = 1;
    while prec < order {
        prec = (2 * prec).min(order);
        let val = substitute(&f, &e, prec);
        let der = substitute(&fe, &e, prec);
        let step = series_mul(&val, &series_inv(&der, prec), prec);
        for (k, s) in step.into_iter().enumerate() {
            e[k] -= s;
        }
    }
    debug_assert!(substitute(&f, &e, order).iter().all(|c| c.is_zero()));
    Ok(BranchSeries {
        x: x.clone(),
        y: y.clone(),
        coeffs: e,
        order,
        swapped,
    })
}

/// `t + pq − p − q` when `deg P = p + q`, else `None`.
pub fn multiplicity_bound(p: &BiPoly, params: &AuxParams) -> Option<i64> {
    let (dp, dq) = (p.deg_x() as i64, p.deg_y() as i64);
    (p.total_degree() as i64 == dp + dq).then(|| params.t + dp * dq - dp - dq)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingOrder {
    /// Smallest `s` with `D^s(A)(x, y) ≠ 0`.
    pub s: u32,
    /// `ord_T A(x + T, y + E)` along the branch.
    pub series_order: u32,
    pub swapped: bool,
    /// `t + pq − p − q` when it applies.
    pub bound: Option<i64>,
    pub within_bound: Option<bool>,
}

/// Largest order tried before giving up.
pub const MAX_ORDER: u32 = 512;

pub fn vanishing_order(
    p: &BiPoly,
    a: &BiPoly,
    x: &BigRat,
    y: &BigRat,
    params: Option<&AuxParams>,
    limits: &Limits,
) -> Result<VanishingOrder> {
    regular_point(p, x, y)?;
    if a.is_zero() || p.divides(a) {
        return Err(Error::DivisibleByP);
    }
    let (px, py) = (p.partial_x(), p.partial_y());
    let mut cur = a.clone();
    let mut s = 0u32;
    while cur.eval(x, y).is_zero() {
        if s >= MAX_ORDER {
            return Err(Error::Resource(format!("vanishing order above {MAX_ORDER}")));
        }
        cur = &(&py * &cur.partial_x()) - &(&px * &cur.partial_y());
        cur.check_bits(limits.bits_cap)?;
        s += 1;
    }
    let mut trunc = 8usize;
    let (series_order, swapped) = loop {
        let br = branch_series(p, x, y, trunc)?;
        if let Some(o) = br.order_of(a) {
            break (o as u32, br.swapped);
        }
        if trunc as u32 >= 2 * MAX_ORDER {
            return Err(Error::Resource("branch series truncation cap reached".into()));
        }
        trunc *= 2;
    };
    if series_order != s {
        return Err(Error::Invalid(format!(
            "iterated D gives order {s} but the branch series gives {series_order}"
        )));
    }
    let bound = params.and_then(|pr| multiplicity_bound(p, pr));
    Ok(VanishingOrder {
        s,
        series_order,
        swapped,
        bound,
        within_bound: bound.map(|b| s as i64 <= b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipoly;
    use crate::rational::int;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s).unwrap()
    }

    #[test]
    fn d_chain() {
        let p = bp("y - x^2");
        let l = Limits::default();
        assert_eq!(iterate_d(&p, &bp("y"), 1, &l).unwrap(), bp("2*x"));
        assert_eq!(iterate_d(&p, &bp("y"), 2, &l).unwrap(), bp("2"));
        assert!(iterate_d(&p, &bp("y"), 3, &l).unwrap().is_zero());
        assert!(apply_d(&bp("y^2 - x^3 + x"), &bp("y^2 - x^3 + x")).is_zero());
    }

    #[test]
    fn series() {
        let b = branch_series(&bp("y - x^2"), &int(0), &int(0), 5).unwrap();
        assert_eq!(b.coeffs, vec![int(0), int(0), int(1), int(0), int(0)]);
        let b = branch_series(&bp("x*y - 1"), &int(1), &int(1), 6).unwrap();
        assert_eq!(b.coeffs, vec![int(0), int(-1), int(1), int(-1), int(1), int(-1)]);
        assert_eq!(branch_series(&bp("y^2 - x^3"), &int(0), &int(0), 4), Err(Error::NotRegular));
        assert_eq!(branch_series(&bp("y^2 - x^3"), &int(1), &int(0), 4), Err(Error::NotOnCurve));
    }

    #[test]
    fn swapped_branch() {
        // vertical tangent at (1, 0) on x^2 + y^2 = 1
        let p = bp("x^2 + y^2 - 1");
        let b = branch_series(&p, &int(1), &int(0), 6).unwrap();
        assert!(b.swapped);
        assert_eq!(b.order_of(&p), None);
    }

    #[test]
    fn orders() {
        let p = bp("y - x^2");
        let l = Limits::default();
        let v = vanishing_order(&p, &bp("y"), &int(0), &int(0), None, &l).unwrap();
        assert_eq!((v.s, v.series_order), (2, 2));
        let v = vanishing_order(&p, &bp("y + 1"), &int(0), &int(0), None, &l).unwrap();
        assert_eq!(v.s, 0);
        assert_eq!(
            vanishing_order(&p, &bp("(y - x^2)*x"), &int(0), &int(0), None, &l),
            Err(Error::DivisibleByP)
        );
    }
}
