//! Auxiliary polynomials `A, B` with `A·Y^m − B ∈ P·ℚ[X, Y] ∖ {0}`.
//!
//! Writing `P·𝔔 = Σ f_ij X^i Y^j` with `deg_X 𝔔 ≤ n − p` and
//! `deg_Y 𝔔 ≤ m − 1`, the coefficients `f_ij` with `q ≤ j ≤ m − 1` are
//! linear forms in the coefficients of `𝔔`. A kernel vector kills them, and
//! the surviving top and bottom rows give `A` and `B`.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::heights::proj_height;
use crate::linalg::{kernel_small, SparseMatrix};
use crate::rational::{gcd_all, lcm_denoms, ln_abs, BigRat};
use crate::Limits;

/// Degrees `m`, `n` and the excess `t = q(n+1) − mp` of unknowns over equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AuxParams {
    pub m: u32,
    pub n: u32,
    pub t: i64,
}

impl AuxParams {
    /// Checks `m ≥ 2q + 1`, `n ≥ p` and `t ≥ 1` for the partial degrees of `P`.
    pub fn new(p: &BiPoly, m: u32, n: u32) -> Result<Self> {
        let (dp, dq) = (p.deg_x(), p.deg_y());
        if dp == 0 || dq == 0 {
            return Err(Error::DegenerateDegree(format!("p = {dp}, q = {dq}")));
        }
        if m < 2 * dq + 1 {
            return Err(Error::Params(format!("m ≥ 2q+1 fails: m = {m}, q = {dq}")));
        }
        if n < dp {
            return Err(Error::Params(format!("n ≥ p fails: n = {n}, p = {dp}")));
        }
        let t = dq as i64 * (n as i64 + 1) - m as i64 * dp as i64;
        if t < 1 {
            return Err(Error::Params(format!("t = q(n+1) − mp ≥ 1 fails: t = {t}")));
        }
        Ok(AuxParams { m, n, t })
    }

    /// Number of unknowns `(n − p + 1)·m`.
    pub fn unknowns(&self, p: &BiPoly) -> usize {
        (self.n - p.deg_x() + 1) as usize * self.m as usize
    }
}

/// `m = q⌈κpq (k/h)^{1/2}⌉`, `n = mp/q + p − 1` with `h = log((p+1)(q+1)) + h_p(P)`.
/// Then `t = pq`.
pub fn choose_params(p: &BiPoly, k: f64, kappa: f64, lambda: f64) -> Result<AuxParams> {
    let (dp, dq) = (p.deg_x(), p.deg_y());
    if dp == 0 || dq < 2 {
        return Err(Error::Hypothesis(format!("need p ≥ 1 and q ≥ 2, got p = {dp}, q = {dq}")));
    }
    let h = (((dp + 1) * (dq + 1)) as f64).ln() + proj_height(p)?;
    if k < lambda * lambda * h {
        return Err(Error::Hypothesis(format!(
            "k ≥ λ²h fails: k = {k}, λ²h = {}",
            lambda * lambda * h
        )));
    }
    let c = (kappa * (dp * dq) as f64 * (k / h).sqrt()).ceil();
    if !(c.is_finite() && c < 1e9) {
        return Err(Error::Resource(format!("m would be {c}·q")));
    }
    let m = dq * c as u32;
    let n = m / dq * dp + dp - 1;
    AuxParams::new(p, m, n)
}

fn col(k: u32, l: u32, m: u32) -> usize {
    (k * m + l) as usize
}

/// One row per `(i, j)` with `0 ≤ i ≤ n`, `q ≤ j ≤ m − 1`, one column per
/// coefficient `q_kl` of `𝔔` (`0 ≤ k ≤ n − p`, `0 ≤ l ≤ m − 1`).
pub fn build_system(p: &BiPoly, params: &AuxParams) -> Result<SparseMatrix> {
    let params = AuxParams::new(p, params.m, params.n)?;
    let (dp, dq) = (p.deg_x(), p.deg_y());
    let (m, n) = (params.m, params.n);
    let mut a = SparseMatrix::new(params.unknowns(p));
    for i in 0..=n {
        for j in dq..m {
            let mut row = Vec::new();
            for (&(a0, b0), c) in p.terms() {
                if a0 > i || b0 > j {
                    continue;
                }
                let (k, l) = (i - a0, j - b0);
                if k <= n - dp && l < m {
                    row.push((col(k, l, m), c.clone()));
                }
            }
            a.push_row(row);
        }
    }
    Ok(a)
}

/// `(A, B, Q)` with `A·Y^m − B = P·Q ≠ 0`, plus the height diagnostic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuxConstruction {
    pub m: u32,
    pub n: u32,
    pub t: i64,
    #[serde(rename = "A")]
    pub a: BiPoly,
    #[serde(rename = "B")]
    pub b: BiPoly,
    #[serde(rename = "Q")]
    pub q: BiPoly,
    #[serde(rename = "hp_AB")]
    pub hp_ab: f64,
    #[serde(rename = "paper_bound")]
    pub height_bound: f64,
    pub within_bound: bool,
}

impl AuxConstruction {
    pub fn params(&self) -> AuxParams {
        AuxParams {
            m: self.m,
            n: self.n,
            t: self.t,
        }
    }
}

/// Projective height of the joint coefficient vector of `A` and `B`.
pub fn joint_height(a: &BiPoly, b: &BiPoly) -> f64 {
    let cs: Vec<BigRat> = a.terms().chain(b.terms()).map(|(_, c)| c.clone()).collect();
    if cs.is_empty() {
        return 0.0;
    }
    let l = lcm_denoms(&cs);
    let ints: Vec<BigInt> = cs
        .iter()
        .map(|c| (c * BigRat::from_integer(l.clone())).to_integer())
        .collect();
    let g = gcd_all(&ints);
    let max = ints.iter().map(|c| c.abs()).max().unwrap();
    ln_abs(&(max / g))
}

/// `m(n−p+1)/t · (log((p+1)(q+1)) + h_p(P)) + log(2nq)/2`.
pub fn height_bound_formula(p: &BiPoly, params: &AuxParams) -> Result<f64> {
    let (dp, dq) = (p.deg_x() as f64, p.deg_y() as f64);
    let (m, n, t) = (params.m as f64, params.n as f64, params.t as f64);
    Ok(m * (n - dp + 1.0) / t * (((dp + 1.0) * (dq + 1.0)).ln() + proj_height(p)?) + (2.0 * n * dq).ln() / 2.0)
}

/// Largest unknown count accepted by [`construct_ab`].
pub const MAX_UNKNOWNS: usize = 1600;

pub fn construct_ab(p: &BiPoly, params: &AuxParams, limits: &Limits) -> Result<AuxConstruction> {
    let params = AuxParams::new(p, params.m, params.n)?;
    let unknowns = params.unknowns(p);
    if unknowns > MAX_UNKNOWNS {
        return Err(Error::Resource(format!(
            "{unknowns} unknowns exceed the limit of {MAX_UNKNOWNS}"
        )));
    }
    p.check_bits(limits.bits_cap)?;
    let (dq, m, n) = (p.deg_y(), params.m, params.n);
    let v = kernel_small(&build_system(p, &params)?)?;
    let mut qpoly = BiPoly::zero();
    for k in 0..=n - p.deg_x() {
        for l in 0..m {
            qpoly.add_term((k, l), v[col(k, l, m)].clone());
        }
    }
    let prod = p * &qpoly;
    let mut a = BiPoly::zero();
    let mut b = BiPoly::zero();
    for (&(i, j), c) in prod.terms() {
        if j >= m {
            a.add_term((i, j - m), c.clone());
        } else if j < dq {
            b.add_term((i, j), -c);
        } else {
            return Err(Error::Invalid("kernel vector leaves a middle coefficient".into()));
        }
    }
    if a.leading_term().is_some_and(|(_, c)| c.is_negative()) {
        a = -&a;
        b = -&b;
        qpoly = -&qpoly;
    }
    let lhs = &a.mul_monomial(0, m) - &b;
    if lhs.is_zero() || lhs != p * &qpoly {
        return Err(Error::Invalid("A·Y^m − B ≠ P·Q".into()));
    }
    if a.deg_x() > n || b.deg_x() > n || a.deg_y() >= dq.max(1) || b.deg_y() >= dq.max(1) {
        return Err(Error::Invalid("degree bounds on A, B fail".into()));
    }
    if a.is_zero() || p.divides(&a) {
        return Err(Error::DivisibleByP);
    }
    a.check_bits(limits.bits_cap)?;
    b.check_bits(limits.bits_cap)?;
    let hp_ab = joint_height(&a, &b);
    let height_bound = height_bound_formula(p, &params)?;
    Ok(AuxConstruction {
        m,
        n,
        t: params.t,
        a,
        b,
        q: qpoly,
        hp_ab,
        height_bound,
        within_bound: hp_ab <= height_bound,
    })
}

/// Whether `P` divides `A·Y^m − B` with the degree bounds of the construction.
pub fn check_construction(p: &BiPoly, c: &AuxConstruction) -> bool {
    let lhs = &c.a.mul_monomial(0, c.m) - &c.b;
    let dq = p.deg_y();
    !lhs.is_zero()
        && lhs.div_exact(p).is_some_and(|q| q == c.q)
        && c.a.deg_x() <= c.n
        && c.b.deg_x() <= c.n
        && c.a.deg_y() < dq
        && c.b.deg_y() < dq
        && !p.divides(&c.a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipoly;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s).unwrap()
    }

    #[test]
    fn params_validation() {
        let p = bp("x - y - 1");
        assert_eq!(AuxParams::new(&p, 3, 3).unwrap().t, 1);
        assert!(matches!(AuxParams::new(&p, 2, 3), Err(Error::Params(s)) if s.contains("m ≥ 2q+1")));
        assert!(matches!(AuxParams::new(&p, 5, 3), Err(Error::Params(s)) if s.contains("t = q(n+1)")));
    }

    #[test]
    fn system_shape() {
        let p = bp("x - y - 1");
        let a = build_system(&p, &AuxParams::new(&p, 3, 3).unwrap()).unwrap();
        assert_eq!(a.ncols(), 9);
        assert_eq!(a.nrows(), 4 * 2);
        assert!(a.sparsity() <= 4);
        assert!(a.nrows() <= a.ncols() - 1);
    }

    #[test]
    fn linear_example() {
        let p = bp("x - y - 1");
        let c = construct_ab(&p, &AuxParams::new(&p, 3, 3).unwrap(), &Limits::default()).unwrap();
        assert_eq!(c.a, BiPoly::one());
        assert_eq!(c.b, bp("(x - 1)^3"));
        assert_eq!(c.q, bp("-(y^2 + (x - 1)*y + (x - 1)^2)"));
        assert!(check_construction(&p, &c));
    }

    #[test]
    fn parameter_choice() {
        let p = bp("y^2 - x^3 + x");
        let k = 25.0 * 12f64.ln();
        let a = choose_params(&p, k, 2.25, 4.98).unwrap();
        assert_eq!((a.m, a.n, a.t), (136, 206, 6));
        assert!(matches!(choose_params(&p, 1.0, 2.25, 4.98), Err(Error::Hypothesis(_))));
        assert!(matches!(choose_params(&bp("x - y"), 100.0, 2.25, 4.98), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn cubic_construction() {
        let p = bp("y^2 - x^3 + x");
        let c = construct_ab(&p, &AuxParams::new(&p, 5, 8).unwrap(), &Limits::default()).unwrap();
        assert!(check_construction(&p, &c));
    }
}
