//! Certified complex root isolation and logarithmic Mahler measure.
//!
//! Approximations come from Aberth–Ehrlich iteration in [`BigFloat`]
//! arithmetic. They are certified afterwards with exact Gaussian-integer
//! evaluation: the disks `D(z_i, n·|f(z_i)| / |lc · Π_{j≠i}(z_i − z_j)|)`
//! cover the roots and every connected component of their union holds as
//! many roots as disks, so pairwise disjoint disks isolate one root each.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bigfloat::{BigFloat, Cx};
use crate::error::{Error, Result};
use crate::rational::{ln_abs, BigRat};
use crate::upoly::IntPoly;

/// Working precision is doubled on certification failure up to this cap.
const MAX_PREC: u64 = 1 << 16;

/// Disk `|z − center| ≤ radius` holding exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBall {
    center: Cx,
    radius: BigRat,
    real: bool,
}

impl RootBall {
    fn exact_zero() -> Self {
        RootBall {
            center: Cx::zero(),
            radius: BigRat::zero(),
            real: true,
        }
    }

    /// Exact center as a pair of dyadic rationals.
    pub fn center(&self) -> (BigRat, BigRat) {
        (self.center.re.to_rat(), self.center.im.to_rat())
    }

    pub fn center_cx(&self) -> &Cx {
        &self.center
    }

    pub fn center_f64(&self) -> (f64, f64) {
        (self.center.re.to_f64(), self.center.im.to_f64())
    }

    pub fn radius(&self) -> &BigRat {
        &self.radius
    }

    /// Whether the isolated root is known to be real.
    pub fn is_real(&self) -> bool {
        self.real
    }

    /// `ln |center|`, or `-inf` for the origin.
    pub fn ln_center_abs(&self) -> f64 {
        if self.center.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.center.ln_abs(64)
        }
    }
}

fn cmp_balls(a: &RootBall, b: &RootBall) -> Ordering {
    let (ar, ai) = a.center();
    let (br, bi) = b.center();
    ar.cmp(&br).then(ai.cmp(&bi))
}

/// Isolates the distinct roots of a nonzero integer polynomial with disks of
/// radius at most `target`, sorted by real then imaginary part.
pub fn isolate_roots(f: &IntPoly, target: &BigRat) -> Result<Vec<RootBall>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = f.squarefree_part();
    let mut balls = Vec::new();
    if g.zero_root_multiplicity() > 0 {
        balls.push(RootBall::exact_zero());
    }
    let h = g.strip_zero_roots();
    if h.degree() > 0 {
        balls.extend(isolate_nonzero_squarefree(&h, target)?);
    }
    balls.sort_by(cmp_balls);
    Ok(balls)
}

fn isolate_nonzero_squarefree(h: &IntPoly, target: &BigRat) -> Result<Vec<RootBall>> {
    let mut prec: u64 = 64;
    let mut offset = 0.4;
    let mut z = initial_guesses(h, offset);
    let mut failures = 0;
    loop {
        aberth(h, &mut z, prec);
        match certify(h, &z) {
            Some(balls) if balls.iter().all(|b| b.radius <= *target) => return Ok(balls),
            Some(_) => failures = 0,
            None => {
                failures += 1;
                // stuck approximations: restart from rotated guesses
                if failures >= 2 {
                    offset += 0.9;
                    z = initial_guesses(h, offset);
                    failures = 0;
                }
            }
        }
        prec *= 2;
        if prec > MAX_PREC {
            return Err(Error::Resource(format!(
                "root isolation needs more than {MAX_PREC} bits"
            )));
        }
    }
}

fn log2_abs(n: &BigInt) -> f64 {
    ln_abs(n) / std::f64::consts::LN_2
}

/// Starting points on circles whose radii come from the Newton polygon of
/// `(k, log2 |c_k|)`.
fn initial_guesses(h: &IntPoly, offset: f64) -> Vec<Cx> {
    let pts: Vec<(usize, f64)> = h
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, log2_abs(c)))
        .collect();
    // upper convex hull
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(h.degree());
    for (seg, w) in hull.windows(2).enumerate() {
        let (i, li) = w[0];
        let (j, lj) = w[1];
        let k = j - i;
        let log2r = (li - lj) / k as f64;
        let e = log2r.floor();
        let frac = 2f64.powf(log2r - e);
        for l in 0..k {
            let theta = 2.0 * std::f64::consts::PI * l as f64 / k as f64 + offset + 0.37 * seg as f64;
            out.push(Cx {
                re: BigFloat::from_f64_exp(frac * theta.cos(), e as i64),
                im: BigFloat::from_f64_exp(frac * theta.sin(), e as i64),
            });
        }
    }
    out
}

fn horner(h: &IntPoly, z: &Cx, prec: u64) -> (Cx, Cx) {
    let c = h.coeffs();
    let n = c.len() - 1;
    let mut b = Cx::real(BigFloat::from_int(&c[n]));
    let mut db = Cx::zero();
    for k in (0..n).rev() {
        db = db.mul(z, prec).add(&b, prec);
        b = b.mul(z, prec).add(&Cx::real(BigFloat::from_int(&c[k])), prec);
    }
    (b, db)
}

fn aberth(h: &IntPoly, z: &mut [Cx], prec: u64) {
    let n = z.len();
    let wp = prec + 16;
    let one = Cx::real(BigFloat::from_int(&BigInt::one()));
    let max_iter = 60 + 8 * n;
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..n {
            let (fv, dfv) = horner(h, &z[i], wp);
            if fv.is_zero() {
                continue;
            }
            let scale = z[i].msb().max(-(prec as i64));
            if dfv.is_zero() {
                z[i] = z[i].add(&Cx::real(BigFloat::from_parts(BigInt::one(), scale - 20)), wp);
                converged = false;
                continue;
            }
            let ratio = fv.div(&dfv, wp);
            let mut s = Cx::zero();
            for j in 0..n {
                if j == i {
                    continue;
                }
                let d = z[i].sub(&z[j], wp);
                if d.is_zero() {
                    continue;
                }
                s = s.add(&one.div(&d, wp), wp);
            }
            let denom = one.sub(&ratio.mul(&s, wp), wp);
            let w = if denom.is_zero() { ratio } else { ratio.div(&denom, wp) };
            z[i] = z[i].sub(&w, prec);
            if !w.is_zero() && w.msb() > scale - prec as i64 + 6 {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
}

fn gauss_mul(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn norm_sq(a: &(BigInt, BigInt)) -> BigInt {
    &a.0 * &a.0 + &a.1 * &a.1
}

/// Rational upper bound of `sqrt(num / den)` with roughly 50 correct bits.
fn sqrt_upper(num: &BigInt, den: &BigInt) -> BigRat {
    if num.is_zero() {
        return BigRat::zero();
    }
    let t = num.bits() as i64 - den.bits() as i64;
    let s = ((110 - t) / 2).max(0) as usize;
    let q = (num << (2 * s)) / den;
    let r = q.sqrt() + BigInt::one();
    BigRat::new(r, BigInt::one() << s)
}

/// Exact certification of approximations `z` of the roots of squarefree `h`.
fn certify(h: &IntPoly, z: &[Cx]) -> Option<Vec<RootBall>> {
    let n = h.degree();
    if z.len() != n {
        return None;
    }
    let e: i64 = z
        .iter()
        .flat_map(|c| [&c.re, &c.im])
        .filter(|x| !x.is_zero())
        .map(|x| -x.exponent())
        .max()
        .unwrap_or(0)
        .max(0);
    let to_scaled = |x: &BigFloat| -> BigInt {
        if x.is_zero() {
            BigInt::zero()
        } else {
            x.mantissa() << (x.exponent() + e) as usize
        }
    };
    let zs: Vec<(BigInt, BigInt)> = z.iter().map(|c| (to_scaled(&c.re), to_scaled(&c.im))).collect();
    let s = BigInt::one() << e as usize;
    let coeffs = h.coeffs();
    let lc = &coeffs[n];

    let mut spow = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        spow[k] = &spow[k - 1] * &s;
    }
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = (lc.clone(), BigInt::zero());
        for k in (0..n).rev() {
            acc = gauss_mul(&acc, &zs[i]);
            acc.0 += &coeffs[k] * &spow[n - k];
        }
        let mut prod = BigInt::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let d = norm_sq(&(&zs[i].0 - &zs[j].0, &zs[i].1 - &zs[j].1));
            if d.is_zero() {
                return None;
            }
            prod *= d;
        }
        let nn = BigInt::from(n * n);
        let num = nn * norm_sq(&acc);
        let den = lc * lc * prod;
        radii.push(sqrt_upper(&num, &den));
    }

    let mut centers: Vec<(BigRat, BigRat)> = zs
        .iter()
        .map(|(a, b)| (BigRat::from_integer(a.clone()), BigRat::from_integer(b.clone())))
        .collect();
    let mut real = vec![false; n];
    for i in 0..n {
        if centers[i].1.abs() <= radii[i] {
            radii[i] = &radii[i] + centers[i].1.abs();
            centers[i].1 = BigRat::zero();
            real[i] = true;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let dr = &centers[i].0 - &centers[j].0;
            let di = &centers[i].1 - &centers[j].1;
            let d2 = &dr * &dr + &di * &di;
            let rs = &radii[i] + &radii[j];
            if rs.clone() * rs >= d2 {
                return None;
            }
        }
    }
    let sr = BigRat::from_integer(s);
    Some(
        (0..n)
            .map(|i| {
                let mut center = z[i].clone();
                if real[i] {
                    center.im = BigFloat::zero();
                }
                RootBall {
                    center,
                    radius: &radii[i] / &sr,
                    real: real[i],
                }
            })
            .collect(),
    )
}

/// A real number with a certified absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct Approx {
    pub value: f64,
    pub err: f64,
}

impl Approx {
    pub fn exact(value: f64) -> Self {
        Approx {
            value,
            err: 4.0 * f64::EPSILON * value.abs(),
        }
    }

    pub fn lo(&self) -> f64 {
        self.value - self.err
    }

    pub fn hi(&self) -> f64 {
        self.value + self.err
    }

    pub fn scale(&self, s: f64) -> Approx {
        Approx {
            value: self.value * s,
            err: self.err * s.abs() + f64::EPSILON * (self.value * s).abs(),
        }
    }
}

fn ln_rat(r: &BigRat) -> f64 {
    ln_abs(r.numer()) - ln_abs(r.denom())
}

/// Bounds on `ln max(1, |ρ|)` for the root `ρ` in the ball.
fn log_max1(ball: &RootBall) -> Approx {
    let r = ball.radius();
    let l = ball.ln_center_abs();
    let (lo, hi) = if l == f64::NEG_INFINITY {
        (0.0, if r.is_zero() { 0.0 } else { ln_rat(r).max(0.0) })
    } else {
        let rr = if r.is_zero() { 0.0 } else { (ln_rat(r) - l).exp() };
        let slack = 4.0 * f64::EPSILON * (1.0 + l.abs());
        let hi = (l + rr.ln_1p()).max(0.0) + slack;
        let lo = if rr < 1.0 { (l + (-rr).ln_1p() - slack).max(0.0) } else { 0.0 };
        (lo, hi)
    };
    Approx {
        value: 0.5 * (lo + hi),
        err: 0.5 * (hi - lo),
    }
}

/// Rational number close to `2^-k` with `2^-k ≤ x`.
fn pow2_below(x: f64) -> BigRat {
    let k = (-x.log2()).ceil().max(0.0) as usize;
    BigRat::new(BigInt::one(), BigInt::one() << k)
}

/// `ln M(f) = ln|lc f| + Σ ln max(1, |ρ|)` over the roots with multiplicity,
/// with a certified absolute error.
pub fn mahler_measure_log(f: &IntPoly, tol: f64) -> Result<Approx> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree().max(1) as f64;
    let target = pow2_below(tol / (8.0 * n));
    let mut value = ln_abs(&f.lead());
    let mut err = 2.0 * f64::EPSILON * value.abs();
    for (g, mult) in f.squarefree_decomposition() {
        for b in isolate_roots(&g, &target)? {
            let a = log_max1(&b);
            value += mult as f64 * a.value;
            err += mult as f64 * a.err;
        }
    }
    err += (n + 2.0) * 2.0 * f64::EPSILON * value.abs().max(1.0);
    Ok(Approx { value, err })
}

/// Numerical modulus of a ball center, for diagnostics.
pub fn center_abs_f64(b: &RootBall) -> f64 {
    b.ln_center_abs().exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn tiny() -> BigRat {
        BigRat::new(BigInt::one(), BigInt::from(10).pow(12))
    }

    #[test]
    fn sqrt_two() {
        let balls = isolate_roots(&ip(&[-2, 0, 1]), &tiny()).unwrap();
        assert_eq!(balls.len(), 2);
        let s2 = std::f64::consts::SQRT_2;
        assert!((balls[0].center_f64().0 + s2).abs() < 1e-12);
        assert!((balls[1].center_f64().0 - s2).abs() < 1e-12);
        assert!(balls.iter().all(|b| b.is_real() && b.radius() <= &tiny()));
    }

    #[test]
    fn double_root_collapses() {
        let balls = isolate_roots(&ip(&[0, 0, 1]), &tiny()).unwrap();
        assert_eq!(balls.len(), 1);
        assert_eq!(balls[0].center(), (BigRat::zero(), BigRat::zero()));
    }

    #[test]
    fn plus_minus_i() {
        let balls = isolate_roots(&ip(&[1, 0, 1]), &tiny()).unwrap();
        assert_eq!(balls.len(), 2);
        let (r0, i0) = balls[0].center_f64();
        let (r1, i1) = balls[1].center_f64();
        assert!(r0.abs() < 1e-12 && r1.abs() < 1e-12);
        assert!((i0 + 1.0).abs() < 1e-12 && (i1 - 1.0).abs() < 1e-12);
        assert!(!balls[0].is_real());
    }

    #[test]
    fn huge_and_tiny_roots() {
        // (x - 2^150)(2^150 x - 1)
        let big = BigInt::one() << 150usize;
        let f = &IntPoly::new(vec![-big.clone(), BigInt::one()]) * &IntPoly::new(vec![BigInt::from(-1), big]);
        let balls = isolate_roots(&f, &tiny()).unwrap();
        assert_eq!(balls.len(), 2);
        assert!((balls[0].ln_center_abs() + 150.0 * std::f64::consts::LN_2).abs() < 1e-9);
        assert!((balls[1].ln_center_abs() - 150.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn clustered_roots() {
        // (x - 1)(x - 1 - 10^-30)
        let d = BigInt::from(10).pow(30);
        let a = IntPoly::new(vec![-d.clone(), d.clone()]);
        let b = IntPoly::new(vec![-(d.clone() + BigInt::one()), d]);
        let balls = isolate_roots(&(&a * &b), &tiny()).unwrap();
        assert_eq!(balls.len(), 2);
    }

    #[test]
    fn mahler_examples() {
        let m = mahler_measure_log(&ip(&[-1, 0, 2]), 1e-12).unwrap();
        assert!((m.value - 2f64.ln()).abs() < 1e-12 && m.err <= 1e-12);
        let m = mahler_measure_log(&ip(&[-3, 1]), 1e-12).unwrap();
        assert!((m.value - 3f64.ln()).abs() < 1e-12);
        let m = mahler_measure_log(&ip(&[-6, 0, 1]), 1e-12).unwrap();
        assert!((m.value - 6f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn cyclotomic_measure_is_zero() {
        for f in [ip(&[1, 1, 1]), ip(&[1, 0, 1]), ip(&[1, -1, 1, -1, 1]), ip(&[-1, 0, 0, 0, 0, 0, 1])] {
            let m = mahler_measure_log(&f, 1e-12).unwrap();
            assert!(m.value.abs() <= m.err + 1e-12 && m.err <= 1e-12, "{f}: {m:?}");
        }
    }

    #[test]
    fn count_matches_squarefree_degree() {
        // (x - 3)^2 (x + 1)(x^2 + x + 1)
        let f = &(&ip(&[-3, 1]).pow(2) * &ip(&[1, 1])) * &ip(&[1, 1, 1]);
        let balls = isolate_roots(&f, &tiny()).unwrap();
        assert_eq!(balls.len(), 4);
        let mult: usize = f
            .squarefree_decomposition()
            .iter()
            .map(|(g, m)| g.degree() * *m as usize)
            .sum();
        assert_eq!(mult, f.degree());
    }

    #[test]
    fn wilkinson_like() {
        let mut f = IntPoly::one();
        for k in 1..=12 {
            f = &f * &ip(&[-k, 1]);
        }
        let balls = isolate_roots(&f, &tiny()).unwrap();
        assert_eq!(balls.len(), 12);
        for (k, b) in balls.iter().enumerate() {
            assert!((b.center_f64().0 - (k + 1) as f64).abs() < 1e-10);
            assert!(b.is_real());
        }
    }
}
