//! Runge-type curves: the condition on the top form, the explicit bound
//! `115 d⁴ (log(2d) + h_p(P))`, slope heights and a box search for integral
//! points.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::absirr::count_absolute_factors;
use crate::bigfloat::{BigFloat, Cx};
use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::factor::{factor_rat, integer_roots_int, Factorization};
use crate::heights::{compare, proj_height, AlgebraicNumber, Verdict};
use crate::rational::{ln_abs, BigRat};
use crate::roots::{isolate_roots, Approx};
use crate::upoly::IntPoly;

/// Outcome of [`runge_condition`], with the factorization of `P_d(X, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RungeCondition {
    #[serde(rename = "condition")]
    pub holds: bool,
    pub d: u32,
    #[serde(serialize_with = "ser_factors")]
    pub factors: Option<Factorization>,
    /// Why the condition fails, when it does.
    pub reason: Option<String>,
}

/// `deg_X P = deg_Y P = deg P = d ≥ 2` and `P_d(X, 1)` has at least two
/// distinct irreducible factors over ℚ, for absolutely irreducible `P`.
pub fn runge_condition(p: &BiPoly) -> Result<RungeCondition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.normalized();
    let d = p.total_degree();
    let top = p.leading_form_dehomogenized();
    let factors = if top.degree() >= 1 { Some(factor_rat(&top)?) } else { None };
    let fail = |reason: String| {
        Ok(RungeCondition {
            holds: false,
            d,
            factors: factors.clone(),
            reason: Some(reason),
        })
    };
    if p.deg_x() != d || p.deg_y() != d || d < 2 {
        return fail(format!(
            "degrees differ or are below 2: deg_X = {}, deg_Y = {}, deg = {d}",
            p.deg_x(),
            p.deg_y()
        ));
    }
    match count_absolute_factors(&p) {
        Ok(1) => {}
        Ok(k) => return fail(format!("P has {k} absolutely irreducible factors")),
        Err(e) => return fail(format!("absolute irreducibility check failed: {e}")),
    }
    // X^d and Y^d both occur, so dehomogenizing at Y = 1 keeps every factor
    assert_eq!(top.degree(), d as usize);
    assert!(!top.coeff(0).is_zero());
    let distinct = factors.as_ref().map_or(0, Factorization::distinct);
    if distinct < 2 {
        return fail("P_d(X, 1) is a constant times a power of one irreducible polynomial".into());
    }
    Ok(RungeCondition {
        holds: true,
        d,
        factors,
        reason: None,
    })
}

/// `115 d⁴ (log(2d) + h_p(P))` without checking the condition.
pub fn bound_formula(p: &BiPoly) -> Result<f64> {
    let d = p.total_degree() as f64;
    Ok(115.0 * d.powi(4) * ((2.0 * d).ln() + proj_height(p)?))
}

/// The explicit bound on `log max{1, |x|, |y|}` for integral points.
pub fn runge_bound(p: &BiPoly) -> Result<f64> {
    let c = runge_condition(p)?;
    if !c.holds {
        return Err(Error::Hypothesis(format!(
            "Runge condition fails: {}",
            c.reason.unwrap_or_default()
        )));
    }
    bound_formula(p)
}

/// One slope `t` with `P_d(X, 1)(t) = 0` and the check `h(t) ≤ h_p(P) + log d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlopeCheck {
    pub t: AlgebraicNumber,
    pub h: f64,
    pub h_err: f64,
    pub bound: f64,
    pub verdict: Verdict,
}

/// Every root of `P_d(X, 1)`, one entry per distinct root.
pub fn slope_data(p: &BiPoly, tol: f64) -> Result<Vec<SlopeCheck>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p = p.normalized();
    let d = p.total_degree();
    if p.coeff(d, 0).is_zero() {
        return Err(Error::Hypothesis("the coefficient of X^d vanishes".into()));
    }
    let bound = proj_height(&p)? + (d as f64).ln();
    let mut out = Vec::new();
    for (g, _) in factor_rat(&p.leading_form_dehomogenized())?.factors {
        for i in 0..g.degree() {
            let t = AlgebraicNumber::from_irreducible(g.clone(), i);
            let h = t.weil_height(tol)?;
            out.push(SlopeCheck {
                t,
                h: h.value,
                h_err: h.err,
                bound,
                verdict: compare(h, Approx::exact(bound)),
            });
        }
    }
    Ok(out)
}

/// Integer coefficients of `P(c, Y)` (or `P(X, c)`) as polynomials in `c`.
fn fibre_coeffs(p: &BiPoly, swap: bool) -> Vec<Vec<BigInt>> {
    let p = if swap { p.swap_xy() } else { p.clone() };
    p.coeffs_in_y()
        .iter()
        .map(|c| c.coeffs().iter().map(|v| v.to_integer()).collect())
        .collect()
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
}

/// Integer `y` with `P(x, y) = 0` for one integer `x`; a vanishing fibre
/// contributes `|y| ≤ limit`.
fn fibre_roots(coeffs: &[Vec<BigInt>], x: i64, limit: i64) -> Vec<BigInt> {
    let x = BigInt::from(x);
    let f = IntPoly::new(coeffs.iter().map(|c| eval_int(c, &x)).collect());
    if f.is_zero() {
        return (-limit..=limit).map(BigInt::from).collect();
    }
    integer_roots_int(&f)
}

/// Integral points with `|x| ≤ limit` or `|y| ≤ limit`, sorted and
/// deduplicated. A line `X = c` or `Y = c` inside the curve only contributes
/// its points in the box.
pub fn integral_points(p: &BiPoly, limit: u64) -> Result<Vec<(BigInt, BigInt)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let limit = i64::try_from(limit).map_err(|_| Error::Resource("search limit too large".into()))?;
    let p = p.normalized();
    let cx = fibre_coeffs(&p, false);
    let cy = fibre_coeffs(&p, true);
    let mut pts: Vec<(BigInt, BigInt)> = (-limit..=limit)
        .into_par_iter()
        .flat_map_iter(|c| {
            let a = fibre_roots(&cx, c, limit).into_iter().map(move |y| (BigInt::from(c), y));
            let b = fibre_roots(&cy, c, limit).into_iter().map(move |x| (x, BigInt::from(c)));
            a.chain(b).collect::<Vec<_>>()
        })
        .collect();
    pts.sort();
    pts.dedup();
    for (x, y) in &pts {
        let v = p.eval(&BigRat::from_integer(x.clone()), &BigRat::from_integer(y.clone()));
        if !v.is_zero() {
            return Err(Error::Invalid(format!("search returned ({x}, {y}) off the curve")));
        }
    }
    Ok(pts)
}

/// `100 d (log((4d)^d d(d+1)) + 2d h_p(P))`.
pub fn hz_threshold(d: u32, hp: f64) -> f64 {
    let df = d as f64;
    100.0 * df * (df * (4.0 * df).ln() + (df * (df + 1.0)).ln() + 2.0 * df * hp)
}

/// `min_σ log max{1, |x − σ(t) y|} ≤ ((d−1)/d) h(x) + 10.4 d (log(2d) + h_p)^{1/2} h(x)^{1/2}`
/// at one integral point, for the slopes that are roots of `g`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SigmaCheck {
    #[serde(serialize_with = "ser_int")]
    pub x: BigInt,
    #[serde(serialize_with = "ser_int")]
    pub y: BigInt,
    pub slope_poly: String,
    pub lhs: f64,
    pub rhs: f64,
    pub verdict: Verdict,
}

fn sigma_check(g: &IntPoly, x: &BigInt, y: &BigInt, d: u32, hp: f64) -> Result<SigmaCheck> {
    let bits = x.bits().max(y.bits()) + 96;
    let radius = BigRat::new(BigInt::from(1), BigInt::from(1) << bits as usize);
    let prec = 2 * bits + 64;
    let xf = Cx::real(BigFloat::from_int(x));
    let yf = BigFloat::from_int(y);
    let mut best: Option<Approx> = None;
    for b in isolate_roots(g, &radius)? {
        let c = b.center_cx();
        let v = xf.sub(&Cx { re: c.re.mul(&yf, prec), im: c.im.mul(&yf, prec) }, prec);
        // |σ(t) − c| ≤ 2^-bits, so |v| moves by at most |y| 2^-bits < 2^-96
        let a = if v.is_zero() {
            Approx { value: 0.0, err: 1e-28 }
        } else {
            let l = v.ln_abs(64);
            let rel = if l > -60.0 { (-96.0 * std::f64::consts::LN_2 - l).exp() * 2.0 } else { 1.0 };
            let hi = (l + rel.ln_1p()).max(0.0);
            let lo = if rel < 1.0 { (l + (-rel).ln_1p()).max(0.0) } else { 0.0 };
            let slack = 8.0 * f64::EPSILON * (1.0 + l.abs());
            Approx { value: 0.5 * (lo + hi), err: 0.5 * (hi - lo) + slack }
        };
        if best.is_none_or(|m| a.value < m.value) {
            best = Some(a);
        }
    }
    let lhs = best.unwrap_or(Approx::exact(0.0));
    let hx = ln_abs(x);
    let df = d as f64;
    let rhs = (df - 1.0) / df * hx + 10.4 * df * ((2.0 * df).ln() + hp).sqrt() * hx.sqrt();
    Ok(SigmaCheck {
        x: x.clone(),
        y: y.clone(),
        slope_poly: g.to_string_in("x"),
        lhs: lhs.value,
        rhs,
        verdict: compare(lhs, Approx::exact(rhs)),
    })
}

/// Certificate and search results for one curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RungeReport {
    pub d: u32,
    #[serde(rename = "condition")]
    pub condition_holds: bool,
    #[serde(rename = "factors", serialize_with = "ser_factors")]
    pub leading_form_factors: Option<Factorization>,
    pub bound_log: f64,
    #[serde(rename = "limit")]
    pub searched_limit: u64,
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<(BigInt, BigInt)>,
    pub certificate: String,
    pub slope_checks: Vec<SlopeCheck>,
    pub hz_threshold: f64,
    pub sigma_checks: Vec<SigmaCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

/// Condition, bound, slope heights, box search and the certificate text.
pub fn certify(p: &BiPoly, limit: u64, tol: f64) -> Result<RungeReport> {
    let cond = runge_condition(p)?;
    let p = p.normalized();
    let d = cond.d;
    let hp = proj_height(&p)?;
    let bound_log = bound_formula(&p)?;
    let points = integral_points(&p, limit)?;
    let slope_checks = if d >= 1 && !p.coeff(d, 0).is_zero() { slope_data(&p, tol)? } else { Vec::new() };
    let certificate = if cond.holds && (limit as f64).ln() >= bound_log {
        "complete list of integral points".to_string()
    } else if cond.holds {
        format!(
            "complete within |x|,|y| ≤ {limit}; theoretical completeness bound is exp({bound_log:.6})"
        )
    } else {
        format!("complete within |x|,|y| ≤ {limit}; the Runge condition fails, so no completeness bound applies")
    };
    let threshold = hz_threshold(d, hp);
    let mut sigma_checks = Vec::new();
    if cond.holds {
        let slopes = cond.factors.as_ref().map(|f| f.factors.clone()).unwrap_or_default();
        for (x, y) in &points {
            if ln_abs(x) <= threshold {
                continue;
            }
            for (g, _) in &slopes {
                sigma_checks.push(sigma_check(g, x, y, d, hp)?);
            }
        }
    }
    Ok(RungeReport {
        d,
        condition_holds: cond.holds,
        leading_form_factors: cond.factors,
        bound_log,
        searched_limit: limit,
        points,
        certificate,
        slope_checks,
        hz_threshold: threshold,
        sigma_checks,
        reason: cond.reason,
    })
}

fn ser_int<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&x.to_string()),
    }
}

fn ser_points<S: Serializer>(pts: &[(BigInt, BigInt)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct I<'a>(&'a BigInt);
    impl Serialize for I<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            ser_int(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(pts.len()))?;
    for (x, y) in pts {
        seq.serialize_element(&[I(x), I(y)])?;
    }
    seq.end()
}

fn ser_factors<S: Serializer>(f: &Option<Factorization>, s: S) -> std::result::Result<S::Ok, S::Error> {
    f.as_ref().map(Factorization::factor_list).unwrap_or_default().serialize(s)
}
