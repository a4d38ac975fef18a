//! Factorization over ℚ by root clustering, and exact integer roots.
//!
//! After Yun's squarefree decomposition every squarefree part is factored by
//! trying subsets of its roots (real roots and conjugate pairs) in order of
//! size. A subset is a factor exactly when `lc · Π (x − ρ)` has integer
//! coefficients; with roots known to the precision chosen below, rounding
//! recovers those coefficients and exact trial division confirms them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bigfloat::BigFloat;
use crate::error::{Error, Result};
use crate::rational::{fmt_rat, ln_abs, BigRat};
use crate::roots::{isolate_roots, RootBall};
use crate::upoly::{IntPoly, RatPoly};

/// Largest squarefree degree handled by the subset search.
pub const MAX_FACTOR_DEGREE: usize = 24;

/// `unit · Π f_i^{m_i}` with primitive irreducible `f_i` of positive leading
/// coefficient, sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRat,
    pub factors: Vec<(IntPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m).to_rat();
        }
        acc
    }

    /// Number of distinct irreducible factors.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Serializes the factors alone as `[{poly, mult}]`.
    pub fn factor_list(&self) -> Vec<FactorEntry> {
        self.factors
            .iter()
            .map(|(g, m)| FactorEntry {
                poly: g.to_string_in("x"),
                mult: *m,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorEntry {
    pub poly: String,
    pub mult: u32,
}

impl Serialize for Factorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Factorization", 2)?;
        st.serialize_field("unit", &fmt_rat(&self.unit))?;
        st.serialize_field("factors", &self.factor_list())?;
        st.end()
    }
}

/// Complete factorization of a nonzero integer polynomial over ℚ.
pub fn factor_over_q(f: &IntPoly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = Vec::new();
    for (g, mult) in f.squarefree_decomposition() {
        for h in factor_squarefree(&g)? {
            factors.push((h, mult));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let mut lead = BigInt::one();
    for (g, m) in &factors {
        lead *= num_traits::pow(g.lead(), *m as usize);
    }
    let unit = BigRat::new(f.lead(), lead);
    let out = Factorization { unit, factors };
    debug_assert_eq!(out.expand(), f.to_rat());
    Ok(out)
}

/// Factorization of a nonzero rational polynomial; the unit absorbs the
/// rational content.
pub fn factor_rat(f: &RatPoly) -> Result<Factorization> {
    let (c, g) = f.to_int_primitive();
    let mut out = factor_over_q(&g)?;
    out.unit *= c;
    Ok(out)
}

/// Irreducible factors of a primitive squarefree polynomial.
fn factor_squarefree(g: &IntPoly) -> Result<Vec<IntPoly>> {
    let g = g.primitive();
    if g.degree() <= 1 {
        return Ok(vec![g]);
    }
    let mut out = Vec::new();
    let mut g = g;
    if g.zero_root_multiplicity() > 0 {
        out.push(IntPoly::x());
        g = g.strip_zero_roots().primitive();
        if g.degree() == 0 {
            return Ok(out);
        }
    }
    if g.degree() == 1 {
        out.push(g);
        return Ok(out);
    }
    let n = g.degree();
    if n > MAX_FACTOR_DEGREE {
        return Err(Error::Resource(format!(
            "factoring a squarefree part of degree {n} (limit {MAX_FACTOR_DEGREE})"
        )));
    }
    let norm_bits = (ln_abs(&g.norm2_sq()) / 2.0 / std::f64::consts::LN_2).ceil() as u64 + 1;
    let bits = norm_bits + n as u64 + (n as f64).log2().ceil() as u64 + 6;
    let target = BigRat::new(BigInt::one(), BigInt::one() << bits as usize);
    let balls = isolate_roots(&g, &target)?;
    let prec = 2 * bits + 64;
    let units = root_units(&balls, prec);
    out.extend(split_by_subsets(g, units, prec));
    Ok(out)
}

/// Real factor of degree 1 or 2 contributed by a real root or a conjugate pair,
/// as coefficient lists `[c0, c1, (c2)]`.
type Unit = Vec<BigFloat>;

fn root_units(balls: &[RootBall], prec: u64) -> Vec<Unit> {
    let mut units = Vec::new();
    let mut used = vec![false; balls.len()];
    for i in 0..balls.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let c = balls[i].center_cx();
        if balls[i].is_real() {
            units.push(vec![c.re.neg(), BigFloat::from_int(&BigInt::one())]);
            continue;
        }
        // partner: the unused ball closest to the conjugate
        let (re, im) = balls[i].center_f64();
        let j = (0..balls.len())
            .filter(|&j| !used[j] && !balls[j].is_real())
            .min_by(|&a, &b| {
                let da = dist2(balls[a].center_f64(), (re, -im));
                let db = dist2(balls[b].center_f64(), (re, -im));
                da.total_cmp(&db)
            });
        if let Some(j) = j {
            used[j] = true;
        }
        // x^2 − 2 Re z x + |z|^2
        let two = BigInt::from(2);
        units.push(vec![
            c.norm_sq(prec),
            c.re.mul_int(&two, prec).neg(),
            BigFloat::from_int(&BigInt::one()),
        ]);
    }
    units
}

fn dist2(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)
}

fn poly_mul(a: &[BigFloat], b: &[BigFloat], prec: u64) -> Vec<BigFloat> {
    let mut out = vec![BigFloat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y, prec), prec);
        }
    }
    out
}

/// Rounds `lc · prod` to an integer polynomial when every coefficient is
/// within 1/4 of an integer.
fn round_candidate(lc: &BigInt, prod: &[BigFloat], prec: u64) -> Option<IntPoly> {
    let mut coeffs = Vec::with_capacity(prod.len());
    for c in prod {
        let v = c.mul_int(lc, prec);
        let r = v.round_to_int();
        let diff = v.sub(&BigFloat::from_int(&r), prec);
        if diff.to_f64().abs() >= 0.25 {
            return None;
        }
        coeffs.push(r);
    }
    Some(IntPoly::new(coeffs).primitive())
}

fn split_by_subsets(mut g: IntPoly, mut units: Vec<Unit>, prec: u64) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= g.degree() {
        let lc = g.lead();
        let mut chosen = Vec::new();
        if let Some((h, idx)) = search(&g, &lc, &units, size, 0, &mut chosen, &[BigFloat::from_int(&BigInt::one())], prec) {
            let q = g.div_exact(&h).expect("candidate was checked");
            out.push(h);
            g = q.primitive();
            let mut keep = Vec::new();
            for (k, u) in units.into_iter().enumerate() {
                if !idx.contains(&k) {
                    keep.push(u);
                }
            }
            units = keep;
            continue 'outer;
        }
        size += 1;
    }
    if g.degree() > 0 {
        out.push(g);
    }
    out
}

/// Depth-first search over unit subsets with total degree `left`, reusing the
/// running product.
#[allow(clippy::too_many_arguments)]
fn search(
    g: &IntPoly,
    lc: &BigInt,
    units: &[Unit],
    left: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    prod: &[BigFloat],
    prec: u64,
) -> Option<(IntPoly, Vec<usize>)> {
    if left == 0 {
        let h = round_candidate(lc, prod, prec)?;
        if h.degree() + 1 == prod.len() && g.div_exact(&h).is_some() {
            return Some((h, chosen.clone()));
        }
        return None;
    }
    for k in start..units.len() {
        let d = units[k].len() - 1;
        if d > left {
            continue;
        }
        chosen.push(k);
        let next = poly_mul(prod, &units[k], prec);
        if let Some(found) = search(g, lc, units, left - d, k + 1, chosen, &next, prec) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

fn sign(n: &BigInt) -> i32 {
    crate::rational::sign_of(n)
}

/// Integer roots of a nonzero rational polynomial, ascending. Purely exact:
/// monotone pieces come from the integer breakpoints of the derivatives.
pub fn integer_roots(f: &RatPoly) -> Result<Vec<BigInt>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(integer_roots_int(&f.to_int_primitive().1))
}

/// Integer roots of a nonzero integer polynomial, ascending.
pub fn integer_roots_int(f: &IntPoly) -> Vec<BigInt> {
    if f.degree() == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let mut g = f.clone();
    if g.zero_root_multiplicity() > 0 {
        roots.push(BigInt::zero());
        g = g.strip_zero_roots();
    }
    if g.degree() > 0 {
        let lead = g.lead().abs();
        let m = g.coeffs().iter().map(|c| c.abs()).max().unwrap();
        let bound: BigInt = &m / &lead + 2;
        let bps = breakpoints(&g, &-bound.clone(), &bound);
        for w in bps.windows(2) {
            if let Some(r) = root_in_monotone(&g, &w[0], &w[1]) {
                roots.push(r);
            }
        }
        if g.eval(bps.last().unwrap()).is_zero() {
            roots.push(bps.last().unwrap().clone());
        }
    }
    roots.sort();
    roots.dedup();
    debug_assert!(roots.iter().all(|r| f.eval(r).is_zero()));
    roots
}

/// Root of `g` in `[a, b)` when `g` is monotone on `[a, b]`.
fn root_in_monotone(g: &IntPoly, a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let sa = sign(&g.eval(a));
    if sa == 0 {
        return Some(a.clone());
    }
    let sb = sign(&g.eval(b));
    if sa * sb >= 0 {
        return None;
    }
    let (mut lo, mut hi) = (a.clone(), b.clone());
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1usize;
        let s = sign(&g.eval(&mid));
        if s == 0 {
            return Some(mid);
        }
        if s == sa {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}

/// Sorted integers in `[lo, hi]`, including both ends, such that `g` is
/// monotone between consecutive entries at distance ≥ 2.
fn breakpoints(g: &IntPoly, lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    if g.degree() <= 1 {
        return vec![lo.clone(), hi.clone()];
    }
    let d = g.derivative();
    let inner = breakpoints(&d, lo, hi);
    let mut out = inner.clone();
    for w in inner.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if b - a < BigInt::from(2) {
            continue;
        }
        let sa = sign(&d.eval(a));
        let sb = sign(&d.eval(b));
        if sa * sb >= 0 {
            continue;
        }
        let (mut l, mut h) = (a.clone(), b.clone());
        while &h - &l > BigInt::one() {
            let mid: BigInt = (&l + &h) >> 1usize;
            let s = sign(&d.eval(&mid));
            if s == 0 {
                l = mid.clone();
                h = mid;
                break;
            }
            if s == sa {
                l = mid;
            } else {
                h = mid;
            }
        }
        out.push(l);
        out.push(h);
    }
    out.sort();
    out.dedup();
    out
}
