//! Sparse bivariate polynomials over ℚ.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{gcd_all, lcm_denoms, BigRat};
use crate::upoly::{IntPoly, RatPoly};

/// Exponent pair `(i, j)` for the monomial `X^i Y^j`.
pub type Exps = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in `X`, `Y` with rational coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exps, BigRat>,
}

/// Graded order key: higher total degree first, then higher X-degree.
fn grlex_key(e: &Exps) -> (u32, u32) {
    (e.0 + e.1, e.0)
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigRat::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigRat::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exps, BigRat)>) -> Self {
        let mut p = BiPoly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from small integer terms `(i, j, c)`.
    pub fn from_i64(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| ((i, j), BigRat::from_integer(BigInt::from(c)))),
        )
    }

    /// Polynomial in `Y` alone.
    pub fn from_y_poly(f: &RatPoly) -> Self {
        Self::from_terms(f.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    /// Polynomial in `X` alone.
    pub fn from_x_poly(f: &RatPoly) -> Self {
        Self::from_terms(f.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    pub fn add_term(&mut self, e: Exps, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRat {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn deg_x(&self) -> u32 {
        self.terms.keys().map(|e| e.0).max().unwrap_or(0)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms.keys().map(|e| e.1).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.0 + e.1).max().unwrap_or(0)
    }

    pub fn deg(&self, v: Var) -> u32 {
        match v {
            Var::X => self.deg_x(),
            Var::Y => self.deg_y(),
        }
    }

    /// Leading term in the graded order used for normalization and printing.
    pub fn leading_term(&self) -> Option<(Exps, &BigRat)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| grlex_key(e))
            .map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, s: &BigRat) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// Multiplies by `X^i Y^j`.
    pub fn mul_monomial(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| ((e.0 + i, e.1 + j), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &BigRat, y: &BigRat) -> BigRat {
        self.eval_partial_x(x).eval(y)
    }

    /// `P(x, Y)` as a polynomial in `Y`.
    pub fn eval_partial_x(&self, x: &BigRat) -> RatPoly {
        let cols = self.coeffs_in_y();
        RatPoly::new(cols.iter().map(|c| c.eval(x)).collect())
    }

    /// `P(X, y)` as a polynomial in `X`.
    pub fn eval_partial_y(&self, y: &BigRat) -> RatPoly {
        let rows = self.coeffs_in_x();
        RatPoly::new(rows.iter().map(|c| c.eval(y)).collect())
    }

    /// Coefficients as a polynomial in `X`: entry `i` is the coefficient of
    /// `X^i`, a polynomial in `Y`.
    pub fn coeffs_in_x(&self) -> Vec<RatPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut rows = vec![vec![BigRat::zero(); self.deg_y() as usize + 1]; self.deg_x() as usize + 1];
        for (&(i, j), c) in &self.terms {
            rows[i as usize][j as usize] = c.clone();
        }
        rows.into_iter().map(RatPoly::new).collect()
    }

    /// Coefficients as a polynomial in `Y`: entry `j` is the coefficient of
    /// `Y^j`, a polynomial in `X`.
    pub fn coeffs_in_y(&self) -> Vec<RatPoly> {
        self.swap_xy().coeffs_in_x()
    }

    pub fn partial(&self, v: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let (k, e) = match v {
                Var::X => (i, (i.wrapping_sub(1), j)),
                Var::Y => (j, (i, j.wrapping_sub(1))),
            };
            if k > 0 {
                out.add_term(e, c * BigRat::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    pub fn partial_x(&self) -> BiPoly {
        self.partial(Var::X)
    }

    pub fn partial_y(&self) -> BiPoly {
        self.partial(Var::Y)
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.0 + e.1 == k)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Dehomogenized top form `P_d(X, 1)` for `d` the total degree.
    pub fn leading_form_dehomogenized(&self) -> RatPoly {
        let d = self.total_degree();
        let top = self.homogeneous_part(d);
        let mut c = vec![BigRat::zero(); d as usize + 1];
        for (&(i, _), v) in top.terms() {
            c[i as usize] = v.clone();
        }
        RatPoly::new(c)
    }

    /// Lcm of denominators times gcd of numerators, signed so that the
    /// normalized polynomial has a positive leading term.
    pub fn content(&self) -> BigRat {
        if self.is_zero() {
            return BigRat::zero();
        }
        let l = lcm_denoms(self.terms.values());
        let ints: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * BigRat::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = gcd_all(&ints);
        if self.leading_term().unwrap().1.is_negative() {
            g = -g;
        }
        BigRat::new(g, l)
    }

    /// Canonical integer form: coprime integer coefficients with a positive
    /// leading term. Scale invariant.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest absolute coefficient of the canonical integer form.
    pub fn max_abs_int_coeff(&self) -> BigInt {
        self.normalized()
            .terms
            .values()
            .map(|c| c.numer().abs())
            .max()
            .unwrap_or_default()
    }

    /// Largest absolute coefficient, for integral polynomials as they stand.
    pub fn max_abs_coeff(&self) -> BigRat {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Largest bit size over all numerators and denominators.
    pub fn max_bits(&self) -> u64 {
        self.terms
            .values()
            .map(crate::rational::rat_bits)
            .max()
            .unwrap_or(0)
    }

    /// Errors when some coefficient exceeds the bit budget.
    pub fn check_bits(&self, cap: u64) -> Result<()> {
        let b = self.max_bits();
        if b > cap {
            Err(Error::Resource(format!(
                "coefficient of {b} bits exceeds budget of {cap} bits"
            )))
        } else {
            Ok(())
        }
    }

    /// `P(X + a, Y + b)` expanded exactly.
    pub fn shift(&self, a: &BigRat, b: &BigRat) -> BiPoly {
        let xa = BiPoly::from_terms([((1, 0), BigRat::one()), ((0, 0), a.clone())]);
        let yb = BiPoly::from_terms([((0, 1), BigRat::one()), ((0, 0), b.clone())]);
        self.compose(&xa, &yb)
    }

    /// Substitutes `X := gx`, `Y := gy`.
    pub fn compose(&self, gx: &BiPoly, gy: &BiPoly) -> BiPoly {
        let mut xpows = vec![BiPoly::one()];
        for _ in 0..self.deg_x() {
            let next = xpows.last().unwrap() * gx;
            xpows.push(next);
        }
        let mut ypows = vec![BiPoly::one()];
        for _ in 0..self.deg_y() {
            let next = ypows.last().unwrap() * gy;
            ypows.push(next);
        }
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = &xpows[i as usize] * &ypows[j as usize];
            out = &out + &t.scale(c);
        }
        out
    }

    /// `X^p · P(1/X + ξ, Y)` with `p = deg_X P`.
    pub fn shift_inverse_substitute(&self, xi: &BigRat) -> BiPoly {
        let p = self.deg_x();
        let mut out = BiPoly::zero();
        // X^p (1/X + ξ)^i = X^(p-i) (1 + ξX)^i
        let one_xi = RatPoly::new(vec![BigRat::one(), xi.clone()]);
        let mut pows = vec![RatPoly::constant(BigRat::one())];
        for _ in 0..p {
            let next = pows.last().unwrap() * &one_xi;
            pows.push(next);
        }
        for (&(i, j), c) in &self.terms {
            for (k, b) in pows[i as usize].coeffs().iter().enumerate() {
                out.add_term((p - i + k as u32, j), c * b);
            }
        }
        out
    }

    /// Exact quotient when `d` divides `self` in ℚ[X, Y].
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        // lex order X > Y; for a single divisor a zero remainder is exactly divisibility
        let lead = |p: &BiPoly| p.terms.iter().next_back().map(|(e, c)| (*e, c.clone()));
        let (de, dc) = lead(d).unwrap();
        let mut r = self.clone();
        let mut q = BiPoly::zero();
        while let Some((re, rc)) = lead(&r) {
            if re.0 < de.0 || re.1 < de.1 {
                return None;
            }
            let t = BiPoly::monomial(re.0 - de.0, re.1 - de.1, rc / &dc);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    pub fn divides(&self, other: &BiPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Integer polynomial in `Y` for a `BiPoly` free of `X`.
    pub fn as_y_poly(&self) -> Option<RatPoly> {
        if self.deg_x() > 0 {
            return None;
        }
        Some(self.eval_partial_x(&BigRat::zero()))
    }

    /// Text form, parsable by [`crate::parse::parse_bipoly`].
    pub fn to_text(&self) -> String {
        let mut ts: Vec<(&Exps, &BigRat)> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex_key(b.0).cmp(&grlex_key(a.0)));
        format_terms(ts.into_iter().map(|(&(i, j), c)| (c.clone(), mono_text(i, j))))
    }

    /// Univariate primitive integer polynomial in `Y` if free of `X`.
    pub fn as_int_y_poly(&self) -> Option<IntPoly> {
        self.as_y_poly().map(|f| f.to_int_primitive().1)
    }
}

fn mono_text(i: u32, j: u32) -> String {
    let part = |v: &str, k: u32| match k {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{k}")),
    };
    [part("x", i), part("y", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins `(coefficient, monomial)` pairs into `a - b + c` form. Unit
/// coefficients are dropped in front of a nonempty monomial.
pub(crate) fn format_terms(it: impl Iterator<Item = (BigRat, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in it {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let cs = crate::rational::fmt_rat(&a);
        if mono.is_empty() {
            out.push_str(&cs);
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&cs);
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({})", self.to_text())
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut acc: BTreeMap<Exps, BigRat> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                *acc.entry((a.0 + b.0, a.1 + b.1)).or_insert_with(BigRat::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        BiPoly { terms: acc }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}
