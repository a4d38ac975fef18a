//! Univariate polynomials over ℤ ([`IntPoly`]) and over ℚ ([`RatPoly`]).
//!
//! Coefficient vectors are stored lowest degree first and never carry
//! trailing zeros, so the zero polynomial is the empty vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rational::{gcd_all, lcm_denoms, BigRat};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        gcd_all(&self.coeffs)
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lead().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(BigRat::from_integer).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * x + BigRat::from_integer(c.clone()))
    }

    /// Sign of the value at an integer point.
    pub fn sign_at(&self, x: &BigInt) -> i32 {
        crate::rational::sign_of(&self.eval(x))
    }

    /// `x^deg · f(1/x)`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    /// Multiplicity of 0 as a root (number of vanishing low coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `x^k` with `k` the multiplicity of the root 0.
    pub fn strip_zero_roots(&self) -> IntPoly {
        let k = self.zero_root_multiplicity();
        IntPoly::new(self.coeffs[k..].to_vec())
    }

    /// Exact quotient in ℤ[x], or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.to_rat().div_rem(&d.to_rat());
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        self.to_rat().gcd(&other.to_rat()).to_int_primitive().1
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Squarefree part `f / gcd(f, f')`, primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.degree() == 0 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// Yun's squarefree decomposition: primitive, pairwise coprime `g_i` with
    /// `f = c · Π g_i^i`. Entries of degree 0 are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let f = self.to_rat();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1u32;
        loop {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.to_int_primitive().1, i));
            }
            let nb = b.div_rem(&a).0;
            let nc = d.div_rem(&a).0;
            b = nb;
            if b.degree() == 0 {
                break;
            }
            d = &nc - &b.derivative();
            i += 1;
        }
        out
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm2_sq(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Text form in the variable `var`, e.g. `x^2 - 6`.
    pub fn to_string_in(&self, var: &str) -> String {
        self.to_rat().to_string_in(var)
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRat::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRat) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (RatPoly::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        let inv = d.lead().recip();
        let mut q = vec![BigRat::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dl - 1] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        r.truncate(dl - 1);
        (RatPoly::new(q), RatPoly::new(r))
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            // keep intermediate sizes in check
            a = b;
            b = r.to_int_primitive().1.to_rat();
        }
        a.monic()
    }

    /// Converts to ℤ[x] when every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    /// Splits `self = c · f` with `f` primitive in ℤ[x] having a positive
    /// leading coefficient. For the zero polynomial returns `(0, 0)`.
    pub fn to_int_primitive(&self) -> (BigRat, IntPoly) {
        if self.is_zero() {
            return (BigRat::zero(), IntPoly::zero());
        }
        let l = lcm_denoms(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRat::from_integer(l.clone())).to_integer())
            .collect();
        let mut g = gcd_all(&ints);
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let f = IntPoly::new(ints.iter().map(|c| c / &g).collect());
        (BigRat::new(g, l), f)
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let terms: Vec<(BigRat, usize)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (c.clone(), k))
            .collect();
        crate::bipoly::format_terms(terms.into_iter().map(|(c, k)| {
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            (c, mono)
        }))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_string_in("x"))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", self.to_string_in("x"))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string_in("x"))
    }
}

fn add_vecs<T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len().max(b.len())];
    for (o, x) in out.iter_mut().zip(a) {
        *o += x;
    }
    for (o, x) in out.iter_mut().zip(b) {
        *o += x;
    }
    out
}

fn mul_vecs<T>(a: &[T], b: &[T]) -> Vec<T>
where
    T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

macro_rules! impl_ring_ops {
    ($ty:ident, $scalar:ty) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                $ty::new(add_vecs(&self.coeffs, &rhs.coeffs))
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::new(self.coeffs.iter().map(|c| -c).collect())
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                $ty::new(mul_vecs(&self.coeffs, &rhs.coeffs))
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

impl_ring_ops!(IntPoly, BigInt);
impl_ring_ops!(RatPoly, BigRat);

/// Gcd of two univariate rational polynomials, returned as a primitive
/// integer polynomial with positive leading coefficient.
pub fn gcd_univariate(a: &RatPoly, b: &RatPoly) -> IntPoly {
    a.gcd(b).to_int_primitive().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn gcd_of_x2_minus_1_and_x3_minus_1() {
        let g = ip(&[-1, 0, 1]).gcd(&ip(&[-1, 0, 0, 1]));
        assert_eq!(g, ip(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(ip(&[2, 4]).gcd(&IntPoly::zero()), ip(&[1, 2]));
    }

    #[test]
    fn exact_division() {
        let f = ip(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&ip(&[1, 1])), Some(ip(&[-1, 1])));
        assert_eq!(f.div_exact(&ip(&[1, 2])), None);
        // quotient over Q but not over Z
        assert_eq!(ip(&[1, 1]).div_exact(&ip(&[2, 2])), None);
    }

    #[test]
    fn yun_decomposition() {
        // (x-3)^2 (x+1)
        let f = &ip(&[-3, 1]).pow(2) * &ip(&[1, 1]);
        let d = f.squarefree_decomposition();
        assert_eq!(d, vec![(ip(&[1, 1]), 1), (ip(&[-3, 1]), 2)]);
        assert_eq!(f.squarefree_part(), ip(&[-3, -2, 1]));
    }

    #[test]
    fn yun_on_x_squared() {
        assert_eq!(ip(&[0, 0, 1]).squarefree_decomposition(), vec![(ip(&[0, 1]), 2)]);
    }

    #[test]
    fn primitive_normalization() {
        let (c, f) = RatPoly::new(vec![BigRat::new(1.into(), 3.into()), BigRat::from_integer((-2).into())])
            .to_int_primitive();
        assert_eq!(f, ip(&[-1, 6]));
        assert_eq!(c, BigRat::new((-1).into(), 3.into()));
    }

    #[test]
    fn display() {
        assert_eq!(ip(&[-6, 0, 1]).to_string(), "x^2 - 6");
        assert_eq!(ip(&[1, -1]).to_string(), "-x + 1");
    }
}
