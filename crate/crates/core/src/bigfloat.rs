//! Minimal binary floating point on top of `BigInt`: `man · 2^exp`, with
//! explicit working precision passed to each rounding operation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    man: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: &BigInt) -> Self {
        BigFloat {
            man: n.clone(),
            exp: 0,
        }
    }

    pub fn from_parts(man: BigInt, exp: i64) -> Self {
        BigFloat { man, exp }
    }

    /// `x · 2^e` for a finite `x`.
    pub fn from_f64_exp(x: f64, e: i64) -> Self {
        if x == 0.0 {
            return Self::zero();
        }
        let scaled = x * (1u64 << 52) as f64;
        BigFloat {
            man: BigInt::from(scaled.round() as i64),
            exp: e - 52,
        }
    }

    /// Nearest value with `prec` bits of mantissa.
    pub fn from_rat(x: &BigRat, prec: u64) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        let shift = prec as i64 + x.denom().bits() as i64 - x.numer().bits() as i64 + 2;
        let num = if shift >= 0 {
            x.numer() << shift as usize
        } else {
            x.numer() >> (-shift) as usize
        };
        BigFloat {
            man: num / x.denom(),
            exp: -shift,
        }
        .round(prec)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Exact rational value.
    pub fn to_rat(&self) -> BigRat {
        if self.exp >= 0 {
            BigRat::from_integer(&self.man << self.exp as usize)
        } else {
            BigRat::new(self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn round(mut self, prec: u64) -> Self {
        let bits = self.man.bits();
        if bits > prec {
            let shift = bits - prec;
            let half = BigInt::one() << (shift - 1) as usize;
            self.man = (self.man + half) >> shift as usize;
            self.exp += shift as i64;
        }
        if self.man.is_zero() {
            self.exp = 0;
        }
        self
    }

    /// Position of the most significant bit: `|x| < 2^msb`.
    pub fn msb(&self) -> i64 {
        self.man.bits() as i64 + self.exp
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            man: -&self.man,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, o: &Self, prec: u64) -> Self {
        if self.is_zero() {
            return o.clone().round(prec);
        }
        if o.is_zero() {
            return self.clone().round(prec);
        }
        let (hi, lo) = if self.msb() >= o.msb() { (self, o) } else { (o, self) };
        // lo is far below the rounding position of hi
        if hi.msb() - lo.msb() > prec as i64 + 4 {
            return hi.clone().round(prec);
        }
        let e = self.exp.min(o.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &o.man << (o.exp - e) as usize;
        BigFloat { man: a + b, exp: e }.round(prec)
    }

    pub fn sub(&self, o: &Self, prec: u64) -> Self {
        self.add(&o.neg(), prec)
    }

    pub fn mul(&self, o: &Self, prec: u64) -> Self {
        BigFloat {
            man: &self.man * &o.man,
            exp: self.exp + o.exp,
        }
        .round(prec)
    }

    pub fn mul_int(&self, k: &BigInt, prec: u64) -> Self {
        BigFloat {
            man: &self.man * k,
            exp: self.exp,
        }
        .round(prec)
    }

    pub fn div(&self, o: &Self, prec: u64) -> Self {
        assert!(!o.is_zero(), "BigFloat division by zero");
        let shift = prec as i64 + o.man.bits() as i64 - self.man.bits() as i64 + 2;
        let shift = shift.max(0);
        BigFloat {
            man: (&self.man << shift as usize) / &o.man,
            exp: self.exp - o.exp - shift,
        }
        .round(prec)
    }

    /// Natural log of the absolute value; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        crate::rational::ln_abs(&self.man) + self.exp as f64 * std::f64::consts::LN_2
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits() as i64;
        let shift = (bits - 60).max(0);
        let top = (&self.man >> shift as usize).to_f64().unwrap();
        top * 2f64.powi((self.exp + shift).clamp(-2000, 2000) as i32)
    }

    pub fn cmp_value(&self, o: &Self) -> Ordering {
        self.to_rat().cmp(&o.to_rat())
    }

    pub fn round_to_int(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            let s = (-self.exp) as usize;
            (&self.man + (BigInt::one() << (s - 1))) >> s
        }
    }
}

/// Complex number with `BigFloat` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cx {
    pub fn zero() -> Self {
        Cx {
            re: BigFloat::zero(),
            im: BigFloat::zero(),
        }
    }

    pub fn real(re: BigFloat) -> Self {
        Cx {
            re,
            im: BigFloat::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Cx, prec: u64) -> Cx {
        Cx {
            re: self.re.add(&o.re, prec),
            im: self.im.add(&o.im, prec),
        }
    }

    pub fn sub(&self, o: &Cx, prec: u64) -> Cx {
        Cx {
            re: self.re.sub(&o.re, prec),
            im: self.im.sub(&o.im, prec),
        }
    }

    pub fn mul(&self, o: &Cx, prec: u64) -> Cx {
        let p = prec + 8;
        Cx {
            re: self.re.mul(&o.re, p).sub(&self.im.mul(&o.im, p), prec),
            im: self.re.mul(&o.im, p).add(&self.im.mul(&o.re, p), prec),
        }
    }

    pub fn scale_int(&self, k: &BigInt, prec: u64) -> Cx {
        Cx {
            re: self.re.mul_int(k, prec),
            im: self.im.mul_int(k, prec),
        }
    }

    pub fn norm_sq(&self, prec: u64) -> BigFloat {
        let p = prec + 8;
        self.re.mul(&self.re, p).add(&self.im.mul(&self.im, p), prec)
    }

    pub fn div(&self, o: &Cx, prec: u64) -> Cx {
        let p = prec + 16;
        let d = o.norm_sq(p);
        let re = self.re.mul(&o.re, p).add(&self.im.mul(&o.im, p), p);
        let im = self.im.mul(&o.re, p).sub(&self.re.mul(&o.im, p), p);
        Cx {
            re: re.div(&d, prec),
            im: im.div(&d, prec),
        }
    }

    /// Natural log of the modulus.
    pub fn ln_abs(&self, prec: u64) -> f64 {
        0.5 * self.norm_sq(prec.max(64)).ln_abs()
    }

    pub fn conj(&self) -> Cx {
        Cx {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    /// Largest of the two exponents' magnitudes, `|z| < 2^msb + 2^msb`.
    pub fn msb(&self) -> i64 {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => i64::MIN / 4,
            (true, false) => self.im.msb(),
            (false, true) => self.re.msb(),
            _ => self.re.msb().max(self.im.msb()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn arithmetic_round_trips() {
        let p = 200;
        let a = BigFloat::from_rat(&rat(1, 3), p);
        let b = BigFloat::from_rat(&rat(2, 3), p);
        let s = a.add(&b, p);
        let err = (s.to_rat() - rat(1, 1)).abs();
        assert!(err < BigRat::new(1.into(), BigInt::one() << 190usize));
        let q = BigFloat::from_int(&BigInt::from(1)).div(&BigFloat::from_int(&BigInt::from(3)), p);
        assert!((q.to_rat() - rat(1, 3)).abs() < BigRat::new(1.into(), BigInt::one() << 195usize));
    }

    #[test]
    fn large_exponent_gap() {
        let big = BigFloat::from_parts(BigInt::from(1), 500);
        let tiny = BigFloat::from_parts(BigInt::from(1), -500);
        assert_eq!(big.add(&tiny, 64), big);
        let both = big.add(&tiny, 2000);
        assert_eq!(both.to_rat() - big.to_rat(), tiny.to_rat());
    }

    #[test]
    fn logs_and_conversion() {
        let x = BigFloat::from_parts(BigInt::from(3), 1000);
        let want = 3f64.ln() + 1000.0 * std::f64::consts::LN_2;
        assert!((x.ln_abs() - want).abs() < 1e-12);
        assert_eq!(BigFloat::from_rat(&rat(5, 2), 64).round_to_int(), BigInt::from(3));
        assert_eq!(BigFloat::from_rat(&rat(-7, 2), 64).round_to_int(), BigInt::from(-3));
    }

    #[test]
    fn complex_division() {
        let p = 128;
        let one = BigFloat::from_int(&BigInt::from(1));
        let i = Cx {
            re: BigFloat::zero(),
            im: one.clone(),
        };
        let q = Cx::real(one).div(&i, p);
        assert_eq!(q.re.to_rat(), rat(0, 1));
        assert_eq!(q.im.to_rat(), rat(-1, 1));
    }
}
