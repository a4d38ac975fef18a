//! Number of absolutely irreducible factors via the Gao–Ruppert system.
//!
//! For `P` with `gcd(P, ∂P/∂X) = 1`, the pairs `(G, H)` with
//! `∂(G/P)/∂Y = ∂(H/P)/∂X`, `deg G ≤ (p−1, q)` and `deg H ≤ (p, q−1)` form a
//! ℚ-space whose dimension is the number of distinct absolutely irreducible
//! factors of `P`. A basis is `(P/f · ∂f/∂X, P/f · ∂f/∂Y)` over the factors `f`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::linalg::{rank, IntMatrix};
use crate::rational::BigRat;
use crate::resultant::resultant_wrt_x;
use crate::upoly::RatPoly;

/// Number of shears `Y → Y + cX` tried before giving up on a content.
const MAX_SHEAR: i64 = 64;

/// Number of distinct absolutely irreducible factors of a squarefree `P`
/// with positive partial degrees.
pub fn count_absolute_factors(p: &BiPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.deg_x() == 0 || p.deg_y() == 0 {
        return Err(Error::DegenerateDegree(
            "absolute factor count needs deg_X P ≥ 1 and deg_Y P ≥ 1".into(),
        ));
    }
    let p = sheared(&p.normalized())?;
    // linear in X with constant content is squarefree
    if p.deg_x() > 1 && resultant_wrt_x(&p, &p.partial_x())?.is_zero() {
        return Err(Error::NotSquarefree);
    }
    Ok(gao_dimension(&p))
}

/// Content of `P` as a polynomial in `X` over ℚ[Y].
fn content_in_x(p: &BiPoly) -> RatPoly {
    p.coeffs_in_x()
        .iter()
        .filter(|c| !c.is_zero())
        .fold(RatPoly::zero(), |g, c| if g.is_zero() { c.clone() } else { g.gcd(c) })
}

/// `P(X, Y + cX)` for the first `c ≥ 0` giving a constant content in `X`.
fn sheared(p: &BiPoly) -> Result<BiPoly> {
    for c in 0..MAX_SHEAR {
        let q = if c == 0 {
            p.clone()
        } else {
            let gy = BiPoly::from_i64(&[(0, 1, 1), (1, 0, c)]);
            p.compose(&BiPoly::x(), &gy)
        };
        if content_in_x(&q).degree() == 0 {
            return Ok(q);
        }
    }
    Err(Error::Degenerate("no shear removes the content in X".into()))
}

fn gao_dimension(p: &BiPoly) -> usize {
    let (dp, dq) = (p.deg_x(), p.deg_y());
    let px = p.partial_x();
    let py = p.partial_y();
    let mut columns: Vec<BiPoly> = Vec::new();
    for i in 0..dp {
        for j in 0..=dq {
            // G = X^i Y^j contributes P·∂G/∂Y − G·∂P/∂Y
            let mono = BiPoly::monomial(i, j, BigRat::from_integer(1.into()));
            let mut col = &mono * &py;
            col = -&col;
            if j > 0 {
                col = &col + &p.scale(&BigRat::from_integer(j.into())).mul_monomial(i, j - 1);
            }
            columns.push(col);
        }
    }
    for i in 0..=dp {
        for j in 0..dq {
            // H = X^i Y^j contributes −P·∂H/∂X + H·∂P/∂X
            let mono = BiPoly::monomial(i, j, BigRat::from_integer(1.into()));
            let mut col = &mono * &px;
            if i > 0 {
                col = &col - &p.scale(&BigRat::from_integer(i.into())).mul_monomial(i - 1, j);
            }
            columns.push(col);
        }
    }
    let mut rows: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for col in &columns {
        for (e, _) in col.terms() {
            let k = rows.len();
            rows.entry(*e).or_insert(k);
        }
    }
    let mut m: IntMatrix = vec![vec![BigInt::zero(); columns.len()]; rows.len()];
    for (c, col) in columns.iter().enumerate() {
        for (e, v) in col.terms() {
            // P is integral, so every entry is an integer
            m[rows[e]][c] = v.to_integer();
        }
    }
    columns.len() - rank(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_bipoly;

    fn count(s: &str) -> Result<usize> {
        count_absolute_factors(&parse_bipoly(s).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(count("x^2 - y^3").unwrap(), 1);
        assert_eq!(count("(x^2 - y)*(x - y^2)").unwrap(), 2);
        assert_eq!(count("x*y - 1").unwrap(), 1);
        assert_eq!(count("y^2 - x^3 + x").unwrap(), 1);
    }

    #[test]
    fn irreducible_over_q_but_not_absolutely() {
        assert_eq!(count("x^2 - 2*y^2").unwrap(), 2);
        assert_eq!(count("x^2 + y^2").unwrap(), 2);
        assert_eq!(count("x^4 + y^4").unwrap(), 4);
    }

    #[test]
    fn factors_free_of_x() {
        assert_eq!(count("(y - 1)*(x - y)").unwrap(), 2);
        assert_eq!(count("(y^2 + 1)*x").unwrap(), 3);
    }

    #[test]
    fn rejects_squares() {
        assert_eq!(count("(x - y)^2*(x + 1)"), Err(Error::NotSquarefree));
        assert_eq!(count("(y - 1)^2*x"), Err(Error::NotSquarefree));
    }
}
