//! Exact linear algebra: fraction-free (Bareiss) elimination, rational
//! kernels, integral LLL reduction and a small sparse matrix type.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{gcd_all, lcm_denoms, BigRat};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Fraction-free row echelon form. Returns the pivot columns; `a` is
/// overwritten by the echelon form. Every intermediate entry is a minor of
/// the input, so all divisions are exact.
pub fn bareiss_echelon(a: &mut IntMatrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let (top, rest) = a.split_at_mut(row + 1);
        let prow = &top[row];
        let piv = &prow[col];
        for r in rest.iter_mut() {
            let lead = r[col].clone();
            if lead.is_zero() {
                // entries still need the scaling by piv / prev
                for j in col + 1..cols {
                    if !r[j].is_zero() {
                        r[j] = (piv * &r[j]) / &prev;
                    }
                }
                continue;
            }
            for j in col + 1..cols {
                let v = piv * &r[j] - &lead * &prow[j];
                r[j] = v / &prev;
            }
            r[col] = BigInt::zero();
        }
        prev = piv.clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    bareiss_echelon(&mut m).len()
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Basis of the rational kernel of `a` (with `ncols` columns), each vector
/// scaled to a primitive integer vector.
pub fn kernel_basis(a: &IntMatrix, ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: IntMatrix = a.clone();
    let pivots = bareiss_echelon(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![BigRat::zero(); ncols];
        x[f] = BigRat::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = BigRat::zero();
            for j in pc + 1..ncols {
                if !m[r][j].is_zero() && !x[j].is_zero() {
                    s += &x[j] * BigRat::from_integer(m[r][j].clone());
                }
            }
            x[pc] = -s / BigRat::from_integer(m[r][pc].clone());
        }
        out.push(primitive_int_vector(&x));
    }
    out
}

/// Clears denominators and divides by the content.
pub fn primitive_int_vector(x: &[BigRat]) -> Vec<BigInt> {
    let l = lcm_denoms(x);
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRat::from_integer(l.clone())).to_integer())
        .collect();
    let g = gcd_all(&ints);
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest integer to `n / d` for `d > 0`.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (n * &two + d).div_floor(&(d * &two))
}

/// Integral LLL reduction (all arithmetic in ℤ) of linearly independent rows
/// with parameter `delta = delta_num / delta_den`.
pub fn lll_reduce(basis: &mut [Vec<BigInt>], delta_num: i64, delta_den: i64) -> Result<()> {
    let n = basis.len();
    if n <= 1 {
        return Ok(());
    }
    let dn = BigInt::from(delta_num);
    let dd = BigInt::from(delta_den);
    // 1-based: d[0] = 1, d[i] = Gram determinant of the first i vectors
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&basis[0], &basis[0]);
    if d[1].is_zero() {
        return Err(Error::Invalid("LLL input contains a zero vector".into()));
    }
    let mut k = 2;
    let mut kmax = 1;

    let red = |basis: &mut [Vec<BigInt>], lam: &mut Vec<Vec<BigInt>>, d: &[BigInt], k: usize, l: usize| {
        if (&lam[k][l] * BigInt::from(2)).abs() > d[l] {
            let q = round_div(&lam[k][l], &d[l]);
            let bl = basis[l - 1].clone();
            for (x, y) in basis[k - 1].iter_mut().zip(&bl) {
                *x -= &q * y;
            }
            lam[k][l] -= &q * &d[l];
            for i in 1..l {
                let t = &q * &lam[l][i];
                lam[k][i] -= t;
            }
        }
    };

    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&basis[k - 1], &basis[j - 1]);
                for i in 1..j {
                    u = (&d[i] * &u - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = u;
                } else {
                    if u.is_zero() {
                        return Err(Error::Invalid("LLL input vectors are dependent".into()));
                    }
                    d[k] = u;
                }
            }
        }
        red(basis, &mut lam, &d, k, k - 1);
        let lhs = &dd * &d[k] * &d[k - 2];
        let rhs = &dn * &d[k - 1] * &d[k - 1] - &dd * &lam[k][k - 1] * &lam[k][k - 1];
        if lhs < rhs {
            // swap k and k-1
            basis.swap(k - 1, k - 2);
            for j in 1..k - 1 {
                let t = lam[k][j].clone();
                lam[k][j] = lam[k - 1][j].clone();
                lam[k - 1][j] = t;
            }
            let l = lam[k][k - 1].clone();
            let b = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                lam[i][k - 1] = (&b * &t + &l * &lam[i][k]) / &d[k];
            }
            d[k - 1] = b;
            k = (k - 1).max(2);
        } else {
            for l in (1..k - 1).rev() {
                red(basis, &mut lam, &d, k, l);
            }
            k += 1;
        }
    }
    Ok(())
}

/// Sparse matrix over ℚ stored by rows of `(column, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(usize, BigRat)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Appends a row; zero entries are dropped and repeated columns summed.
    pub fn push_row(&mut self, mut entries: Vec<(usize, BigRat)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: Vec<(usize, BigRat)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            assert!(c < self.ncols, "column out of range");
            match row.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|e| !e.1.is_zero());
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<(usize, BigRat)>] {
        &self.rows
    }

    /// Largest number of nonzero entries in a row.
    pub fn sparsity(&self) -> usize {
        self.rows.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Rows scaled to primitive integer rows; same kernel.
    pub fn to_int_dense(&self) -> IntMatrix {
        self.rows
            .iter()
            .map(|r| {
                let mut dense = vec![BigRat::zero(); self.ncols];
                for (c, v) in r {
                    dense[*c] = v.clone();
                }
                primitive_int_vector(&dense)
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[BigRat]) -> Vec<BigRat> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|(c, a)| a * &v[*c]).sum())
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_int_dense())
    }
}

fn max_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(|x| x.abs()).max().unwrap_or_default()
}

/// A small nonzero kernel vector: the exact kernel basis is LLL reduced
/// (delta = 0.99) and the reduced vector of least max-norm is returned,
/// ties broken by the lexicographically smallest of `±v`.
pub fn kernel_small(a: &SparseMatrix) -> Result<Vec<BigRat>> {
    let dense = a.to_int_dense();
    let mut basis = kernel_basis(&dense, a.ncols());
    if basis.is_empty() {
        return Err(Error::NoKernel);
    }
    lll_reduce(&mut basis, 99, 100)?;
    let mut best: Option<Vec<BigInt>> = None;
    for v in basis {
        let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
        for cand in [v, neg] {
            best = match best {
                None => Some(cand),
                Some(b) => {
                    let (nc, nb) = (max_norm(&cand), max_norm(&b));
                    if nc < nb || (nc == nb && cand < b) {
                        Some(cand)
                    } else {
                        Some(b)
                    }
                }
            };
        }
    }
    let v: Vec<BigRat> = best
        .unwrap()
        .into_iter()
        .map(BigRat::from_integer)
        .collect();
    if a.mul_vec(&v).iter().any(|x| !x.is_zero()) {
        return Err(Error::Invalid("kernel vector failed verification".into()));
    }
    Ok(v)
}
