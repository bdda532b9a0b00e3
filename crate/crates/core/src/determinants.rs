//! Hurwitz, Hankel and Ω determinants, evaluated exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{Polynomial, Rational};
use crate::series::SSeriesPrefix;

/// Largest matrix the cofactor oracle accepts.
pub const LAPLACE_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    size: usize,
    entries: Vec<Vec<Rational>>,
}

impl SquareMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::NotSquare);
        }
        Ok(SquareMatrix {
            size,
            entries: rows,
        })
    }

    /// Builds a `size x size` matrix from an index function (0-based).
    pub fn from_fn(size: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let rows = (0..size)
            .map(|i| (0..size).map(|k| f(i, k)).collect())
            .collect();
        SquareMatrix::new(rows)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        SquareMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }
}

fn seq_at(seq: &[Rational], idx: i64) -> Rational {
    if idx < 0 {
        return Rational::zero();
    }
    seq.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
}

/// `j x j` section of the Hurwitz matrix over `seq`: entry `(i, k)` (1-based)
/// is `seq[2k - i]`, with out-of-range indices read as zero.
///
/// Serves both polynomial coefficients `a_i` and Laurent coefficients `t_i`.
pub fn build_hurwitz_minor_matrix(seq: &[Rational], j: usize) -> Result<SquareMatrix> {
    if j < 1 {
        return Err(Error::InvalidOrder(j));
    }
    SquareMatrix::from_fn(j, |i, k| {
        seq_at(seq, 2 * (k as i64 + 1) - (i as i64 + 1))
    })
}

pub fn hurwitz_minor(seq: &[Rational], j: usize) -> Result<Rational> {
    Ok(det_exact(&build_hurwitz_minor_matrix(seq, j)?))
}

/// `Δ_1, ..., Δ_count` over `seq`.
pub fn hurwitz_minors(seq: &[Rational], count: usize) -> Vec<Rational> {
    (1..=count)
        .map(|j| hurwitz_minor(seq, j).expect("order is at least one"))
        .collect()
}

fn hankel(s: &SSeriesPrefix, j: usize, offset: usize) -> Result<Rational> {
    if j == 0 {
        return Ok(Rational::one());
    }
    let needed = 2 * j - 2 + offset;
    if s.coeffs.len() <= needed {
        return Err(Error::PrefixTooShort {
            needed,
            available: s.coeffs.len(),
        });
    }
    let m = SquareMatrix::from_fn(j, |i, k| s.coeffs[i + k + offset].clone())?;
    Ok(det_exact(&m))
}

/// `D_j`: Hankel minor starting at `s_0`. `D_0 = 1`.
pub fn hankel_d(s: &SSeriesPrefix, j: usize) -> Result<Rational> {
    hankel(s, j, 0)
}

/// `D̂_j`: Hankel minor starting at `s_1`. `D̂_0 = 1`.
pub fn hankel_dhat(s: &SSeriesPrefix, j: usize) -> Result<Rational> {
    hankel(s, j, 1)
}

/// The `2j x 2j` Ω matrix of a numerator `h` (coefficients `b_k`) and a
/// denominator `g` (coefficients `c_k`).
///
/// Rows come in pairs. For pair `i = 1..j` (1-based), row `2i-1` holds
/// `c_{k-2i+1}` and row `2i` holds `b_{k-i}` in column `k`.
pub fn build_omega_matrix(h: &Polynomial, g: &Polynomial, j: usize) -> Result<SquareMatrix> {
    if j < 1 {
        return Err(Error::InvalidOrder(j));
    }
    SquareMatrix::from_fn(2 * j, |row, col| {
        let (row, col) = (row as i64 + 1, col as i64 + 1);
        let pair = (row + 1) / 2;
        if row % 2 == 1 {
            g.coeff_signed(col - 2 * pair + 1)
        } else {
            h.coeff_signed(col - pair)
        }
    })
}

pub fn omega(h: &Polynomial, g: &Polynomial, j: usize) -> Result<Rational> {
    Ok(det_exact(&build_omega_matrix(h, g, j)?))
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Each row is first cleared of denominators, so elimination runs entirely
/// over integers with exact divisions.
pub fn det_exact(m: &SquareMatrix) -> Rational {
    let n = m.size;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .entries
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let out = row
                .iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect();
            scale *= l;
            out
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for c in k + 1..n {
                let v = &a[i][c] * &a[k][k] - &a[i][k] * &a[k][c];
                a[i][c] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by recursive cofactor expansion along the first row.
///
/// Exponential cost; only meant as an independent check of [`det_exact`].
pub fn det_laplace(m: &SquareMatrix) -> Result<Rational> {
    if m.size > LAPLACE_LIMIT {
        return Err(Error::OracleSizeLimit(m.size));
    }
    let cols: Vec<usize> = (0..m.size).collect();
    Ok(laplace(&m.entries, 0, &cols))
}

fn laplace(rows: &[Vec<Rational>], row: usize, cols: &[usize]) -> Rational {
    if cols.len() == 1 {
        return rows[row][cols[0]].clone();
    }
    let mut total = Rational::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &rows[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = entry * laplace(rows, row + 1, &rest);
        if pos % 2 == 0 {
            total += minor;
        } else {
            total -= minor;
        }
    }
    total
}
