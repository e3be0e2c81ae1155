//! Exact dense linear algebra over the integers and rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("index {0} listed twice")]
    DuplicateIndex(usize),
    #[error("deleting {rows} rows but {cols} columns")]
    MismatchedDeletion { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix of big integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j].clone().into())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(IntMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[BigInt]>::to_vec).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate division is exact, so the whole computation stays in
/// the integers and costs `O(k^3)` big-integer operations.
pub fn det(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    Ok(bareiss(m.to_rows()))
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix of rationals, by clearing row denominators
/// and running [`det`].
pub fn det_rational(rows: &[Vec<BigRational>]) -> Result<BigRational, LinalgError> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(LinalgError::NotSquare { rows: n, cols: r.len() });
    }
    let mut scale = BigInt::one();
    let mut ints = Vec::with_capacity(n);
    for row in rows {
        let l = row.iter().fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
        ints.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect::<Vec<_>>());
        scale *= l;
    }
    Ok(BigRational::new(bareiss(ints), scale))
}

fn check_indices(idx: &[usize], bound: usize) -> Result<(), LinalgError> {
    let mut seen = vec![false; bound];
    for &i in idx {
        if i >= bound {
            return Err(LinalgError::IndexOutOfRange { index: i, bound });
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(LinalgError::DuplicateIndex(i));
        }
    }
    Ok(())
}

/// Submatrix with the listed (0-based) rows and columns removed.
pub fn minor(m: &IntMatrix, delete_rows: &[usize], delete_cols: &[usize]) -> Result<IntMatrix, LinalgError> {
    if delete_rows.len() != delete_cols.len() {
        return Err(LinalgError::MismatchedDeletion { rows: delete_rows.len(), cols: delete_cols.len() });
    }
    check_indices(delete_rows, m.rows)?;
    check_indices(delete_cols, m.cols)?;
    let keep_r: Vec<usize> = (0..m.rows).filter(|i| !delete_rows.contains(i)).collect();
    let keep_c: Vec<usize> = (0..m.cols).filter(|j| !delete_cols.contains(j)).collect();
    Ok(IntMatrix::from_fn(keep_r.len(), keep_c.len(), |i, j| m.get(keep_r[i], keep_c[j]).clone()))
}

/// Entry `(i, j)` of `m⁻¹` as the signed cofactor of `(j, i)` over `det m`.
pub fn inverse_entry(m: &IntMatrix, i: usize, j: usize) -> Result<BigRational, LinalgError> {
    let d = det(m)?;
    if d.is_zero() {
        return Err(LinalgError::Singular);
    }
    inverse_entry_with_det(m, &d, i, j)
}

/// As [`inverse_entry`] with `det m` supplied by the caller, for sweeps.
pub fn inverse_entry_with_det(m: &IntMatrix, det_m: &BigInt, i: usize, j: usize) -> Result<BigRational, LinalgError> {
    if det_m.is_zero() {
        return Err(LinalgError::Singular);
    }
    let c = det(&minor(m, &[j], &[i])?)?;
    let c = if (i + j) % 2 == 1 { -c } else { c };
    Ok(BigRational::new(c, det_m.clone()))
}

/// Full inverse by Gauss–Jordan elimination over the rationals.
pub fn inverse(m: &IntMatrix) -> Result<Vec<Vec<BigRational>>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = m.row(i).iter().map(|v| BigRational::from_integer(v.clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].numer().abs().bits() + a[r][k].denom().bits())
            .ok_or(LinalgError::Singular)?;
        a.swap(k, p);
        let inv = a[k][k].recip();
        for v in a[k].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[k].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v -= &f * p;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
