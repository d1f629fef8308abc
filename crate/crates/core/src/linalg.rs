//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers and rationals:
//! Smith normal form with unimodular transforms, fraction-free (Bareiss)
//! determinants, rational inverses and congruence diagonalization of
//! symmetric forms. Matrices are immutable values; every operation returns
//! a fresh result.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(IntMatrix { rows, cols, data })
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

    /// Builds a matrix from machine-integer rows.
    ///
    /// Panics if the rows have different lengths.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigInt::one() } else { BigInt::zero() })
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { BigInt::zero() })
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

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(BigInt::zero(), |acc, k| acc + &self[(i, k)] * &rhs[(k, j)])
        })
    }

    /// Matrix-vector product. Panics on incompatible shapes.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "incompatible shapes for product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &IntMatrix) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(r + other.rows, c + other.cols, |i, j| match (i < r, j < c) {
            (true, true) => self[(i, j)].clone(),
            (false, false) => other[(i - r, j - c)].clone(),
            _ => BigInt::zero(),
        })
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| BigRational::from_integer(x.clone())).collect(),
        }
    }

    fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn from_vec_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        IntMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Dense rational matrix; entries are always in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<BigRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible shapes for product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(BigRational::zero(), |acc, k| acc + &self[(i, k)] * &rhs[(k, j)])
        })
    }

    /// Returns the integer matrix if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|x| x.is_integer()) {
            Some(IntMatrix {
                rows: self.rows,
                cols: self.cols,
                data: self.data.iter().map(|x| x.to_integer()).collect(),
            })
        } else {
            None
        }
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = BigRational;

    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

/// Smith normal form `left · A · right = diag` with unimodular transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diag: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries `d₁ | d₂ | …`, including unit and zero factors.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.diag.rows().min(self.diag.cols());
        (0..k).map(|i| self.diag[(i, i)].clone()).collect()
    }
}

/// Computes the Smith normal form of `a`.
///
/// Pivots on the entry of smallest absolute value to keep growth down.
/// Empty matrices yield identity transforms and an empty diagonal.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.to_rows();
    let mut u = IntMatrix::identity(m).to_rows();
    let mut v = IntMatrix::identity(n).to_rows();

    'outer: for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&d, t) else {
                break 'outer;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[i][t].is_zero() {
                    continue;
                }
                let q = d[i][t].div_floor(&d[t][t]);
                sub_row_multiple(&mut d, i, t, &q);
                sub_row_multiple(&mut u, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..n {
                if d[t][j].is_zero() {
                    continue;
                }
                let q = d[t][j].div_floor(&d[t][t]);
                sub_col_multiple(&mut d, j, t, &q);
                sub_col_multiple(&mut v, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide everything left in the trailing block.
            let offender = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match offender {
                Some(i) => {
                    add_row(&mut d, t, i);
                    add_row(&mut u, t, i);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }

    SmithForm {
        left: IntMatrix::from_vec_rows(u, m),
        diag: IntMatrix::from_vec_rows(d, n),
        right: IntMatrix::from_vec_rows(v, n),
    }
}

fn smallest_nonzero(d: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in d.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(rows: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for r in rows {
            r.swap(a, b);
        }
    }
}

// row[target] -= q * row[source]
fn sub_row_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

// col[target] -= q * col[source]
fn sub_col_multiple(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    for r in rows {
        let s = r[source].clone();
        r[target] -= q * s;
    }
}

fn add_row(rows: &mut [Vec<BigInt>], target: usize, source: usize) {
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(&src) {
        *x += s;
    }
}

fn negate_row(rows: &mut [Vec<BigInt>], i: usize) {
    for x in &mut rows[i] {
        *x = -core::mem::take(x);
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_exact(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = a.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Exact inverse over the rationals (Gauss-Jordan).
pub fn rat_inverse(a: &IntMatrix) -> Result<RatMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();

    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::SingularMatrix)?;
        m.swap(k, p);
        let inv = m[k][k].recip();
        for x in &mut m[k] {
            *x *= &inv;
        }
        let pivot_row = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Ok(RatMatrix::from_fn(n, n, |i, j| m[i][n + j].clone()))
}

/// Result of congruence diagonalization: `Pᵀ·G·P = diag(values)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceDiagonal {
    pub transform: RatMatrix,
    pub values: Vec<BigRational>,
}

/// Counts of positive, negative and zero diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl CongruenceDiagonal {
    pub fn inertia(&self) -> Inertia {
        let positive = self.values.iter().filter(|x| x.is_positive()).count();
        let negative = self.values.iter().filter(|x| x.is_negative()).count();
        Inertia {
            positive,
            negative,
            zero: self.values.len() - positive - negative,
        }
    }
}

/// Diagonalizes a symmetric integer form by simultaneous row and column
/// operations over the rationals.
///
/// A zero pivot with a nonzero off-diagonal entry `g[k][j]` is repaired by
/// adding basis vector `j` to basis vector `k`, which makes the new pivot
/// `2·g[k][j]` when a diagonal swap is unavailable.
pub fn congruence_diagonalize(g: &IntMatrix) -> Result<CongruenceDiagonal> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| g.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    // Columns of p are the new basis vectors; stored as rows of pt.
    let mut pt: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();

    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in &mut m {
                    row.swap(k, j);
                }
                pt.swap(k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // basis_k += basis_j
                let row_j = m[j].clone();
                for (x, y) in m[k].iter_mut().zip(&row_j) {
                    *x += y;
                }
                for row in &mut m {
                    let x = row[j].clone();
                    row[k] += x;
                }
                let pj = pt[j].clone();
                for (x, y) in pt[k].iter_mut().zip(&pj) {
                    *x += y;
                }
            } else {
                continue;
            }
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let c = &m[i][k] / &pivot;
            // basis_i -= c · basis_k
            let row_k = m[k].clone();
            for (x, y) in m[i].iter_mut().zip(&row_k) {
                *x -= &c * y;
            }
            for row in &mut m {
                let x = &c * &row[k];
                row[i] -= x;
            }
            let pk = pt[k].clone();
            for (x, y) in pt[i].iter_mut().zip(&pk) {
                *x -= &c * y;
            }
        }
    }

    Ok(CongruenceDiagonal {
        transform: RatMatrix::from_fn(n, n, |i, j| pt[j][i].clone()),
        values: (0..n).map(|i| m[i][i].clone()).collect(),
    })
}
