//! Dense square matrices over an exact field.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::field::{Field, FieldError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("matrix order must be at least 1")]
    EmptyMatrix,
    #[error("expected {expected} entries, got {got}")]
    EntryCount { expected: usize, got: usize },
    #[error("entry does not belong to field {0}")]
    ForeignEntry(String),
    #[error("singular")]
    Singular,
    #[error("{coeffs} coefficients need at least {} roots, got {roots}", coeffs - 1)]
    TooManyCoefficients { coeffs: usize, roots: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Shape classes, from most to least specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    Diagonal,
    LowerBidiagonal,
    UpperBidiagonal,
    IrreducibleTridiagonal,
    Tridiagonal,
    General,
}

impl ShapeClass {
    pub fn is_tridiagonal(self) -> bool {
        !matches!(self, ShapeClass::General)
    }

    pub fn is_lower_triangular_band(self) -> bool {
        matches!(self, ShapeClass::Diagonal | ShapeClass::LowerBidiagonal)
    }

    pub fn is_upper_triangular_band(self) -> bool {
        matches!(self, ShapeClass::Diagonal | ShapeClass::UpperBidiagonal)
    }
}

/// A square matrix, row-major, with every entry in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    order: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn from_entries(field: F, order: usize, entries: Vec<F::Elem>) -> Result<Self, MatrixError> {
        if order == 0 {
            return Err(MatrixError::EmptyMatrix);
        }
        if entries.len() != order * order {
            return Err(MatrixError::EntryCount {
                expected: order * order,
                got: entries.len(),
            });
        }
        if entries.iter().any(|x| !field.contains(x)) {
            return Err(MatrixError::ForeignEntry(field.to_string()));
        }
        Ok(Matrix { field, order, entries })
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self, MatrixError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(MatrixError::EntryCount {
                    expected: order,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::from_entries(field, order, entries)
    }

    /// Panics if `order == 0`.
    pub fn from_fn(field: F, order: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        assert!(order > 0, "matrix order must be at least 1");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Matrix { field, order, entries }
    }

    pub fn zeros(field: F, order: usize) -> Self {
        let z = field.zero();
        Self::from_fn(field, order, |_, _| z.clone())
    }

    pub fn identity(field: F, order: usize) -> Self {
        Self::scalar(field.clone(), order, field.one())
    }

    /// `x I`.
    pub fn scalar(field: F, order: usize, x: F::Elem) -> Self {
        let z = field.zero();
        Self::from_fn(field, order, |i, j| if i == j { x.clone() } else { z.clone() })
    }

    pub fn diagonal(field: F, diag: &[F::Elem]) -> Self {
        let z = field.zero();
        Self::from_fn(
            field,
            diag.len(),
            |i, j| {
                if i == j {
                    diag[i].clone()
                } else {
                    z.clone()
                }
            },
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        assert!(self.field.contains(&x), "entry from a foreign field");
        self.entries[i * self.order + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.order).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Whether `self` equals `x I`.
    pub fn is_scalar(&self, x: &F::Elem) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e == x
                } else {
                    e.is_zero()
                }
            })
        })
    }

    fn compatible(&self, other: &Self) -> Result<(), MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        if self.order != other.order {
            return Err(MatrixError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.compatible(other)?;
        let n = self.order;
        let zero = self.field.zero();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = self.row(i);
            for j in 0..n {
                let mut acc = zero.clone();
                for (k, x) in row.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        acc = acc + &(x.clone() * y);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            field: self.field.clone(),
            order: n,
            entries,
        })
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |x, y| x.clone() + y))
    }

    pub fn mat_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.compatible(other)?;
        Ok(self.zip_with(other, |x, y| x.clone() - y))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Self {
        Matrix {
            field: self.field.clone(),
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(x, y)| f(x, y)).collect(),
        }
    }

    /// `x * self`.
    pub fn scale(&self, x: &F::Elem) -> Self {
        Matrix {
            field: self.field.clone(),
            order: self.order,
            entries: self.entries.iter().map(|e| e.clone() * x).collect(),
        }
    }

    /// `self + x I`.
    pub fn add_scalar(&self, x: &F::Elem) -> Self {
        let mut out = self.clone();
        for i in 0..self.order {
            let k = i * self.order + i;
            out.entries[k] = out.entries[k].clone() + x;
        }
        out
    }

    /// `[self, other] = self other - other self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, MatrixError> {
        self.mat_mul(other)?.mat_sub(&other.mat_mul(self)?)
    }

    pub fn trace(&self) -> F::Elem {
        (0..self.order).fold(self.field.zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field.clone(), self.order, |i, j| self.get(j, i).clone())
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.order);
        (0..self.order)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (x, y)| acc + &(x.clone() * y))
            })
            .collect()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.field.clone(), self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse by Gauss-Jordan elimination, pivoting on the first nonzero entry.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.order;
        let one = self.field.one();
        let zero = self.field.zero();
        let mut rows: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { one.clone() } else { zero.clone() }));
                r
            })
            .collect();
        let pivots = row_reduce(&mut rows, n);
        if pivots.len() < n {
            return Err(MatrixError::Singular);
        }
        let entries = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix {
            field: self.field.clone(),
            order: n,
            entries,
        })
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<F::Elem>> = (0..self.order).map(|i| self.row(i).to_vec()).collect();
        row_reduce(&mut rows, self.order).len()
    }

    /// `Σ_i coeffs[i] (X - roots[0] I)⋯(X - roots[i-1] I)`.
    ///
    /// The partial products are accumulated left to right so each one is
    /// reused for the next term.
    pub fn eval_tau_polynomial(&self, roots: &[F::Elem], coeffs: &[F::Elem]) -> Result<Self, MatrixError> {
        if coeffs.len() > roots.len() + 1 {
            return Err(MatrixError::TooManyCoefficients {
                coeffs: coeffs.len(),
                roots: roots.len(),
            });
        }
        if roots.iter().chain(coeffs).any(|x| !self.field.contains(x)) {
            return Err(MatrixError::ForeignEntry(self.field.to_string()));
        }
        let mut tau = Self::identity(self.field.clone(), self.order);
        let mut acc = Self::zeros(self.field.clone(), self.order);
        for (i, c) in coeffs.iter().enumerate() {
            if i > 0 {
                tau = &tau * &self.add_scalar(&-roots[i - 1].clone());
            }
            if !c.is_zero() {
                acc = &acc + &tau.scale(c);
            }
        }
        Ok(acc)
    }

    pub fn classify_shape(&self) -> ShapeClass {
        let n = self.order;
        let mut sub = 0;
        let mut sup = 0;
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j).is_zero() || i == j {
                    continue;
                }
                if i == j + 1 {
                    sub += 1;
                } else if j == i + 1 {
                    sup += 1;
                } else {
                    return ShapeClass::General;
                }
            }
        }
        match (sub, sup) {
            (0, 0) => ShapeClass::Diagonal,
            (_, 0) => ShapeClass::LowerBidiagonal,
            (0, _) => ShapeClass::UpperBidiagonal,
            (s, t) if s == n - 1 && t == n - 1 => ShapeClass::IrreducibleTridiagonal,
            _ => ShapeClass::Tridiagonal,
        }
    }

    /// Tridiagonal with every sub- and superdiagonal entry nonzero. A 1x1
    /// matrix qualifies vacuously.
    pub fn is_irreducible_tridiagonal(&self) -> bool {
        self.order == 1 || self.classify_shape() == ShapeClass::IrreducibleTridiagonal
    }

    /// The matrix whose columns are `v, Xv, ..., X^{n-1} v`.
    pub fn krylov(&self, v: &[F::Elem]) -> Self {
        let n = self.order;
        let mut cols = Vec::with_capacity(n);
        let mut cur = v.to_vec();
        for k in 0..n {
            if k > 0 {
                cur = self.mul_vec(&cur);
            }
            cols.push(cur.clone());
        }
        Self::from_fn(self.field.clone(), n, |i, j| cols[j][i].clone())
    }
}

/// Reduce `rows` to reduced row echelon form over the first `ncols` columns
/// (further columns ride along as an augmented block). Returns the pivot
/// columns.
pub(crate) fn row_reduce<S: Scalar>(rows: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.clone() * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.clone() - &(factor.clone() * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a rectangular system given as rows.
pub fn rank_of_rows<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut work = rows.to_vec();
    row_reduce(&mut work, ncols).len()
}

/// Solve `Σ_k x_k columns[k] = target` exactly. Returns `None` when the
/// system is inconsistent; free variables are set to zero.
pub fn solve_in_span<F: Field>(field: &F, columns: &[Vec<F::Elem>], target: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let k = columns.len();
    let mut rows: Vec<Vec<F::Elem>> = (0..target.len())
        .map(|i| {
            let mut r: Vec<F::Elem> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut x = vec![field.zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r][k].clone();
    }
    Some(x)
}

impl<F: Field> Index<(usize, usize)> for Matrix<F> {
    type Output = F::Elem;
    fn index(&self, (i, j): (usize, usize)) -> &F::Elem {
        self.get(i, j)
    }
}

// The operator forms panic on mismatched operands; they are meant for code
// where every matrix comes from one realization. Use `mat_mul` and friends
// when operands are untrusted.

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.mat_mul(rhs).expect("matrix product operands")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.mat_add(rhs).expect("matrix sum operands")
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.mat_sub(rhs).expect("matrix difference operands")
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        Matrix {
            field: self.field.clone(),
            order: self.order,
            entries: self.entries.iter().map(|x| -x.clone()).collect(),
        }
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{}>[{}x{}]", self.field, self.order, self.order)?;
        for i in 0..self.order {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
