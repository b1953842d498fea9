use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, MatrixError};
use crate::params::Member;
use crate::triple::{TripleRealization, WPower};

/// `Ok(note)` on pass, `Err(witness)` on failure.
pub(crate) type Outcome = Result<String, String>;

pub(crate) fn mx<T>(r: Result<T, MatrixError>) -> Result<T, String> {
    r.map_err(|e| format!("matrix error: {e}"))
}

/// First differing entry, if any.
pub(crate) fn eq_mat<F: Field>(label: &str, lhs: &Matrix<F>, rhs: &Matrix<F>) -> Result<(), String> {
    if lhs.order() != rhs.order() {
        return Err(format!("{label}: order {} vs {}", lhs.order(), rhs.order()));
    }
    let n = lhs.order();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (lhs.get(i, j), rhs.get(i, j));
            if x != y {
                return Err(format!("{label} ({i},{j}): lhs={x}, rhs={y}"));
            }
        }
    }
    Ok(())
}

pub(crate) fn eq_scalar<S: Scalar>(label: &str, lhs: &S, rhs: &S) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{label}: lhs={lhs}, rhs={rhs}"))
    }
}

pub(crate) fn is_zero_mat<F: Field>(label: &str, m: &Matrix<F>) -> Result<(), String> {
    eq_mat(label, m, &Matrix::zeros(m.field().clone(), m.order()))
}

pub(crate) fn is_scalar_mat<F: Field>(label: &str, m: &Matrix<F>, x: &F::Elem) -> Result<(), String> {
    eq_mat(label, m, &Matrix::scalar(m.field().clone(), m.order(), x.clone()))
}

/// Shared scalars and shorthands for a realization.
pub(crate) struct Ctx<'a, F: Field> {
    pub r: &'a TripleRealization<F>,
    pub q: F::Elem,
    pub qi: F::Elem,
    /// `q - q^-1`
    pub delta: F::Elem,
    /// `q^2 - q^-2`
    pub delta2: F::Elem,
    /// `q + q^-1`
    pub qsum: F::Elem,
}

impl<'a, F: Field> Ctx<'a, F> {
    pub fn new(r: &'a TripleRealization<F>) -> Self {
        let p = r.params();
        let q = p.q().clone();
        let qi = p.qpow(-1);
        Ctx {
            r,
            delta: q.clone() - &qi,
            delta2: p.qpow(2) - &p.qpow(-2),
            qsum: q.clone() + &qi,
            q,
            qi,
        }
    }

    pub fn op(&self, m: Member) -> &'a Matrix<F> {
        self.r.operator(m)
    }

    pub fn w(&self, m: Member, k: WPower) -> &'a Matrix<F> {
        self.r.w(m, k)
    }

    pub fn bar(&self, m: Member) -> &'a Matrix<F> {
        self.r.bar(m)
    }

    pub fn one(&self) -> F::Elem {
        self.r.field().one()
    }

    pub fn identity(&self) -> Matrix<F> {
        self.r.identity()
    }

    pub fn inv(&self, x: &F::Elem) -> Result<F::Elem, String> {
        x.inv().map_err(|e| format!("{e}"))
    }

    /// `[x, y] = xy - yx`.
    pub fn comm(&self, x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
        &(x * y) - &(y * x)
    }

    /// `u^{-1} x u`.
    pub fn conj(&self, inv: &Matrix<F>, x: &Matrix<F>, u: &Matrix<F>) -> Matrix<F> {
        &(inv * x) * u
    }
}
