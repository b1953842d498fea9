//! Matrix realization of a q-Racah Leonard triple and its derived operators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::{inv_nonzero, pow_nonzero, Field, Scalar};
use crate::matrix::{rank_of_rows, Matrix, MatrixError};
use crate::params::{q_pochhammer, EigenData, Member, QRacahParams};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TripleError {
    #[error("not multiplicity-free with given spectrum")]
    NotMultiplicityFree,
    #[error("commutant recurrence inconsistent at index {0}")]
    RecurrenceInconsistent(usize),
    #[error("commutant solution differs from the closed-form weight at index {0}")]
    ClosedFormMismatch(usize),
    #[error("recovered weights do not make {0} commute with the bar element")]
    CommutationFails(Member),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Which of the two explicit bases the matrices are written in.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisChoice {
    /// A lower bidiagonal with `θ_0..θ_d` on the diagonal, B with `φ_i` above it.
    #[default]
    First,
    /// A lower bidiagonal with `θ_d..θ_0` on the diagonal, B with `ϕ_i` above it.
    Second,
}

impl BasisChoice {
    pub const ALL: [BasisChoice; 2] = [BasisChoice::First, BasisChoice::Second];
}

impl fmt::Display for BasisChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisChoice::First => "first",
            BasisChoice::Second => "second",
        })
    }
}

impl std::str::FromStr for BasisChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(BasisChoice::First),
            "second" => Ok(BasisChoice::Second),
            _ => Err(format!("unknown basis {s:?}: expected \"first\" or \"second\"")),
        }
    }
}

/// Exponent `k` in `W^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WPower {
    One,
    MinusOne,
    Two,
    MinusTwo,
}

impl WPower {
    pub const ALL: [WPower; 4] = [WPower::One, WPower::MinusOne, WPower::Two, WPower::MinusTwo];

    pub fn exponent(self) -> i64 {
        match self {
            WPower::One => 1,
            WPower::MinusOne => -1,
            WPower::Two => 2,
            WPower::MinusTwo => -2,
        }
    }

    fn slot(self) -> usize {
        match self {
            WPower::One => 0,
            WPower::MinusOne => 1,
            WPower::Two => 2,
            WPower::MinusTwo => 3,
        }
    }
}

/// `Σ_i coeffs[i] (X - roots[0] I)⋯(X - roots[i-1] I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauExpansion<F: Field> {
    pub roots: Vec<F::Elem>,
    pub coeffs: Vec<F::Elem>,
}

impl<F: Field> TauExpansion<F> {
    pub fn evaluate(&self, x: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
        x.eval_tau_polynomial(&self.roots, &self.coeffs)
    }
}

/// Which branch of the closed form for a bar element applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarCase {
    /// Parameter equals `q^{d+1}`: a multiple of the first idempotent.
    Top,
    /// Parameter equals `q^{-d-1}`: a multiple of the last idempotent.
    Bottom,
    /// Otherwise `I - X/(q+q^-1)` is invertible.
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarClosedForm<F: Field> {
    pub case: BarCase,
    pub idempotent_form: Matrix<F>,
    pub tau_form: TauExpansion<F>,
}

/// Weights `t_i` of the unique (up to `ε`) element `Σ t_i E_i` that intertwines
/// as required, recovered from the recurrence with `t_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutantSolution<F: Field> {
    pub t: Vec<F::Elem>,
    pub epsilon: F::Elem,
    /// Dimension of the solution space of the homogeneous adjacency system.
    pub solution_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct MemberData<F: Field> {
    operator: Matrix<F>,
    idempotents: Vec<Matrix<F>>,
    w: [Matrix<F>; 4],
    bar: Matrix<F>,
}

/// A built triple `A, B, C` with idempotents, W-elements, bars, and `P`.
/// Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleRealization<F: Field> {
    params: QRacahParams<F>,
    eig: EigenData<F>,
    basis: BasisChoice,
    members: [MemberData<F>; 3],
    p: Matrix<F>,
}

/// `E_i = Π_{j≠i} (X - θ_j I)/(θ_i - θ_j)`, after checking that the `θ_j`
/// are distinct and annihilate `X`.
pub fn lagrange_idempotents<F: Field>(x: &Matrix<F>, eigs: &[F::Elem]) -> Result<Vec<Matrix<F>>, TripleError> {
    let n = x.order();
    if eigs.len() != n {
        return Err(TripleError::NotMultiplicityFree);
    }
    for i in 0..n {
        if eigs[..i].contains(&eigs[i]) {
            return Err(TripleError::NotMultiplicityFree);
        }
    }
    let shifted: Vec<Matrix<F>> = eigs.iter().map(|t| x.add_scalar(&-t.clone())).collect();
    let mut annihilator = Matrix::identity(x.field().clone(), n);
    for s in &shifted {
        annihilator = annihilator.mat_mul(s)?;
    }
    if !annihilator.is_zero() {
        return Err(TripleError::NotMultiplicityFree);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = Matrix::identity(x.field().clone(), n);
        let mut denom = x.field().one();
        for j in (0..n).filter(|&j| j != i) {
            e = e.mat_mul(&shifted[j])?;
            denom = denom * &(eigs[i].clone() - &eigs[j]);
        }
        out.push(e.scale(&inv_nonzero(&denom)));
    }
    Ok(out)
}

/// `E_i` through the τ-basis: `Σ_{j≥i} τ_j(X) / Π_{k≤j, k≠i} (θ_i - θ_k)`.
pub fn idempotent_tau_expansion<F: Field>(field: &F, eigs: &[F::Elem], i: usize) -> TauExpansion<F> {
    let n = eigs.len();
    let mut coeffs = vec![field.zero(); i];
    let mut denom = field.one();
    for k in 0..i {
        denom = denom * &(eigs[i].clone() - &eigs[k]);
    }
    coeffs.push(inv_nonzero(&denom));
    for j in i + 1..n {
        denom = denom * &(eigs[i].clone() - &eigs[j]);
        coeffs.push(inv_nonzero(&denom));
    }
    TauExpansion {
        roots: eigs[..n - 1].to_vec(),
        coeffs,
    }
}

/// `((-1)^i x^{-i} q^{i(d-i)})^k` for the parameter `x` of `member`.
pub fn w_weight<F: Field>(p: &QRacahParams<F>, member: Member, power: WPower, i: usize) -> F::Elem {
    let (ii, d) = (i as i64, p.d() as i64);
    let mut base = p.ppow(member, -ii) * &p.qpow(ii * (d - ii));
    if i % 2 == 1 {
        base = -base;
    }
    pow_nonzero(&base, power.exponent())
}

/// `W^k` as a polynomial in the member's operator, in the τ-basis with roots
/// `θ_0..θ_{d-1}`.
pub fn w_tau_expansion<F: Field>(p: &QRacahParams<F>, member: Member, power: WPower) -> TauExpansion<F> {
    let d = p.d() as i64;
    let q2 = p.qpow(2);
    let shift = p.param(member).clone() * &p.qpow(1 - d);
    let coeffs = (0..=d)
        .map(|i| {
            let sign = if i % 2 == 1 { -p.field().one() } else { p.field().one() };
            let qq = q_pochhammer(&q2, &q2, i as usize);
            let (num, den) = match power {
                WPower::One => (sign * &p.qpow(i * i), qq * &q_pochhammer(&shift, &q2, i as usize)),
                WPower::MinusOne => (
                    sign * &p.ppow(member, i) * &p.qpow(i * (i - d + 1)),
                    qq * &q_pochhammer(&shift, &q2, i as usize),
                ),
                WPower::Two => (p.ppow(member, -i) * &p.qpow(i * d), qq),
                WPower::MinusTwo => (sign * &p.ppow(member, i) * &p.qpow(i * (i - d + 1)), qq),
            };
            num * &inv_nonzero(&den)
        })
        .collect();
    let mut roots = p.eigenvalues(member);
    roots.pop();
    TauExpansion { roots, coeffs }
}

fn weighted_sum<F: Field>(idempotents: &[Matrix<F>], weights: impl Iterator<Item = F::Elem>) -> Matrix<F> {
    let mut acc = Matrix::zeros(idempotents[0].field().clone(), idempotents[0].order());
    for (e, w) in idempotents.iter().zip(weights) {
        acc = &acc + &e.scale(&w);
    }
    acc
}

/// Build `A, B` in the chosen basis, `C` from the cyclic relation, and every
/// derived operator.
pub fn build_triple<F: Field>(p: &QRacahParams<F>, basis: BasisChoice) -> Result<TripleRealization<F>, TripleError> {
    let field = p.field().clone();
    let d = p.d();
    let n = d + 1;
    let eig = p.eigen_data();
    let zero = field.zero();
    let one = field.one();
    let (diag_a, split): (Vec<F::Elem>, &[F::Elem]) = match basis {
        BasisChoice::First => (eig.eig_a.clone(), &eig.split_first),
        BasisChoice::Second => (eig.eig_a.iter().rev().cloned().collect(), &eig.split_second),
    };
    let a = Matrix::from_fn(field.clone(), n, |i, j| {
        if i == j {
            diag_a[i].clone()
        } else if i == j + 1 {
            one.clone()
        } else {
            zero.clone()
        }
    });
    let b = Matrix::from_fn(field.clone(), n, |i, j| {
        if i == j {
            eig.eig_b[i].clone()
        } else if j == i + 1 {
            split[i].clone()
        } else {
            zero.clone()
        }
    });
    let q = p.q().clone();
    let qi = p.qpow(-1);
    let scale = inv_nonzero(&(p.qpow(2) - &p.qpow(-2)));
    let c = (&(&a * &b).scale(&q) - &(&b * &a).scale(&qi)).scale(&-scale);
    let c = c.add_scalar(&eig.alpha_c);
    from_operators(p, eig, basis, [a, b, c])
}

fn from_operators<F: Field>(
    p: &QRacahParams<F>,
    eig: EigenData<F>,
    basis: BasisChoice,
    ops: [Matrix<F>; 3],
) -> Result<TripleRealization<F>, TripleError> {
    let n = p.d() + 1;
    let mut built = Vec::with_capacity(3);
    for (m, op) in Member::ALL.into_iter().zip(ops) {
        let idempotents = lagrange_idempotents(&op, eig.eig(m))?;
        let w = WPower::ALL.map(|k| weighted_sum(&idempotents, (0..n).map(|i| w_weight(p, m, k, i))));
        built.push((op, idempotents, w));
    }
    let bar_of = |m: Member| {
        let (_, _, w) = &built[m.index()];
        let y = &built[m.next().index()].0;
        let z = &built[m.prev().index()].0;
        &(&(&w[WPower::MinusOne.slot()] * y) * &w[WPower::One.slot()]) - z
    };
    let bars = Member::ALL.map(bar_of);
    let p_mat = &built[1].2[0] * &built[0].2[0];
    let mut members = built
        .into_iter()
        .zip(bars)
        .map(|((operator, idempotents, w), bar)| MemberData {
            operator,
            idempotents,
            w,
            bar,
        });
    let members = [(); 3].map(|_| members.next().expect("three members"));
    Ok(TripleRealization {
        params: p.clone(),
        eig,
        basis,
        members,
        p: p_mat,
    })
}

impl<F: Field> TripleRealization<F> {
    pub fn params(&self) -> &QRacahParams<F> {
        &self.params
    }

    pub fn eig(&self) -> &EigenData<F> {
        &self.eig
    }

    pub fn basis(&self) -> BasisChoice {
        self.basis
    }

    pub fn field(&self) -> &F {
        self.params.field()
    }

    pub fn order(&self) -> usize {
        self.members[0].operator.order()
    }

    pub fn operator(&self, m: Member) -> &Matrix<F> {
        &self.members[m.index()].operator
    }

    pub fn a(&self) -> &Matrix<F> {
        self.operator(Member::A)
    }

    pub fn b(&self) -> &Matrix<F> {
        self.operator(Member::B)
    }

    pub fn c(&self) -> &Matrix<F> {
        self.operator(Member::C)
    }

    /// `E_0..E_d` (or the primed families) in standard order.
    pub fn idempotents(&self, m: Member) -> &[Matrix<F>] {
        &self.members[m.index()].idempotents
    }

    /// `W^k`, `(W')^k`, or `(W'')^k` from the idempotent sums.
    pub fn w(&self, m: Member, k: WPower) -> &Matrix<F> {
        &self.members[m.index()].w[k.slot()]
    }

    /// `Ā`, `B̄`, or `C̄`.
    pub fn bar(&self, m: Member) -> &Matrix<F> {
        &self.members[m.index()].bar
    }

    /// `P = W'W`.
    pub fn p(&self) -> &Matrix<F> {
        &self.p
    }

    pub fn identity(&self) -> Matrix<F> {
        Matrix::identity(self.field().clone(), self.order())
    }

    /// A copy with one operator swapped out and every derived member left as
    /// it was. Meant for mutation testing of the verifier.
    pub fn with_operator_replaced(&self, m: Member, matrix: Matrix<F>) -> Result<Self, MatrixError> {
        let current = self.operator(m);
        if matrix.field() != current.field() {
            return Err(MatrixError::FieldMismatch {
                left: current.field().to_string(),
                right: matrix.field().to_string(),
            });
        }
        if matrix.order() != current.order() {
            return Err(MatrixError::OrderMismatch {
                left: current.order(),
                right: matrix.order(),
            });
        }
        let mut out = self.clone();
        out.members[m.index()].operator = matrix;
        Ok(out)
    }
}

/// The closed form of the bar element of `m`, both as a combination of
/// idempotents (or an inverse) and in the τ-basis of the member's operator.
pub fn bar_closed_form<F: Field>(r: &TripleRealization<F>, m: Member) -> Result<BarClosedForm<F>, MatrixError> {
    let p = r.params();
    let field = r.field();
    let d = p.d() as i64;
    let x = p.param(m);
    let y = p.param(m.next());
    let z = p.param(m.prev());
    let eigs = p.eigenvalues(m);
    let op = r.operator(m);
    let s = (y.clone() - z) * &(y.clone() - &inv_nonzero(z)) * &inv_nonzero(y) * &p.bracket(d + 1);
    let q_sum = p.q().clone() + &p.qpow(-1);
    if *x == p.qpow(d + 1) || *x == p.qpow(-d - 1) {
        let (case, idx) = if *x == p.qpow(d + 1) {
            (BarCase::Top, 0)
        } else {
            (BarCase::Bottom, p.d())
        };
        let mut tau = idempotent_tau_expansion(field, &eigs, idx);
        for c in tau.coeffs.iter_mut() {
            *c = c.clone() * &s;
        }
        return Ok(BarClosedForm {
            case,
            idempotent_form: r.idempotents(m)[idx].scale(&s),
            tau_form: tau,
        });
    }
    let diff = p.alpha(m.next()) - &p.alpha(m.prev());
    let shifted = op.scale(&-inv_nonzero(&q_sum)).add_scalar(&field.one());
    let idempotent_form = shifted.inverse()?.scale(&diff);
    let mut gamma = (x.clone() - &p.qpow(-d - 1))
        * &(y.clone() - z)
        * &(y.clone() - &inv_nonzero(z))
        * &inv_nonzero(y)
        * &p.qpow(d)
        * &inv_nonzero(&(x.clone() - &p.qpow(d - 1)));
    let mut coeffs = vec![gamma.clone()];
    for th in eigs.iter().skip(1) {
        gamma = gamma * &inv_nonzero(&(q_sum.clone() - th));
        coeffs.push(gamma.clone());
    }
    let mut roots = eigs;
    roots.pop();
    Ok(BarClosedForm {
        case: BarCase::Generic,
        idempotent_form,
        tau_form: TauExpansion { roots, coeffs },
    })
}

/// `(qθ_i - q^-1 θ_j)/(q^2 - q^-2)`.
fn adjacency_coeff<F: Field>(p: &QRacahParams<F>, eigs: &[F::Elem], i: usize, j: usize) -> F::Elem {
    (p.q().clone() * &eigs[i] - &(p.qpow(-1) * &eigs[j])) * &inv_nonzero(&(p.qpow(2) - &p.qpow(-2)))
}

/// Whether `t` satisfies `t_j/t_i + (qθ_i - q^-1 θ_j)/(q^2 - q^-2) = 0` for all
/// adjacent `i, j`, with `θ` the eigenvalues of `m`.
pub fn adjacency_relations_hold<F: Field>(p: &QRacahParams<F>, m: Member, t: &[F::Elem]) -> bool {
    let eigs = p.eigenvalues(m);
    if t.len() != eigs.len() || t.iter().any(Scalar::is_zero) {
        return false;
    }
    (1..t.len()).all(|i| {
        [(i - 1, i), (i, i - 1)]
            .into_iter()
            .all(|(a, b)| (t[b].clone() * &inv_nonzero(&t[a]) + &adjacency_coeff(p, &eigs, a, b)).is_zero())
    })
}

/// Recover the weights of `W` (or `W'`, `W''`) from the adjacency recurrence,
/// measure the dimension of the full solution space, compare with the
/// closed-form weights, and confirm the resulting element intertwines.
pub fn solve_commutant<F: Field>(r: &TripleRealization<F>, m: Member) -> Result<CommutantSolution<F>, TripleError> {
    let p = r.params();
    let field = r.field();
    let n = p.d() + 1;
    let eigs = p.eigenvalues(m);
    let mut rows = Vec::new();
    for i in 1..n {
        for (a, b) in [(i - 1, i), (i, i - 1)] {
            let mut row = vec![field.zero(); n];
            row[b] = field.one();
            row[a] = adjacency_coeff(p, &eigs, a, b);
            rows.push(row);
        }
    }
    let rank = if rows.is_empty() { 0 } else { rank_of_rows(&rows) };
    let solution_dim = n - rank;

    let mut t = vec![field.one()];
    for i in 1..n {
        let next = -adjacency_coeff(p, &eigs, i - 1, i) * &t[i - 1];
        if next.is_zero() {
            return Err(TripleError::RecurrenceInconsistent(i));
        }
        t.push(next);
    }
    if !adjacency_relations_hold(p, m, &t) {
        let bad = (1..n)
            .find(|&i| !(t[i - 1].clone() + &(adjacency_coeff(p, &eigs, i, i - 1) * &t[i])).is_zero())
            .unwrap_or(0);
        return Err(TripleError::RecurrenceInconsistent(bad));
    }
    let epsilon = t[0].clone();
    for (i, ti) in t.iter().enumerate() {
        if *ti != epsilon.clone() * &w_weight(p, m, WPower::One, i) {
            return Err(TripleError::ClosedFormMismatch(i));
        }
    }
    let es = r.idempotents(m);
    let w = weighted_sum(es, t.iter().cloned());
    let w_inv = weighted_sum(es, t.iter().map(inv_nonzero));
    let bar = w_inv
        .mat_mul(r.operator(m.next()))?
        .mat_mul(&w)?
        .mat_sub(r.operator(m.prev()))?;
    let x = r.operator(m);
    if !x.commutator(&w)?.is_zero() || !x.commutator(&bar)?.is_zero() {
        return Err(TripleError::CommutationFails(m));
    }
    Ok(CommutantSolution {
        t,
        epsilon,
        solution_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_rational, PrimeField, Rational, RationalField};
    use crate::matrix::ShapeClass;
    use crate::params::validate_params;

    fn r(n: i64, d: i64) -> Rational {
        make_rational(n, d).unwrap()
    }

    fn params(q: i64, a: Rational, b: Rational, c: Rational, d: usize) -> QRacahParams<RationalField> {
        validate_params(&RationalField, r(q, 1), a, b, c, d).unwrap()
    }

    fn standard(d: usize) -> QRacahParams<RationalField> {
        params(2, r(3, 1), r(5, 1), r(7, 1), d)
    }

    #[test]
    fn c_subdiagonal_closed_form() {
        for basis in BasisChoice::ALL {
            let p = standard(3);
            let t = build_triple(&p, basis).unwrap();
            for i in 1..=3i64 {
                let expected = -p.ppow(Member::B, -1) * &p.qpow(3 - 2 * i + 1);
                assert_eq!(t.c()[(i as usize, i as usize - 1)], expected);
            }
        }
    }

    #[test]
    fn shapes_of_the_operators() {
        let t = build_triple(&standard(2), BasisChoice::First).unwrap();
        assert_eq!(t.a().classify_shape(), ShapeClass::LowerBidiagonal);
        assert_eq!(t.b().classify_shape(), ShapeClass::UpperBidiagonal);
        assert_eq!(t.c().classify_shape(), ShapeClass::IrreducibleTridiagonal);
    }

    #[test]
    fn d0_is_scalar() {
        let p = standard(0);
        let t = build_triple(&p, BasisChoice::First).unwrap();
        assert_eq!(t.a()[(0, 0)], r(10, 3));
        assert_eq!(t.b()[(0, 0)], r(26, 5));
        assert_eq!(t.c()[(0, 0)], r(50, 7));
        for m in Member::ALL {
            assert_eq!(t.idempotents(m), &[t.identity()]);
            for k in WPower::ALL {
                assert_eq!(t.w(m, k), &t.identity());
            }
        }
        assert_eq!(t.bar(Member::A)[(0, 0)], r(26, 5) - r(50, 7));
    }

    #[test]
    fn idempotent_families() {
        let t = build_triple(&standard(3), BasisChoice::Second).unwrap();
        for m in Member::ALL {
            let es = t.idempotents(m);
            let mut sum = Matrix::zeros(RationalField, 4);
            for (i, e) in es.iter().enumerate() {
                sum = &sum + e;
                assert_eq!(e.trace(), r(1, 1));
                for (j, f) in es.iter().enumerate() {
                    let prod = e * f;
                    if i == j {
                        assert_eq!(&prod, e);
                    } else {
                        assert!(prod.is_zero());
                    }
                }
                let tau = idempotent_tau_expansion(&RationalField, t.eig().eig(m), i);
                assert_eq!(&tau.evaluate(t.operator(m)).unwrap(), e);
            }
            assert_eq!(sum, t.identity());
        }
    }

    #[test]
    fn lagrange_rejects_wrong_spectrum() {
        let t = build_triple(&standard(2), BasisChoice::First).unwrap();
        let wrong = t.eig().eig_b.clone();
        assert_eq!(
            lagrange_idempotents(t.a(), &wrong),
            Err(TripleError::NotMultiplicityFree)
        );
        let repeated = vec![r(1, 1), r(1, 1), r(2, 1)];
        assert_eq!(
            lagrange_idempotents(t.a(), &repeated),
            Err(TripleError::NotMultiplicityFree)
        );
        let single = lagrange_idempotents(&Matrix::scalar(RationalField, 1, r(4, 1)), &[r(4, 1)]).unwrap();
        assert_eq!(single, vec![Matrix::identity(RationalField, 1)]);
    }

    #[test]
    fn w_inverse_and_square() {
        let t = build_triple(&standard(2), BasisChoice::First).unwrap();
        for m in Member::ALL {
            assert_eq!(&(t.w(m, WPower::One) * t.w(m, WPower::MinusOne)), &t.identity());
            assert_eq!(&(t.w(m, WPower::One) * t.w(m, WPower::One)), t.w(m, WPower::Two));
            assert_eq!(&(t.w(m, WPower::Two) * t.w(m, WPower::MinusTwo)), &t.identity());
        }
    }

    #[test]
    fn w_polynomial_forms() {
        let p = standard(3);
        let t = build_triple(&p, BasisChoice::First).unwrap();
        for m in Member::ALL {
            for k in WPower::ALL {
                let tau = w_tau_expansion(&p, m, k);
                assert_eq!(&tau.evaluate(t.operator(m)).unwrap(), t.w(m, k), "{m} {k:?}");
            }
        }
        let lead = &w_tau_expansion(&p, Member::A, WPower::Two).coeffs[3];
        let q2 = p.qpow(2);
        assert_eq!(
            *lead,
            p.ppow(Member::A, -3) * &p.qpow(9) * &inv_nonzero(&q_pochhammer(&q2, &q2, 3))
        );
        assert_eq!(
            w_tau_expansion(&standard(0), Member::A, WPower::One).coeffs,
            vec![r(1, 1)]
        );
    }

    #[test]
    fn bars_commute_and_match_closed_form() {
        let p = standard(2);
        let t = build_triple(&p, BasisChoice::First).unwrap();
        let abar = t.bar(Member::A);
        assert!(!abar.is_zero());
        assert!(t.a().commutator(abar).unwrap().is_zero());
        assert_eq!(abar.trace(), t.b().trace() - t.c().trace());
        for m in Member::ALL {
            let cf = bar_closed_form(&t, m).unwrap();
            assert_eq!(cf.case, BarCase::Generic);
            assert_eq!(&cf.idempotent_form, t.bar(m));
            assert_eq!(&cf.tau_form.evaluate(t.operator(m)).unwrap(), t.bar(m));
        }
    }

    #[test]
    fn top_case_bar() {
        let p = params(2, r(4, 1), r(3, 1), r(5, 1), 1);
        let t = build_triple(&p, BasisChoice::First).unwrap();
        let cf = bar_closed_form(&t, Member::A).unwrap();
        assert_eq!(cf.case, BarCase::Top);
        assert_eq!(&cf.idempotent_form, t.bar(Member::A));
        assert_eq!(&cf.tau_form.evaluate(t.a()).unwrap(), t.bar(Member::A));
        let p = params(2, r(1, 4), r(3, 1), r(5, 1), 1);
        let t = build_triple(&p, BasisChoice::Second).unwrap();
        let cf = bar_closed_form(&t, Member::A).unwrap();
        assert_eq!(cf.case, BarCase::Bottom);
        assert_eq!(&cf.idempotent_form, t.bar(Member::A));
        assert_eq!(&cf.tau_form.evaluate(t.a()).unwrap(), t.bar(Member::A));
    }

    #[test]
    fn similar_pair_kills_bar() {
        let p = params(2, r(3, 1), r(5, 1), r(1, 5), 2);
        let t = build_triple(&p, BasisChoice::First).unwrap();
        assert!(t.bar(Member::A).is_zero());
        assert!(!t.bar(Member::B).is_zero());
    }

    #[test]
    fn commutant_is_one_dimensional() {
        for d in 0..4 {
            let t = build_triple(&standard(d), BasisChoice::First).unwrap();
            for m in Member::ALL {
                let sol = solve_commutant(&t, m).unwrap();
                assert_eq!(sol.solution_dim, 1);
                assert_eq!(sol.epsilon, r(1, 1));
                assert!(adjacency_relations_hold(t.params(), m, &sol.t));
                let mut bent = sol.t.clone();
                bent[d] = bent[d].clone() + &r(1, 1);
                if d > 0 {
                    assert!(!adjacency_relations_hold(t.params(), m, &bent));
                }
            }
        }
    }

    #[test]
    fn prime_field_build() {
        let f = PrimeField::new(1_000_003).unwrap();
        let p = validate_params(&f, f.element(2), f.element(3), f.element(5), f.element(7), 4).unwrap();
        let t = build_triple(&p, BasisChoice::First).unwrap();
        assert!(t.c().is_irreducible_tridiagonal());
        assert_eq!(t.p(), &(t.w(Member::B, WPower::One) * t.w(Member::A, WPower::One)));
    }

    #[test]
    fn mutation_hook_only_touches_the_operator() {
        let t = build_triple(&standard(2), BasisChoice::First).unwrap();
        let mut c = t.c().clone();
        c.set(0, 0, c[(0, 0)].clone() + &r(1, 1));
        let bent = t.with_operator_replaced(Member::C, c.clone()).unwrap();
        assert_eq!(bent.c(), &c);
        assert_eq!(bent.bar(Member::A), t.bar(Member::A));
        assert!(t
            .with_operator_replaced(Member::C, Matrix::identity(RationalField, 2))
            .is_err());
    }
}
