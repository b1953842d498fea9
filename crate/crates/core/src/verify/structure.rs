//! Checks on the triple itself, its idempotents, W-elements, and bars.

use super::support::{eq_mat, eq_scalar, is_scalar_mat, is_zero_mat, mx, Ctx, Outcome};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, ShapeClass};
use crate::params::Member;
use crate::triple::{
    bar_closed_form, idempotent_tau_expansion, solve_commutant, w_tau_expansion, BarCase, TripleRealization, WPower,
};

pub(crate) fn shape<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let d = r.params().d();
    let (want_a, want_b) = if d == 0 {
        (ShapeClass::Diagonal, ShapeClass::Diagonal)
    } else {
        (ShapeClass::LowerBidiagonal, ShapeClass::UpperBidiagonal)
    };
    let got_a = r.a().classify_shape();
    let got_b = r.b().classify_shape();
    if got_a != want_a {
        return Err(format!("A is {got_a:?}, expected {want_a:?}"));
    }
    if got_b != want_b {
        return Err(format!("B is {got_b:?}, expected {want_b:?}"));
    }
    if !r.c().is_irreducible_tridiagonal() {
        return Err(format!(
            "C is {:?}, expected irreducible tridiagonal",
            r.c().classify_shape()
        ));
    }
    Ok(String::new())
}

pub(crate) fn idempotents<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let one = r.field().one();
    for m in Member::ALL {
        let es = r.idempotents(m);
        let eigs = r.eig().eig(m);
        let mut sum = Matrix::zeros(r.field().clone(), r.order());
        let mut spectral = sum.clone();
        for (i, e) in es.iter().enumerate() {
            sum = &sum + e;
            spectral = &spectral + &e.scale(&eigs[i]);
            eq_scalar(&format!("tr E_{i} of {m}"), &e.trace(), &one)?;
            for (j, f) in es.iter().enumerate() {
                let prod = e * f;
                if i == j {
                    eq_mat(&format!("E_{i}^2 = E_{i} of {m}"), &prod, e)?;
                } else {
                    is_zero_mat(&format!("E_{i}E_{j} of {m}"), &prod)?;
                }
            }
            let tau = idempotent_tau_expansion(r.field(), eigs, i);
            eq_mat(
                &format!("tau form of E_{i} of {m}"),
                &mx(tau.evaluate(r.operator(m)))?,
                e,
            )?;
        }
        eq_mat(&format!("sum of idempotents of {m}"), &sum, &r.identity())?;
        eq_mat(&format!("{m} = sum theta_i E_i"), r.operator(m), &spectral)?;
    }
    Ok(String::new())
}

pub(crate) fn min_poly<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let mut acc = r.identity();
        for th in r.eig().eig(m) {
            acc = &acc * &r.operator(m).add_scalar(&-th.clone());
        }
        is_zero_mat(&format!("minimal polynomial of {m}"), &acc)?;
    }
    Ok(String::new())
}

/// Columns: one nonzero column of each idempotent.
fn eigenbasis<F: Field>(es: &[Matrix<F>]) -> Result<Matrix<F>, String> {
    let n = es.len();
    let mut cols = Vec::with_capacity(n);
    for (i, e) in es.iter().enumerate() {
        let col = (0..n)
            .map(|j| e.column(j))
            .find(|c| c.iter().any(|x| !x.is_zero()))
            .ok_or_else(|| format!("E_{i} is zero"))?;
        cols.push(col);
    }
    Ok(Matrix::from_fn(es[0].field().clone(), n, |i, j| cols[j][i].clone()))
}

pub(crate) fn leonard_triple<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let s = eigenbasis(r.idempotents(m))?;
        let si = mx(s.inverse())?;
        let diag = &(&si * r.operator(m)) * &s;
        eq_mat(
            &format!("{m} in its eigenbasis"),
            &diag,
            &Matrix::diagonal(r.field().clone(), r.eig().eig(m)),
        )?;
        for other in [m.next(), m.prev()] {
            let t = &(&si * r.operator(other)) * &s;
            if !t.is_irreducible_tridiagonal() {
                return Err(format!("{other} in the eigenbasis of {m} is {:?}", t.classify_shape()));
            }
        }
    }
    Ok(String::new())
}

pub(crate) fn relation<F: Field>(r: &TripleRealization<F>, m: Member) -> Outcome {
    let c = Ctx::new(r);
    let (x, y, z) = (c.op(m), c.op(m.next()), c.op(m.prev()));
    let inner = &(&(y * z).scale(&c.q) - &(z * y).scale(&c.qi)).scale(&c.inv(&c.delta2)?);
    let lhs = x + inner;
    is_scalar_mat(&format!("relation for {m}"), &lhs, r.eig().alpha(m))?;
    Ok(String::new())
}

pub(crate) fn cubic<F: Field>(r: &TripleRealization<F>, xm: Member, ym: Member, zm: Member) -> Outcome {
    let c = Ctx::new(r);
    let (x, y) = (c.op(xm), c.op(ym));
    let d2sq = c.delta2.square();
    let q2sum = c.q.square() + &c.qi.square();
    let xx = x * x;
    let lhs = &(&(&(&xx * y) - &(&(x * y) * x).scale(&q2sum)) + &(y * &xx)) + &y.scale(&d2sq);
    let rhs = &c.identity().scale(&(r.eig().alpha(ym).clone() * &d2sq))
        - &x.scale(&(r.eig().alpha(zm).clone() * &c.delta * &c.delta2));
    eq_mat(&format!("cubic relation ({xm},{ym})"), &lhs, &rhs)?;
    Ok(String::new())
}

pub(crate) fn tridiagonality<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let es = r.idempotents(m);
        for other in [m.next(), m.prev()] {
            let y = r.operator(other);
            for (i, ei) in es.iter().enumerate() {
                let left = ei * y;
                for (j, ej) in es.iter().enumerate() {
                    let prod = &left * ej;
                    let gap = i.abs_diff(j);
                    if gap > 1 && !prod.is_zero() {
                        return Err(format!("E_{i} {other} E_{j} != 0 for idempotents of {m}"));
                    }
                    if gap == 1 && prod.is_zero() {
                        return Err(format!("E_{i} {other} E_{j} = 0 for idempotents of {m}"));
                    }
                }
            }
        }
    }
    Ok(String::new())
}

pub(crate) fn trace_operators<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let bracket = p.bracket(p.d() as i64 + 1);
    for m in Member::ALL {
        eq_scalar(&format!("tr {m}"), &r.operator(m).trace(), &(p.param_sum(m) * &bracket))?;
    }
    Ok(String::new())
}

pub(crate) fn trace_idempotent<F: Field>(r: &TripleRealization<F>, xm: Member, ym: Member, zm: Member) -> Outcome {
    let c = Ctx::new(r);
    let qsum_inv = c.inv(&c.qsum)?;
    let (alpha_y, alpha_z) = (r.eig().alpha(ym), r.eig().alpha(zm));
    let rhs = alpha_y.clone() - alpha_z;
    for (i, (e, th)) in r.idempotents(xm).iter().zip(r.eig().eig(xm)).enumerate() {
        let t = (c.op(ym) * e).trace();
        let first = t * &(c.qsum.clone() + th) * &qsum_inv - alpha_z;
        let second = c.one() - &(th.clone() * &qsum_inv);
        eq_scalar(&format!("i={i}"), &(first * &second), &rhs)?;
    }
    Ok(String::new())
}

pub(crate) fn w_inverse<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let id = r.identity();
    for m in Member::ALL {
        let (w, wi) = (r.w(m, WPower::One), r.w(m, WPower::MinusOne));
        eq_mat(&format!("W W^-1 for {m}"), &(w * wi), &id)?;
        eq_mat(&format!("W^-1 W for {m}"), &(wi * w), &id)?;
        eq_mat(&format!("eliminated inverse for {m}"), &mx(w.inverse())?, wi)?;
    }
    Ok(String::new())
}

pub(crate) fn w_squares<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let (w, wi) = (r.w(m, WPower::One), r.w(m, WPower::MinusOne));
        eq_mat(&format!("W^2 for {m}"), &(w * w), r.w(m, WPower::Two))?;
        eq_mat(&format!("W^-2 for {m}"), &(wi * wi), r.w(m, WPower::MinusTwo))?;
    }
    Ok(String::new())
}

pub(crate) fn w_commute<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    for m in Member::ALL {
        let x = c.op(m);
        let (w, wi) = (c.w(m, WPower::One), c.w(m, WPower::MinusOne));
        is_zero_mat(&format!("[{m}, W]"), &c.comm(x, w))?;
        let bar = &c.conj(wi, c.op(m.next()), w) - c.op(m.prev());
        is_zero_mat(&format!("[{m}, W^-1 {} W - {}]", m.next(), m.prev()), &c.comm(x, &bar))?;
    }
    Ok(String::new())
}

pub(crate) fn w_unique<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let sol = solve_commutant(r, m).map_err(|e| format!("{m}: {e}"))?;
        if sol.solution_dim != 1 {
            return Err(format!("{m}: solution space has dimension {}", sol.solution_dim));
        }
    }
    Ok("solution space dimension 1".into())
}

pub(crate) fn bar_membership<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    for m in Member::ALL {
        let bar = c.bar(m);
        is_zero_mat(&format!("[{m}bar, {m}]"), &c.comm(bar, c.op(m)))?;
        let mut diag = Matrix::zeros(r.field().clone(), r.order());
        for e in r.idempotents(m) {
            diag = &diag + &(&(e * bar) * e);
        }
        eq_mat(&format!("{m}bar = sum E_i {m}bar E_i"), &diag, bar)?;
    }
    Ok(String::new())
}

pub(crate) fn bar_alt_form<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    for m in Member::ALL {
        let (w, wi) = (c.w(m, WPower::One), c.w(m, WPower::MinusOne));
        let alt = c.op(m.next()) - &(&(w * c.op(m.prev())) * wi);
        eq_mat(&format!("{m}bar alternative form"), c.bar(m), &alt)?;
    }
    Ok(String::new())
}

pub(crate) fn bar_trace<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let bracket = p.bracket(p.d() as i64 + 1);
    for m in Member::ALL {
        let t = r.bar(m).trace();
        let diff = r.operator(m.next()).trace() - &r.operator(m.prev()).trace();
        eq_scalar(&format!("tr {m}bar vs traces"), &t, &diff)?;
        let (y, z) = (p.param(m.next()), p.param(m.prev()));
        let closed = (y.clone() - z) * &(y.clone() - &p.ppow(m.prev(), -1)) * &p.ppow(m.next(), -1) * &bracket;
        eq_scalar(&format!("tr {m}bar closed form"), &t, &closed)?;
    }
    Ok(String::new())
}

pub(crate) fn bar_inverse<F: Field>(r: &TripleRealization<F>, m: Member) -> Outcome {
    let c = Ctx::new(r);
    let shifted = c.op(m).scale(&-c.inv(&c.qsum)?).add_scalar(&c.one());
    let target = r.eig().alpha(m.next()).clone() - r.eig().alpha(m.prev());
    is_scalar_mat(&format!("{m}bar (I - {m}/(q+q^-1))"), &(c.bar(m) * &shifted), &target)?;
    is_scalar_mat(&format!("(I - {m}/(q+q^-1)) {m}bar"), &(&shifted * c.bar(m)), &target)?;
    Ok(String::new())
}

pub(crate) fn bar_closed<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let mut cases = Vec::new();
    for m in Member::ALL {
        let cf = mx(bar_closed_form(r, m))?;
        eq_mat(&format!("{m}bar closed form"), &cf.idempotent_form, r.bar(m))?;
        eq_mat(
            &format!("{m}bar tau form"),
            &mx(cf.tau_form.evaluate(r.operator(m)))?,
            r.bar(m),
        )?;
        cases.push(match cf.case {
            BarCase::Top => "top",
            BarCase::Bottom => "bottom",
            BarCase::Generic => "generic",
        });
    }
    Ok(format!("cases {}", cases.join("/")))
}

pub(crate) fn poly_w<F: Field>(r: &TripleRealization<F>, k: WPower) -> Outcome {
    for m in Member::ALL {
        let tau = w_tau_expansion(r.params(), m, k);
        eq_mat(&format!("{m}"), &mx(tau.evaluate(r.operator(m)))?, r.w(m, k))?;
    }
    Ok(String::new())
}
