//! Identities among the derived scalars; these do not look at the matrices.

use super::support::{eq_scalar, Outcome};
use crate::field::{Field, Scalar};
use crate::params::{phi21_terminating, HuangFlips, Member, QRacahParams};
use crate::triple::TripleRealization;

pub(crate) fn distinct<F: Field>(r: &TripleRealization<F>) -> Outcome {
    for m in Member::ALL {
        let eigs = r.eig().eig(m);
        for i in 0..eigs.len() {
            for j in 0..i {
                if eigs[i] == eigs[j] {
                    return Err(format!("eigenvalues of {m}: theta_{j} = theta_{i} = {}", eigs[i]));
                }
            }
        }
    }
    Ok(String::new())
}

pub(crate) fn split_nonzero<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let e = r.eig();
    for (name, seq) in [("varphi", &e.split_first), ("phi", &e.split_second)] {
        if let Some(i) = seq.iter().position(Scalar::is_zero) {
            return Err(format!("{name}_{} = 0", i + 1));
        }
    }
    Ok(String::new())
}

pub(crate) fn difference<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let d = p.d() as i64;
    let one = p.field().one();
    for m in Member::ALL {
        let eigs = r.eig().eig(m);
        for i in 0..=d {
            for j in 0..=d {
                let lhs = eigs[i as usize].clone() - &eigs[j as usize];
                let rhs = (one.clone() - &p.qpow(2 * j - 2 * i))
                    * &(p.param(m).clone() * &p.qpow(2 * i - d) - &(p.ppow(m, -1) * &p.qpow(d - 2 * j)));
                eq_scalar(&format!("{m} (i,j)=({i},{j})"), &lhs, &rhs)?;
            }
        }
    }
    Ok(String::new())
}

pub(crate) fn adjacent_product<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let d = p.d() as i64;
    let qi = p.qpow(-1);
    let denom = (p.qpow(2) - &p.qpow(-2)).inv().map_err(|e| e.to_string())?;
    for m in Member::ALL {
        let th = r.eig().eig(m);
        for i in 1..=d as usize {
            let up = (p.q().clone() * &th[i] - &(qi.clone() * &th[i - 1])) * &denom;
            let down = (p.q().clone() * &th[i - 1] - &(qi.clone() * &th[i])) * &denom;
            let ii = i as i64;
            eq_scalar(
                &format!("{m} upper i={i}"),
                &up,
                &(p.param(m).clone() * &p.qpow(2 * ii - d - 1)),
            )?;
            eq_scalar(
                &format!("{m} lower i={i}"),
                &down,
                &(p.ppow(m, -1) * &p.qpow(d - 2 * ii + 1)),
            )?;
            eq_scalar(&format!("{m} product i={i}"), &(up * &down), &p.field().one())?;
        }
    }
    Ok(String::new())
}

pub(crate) fn shifted_factor<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let d = p.d() as i64;
    let qsum = p.q().clone() + &p.qpow(-1);
    for m in Member::ALL {
        let x = p.param(m);
        for (i, th) in r.eig().eig(m).iter().enumerate() {
            let ii = i as i64;
            let rhs = (x.clone() - &p.qpow(d - 2 * ii + 1))
                * &(x.clone() - &p.qpow(d - 2 * ii - 1))
                * &p.qpow(2 * ii - d)
                * &p.ppow(m, -1);
            eq_scalar(&format!("{m} i={i}"), &(th.clone() - &qsum), &rhs)?;
        }
    }
    Ok(String::new())
}

pub(crate) fn reversal<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let d = p.d() as i64;
    for m in Member::ALL {
        let th = r.eig().eig(m);
        for i in 0..=d {
            let rhs = p.ppow(m, -1) * &p.qpow(2 * i - d) + &(p.param(m).clone() * &p.qpow(d - 2 * i));
            eq_scalar(&format!("{m} i={i}"), &th[(d - i) as usize], &rhs)?;
        }
        let flips = HuangFlips {
            a: m == Member::A,
            b: m == Member::B,
            c: m == Member::C,
        };
        let flipped = p.invert_huang_data(flips).eigenvalues(m);
        let mut rev = th.to_vec();
        rev.reverse();
        if flipped != rev {
            return Err(format!(
                "inverting {} does not reverse the eigenvalues of {m}",
                m.param_name()
            ));
        }
    }
    Ok(String::new())
}

pub(crate) fn recurrence<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let d = r.params().d();
    let mut reference: Option<F::Elem> = None;
    for m in Member::ALL {
        let th = r.eig().eig(m);
        for i in 2..d {
            let ratio = (th[i - 2].clone() - &th[i + 1])
                .try_div(&(th[i - 1].clone() - &th[i]))
                .map_err(|e| e.to_string())?;
            match &reference {
                None => reference = Some(ratio),
                Some(beta) => eq_scalar(&format!("{m} i={i}"), &ratio, beta)?,
            }
        }
    }
    Ok(reference.map(|b| format!("ratio {b}")).unwrap_or_default())
}

pub(crate) fn alpha_difference<F: Field>(r: &TripleRealization<F>, m: Member) -> Outcome {
    let p = r.params();
    let d = p.d() as i64;
    let (x, y, z) = (p.param(m), p.param(m.next()), p.param(m.prev()));
    let xi = p.ppow(m, -1);
    let qsum = p.q().clone() + &p.qpow(-1);
    let rhs = (y.clone() - x)
        * &(y.clone() - &xi)
        * &(z.clone() - &p.qpow(d + 1))
        * &(z.clone() - &p.qpow(-d - 1))
        * &p.ppow(m.next(), -1)
        * &p.ppow(m.prev(), -1);
    let rhs = rhs.try_div(&qsum).map_err(|e| e.to_string())?;
    let lhs = r.eig().alpha(m).clone() - r.eig().alpha(m.next());
    eq_scalar(
        &format!("alpha_{} - alpha_{}", m.param_name(), m.next().param_name()),
        &lhs,
        &rhs,
    )?;
    Ok(String::new())
}

fn chu_sides<F: Field>(
    p: &QRacahParams<F>,
    x: &F::Elem,
    q: &F::Elem,
    j: usize,
    bottom_zero: bool,
) -> Result<(F::Elem, F::Elem), String> {
    let d = p.d() as i64;
    let jj = j as i64;
    let pw = |b: &F::Elem, n: i64| b.pow(n).map_err(|e| e.to_string());
    let q2 = q.square();
    let top1 = pw(q, -2 * jj)?;
    let top2 = x.square() * &pw(q, 2 * jj - 2 * d)?;
    let (bottom, lhs) = if bottom_zero {
        (p.field().zero(), pw(x, 2 * jj)? * &pw(q, 2 * jj * (jj - d))?)
    } else {
        let mut lhs = pw(x, jj)? * &pw(q, jj * (jj - d))?;
        if j % 2 == 1 {
            lhs = -lhs;
        }
        (x.clone() * &pw(q, 1 - d)?, lhs)
    };
    let rhs = phi21_terminating(&top1, &top2, &bottom, &q2, &q2, j).map_err(|e| e.to_string())?;
    Ok((lhs, rhs))
}

fn chu<F: Field>(r: &TripleRealization<F>, j: usize, bottom_zero: bool) -> Outcome {
    let p = r.params();
    let q = p.q().clone();
    let qi = p.qpow(-1);
    for m in Member::ALL {
        let x = p.param(m).clone();
        let xi = p.ppow(m, -1);
        for (label, xv, qv) in [("", &x, &q), (" inverted", &xi, &qi)] {
            let (lhs, rhs) = chu_sides(p, xv, qv, j, bottom_zero)?;
            eq_scalar(&format!("{}{label}", m.param_name()), &lhs, &rhs)?;
        }
    }
    Ok(String::new())
}

pub(crate) fn chu1<F: Field>(r: &TripleRealization<F>, j: usize) -> Outcome {
    chu(r, j, false)
}

pub(crate) fn chu3<F: Field>(r: &TripleRealization<F>, j: usize) -> Outcome {
    chu(r, j, true)
}
