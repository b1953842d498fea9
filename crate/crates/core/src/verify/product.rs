//! Products of the W-elements and the modular case a = b = c.

use super::support::{eq_mat, eq_scalar, is_scalar_mat, is_zero_mat, mx, Ctx, Outcome};
use crate::field::{Field, Scalar};
use crate::matrix::{solve_in_span, Matrix};
use crate::params::{is_similar, Member};
use crate::triple::{TripleRealization, WPower};

/// `W'W`, `W''W'`, `WW''`.
fn products<F: Field>(r: &TripleRealization<F>) -> Vec<Matrix<F>> {
    Member::ALL
        .into_iter()
        .map(|m| r.w(m.next(), WPower::One) * r.w(m, WPower::One))
        .collect()
}

fn sum_abc<F: Field>(r: &TripleRealization<F>) -> Matrix<F> {
    &(r.a() + r.b()) + r.c()
}

/// `(abc)^-d q^{d(d-1)}`.
fn product_scalar<F: Field>(r: &TripleRealization<F>) -> Result<F::Elem, String> {
    let p = r.params();
    let d = p.d() as i64;
    let abc = p.a().clone() * p.b() * p.c();
    Ok(abc.pow(-d).map_err(|e| e.to_string())? * &p.qpow(d * (d - 1)))
}

const PRODUCT_NAMES: [&str; 3] = ["W'W", "W''W'", "WW''"];

pub(crate) fn squares<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let s = product_scalar(r)?;
    for m in Member::ALL {
        let sq = |k: Member| r.w(k, WPower::Two);
        let prod = &(sq(m.prev()) * sq(m.next())) * sq(m);
        is_scalar_mat(&format!("rotation starting at {m}"), &prod, &s)?;
    }
    Ok(format!("scalar {s}"))
}

pub(crate) fn sum_commutes<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    let s = sum_abc(r);
    for (name, pm) in PRODUCT_NAMES.iter().zip(products(r)) {
        is_zero_mat(&format!("[{name}, A+B+C]"), &c.comm(&pm, &s))?;
    }
    Ok(String::new())
}

pub(crate) fn cyclic<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let n = r.order();
    let mut e0 = vec![r.field().zero(); n];
    e0[0] = r.field().one();
    let rank = sum_abc(r).krylov(&e0).rank();
    if rank == n {
        Ok(String::new())
    } else {
        Err(format!("Krylov rank {rank} < {n}"))
    }
}

pub(crate) fn commutant<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let s = sum_abc(r);
    let mut powers = Vec::with_capacity(r.order());
    let mut cur = r.identity();
    for _ in 0..r.order() {
        powers.push(cur.entries().to_vec());
        cur = &cur * &s;
    }
    for (name, pm) in PRODUCT_NAMES.iter().zip(products(r)) {
        if solve_in_span(r.field(), &powers, pm.entries()).is_none() {
            return Err(format!("{name} is not a polynomial in A+B+C"));
        }
    }
    Ok(String::new())
}

pub(crate) fn mutual<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    let ps = products(r);
    for i in 0..3 {
        for j in i + 1..3 {
            is_zero_mat(
                &format!("[{}, {}]", PRODUCT_NAMES[i], PRODUCT_NAMES[j]),
                &c.comm(&ps[i], &ps[j]),
            )?;
        }
    }
    Ok(String::new())
}

pub(crate) fn scalar<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let s = product_scalar(r)?;
    let ps = products(r);
    is_scalar_mat("(W'W)(W''W')(WW'')", &(&(&ps[0] * &ps[1]) * &ps[2]), &s)?;
    Ok(format!("scalar {s}"))
}

pub(crate) fn three_part<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let p = r.params();
    let mut vanishing = Vec::new();
    for m in Member::ALL {
        let zero = r.bar(m).is_zero();
        let similar = is_similar(p.param(m.next()), p.param(m.prev()));
        if zero != similar {
            return Err(format!(
                "{m}bar {} but {} {} {}",
                if zero { "= 0" } else { "!= 0" },
                m.next().param_name(),
                if similar { "~" } else { "!~" },
                m.prev().param_name()
            ));
        }
        if zero {
            vanishing.push(format!("{m}bar"));
        }
    }
    if vanishing.is_empty() {
        Ok("no bar vanishes".into())
    } else {
        Ok(format!("{} = 0", vanishing.join(", ")))
    }
}

pub(crate) fn cycle<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    let pm = r.p();
    let pi = mx(pm.inverse())?;
    let ps = products(r);
    eq_mat("P = W'W", pm, &ps[0])?;
    eq_mat("P = W''W'", pm, &ps[1])?;
    eq_mat("P = WW''", pm, &ps[2])?;
    for m in Member::ALL {
        is_zero_mat(&format!("{m}bar"), c.bar(m))?;
        let n = m.next();
        if r.eig().eig(m) != r.eig().eig(n) {
            return Err(format!("eigenvalues of {m} and {n} differ"));
        }
        eq_mat(&format!("P^-1 {m} P = {n}"), &c.conj(&pi, c.op(m), pm), c.op(n))?;
        for (i, (e, f)) in r.idempotents(m).iter().zip(r.idempotents(n)).enumerate() {
            eq_mat(&format!("P^-1 E_{i}({m}) P = E_{i}({n})"), &c.conj(&pi, e, pm), f)?;
        }
        eq_mat(
            &format!("P^-1 W_{m} P = W_{n}"),
            &c.conj(&pi, c.w(m, WPower::One), pm),
            c.w(n, WPower::One),
        )?;
    }
    let p = r.params();
    let d = p.d() as i64;
    let s = p.a().pow(-3 * d).map_err(|e| e.to_string())? * &p.qpow(d * (d - 1));
    let cube = &(pm * pm) * pm;
    is_scalar_mat("P^3", &cube, &s)?;
    eq_scalar("P^3 against the product scalar", &s, &product_scalar(r)?)?;
    Ok(format!("P^3 scalar {s}"))
}
