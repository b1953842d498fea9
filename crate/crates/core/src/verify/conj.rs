//! Conjugation of the triple by powers of the W-elements.

use super::support::{eq_mat, Ctx, Outcome};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::params::Member;
use crate::triple::{TripleRealization, WPower};

fn w_name(m: Member) -> &'static str {
    match m {
        Member::A => "W",
        Member::B => "W'",
        Member::C => "W''",
    }
}

fn sandwich(by: Member, inverse_first: bool, power: u8, x: Member) -> String {
    let w = w_name(by);
    let (l, r) = match (inverse_first, power) {
        (true, 1) => (format!("{w}^-1"), w.to_string()),
        (false, 1) => (w.to_string(), format!("{w}^-1")),
        (true, _) => (format!("{w}^-2"), format!("{w}^2")),
        (false, _) => (format!("{w}^2"), format!("{w}^-2")),
    };
    format!("{l} {} {r}", x.name())
}

pub(crate) fn table1_reference(by: Member, inverse_first: bool, x: Member) -> String {
    let (xn, yn, zn) = (by.name(), by.next().name(), by.prev().name());
    let rhs = match (inverse_first, x == by, x == by.next()) {
        (_, true, _) => xn.to_string(),
        (true, _, true) => format!("{zn} + {xn}bar"),
        (true, _, false) => format!("{yn} + [{zn},{xn}]/(q-q^-1) - {xn}bar"),
        (false, _, true) => format!("{zn} + [{xn},{yn}]/(q-q^-1) + {xn}bar"),
        (false, _, false) => format!("{yn} - {xn}bar"),
    };
    format!("{} = {rhs}", sandwich(by, inverse_first, 1, x))
}

pub(crate) fn table2_reference(by: Member, inverse_first: bool, x: Member) -> String {
    let (xn, yn, zn) = (by.name(), by.next().name(), by.prev().name());
    let rhs = match (inverse_first, x == by, x == by.next()) {
        (_, true, _) => xn.to_string(),
        (true, _, true) => format!("{yn} + [{zn},{xn}]/(q-q^-1)"),
        (true, _, false) => format!("{zn} - [{xn},{yn}]/(q-q^-1) + [{xn},[{xn},{zn}]]/(q-q^-1)^2"),
        (false, _, true) => format!("{yn} - [{zn},{xn}]/(q-q^-1) + [{xn},[{xn},{yn}]]/(q-q^-1)^2"),
        (false, _, false) => format!("{zn} + [{xn},{yn}]/(q-q^-1)"),
    };
    format!("{} = {rhs}", sandwich(by, inverse_first, 2, x))
}

pub(crate) fn table1<F: Field>(r: &TripleRealization<F>, by: Member, inverse_first: bool, x: Member) -> Outcome {
    let c = Ctx::new(r);
    let di = c.inv(&c.delta)?;
    let (xo, yo, zo) = (c.op(by), c.op(by.next()), c.op(by.prev()));
    let bar = c.bar(by);
    let (w, wi) = (c.w(by, WPower::One), c.w(by, WPower::MinusOne));
    let lhs = if inverse_first {
        c.conj(wi, c.op(x), w)
    } else {
        c.conj(w, c.op(x), wi)
    };
    let rhs = match (inverse_first, x == by, x == by.next()) {
        (_, true, _) => xo.clone(),
        (true, _, true) => zo + bar,
        (true, _, false) => &(yo + &c.comm(zo, xo).scale(&di)) - bar,
        (false, _, true) => &(zo + &c.comm(xo, yo).scale(&di)) + bar,
        (false, _, false) => yo - bar,
    };
    eq_mat(&sandwich(by, inverse_first, 1, x), &lhs, &rhs)?;
    Ok(String::new())
}

pub(crate) fn table2<F: Field>(r: &TripleRealization<F>, by: Member, inverse_first: bool, x: Member) -> Outcome {
    let c = Ctx::new(r);
    let di = c.inv(&c.delta)?;
    let di2 = di.square();
    let (xo, yo, zo) = (c.op(by), c.op(by.next()), c.op(by.prev()));
    let (w2, wi2) = (c.w(by, WPower::Two), c.w(by, WPower::MinusTwo));
    let lhs = if inverse_first {
        c.conj(wi2, c.op(x), w2)
    } else {
        c.conj(w2, c.op(x), wi2)
    };
    let rhs = match (inverse_first, x == by, x == by.next()) {
        (_, true, _) => xo.clone(),
        (true, _, true) => yo + &c.comm(zo, xo).scale(&di),
        (true, _, false) => &(zo - &c.comm(xo, yo).scale(&di)) + &c.comm(xo, &c.comm(xo, zo)).scale(&di2),
        (false, _, true) => &(yo - &c.comm(zo, xo).scale(&di)) + &c.comm(xo, &c.comm(xo, yo)).scale(&di2),
        (false, _, false) => zo + &c.comm(xo, yo).scale(&di),
    };
    eq_mat(&sandwich(by, inverse_first, 2, x), &lhs, &rhs)?;
    Ok(String::new())
}

pub(crate) fn w_conj_difference<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    let di = c.inv(&c.delta)?;
    for m in Member::ALL {
        let x = c.op(m);
        let (w, wi) = (c.w(m, WPower::One), c.w(m, WPower::MinusOne));
        for t in [m.next(), m.prev()] {
            let y = c.op(t);
            let lhs = &c.conj(w, y, wi) - &c.conj(wi, y, w);
            eq_mat(&format!("{} {t}", w_name(m)), &lhs, &c.comm(x, y).scale(&di))?;
        }
    }
    Ok(String::new())
}

pub(crate) fn w_square_conj_sum<F: Field>(r: &TripleRealization<F>) -> Outcome {
    let c = Ctx::new(r);
    let di2 = c.inv(&c.delta)?.square();
    let two = r.field().from_int(2);
    for m in Member::ALL {
        let x = c.op(m);
        let (w2, wi2) = (c.w(m, WPower::Two), c.w(m, WPower::MinusTwo));
        for t in [m.next(), m.prev()] {
            let y = c.op(t);
            let lhs = &c.conj(w2, y, wi2) + &c.conj(wi2, y, w2);
            let rhs = &y.scale(&two) + &c.comm(x, &c.comm(x, y)).scale(&di2);
            eq_mat(&format!("{} {t}", w_name(m)), &lhs, &rhs)?;
        }
    }
    Ok(String::new())
}

pub(crate) fn lusztig<F: Field>(r: &TripleRealization<F>, square_first: bool, target_next: bool) -> Outcome {
    let c = Ctx::new(r);
    let denom = c.inv(&(c.delta.clone() * &c.delta2))?;
    let (outer_left, outer_right) = if square_first {
        (c.qi.clone(), c.q.clone())
    } else {
        (c.q.clone(), c.qi.clone())
    };
    for m in Member::ALL {
        let x = c.op(m);
        let t = if target_next { m.next() } else { m.prev() };
        let y = c.op(t);
        let (w2, wi2) = (c.w(m, WPower::Two), c.w(m, WPower::MinusTwo));
        let lhs = if square_first {
            c.conj(w2, y, wi2)
        } else {
            c.conj(wi2, y, w2)
        };
        let xx = x * x;
        let num: Matrix<F> =
            &(&(&xx * y).scale(&outer_left) - &(&(x * y) * x).scale(&c.qsum)) + &(y * &xx).scale(&outer_right);
        let rhs = y + &num.scale(&denom);
        eq_mat(&format!("{} {t}", w_name(m)), &lhs, &rhs)?;
    }
    Ok(String::new())
}
