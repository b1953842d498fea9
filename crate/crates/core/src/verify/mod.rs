//! Catalog of exact identity checks over a built triple, and the runner that
//! turns them into a [`VerificationReport`].

mod conj;
mod product;
mod scalar;
mod structure;
mod support;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::params::Member;
use crate::triple::{BasisChoice, TripleRealization, WPower};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

/// When a check is meaningful. Inapplicable checks are reported as skipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Always,
    MinDiameter(usize),
    EqualParameters,
}

impl Applicability {
    fn holds<F: Field>(self, r: &TripleRealization<F>) -> bool {
        let p = r.params();
        match self {
            Applicability::Always => true,
            Applicability::MinDiameter(n) => p.d() >= n,
            Applicability::EqualParameters => p.a() == p.b() && p.b() == p.c(),
        }
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicability::Always => f.write_str("always"),
            Applicability::MinDiameter(n) => write!(f, "d >= {n}"),
            Applicability::EqualParameters => f.write_str("a = b = c"),
        }
    }
}

/// A catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckDescriptor {
    pub id: String,
    /// The identity the check encodes, written out.
    pub reference: String,
    pub applicability: Applicability,
    kind: CheckKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum CheckKind {
    EigDistinct,
    EigSplitNonzero,
    EigDifference,
    EigAdjacentProduct,
    EigShiftedFactor,
    EigReversal,
    EigRecurrence,
    Shape,
    Idempotents,
    MinPoly,
    LeonardTriple,
    Relation(Member),
    Cubic(Member, Member),
    TriDiagonality,
    TraceOperators,
    TraceIdempotent(Member, Member),
    AlphaDifference(Member),
    WInverse,
    WSquares,
    WCommute,
    WUnique,
    BarMembership,
    BarAltForm,
    BarTrace,
    BarInverse(Member),
    BarClosed,
    Table1 { by: Member, inverse_first: bool, x: Member },
    WConjDifference,
    WSquareConjSum,
    Table2 { by: Member, inverse_first: bool, x: Member },
    Lusztig { square_first: bool, target_next: bool },
    PolyW(WPower),
    Chu1(usize),
    Chu3(usize),
    ProdSquares,
    ProdSumCommutes,
    ProdCyclic,
    ProdCommutant,
    ProdMutual,
    ProdScalar,
    ModThreePart,
    ModCycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    #[serde(rename = "paper_ref")]
    pub reference: String,
    pub status: CheckStatus,
    /// Skip reason, failure witness, or a short note on what passed.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub q: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: usize,
    pub field: String,
    pub basis: BasisChoice,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub params: ReportParams,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

fn entry(
    id: impl Into<String>,
    reference: impl Into<String>,
    applicability: Applicability,
    kind: CheckKind,
) -> CheckDescriptor {
    CheckDescriptor {
        id: id.into(),
        reference: reference.into(),
        applicability,
        kind,
    }
}

fn lower(m: Member) -> &'static str {
    m.param_name()
}

fn w_row_name(by: Member, inverse_first: bool, squared: bool) -> String {
    let primes = match by {
        Member::A => "w",
        Member::B => "wp",
        Member::C => "wpp",
    };
    let power = match (squared, inverse_first) {
        (false, true) => "m1",
        (false, false) => "1",
        (true, true) => "m2",
        (true, false) => "2",
    };
    format!("{primes}{power}")
}

/// The full catalog for diameter `d`, in report order. Only the q-series
/// entries depend on `d` (one per `j` in `0..=d`).
pub fn list_checks(d: usize) -> Vec<CheckDescriptor> {
    use Applicability::*;
    use CheckKind::*;
    let mut v = vec![
        entry(
            "eig.distinct",
            "theta_i, theta'_i, theta''_i mutually distinct",
            Always,
            EigDistinct,
        ),
        entry(
            "eig.phinonzero",
            "varphi_i != 0 and phi_i != 0 for 1 <= i <= d",
            Always,
            EigSplitNonzero,
        ),
        entry(
            "eig.lem1",
            "theta_i - theta_j = (1 - q^{2j-2i})(a q^{2i-d} - a^-1 q^{d-2j})",
            Always,
            EigDifference,
        ),
        entry(
            "eig.lem4",
            "(q theta_i - q^-1 theta_j)(q theta_j - q^-1 theta_i) = (q^2 - q^-2)^2 for |i-j| = 1",
            MinDiameter(1),
            EigAdjacentProduct,
        ),
        entry(
            "eig.qqth",
            "theta_i - q - q^-1 = (a - q^{d-2i+1})(a - q^{d-2i-1}) q^{2i-d} a^-1",
            Always,
            EigShiftedFactor,
        ),
        entry(
            "eig.inv",
            "theta_{d-i} = a^-1 q^{2i-d} + a q^{d-2i}; inverting a reverses theta",
            Always,
            EigReversal,
        ),
        entry(
            "eig.eigreq",
            "(theta_{i-2} - theta_{i+1})/(theta_{i-1} - theta_i) independent of i and of the member",
            MinDiameter(3),
            EigRecurrence,
        ),
        entry(
            "triple.shape",
            "A lower bidiagonal, B upper bidiagonal, C irreducible tridiagonal",
            Always,
            Shape,
        ),
        entry(
            "triple.idempotents",
            "E_i E_j = delta_ij E_i, sum E_i = I, X = sum theta_i E_i, tr E_i = 1, Lagrange form = tau form",
            Always,
            Idempotents,
        ),
        entry(
            "triple.minpoly",
            "prod_i (X - theta_i I) = 0 for X = A, B, C",
            Always,
            MinPoly,
        ),
        entry(
            "triple.lt",
            "in an eigenbasis of each member the other two are irreducible tridiagonal",
            Always,
            LeonardTriple,
        ),
    ];
    for m in Member::ALL {
        let (x, y, z) = (m.name(), m.next().name(), m.prev().name());
        v.push(entry(
            format!("triple.zrel.{}", lower(m)),
            format!("{x} + (q {y}{z} - q^-1 {z}{y})/(q^2 - q^-2) = alpha_{} I", lower(m)),
            Always,
            Relation(m),
        ));
    }
    let ordered_pairs = [
        (Member::A, Member::B),
        (Member::B, Member::C),
        (Member::C, Member::A),
        (Member::A, Member::C),
        (Member::B, Member::A),
        (Member::C, Member::B),
    ];
    for (k, (x, y)) in ordered_pairs.iter().enumerate() {
        let z = third(*x, *y);
        v.push(entry(
            format!("triple.cubic.{}", k + 1),
            format!(
                "{x}^2{y} - (q^2+q^-2){x}{y}{x} + {y}{x}^2 + (q^2-q^-2)^2 {y} = alpha_{} (q^2-q^-2)^2 I - alpha_{} (q-q^-1)(q^2-q^-2) {x}",
                lower(*y),
                lower(z)
            ),
            Always,
            Cubic(*x, *y),
        ));
    }
    v.push(entry(
        "triple.trid",
        "E_i Y E_j = 0 if |i-j| > 1 and != 0 if |i-j| = 1, for all six member pairs",
        MinDiameter(1),
        TriDiagonality,
    ));
    v.push(entry(
        "trace.abc",
        "tr X = (x + x^-1)[d+1]_q for X = A, B, C",
        Always,
        TraceOperators,
    ));
    for (k, (x, y)) in ordered_pairs.iter().enumerate() {
        let z = third(*x, *y);
        v.push(entry(
            format!("trace.threea.{}", k + 1),
            format!(
                "(tr({y} E_i)(q+q^-1+theta_i)/(q+q^-1) - alpha_{zl})(1 - theta_i/(q+q^-1)) = alpha_{yl} - alpha_{zl}, E_i of {x}",
                zl = lower(z),
                yl = lower(*y)
            ),
            Always,
            TraceIdempotent(*x, *y),
        ));
    }
    for (k, m) in Member::ALL.into_iter().enumerate() {
        let (x, y, z) = (lower(m), lower(m.next()), lower(m.prev()));
        v.push(entry(
            format!("trace.alphadif.{}", k + 1),
            format!(
                "alpha_{x} - alpha_{y} = ({y}-{x})({y}-{x}^-1)({z}-q^{{d+1}})({z}-q^{{-d-1}}){y}^-1 {z}^-1/(q+q^-1)"
            ),
            Always,
            AlphaDifference(m),
        ));
    }
    v.extend([
        entry(
            "w.inverse",
            "W W^-1 = I with W^-1 = sum (-1)^i a^i q^{-i(d-i)} E_i",
            Always,
            WInverse,
        ),
        entry(
            "w.squares",
            "W^{+-2} = sum a^{-+2i} q^{+-2i(d-i)} E_i",
            Always,
            WSquares,
        ),
        entry("w.commute", "A commutes with W and W^-1 B W - C", Always, WCommute),
        entry("w.unique", "W is unique up to a nonzero scalar", Always, WUnique),
        entry(
            "bar.membership",
            "Abar commutes with A and Abar = sum E_i Abar E_i",
            Always,
            BarMembership,
        ),
        entry("bar.altform", "Abar = B - W C W^-1", Always, BarAltForm),
        entry(
            "bar.trace",
            "tr Abar = tr B - tr C = (b - c)(b - c^-1) b^-1 [d+1]_q",
            Always,
            BarTrace,
        ),
    ]);
    for (k, m) in Member::ALL.into_iter().enumerate() {
        let (x, y, z) = (m.name(), lower(m.next()), lower(m.prev()));
        v.push(entry(
            format!("bar.abarinv.{}", k + 1),
            format!("{x}bar (I - {x}/(q+q^-1)) = (alpha_{y} - alpha_{z}) I = (I - {x}/(q+q^-1)) {x}bar"),
            Always,
            BarInverse(m),
        ));
    }
    v.push(entry(
        "bar.closed",
        "Abar = s E_0, s E_d, or (alpha_b - alpha_c)(I - A/(q+q^-1))^-1, also in the tau basis",
        Always,
        BarClosed,
    ));
    for by in Member::ALL {
        for inverse_first in [true, false] {
            for x in Member::ALL {
                let row = w_row_name(by, inverse_first, false);
                v.push(entry(
                    format!("conj.table1.{row}.{}", lower(x)),
                    conj::table1_reference(by, inverse_first, x),
                    Always,
                    Table1 { by, inverse_first, x },
                ));
            }
        }
    }
    v.push(entry(
        "conj.wbwi",
        "W B W^-1 - W^-1 B W = (AB - BA)/(q - q^-1), same for C",
        Always,
        WConjDifference,
    ));
    v.push(entry(
        "conj.w22",
        "W^2 B W^-2 + W^-2 B W^2 = 2B + [A,[A,B]]/(q - q^-1)^2, same for C",
        Always,
        WSquareConjSum,
    ));
    for by in Member::ALL {
        for inverse_first in [true, false] {
            for x in Member::ALL {
                let row = w_row_name(by, inverse_first, true);
                v.push(entry(
                    format!("conj.table2.{row}.{}", lower(x)),
                    conj::table2_reference(by, inverse_first, x),
                    Always,
                    Table2 { by, inverse_first, x },
                ));
            }
        }
    }
    let lusztig = [
        (
            false,
            true,
            "W^-2 B W^2 = B + (q A^2B - (q+q^-1)ABA + q^-1 BA^2)/((q-q^-1)(q^2-q^-2))",
        ),
        (
            true,
            true,
            "W^2 B W^-2 = B + (q^-1 A^2B - (q+q^-1)ABA + q BA^2)/((q-q^-1)(q^2-q^-2))",
        ),
        (
            false,
            false,
            "W^-2 C W^2 = C + (q A^2C - (q+q^-1)ACA + q^-1 CA^2)/((q-q^-1)(q^2-q^-2))",
        ),
        (
            true,
            false,
            "W^2 C W^-2 = C + (q^-1 A^2C - (q+q^-1)ACA + q CA^2)/((q-q^-1)(q^2-q^-2))",
        ),
    ];
    for (k, (square_first, target_next, text)) in lusztig.into_iter().enumerate() {
        v.push(entry(
            format!("conj.lusztig.{}", k + 1),
            text,
            Always,
            Lusztig {
                square_first,
                target_next,
            },
        ));
    }
    for (suffix, power, text) in [
        (
            "w",
            WPower::One,
            "W = sum (-1)^i q^{i^2} tau_i(A)/((q^2;q^2)_i (a q^{1-d};q^2)_i)",
        ),
        (
            "winv",
            WPower::MinusOne,
            "W^-1 = sum (-1)^i a^i q^{i(i-d+1)} tau_i(A)/((q^2;q^2)_i (a q^{1-d};q^2)_i)",
        ),
        ("wsq", WPower::Two, "W^2 = sum a^-i q^{id} tau_i(A)/(q^2;q^2)_i"),
        (
            "wsqinv",
            WPower::MinusTwo,
            "W^-2 = sum (-1)^i a^i q^{i(i-d+1)} tau_i(A)/(q^2;q^2)_i",
        ),
    ] {
        v.push(entry(format!("poly.w.{suffix}"), text, Always, PolyW(power)));
    }
    for j in 0..=d {
        v.push(entry(
            format!("qser.chu1.j{j}"),
            format!("(-1)^j a^j q^{{j(j-d)}} = 2phi1(q^-2j, a^2 q^{{2j-2d}}; a q^{{1-d}}; q^2, q^2) and a,q -> a^-1,q^-1, j = {j}"),
            Always,
            Chu1(j),
        ));
    }
    for j in 0..=d {
        v.push(entry(
            format!("qser.chu3.j{j}"),
            format!("a^2j q^{{2j(j-d)}} = 2phi1(q^-2j, a^2 q^{{2j-2d}}; 0; q^2, q^2) and a,q -> a^-1,q^-1, j = {j}"),
            Always,
            Chu3(j),
        ));
    }
    v.extend([
        entry(
            "prod.squares",
            "(W'')^2 (W')^2 W^2 = (abc)^-d q^{d(d-1)} I",
            Always,
            ProdSquares,
        ),
        entry(
            "prod.sumcomm",
            "W'W, W''W', WW'' commute with A + B + C",
            Always,
            ProdSumCommutes,
        ),
        entry(
            "prod.cyclic",
            "e_0 is a cyclic vector for A + B + C",
            Always,
            ProdCyclic,
        ),
        entry(
            "prod.commutant",
            "W'W, W''W', WW'' are polynomials in A + B + C",
            Always,
            ProdCommutant,
        ),
        entry("prod.mutual", "W'W, W''W', WW'' mutually commute", Always, ProdMutual),
        entry(
            "prod.scalar",
            "(W'W)(W''W')(WW'') = (abc)^-d q^{d(d-1)} I",
            Always,
            ProdScalar,
        ),
        entry(
            "mod.threepart",
            "Abar = 0 iff b ~ c, and cyclically",
            Always,
            ModThreePart,
        ),
        entry(
            "mod.cycle",
            "a = b = c: bars vanish, P^-1 A P = B etc., P = W'W = W''W' = WW'', P^3 = a^-3d q^{d(d-1)} I",
            EqualParameters,
            ModCycle,
        ),
    ]);
    v
}

fn third(x: Member, y: Member) -> Member {
    Member::ALL
        .into_iter()
        .find(|&m| m != x && m != y)
        .expect("two distinct members leave a third")
}

fn evaluate<F: Field>(kind: CheckKind, r: &TripleRealization<F>) -> support::Outcome {
    use CheckKind::*;
    match kind {
        EigDistinct => scalar::distinct(r),
        EigSplitNonzero => scalar::split_nonzero(r),
        EigDifference => scalar::difference(r),
        EigAdjacentProduct => scalar::adjacent_product(r),
        EigShiftedFactor => scalar::shifted_factor(r),
        EigReversal => scalar::reversal(r),
        EigRecurrence => scalar::recurrence(r),
        AlphaDifference(m) => scalar::alpha_difference(r, m),
        Chu1(j) => scalar::chu1(r, j),
        Chu3(j) => scalar::chu3(r, j),
        Shape => structure::shape(r),
        Idempotents => structure::idempotents(r),
        MinPoly => structure::min_poly(r),
        LeonardTriple => structure::leonard_triple(r),
        Relation(m) => structure::relation(r, m),
        Cubic(x, y) => structure::cubic(r, x, y, third(x, y)),
        TriDiagonality => structure::tridiagonality(r),
        TraceOperators => structure::trace_operators(r),
        TraceIdempotent(x, y) => structure::trace_idempotent(r, x, y, third(x, y)),
        WInverse => structure::w_inverse(r),
        WSquares => structure::w_squares(r),
        WCommute => structure::w_commute(r),
        WUnique => structure::w_unique(r),
        BarMembership => structure::bar_membership(r),
        BarAltForm => structure::bar_alt_form(r),
        BarTrace => structure::bar_trace(r),
        BarInverse(m) => structure::bar_inverse(r, m),
        BarClosed => structure::bar_closed(r),
        PolyW(k) => structure::poly_w(r, k),
        Table1 { by, inverse_first, x } => conj::table1(r, by, inverse_first, x),
        WConjDifference => conj::w_conj_difference(r),
        WSquareConjSum => conj::w_square_conj_sum(r),
        Table2 { by, inverse_first, x } => conj::table2(r, by, inverse_first, x),
        Lusztig {
            square_first,
            target_next,
        } => conj::lusztig(r, square_first, target_next),
        ProdSquares => product::squares(r),
        ProdSumCommutes => product::sum_commutes(r),
        ProdCyclic => product::cyclic(r),
        ProdCommutant => product::commutant(r),
        ProdMutual => product::mutual(r),
        ProdScalar => product::scalar(r),
        ModThreePart => product::three_part(r),
        ModCycle => product::cycle(r),
    }
}

fn execute<F: Field>(desc: &CheckDescriptor, r: &TripleRealization<F>) -> CheckResult {
    let (status, detail) = if !desc.applicability.holds(r) {
        (CheckStatus::Skipped, format!("requires {}", desc.applicability))
    } else {
        match evaluate(desc.kind, r) {
            Ok(note) => (CheckStatus::Pass, note),
            Err(witness) => (CheckStatus::Fail, witness),
        }
    };
    CheckResult {
        id: desc.id.clone(),
        reference: desc.reference.clone(),
        status,
        detail,
    }
}

/// Run one catalog entry by id.
pub fn run_check<F: Field>(id: &str, r: &TripleRealization<F>) -> Result<CheckResult, VerifyError> {
    let desc = list_checks(r.params().d())
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| VerifyError::UnknownCheck(id.to_string()))?;
    Ok(execute(&desc, r))
}

/// Run the whole catalog. Checks execute in parallel; the report keeps
/// catalog order.
pub fn run_all<F: Field>(r: &TripleRealization<F>) -> VerificationReport {
    run_selected(r, |_| true)
}

/// Run the catalog entries whose id satisfies `select`.
pub fn run_selected<F: Field>(r: &TripleRealization<F>, select: impl Fn(&str) -> bool + Sync) -> VerificationReport {
    let catalog: Vec<CheckDescriptor> = list_checks(r.params().d())
        .into_iter()
        .filter(|c| select(&c.id))
        .collect();
    let checks: Vec<CheckResult> = catalog.par_iter().map(|c| execute(c, r)).collect();
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            CheckStatus::Pass => summary.pass += 1,
            CheckStatus::Fail => summary.fail += 1,
            CheckStatus::Skipped => summary.skipped += 1,
        }
    }
    let p = r.params();
    VerificationReport {
        params: ReportParams {
            q: p.q().to_string(),
            a: p.a().to_string(),
            b: p.b().to_string(),
            c: p.c().to_string(),
            d: p.d(),
            field: p.field().to_string(),
            basis: r.basis(),
        },
        checks,
        summary,
    }
}
