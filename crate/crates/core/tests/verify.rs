use qracah::field::make_rational;
use qracah::verify::CheckStatus;
use qracah::*;

fn rational(q: i64, a: i64, b: i64, c: i64, d: usize) -> RationalParams {
    let f = RationalField;
    let e = |n| f.from_int(n);
    validate_params(&f, e(q), e(a), e(b), e(c), d).unwrap()
}

fn prime(p: u64, q: i64, a: i64, b: i64, c: i64, d: usize) -> PrimeParams {
    let f = PrimeField::new(p).unwrap();
    validate_params(&f, f.element(q), f.element(a), f.element(b), f.element(c), d).unwrap()
}

#[test]
fn product_scalar_is_known_fraction() {
    let r = build_triple(&rational(2, 3, 5, 7, 2), BasisChoice::First).unwrap();
    let res = run_check("prod.scalar", &r).unwrap();
    assert_eq!(res.status, CheckStatus::Pass, "{}", res.detail);
    assert_eq!(res.detail, "scalar 4/11025");
    let res = run_check("prod.squares", &r).unwrap();
    assert_eq!(res.detail, "scalar 4/11025");
}

#[test]
fn modular_cycle_cube() {
    let r = build_triple(&rational(2, 3, 3, 3, 2), BasisChoice::First).unwrap();
    let res = run_check("mod.cycle", &r).unwrap();
    assert_eq!(res.status, CheckStatus::Pass, "{}", res.detail);
    assert_eq!(res.detail, "P^3 scalar 4/729");
    let want = make_rational(4, 729).unwrap();
    let cube = &(r.p() * r.p()) * r.p();
    assert!(cube.is_scalar(&want));
}

#[test]
fn modular_cycle_skipped_for_distinct_parameters() {
    let r = build_triple(&rational(2, 3, 5, 7, 2), BasisChoice::First).unwrap();
    let res = run_check("mod.cycle", &r).unwrap();
    assert_eq!(res.status, CheckStatus::Skipped);
    assert_eq!(res.detail, "requires a = b = c");
}

#[test]
fn unknown_check_is_an_error() {
    let r = build_triple(&rational(2, 3, 5, 7, 1), BasisChoice::First).unwrap();
    assert!(run_check("no.such.check", &r).is_err());
}

#[test]
fn rational_grid_passes() {
    for (q, a, b, c) in [(2, 3, 5, 7), (3, 2, 5, 11), (2, 3, 3, 3)] {
        for d in 0..5 {
            for basis in BasisChoice::ALL {
                let r = build_triple(&rational(q, a, b, c, d), basis).unwrap();
                let rep = run_all(&r);
                let bad: Vec<_> = rep.failures().map(|c| format!("{}: {}", c.id, c.detail)).collect();
                assert!(bad.is_empty(), "q={q} a={a} b={b} c={c} d={d} {basis}: {bad:?}");
                assert!(rep.summary.pass >= 40);
            }
        }
    }
}

#[test]
fn diameter_zero_passes_or_skips() {
    let r = build_triple(&rational(2, 3, 5, 7, 0), BasisChoice::First).unwrap();
    let rep = run_all(&r);
    assert_eq!(rep.summary.fail, 0);
    assert_eq!(rep.summary.pass + rep.summary.skipped, rep.checks.len());
}

#[test]
fn prime_field_passes() {
    let r = build_triple(&prime(1_000_003, 5, 7, 11, 13, 4), BasisChoice::Second).unwrap();
    let rep = run_all(&r);
    assert!(
        rep.all_passed(),
        "{:?}",
        rep.failures().map(|c| &c.id).collect::<Vec<_>>()
    );
}

#[test]
fn similar_parameters_kill_the_bar() {
    // b = c^-1 makes Abar vanish.
    let f = RationalField;
    let p = validate_params(
        &f,
        f.from_int(2),
        f.from_int(3),
        make_rational(1, 7).unwrap(),
        f.from_int(7),
        3,
    )
    .unwrap();
    let r = build_triple(&p, BasisChoice::First).unwrap();
    assert!(r.bar(Member::A).is_zero());
    assert!(!r.bar(Member::B).is_zero());
    let res = run_check("mod.threepart", &r).unwrap();
    assert_eq!(res.status, CheckStatus::Pass, "{}", res.detail);
    assert_eq!(res.detail, "Abar = 0");
    assert!(run_all(&r).all_passed());
}

#[test]
fn corrupted_operator_is_detected() {
    let r = build_triple(&rational(2, 3, 5, 7, 3), BasisChoice::First).unwrap();
    let f = RationalField;
    for m in Member::ALL {
        let n = r.order();
        for i in 0..n {
            for j in 0..n {
                let mut bad = r.operator(m).clone();
                bad.set(i, j, bad.get(i, j).clone() + f.one());
                let broken = r.with_operator_replaced(m, bad).unwrap();
                let res = run_check("triple.idempotents", &broken).unwrap();
                assert_eq!(res.status, CheckStatus::Fail, "{m} ({i},{j})");
                assert!(!run_all(&broken).all_passed());
            }
        }
    }
}

#[test]
fn catalog_covers_enumerated_statements() {
    let d = 3;
    let ids: Vec<String> = qracah::verify::list_checks(d).into_iter().map(|c| c.id).collect();
    let mut want: Vec<String> = [
        "eig.distinct",
        "eig.lem1",
        "eig.lem4",
        "eig.qqth",
        "eig.eigreq",
        "triple.trid",
        "trace.abc",
        "w.commute",
        "w.unique",
        "bar.membership",
        "bar.altform",
        "bar.trace",
        "bar.closed",
        "conj.wbwi",
        "conj.w22",
        "prod.squares",
        "prod.sumcomm",
        "prod.cyclic",
        "prod.commutant",
        "prod.mutual",
        "prod.scalar",
        "mod.threepart",
        "mod.cycle",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    for x in ["a", "b", "c"] {
        want.push(format!("triple.zrel.{x}"));
    }
    for k in 1..=6 {
        want.push(format!("triple.cubic.{k}"));
        want.push(format!("trace.threea.{k}"));
    }
    for k in 1..=3 {
        want.push(format!("trace.alphadif.{k}"));
        want.push(format!("bar.abarinv.{k}"));
    }
    for k in 1..=4 {
        want.push(format!("conj.lusztig.{k}"));
    }
    for w in ["w", "winv", "wsq", "wsqinv"] {
        want.push(format!("poly.w.{w}"));
    }
    for j in 0..=d {
        want.push(format!("qser.chu1.j{j}"));
        want.push(format!("qser.chu3.j{j}"));
    }
    for table in ["table1", "table2"] {
        let n = ids
            .iter()
            .filter(|id| id.starts_with(&format!("conj.{table}.")))
            .count();
        assert_eq!(n, 18, "{table}");
    }
    for id in &want {
        assert!(ids.contains(id), "missing {id}");
    }
}
