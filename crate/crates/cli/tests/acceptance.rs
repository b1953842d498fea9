//! The acceptance criteria, one line of output each.

use std::io::Write;
use std::process::Command;

use qracah::field::make_rational;
use qracah::params::sample_params_in_stream;
use qracah::triple::solve_commutant;
use qracah::verify::CheckStatus;
use qracah::*;

type Criterion = Result<String, String>;

const GRID: [(i64, i64, i64, (i64, i64)); 3] = [(2, 3, 5, (7, 1)), (3, 2, 7, (11, 1)), (2, 3, 5, (1, 5))];

fn rational_params(q: i64, a: i64, b: i64, c: (i64, i64), d: usize) -> Result<RationalParams, ParamError> {
    let f = RationalField;
    validate_params(
        &f,
        f.from_int(q),
        f.from_int(a),
        f.from_int(b),
        make_rational(c.0, c.1).unwrap(),
        d,
    )
}

/// Every accepted grid point, in both bases.
fn grid() -> (Vec<RationalTriple>, usize) {
    let mut out = Vec::new();
    let mut rejected = 0;
    for (q, a, b, c) in GRID {
        for d in 0..=6 {
            match rational_params(q, a, b, c, d) {
                Ok(p) => {
                    for basis in BasisChoice::ALL {
                        out.push(build_triple(&p, basis).expect("valid parameters build"));
                    }
                }
                Err(_) => rejected += 1,
            }
        }
    }
    (out, rejected)
}

fn describe<F: Field>(r: &TripleRealization<F>) -> String {
    let p = r.params();
    format!(
        "q={} a={} b={} c={} d={} {}",
        p.q(),
        p.a(),
        p.b(),
        p.c(),
        p.d(),
        r.basis()
    )
}

fn no_failures<F: Field>(r: &TripleRealization<F>) -> Result<(), String> {
    let rep = run_all(r);
    let first = rep
        .failures()
        .next()
        .map(|c| format!("{}: {} failed: {}", describe(r), c.id, c.detail));
    first.map_or(Ok(()), Err)
}

fn rational_suite(grid: &[RationalTriple], rejected: usize) -> Criterion {
    for r in grid {
        no_failures(r)?;
    }
    Ok(format!(
        "{} realizations, {rejected} grid points rejected by validation",
        grid.len()
    ))
}

fn prime_suite() -> Criterion {
    let field = PrimeField::new(1_000_003).unwrap();
    let mut n = 0;
    for d in 2..=10 {
        for trial in 0..100 {
            let p = sample_params_in_stream(&field, d, 0, trial).map_err(|e| e.to_string())?;
            let r = build_triple(&p, BasisChoice::First).map_err(|e| e.to_string())?;
            no_failures(&r)?;
            n += 1;
        }
    }
    Ok(format!("{n} sampled realizations over fp:1000003"))
}

fn product_scalar() -> Criterion {
    let p = rational_params(2, 3, 5, (7, 1), 2).unwrap();
    let r = build_triple(&p, BasisChoice::First).unwrap();
    let want = make_rational(4, 11025).unwrap();
    let (w, w1, w2) = (
        r.w(Member::A, WPower::Two),
        r.w(Member::B, WPower::Two),
        r.w(Member::C, WPower::Two),
    );
    if !(&(w2 * w1) * w).is_scalar(&want) {
        return Err("(W'')^2 (W')^2 W^2 is not 4/11025 I".into());
    }
    let (w, w1, w2) = (
        r.w(Member::A, WPower::One),
        r.w(Member::B, WPower::One),
        r.w(Member::C, WPower::One),
    );
    let prod = &(&(w1 * w) * &(w2 * w1)) * &(w * w2);
    if !prod.is_scalar(&want) {
        return Err("(W'W)(W''W')(WW'') is not 4/11025 I".into());
    }
    for id in ["prod.squares", "prod.scalar"] {
        let c = run_check(id, &r).unwrap();
        if c.status != CheckStatus::Pass || c.detail != "scalar 4/11025" {
            return Err(format!("{id}: {} {}", c.status, c.detail));
        }
    }
    Ok("both products equal 4/11025 I".into())
}

fn modular_case() -> Criterion {
    let p = rational_params(2, 3, 3, (3, 1), 2).unwrap();
    let r = build_triple(&p, BasisChoice::First).unwrap();
    for m in Member::ALL {
        if !r.bar(m).is_zero() {
            return Err(format!("{m}bar is nonzero"));
        }
    }
    let pm = r.p();
    let pi = pm.inverse().map_err(|e| e.to_string())?;
    for m in Member::ALL {
        if &(&pi * r.operator(m)) * pm != *r.operator(m.next()) {
            return Err(format!("P^-1 {m} P != {}", m.next()));
        }
        let prod = r.w(m.next(), WPower::One) * r.w(m, WPower::One);
        if prod != *pm {
            return Err(format!("P differs from the product starting at {m}"));
        }
    }
    if !(&(pm * pm) * pm).is_scalar(&make_rational(4, 729).unwrap()) {
        return Err("P^3 is not 4/729 I".into());
    }
    let c = run_check("mod.cycle", &r).unwrap();
    if c.status != CheckStatus::Pass {
        return Err(format!("mod.cycle: {}", c.detail));
    }
    Ok("bars vanish, P cycles A, B, C and P^3 = 4/729 I".into())
}

fn cross_construction(grid: &[RationalTriple]) -> Criterion {
    let mut n = 0;
    for r in grid {
        let rep = verify::run_selected(r, |id| id.starts_with("poly.w.") || id.starts_with("qser."));
        let want = 4 + 2 * (r.params().d() + 1);
        if rep.checks.len() != want {
            return Err(format!(
                "{}: expected {want} checks, found {}",
                describe(r),
                rep.checks.len()
            ));
        }
        if let Some(c) = rep.checks.iter().find(|c| c.status != CheckStatus::Pass) {
            return Err(format!("{}: {} {}: {}", describe(r), c.id, c.status, c.detail));
        }
        n += rep.checks.len();
    }
    Ok(format!("{n} polynomial and series checks"))
}

fn mutation() -> Criterion {
    let p = rational_params(2, 3, 5, (7, 1), 3).unwrap();
    let r = build_triple(&p, BasisChoice::First).unwrap();
    let one = RationalField.one();
    let mut n = 0;
    for m in Member::ALL {
        for i in 0..r.order() {
            for j in 0..r.order() {
                let mut bad = r.operator(m).clone();
                bad.set(i, j, bad.get(i, j).clone() + &one);
                let broken = r.with_operator_replaced(m, bad).unwrap();
                let rep = run_all(&broken);
                let first = rep.failures().next().map(|c| (c.id.clone(), c.detail.is_empty()));
                match first {
                    Some((_, false)) => n += 1,
                    Some((id, true)) => return Err(format!("{m} ({i},{j}): {id} failed without a witness")),
                    None => return Err(format!("perturbing {m} ({i},{j}) went undetected")),
                }
            }
        }
    }
    Ok(format!("{n} single-entry perturbations detected"))
}

fn uniqueness(grid: &[RationalTriple]) -> Criterion {
    for r in grid {
        for m in Member::ALL {
            let s = solve_commutant(r, m).map_err(|e| format!("{}: {m}: {e}", describe(r)))?;
            if s.solution_dim != 1 {
                return Err(format!("{}: {m}: dimension {}", describe(r), s.solution_dim));
            }
        }
    }
    Ok(format!("one-dimensional for {} realizations", grid.len()))
}

fn determinism() -> Criterion {
    let runs = [
        vec![
            "--field", "rational", "--q", "2", "--a", "3", "--b", "5", "--c", "7", "--d", "3", "--format", "json",
        ],
        vec![
            "--field",
            "fp:1000003",
            "--d",
            "3",
            "--mode",
            "sweep",
            "--trials",
            "2",
            "--seed",
            "11",
            "--format",
            "json",
        ],
    ];
    for args in runs {
        let out: Vec<_> = (0..2)
            .map(|_| Command::new(env!("CARGO_BIN_EXE_qracah")).args(&args).output().unwrap())
            .collect();
        if !out[0].status.success() {
            return Err(format!("{args:?}: exit {:?}", out[0].status.code()));
        }
        if out[0].stdout != out[1].stdout || out[0].stdout.is_empty() {
            return Err(format!("{args:?}: outputs differ"));
        }
    }
    Ok("repeated invocations give identical JSON".into())
}

#[test]
fn acceptance() {
    let (grid, rejected) = grid();
    let results: Vec<(&str, Criterion)> = vec![
        ("rational suite", rational_suite(&grid, rejected)),
        ("prime suite", prime_suite()),
        ("product scalar", product_scalar()),
        ("modular case", modular_case()),
        ("cross-construction", cross_construction(&grid)),
        ("mutation sensitivity", mutation()),
        ("uniqueness", uniqueness(&grid)),
        ("determinism", determinism()),
    ];
    // Written to stderr directly so the lines survive libtest output capture.
    let mut err = std::io::stderr().lock();
    for (k, (name, res)) in results.iter().enumerate() {
        let line = match res {
            Ok(note) => format!("PASS {}. {name}: {note}", k + 1),
            Err(why) => format!("FAIL {}. {name}: {why}", k + 1),
        };
        writeln!(err, "{line}").unwrap();
    }
    let failed: Vec<_> = results.iter().filter(|(_, r)| r.is_err()).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
