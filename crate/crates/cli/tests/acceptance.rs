//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

mod common;

use common::{oracle, rng, tree, Nodes};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::process::Command;
use std::time::{Duration, Instant};
use towerforge::algnum::AlgebraicNumber;
use towerforge::classify::{classify, Membership, MinimalTier, Tier};
use towerforge::expr::{eval, parse, Expr, Value};
use towerforge::geom::{compile_conic_cubic, trisect, verify, CompileError, Program, Registry, Verdict};
use towerforge::poly::{Dyadic, IntPoly};
use towerforge::tower::{splitting_degree, SplitDegree, DEFAULT_CAP};

type Outcome = Result<String, String>;

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("table1 matrix reproduction", table1_matrix),
        ("splitting-degree spot checks", splitting_degrees),
        ("ruler-compass degrees are powers of two", rc_degrees),
        ("membership upward closure", upward_closure),
        ("exact decimals match numeric oracle", decimal_oracle),
        ("construction verification", constructions),
        ("negative compilation", negative_compilation),
        ("parser round trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1_matrix() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_towerforge"))
        .args(["table1", "--json"])
        .env_remove("TOWERFORGE_CAP")
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let cells = report["cells"].as_array().ok_or("no cell array")?;
    let disagree: Vec<String> = cells
        .iter()
        .filter(|c| c["agree"] != true)
        .map(|c| format!("{} at {}", c["entry"], c["method"]))
        .collect();
    ensure(disagree.is_empty(), || format!("disagreeing cells: {}", disagree.join(", ")))?;
    ensure(report["entries"] == 14, || format!("{} entries", report["entries"]))?;
    ensure(report["trisection"]["agree"] == true, || format!("trisection: {}", report["trisection"]))?;
    ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status.code()))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("14 entries, {} cells and the trisection check agree, exit 0", cells.len()))
}

fn splitting_degrees() -> Outcome {
    // x^3 - 2 is irreducible (no rational root among +-1, +-2) and its
    // discriminant -4p^3 - 27q^2 = -108 is not a square, so the Galois group
    // is S3.
    let (p, q) = (BigInt::from(0), BigInt::from(-2));
    let disc: BigInt = -(BigInt::from(4) * &p * &p * &p) - BigInt::from(27) * &q * &q;
    let cubic_roots = [1i64, -1, 2, -2].iter().any(|&r| r * r * r == 2);
    let cubic = if !cubic_roots && (disc.is_negative() || disc.sqrt().pow(2) != disc) { 6 } else { 3 };

    // roots of x^4 - 10x^2 + 1 are +-sqrt2 +- sqrt3, all in Q(sqrt2, sqrt3);
    // sqrt3 = a + b sqrt2 would force 3 = a^2 + 2b^2 with ab = 0, impossible
    // over Q, so the field has degree 2 * 2.
    let no_rational_sqrt = |n: i64| (0..=n).all(|k| k * k != n);
    let quartic = if no_rational_sqrt(3) && no_rational_sqrt(6) && no_rational_sqrt(2) { 4 } else { 2 };

    // cos(2 pi k/17) = T_k(cos(2 pi/17)); the eight conjugates are
    // polynomials in one root, so the splitting field is Q(cos(2 pi/17)) of
    // degree phi(17)/2.
    let c = (2.0 * std::f64::consts::PI / 17.0).cos();
    let chebyshev_ok = (1..=8).all(|k| {
        let (mut t0, mut t1) = (1.0, c);
        for _ in 1..k {
            (t0, t1) = (t1, 2.0 * c * t1 - t0);
        }
        (t1 - (2.0 * std::f64::consts::PI * k as f64 / 17.0).cos()).abs() < 1e-12
    });
    let cos17 = if chebyshev_ok { 16 / 2 } else { 0 };

    let a = match eval(&parse("cos2pi(1/17)").map_err(|e| e.to_string())?).map_err(|e| e.to_string())? {
        Value::Algebraic(a) => a,
        Value::NotAlgebraic(_) => return Err("cos2pi(1/17) not algebraic".into()),
    };
    let cases = [
        ("x^2 - 2", "x^2 - 2".parse::<IntPoly>().expect("poly"), 2),
        ("x^3 - 2", "x^3 - 2".parse().expect("poly"), cubic),
        ("x^4 - 10x^2 + 1", "x^4 - 10x^2 + 1".parse().expect("poly"), quartic),
        ("minpoly cos(2pi/17)", a.minpoly().clone(), cos17),
    ];
    let mut seen = Vec::new();
    for (label, f, expected) in cases {
        let got = splitting_degree(&f, DEFAULT_CAP).degree;
        ensure(got == SplitDegree::Exact(expected), || format!("{label}: got {got}, expected {expected}"))?;
        seen.push(format!("{label} -> {expected}"));
    }
    Ok(seen.join(", "))
}

fn rc_degrees() -> Outcome {
    let registry = Registry::default();
    let mut r = rng(3);
    let (mut compiled, mut rejected) = (0, 0);
    while compiled < 100 {
        let e = tree(&mut r, 4, Nodes::RulerCompass);
        let program = match registry.compile("rc", &e) {
            Ok(p) => p,
            Err(CompileError::Eval(_)) => {
                rejected += 1;
                continue;
            }
            Err(err) => return Err(format!("{e}: {err}")),
        };
        let Ok(Value::Algebraic(a)) = eval(&e) else {
            return Err(format!("{e} compiled but does not evaluate"));
        };
        ensure(a.degree().is_power_of_two(), || format!("{e} has minpoly degree {}", a.degree()))?;
        ensure(!program.is_empty(), || format!("{e}: empty program"))?;
        compiled += 1;
    }
    Ok(format!("100 trees compiled, all degrees powers of two ({rejected} undefined trees skipped)"))
}

fn upward_closure() -> Outcome {
    let mut r = rng(4);
    let (mut checked, mut unknown) = (0, 0);
    while checked < 500 {
        let e = tree(&mut r, 3, Nodes::All);
        let Ok(v) = classify(&e, DEFAULT_CAP) else { continue };
        let flags = v.flags();
        for (i, (t, m)) in flags.iter().enumerate() {
            if *m == Membership::Yes {
                if let Some((u, n)) = flags[i..].iter().find(|(_, n)| *n != Membership::Yes) {
                    return Err(format!("{e}: yes at {t} but {n} at {u}"));
                }
            }
        }
        let first_yes = flags.iter().find(|(_, m)| *m == Membership::Yes).map(|(t, _)| *t);
        let undecided = flags.iter().take_while(|(_, m)| *m != Membership::Yes).any(|(_, m)| *m == Membership::Unknown);
        let expected = match (first_yes, undecided) {
            (_, true) => MinimalTier::Unknown,
            (Some(t), false) => MinimalTier::Tier(t),
            (None, false) => MinimalTier::Tier(Tier::Beyond),
        };
        ensure(v.minimal_tier == expected, || format!("{e}: minimal tier {:?}, flags {flags:?}", v.minimal_tier))?;
        unknown += usize::from(v.has_unknown());
        checked += 1;
    }
    Ok(format!("500 expressions, zero violations ({unknown} with unknown cells)"))
}

fn decimal_oracle() -> Outcome {
    const DIGITS: u32 = 80;
    let mut r = rng(5);
    let (mut checked, mut skipped, mut irrational) = (0, 0, 0);
    while checked < 200 {
        let e = tree(&mut r, 4, Nodes::Numeric);
        let Some(numeric) = oracle::eval(&e) else {
            skipped += 1;
            continue;
        };
        let a = match eval(&e) {
            Ok(Value::Algebraic(a)) => a,
            other => return Err(format!("{e}: oracle defined but exact evaluation gave {other:?}")),
        };
        irrational += usize::from(!a.is_rational());
        let rendered = a.to_decimal(DIGITS as usize);
        ensure(oracle::within_one_ulp(&rendered, DIGITS, &numeric), || format!("{e}: exact {rendered}"))?;
        checked += 1;
    }
    Ok(format!(
        "200 trees ({irrational} irrational) agree to one ulp at 80 digits ({skipped} undefined or ill-conditioned trees skipped)"
    ))
}

fn algebraic(src: &str) -> Result<AlgebraicNumber, String> {
    match eval(&parse(src).map_err(|e| e.to_string())?).map_err(|e| e.to_string())? {
        Value::Algebraic(a) => Ok(a),
        Value::NotAlgebraic(c) => Err(format!("{c} is not algebraic")),
    }
}

fn check_construction(label: &str, build: impl FnOnce() -> Result<(Program, AlgebraicNumber), String>) -> Result<String, String> {
    let start = Instant::now();
    let (program, target) = build()?;
    let cert = verify(&program, &target).map_err(|e| format!("{label}: {e}"))?;
    let elapsed = start.elapsed();
    ensure(cert.verdict == Verdict::Verified, || format!("{label}: {:?}", cert.verdict))?;
    ensure(cert.output.width() <= Dyadic::pow2(-128), || format!("{label}: output width {}", cert.output.width()))?;
    ensure(elapsed < Duration::from_secs(10), || format!("{label}: took {elapsed:?}"))?;
    Ok(format!("{label} {:.2}s", elapsed.as_secs_f64()))
}

fn constructions() -> Outcome {
    let registry = Registry::default();
    let compiled = |tool: &'static str, src: &'static str| {
        let registry = &registry;
        move || {
            let p = registry.compile(tool, &parse(src).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            Ok((p, algebraic(src)?))
        }
    };
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let mut done = vec![
        check_construction("sqrt(2)", compiled("rc", "sqrt(2)"))?,
        check_construction("(1+sqrt(5))/2", compiled("rc", "(1 + sqrt(5))/2"))?,
        check_construction("root(3,2) origami", compiled("origami", "root(3,2)"))?,
        check_construction("root(3,2) conic a=0 b=2", || {
            let (p, target) = compile_conic_cubic(&q(0, 1), &q(2, 1), 0).map_err(|e| e.to_string())?;
            ensure(target == algebraic("root(3,2)")?, || "conic target is not root(3,2)".into())?;
            Ok((p, target))
        })?,
    ];
    // trisecting 60 degrees gives cos 20 degrees, a root of 8x^3 - 6x - 1;
    // trisecting 120 degrees gives cos 40 degrees, a root of 8x^3 - 6x + 1
    for (turn, minpoly) in [(q(1, 6), "8x^3 - 6x - 1"), (q(1, 3), "8x^3 - 6x + 1")] {
        let expected: IntPoly = minpoly.parse().expect("poly");
        let label = format!("trisect 2pi*{turn} (root of {minpoly})");
        done.push(check_construction(&label, || {
            let (p, target) = trisect(&turn).map_err(|e| e.to_string())?;
            ensure(target.minpoly() == &expected, || format!("target minpoly {}", target.minpoly()))?;
            let oracle = (2.0 * std::f64::consts::PI * turn.to_f64().expect("small") / 3.0).cos();
            ensure((target.to_f64() - oracle).abs() < 1e-12, || format!("target {} vs {oracle}", target.to_f64()))?;
            Ok((p, target))
        })?);
    }
    Ok(done.join(", "))
}

fn negative_compilation() -> Outcome {
    let registry = Registry::default();
    let mut seen = Vec::new();
    for (tool, src) in [("rc", "root(3,2)"), ("origami", "root(5,2)")] {
        let e: Expr = parse(src).map_err(|e| e.to_string())?;
        match registry.compile(tool, &e) {
            Err(CompileError::OutsideFragment { .. }) => seen.push(format!("{tool} rejects {src}")),
            Err(other) => return Err(format!("{tool} {src}: unexpected error {other}")),
            Ok(_) => return Err(format!("{tool} compiled {src}")),
        }
    }
    Ok(seen.join(", "))
}

fn round_trip() -> Outcome {
    let mut r = rng(8);
    for _ in 0..500 {
        let e = tree(&mut r, 5, Nodes::All);
        let text = e.to_string();
        let back = parse(&text).map_err(|err| format!("{text}: {err}"))?;
        ensure(back == e, || format!("{text} parsed back as {back}"))?;
    }
    Ok("500 trees, zero violations".into())
}
