use towerforge::algnum::AlgebraicNumber;
use towerforge::expr::{eval, parse, Value};
use towerforge::geom::{compile_conic_cubic, interpret, trisect, verify, CompileError, Instruction, Registry, Verdict};
use towerforge::poly::Dyadic;
use num_rational::BigRational;

fn value(src: &str) -> AlgebraicNumber {
    match eval(&parse(src).unwrap()).unwrap() {
        Value::Algebraic(a) => a,
        v => panic!("{v:?}"),
    }
}

fn compiled(tool: &str, src: &str) -> towerforge::geom::Program {
    Registry::default().compile(tool, &parse(src).unwrap()).unwrap()
}

#[test]
fn sqrt2_ruler_compass() {
    let p = compiled("rc", "sqrt(2)");
    let cert = verify(&p, &value("sqrt(2)")).unwrap();
    assert_eq!(cert.verdict, Verdict::Verified);
    assert!(cert.output.width() <= Dyadic::pow2(-128));
    let wrong = verify(&p, &value("root(3,2)")).unwrap();
    assert_eq!(wrong.verdict, Verdict::Refuted);
}

#[test]
fn golden_ratio() {
    let p = compiled("rc", "(1+sqrt(5))/2");
    assert_eq!(verify(&p, &value("(1+sqrt(5))/2")).unwrap().verdict, Verdict::Verified);
    let r = interpret(&p, &Dyadic::pow2(-40)).unwrap();
    assert!((r.output.midpoint().to_f64() - 1.6180339887).abs() < 1e-10);
}

#[test]
fn cube_root_by_fold_and_by_parabola() {
    let target = value("root(3,2)");
    let p = compiled("origami", "root(3,2)");
    assert_eq!(p.count(|i| matches!(i, Instruction::FoldO6 { .. })), 1);
    assert_eq!(verify(&p, &target).unwrap().verdict, Verdict::Verified);
    let p = compiled("conic", "root(3,2)");
    assert_eq!(p.count(|i| matches!(i, Instruction::FoldO6 { .. })), 0);
    assert_eq!(verify(&p, &target).unwrap().verdict, Verdict::Verified);
    let two = BigRational::from_integer(2.into());
    let zero = BigRational::from_integer(0.into());
    let (p, t) = compile_conic_cubic(&zero, &two, 0).unwrap();
    assert_eq!(t, target);
    assert_eq!(verify(&p, &target).unwrap().verdict, Verdict::Verified);
}

#[test]
fn trisection_of_sixty_degrees() {
    let (p, t) = trisect(&BigRational::new(1.into(), 6.into())).unwrap();
    assert_eq!(t, value("cos2pi(1/18)"));
    assert_eq!(verify(&p, &t).unwrap().verdict, Verdict::Verified);
}

#[test]
fn fragments() {
    let reg = Registry::default();
    let e = reg.compile("rc", &parse("root(3,2)").unwrap()).unwrap_err();
    assert!(matches!(e, CompileError::OutsideFragment { tool: "rc", .. }), "{e}");
    let e = reg.compile("origami", &parse("root(5,2)").unwrap()).unwrap_err();
    assert!(matches!(e, CompileError::OutsideFragment { tool: "origami", .. }), "{e}");
}
