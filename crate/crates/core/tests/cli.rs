mod common;

use std::process::Command;

use proptest::prelude::*;

use realspherical::cli::format::{
    AlgebraSpec, Family, InvolutionKindSpec, MatrixSpec, Options, SubalgebraSpec, Q,
};
use realspherical::cli::{
    analyze, catalog, emit_space, hyperboloid_polar_demo, parse_space, AnalyzeOptions,
    SpaceDescription,
};
use realspherical::exactalg::{Matrix, Rational};

fn rat() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn matrix(n: usize) -> impl Strategy<Value = MatrixSpec> {
    prop::collection::vec(prop::collection::vec(rat(), n), n)
        .prop_map(move |rows| MatrixSpec(Matrix::from_rows(n, &rows).unwrap()))
}

fn algebra() -> impl Strategy<Value = AlgebraSpec> {
    let family = (
        prop::sample::select(vec![Family::Sl, Family::So, Family::Sp]),
        prop::collection::vec(1usize..5, 1..3),
    )
        .prop_map(|(f, params)| AlgebraSpec {
            family: Some(f),
            params,
            factors: vec![],
            basis: None,
        });
    prop_oneof![
        family.clone(),
        prop::collection::vec(family, 1..3).prop_map(|factors| AlgebraSpec {
            family: Some(Family::Product),
            params: vec![],
            factors,
            basis: None,
        }),
        prop::collection::vec(matrix(2), 1..4).prop_map(|b| AlgebraSpec {
            family: None,
            params: vec![],
            factors: vec![],
            basis: Some(b)
        }),
    ]
}

fn subalgebra() -> impl Strategy<Value = SubalgebraSpec> {
    prop_oneof![
        Just(SubalgebraSpec::Diagonal),
        prop::collection::vec(matrix(3), 0..3).prop_map(SubalgebraSpec::Basis),
        (matrix(3), any::<bool>()).prop_map(|(m, form)| SubalgebraSpec::Involution {
            matrix: m,
            kind: if form {
                InvolutionKindSpec::Form
            } else {
                InvolutionKindSpec::Conjugation
            },
        }),
    ]
}

fn description() -> impl Strategy<Value = SpaceDescription> {
    (
        prop::option::of("[a-z0-9_]{1,8}"),
        algebra(),
        subalgebra(),
        prop::option::of(prop::collection::vec(matrix(2), 1..3)),
        prop::option::of(prop::collection::vec(rat().prop_map(Q), 1..4)),
        (
            prop::option::of(1u32..100),
            prop::option::of(1usize..20),
            prop::option::of(any::<u64>()),
        ),
    )
        .prop_map(
            |(name, algebra, subalgebra, cartan, seed, (tmax, samples, s))| SpaceDescription {
                name,
                algebra,
                subalgebra,
                cartan,
                seed,
                options: Options {
                    tmax,
                    samples,
                    seed: s,
                    ..Options::default()
                },
            },
        )
}

proptest! {
    #[test]
    fn emit_then_parse_round_trips(d in description()) {
        let text = emit_space(&d);
        let again = parse_space(&text).unwrap();
        prop_assert_eq!(&again, &d);
        prop_assert_eq!(emit_space(&again), text);
    }
}

#[test]
fn analysis_is_deterministic() {
    for name in catalog::list() {
        let f = catalog::fixture(name).unwrap();
        let run = || {
            let d = parse_space(f.description).unwrap();
            analyze(&d, &AnalyzeOptions::from_description(&d))
                .unwrap()
                .report
                .without_timing()
        };
        assert_eq!(run(), run(), "{name}");
    }
}

#[test]
fn every_catalog_run_matches_its_pinned_report() {
    for r in catalog::run(&catalog::list()) {
        let r = r.unwrap();
        assert!(r.passed(), "{}: {:?}", r.name, r.diffs);
    }
}

#[test]
fn pinned_reports_carry_the_hand_derived_values() {
    let e = |n: &str| catalog::fixture(n).unwrap().expected_report();
    let so11 = e("sl2_so11");
    assert_eq!(so11.monoid_generators, vec![vec!["4"]]);
    assert_eq!(so11.cone.rays, vec![vec!["-1"]]);
    let so2 = e("sl2_so2");
    assert_eq!(so2.cone.rays, vec![vec!["-1"]]);
    assert!(so2.wavefront);
    let n = e("sl2_n");
    assert_eq!(n.cone.lineality, vec![vec!["1"]]);
    assert!(!n.sharp && !n.wavefront && n.dims.a_tilde_h == 1);
    let so21 = e("sl3_so21");
    assert_eq!(
        so21.cone.inequalities,
        vec![vec!["-1", "2"], vec!["2", "-1"]]
    );
    assert_eq!(so21.cone.rays, vec![vec!["-2", "-1"], vec!["-1", "-2"]]);
}

#[test]
fn polar_demo_is_reproducible() {
    assert_eq!(
        hyperboloid_polar_demo(500, 9, true),
        hyperboloid_polar_demo(500, 9, true)
    );
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_realspherical"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("realspherical-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.json");
    std::fs::write(&good, catalog::fixture("sl2_so11").unwrap().description).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"algebra": {"family": "sl", "params": [2]}, "subalgebra": {"basis": [[["1/0"]]]}}"#,
    )
    .unwrap();
    let empty_h = dir.join("empty.json");
    std::fs::write(
        &empty_h,
        r#"{"algebra": {"family": "sl", "params": [2]}, "subalgebra": {"basis": []}}"#,
    )
    .unwrap();

    let (code, out) = bin(&[
        "analyze",
        good.to_str().unwrap(),
        "--format",
        "structured",
        "--skip-numeric",
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["wavefront"], true);
    assert_eq!(bin(&["analyze", bad.to_str().unwrap()]).0, 2);
    assert_eq!(
        bin(&["analyze", dir.join("missing.json").to_str().unwrap()]).0,
        2
    );
    assert_ne!(bin(&["analyze", empty_h.to_str().unwrap()]).0, 0);
    assert_eq!(bin(&["catalog", "run", "nope"]).0, 2);
    let (code, out) = bin(&["catalog", "list"]);
    assert_eq!((code, out.lines().count()), (0, 5));
    assert_eq!(bin(&["demo-polar", "--samples", "0"]).0, 2);
    let (code, out) = bin(&["demo-polar", "--samples", "200", "--no-flip"]);
    assert_eq!(code, 0);
    assert!(!out.contains("100.0000%"));
    std::fs::remove_dir_all(&dir).unwrap();
}
