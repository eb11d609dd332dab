use g31_core::checks::{list, run_checks, REGISTRY};
use g31_core::exact::GaussRat;
use g31_core::extsq::{lambda2, spin_lift};
use g31_core::g31::verify::RunConfig;
use g31_core::g31::{is_reflection, G31Context, G31_ORDER};
use g31_core::grpengine::{complement_exists, ExtensionSpec, GroupTable, QuotientKind};
use g31_core::linalg::Mat;
use g31_core::report::Status;
use g31_core::sgnperm::{GroupName, Perm6, ScaledSignedPerm};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussRat::from_ints(a, b))
}

fn invertible() -> impl Strategy<Value = Mat> {
    proptest::collection::vec(gauss(), 16)
        .prop_map(|v| Mat::from_fn(4, 4, |i, j| v[4 * i + j].clone()))
        .prop_filter("invertible", |m| !m.det().unwrap().is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spin_lift_recovers_sign_class(g in invertible()) {
        let l = lambda2(&g);
        // Λ(g) only determines g up to sign; the lift exists whenever det(g) is a square.
        if let Ok(h) = spin_lift(&l) {
            prop_assert_eq!(lambda2(&h), l);
            prop_assert!(h == g || h == g.neg());
        }
    }

    #[test]
    fn lambda_of_scalar_is_square(a in -3i64..=3, b in -3i64..=3) {
        prop_assume!(a != 0 || b != 0);
        let s = GaussRat::from_ints(a, b);
        prop_assert_eq!(lambda2(&Mat::scalar(4, s.clone())), Mat::scalar(6, &s * &s));
    }
}

#[test]
fn g31_contains_reflections_and_center() {
    let ctx = G31Context::new();
    let g = ctx.g31().unwrap();
    assert_eq!(g.order(), G31_ORDER);
    for r in ctx.reflections().unwrap() {
        assert!(g.contains(r));
        assert!(is_reflection(r));
    }
    assert!(g.contains(&Mat::scalar(4, GaussRat::i())));
    assert_eq!(g.center().len(), 4);
}

#[test]
fn five_generators_lift_to_reflections() {
    let ctx = G31Context::new();
    let five = ctx.five_generators().unwrap();
    assert_eq!(five.lifts.len(), 5);
    assert!(five.lifts.iter().all(|r| r.trace() == GaussRat::from_integer(2)));
    let pis: Vec<Perm6> = five.mus.iter().map(ScaledSignedPerm::pi).collect();
    assert_eq!(GroupTable::closure(&pis, 720).unwrap().order(), 720);
}

#[test]
fn hyperoctahedral_splits_over_diagonal() {
    let ctx = G31Context::new();
    let w6 = ctx.group(GroupName::W6);
    let spec = ExtensionSpec::new(w6, ctx.group(GroupName::A6), ScaledSignedPerm::pi, QuotientKind::Sym6).unwrap();
    let out = complement_exists(&spec);
    assert!(out.is_split());
}

#[test]
fn registry_lists_every_check_once() {
    assert_eq!(list().len(), REGISTRY.len());
    assert_eq!(REGISTRY.len(), 31);
    assert_eq!(REGISTRY[0].id, "orders");
}

#[test]
fn selected_checks_run_in_registry_order() {
    let ctx = G31Context::new();
    let ids = vec!["outer-tau".to_string(), "orders".to_string()];
    let r = run_checks(&ids, &RunConfig::default(), &ctx).unwrap();
    let got: Vec<&str> = r.entries.iter().map(|e| e.check_id.as_str()).collect();
    assert_eq!(got, ["orders", "outer-tau"]);
    assert!(r.entries.iter().all(|e| e.status == Status::Pass));
}

#[test]
fn report_json_round_trips() {
    let ctx = G31Context::new();
    let cfg = RunConfig { seed: 3, trials: 10 };
    let r = run_checks(&["scindage-d".into()], &cfg, &ctx).unwrap();
    let back: g31_core::report::Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
    assert_eq!(back.seed, 3);
}
