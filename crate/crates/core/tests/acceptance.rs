//! Acceptance run: the full registry at seed 0 and 1000 trials, then one line
//! per criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use g31_core::checks::run_checks;
use g31_core::g31::verify::{RunConfig, LAMBDA_SAMPLES, SYMPLECTIC_SAMPLES};
use g31_core::g31::G31Context;
use g31_core::report::{Report, Status};
use serde_json::Value;

const SEED: u64 = 0;
const TRIALS: usize = 1000;
const MIN_LAMBDA_SAMPLES: usize = 200;
const MIN_SYMPLECTIC_SAMPLES: usize = 100;
const SPLIT_BUDGET_MS: u64 = 5 * 60 * 1000;

struct Run<'a> {
    report: &'a Report,
}

impl Run<'_> {
    fn passed(&self, id: &str) -> bool {
        self.report
            .entries
            .iter()
            .any(|e| e.check_id == id && e.status == Status::Pass)
    }

    fn witness(&self, id: &str) -> &Value {
        self.report
            .entries
            .iter()
            .find(|e| e.check_id == id)
            .and_then(|e| e.witness.as_ref())
            .unwrap_or(&Value::Null)
    }

    fn timing(&self, id: &str) -> u64 {
        self.report
            .entries
            .iter()
            .find(|e| e.check_id == id)
            .map_or(0, |e| e.timing_ms)
    }
}

fn orders(r: &Run) -> bool {
    let w = r.witness("orders");
    let expect = [
        ("W6", 46080),
        ("cW6", 46080),
        ("W6prime", 23040),
        ("W6plus", 23040),
        ("cW6prime", 23040),
        ("DW6", 11520),
        ("A6", 64),
        ("A6prime", 32),
    ];
    r.passed("orders") && expect.iter().all(|(k, n)| w[*k] == *n) && w["derived_W6_matches_DW6"] == true
}

fn theorem_main(r: &Run) -> bool {
    let w = r.witness("theorem-main");
    r.passed("theorem-main")
        && w["order"] == 46080
        && w["sum_abs_trace_squared"] == "46080"
        && w["generated_by_reflections"] == 46080
        && w["reflection_closure_equals_group"] == true
}

fn reflections(r: &Run) -> bool {
    let a = r.witness("centre-derive-a");
    let c = r.witness("lemma-conju-mu");
    r.passed("centre-derive-a")
        && r.passed("lemma-conju-mu")
        && a["reflections"] == 60
        && a["single_conjugacy_class"] == true
        && c["class_size"] == 60
        && c["fibers_are_plus_minus_reflection"] == true
        && r.witness("theorem-main")["fibers_two_differing_by_minus_id"] == true
}

fn lambda(r: &Run) -> bool {
    let l = r.witness("lambda-properties");
    let s = r.witness("spin-lift-total");
    LAMBDA_SAMPLES >= MIN_LAMBDA_SAMPLES
        && r.passed("lambda-properties")
        && l["det_cubed"] == LAMBDA_SAMPLES
        && l["form_scaled_by_det"] == LAMBDA_SAMPLES
        && l["multiplicative"] == LAMBDA_SAMPLES
        && l["kernel_on_g31"] == 2
        && r.passed("spin-lift-total")
        && s["elements"] == 23040
        && s["round_trips"] == 23040
        && s["sqrt_not_in_field"] == 0
}

fn splitting(r: &Run) -> bool {
    let a = r.witness("scindage-a");
    let b = r.witness("scindage-b");
    let c = r.witness("scindage-c");
    let g = r.witness("centre-derive-g");
    let split = |v: &Value| v["split"] == true && v["meets_kernel_trivially"] == true;
    let exhausted = |v: &Value| v["split"] == false && v["search_nodes"].is_u64();
    let ids = ["scindage-a", "scindage-b", "scindage-c", "centre-derive-g"];
    let total: u64 = ids.iter().map(|id| r.timing(id)).sum();
    ids.iter().all(|id| r.passed(id))
        && split(&a["search_W6"])
        && split(&a["search_W6prime"])
        && split(&a["search_DW6"])
        && exhausted(&c["W6plus"])
        && exhausted(&c["cW6"])
        && exhausted(&c["cW6prime"])
        && exhausted(&b["cW6prime_mod_center"]["complement"])
        && exhausted(&g["quotient_by_center"]["complement"])
        && exhausted(&g["full_group"]["complement"])
        && total <= SPLIT_BUDGET_MS
}

fn structure(r: &Run) -> bool {
    let e = r.witness("centre-derive-e");
    let f = r.witness("centre-derive-f");
    [
        "centre-derive-b",
        "centre-derive-c",
        "centre-derive-e",
        "centre-derive-f",
    ]
    .iter()
    .all(|id| r.passed(id))
        && r.witness("centre-derive-b")["index"] == 2
        && r.witness("centre-derive-c")["center_order"] == 4
        && e["order"] == 64
        && e["noncommuting_pair"].as_array().is_some_and(|p| p.len() == 2)
        && e["quotient_by_plus_minus_id_rank"] == 5
        && f["orders"] == serde_json::json!([1, 2, 4, 64])
}

fn five_generation(r: &Run) -> bool {
    let p5 = r.witness("prop-5-generation");
    let p4 = r.witness("prop-4-impossible");
    r.passed("prop-5-generation")
        && r.passed("prop-4-impossible")
        && p5["generated_order"] == 46080
        && p4["pi_lambda_images"] == 15
        && p4["four_subsets"] == 1365
        && p4["four_subsets_generating_S6"] == 0
}

fn outer_tau(r: &Run) -> bool {
    let t = r.witness("outer-tau");
    r.passed("outer-tau")
        && t["homomorphism_pairs_checked"] == 720 * 720
        && t["inner_conjugators"] == 0
        && t["tau((1,2)(3,4)(5,6))"] == "(1,2)"
}

fn class_counts(r: &Run) -> bool {
    let c = r.witness("remark-class-counts");
    let t = r.witness("remark-irrational-trace");
    r.passed("remark-class-counts")
        && r.passed("remark-irrational-trace")
        && c["W6prime"] == 37
        && c["cW6prime"] == 37
        && t["W6prime_traces_integral"] == true
        && t["trace_i_rho"] == "2i"
}

fn centers(r: &Run) -> bool {
    let d = r.witness("scindage-d");
    r.passed("scindage-d")
        && r.passed("class-M")
        && d["center_W6"] == 2
        && d["center_cW6"] == 4
        && r.witness("class-M")["centralizer_inside_W6plus"] == true
}

fn property_suites(r: &Run) -> bool {
    let p = r.witness("prop-max-random");
    let s = r.witness("scholie-eng");
    let b = r.witness("remark-b2c2");
    SYMPLECTIC_SAMPLES >= MIN_SYMPLECTIC_SAMPLES
        && r.passed("prop-max-random")
        && p["trials"] == TRIALS
        && p["counterexamples"].as_array().is_some_and(Vec::is_empty)
        && r.passed("scholie-eng")
        && s["gf2_rank"] == 5
        && r.passed("remark-b2c2")
        && b["stabilized"] == SYMPLECTIC_SAMPLES
}

fn main() -> ExitCode {
    let config = RunConfig {
        seed: SEED,
        trials: TRIALS,
    };
    let start = Instant::now();
    let first = run_checks(&[], &config, &G31Context::new()).expect("registry ids");
    let second = run_checks(&[], &config, &G31Context::new()).expect("registry ids");
    let run = Run { report: &first };

    let criteria: [(&str, bool); 12] = [
        ("1 group orders", orders(&run)),
        (
            "2 G31 order, irreducibility, generated by reflections",
            theorem_main(&run),
        ),
        ("3 sixty reflections in one class with ±1 fibers", reflections(&run)),
        ("4 exterior-square laws and total spin lift", lambda(&run)),
        ("5 splitting table within budget", splitting(&run)),
        ("6 derived subgroup, center, O2, normal 2-subgroups", structure(&run)),
        ("7 five reflections generate, no four do", five_generation(&run)),
        ("8 outer automorphism of S6", outer_tau(&run)),
        ("9 class counts and traces", class_counts(&run)),
        ("10 centers and centralizer of mu0", centers(&run)),
        ("11 randomized and rank property suites", property_suites(&run)),
        (
            "12 identical reports for identical seeds",
            first.without_timings() == second.without_timings(),
        ),
    ];
    let mut failed = 0;
    for (name, ok) in &criteria {
        println!("{} {name}", if *ok { "PASS" } else { "FAIL" });
        failed += usize::from(!ok);
    }
    for e in first.entries.iter().filter(|e| e.status != Status::Pass) {
        println!(
            "  {} {}: {}",
            e.status,
            e.check_id,
            e.witness.as_ref().unwrap_or(&Value::Null)
        );
    }
    println!(
        "{} of {} criteria passed; {} checks, two full runs in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        first.entries.len(),
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
