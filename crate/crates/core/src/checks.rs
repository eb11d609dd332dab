//! The check registry and runner.

use std::time::Instant;

use thiserror::Error;

use crate::g31::verify::{self, RunConfig};
use crate::g31::{G31Context, G31Error};
use crate::report::{Outcome, Report, ReportEntry};

pub type CheckFn = fn(&G31Context, &RunConfig) -> Result<Outcome, G31Error>;

#[derive(Debug, Clone, Copy)]
pub struct CheckDef {
    pub id: &'static str,
    /// The statement the check certifies.
    pub statement: &'static str,
    pub run: CheckFn,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

macro_rules! check {
    ($id:literal, $f:path, $s:literal) => {
        CheckDef {
            id: $id,
            statement: $s,
            run: $f,
        }
    };
}

pub static REGISTRY: &[CheckDef] = &[
    check!("orders", verify::orders,
        "Orders of the signed-permutation groups: |W6| = |cW6| = 46080, |W6'| = |W6+| = |cW6'| = 23040, |D(W6)| = 11520, |A6| = 64, |A6'| = 32"),
    check!("lambda-properties", verify::lambda_properties,
        "det Λ(g) = det(g)^3, Λ(g) scales the form by det(g), Λ is multiplicative, and Λ has kernel ±Id on G31"),
    check!("spin-lift-total", verify::spin_lift_total,
        "Every element of cW6' has a lift g in GL4(Q(i)) with Λ(g) equal to it, and the lift lies in G31"),
    check!("scholie-eng", verify::scholie_eng,
        "The commutator sign masks span A6'; D(W6) = D(W6') = D(W6+) = D(cW6) = D(cW6') = W6' ∩ W6+ = A6' ⋊ A6"),
    check!("lemma-irreducible", verify::lemma_irreducible,
        "D(W6) acts irreducibly on the 6-dimensional space"),
    check!("exact-sequences", verify::exact_sequences,
        "The six sequences of signed-permutation groups over S6 or A6 are exact"),
    check!("class-M", verify::class_m,
        "The W6+ class M of μ0 has 60 elements, M and -M split the W6 class, and every μ in M has eigenvalues i and -i with multiplicity 3"),
    check!("lemma-conju-mu", verify::lemma_conju_mu,
        "Each μ in M lifts to a reflection μ̃ with Λ(μ̃) = ±iμ, and the lifts form one conjugacy class"),
    check!("theorem-main", verify::theorem_main,
        "G31 has order 46080, is irreducible, is generated by the 60 reflections, and Λ maps it 2:1 onto cW6'"),
    check!("scindage-a", verify::scindage_a,
        "W6 over A6, W6' over A6' and D(W6) over A6' split"),
    check!("scindage-b", verify::scindage_b,
        "cW6'/Z does not split over A6'/Z while W6'/Z does"),
    check!("scindage-c", verify::scindage_c,
        "W6+ over A6', cW6 over cW6 ∩ T and cW6' over A6' do not split"),
    check!("scindage-d", verify::scindage_d,
        "W6 and cW6 are not isomorphic: their centers have orders 2 and 4"),
    check!("scindage-e", verify::scindage_e,
        "W6' and cW6' are not isomorphic: both have O2 = A6' but only W6' splits over it"),
    check!("scindage-f", verify::scindage_f,
        "W6' and W6+ are not isomorphic: both have O2 = A6' but only W6' splits over it"),
    check!("centre-derive-a", verify::centre_derive_a,
        "The reflections of G31 are exactly the 60 lifts μ̃ and form one conjugacy class"),
    check!("centre-derive-b", verify::centre_derive_b,
        "D(G31) is the subgroup of determinant 1 and has index 2"),
    check!("centre-derive-c", verify::centre_derive_c,
        "Z(G31) = {±Id, ±i·Id} and lies in D(G31)"),
    check!("centre-derive-d", verify::centre_derive_d,
        "Λ maps D(G31) onto D(W6) with kernel ±Id"),
    check!("centre-derive-e", verify::centre_derive_e,
        "O2(G31) = Λ⁻¹(A6') has order 64, is nonabelian, lies in D(G31), and O2/{±Id} is elementary abelian of rank 5"),
    check!("centre-derive-f", verify::centre_derive_f,
        "The normal 2-subgroups of G31 are 1, {±Id}, Z(G31) and O2(G31)"),
    check!("centre-derive-g", verify::centre_derive_g,
        "G31/Z(G31) → S6 and G31 → S6 are exact with 2-group kernels and do not split"),
    check!("centre-derive-h", verify::centre_derive_h,
        "G31/Z(G31) ≅ cW6'/{±Id} and it is not isomorphic to W6'/Z(W6')"),
    check!("prop-max-random", verify::prop_max_random,
        "A subgroup of G31 generated by reflections or random elements is all of G31 iff its image in S6 is all of S6"),
    check!("prop-5-generation", verify::prop_5_generation,
        "The five reflections over μ_j = τ⁻¹(w_j)μ0τ⁻¹(w_j)⁻¹ generate G31"),
    check!("prop-4-impossible", verify::prop_4_impossible,
        "No four reflections generate G31: their S6 images are triple transpositions and no four of those generate S6"),
    check!("outer-tau", verify::outer_tau,
        "τ from the action on synthematic totals is an outer automorphism with τ((12)(34)(56)) = (12)"),
    check!("remark-b2c2", verify::remark_b2c2,
        "Products of symplectic transvections fix ψ and preserve ψ⊥ under Λ"),
    check!("remark-class-counts", verify::remark_class_counts,
        "W6' and cW6' both have 37 conjugacy classes"),
    check!("remark-irrational-trace", verify::remark_irrational_trace,
        "W6' has integer traces while iρ in cW6' has trace 2i"),
    check!("remark-w6plus-vs-cw6prime", verify::remark_w6plus_vs_cw6prime,
        "W6+ and cW6' are distinguished by class counts or element-order statistics"),
];

pub fn find(id: &str) -> Result<&'static CheckDef, CheckError> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CheckError::UnknownCheck(id.to_string()))
}

/// `(id, statement)` for every registered check.
pub fn list() -> Vec<(&'static str, &'static str)> {
    REGISTRY.iter().map(|c| (c.id, c.statement)).collect()
}

/// Runs the given checks in registry order, or all of them when `ids` is empty.
pub fn run_checks(ids: &[String], config: &RunConfig, ctx: &G31Context) -> Result<Report, CheckError> {
    for id in ids {
        find(id)?;
    }
    let selected = REGISTRY
        .iter()
        .filter(|c| ids.is_empty() || ids.iter().any(|i| i == c.id));
    let mut entries = Vec::new();
    for c in selected {
        let start = Instant::now();
        let outcome = (c.run)(ctx, config).unwrap_or_else(Outcome::error);
        entries.push(ReportEntry {
            check_id: c.id.to_string(),
            paper_ref: c.statement.to_string(),
            status: outcome.status,
            witness: Some(outcome.witness),
            timing_ms: start.elapsed().as_millis() as u64,
        });
    }
    Ok(Report {
        seed: config.seed,
        trials: config.trials,
        entries,
    })
}
