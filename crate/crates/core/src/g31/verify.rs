//! One function per check. Each returns the status together with the
//! computed facts that support it.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::exact::GaussRat;
use crate::extsq::{check_sp_stabilizes, lambda2, spin_lift, transvection, ExtsqError};
use crate::grpengine::{
    complement_exists, verify_exact_sequence, ComplementOutcome, ExtensionSpec, GroupElement, GroupError, GroupTable,
    QuotientKind, SequenceReport,
};
use crate::linalg::{Mat, Poly};
use crate::outer_s6::{tau, tau_table};
use crate::report::Outcome;
use crate::sgnperm::{alt_commutator_masks, gf2_rank, mu0, rho, t0, GroupName, Perm6, ScaledSignedPerm};

use super::{is_reflection, s_and_w, G31Context, G31Error, G31_ORDER};

/// Parameters shared by the randomized checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: 0, trials: 1000 }
    }
}

/// Random invertible matrices used for the exterior-square laws.
pub const LAMBDA_SAMPLES: usize = 200;
/// Random symplectic products used for the stabilizer check.
pub const SYMPLECTIC_SAMPLES: usize = 100;

type CheckResult = Result<Outcome, G31Error>;

fn mat_json(m: &Mat) -> Value {
    serde_json::to_value(m.to_json()).expect("matrix serializes")
}

fn complement_json(o: &ComplementOutcome) -> Value {
    match o {
        ComplementOutcome::Witness(w) => json!({
            "split": true,
            "complement_order": w.complement_order,
            "meets_kernel_trivially": w.meets_kernel_trivially,
            "section_on_generators": w.section_on_generators,
        }),
        ComplementOutcome::Exhausted { nodes } => json!({ "split": false, "search_nodes": nodes }),
    }
}

fn sequence_json(r: &SequenceReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn splits_verified(o: &ComplementOutcome, q: QuotientKind) -> bool {
    matches!(o, ComplementOutcome::Witness(w) if w.verified(q))
}

fn is_exhausted(o: &ComplementOutcome) -> bool {
    matches!(o, ComplementOutcome::Exhausted { .. })
}

/// `1 → K → G →π Q → 1` for a signed-permutation group.
fn pi_sequence<'a>(
    g: &'a GroupTable<ScaledSignedPerm>,
    kernel: &GroupTable<ScaledSignedPerm>,
    q: QuotientKind,
) -> Result<ExtensionSpec<'a, ScaledSignedPerm>, G31Error> {
    Ok(ExtensionSpec::new(g, kernel, ScaledSignedPerm::pi, q)?)
}

/// `cW6 ∩ T`: the diagonal part of `cW6`.
fn cw6_torus(ctx: &G31Context) -> Result<GroupTable<ScaledSignedPerm>, G31Error> {
    let cw6 = ctx.group(GroupName::CW6);
    let idx: Vec<usize> = (0..cw6.order()).filter(|&i| cw6.element(i).is_diagonal()).collect();
    Ok(cw6.subgroup(&idx)?)
}

fn sorted_keys<E: GroupElement>(elems: &[E]) -> BTreeSet<String> {
    elems.iter().map(GroupElement::canonical_key).collect()
}

pub fn orders(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let expected = [
        (GroupName::W6, 46080),
        (GroupName::CW6, 46080),
        (GroupName::W6prime, 23040),
        (GroupName::W6plus, 23040),
        (GroupName::CW6prime, 23040),
        (GroupName::DW6, 11520),
        (GroupName::A6, 64),
        (GroupName::A6prime, 32),
    ];
    let mut ok = true;
    let mut w = serde_json::Map::new();
    for (name, order) in expected {
        let n = ctx.group(name).order();
        ok &= n == order;
        w.insert(name.to_string(), json!(n));
    }
    // D(W6) is the derived subgroup of W6, not only the closure of its listed generators.
    let d = ctx.group(GroupName::W6).derived_subgroup();
    let d_matches = d.same_elements(ctx.group(GroupName::DW6));
    ok &= d_matches;
    w.insert("derived_W6_matches_DW6".into(), json!(d_matches));
    Ok(Outcome::new(ok, Value::Object(w)))
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let m = Mat::from_fn(4, 4, |_, _| {
            GaussRat::from_ints(rng.gen_range(-2..=2), rng.gen_range(-2..=2))
        });
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn lambda_properties(ctx: &G31Context, cfg: &RunConfig) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let samples: Vec<Mat> = (0..LAMBDA_SAMPLES).map(|_| random_invertible(&mut rng)).collect();
    let mut det_law = 0;
    let mut form_law = 0;
    let mut hom_law = 0;
    let images: Vec<Mat> = samples.iter().map(lambda2).collect();
    for (k, (g, l)) in samples.iter().zip(&images).enumerate() {
        let d = g.det()?;
        if l.det()? == &(&d * &d) * &d {
            det_law += 1;
        }
        // In the orthonormal basis the form law reads Λᵀ·Λ = det(g)·Id.
        if l.transpose().mul(l)? == Mat::scalar(6, d) {
            form_law += 1;
        }
        let h = &samples[(k + 1) % samples.len()];
        if lambda2(&g.mul(h)?) == l.mul(&images[(k + 1) % samples.len()])? {
            hom_law += 1;
        }
    }
    let g31 = ctx.g31()?;
    let lam = ctx.lambda_images()?;
    let kernel: Vec<&Mat> = (0..g31.order())
        .filter(|&i| lam[i] == ScaledSignedPerm::identity())
        .map(|i| g31.element(i))
        .collect();
    let kernel_ok =
        kernel.len() == 2 && kernel.contains(&&Mat::identity(4)) && kernel.contains(&&Mat::identity(4).neg());
    let n = LAMBDA_SAMPLES;
    let ok = det_law == n && form_law == n && hom_law == n && kernel_ok;
    Ok(Outcome::new(
        ok,
        json!({
            "samples": n,
            "seed": cfg.seed,
            "det_cubed": det_law,
            "form_scaled_by_det": form_law,
            "multiplicative": hom_law,
            "kernel_on_g31": kernel.len(),
            "kernel_is_plus_minus_identity": kernel_ok,
        }),
    ))
}

pub fn spin_lift_total(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let w = ctx.group(GroupName::CW6prime);
    let g31 = ctx.g31()?;
    let mut lifted = 0usize;
    let mut round_trips = 0usize;
    let mut in_g31 = 0usize;
    let mut sqrt_errors = 0usize;
    let mut other_errors = BTreeMap::<String, usize>::new();
    for x in w.elements() {
        let l = x.to_matrix();
        match spin_lift(&l) {
            Ok(g) => {
                lifted += 1;
                if lambda2(&g) == l {
                    round_trips += 1;
                }
                if g31.contains(&g) {
                    in_g31 += 1;
                }
            }
            Err(ExtsqError::SqrtNotInField(_)) => sqrt_errors += 1,
            Err(e) => *other_errors.entry(e.to_string()).or_insert(0) += 1,
        }
    }
    let n = w.order();
    let ok = n == 23040 && lifted == n && round_trips == n && in_g31 == n && sqrt_errors == 0;
    Ok(Outcome::new(
        ok,
        json!({
            "elements": n,
            "lifted": lifted,
            "round_trips": round_trips,
            "lifts_in_g31": in_g31,
            "sqrt_not_in_field": sqrt_errors,
            "other_errors": other_errors,
        }),
    ))
}

pub fn scholie_eng(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let masks = alt_commutator_masks();
    let rank = gf2_rank(masks.iter().copied());
    // Span of the masks, compared with the even-weight masks (A6prime).
    let mut span = BTreeSet::from([0u8]);
    for m in &masks {
        let next: Vec<u8> = span.iter().map(|s| s ^ m).collect();
        span.extend(next);
    }
    let a6prime: BTreeSet<u8> = (0u8..64).filter(|m| m.count_ones() % 2 == 0).collect();
    let span_is_a6prime = span == a6prime;

    let d = ctx.group(GroupName::DW6);
    let dd = d.derived_subgroup();
    let mut chain = serde_json::Map::new();
    let mut chain_ok = dd.same_elements(d);
    chain.insert("D(D(W6)) = D(W6)".into(), json!(chain_ok));
    for name in [
        GroupName::W6prime,
        GroupName::W6plus,
        GroupName::CW6,
        GroupName::CW6prime,
    ] {
        let same = ctx.group(name).derived_subgroup().same_elements(d);
        chain_ok &= same;
        chain.insert(format!("D({name}) = D(W6)"), json!(same));
    }
    let meet: Vec<&ScaledSignedPerm> = ctx
        .group(GroupName::W6prime)
        .elements()
        .iter()
        .filter(|x| GroupName::W6plus.contains(x))
        .collect();
    let meet_ok = meet.len() == d.order() && meet.iter().all(|x| d.contains(x));
    chain.insert("D(W6) = W6prime ∩ W6plus".into(), json!(meet_ok));
    // D(W6) = A6prime ⋊ 𝔄6
    let torus: BTreeSet<String> = d
        .elements()
        .iter()
        .filter(|x| x.is_diagonal())
        .map(|x| x.canonical_key())
        .collect();
    let semidirect = torus == sorted_keys(ctx.group(GroupName::A6prime).elements())
        && ctx.group(GroupName::A6alt).is_subgroup_of(d)
        && d.order() == 32 * 360;
    chain.insert("D(W6) = A6prime ⋊ A6alt".into(), json!(semidirect));
    let ok = rank == 5 && span_is_a6prime && chain_ok && meet_ok && semidirect;
    Ok(Outcome::new(
        ok,
        json!({
            "commutator_masks": masks.len(),
            "gf2_rank": rank,
            "span_equals_A6prime": span_is_a6prime,
            "derived_subgroups": chain,
        }),
    ))
}

pub fn lemma_irreducible(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let gens: Vec<Mat> = ctx
        .group(GroupName::DW6)
        .active_generators()
        .iter()
        .map(ScaledSignedPerm::to_matrix)
        .collect();
    let d = GroupTable::closure(&gens, 11520)?;
    let r = d.irreducibility_sum();
    Ok(Outcome::new(
        r.irreducible && r.order == 11520,
        json!({ "order": r.order, "sum_abs_trace_squared": format!("{:?}", r.sum), "dimension": 6 }),
    ))
}

pub fn exact_sequences(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    use GroupName::*;
    let torus = cw6_torus(ctx)?;
    let cases: [(&str, GroupName, &GroupTable<ScaledSignedPerm>, QuotientKind); 6] = [
        ("A6 -> W6 -> S6", W6, ctx.group(A6), QuotientKind::Sym6),
        (
            "A6prime -> W6prime -> S6",
            W6prime,
            ctx.group(A6prime),
            QuotientKind::Sym6,
        ),
        (
            "A6prime -> W6plus -> S6",
            W6plus,
            ctx.group(A6prime),
            QuotientKind::Sym6,
        ),
        ("cW6 ∩ T -> cW6 -> S6", CW6, &torus, QuotientKind::Sym6),
        (
            "A6prime -> cW6prime -> S6",
            CW6prime,
            ctx.group(A6prime),
            QuotientKind::Sym6,
        ),
        ("A6prime -> DW6 -> A6alt", DW6, ctx.group(A6prime), QuotientKind::Alt6),
    ];
    let mut ok = true;
    let mut w = serde_json::Map::new();
    for (label, g, k, q) in cases {
        let r = verify_exact_sequence(&pi_sequence(ctx.group(g), k, q)?);
        ok &= r.exact();
        w.insert(label.into(), sequence_json(&r));
    }
    // A6prime is the diagonal part of W6plus, cW6, cW6prime and D(W6).
    let a6p = sorted_keys(ctx.group(A6prime).elements());
    for g in [W6plus, CW6, CW6prime, DW6] {
        let diag: Vec<ScaledSignedPerm> = ctx
            .group(g)
            .elements()
            .iter()
            .filter(|x| x.k() == 0 && x.is_diagonal())
            .copied()
            .collect();
        let same = sorted_keys(&diag) == a6p;
        ok &= same;
        w.insert(format!("{g} ∩ A6 = A6prime"), json!(same));
    }
    w.insert("cW6 ∩ T order".into(), json!(torus.order()));
    ok &= torus.order() == 64;
    Ok(Outcome::new(ok, Value::Object(w)))
}

pub fn class_m(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let m = ctx.class_m();
    let m_set: BTreeSet<String> = sorted_keys(m);
    let neg: Vec<ScaledSignedPerm> = m.iter().map(ScaledSignedPerm::neg).collect();
    let disjoint = neg.iter().all(|x| !m_set.contains(&x.canonical_key()));
    let w6 = ctx.group(GroupName::W6);
    let w6_class: BTreeSet<String> = w6
        .class_of(&mu0())?
        .into_iter()
        .map(|i| w6.element(i).canonical_key())
        .collect();
    let union: BTreeSet<String> = m_set.union(&sorted_keys(&neg)).cloned().collect();
    let union_ok = w6_class == union;
    let i = GaussRat::i();
    let expected = Poly::from_roots(&[(i.clone(), 3), (-&i, 3)]);
    let charpoly_ok = m
        .iter()
        .all(|x| x.to_matrix().charpoly().map(|p| p == expected).unwrap_or(false));
    let t0_ok = t0().compose(&mu0()).compose(&t0().inverse()) == mu0().neg() && !GroupName::W6plus.contains(&t0());
    let c = w6.centralizer(&mu0())?;
    let centralizer_ok = c.iter().all(|&k| GroupName::W6plus.contains(w6.element(k)));
    let ok = m.len() == 60 && disjoint && union_ok && w6_class.len() == 120 && charpoly_ok && t0_ok && centralizer_ok;
    Ok(Outcome::new(
        ok,
        json!({
            "M": m.len(),
            "M_disjoint_from_minus_M": disjoint,
            "W6_class_of_mu0": w6_class.len(),
            "W6_class_is_M_union_minus_M": union_ok,
            "charpoly_(X-i)^3(X+i)^3": charpoly_ok,
            "t0_conjugates_mu0_to_minus_mu0": t0_ok,
            "centralizer_in_W6": c.len(),
            "centralizer_inside_W6plus": centralizer_ok,
        }),
    ))
}

/// Indices of `G31` grouped by their image under `Λ`.
fn fibers(ctx: &G31Context) -> Result<HashMap<ScaledSignedPerm, Vec<usize>>, G31Error> {
    let mut f: HashMap<ScaledSignedPerm, Vec<usize>> = HashMap::new();
    for (i, x) in ctx.lambda_images()?.iter().enumerate() {
        f.entry(*x).or_default().push(i);
    }
    Ok(f)
}

pub fn lemma_conju_mu(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let refl = ctx.reflections()?;
    let m = ctx.class_m();
    let fib = fibers(ctx)?;
    let lam0 = ScaledSignedPerm::from_matrix(&lambda2(&refl[0])).map_err(|e| G31Error::Construction(e.to_string()))?;
    // Orientation ε with Λ(μ̃) = ε·i·μ.
    let orientation: i8 = if lam0 == m[0].times_i() { 1 } else { -1 };
    let mut lifts_ok = true;
    let mut fibers_ok = true;
    for (mu, r) in m.iter().zip(refl) {
        let target = if orientation == 1 {
            mu.times_i()
        } else {
            mu.times_i().neg()
        };
        let lam = ScaledSignedPerm::from_matrix(&lambda2(r)).map_err(|e| G31Error::Construction(e.to_string()))?;
        lifts_ok &= lam == target;
        let pre: BTreeSet<String> = fib
            .get(&target)
            .map(|v| v.iter().map(|&i| g.element(i).canonical_key()).collect())
            .unwrap_or_default();
        fibers_ok &= pre == sorted_keys(&[r.clone(), r.neg()]);
        // Λ⁻¹({iμ, -iμ}) = {±μ̃, ±iμ̃}
        let both: BTreeSet<String> = [mu.times_i(), mu.times_i().neg()]
            .iter()
            .flat_map(|t| fib.get(t).cloned().unwrap_or_default())
            .map(|i| g.element(i).canonical_key())
            .collect();
        let ir = r.scalar_mul(&GaussRat::i());
        fibers_ok &= both == sorted_keys(&[r.clone(), r.neg(), ir.clone(), ir.neg()]);
    }
    let class: BTreeSet<String> = g
        .class_of(&refl[0])?
        .into_iter()
        .map(|i| g.element(i).canonical_key())
        .collect();
    let single_class = class == sorted_keys(refl);
    Ok(Outcome::new(
        lifts_ok && fibers_ok && single_class,
        json!({
            "orientation": orientation,
            "lifts_over_orientation_times_i_mu": lifts_ok,
            "fibers_are_plus_minus_reflection": fibers_ok,
            "reflections_form_one_class": single_class,
            "class_size": class.len(),
        }),
    ))
}

pub fn theorem_main(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let irr = g.irreducibility_sum();
    let refl = ctx.reflections()?;
    let generated = GroupTable::closure(refl, G31_ORDER)?;
    let same = generated.same_elements(g);
    let w = ctx.group(GroupName::CW6prime);
    let fib = fibers(ctx)?;
    let image_in_w = fib.keys().all(|x| w.contains(x));
    let onto = fib.len() == w.order();
    let two_to_one = fib
        .values()
        .all(|v| v.len() == 2 && *g.element(v[1]) == g.element(v[0]).neg());
    let ok = g.order() == G31_ORDER && irr.irreducible && same && image_in_w && onto && two_to_one;
    Ok(Outcome::new(
        ok,
        json!({
            "order": g.order(),
            "sum_abs_trace_squared": format!("{:?}", irr.sum),
            "irreducible": irr.irreducible,
            "generated_by_reflections": generated.order(),
            "reflection_closure_equals_group": same,
            "image_is_cW6prime": image_in_w && onto,
            "fibers_two_differing_by_minus_id": two_to_one,
        }),
    ))
}

pub fn scindage_a(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    use GroupName::*;
    let s6 = ctx.group(S6perm);
    let a6 = ctx.group(A6alt);
    let explicit = |sub: &GroupTable<ScaledSignedPerm>, big: GroupName, kernel: GroupName, q: QuotientKind| {
        sub.is_subgroup_of(ctx.group(big))
            && sub.order() == q.order()
            && sub.elements().iter().filter(|x| ctx.group(kernel).contains(x)).count() == 1
            && sub.elements().iter().map(|x| x.pi()).collect::<BTreeSet<_>>().len() == q.order()
    };
    let e5 = explicit(s6, W6, A6, QuotientKind::Sym6);
    let e6 = explicit(s6, W6prime, A6prime, QuotientKind::Sym6);
    let e10 = explicit(a6, DW6, A6prime, QuotientKind::Alt6);
    let s5 = complement_exists(&pi_sequence(ctx.group(W6), ctx.group(A6), QuotientKind::Sym6)?);
    let s6_ = complement_exists(&pi_sequence(
        ctx.group(W6prime),
        ctx.group(A6prime),
        QuotientKind::Sym6,
    )?);
    let s10 = complement_exists(&pi_sequence(ctx.group(DW6), ctx.group(A6prime), QuotientKind::Alt6)?);
    let ok = e5
        && e6
        && e10
        && splits_verified(&s5, QuotientKind::Sym6)
        && splits_verified(&s6_, QuotientKind::Sym6)
        && splits_verified(&s10, QuotientKind::Alt6);
    Ok(Outcome::new(
        ok,
        json!({
            "permutation_matrices_complement_A6_in_W6": e5,
            "permutation_matrices_complement_A6prime_in_W6prime": e6,
            "even_permutation_matrices_complement_A6prime_in_DW6": e10,
            "search_W6": complement_json(&s5),
            "search_W6prime": complement_json(&s6_),
            "search_DW6": complement_json(&s10),
        }),
    ))
}

/// `G/Z(G) → S6` with kernel `A6prime/Z(G)`, for `G = W6prime` or `cW6prime`.
fn central_quotient_split(
    ctx: &G31Context,
    name: GroupName,
) -> Result<(ComplementOutcome, SequenceReport, usize), G31Error> {
    let g = ctx.group(name);
    let z = g.center();
    let q = g.quotient_by_central(&z)?;
    let k_gens: Vec<_> = ctx
        .group(GroupName::A6prime)
        .elements()
        .iter()
        .map(|a| q.identity().sibling(a))
        .collect();
    let k = GroupTable::closure(&k_gens, q.order())?;
    let spec = ExtensionSpec::new(&q, &k, |c| c.representative().pi(), QuotientKind::Sym6)?;
    let o2 = q
        .normal_2_subgroups()?
        .pop()
        .map(|h| h.same_elements(&k) as usize * h.order())
        .unwrap_or(0);
    Ok((complement_exists(&spec), verify_exact_sequence(&spec), o2))
}

pub fn scindage_b(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let (c_out, c_seq, c_o2) = central_quotient_split(ctx, GroupName::CW6prime)?;
    let (w_out, w_seq, w_o2) = central_quotient_split(ctx, GroupName::W6prime)?;
    let ok = c_seq.exact()
        && w_seq.exact()
        && is_exhausted(&c_out)
        && splits_verified(&w_out, QuotientKind::Sym6)
        && c_o2 == 16
        && w_o2 == 16;
    Ok(Outcome::new(
        ok,
        json!({
            "cW6prime_mod_center": { "sequence": sequence_json(&c_seq), "complement": complement_json(&c_out), "O2_is_kernel_of_order": c_o2 },
            "W6prime_mod_center": { "sequence": sequence_json(&w_seq), "complement": complement_json(&w_out), "O2_is_kernel_of_order": w_o2 },
            "non_isomorphic": "O2 is characteristic and equals the kernel in both quotients; the extension by it splits for W6prime/Z and not for cW6prime/Z",
        }),
    ))
}

pub fn scindage_c(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    use GroupName::*;
    let torus = cw6_torus(ctx)?;
    let s7 = complement_exists(&pi_sequence(ctx.group(W6plus), ctx.group(A6prime), QuotientKind::Sym6)?);
    let s8 = complement_exists(&pi_sequence(ctx.group(CW6), &torus, QuotientKind::Sym6)?);
    let s9 = complement_exists(&pi_sequence(
        ctx.group(CW6prime),
        ctx.group(A6prime),
        QuotientKind::Sym6,
    )?);
    Ok(Outcome::new(
        is_exhausted(&s7) && is_exhausted(&s8) && is_exhausted(&s9),
        json!({
            "W6plus": complement_json(&s7),
            "cW6": complement_json(&s8),
            "cW6prime": complement_json(&s9),
        }),
    ))
}

pub fn scindage_d(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let z = ctx.group(GroupName::W6).center().len();
    let zc = ctx.group(GroupName::CW6).center().len();
    Ok(Outcome::new(
        z == 2 && zc == 4,
        json!({ "center_W6": z, "center_cW6": zc, "distinguished_by": "center order" }),
    ))
}

/// `O2(G)` equals `A6prime`, and whether `1 → O2(G) → G → S6 → 1` splits.
fn o2_split(ctx: &G31Context, name: GroupName) -> Result<(bool, ComplementOutcome), G31Error> {
    let g = ctx.group(name);
    let o2 = g.normal_2_subgroups()?.pop().expect("trivial subgroup is listed");
    let a6p = ctx.group(GroupName::A6prime);
    let o2_is_a6prime = o2.same_elements(a6p);
    let out = complement_exists(&pi_sequence(g, a6p, QuotientKind::Sym6)?);
    Ok((o2_is_a6prime, out))
}

fn split_distinction(ctx: &G31Context, split: GroupName, nonsplit: GroupName) -> CheckResult {
    let (o_a, out_a) = o2_split(ctx, split)?;
    let (o_b, out_b) = o2_split(ctx, nonsplit)?;
    let ok = o_a && o_b && splits_verified(&out_a, QuotientKind::Sym6) && is_exhausted(&out_b);
    Ok(Outcome::new(
        ok,
        json!({
            format!("O2({split}) = A6prime"): o_a,
            format!("O2({nonsplit}) = A6prime"): o_b,
            split.to_string(): complement_json(&out_a),
            nonsplit.to_string(): complement_json(&out_b),
            "distinguished_by": "splitting of the extension by the characteristic subgroup O2",
        }),
    ))
}

pub fn scindage_e(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    split_distinction(ctx, GroupName::W6prime, GroupName::CW6prime)
}

pub fn scindage_f(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    split_distinction(ctx, GroupName::W6prime, GroupName::W6plus)
}

/// Indices of all `g` in `G31` with `rank(g - Id) = 1`.
fn all_reflections(ctx: &G31Context) -> Result<Vec<usize>, G31Error> {
    let g = ctx.g31()?;
    Ok((0..g.order()).filter(|&i| is_reflection(g.element(i))).collect())
}

pub fn centre_derive_a(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let found = all_reflections(ctx)?;
    let found_keys: BTreeSet<String> = found.iter().map(|&i| g.element(i).canonical_key()).collect();
    let m_tilde = sorted_keys(ctx.reflections()?);
    let class: BTreeSet<String> = g
        .class_of(g.element(found[0]))?
        .into_iter()
        .map(|i| g.element(i).canonical_key())
        .collect();
    let ok = found.len() == 60 && found_keys == m_tilde && class == found_keys;
    Ok(Outcome::new(
        ok,
        json!({
            "reflections": found.len(),
            "equal_to_lifted_class": found_keys == m_tilde,
            "single_conjugacy_class": class == found_keys,
        }),
    ))
}

pub fn centre_derive_b(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let d = ctx.derived_g31()?;
    let one = GaussRat::one();
    let sl: Vec<Mat> = g
        .elements()
        .iter()
        .filter(|x| x.det().map(|v| v == one).unwrap_or(false))
        .cloned()
        .collect();
    let equal = sl.len() == d.order() && sl.iter().all(|x| d.contains(x));
    let index = g.order() / d.order();
    Ok(Outcome::new(
        equal && index == 2 && g.order() % d.order() == 0,
        json!({ "derived_order": d.order(), "index": index, "derived_equals_det_one": equal }),
    ))
}

pub fn centre_derive_c(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let d = ctx.derived_g31()?;
    let center: Vec<Mat> = g.center().into_iter().map(|i| g.element(i).clone()).collect();
    let expected: Vec<Mat> = [(1, 0), (-1, 0), (0, 1), (0, -1)]
        .iter()
        .map(|&(a, b)| Mat::scalar(4, GaussRat::from_ints(a, b)))
        .collect();
    let equal = sorted_keys(&center) == sorted_keys(&expected);
    let inside = center.iter().all(|z| d.contains(z));
    Ok(Outcome::new(
        equal && inside,
        json!({ "center_order": center.len(), "center_is_generated_by_i_id": equal, "center_inside_derived": inside }),
    ))
}

pub fn centre_derive_d(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let d = ctx.derived_g31()?;
    let dw6 = ctx.group(GroupName::DW6);
    let lam = ctx.lambda_images()?;
    let image: BTreeSet<String> = d
        .elements()
        .iter()
        .map(|x| lam[g.index_of(x).expect("subgroup")].canonical_key())
        .collect();
    let onto = image == sorted_keys(dw6.elements());
    let kernel: Vec<&Mat> = d
        .elements()
        .iter()
        .filter(|x| lam[g.index_of(x).expect("subgroup")] == ScaledSignedPerm::identity())
        .collect();
    let kernel_ok = kernel.len() == 2 && kernel.iter().all(|k| k.is_identity() || k.neg().is_identity());
    Ok(Outcome::new(
        onto && kernel_ok && d.order() == 2 * dw6.order(),
        json!({ "image_is_DW6": onto, "kernel_is_plus_minus_id": kernel_ok, "derived_order": d.order() }),
    ))
}

pub fn centre_derive_e(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let o2 = ctx.o2()?;
    let d = ctx.derived_g31()?;
    let largest = ctx.normal_2_subgroups()?.last().expect("trivial subgroup is listed");
    let is_o2 = largest.same_elements(o2);
    let pair = o2.noncommuting_pair();
    let z: Vec<usize> = (0..o2.order())
        .filter(|&i| o2.element(i).is_identity() || o2.element(i).neg().is_identity())
        .collect();
    let q = o2.quotient_by_central(&z)?;
    let rank = q.elementary_abelian_2_rank();
    let inside = o2.is_subgroup_of(d);
    let ok = o2.order() == 64 && is_o2 && pair.is_some() && rank == Some(5) && inside && z.len() == 2;
    Ok(Outcome::new(
        ok,
        json!({
            "order": o2.order(),
            "largest_normal_2_subgroup": is_o2,
            "noncommuting_pair": pair.map(|(a, b)| vec![mat_json(&a), mat_json(&b)]),
            "quotient_by_plus_minus_id_rank": rank,
            "inside_derived": inside,
        }),
    ))
}

pub fn centre_derive_f(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let found = ctx.normal_2_subgroups()?;
    let orders: Vec<usize> = found.iter().map(GroupTable::order).collect();
    let z = GroupTable::closure(&[Mat::identity(4).neg()], 2)?;
    let zg = GroupTable::closure(&[Mat::scalar(4, GaussRat::i())], 4)?;
    let trivial = GroupTable::trivial(g.identity());
    let expected = [&trivial, &z, &zg, ctx.o2()?];
    let ok = found.len() == 4 && found.iter().zip(expected).all(|(a, b)| a.same_elements(b));
    Ok(Outcome::new(
        ok,
        json!({ "orders": orders, "equal_to_1_Z_center_O2": ok }),
    ))
}

/// The two sequences `G31/Z(G31) → S6` and `G31 → S6` with kernels from `O2`.
fn g31_sequences(ctx: &G31Context) -> Result<[(SequenceReport, ComplementOutcome); 2], G31Error> {
    let g = ctx.g31()?;
    let lam = ctx.lambda_images()?;
    let o2 = ctx.o2()?;
    let z = g.center();
    let q = g.quotient_by_central(&z)?;
    let k_gens: Vec<_> = o2.elements().iter().map(|x| q.identity().sibling(x)).collect();
    let k = GroupTable::closure(&k_gens, q.order())?;
    let phi_q = |c: &crate::grpengine::Coset<Mat>| lam[g.index_of(c.representative()).expect("coset rep in G31")].pi();
    let spec_q = ExtensionSpec::new(&q, &k, phi_q, QuotientKind::Sym6)?;
    let first = (verify_exact_sequence(&spec_q), complement_exists(&spec_q));
    let spec = ExtensionSpec::new(g, o2, |x| lam[g.index_of(x).expect("element")].pi(), QuotientKind::Sym6)?;
    let second = (verify_exact_sequence(&spec), complement_exists(&spec));
    Ok([first, second])
}

pub fn centre_derive_g(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let [(r1, c1), (r2, c2)] = g31_sequences(ctx)?;
    let ok = r1.exact() && r2.exact() && is_exhausted(&c1) && is_exhausted(&c2);
    Ok(Outcome::new(
        ok,
        json!({
            "quotient_by_center": { "sequence": sequence_json(&r1), "complement": complement_json(&c1) },
            "full_group": { "sequence": sequence_json(&r2), "complement": complement_json(&c2) },
        }),
    ))
}

pub fn centre_derive_h(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let lam = ctx.lambda_images()?;
    let [(r1, c1), _] = g31_sequences(ctx)?;
    let (w_out, w_seq, w_o2) = central_quotient_split(ctx, GroupName::W6prime)?;
    // O2 of G31/Z(G31) is the image of O2(G31).
    let q = g.quotient_by_central(&g.center())?;
    let q_o2 = q.normal_2_subgroups()?.pop().map(|h| h.order()).unwrap_or(0);
    // Λ identifies G31/Z(G31) with cW6prime/{±Id}.
    let images: BTreeSet<String> = lam
        .iter()
        .map(|x| {
            let a = x.canonical_key();
            let b = x.neg().canonical_key();
            a.min(b)
        })
        .collect();
    let identified = images.len() == q.order() && q.order() == 11520;
    let ok = r1.exact()
        && is_exhausted(&c1)
        && w_seq.exact()
        && splits_verified(&w_out, QuotientKind::Sym6)
        && q_o2 == 16
        && w_o2 == 16
        && identified;
    Ok(Outcome::new(
        ok,
        json!({
            "G31_mod_center": { "order": q.order(), "O2_order": q_o2, "complement": complement_json(&c1) },
            "W6prime_mod_center": { "O2_order": w_o2, "complement": complement_json(&w_out) },
            "G31_mod_center_equals_cW6prime_mod_center": identified,
            "distinguished_by": "splitting of the extension by the characteristic subgroup O2",
        }),
    ))
}

pub fn prop_max_random(ctx: &G31Context, cfg: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let act = ctx.root_action()?;
    let lam = ctx.lambda_images()?;
    let to_perm = |i: usize| -> Result<_, G31Error> {
        act.permutation_of(g.element(i))?
            .ok_or_else(|| G31Error::Construction("element does not preserve the root orbit".into()))
    };
    // Returns (H = G31, π(Λ(H)) = S6).
    let trial = |idx: &[usize]| -> Result<(bool, bool), G31Error> {
        let perms = idx.iter().map(|&i| to_perm(i)).collect::<Result<Vec<_>, _>>()?;
        // A subgroup larger than half the group is the whole group.
        let whole = match GroupTable::closure(&perms, G31_ORDER / 2) {
            Err(GroupError::CapExceeded { .. }) => true,
            Ok(_) => false,
            Err(e) => return Err(e.into()),
        };
        let pis: Vec<Perm6> = idx.iter().map(|&i| lam[i].pi()).collect();
        let full_image = GroupTable::closure(&pis, 720)?.order() == 720;
        Ok((whole, full_image))
    };
    let five: Vec<usize> = ctx
        .five_generators()?
        .lifts
        .iter()
        .map(|m| {
            g.index_of(m)
                .ok_or_else(|| G31Error::Construction("lift outside G31".into()))
        })
        .collect::<Result<_, _>>()?;
    let o2: Vec<usize> = g.indices_of(ctx.o2()?)?;
    let fixed_five = trial(&five)?;
    let fixed_o2 = trial(&o2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut counterexamples = Vec::new();
    let mut whole_count = 0;
    for t in 0..cfg.trials {
        let k = rng.gen_range(2..=6);
        let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.order())).collect();
        let (whole, full) = trial(&idx)?;
        whole_count += whole as usize;
        if whole != full {
            counterexamples.push(json!({ "trial": t, "elements": idx }));
        }
    }
    let ok = counterexamples.is_empty() && fixed_five == (true, true) && fixed_o2 == (false, false);
    Ok(Outcome::new(
        ok,
        json!({
            "seed": cfg.seed,
            "trials": cfg.trials,
            "orbit_size": act.len(),
            "generated_whole_group": whole_count,
            "five_reflections": fixed_five,
            "O2": fixed_o2,
            "counterexamples": counterexamples,
        }),
    ))
}

pub fn prop_5_generation(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let five = ctx.five_generators()?;
    let tau_ok = (1..=5u8).zip(&five.mus).all(|(j, mu)| {
        let (s, _) = s_and_w(j);
        mu.pi() == tau_table().tau_inverse(&s)
    });
    let pis: Vec<Perm6> = five.mus.iter().map(ScaledSignedPerm::pi).collect();
    let s6 = GroupTable::closure(&pis, 720)?.order();
    let h = GroupTable::closure(&five.lifts, G31_ORDER)?;
    let same = h.same_elements(g);
    let m_tilde = sorted_keys(ctx.reflections()?);
    let in_m = five.lifts.iter().all(|r| m_tilde.contains(&r.canonical_key()));
    let ok = tau_ok && s6 == 720 && same && in_m;
    Ok(Outcome::new(
        ok,
        json!({
            "pi_mu_j_equals_tau_inverse_s_j": tau_ok,
            "pi_images": pis.iter().map(Perm6::to_string).collect::<Vec<_>>(),
            "negated_into_M": five.negated,
            "generated_S6_order": s6,
            "generated_order": h.order(),
            "equals_g31": same,
            "generators": five.lifts.iter().map(mat_json).collect::<Vec<_>>(),
        }),
    ))
}

/// Number of `k`-subsets of `items` whose closure is all of 𝔖6.
fn generating_subsets(items: &[Perm6], k: usize) -> Result<(usize, usize), G31Error> {
    let mut total = 0;
    let mut generating = 0;
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let gens: Vec<Perm6> = pick.iter().map(|&i| items[i]).collect();
        total += 1;
        if GroupTable::closure(&gens, 720)?.order() == 720 {
            generating += 1;
        }
        // next combination
        let Some(p) = (0..k).rev().find(|&p| pick[p] < items.len() - k + p) else {
            break;
        };
        pick[p] += 1;
        for q in p + 1..k {
            pick[q] = pick[q - 1] + 1;
        }
    }
    Ok((total, generating))
}

pub fn prop_4_impossible(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let g = ctx.g31()?;
    let found = all_reflections(ctx)?;
    let images: BTreeSet<Perm6> = found.iter().map(|&i| ctx.pi_lambda(i)).collect::<Result<_, _>>()?;
    let x = Perm6::from_cycles(&[&[1, 2], &[3, 4], &[5, 6]]).expect("valid");
    let class: BTreeSet<Perm6> = Perm6::all().iter().map(|c| x.conjugate_by(c)).collect();
    let images_ok = images == class && class.len() == 15;
    let items: Vec<Perm6> = images.iter().copied().collect();
    let (total, generating) = generating_subsets(&items, 4)?;
    let transpositions: Vec<Perm6> = items.iter().map(tau).collect();
    let all_transpositions = transpositions.iter().all(|t| t.cycle_type() == vec![2]);
    let (t_total, t_generating) = generating_subsets(&transpositions, 4)?;
    let m_tilde = sorted_keys(ctx.reflections()?);
    let same_set = found.len() == 60 && found.iter().all(|&i| m_tilde.contains(&g.element(i).canonical_key()));
    let ok = same_set
        && images_ok
        && total == 1365
        && generating == 0
        && all_transpositions
        && t_total == 1365
        && t_generating == 0;
    Ok(Outcome::new(
        ok,
        json!({
            "reflections": found.len(),
            "reflections_are_lifted_class": same_set,
            "pi_lambda_images": items.len(),
            "images_are_triple_transposition_class": images_ok,
            "four_subsets": total,
            "four_subsets_generating_S6": generating,
            "tau_images_are_transpositions": all_transpositions,
            "four_transposition_subsets_generating_S6": t_generating,
        }),
    ))
}

pub fn outer_tau(_: &G31Context, _: &RunConfig) -> CheckResult {
    let t = tau_table();
    let x = Perm6::from_cycles(&[&[1, 2], &[3, 4], &[5, 6]]).expect("valid");
    let normalised = tau(&x) == Perm6::transposition(1, 2);
    let hom = t.is_homomorphism();
    let bij = t.is_bijective();
    let inner = t.inner_witnesses();
    let outer_class = tau(&Perm6::transposition(1, 2)).cycle_type() == vec![2, 2, 2];
    Ok(Outcome::new(
        normalised && hom && bij && inner.is_empty() && outer_class,
        json!({
            "tau((1,2)(3,4)(5,6))": tau(&x).to_string(),
            "homomorphism_pairs_checked": 720 * 720,
            "homomorphism": hom,
            "bijective": bij,
            "inner_conjugators": inner.len(),
            "tau((1,2))": tau(&Perm6::transposition(1, 2)).to_string(),
            "inner_twist": t.twist().to_string(),
        }),
    ))
}

fn random_alternating(rng: &mut ChaCha8Rng) -> Mat {
    loop {
        let mut m = Mat::zeros(4, 4);
        for i in 0..4 {
            for j in i + 1..4 {
                let v = GaussRat::from_ints(rng.gen_range(-3..=3), rng.gen_range(-1..=1));
                m[(i, j)] = v.clone();
                m[(j, i)] = -&v;
            }
        }
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

pub fn remark_b2c2(_: &G31Context, cfg: &RunConfig) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xb2c2);
    let mut stabilized = 0;
    for _ in 0..SYMPLECTIC_SAMPLES {
        let psi = random_alternating(&mut rng);
        let mut g = Mat::identity(4);
        for _ in 0..rng.gen_range(2..=5) {
            let u: Vec<GaussRat> = (0..4)
                .map(|_| GaussRat::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1)))
                .collect();
            g = g.mul(&transvection(&psi, &u)?)?;
        }
        if check_sp_stabilizes(&g, &psi)? {
            stabilized += 1;
        }
    }
    Ok(Outcome::new(
        stabilized == SYMPLECTIC_SAMPLES,
        json!({ "samples": SYMPLECTIC_SAMPLES, "stabilized": stabilized, "seed": cfg.seed }),
    ))
}

pub fn remark_class_counts(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let a = ctx.group(GroupName::W6prime).conjugacy_classes().len();
    let b = ctx.group(GroupName::CW6prime).conjugacy_classes().len();
    Ok(Outcome::new(a == 37 && b == 37, json!({ "W6prime": a, "cW6prime": b })))
}

pub fn remark_irrational_trace(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let w = ctx.group(GroupName::W6prime);
    let integral = w.elements().iter().all(|x| {
        let t = x.to_matrix().trace();
        t.is_real() && t.re.is_integer()
    });
    let irho = rho().times_i();
    let c = ctx.group(GroupName::CW6prime);
    let member = c.contains(&irho);
    let trace = irho.to_matrix().trace();
    let nonreal = c.elements().iter().filter(|x| !x.to_matrix().trace().is_real()).count();
    let ok = integral && member && trace == GaussRat::from_ints(0, 2);
    Ok(Outcome::new(
        ok,
        json!({
            "W6prime_traces_integral": integral,
            "i_rho_in_cW6prime": member,
            "trace_i_rho": format!("{trace:?}"),
            "cW6prime_elements_with_nonreal_trace": nonreal,
        }),
    ))
}

pub fn remark_w6plus_vs_cw6prime(ctx: &G31Context, _: &RunConfig) -> CheckResult {
    let a = ctx.group(GroupName::W6plus);
    let b = ctx.group(GroupName::CW6prime);
    let (ca, cb) = (a.conjugacy_classes().len(), b.conjugacy_classes().len());
    let (ha, hb) = (a.order_histogram(), b.order_histogram());
    let witness = json!({
        "class_counts": { "W6plus": ca, "cW6prime": cb },
        "order_histograms": { "W6plus": ha, "cW6prime": hb },
    });
    if ca != cb || ha != hb {
        Ok(Outcome::new(true, witness))
    } else {
        Ok(Outcome::inconclusive(witness))
    }
}
