//! An outer automorphism of 𝔖6 from the action on the six synthematic totals.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::sgnperm::Perm6;

/// A 2-subset `{a, b}` of `{0, …, 5}` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Duad(u8, u8);

impl Duad {
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a != b && a < 6 && b < 6, "duad needs two distinct points");
        Duad(a.min(b), a.max(b))
    }

    pub fn points(&self) -> (u8, u8) {
        (self.0, self.1)
    }

    fn image(&self, s: &Perm6) -> Duad {
        Duad::new(s.apply(self.0 as usize) as u8, s.apply(self.1 as usize) as u8)
    }
}

/// Three disjoint duads covering all six points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syntheme([Duad; 3]);

impl Syntheme {
    fn new(mut duads: [Duad; 3]) -> Self {
        duads.sort();
        Syntheme(duads)
    }

    pub fn duads(&self) -> &[Duad; 3] {
        &self.0
    }

    fn image(&self, s: &Perm6) -> Syntheme {
        Syntheme::new(self.0.map(|d| d.image(s)))
    }
}

impl fmt::Display for Syntheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| format!("{}{}", d.0 + 1, d.1 + 1)).collect();
        f.write_str(&parts.join("|"))
    }
}

/// Five synthemes that together contain all fifteen duads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynthematicTotal([Syntheme; 5]);

impl SynthematicTotal {
    fn new(mut synthemes: [Syntheme; 5]) -> Self {
        synthemes.sort();
        SynthematicTotal(synthemes)
    }

    pub fn synthemes(&self) -> &[Syntheme; 5] {
        &self.0
    }

    fn image(&self, s: &Perm6) -> SynthematicTotal {
        SynthematicTotal::new(self.0.map(|x| x.image(s)))
    }
}

impl fmt::Display for SynthematicTotal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Syntheme::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// The 15 synthemes in lexicographic order.
pub fn enumerate_synthemes() -> Vec<Syntheme> {
    let mut out = Vec::new();
    for b in 1..6u8 {
        let rest: Vec<u8> = (1..6).filter(|&x| x != b).collect();
        for &c in &rest[1..] {
            let others: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != c).collect();
            out.push(Syntheme::new([
                Duad::new(0, b),
                Duad::new(rest[0], c),
                Duad::new(others[0], others[1]),
            ]));
        }
    }
    out.sort();
    out
}

/// The 6 totals, ordered by their printed form.
pub fn enumerate_totals() -> Vec<SynthematicTotal> {
    let syn = enumerate_synthemes();
    let disjoint = |a: &Syntheme, b: &Syntheme| a.0.iter().all(|d| !b.0.contains(d));
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(5);
    fn go(
        syn: &[Syntheme],
        start: usize,
        pick: &mut Vec<Syntheme>,
        out: &mut Vec<SynthematicTotal>,
        disjoint: &dyn Fn(&Syntheme, &Syntheme) -> bool,
    ) {
        if pick.len() == 5 {
            out.push(SynthematicTotal::new(pick.clone().try_into().expect("five")));
            return;
        }
        for k in start..syn.len() {
            if pick.iter().all(|p| disjoint(p, &syn[k])) {
                pick.push(syn[k]);
                go(syn, k + 1, pick, out, disjoint);
                pick.pop();
            }
        }
    }
    go(&syn, 0, &mut pick, &mut out, &disjoint);
    out.sort_by_key(|t| t.to_string());
    out
}

/// The normalised outer automorphism `τ`, tabulated on all 720 permutations.
#[derive(Debug, Clone)]
pub struct OuterAutomorphism {
    forward: Vec<Perm6>,
    backward: Vec<Perm6>,
    twist: Perm6,
}

#[derive(Debug, Clone, Serialize)]
pub struct TauEntry {
    pub sigma: String,
    pub tau: String,
}

impl OuterAutomorphism {
    /// Action on totals, then conjugation by the least `c` with `τ((1,2)(3,4)(5,6)) = (1,2)`.
    pub fn build() -> Self {
        let totals = enumerate_totals();
        let on_totals = |s: &Perm6| -> Perm6 {
            let images = std::array::from_fn(|i| {
                let t = totals[i].image(s);
                totals.iter().position(|u| *u == t).expect("totals are permuted") as u8
            });
            Perm6::from_images(images).expect("bijection on totals")
        };
        let all = Perm6::all();
        let raw: Vec<Perm6> = all.iter().map(on_totals).collect();
        let x = Perm6::from_cycles(&[&[1, 2], &[3, 4], &[5, 6]]).expect("valid");
        let target = Perm6::transposition(1, 2);
        let raw_x = raw[x.rank()];
        let twist = *all
            .iter()
            .find(|c| raw_x.conjugate_by(c) == target)
            .expect("raw image of a triple transposition is a transposition");
        let forward: Vec<Perm6> = raw.iter().map(|t| t.conjugate_by(&twist)).collect();
        let mut backward = vec![Perm6::identity(); 720];
        for (s, t) in all.iter().zip(&forward) {
            backward[t.rank()] = *s;
        }
        OuterAutomorphism {
            forward,
            backward,
            twist,
        }
    }

    pub fn tau(&self, s: &Perm6) -> Perm6 {
        self.forward[s.rank()]
    }

    pub fn tau_inverse(&self, s: &Perm6) -> Perm6 {
        self.backward[s.rank()]
    }

    /// The inner twist applied after the action on totals.
    pub fn twist(&self) -> Perm6 {
        self.twist
    }

    /// `τ(στ') = τ(σ)τ(τ')` for all 720 × 720 pairs.
    pub fn is_homomorphism(&self) -> bool {
        let all = Perm6::all();
        all.iter().all(|a| {
            let ta = self.tau(a);
            all.iter().all(|b| self.tau(&a.compose(b)) == ta.compose(&self.tau(b)))
        })
    }

    pub fn is_bijective(&self) -> bool {
        let all = Perm6::all();
        let mut seen = [false; 720];
        for s in &all {
            seen[self.tau(s).rank()] = true;
        }
        seen.iter().all(|&b| b)
            && all
                .iter()
                .all(|s| self.tau(&self.tau_inverse(s)) == *s && self.tau_inverse(&self.tau(s)) == *s)
    }

    /// Conjugators `c` with `τ(σ) = cσc⁻¹` for every `σ`; empty when `τ` is outer.
    pub fn inner_witnesses(&self) -> Vec<Perm6> {
        let all = Perm6::all();
        all.iter()
            .copied()
            .filter(|c| all.iter().all(|s| self.tau(s) == s.conjugate_by(c)))
            .collect()
    }

    pub fn table(&self) -> Vec<TauEntry> {
        Perm6::all()
            .iter()
            .map(|s| TauEntry {
                sigma: s.one_line(),
                tau: self.tau(s).one_line(),
            })
            .collect()
    }
}

/// The shared table.
pub fn tau_table() -> &'static OuterAutomorphism {
    static TAU: OnceLock<OuterAutomorphism> = OnceLock::new();
    TAU.get_or_init(OuterAutomorphism::build)
}

pub fn tau(s: &Perm6) -> Perm6 {
    tau_table().tau(s)
}

pub fn tau_inverse(s: &Perm6) -> Perm6 {
    tau_table().tau_inverse(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntheme_counts() {
        let syn = enumerate_synthemes();
        assert_eq!(syn.len(), 15);
        for a in 0..6 {
            for b in a + 1..6 {
                let d = Duad::new(a, b);
                assert_eq!(syn.iter().filter(|s| s.duads().contains(&d)).count(), 3);
            }
        }
        assert_eq!(syn[0].to_string(), "12|34|56");
    }

    #[test]
    fn six_totals_each_covering_all_duads() {
        let totals = enumerate_totals();
        assert_eq!(totals.len(), 6);
        for t in &totals {
            let mut duads: Vec<Duad> = t.synthemes().iter().flat_map(|s| *s.duads()).collect();
            duads.sort();
            duads.dedup();
            assert_eq!(duads.len(), 15);
        }
        let mut printed: Vec<String> = totals.iter().map(|t| t.to_string()).collect();
        let before = printed.clone();
        printed.sort();
        assert_eq!(printed, before);
    }

    #[test]
    fn normalisation_and_outer_class() {
        let x = Perm6::from_cycles(&[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
        assert_eq!(tau(&x), Perm6::transposition(1, 2));
        assert_eq!(tau(&Perm6::transposition(1, 2)).cycle_type(), vec![2, 2, 2]);
        assert_eq!(tau(&Perm6::identity()), Perm6::identity());
        assert_eq!(tau_inverse(&Perm6::transposition(1, 2)), x);
    }

    #[test]
    fn exhaustive_laws() {
        let t = tau_table();
        assert!(t.is_homomorphism());
        assert!(t.is_bijective());
        assert!(t.inner_witnesses().is_empty());
        assert_eq!(t.table().len(), 720);
    }
}
