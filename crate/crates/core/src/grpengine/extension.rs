use std::collections::BTreeSet;

use serde::Serialize;

use crate::sgnperm::Perm6;

use super::{GroupElement, GroupError, GroupTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuotientKind {
    /// All of 𝔖6 (order 720).
    Sym6,
    /// The alternating group 𝔄6 (order 360).
    Alt6,
}

impl QuotientKind {
    pub fn order(&self) -> usize {
        match self {
            QuotientKind::Sym6 => 720,
            QuotientKind::Alt6 => 360,
        }
    }

    pub fn contains(&self, p: &Perm6) -> bool {
        match self {
            QuotientKind::Sym6 => true,
            QuotientKind::Alt6 => p.is_even(),
        }
    }

    pub fn presentation(&self) -> Presentation {
        match self {
            QuotientKind::Sym6 => Presentation::coxeter_s6(),
            QuotientKind::Alt6 => Presentation::alternating_a6(),
        }
    }
}

/// `(g_{w0} ⋯ g_{wk})^power = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub word: Vec<usize>,
    pub power: u32,
}

/// Generators of the quotient together with a complete set of relations.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub generators: Vec<Perm6>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// `t_i = (i, i+1)`: `t_i²`, `(t_i t_{i+1})³`, `(t_i t_j)²` for `|i - j| ≥ 2`.
    pub fn coxeter_s6() -> Self {
        let generators: Vec<Perm6> = (1..=5).map(|i| Perm6::transposition(i, i + 1)).collect();
        let mut relations = Vec::new();
        for i in 0..5 {
            relations.push(Relation {
                word: vec![i],
                power: 2,
            });
            for j in 0..i {
                let power = if i - j == 1 { 3 } else { 2 };
                relations.push(Relation {
                    word: vec![j, i],
                    power,
                });
            }
        }
        Presentation { generators, relations }
    }

    /// `x_i = (1, 2, i+2)`: `x_i³`, `(x_i x_j)²` for `i ≠ j`.
    pub fn alternating_a6() -> Self {
        let generators: Vec<Perm6> = (3..=6)
            .map(|k| Perm6::from_cycles(&[&[1, 2, k]]).expect("valid cycle"))
            .collect();
        let mut relations = Vec::new();
        for i in 0..4 {
            relations.push(Relation {
                word: vec![i],
                power: 3,
            });
            for j in 0..i {
                relations.push(Relation {
                    word: vec![j, i],
                    power: 2,
                });
            }
        }
        Presentation { generators, relations }
    }

    /// The generator images satisfy every relation.
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|r| {
            let w = r
                .word
                .iter()
                .fold(Perm6::identity(), |acc, &g| acc.compose(&self.generators[g]));
            power(&w, r.power).is_identity()
        })
    }
}

fn power<E: GroupElement>(x: &E, k: u32) -> E {
    let mut p = x.identity_like();
    for _ in 0..k {
        p = p.product(x);
    }
    p
}

/// `1 → K → G →φ Q → 1` with `φ` given on every element of `G`.
pub struct ExtensionSpec<'a, E> {
    pub group: &'a GroupTable<E>,
    /// Sorted indices of `K` in `G`.
    pub kernel: Vec<usize>,
    /// `φ` of each element, by index.
    pub phi: Vec<Perm6>,
    pub quotient: QuotientKind,
}

impl<'a, E: GroupElement> ExtensionSpec<'a, E> {
    pub fn new(
        group: &'a GroupTable<E>,
        kernel: &GroupTable<E>,
        phi: impl Fn(&E) -> Perm6,
        quotient: QuotientKind,
    ) -> Result<Self, GroupError> {
        let kernel = group.indices_of(kernel)?;
        let phi = group.elements().iter().map(phi).collect();
        Ok(ExtensionSpec {
            group,
            kernel,
            phi,
            quotient,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub group_order: usize,
    pub kernel_order: usize,
    pub image_order: usize,
    pub quotient_order: usize,
    pub homomorphism: bool,
    pub kernel_matches: bool,
    pub kernel_normal: bool,
    pub surjective: bool,
    pub orders_multiply: bool,
}

impl SequenceReport {
    pub fn exact(&self) -> bool {
        self.homomorphism && self.kernel_matches && self.kernel_normal && self.surjective && self.orders_multiply
    }
}

pub fn verify_exact_sequence<E: GroupElement>(spec: &ExtensionSpec<'_, E>) -> SequenceReport {
    let g = spec.group;
    let homomorphism = (0..g.order()).all(|x| {
        g.active_generators().iter().all(|a| {
            let xa = g.index_of(&g.element(x).product(a)).expect("group is closed");
            let ia = g.index_of(a).expect("generator in group");
            spec.phi[xa] == spec.phi[x].compose(&spec.phi[ia])
        })
    });
    let actual_kernel: Vec<usize> = (0..g.order()).filter(|&i| spec.phi[i].is_identity()).collect();
    let image: BTreeSet<Perm6> = spec.phi.iter().copied().collect();
    let in_quotient = image.iter().all(|p| spec.quotient.contains(p));
    let kernel_normal = spec.kernel.iter().all(|&k| {
        g.active_generators().iter().all(|a| {
            spec.kernel
                .binary_search(&g.index_of(&g.element(k).conjugate_by(a)).expect("closed"))
                .is_ok()
        })
    });
    let kernel_order = spec.kernel.len();
    let quotient_order = spec.quotient.order();
    SequenceReport {
        group_order: g.order(),
        kernel_order,
        image_order: image.len(),
        quotient_order,
        homomorphism,
        kernel_matches: actual_kernel == spec.kernel,
        kernel_normal,
        surjective: in_quotient && image.len() == quotient_order,
        orders_multiply: g.order() == kernel_order * quotient_order,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementWitness {
    /// Indices in `G` of the lifts of the presentation generators.
    pub generators: Vec<usize>,
    pub complement_order: usize,
    pub meets_kernel_trivially: bool,
    pub section_on_generators: bool,
}

impl ComplementWitness {
    pub fn verified(&self, quotient: QuotientKind) -> bool {
        self.complement_order == quotient.order() && self.meets_kernel_trivially && self.section_on_generators
    }
}

#[derive(Debug, Clone, Serialize)]
pub enum ComplementOutcome {
    Witness(ComplementWitness),
    /// Every lift of the generators was tried; `nodes` counts search nodes.
    Exhausted {
        nodes: u64,
    },
}

impl ComplementOutcome {
    pub fn is_split(&self) -> bool {
        matches!(self, ComplementOutcome::Witness(_))
    }
}

/// Searches for lifts of the quotient generators satisfying all relations.
///
/// With a complete presentation such lifts exist exactly when the sequence splits.
pub fn complement_exists<E: GroupElement>(spec: &ExtensionSpec<'_, E>) -> ComplementOutcome {
    let pres = spec.quotient.presentation();
    let g = spec.group;
    let n = pres.generators.len();
    let fibers: Vec<Vec<usize>> = pres
        .generators
        .iter()
        .map(|t| {
            let mut f: Vec<(String, usize)> = (0..g.order())
                .filter(|&i| spec.phi[i] == *t)
                .map(|i| (g.element(i).canonical_key(), i))
                .collect();
            f.sort();
            f.into_iter().map(|(_, i)| i).collect()
        })
        .collect();
    // A relation is checked once its last generator is assigned.
    let mut rel_at: Vec<Vec<&Relation>> = vec![Vec::new(); n];
    for r in &pres.relations {
        let last = *r.word.iter().max().expect("nonempty word");
        rel_at[last].push(r);
    }
    // Conjugating a complement by K gives another one, so g1 is fixed up to K-conjugacy.
    let kernel: Vec<E> = spec.kernel.iter().map(|&k| g.element(k).clone()).collect();
    let mut first = Vec::new();
    let mut covered = BTreeSet::new();
    for &c in &fibers[0] {
        if covered.contains(&c) {
            continue;
        }
        first.push(c);
        for k in &kernel {
            covered.insert(g.index_of(&g.element(c).conjugate_by(k)).expect("closed"));
        }
    }
    let mut search = Search {
        g,
        rel_at: &rel_at,
        chosen: Vec::with_capacity(n),
        nodes: 0,
    };
    let levels: Vec<&[usize]> = std::iter::once(first.as_slice())
        .chain(fibers[1..].iter().map(Vec::as_slice))
        .collect();
    if search.run(&levels) {
        let generators = search.chosen.clone();
        ComplementOutcome::Witness(verify_witness(spec, &pres, generators))
    } else {
        ComplementOutcome::Exhausted { nodes: search.nodes }
    }
}

struct Search<'a, E> {
    g: &'a GroupTable<E>,
    rel_at: &'a [Vec<&'a Relation>],
    chosen: Vec<usize>,
    nodes: u64,
}

impl<E: GroupElement> Search<'_, E> {
    fn run(&mut self, levels: &[&[usize]]) -> bool {
        let level = self.chosen.len();
        if level == levels.len() {
            return true;
        }
        for &c in levels[level] {
            self.nodes += 1;
            self.chosen.push(c);
            if self.relations_hold(level) && self.run(levels) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    fn relations_hold(&self, level: usize) -> bool {
        self.rel_at[level].iter().all(|r| {
            let id = self.g.identity();
            let w = r
                .word
                .iter()
                .fold(id.clone(), |acc, &k| acc.product(self.g.element(self.chosen[k])));
            power(&w, r.power) == *id
        })
    }
}

fn verify_witness<E: GroupElement>(
    spec: &ExtensionSpec<'_, E>,
    pres: &Presentation,
    generators: Vec<usize>,
) -> ComplementWitness {
    let g = spec.group;
    let elems: Vec<E> = generators.iter().map(|&i| g.element(i).clone()).collect();
    let h = GroupTable::closure(&elems, g.order()).expect("subset of a finite group");
    let meets_kernel_trivially = h
        .elements()
        .iter()
        .filter(|x| spec.phi[g.index_of(x).expect("closed")].is_identity())
        .count()
        == 1;
    let section_on_generators = generators.iter().zip(&pres.generators).all(|(&i, t)| spec.phi[i] == *t);
    ComplementWitness {
        generators,
        complement_order: h.order(),
        meets_kernel_trivially,
        section_on_generators,
    }
}
