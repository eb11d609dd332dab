//! Enumerated finite groups: closure, conjugacy, characteristic subgroups,
//! central quotients, exact sequences and complement search.

mod extension;
mod permrep;
mod quotient;
mod structure;
mod table;

use std::hash::Hash;

use thiserror::Error;

use crate::linalg::{Mat, MatError};
use crate::sgnperm::{Perm6, ScaledSignedPerm};

pub use extension::{
    complement_exists, verify_exact_sequence, ComplementOutcome, ComplementWitness, ExtensionSpec, Presentation,
    QuotientKind, Relation, SequenceReport,
};
pub use permrep::{OrbitAction, Permutation};
pub use quotient::Coset;
pub use structure::IrreducibilityReport;
pub use table::GroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generators have inconsistent shapes")]
    InconsistentGenerators,
    #[error("generator is not invertible")]
    NotInvertible,
    #[error("element is not in the group: {0}")]
    NotMember(String),
    #[error("subset is not central")]
    NotCentral,
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// A finite group element with exact equality and hashing.
pub trait GroupElement: Clone + Eq + Hash {
    fn identity_like(&self) -> Self;
    fn product(&self, rhs: &Self) -> Self;
    fn invert(&self) -> Self;
    /// Deterministic string form; its lexicographic order is used wherever an ordering is needed.
    fn canonical_key(&self) -> String;

    /// Rejects elements that cannot live in a finite group.
    fn validate(&self) -> Result<(), GroupError> {
        Ok(())
    }

    fn commutator(&self, rhs: &Self) -> Self {
        self.product(rhs).product(&self.invert()).product(&rhs.invert())
    }

    fn conjugate_by(&self, g: &Self) -> Self {
        g.product(self).product(&g.invert())
    }
}

impl GroupElement for Mat {
    fn identity_like(&self) -> Self {
        Mat::identity(self.rows())
    }

    fn product(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("validated square matrices of equal size")
    }

    fn invert(&self) -> Self {
        self.inverse().expect("validated invertible matrix")
    }

    fn canonical_key(&self) -> String {
        Mat::canonical_key(self)
    }

    fn validate(&self) -> Result<(), GroupError> {
        if !self.is_square() {
            return Err(GroupError::InconsistentGenerators);
        }
        if self.det()?.is_zero() {
            return Err(GroupError::NotInvertible);
        }
        Ok(())
    }
}

impl GroupElement for Perm6 {
    fn identity_like(&self) -> Self {
        Perm6::identity()
    }

    fn product(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }

    fn invert(&self) -> Self {
        self.inverse()
    }

    fn canonical_key(&self) -> String {
        self.one_line()
    }
}

impl GroupElement for ScaledSignedPerm {
    fn identity_like(&self) -> Self {
        ScaledSignedPerm::identity()
    }

    fn product(&self, rhs: &Self) -> Self {
        self.compose(rhs)
    }

    fn invert(&self) -> Self {
        self.inverse()
    }

    fn canonical_key(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussRat;
    use crate::sgnperm::{mu0, GroupName};

    fn ssp_group(name: GroupName) -> GroupTable<ScaledSignedPerm> {
        GroupTable::closure(&name.generators(), 100_000).unwrap()
    }

    #[test]
    fn trivial_closure() {
        let t = GroupTable::closure(&[Mat::identity(4)], 10).unwrap();
        assert_eq!(t.order(), 1);
        assert!(t.active_generators().is_empty());
        assert_eq!(
            GroupTable::<Mat>::closure(&[], 10).unwrap_err(),
            GroupError::EmptyGenerators
        );
        assert_eq!(
            GroupTable::closure(&[Mat::zeros(2, 2)], 10).unwrap_err(),
            GroupError::NotInvertible
        );
        assert_eq!(
            GroupTable::closure(&[Mat::identity(2), Mat::identity(3)], 10).unwrap_err(),
            GroupError::InconsistentGenerators
        );
    }

    #[test]
    fn cap_exceeded() {
        let err = GroupTable::closure(&GroupName::W6.generators(), 1000).unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 1000 });
    }

    #[test]
    fn named_group_orders_and_membership() {
        let expected = [
            (GroupName::W6, 46080),
            (GroupName::W6plus, 23040),
            (GroupName::W6prime, 23040),
            (GroupName::CW6, 46080),
            (GroupName::CW6prime, 23040),
            (GroupName::DW6, 11520),
            (GroupName::A6, 64),
            (GroupName::A6prime, 32),
            (GroupName::S6perm, 720),
            (GroupName::A6alt, 360),
        ];
        for (name, order) in expected {
            let g = ssp_group(name);
            assert_eq!(g.order(), order, "{name}");
            assert!(g.elements().iter().all(|x| name.contains(x)), "{name}");
        }
    }

    #[test]
    fn closure_is_idempotent() {
        let g = ssp_group(GroupName::DW6);
        let again = GroupTable::closure(g.elements(), g.order()).unwrap();
        assert!(again.same_elements(&g));
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn closed_under_inverse_and_product() {
        let g = ssp_group(GroupName::CW6prime);
        for i in (0..g.order()).step_by(97) {
            assert!(g.contains(&g.element(i).invert()));
            let j = (i * 7919) % g.order();
            assert!(g.contains(&g.element(i).product(g.element(j))));
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(ssp_group(GroupName::W6prime).conjugacy_classes().len(), 37);
        assert_eq!(ssp_group(GroupName::CW6prime).conjugacy_classes().len(), 37);
        let s6 = ssp_group(GroupName::S6perm);
        assert_eq!(s6.conjugacy_classes().len(), 11);
    }

    #[test]
    fn class_of_mu0() {
        let w6plus = ssp_group(GroupName::W6plus);
        let m = w6plus.class_of(&mu0()).unwrap();
        assert_eq!(m.len(), 60);
        assert!(!m.contains(&w6plus.index_of(&mu0().neg()).unwrap()));
        let w6 = ssp_group(GroupName::W6);
        let big = w6.class_of(&mu0()).unwrap();
        assert_eq!(big.len(), 120);
        assert!(big.contains(&w6.index_of(&mu0().neg()).unwrap()));
        let outside = ScaledSignedPerm::scalar_i();
        assert!(matches!(w6.class_of(&outside), Err(GroupError::NotMember(_))));
    }

    #[test]
    fn derived_center_centralizer() {
        let w6 = ssp_group(GroupName::W6);
        let d = w6.derived_subgroup();
        assert_eq!(d.order(), 11520);
        assert!(w6.is_normal(&d).unwrap());
        assert!(d.same_elements(&ssp_group(GroupName::DW6)));
        assert!(d.derived_subgroup().same_elements(&d));
        // Quotient by the trivial subgroup is a copy.
        let q = w6.quotient_by_central(&[0]).unwrap();
        assert_eq!(q.order(), w6.order());
        // W6 / D(W6) is abelian.
        for a in w6.active_generators() {
            for b in w6.active_generators() {
                assert!(d.contains(&a.commutator(b)));
            }
        }
        assert_eq!(w6.center().len(), 2);
        assert_eq!(ssp_group(GroupName::CW6).center().len(), 4);
        let c = w6.centralizer(&mu0()).unwrap();
        assert!(c.iter().all(|&i| GroupName::W6plus.contains(w6.element(i))));
    }

    #[test]
    fn central_quotients() {
        let g = ssp_group(GroupName::CW6prime);
        let z = g.center();
        assert_eq!(z.len(), 2);
        let q = g.quotient_by_central(&z).unwrap();
        assert_eq!(q.order(), 11520);
        let w6 = ssp_group(GroupName::W6);
        let not_central = [0, w6.index_of(&GroupName::W6.generators()[0]).unwrap()];
        assert_eq!(
            w6.quotient_by_central(&not_central).unwrap_err(),
            GroupError::NotCentral
        );
    }

    fn pi_spec<'a>(
        g: &'a GroupTable<ScaledSignedPerm>,
        kernel: GroupName,
        quotient: QuotientKind,
    ) -> ExtensionSpec<'a, ScaledSignedPerm> {
        let k = GroupTable::closure(&kernel.generators(), 1000).unwrap();
        ExtensionSpec::new(g, &k, ScaledSignedPerm::pi, quotient).unwrap()
    }

    #[test]
    fn exact_sequences() {
        let w6 = ssp_group(GroupName::W6);
        let r = verify_exact_sequence(&pi_spec(&w6, GroupName::A6, QuotientKind::Sym6));
        assert!(r.exact(), "{r:?}");
        assert_eq!(r.kernel_order, 64);
        let cw6p = ssp_group(GroupName::CW6prime);
        let r = verify_exact_sequence(&pi_spec(&cw6p, GroupName::A6prime, QuotientKind::Sym6));
        assert!(r.exact(), "{r:?}");
        assert_eq!(r.kernel_order, 32);
        let d = ssp_group(GroupName::DW6);
        let r = verify_exact_sequence(&pi_spec(&d, GroupName::A6prime, QuotientKind::Alt6));
        assert!(r.exact(), "{r:?}");
        // Wrong kernel is reported, not raised.
        let r = verify_exact_sequence(&pi_spec(&w6, GroupName::A6prime, QuotientKind::Sym6));
        assert!(!r.exact());
    }

    #[test]
    fn presentations_hold_in_quotient() {
        for q in [QuotientKind::Sym6, QuotientKind::Alt6] {
            let p = q.presentation();
            assert!(p.relations_hold());
            assert_eq!(GroupTable::closure(&p.generators, 720).unwrap().order(), q.order());
        }
    }

    #[test]
    fn complements() {
        let w6 = ssp_group(GroupName::W6);
        match complement_exists(&pi_spec(&w6, GroupName::A6, QuotientKind::Sym6)) {
            ComplementOutcome::Witness(w) => assert!(w.verified(QuotientKind::Sym6), "{w:?}"),
            other => panic!("{other:?}"),
        }
        let w6plus = ssp_group(GroupName::W6plus);
        let out = complement_exists(&pi_spec(&w6plus, GroupName::A6prime, QuotientKind::Sym6));
        assert!(matches!(out, ComplementOutcome::Exhausted { .. }), "{out:?}");
        let d = ssp_group(GroupName::DW6);
        match complement_exists(&pi_spec(&d, GroupName::A6prime, QuotientKind::Alt6)) {
            ComplementOutcome::Witness(w) => assert!(w.verified(QuotientKind::Alt6), "{w:?}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn normal_2_subgroups_small() {
        let s6 = ssp_group(GroupName::S6perm);
        let n = s6.normal_2_subgroups().unwrap();
        assert_eq!(n.len(), 1);
        assert_eq!(n[0].order(), 1);
        let a = ssp_group(GroupName::A6prime);
        assert_eq!(a.elementary_abelian_2_rank(), Some(5));
        assert!(!s6.is_elementary_abelian_2());
    }

    #[test]
    fn irreducibility() {
        let mats: Vec<Mat> = GroupName::DW6
            .generators()
            .iter()
            .map(ScaledSignedPerm::to_matrix)
            .collect();
        let d = GroupTable::closure(&mats, 20_000).unwrap();
        let r = d.irreducibility_sum();
        assert!(r.irreducible);
        assert_eq!(r.sum, GaussRat::from_integer(11520));
        let mats: Vec<Mat> = GroupName::A6
            .generators()
            .iter()
            .map(ScaledSignedPerm::to_matrix)
            .collect();
        assert!(
            !GroupTable::closure(&mats, 100)
                .unwrap()
                .irreducibility_sum()
                .irreducible
        );
    }

    #[test]
    fn histogram_is_invariant_under_relabelling() {
        let sym = ssp_group(GroupName::A6prime);
        let mats: Vec<Mat> = sym
            .active_generators()
            .iter()
            .map(ScaledSignedPerm::to_matrix)
            .collect();
        // conjugate by an arbitrary invertible matrix
        let c = Mat::from_int_rows(&[
            &[1, 1, 0, 0, 0, 0],
            &[0, 1, 2, 0, 0, 0],
            &[0, 0, 1, 0, 3, 0],
            &[1, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 0, 1],
        ]);
        let relabelled: Vec<Mat> = mats.iter().map(|m| m.conjugate_by(&c)).collect();
        let h = GroupTable::closure(&relabelled, 100).unwrap();
        assert_eq!(h.order_histogram(), sym.order_histogram());
    }

    #[test]
    fn orbit_action_is_a_homomorphism() {
        let mats: Vec<Mat> = GroupName::S6perm
            .generators()
            .iter()
            .map(ScaledSignedPerm::to_matrix)
            .collect();
        let seed: Vec<GaussRat> = (1..=6).map(GaussRat::from_integer).collect();
        let act = OrbitAction::new(&mats, seed, 1000).unwrap();
        assert_eq!(act.len(), 720);
        let a = act.permutation_of(&mats[0]).unwrap().unwrap();
        let b = act.permutation_of(&mats[1]).unwrap().unwrap();
        let ab = act.permutation_of(&mats[0].mul(&mats[1]).unwrap()).unwrap().unwrap();
        assert_eq!(a.product(&b), ab);
        let perms = GroupTable::closure(&[a, b], 1000).unwrap();
        assert_eq!(perms.order(), 720);
        assert!(act
            .permutation_of(&Mat::scalar(6, GaussRat::from_integer(2)))
            .unwrap()
            .is_none());
    }
}
