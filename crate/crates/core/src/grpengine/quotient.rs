use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::{GroupElement, GroupError, GroupTable};

/// A coset `gC` of a central subgroup, represented by its member with the
/// lexicographically least canonical key.
#[derive(Clone)]
pub struct Coset<E> {
    rep: E,
    central: Arc<[E]>,
}

impl<E: GroupElement> Coset<E> {
    fn canonical(x: &E, central: &Arc<[E]>) -> Self {
        let rep = central
            .iter()
            .map(|c| {
                let y = x.product(c);
                (y.canonical_key(), y)
            })
            .min_by(|a, b| a.0.cmp(&b.0))
            .map(|(_, y)| y)
            .expect("central subgroup is nonempty");
        Coset {
            rep,
            central: Arc::clone(central),
        }
    }

    pub fn representative(&self) -> &E {
        &self.rep
    }

    /// The coset of `x` modulo the same central subgroup.
    pub fn sibling(&self, x: &E) -> Self {
        Coset::canonical(x, &self.central)
    }

    /// All members of the coset.
    pub fn members(&self) -> Vec<E> {
        self.central.iter().map(|c| self.rep.product(c)).collect()
    }
}

impl<E: PartialEq> PartialEq for Coset<E> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl<E: Eq> Eq for Coset<E> {}

impl<E: Hash> Hash for Coset<E> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl<E: GroupElement> GroupElement for Coset<E> {
    fn identity_like(&self) -> Self {
        Coset::canonical(&self.rep.identity_like(), &self.central)
    }

    fn product(&self, rhs: &Self) -> Self {
        Coset::canonical(&self.rep.product(&rhs.rep), &self.central)
    }

    fn invert(&self) -> Self {
        Coset::canonical(&self.rep.invert(), &self.central)
    }

    fn canonical_key(&self) -> String {
        self.rep.canonical_key()
    }
}

impl<E: GroupElement> GroupTable<E> {
    /// `G/C` for a central subgroup `C` given by element indices.
    pub fn quotient_by_central(&self, central: &[usize]) -> Result<GroupTable<Coset<E>>, GroupError> {
        let c: Vec<E> = central.iter().map(|&i| self.element(i).clone()).collect();
        for x in &c {
            if !self.active_generators().iter().all(|g| x.product(g) == g.product(x)) {
                return Err(GroupError::NotCentral);
            }
        }
        let sub = GroupTable::closure(&c, c.len()).map_err(|_| GroupError::NotSubgroup)?;
        if sub.order() != c.len() {
            return Err(GroupError::NotSubgroup);
        }
        let c: Arc<[E]> = c.into();
        let gens: Vec<Coset<E>> = self
            .active_generators()
            .iter()
            .map(|g| Coset::canonical(g, &c))
            .collect();
        if gens.is_empty() {
            return GroupTable::closure(&[Coset::canonical(self.identity(), &c)], 1);
        }
        let q = GroupTable::closure(&gens, self.order() / c.len())?;
        debug_assert_eq!(q.order() * c.len(), self.order());
        Ok(q)
    }
}
