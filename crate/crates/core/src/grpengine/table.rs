use std::hash::BuildHasher;

use hashbrown::{DefaultHashBuilder, HashTable};

use super::{GroupElement, GroupError};

/// A finite group stored as the list of its elements in discovery order.
///
/// Element 0 is the identity. The index maps an element to its position
/// without storing a second copy of it.
#[derive(Clone)]
pub struct GroupTable<E> {
    elements: Vec<E>,
    index: HashTable<u32>,
    hasher: DefaultHashBuilder,
    generators: Vec<E>,
    /// Generators that were not already in the group when added.
    active: Vec<E>,
}

impl<E: GroupElement> GroupTable<E> {
    /// The trivial group on the identity of `sample`.
    pub fn trivial(sample: &E) -> Self {
        let mut t = GroupTable {
            elements: Vec::new(),
            index: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            generators: Vec::new(),
            active: Vec::new(),
        };
        t.insert(sample.identity_like());
        t
    }

    /// Breadth-first closure of `gens` under right multiplication.
    pub fn closure(gens: &[E], cap: usize) -> Result<Self, GroupError> {
        let first = gens.first().ok_or(GroupError::EmptyGenerators)?;
        let id = first.identity_like();
        for g in gens {
            g.validate()?;
            if g.identity_like() != id {
                return Err(GroupError::InconsistentGenerators);
            }
        }
        let mut t = Self::trivial(first);
        for g in gens {
            t.extend(g.clone(), cap)?;
        }
        Ok(t)
    }

    /// Adds a generator and closes again. Returns whether the group grew.
    pub fn extend(&mut self, g: E, cap: usize) -> Result<bool, GroupError> {
        self.generators.push(g.clone());
        if self.contains(&g) {
            return Ok(false);
        }
        self.active.push(g.clone());
        let old = self.elements.len();
        let mut frontier = self.elements.len();
        for i in 0..old {
            let y = self.elements[i].product(&g);
            self.insert_checked(y, cap)?;
        }
        while frontier < self.elements.len() {
            let x = self.elements[frontier].clone();
            frontier += 1;
            for a in 0..self.active.len() {
                let y = x.product(&self.active[a]);
                self.insert_checked(y, cap)?;
            }
        }
        Ok(true)
    }

    fn insert_checked(&mut self, x: E, cap: usize) -> Result<(), GroupError> {
        if self.insert(x) && self.elements.len() > cap {
            return Err(GroupError::CapExceeded { cap });
        }
        Ok(())
    }

    /// Inserts `x` if absent; returns whether it was new.
    fn insert(&mut self, x: E) -> bool {
        let hash = self.hasher.hash_one(&x);
        let elements = &self.elements;
        if self.index.find(hash, |&i| elements[i as usize] == x).is_some() {
            return false;
        }
        let n = self.elements.len() as u32;
        let hasher = &self.hasher;
        self.index
            .insert_unique(hash, n, |&i| hasher.hash_one(&elements[i as usize]));
        self.elements.push(x);
        true
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    /// All generators in the order given, including redundant ones.
    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    /// The generators that enlarged the group; they generate it.
    pub fn active_generators(&self) -> &[E] {
        &self.active
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        let hash = self.hasher.hash_one(x);
        self.index
            .find(hash, |&i| self.elements[i as usize] == *x)
            .map(|&i| i as usize)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index_of(x).is_some()
    }

    pub fn require(&self, x: &E) -> Result<usize, GroupError> {
        self.index_of(x).ok_or_else(|| GroupError::NotMember(x.canonical_key()))
    }

    /// Index of the product of elements `a` and `b`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].product(&self.elements[b]);
        self.index_of(&p).expect("group is closed")
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.index_of(&self.elements[a].invert()).expect("group is closed")
    }

    /// Positions in `self` of the elements of `sub`, sorted.
    pub fn indices_of(&self, sub: &GroupTable<E>) -> Result<Vec<usize>, GroupError> {
        let mut out = sub
            .elements
            .iter()
            .map(|x| self.require(x))
            .collect::<Result<Vec<_>, _>>()?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn is_subgroup_of(&self, other: &GroupTable<E>) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }

    /// Same element set.
    pub fn same_elements(&self, other: &GroupTable<E>) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// Order of element `i`.
    pub fn element_order(&self, i: usize) -> u64 {
        let x = &self.elements[i];
        let mut p = x.clone();
        let mut k = 1;
        while p != self.elements[0] {
            p = p.product(x);
            k += 1;
        }
        k
    }

    /// The subgroup generated by a subset of elements given by index.
    pub fn subgroup(&self, indices: &[usize]) -> Result<GroupTable<E>, GroupError> {
        let mut h = Self::trivial(self.identity());
        for &i in indices {
            h.extend(self.elements[i].clone(), self.order())?;
        }
        Ok(h)
    }
}

impl<E: GroupElement> std::fmt::Debug for GroupTable<E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order())
            .field("generators", &self.generators.len())
            .finish()
    }
}
