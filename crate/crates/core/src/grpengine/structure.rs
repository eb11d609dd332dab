use std::collections::{BTreeMap, BTreeSet};

use crate::exact::GaussRat;
use crate::linalg::Mat;

use super::{GroupElement, GroupError, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub sum: GaussRat,
    pub order: usize,
    pub irreducible: bool,
}

impl<E: GroupElement> GroupTable<E> {
    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_id = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let conj: Vec<(E, E)> = self
            .active_generators()
            .iter()
            .map(|g| (g.clone(), g.invert()))
            .collect();
        for start in 0..n {
            if class_id[start] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_id[start] = id;
            let mut class = vec![start];
            let mut head = 0;
            while head < class.len() {
                let x = self.element(class[head]).clone();
                head += 1;
                for (g, gi) in &conj {
                    let y = g.product(&x).product(gi);
                    let j = self.index_of(&y).expect("group is closed");
                    if class_id[j] == u32::MAX {
                        class_id[j] = id;
                        class.push(j);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// The conjugacy class of `g`, as sorted indices.
    pub fn class_of(&self, g: &E) -> Result<Vec<usize>, GroupError> {
        let start = self.require(g)?;
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = self.element(queue[head]).clone();
            head += 1;
            for h in self.active_generators() {
                let j = self.index_of(&x.conjugate_by(h)).expect("group is closed");
                if seen.insert(j) {
                    queue.push(j);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn centralizer(&self, g: &E) -> Result<Vec<usize>, GroupError> {
        self.require(g)?;
        Ok((0..self.order())
            .filter(|&i| {
                let x = self.element(i);
                x.product(g) == g.product(x)
            })
            .collect())
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| {
                let x = self.element(i);
                self.active_generators().iter().all(|g| x.product(g) == g.product(x))
            })
            .collect()
    }

    /// Smallest normal subgroup containing `subset`.
    pub fn normal_closure(&self, subset: &[E]) -> Result<GroupTable<E>, GroupError> {
        for s in subset {
            self.require(s)?;
        }
        let mut h = GroupTable::trivial(self.identity());
        for s in subset {
            h.extend(s.clone(), self.order())?;
        }
        loop {
            let mut grew = false;
            let mut k = 0;
            while k < h.active_generators().len() {
                let x = h.active_generators()[k].clone();
                for g in self.active_generators() {
                    grew |= h.extend(x.conjugate_by(g), self.order())?;
                }
                k += 1;
            }
            if !grew {
                return Ok(h);
            }
        }
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> GroupTable<E> {
        let gens = self.active_generators();
        let mut comms = Vec::new();
        for a in gens {
            for b in gens {
                comms.push(a.commutator(b));
            }
        }
        self.normal_closure(&comms).expect("commutators lie in the group")
    }

    /// `h` must be a subgroup of `self`.
    pub fn is_normal(&self, h: &GroupTable<E>) -> Result<bool, GroupError> {
        if !h.is_subgroup_of(self) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(h.active_generators()
            .iter()
            .all(|x| self.active_generators().iter().all(|g| h.contains(&x.conjugate_by(g)))))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.active_generators();
        gens.iter().all(|a| gens.iter().all(|b| a.product(b) == b.product(a)))
    }

    /// A pair of generators that do not commute, if any.
    pub fn noncommuting_pair(&self) -> Option<(E, E)> {
        let gens = self.active_generators();
        gens.iter().find_map(|a| {
            gens.iter()
                .find(|b| a.product(b) != b.product(a))
                .map(|b| (a.clone(), b.clone()))
        })
    }

    pub fn exponent_divides_two(&self) -> bool {
        self.elements().iter().all(|x| x.product(x) == *self.identity())
    }

    /// Elementary abelian 2-group test; returns its rank when it is one.
    pub fn elementary_abelian_2_rank(&self) -> Option<u32> {
        let n = self.order();
        (n.is_power_of_two() && self.exponent_divides_two()).then(|| n.trailing_zeros())
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        self.elementary_abelian_2_rank().is_some()
    }

    /// Number of elements of each order.
    pub fn order_histogram(&self) -> BTreeMap<u64, usize> {
        let mut h = BTreeMap::new();
        for i in 0..self.order() {
            *h.entry(self.element_order(i)).or_insert(0) += 1;
        }
        h
    }

    /// All normal subgroups of 2-power order, sorted by order.
    pub fn normal_2_subgroups(&self) -> Result<Vec<GroupTable<E>>, GroupError> {
        let two_part = 1usize << self.order().trailing_zeros();
        let mut candidates = Vec::new();
        for class in self.conjugacy_classes() {
            if !self.element_order(class[0]).is_power_of_two() {
                continue;
            }
            let elems: Vec<E> = class.iter().map(|&i| self.element(i).clone()).collect();
            match closure_from(self.identity(), &elems, two_part) {
                Ok(h) if h.order().is_power_of_two() => candidates.push(elems),
                Ok(_) | Err(GroupError::CapExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        let mut found = vec![GroupTable::trivial(self.identity())];
        let mut keys = BTreeSet::from([vec![0usize]]);
        let mut head = 0;
        while head < found.len() {
            let n = found[head].clone();
            head += 1;
            for class in &candidates {
                if n.contains(&class[0]) {
                    continue;
                }
                let mut m = n.clone();
                let mut ok = true;
                for x in class {
                    match m.extend(x.clone(), two_part) {
                        Ok(_) => {}
                        Err(GroupError::CapExceeded { .. }) => {
                            ok = false;
                            break;
                        }
                        Err(e) => return Err(e),
                    }
                }
                if !ok || !m.order().is_power_of_two() {
                    continue;
                }
                if keys.insert(self.indices_of(&m)?) {
                    found.push(m);
                }
            }
        }
        found.sort_by_key(GroupTable::order);
        Ok(found)
    }
}

fn closure_from<E: GroupElement>(id: &E, elems: &[E], cap: usize) -> Result<GroupTable<E>, GroupError> {
    let mut h = GroupTable::trivial(id);
    for x in elems {
        h.extend(x.clone(), cap)?;
    }
    Ok(h)
}

impl GroupTable<Mat> {
    /// `Σ tr(g)·conj(tr(g))` compared with `|G|`.
    pub fn irreducibility_sum(&self) -> IrreducibilityReport {
        let mut sum = GaussRat::zero();
        for g in self.elements() {
            let t = g.trace();
            sum = &sum + &(&t * &t.conj());
        }
        let order = self.order();
        let irreducible = sum == GaussRat::from_integer(order as i64);
        IrreducibilityReport {
            sum,
            order,
            irreducible,
        }
    }
}
