use std::collections::HashMap;

use crate::linalg::{Mat, Vector};

use super::{GroupElement, GroupError};

/// A permutation of `0..n`, composed right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Box<[u16]>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u16).collect())
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }
}

impl GroupElement for Permutation {
    fn identity_like(&self) -> Self {
        Permutation::identity(self.0.len())
    }

    fn product(&self, rhs: &Self) -> Self {
        Permutation(rhs.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    fn invert(&self) -> Self {
        let mut inv = vec![0u16; self.0.len()];
        for (j, &x) in self.0.iter().enumerate() {
            inv[x as usize] = j as u16;
        }
        Permutation(inv.into())
    }

    fn canonical_key(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(u16::to_string).collect();
        parts.join(",")
    }
}

/// The action of a matrix group on the orbit of one vector.
pub struct OrbitAction {
    points: Vec<Vector>,
    index: HashMap<Vector, u16>,
}

impl OrbitAction {
    pub fn new(generators: &[Mat], seed: Vector, cap: usize) -> Result<Self, GroupError> {
        let mut points = vec![seed.clone()];
        let mut index = HashMap::from([(seed, 0u16)]);
        let mut head = 0;
        while head < points.len() {
            let p = points[head].clone();
            head += 1;
            for g in generators {
                let q = g.mul_vec(&p)?;
                if !index.contains_key(&q) {
                    if points.len() >= cap.min(u16::MAX as usize) {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(q.clone(), points.len() as u16);
                    points.push(q);
                }
            }
        }
        Ok(OrbitAction { points, index })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    /// The permutation induced by `g`; `None` if `g` does not preserve the orbit.
    pub fn permutation_of(&self, g: &Mat) -> Result<Option<Permutation>, GroupError> {
        let mut images = Vec::with_capacity(self.points.len());
        for p in &self.points {
            match self.index.get(&g.mul_vec(p)?) {
                Some(&j) => images.push(j),
                None => return Ok(None),
            }
        }
        Ok(Some(Permutation(images.into())))
    }
}
