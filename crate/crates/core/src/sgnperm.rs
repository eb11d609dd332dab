//! Scaled signed permutations of the orthonormal basis `ε1..ε6`.
//!
//! An element `i^k · s · p` sends `ε_j` to `i^k · s_j · ε_{p(j)}`. With
//! `i² = -1` folded into the signs, `k ∈ {0, 1}` and the representation is
//! unique. The diagonal part has determinant `γ = (-1)^k · ∏ s_j`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::GaussRat;
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SgnpermError {
    #[error("matrix is not i^k times a signed permutation matrix")]
    NotMonomial,
    #[error("unknown group name {0:?}")]
    UnknownGroup(String),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<u8>),
}

/// A permutation of `{1, …, 6}`, stored 0-based as its image list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm6([u8; 6]);

impl Perm6 {
    pub const fn identity() -> Self {
        Perm6([0, 1, 2, 3, 4, 5])
    }

    /// From 0-based images.
    pub fn from_images(images: [u8; 6]) -> Result<Self, SgnpermError> {
        let mut seen = [false; 6];
        for &x in &images {
            if x >= 6 || seen[x as usize] {
                return Err(SgnpermError::InvalidPermutation(images.to_vec()));
            }
            seen[x as usize] = true;
        }
        Ok(Perm6(images))
    }

    /// From disjoint cycles written 1-based, e.g. `&[&[1, 2], &[3, 4]]`.
    pub fn from_cycles(cycles: &[&[u8]]) -> Result<Self, SgnpermError> {
        let mut images = [0, 1, 2, 3, 4, 5];
        let mut touched = [false; 6];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if !(1..=6).contains(&a) || !(1..=6).contains(&b) || touched[a as usize - 1] {
                    return Err(SgnpermError::InvalidPermutation(cycle.to_vec()));
                }
                touched[a as usize - 1] = true;
                images[a as usize - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// The transposition `(a, b)`, 1-based.
    pub fn transposition(a: u8, b: u8) -> Self {
        Self::from_cycles(&[&[a, b]]).expect("distinct points in 1..=6")
    }

    pub fn images(&self) -> [u8; 6] {
        self.0
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm6) -> Perm6 {
        Perm6(std::array::from_fn(|j| self.0[other.0[j] as usize]))
    }

    pub fn inverse(&self) -> Perm6 {
        let mut inv = [0u8; 6];
        for (j, &x) in self.0.iter().enumerate() {
            inv[x as usize] = j as u8;
        }
        Perm6(inv)
    }

    pub fn conjugate_by(&self, c: &Perm6) -> Perm6 {
        c.compose(self).compose(&c.inverse())
    }

    pub fn is_identity(&self) -> bool {
        *self == Perm6::identity()
    }

    /// Lengths of the nontrivial cycles, longest first.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 6];
        let mut lens = Vec::new();
        for start in 0..6 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            if len > 1 {
                lens.push(len);
            }
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(&self) -> i8 {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// All 720 permutations in lexicographic order of their image lists.
    pub fn all() -> Vec<Perm6> {
        let mut out = Vec::with_capacity(720);
        let mut cur = [0u8, 1, 2, 3, 4, 5];
        loop {
            out.push(Perm6(cur));
            // next lexicographic permutation
            let Some(i) = (0..5).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..6).rev().find(|&j| cur[j] > cur[i]).expect("exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Position in [`Perm6::all`].
    pub fn rank(&self) -> usize {
        let mut rank = 0;
        for i in 0..6 {
            let smaller = (i + 1..6).filter(|&j| self.0[j] < self.0[i]).count();
            rank = rank * (6 - i) + smaller;
        }
        rank
    }

    /// One-line notation, 1-based, e.g. `[2,1,4,3,6,5]`.
    pub fn one_line(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for Perm6 {
    /// Cycle notation, 1-based; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = [false; 6];
        let mut any = false;
        for start in 0..6 {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut j = start;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.0[j] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `i^k · diag(s) · p` acting on `ε1..ε6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledSignedPerm {
    k: u8,
    perm: Perm6,
    signs: [i8; 6],
}

impl ScaledSignedPerm {
    /// `i^k` times the signed permutation `ε_j ↦ s_j ε_{p(j)}`, normalised.
    pub fn new(k: i64, perm: Perm6, signs: [i8; 6]) -> Self {
        assert!(signs.iter().all(|s| *s == 1 || *s == -1), "signs must be ±1");
        let k = k.rem_euclid(4) as u8;
        let mut x = ScaledSignedPerm { k, perm, signs };
        if k >= 2 {
            x.k -= 2;
            for s in &mut x.signs {
                *s = -*s;
            }
        }
        x
    }

    pub fn identity() -> Self {
        Self::new(0, Perm6::identity(), [1; 6])
    }

    pub fn from_perm(p: Perm6) -> Self {
        Self::new(0, p, [1; 6])
    }

    pub fn diag(signs: [i8; 6]) -> Self {
        Self::new(0, Perm6::identity(), signs)
    }

    /// `i · Id`.
    pub fn scalar_i() -> Self {
        Self::new(1, Perm6::identity(), [1; 6])
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn perm(&self) -> Perm6 {
        self.perm
    }

    pub fn signs(&self) -> [i8; 6] {
        self.signs
    }

    pub fn neg(&self) -> Self {
        Self::new(self.k as i64, self.perm, self.signs.map(|s| -s))
    }

    pub fn times_i(&self) -> Self {
        Self::new(self.k as i64 + 1, self.perm, self.signs)
    }

    pub fn compose(&self, other: &Self) -> Self {
        let perm = self.perm.compose(&other.perm);
        let signs = std::array::from_fn(|j| other.signs[j] * self.signs[other.perm.apply(j)]);
        Self::new(self.k as i64 + other.k as i64, perm, signs)
    }

    pub fn inverse(&self) -> Self {
        let mut signs = [1i8; 6];
        for j in 0..6 {
            signs[self.perm.apply(j)] = self.signs[j];
        }
        Self::new(-(self.k as i64), self.perm.inverse(), signs)
    }

    /// The projection to 𝔖6.
    pub fn pi(&self) -> Perm6 {
        self.perm
    }

    pub fn sign_product(&self) -> i8 {
        self.signs.iter().product()
    }

    /// Determinant of the diagonal part: `(i^k)^6 · ∏ s = (-1)^k · ∏ s`.
    pub fn gamma(&self) -> i8 {
        if self.k == 1 {
            -self.sign_product()
        } else {
            self.sign_product()
        }
    }

    pub fn det_sign(&self) -> i8 {
        self.gamma() * self.perm.sign()
    }

    pub fn det_ssp(&self) -> GaussRat {
        GaussRat::from_integer(self.det_sign() as i64)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.is_identity()
    }

    /// Column `j` holds `i^k s_j` in row `p(j)`.
    pub fn to_matrix(&self) -> Mat {
        let mut m = Mat::zeros(6, 6);
        let scale = GaussRat::i_pow(self.k as i64);
        for j in 0..6 {
            m[(self.perm.apply(j), j)] = &scale * &GaussRat::from_integer(self.signs[j] as i64);
        }
        m
    }

    pub fn from_matrix(m: &Mat) -> Result<Self, SgnpermError> {
        if m.rows() != 6 || m.cols() != 6 {
            return Err(SgnpermError::NotMonomial);
        }
        let mut images = [0u8; 6];
        let mut powers = [0i64; 6];
        for j in 0..6 {
            let mut nonzero = (0..6).filter(|&i| !m[(i, j)].is_zero());
            let (Some(i), None) = (nonzero.next(), nonzero.next()) else {
                return Err(SgnpermError::NotMonomial);
            };
            images[j] = i as u8;
            powers[j] = (0..4)
                .find(|&k| m[(i, j)] == GaussRat::i_pow(k))
                .ok_or(SgnpermError::NotMonomial)?;
        }
        let perm = Perm6::from_images(images).map_err(|_| SgnpermError::NotMonomial)?;
        let k = powers[0] % 2;
        if powers.iter().any(|p| p % 2 != k) {
            return Err(SgnpermError::NotMonomial);
        }
        let signs = powers.map(|p| if p == k { 1 } else { -1 });
        Ok(Self::new(k, perm, signs))
    }
}

impl fmt::Display for ScaledSignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = self.signs.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
        write!(f, "i^{} * perm{} * signs[{}]", self.k, self.perm.one_line(), signs)
    }
}

impl fmt::Debug for ScaledSignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The matrix `μ0` in `E`: three blocks `[[0, 1], [-1, 0]]`.
pub fn mu0_matrix() -> Mat {
    Mat::from_int_rows(&[
        &[0, 1, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0],
    ])
}

/// The matrix `ρ` in `E`: `diag(-1, 1, 1, 1)` followed by the swap of `ε5, ε6`.
pub fn rho_matrix() -> Mat {
    Mat::from_int_rows(&[
        &[-1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, 1, 0],
    ])
}

pub fn mu0() -> ScaledSignedPerm {
    ScaledSignedPerm::from_matrix(&mu0_matrix()).expect("monomial")
}

pub fn rho() -> ScaledSignedPerm {
    ScaledSignedPerm::from_matrix(&rho_matrix()).expect("monomial")
}

/// `t0 = diag(1, -1, 1, -1, 1, -1)`.
pub fn t0() -> ScaledSignedPerm {
    ScaledSignedPerm::diag([1, -1, 1, -1, 1, -1])
}

/// The named subgroups of `T ⋊ 𝔖6` used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    /// Type B6: all signed permutations.
    W6,
    /// Signed permutations of determinant 1.
    W6plus,
    /// Type D6: signed permutations with `γ = 1`.
    W6prime,
    /// `<W6plus, i·Id>`.
    CW6,
    /// `CW6 ∩ Ker γ`.
    CW6prime,
    /// The derived subgroup of W6.
    DW6,
    /// Diagonal signs.
    A6,
    /// Diagonal signs with product 1.
    A6prime,
    /// Permutation matrices.
    S6perm,
    /// Even permutation matrices.
    A6alt,
}

impl GroupName {
    pub const ALL: [GroupName; 10] = [
        GroupName::W6,
        GroupName::W6plus,
        GroupName::W6prime,
        GroupName::CW6,
        GroupName::CW6prime,
        GroupName::DW6,
        GroupName::A6,
        GroupName::A6prime,
        GroupName::S6perm,
        GroupName::A6alt,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupName::W6 => "W6",
            GroupName::W6plus => "W6plus",
            GroupName::W6prime => "W6prime",
            GroupName::CW6 => "cW6",
            GroupName::CW6prime => "cW6prime",
            GroupName::DW6 => "DW6",
            GroupName::A6 => "A6",
            GroupName::A6prime => "A6prime",
            GroupName::S6perm => "S6perm",
            GroupName::A6alt => "A6alt",
        }
    }

    /// Membership by the determinant / `γ` characterisation.
    pub fn contains(&self, x: &ScaledSignedPerm) -> bool {
        let signed = x.k == 0;
        let perm_sign = x.perm.sign();
        let prod = x.sign_product();
        match self {
            GroupName::W6 => signed,
            GroupName::W6plus => signed && x.det_sign() == 1,
            GroupName::W6prime => signed && x.gamma() == 1,
            // i·w has determinant -det(w); both cosets satisfy sign(p)·∏s = 1.
            GroupName::CW6 => perm_sign * prod == 1,
            GroupName::CW6prime => perm_sign * prod == 1 && x.gamma() == 1,
            GroupName::DW6 => signed && perm_sign == 1 && prod == 1,
            GroupName::A6 => signed && x.is_diagonal(),
            GroupName::A6prime => signed && x.is_diagonal() && prod == 1,
            GroupName::S6perm => signed && x.signs == [1; 6],
            GroupName::A6alt => signed && x.signs == [1; 6] && perm_sign == 1,
        }
    }

    pub fn generators(&self) -> Vec<ScaledSignedPerm> {
        let p = |cycles: &[&[u8]]| ScaledSignedPerm::from_perm(Perm6::from_cycles(cycles).expect("valid"));
        let d12 = ScaledSignedPerm::diag([-1, -1, 1, 1, 1, 1]);
        let c3 = p(&[&[1, 2, 3]]);
        let c5 = p(&[&[2, 3, 4, 5, 6]]);
        let t12 = p(&[&[1, 2]]);
        let c6 = p(&[&[1, 2, 3, 4, 5, 6]]);
        match self {
            GroupName::W6 => vec![t12, c6, ScaledSignedPerm::diag([-1, 1, 1, 1, 1, 1])],
            GroupName::W6prime => vec![t12, c6, d12],
            GroupName::W6plus => vec![c3, c5, d12, rho()],
            GroupName::CW6 => vec![c3, c5, d12, rho(), ScaledSignedPerm::scalar_i()],
            GroupName::CW6prime => vec![c3, c5, d12, rho().times_i()],
            GroupName::DW6 => vec![c3, c5, d12],
            GroupName::A6 => (0..6)
                .map(|j| {
                    let mut s = [1; 6];
                    s[j] = -1;
                    ScaledSignedPerm::diag(s)
                })
                .collect(),
            GroupName::A6prime => (0..5)
                .map(|j| {
                    let mut s = [1; 6];
                    s[j] = -1;
                    s[j + 1] = -1;
                    ScaledSignedPerm::diag(s)
                })
                .collect(),
            GroupName::S6perm => vec![t12, c6],
            GroupName::A6alt => vec![c3, c5],
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupName {
    type Err = SgnpermError;
    fn from_str(s: &str) -> Result<Self, SgnpermError> {
        GroupName::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| SgnpermError::UnknownGroup(s.to_string()))
    }
}

pub fn group_generators(name: &str) -> Result<Vec<ScaledSignedPerm>, SgnpermError> {
    Ok(name.parse::<GroupName>()?.generators())
}

/// Sign vector of a diagonal element as a bitmask over GF(2) (bit `j` set when `s_j = -1`).
pub fn diagonal_mask(x: &ScaledSignedPerm) -> Option<u8> {
    (x.k == 0 && x.is_diagonal()).then(|| {
        x.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s < 0)
            .fold(0u8, |m, (j, _)| m | (1 << j))
    })
}

/// Rank over GF(2) of a family of bitmasks.
pub fn gf2_rank(vectors: impl IntoIterator<Item = u8>) -> usize {
    let mut basis: Vec<u8> = Vec::new();
    for mut v in vectors {
        for b in &basis {
            let top = 7 - b.leading_zeros();
            if v & (1 << top) != 0 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// All 32 elements of `A6prime`, ordered by sign mask.
pub fn a6prime_elements() -> Vec<ScaledSignedPerm> {
    (0u8..64)
        .filter(|m| m.count_ones() % 2 == 0)
        .map(|m| ScaledSignedPerm::diag(std::array::from_fn(|j| if m & (1 << j) != 0 { -1 } else { 1 })))
        .collect()
}

/// Sign masks of the commutators `[σ, a]` with `σ` ranging over the
/// `𝔄6`-conjugates of the `A6alt` generators and `a` over `A6prime`.
pub fn alt_commutator_masks() -> Vec<u8> {
    let evens: Vec<Perm6> = Perm6::all().into_iter().filter(Perm6::is_even).collect();
    let mut sigmas: Vec<Perm6> = GroupName::A6alt
        .generators()
        .iter()
        .flat_map(|g| evens.iter().map(move |c| g.pi().conjugate_by(c)))
        .collect();
    sigmas.sort_unstable();
    sigmas.dedup();
    let mut masks = Vec::new();
    for s in &sigmas {
        let s = ScaledSignedPerm::from_perm(*s);
        for a in a6prime_elements() {
            let c = s.compose(&a).compose(&s.inverse()).compose(&a.inverse());
            masks.push(diagonal_mask(&c).expect("commutator is diagonal"));
        }
    }
    masks.sort_unstable();
    masks.dedup();
    masks
}
