//! The exterior square of a 4-dimensional space.
//!
//! Bivectors are stored either in the wedge basis
//! `B = (e1∧e2, e1∧e3, e1∧e4, e2∧e3, e2∧e4, e3∧e4)` or in an orthonormal basis
//! `E = (ε1, …, ε6)` for the symmetric form `b(x, y) = x∧y`, measured against
//! the volume element `e1∧e2∧e3∧e4`. The orthonormal basis lives over ℚ(i):
//!
//! ```text
//! ε1 = e12 + ½e34      ε2 = i(e12 − ½e34)
//! ε3 = e13 + ½e42      ε4 = i(e13 − ½e42)
//! ε5 = e14 + ½e23      ε6 = i(e14 − ½e23)
//! ```
//!
//! [`lambda2`] sends `g ∈ GL(V)` to the matrix of `g∧g` in `E`; [`spin_lift`]
//! recovers `±g` from that matrix.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{q, GaussRat};
use crate::linalg::{Mat, MatError, Vector};

/// Index pairs of the wedge basis, in order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pair_index(i: usize, j: usize) -> usize {
    PAIRS.iter().position(|&p| p == (i, j)).expect("i < j < 4")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtsqError {
    #[error("bivector is zero")]
    ZeroBivector,
    #[error("bivector is not decomposable")]
    NotDecomposable,
    #[error("matrix is not in the image of the exterior square: {0}")]
    NotInImage(String),
    #[error("rescaling constant {0} has no square root in Q(i)")]
    SqrtNotInField(String),
    #[error("alternating form is degenerate or not alternating")]
    DegenerateForm,
    #[error("matrix does not preserve the alternating form")]
    NotSymplectic,
    #[error("expected a {0} matrix")]
    Shape(&'static str),
    #[error(transparent)]
    Mat(#[from] MatError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    B,
    E,
}

/// A bivector with coordinates tagged by basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bivector {
    pub basis: Basis,
    pub coords: Vec<GaussRat>,
}

impl Bivector {
    pub fn in_b(coords: Vec<GaussRat>) -> Self {
        assert_eq!(coords.len(), 6);
        Bivector {
            basis: Basis::B,
            coords,
        }
    }

    pub fn in_e(coords: Vec<GaussRat>) -> Self {
        assert_eq!(coords.len(), 6);
        Bivector {
            basis: Basis::E,
            coords,
        }
    }

    /// `e_i ∧ e_j` for `i < j` (0-based).
    pub fn basis_wedge(i: usize, j: usize) -> Self {
        let mut c = vec![GaussRat::zero(); 6];
        c[pair_index(i, j)] = GaussRat::one();
        Bivector::in_b(c)
    }

    pub fn to_b(&self) -> Bivector {
        match self.basis {
            Basis::B => self.clone(),
            Basis::E => Bivector::in_b(basis_info().p.mul_vec(&self.coords).expect("6x6")),
        }
    }

    pub fn to_e(&self) -> Bivector {
        match self.basis {
            Basis::E => self.clone(),
            Basis::B => Bivector::in_e(basis_info().p_inv.mul_vec(&self.coords).expect("6x6")),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(GaussRat::is_zero)
    }

    pub fn scale(&self, s: &GaussRat) -> Bivector {
        Bivector {
            basis: self.basis,
            coords: self.coords.iter().map(|x| s * x).collect(),
        }
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        let (a, b) = (self.to_b(), other.to_b());
        Bivector::in_b(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    /// Antisymmetric 4×4 coordinate matrix `A` with `A[i][j] = x_ij`.
    pub fn antisymmetric_matrix(&self) -> Mat {
        let b = self.to_b();
        let mut m = Mat::zeros(4, 4);
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i, j)] = b.coords[k].clone();
            m[(j, i)] = -&b.coords[k];
        }
        m
    }
}

/// Change of basis data between `B` and `E`.
#[derive(Debug, Clone)]
pub struct BivectorBasisInfo {
    /// Columns are the `E` vectors written in `B`.
    pub p: Mat,
    pub p_inv: Mat,
    /// Gram matrix of the wedge form in `B`.
    pub gram_b: Mat,
}

pub fn basis_info() -> &'static BivectorBasisInfo {
    static INFO: OnceLock<BivectorBasisInfo> = OnceLock::new();
    INFO.get_or_init(|| {
        let z = GaussRat::zero;
        let one = GaussRat::one;
        let half = || GaussRat::from_rational(q(1, 2));
        let i = GaussRat::i;
        let ihalf = || GaussRat::new(q(0, 1), q(1, 2));
        // e42 = -e24 and e23 is already ordered.
        let eps: [Vector; 6] = [
            vec![one(), z(), z(), z(), z(), half()],
            vec![i(), z(), z(), z(), z(), -ihalf()],
            vec![z(), one(), z(), z(), -half(), z()],
            vec![z(), i(), z(), z(), ihalf(), z()],
            vec![z(), z(), one(), half(), z(), z()],
            vec![z(), z(), i(), -ihalf(), z(), z()],
        ];
        let p = Mat::from_columns(&eps).expect("six columns");
        let p_inv = p.inverse().expect("E is a basis");
        let gram_b = Mat::from_fn(6, 6, |a, b| {
            let mut x = vec![GaussRat::zero(); 6];
            let mut y = vec![GaussRat::zero(); 6];
            x[a] = GaussRat::one();
            y[b] = GaussRat::one();
            wedge_form_b(&x, &y)
        });
        let gram_e = p.transpose().mul(&gram_b).unwrap().mul(&p).unwrap();
        assert!(gram_e.is_identity(), "E must be orthonormal for the wedge form");
        BivectorBasisInfo { p, p_inv, gram_b }
    })
}

fn wedge_form_b(x: &[GaussRat], y: &[GaussRat]) -> GaussRat {
    let t = |a: usize, b: usize| &x[a] * &y[b];
    &(&(&t(0, 5) + &t(5, 0)) - &(&t(1, 4) + &t(4, 1))) + &(&t(2, 3) + &t(3, 2))
}

/// `b(x, y)`: the coefficient of `x∧y` on `e1∧e2∧e3∧e4`.
pub fn wedge_form(x: &Bivector, y: &Bivector) -> GaussRat {
    match (x.basis, y.basis) {
        // E is orthonormal.
        (Basis::E, Basis::E) => x
            .coords
            .iter()
            .zip(&y.coords)
            .fold(GaussRat::zero(), |acc, (a, b)| &acc + &(a * b)),
        _ => wedge_form_b(&x.to_b().coords, &y.to_b().coords),
    }
}

/// `v ∧ w` in basis `B`.
pub fn wedge(v: &[GaussRat], w: &[GaussRat]) -> Bivector {
    Bivector::in_b(
        PAIRS
            .iter()
            .map(|&(i, j)| &(&v[i] * &w[j]) - &(&v[j] * &w[i]))
            .collect(),
    )
}

/// Second compound matrix: the matrix of `g∧g` in basis `B`.
pub fn compound2(g: &Mat) -> Mat {
    assert!(g.rows() == 4 && g.cols() == 4, "compound2 expects a 4x4 matrix");
    Mat::from_fn(6, 6, |r, c| {
        let (i, j) = PAIRS[r];
        let (k, l) = PAIRS[c];
        &(&g[(i, k)] * &g[(j, l)]) - &(&g[(i, l)] * &g[(j, k)])
    })
}

/// The matrix of `g∧g` in the orthonormal basis `E`.
pub fn lambda2(g: &Mat) -> Mat {
    let info = basis_info();
    info.p_inv
        .mul(&compound2(g))
        .and_then(|m| m.mul(&info.p))
        .expect("6x6 products")
}

pub fn is_decomposable(x: &Bivector) -> bool {
    wedge_form(x, x).is_zero()
}

/// Writes a nonzero decomposable bivector as `v ∧ w`. The factors span the
/// column space of the antisymmetric coordinate matrix.
pub fn factor_decomposable(x: &Bivector) -> Result<(Vector, Vector), ExtsqError> {
    let xb = x.to_b();
    if xb.is_zero() {
        return Err(ExtsqError::ZeroBivector);
    }
    if !is_decomposable(&xb) {
        return Err(ExtsqError::NotDecomposable);
    }
    // A is antisymmetric, so its row space is its column space.
    let (r, pivots) = xb.antisymmetric_matrix().rref()?;
    if pivots.len() != 2 {
        return Err(ExtsqError::NotDecomposable);
    }
    let v = r.row(0);
    let w = r.row(1);
    let vw = wedge(&v, &w);
    let k = xb.coords.iter().position(|c| !c.is_zero()).expect("nonzero");
    let c = vw.coords[k].checked_div(&xb.coords[k]).map_err(MatError::from)?;
    let w = {
        let cinv = c.inv().map_err(MatError::from)?;
        w.iter().map(|t| t * &cinv).collect::<Vector>()
    };
    if wedge(&v, &w) != xb {
        return Err(ExtsqError::NotDecomposable);
    }
    Ok((v, w))
}

/// Flips the sign of `g` so that its first nonzero entry (row-major) is
/// lexicographically positive in `(re, im)`.
pub fn canonical_sign(g: Mat) -> Mat {
    match g.entries().iter().find(|x| !x.is_zero()) {
        Some(lead) if !lead.is_lex_positive() => g.neg(),
        _ => g,
    }
}

/// Inverts the exterior square up to sign: returns `g` with `lambda2(g) = l`.
///
/// The column `g·e1` spans the common line of the planes underlying
/// `l(e1∧ej)`, `j = 2, 3, 4`. Solving `v1∧vj = l(e1∧ej)` fixes `g·ej` up to a
/// multiple of `v1` and an overall scale; both are read off from
/// `l⁻¹(vj∧vk)`, which must equal `c·ej∧ek − αk·e1∧ej + αj·e1∧ek`.
pub fn spin_lift(l: &Mat) -> Result<Mat, ExtsqError> {
    if l.rows() != 6 || l.cols() != 6 {
        return Err(ExtsqError::Shape("6x6"));
    }
    let info = basis_info();
    let lb = info.p.mul(l)?.mul(&info.p_inv)?;
    let lb_inv = lb.inverse().map_err(|_| ExtsqError::NotInImage("singular".into()))?;
    let not_in_image = |why: &str| ExtsqError::NotInImage(why.to_string());

    // Planes P_j and their annihilators.
    let mut targets = Vec::with_capacity(3);
    let mut planes = Vec::with_capacity(3);
    let mut annihilators = Vec::with_capacity(6);
    for j in 1..4 {
        let x = Bivector::in_b(lb.column(pair_index(0, j)));
        let (a, b) = factor_decomposable(&x).map_err(|_| not_in_image("image of e1∧ej is not decomposable"))?;
        let rows = Mat::from_rows(vec![a.clone(), b.clone()])?;
        annihilators.extend(rows.kernel_basis()?);
        targets.push(x);
        planes.push((a, b));
    }
    let common = Mat::from_rows(annihilators)?.kernel_basis()?;
    if common.len() != 1 {
        return Err(not_in_image("planes do not meet in a line"));
    }
    let v0 = common.into_iter().next().expect("one vector");

    let mut vs = Vec::with_capacity(3);
    for ((a, b), x) in planes.iter().zip(&targets) {
        let sys = Mat::from_columns(&[wedge(&v0, a).coords, wedge(&v0, b).coords])?;
        let coef = sys
            .solve(&x.coords)?
            .ok_or_else(|| not_in_image("no factor through the common line"))?;
        let v: Vector = a
            .iter()
            .zip(b)
            .map(|(ai, bi)| &(&coef[0] * ai) + &(&coef[1] * bi))
            .collect();
        vs.push(v);
    }

    // Read c and the shifts alpha_j from l⁻¹(v_j ∧ v_k); vs[t] stands for e_{t+1}.
    let mut c: Option<GaussRat> = None;
    let mut alpha: [Option<GaussRat>; 3] = [None, None, None];
    for (j, k) in [(1usize, 2usize), (1, 3), (2, 3)] {
        let y = lb_inv.mul_vec(&wedge(&vs[j - 1], &vs[k - 1]).coords)?;
        let (jk, zj, zk) = (pair_index(j, k), pair_index(0, j), pair_index(0, k));
        for (idx, coord) in y.iter().enumerate() {
            if idx != jk && idx != zj && idx != zk && !coord.is_zero() {
                return Err(not_in_image("unexpected component in rescaling"));
            }
        }
        agree(&mut c, y[jk].clone())?;
        agree(&mut alpha[j - 1], y[zk].clone())?;
        agree(&mut alpha[k - 1], -&y[zj])?;
    }
    let c = c.expect("set above");
    if c.is_zero() {
        return Err(not_in_image("zero rescaling"));
    }
    let kappa_sq = c.inv().map_err(MatError::from)?;
    let kappa = kappa_sq
        .sqrt()
        .ok_or_else(|| ExtsqError::SqrtNotInField(kappa_sq.canonical()))?;
    let kappa_inv = kappa.inv().map_err(MatError::from)?;

    let mut cols = Vec::with_capacity(4);
    cols.push(v0.iter().map(|x| x * &kappa_inv).collect::<Vector>());
    for (t, v) in vs.iter().enumerate() {
        let a = alpha[t].as_ref().expect("every alpha is constrained");
        cols.push(v.iter().zip(&v0).map(|(vi, v0i)| &kappa * &(vi - &(a * v0i))).collect());
    }
    let g = canonical_sign(Mat::from_columns(&cols)?);
    if lambda2(&g) != *l {
        return Err(not_in_image("lift does not reproduce the matrix"));
    }
    Ok(g)
}

fn agree(slot: &mut Option<GaussRat>, val: GaussRat) -> Result<(), ExtsqError> {
    match slot {
        Some(prev) if *prev != val => Err(ExtsqError::NotInImage("inconsistent rescaling".into())),
        Some(_) => Ok(()),
        None => {
            *slot = Some(val);
            Ok(())
        }
    }
}

fn check_alternating(psi_star: &Mat) -> Result<(), ExtsqError> {
    if psi_star.rows() != 4 || psi_star.cols() != 4 {
        return Err(ExtsqError::Shape("4x4"));
    }
    if psi_star.transpose() != psi_star.neg() || psi_star.det()?.is_zero() {
        return Err(ExtsqError::DegenerateForm);
    }
    Ok(())
}

/// The bivector `ψ` with `b(ψ, y) = ψ*(y)` for all `y`, where the alternating
/// form `ψ*(x, y) = xᵀ·Ω·y` is read as a linear form on bivectors.
pub fn symplectic_dual(psi_star: &Mat) -> Result<Bivector, ExtsqError> {
    check_alternating(psi_star)?;
    let omega: Vector = PAIRS.iter().map(|&(i, j)| psi_star[(i, j)].clone()).collect();
    let psi = basis_info().gram_b.solve(&omega)?.ok_or(ExtsqError::DegenerateForm)?;
    Ok(Bivector::in_b(psi))
}

/// For `g` preserving `Ω`, checks that `g∧g` fixes `ψ` and maps `ψ⊥` into itself.
pub fn check_sp_stabilizes(g: &Mat, psi_star: &Mat) -> Result<bool, ExtsqError> {
    check_alternating(psi_star)?;
    if g.transpose().mul(psi_star)?.mul(g)? != *psi_star {
        return Err(ExtsqError::NotSymplectic);
    }
    let psi = symplectic_dual(psi_star)?.to_e();
    let l = lambda2(g);
    if l.mul_vec(&psi.coords)? != psi.coords {
        return Ok(false);
    }
    let perp = Mat::from_rows(vec![psi.coords.clone()])?.kernel_basis()?;
    for y in perp {
        let image = Bivector::in_e(l.mul_vec(&y)?);
        if !wedge_form(&psi, &image).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The symplectic transvection `x ↦ x + ψ*(x, u)·u`.
pub fn transvection(psi_star: &Mat, u: &[GaussRat]) -> Result<Mat, ExtsqError> {
    let omega_u = psi_star.mul_vec(u)?;
    Ok(Mat::from_fn(4, 4, |i, j| {
        let d = if i == j { GaussRat::one() } else { GaussRat::zero() };
        &d + &(&u[i] * &omega_u[j])
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn g(re: i64, im: i64) -> GaussRat {
        GaussRat::from_ints(re, im)
    }

    /// Sign of the permutation sorting `idx`, or 0 on a repeat.
    fn perm_sign(idx: [usize; 4]) -> i64 {
        let mut s = 1;
        for a in 0..4 {
            for b in a + 1..4 {
                if idx[a] == idx[b] {
                    return 0;
                }
                if idx[a] > idx[b] {
                    s = -s;
                }
            }
        }
        s
    }

    /// Wedge form computed by expanding `x∧y` over all basis 4-tuples.
    fn wedge_form_brute(x: &[GaussRat], y: &[GaussRat]) -> GaussRat {
        let mut acc = GaussRat::zero();
        for (a, &(i, j)) in PAIRS.iter().enumerate() {
            for (b, &(k, l)) in PAIRS.iter().enumerate() {
                let s = perm_sign([i, j, k, l]);
                if s != 0 {
                    acc = &acc + &(&(&x[a] * &y[b]) * &g(s, 0));
                }
            }
        }
        acc
    }

    fn random_gauss(rng: &mut ChaCha8Rng) -> GaussRat {
        gq((rng.gen_range(-3..4), rng.gen_range(1..3)), (rng.gen_range(-3..4), 1))
    }

    fn random_invertible(rng: &mut ChaCha8Rng) -> Mat {
        loop {
            let m = Mat::from_fn(4, 4, |_, _| random_gauss(rng));
            if !m.det().unwrap().is_zero() {
                return m;
            }
        }
    }

    #[test]
    fn wedge_form_examples() {
        let e12 = Bivector::basis_wedge(0, 1);
        let e34 = Bivector::basis_wedge(2, 3);
        let e13 = Bivector::basis_wedge(0, 2);
        assert_eq!(wedge_form(&e12, &e34), GaussRat::one());
        assert_eq!(wedge_form(&e12, &e13), GaussRat::zero());
        for a in 0..6 {
            for b in 0..6 {
                let (mut x, mut y) = (vec![GaussRat::zero(); 6], vec![GaussRat::zero(); 6]);
                x[a] = GaussRat::one();
                y[b] = GaussRat::one();
                assert_eq!(basis_info().gram_b[(a, b)], wedge_form_brute(&x, &y));
            }
        }
    }

    #[test]
    fn orthonormal_gram_from_brute_force() {
        let p = &basis_info().p;
        for a in 0..6 {
            for b in 0..6 {
                let expect = if a == b { GaussRat::one() } else { GaussRat::zero() };
                assert_eq!(wedge_form_brute(&p.column(a), &p.column(b)), expect);
            }
        }
    }

    #[test]
    fn lambda2_examples() {
        assert!(lambda2(&Mat::identity(4)).is_identity());
        assert_eq!(lambda2(&Mat::scalar(4, GaussRat::i())), Mat::scalar(6, g(-1, 0)));
        let d = [g(2, 0), g(3, 0), g(0, 1), g(5, -1)];
        let expected: Vec<GaussRat> = PAIRS.iter().map(|&(i, j)| &d[i] * &d[j]).collect();
        assert_eq!(compound2(&Mat::diag(&d)), Mat::diag(&expected));
    }

    #[test]
    fn decomposability_examples() {
        let x = Bivector::basis_wedge(0, 1).add(&Bivector::basis_wedge(2, 3));
        assert!(!is_decomposable(&x));
        assert_eq!(factor_decomposable(&x), Err(ExtsqError::NotDecomposable));
        assert_eq!(
            factor_decomposable(&Bivector::in_b(vec![GaussRat::zero(); 6])),
            Err(ExtsqError::ZeroBivector)
        );
        let y = Bivector::basis_wedge(0, 1).add(&Bivector::basis_wedge(0, 2));
        let (v, w) = factor_decomposable(&y).unwrap();
        assert_eq!(v, vec![g(1, 0), g(0, 0), g(0, 0), g(0, 0)]);
        assert_eq!(w, vec![g(0, 0), g(1, 0), g(1, 0), g(0, 0)]);
    }

    #[test]
    fn factor_round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let v: Vector = (0..4).map(|_| random_gauss(&mut rng)).collect();
            let w: Vector = (0..4).map(|_| random_gauss(&mut rng)).collect();
            let x = wedge(&v, &w);
            if x.is_zero() {
                continue;
            }
            let (a, b) = factor_decomposable(&x).unwrap();
            assert_eq!(wedge(&a, &b), x);
            // Same plane: v and w lie in span(a, b).
            let m = Mat::from_columns(&[a, b, v.clone(), w.clone()]).unwrap();
            assert_eq!(m.rank().unwrap(), 2);
        }
    }

    #[test]
    fn lambda2_laws_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let a = random_invertible(&mut rng);
            let b = random_invertible(&mut rng);
            let la = lambda2(&a);
            assert_eq!(lambda2(&a.mul(&b).unwrap()), la.mul(&lambda2(&b)).unwrap());
            let det = a.det().unwrap();
            assert_eq!(la.det().unwrap(), &(&det * &det) * &det);
            let x = Bivector::in_e((0..6).map(|_| random_gauss(&mut rng)).collect());
            let y = Bivector::in_e((0..6).map(|_| random_gauss(&mut rng)).collect());
            let lx = Bivector::in_e(la.mul_vec(&x.coords).unwrap());
            let ly = Bivector::in_e(la.mul_vec(&y.coords).unwrap());
            assert_eq!(wedge_form(&lx, &ly), &det * &wedge_form(&x, &y));
        }
    }

    #[test]
    fn spin_lift_round_trip_random() {
        assert!(spin_lift(&Mat::identity(6)).unwrap().is_identity());
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..60 {
            let a = random_invertible(&mut rng);
            let lifted = spin_lift(&lambda2(&a)).unwrap();
            assert!(lifted == a || lifted == a.neg());
            assert_eq!(lifted, canonical_sign(a));
        }
    }

    #[test]
    fn spin_lift_rejects_non_images() {
        // diag(-1,1,1,1,1,1) is orthogonal with determinant -1: not a g∧g.
        let mut d = vec![g(1, 0); 6];
        d[0] = g(-1, 0);
        assert!(matches!(spin_lift(&Mat::diag(&d)), Err(ExtsqError::NotInImage(_))));
        // i·Id6 = lambda2(ζ8·Id4) needs an eighth root of unity.
        assert!(matches!(
            spin_lift(&Mat::scalar(6, GaussRat::i())),
            Err(ExtsqError::SqrtNotInField(_))
        ));
        assert!(matches!(spin_lift(&Mat::identity(4)), Err(ExtsqError::Shape(_))));
    }

    fn standard_form() -> Mat {
        Mat::from_int_rows(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[-1, 0, 0, 0], &[0, -1, 0, 0]])
    }

    #[test]
    fn symplectic_dual_pairs_correctly() {
        let omega = Mat::from_int_rows(&[&[0, 1, 2, -1], &[-1, 0, 3, 1], &[-2, -3, 0, 2], &[1, -1, -2, 0]]);
        let psi = symplectic_dual(&omega).unwrap();
        for &(i, j) in &PAIRS {
            assert_eq!(wedge_form(&psi, &Bivector::basis_wedge(i, j)), omega[(i, j)]);
        }
        assert_eq!(symplectic_dual(&Mat::zeros(4, 4)), Err(ExtsqError::DegenerateForm));
    }

    #[test]
    fn symplectic_group_stabilizes_dual() {
        let omega = standard_form();
        assert!(check_sp_stabilizes(&Mat::identity(4), &omega).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut prod = Mat::identity(4);
        for _ in 0..10 {
            let u: Vector = (0..4).map(|_| random_gauss(&mut rng)).collect();
            let t = transvection(&omega, &u).unwrap();
            assert!(check_sp_stabilizes(&t, &omega).unwrap());
            prod = prod.mul(&t).unwrap();
        }
        assert!(check_sp_stabilizes(&prod, &omega).unwrap());
        let not_sp = Mat::diag(&[g(2, 0), g(1, 0), g(1, 0), g(1, 0)]);
        assert_eq!(check_sp_stabilizes(&not_sp, &omega), Err(ExtsqError::NotSymplectic));
    }

    #[test]
    fn bivector_json_is_tagged() {
        let x = Bivector::basis_wedge(0, 1);
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.contains(r#""basis":"B""#));
        assert_eq!(serde_json::from_str::<Bivector>(&s).unwrap(), x);
    }
}
