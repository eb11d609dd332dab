//! `G31 = Λ⁻¹(𝒲6′)`: construction from the signed-permutation groups on the
//! exterior square, its reflections, and the shared context for the checks.

pub mod verify;

use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::GaussRat;
use crate::extsq::{lambda2, spin_lift, ExtsqError};
use crate::grpengine::{GroupError, GroupTable, OrbitAction};
use crate::linalg::{Mat, MatError};
use crate::outer_s6::tau_inverse;
use crate::sgnperm::{mu0, GroupName, Perm6, ScaledSignedPerm};

pub use crate::sgnperm::{mu0_matrix, rho, rho_matrix, t0};

pub const G31_ORDER: usize = 46080;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum G31Error {
    #[error(transparent)]
    Extsq(#[from] ExtsqError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Mat(#[from] MatError),
    #[error("no lift of ±i·{0} has trace 2")]
    NoReflection(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

/// The lift of `iμ` or `-iμ` with trace 2: a reflection of order 2.
pub fn reflection_lift(mu: &ScaledSignedPerm) -> Result<Mat, G31Error> {
    let m = mu.to_matrix();
    let two = GaussRat::from_integer(2);
    for sign in [1, -1] {
        let l = m.scalar_mul(&GaussRat::from_ints(0, sign));
        let g = spin_lift(&l)?;
        for cand in [g.neg(), g] {
            if cand.trace() == two {
                return Ok(cand);
            }
        }
    }
    Err(G31Error::NoReflection(mu.to_string()))
}

/// `rank(g - Id) = 1`.
pub fn is_reflection(g: &Mat) -> bool {
    let n = g.rows();
    g.sub(&Mat::identity(n))
        .and_then(|d| d.rank())
        .map(|r| r == 1)
        .unwrap_or(false)
}

/// `s_j = (j, j+1)` and `w_j = (1, j)(2, j+1)` for `j = 1..5`.
pub fn s_and_w(j: u8) -> (Perm6, Perm6) {
    let s = Perm6::transposition(j, j + 1);
    let w = if j == 1 {
        Perm6::identity()
    } else {
        Perm6::transposition(1, j).compose(&Perm6::transposition(2, j + 1))
    };
    (s, w)
}

/// The five elements `μ_j = τ⁻¹(w_j)·μ0·τ⁻¹(w_j)⁻¹` of `M` and their reflections.
#[derive(Debug, Clone)]
pub struct FiveGenerators {
    pub mus: Vec<ScaledSignedPerm>,
    /// Whether the conjugate landed in `-M` and was negated back into `M`.
    pub negated: Vec<bool>,
    pub lifts: Vec<Mat>,
}

/// Lazily built groups and tables shared by all checks.
#[derive(Default)]
pub struct G31Context {
    ssp: [OnceLock<GroupTable<ScaledSignedPerm>>; 10],
    class_m: OnceLock<Vec<ScaledSignedPerm>>,
    reflections: OnceLock<Result<Vec<Mat>, G31Error>>,
    g31: OnceLock<Result<GroupTable<Mat>, G31Error>>,
    lambda: OnceLock<Result<Vec<ScaledSignedPerm>, G31Error>>,
    derived: OnceLock<Result<GroupTable<Mat>, G31Error>>,
    o2: OnceLock<Result<GroupTable<Mat>, G31Error>>,
    normal_2: OnceLock<Result<Vec<GroupTable<Mat>>, G31Error>>,
    five: OnceLock<Result<FiveGenerators, G31Error>>,
    roots: OnceLock<Result<OrbitAction, G31Error>>,
}

fn cached<T>(cell: &OnceLock<Result<T, G31Error>>, f: impl FnOnce() -> Result<T, G31Error>) -> Result<&T, G31Error> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl G31Context {
    pub fn new() -> Self {
        Self::default()
    }

    /// A named signed-permutation group, enumerated.
    pub fn group(&self, name: GroupName) -> &GroupTable<ScaledSignedPerm> {
        let slot = GroupName::ALL.iter().position(|g| *g == name).expect("listed");
        self.ssp[slot]
            .get_or_init(|| GroupTable::closure(&name.generators(), 2 * G31_ORDER).expect("named generators close"))
    }

    /// The class `M` of `μ0` in `W6plus`, in table order.
    pub fn class_m(&self) -> &[ScaledSignedPerm] {
        self.class_m.get_or_init(|| {
            let w = self.group(GroupName::W6plus);
            w.class_of(&mu0())
                .expect("mu0 lies in W6plus")
                .into_iter()
                .map(|i| *w.element(i))
                .collect()
        })
    }

    /// `M̃`, aligned with [`G31Context::class_m`].
    pub fn reflections(&self) -> Result<&[Mat], G31Error> {
        cached(&self.reflections, || {
            self.class_m().iter().map(reflection_lift).collect()
        })
        .map(Vec::as_slice)
    }

    /// Closure of lifts of the `cW6prime` generators together with `i·Id`.
    pub fn g31(&self) -> Result<&GroupTable<Mat>, G31Error> {
        cached(&self.g31, || {
            let mut gens = GroupName::CW6prime
                .generators()
                .iter()
                .map(|w| spin_lift(&w.to_matrix()))
                .collect::<Result<Vec<_>, _>>()?;
            gens.push(Mat::scalar(4, GaussRat::i()));
            Ok(GroupTable::closure(&gens, G31_ORDER)?)
        })
    }

    /// `Λ(g)` for each element of `G31`, by index.
    pub fn lambda_images(&self) -> Result<&[ScaledSignedPerm], G31Error> {
        cached(&self.lambda, || {
            self.g31()?
                .elements()
                .iter()
                .map(|g| {
                    ScaledSignedPerm::from_matrix(&lambda2(g))
                        .map_err(|e| G31Error::Construction(format!("image is not monomial: {e}")))
                })
                .collect()
        })
        .map(Vec::as_slice)
    }

    /// `π(Λ(g))` for element `i` of `G31`.
    pub fn pi_lambda(&self, i: usize) -> Result<Perm6, G31Error> {
        Ok(self.lambda_images()?[i].pi())
    }

    pub fn derived_g31(&self) -> Result<&GroupTable<Mat>, G31Error> {
        cached(&self.derived, || Ok(self.g31()?.derived_subgroup()))
    }

    /// `Λ⁻¹(A6prime)`.
    pub fn o2(&self) -> Result<&GroupTable<Mat>, G31Error> {
        cached(&self.o2, || {
            let g = self.g31()?;
            let idx: Vec<usize> = self
                .lambda_images()?
                .iter()
                .enumerate()
                .filter(|(_, w)| GroupName::A6prime.contains(w))
                .map(|(i, _)| i)
                .collect();
            Ok(g.subgroup(&idx)?)
        })
    }

    /// The normal 2-subgroups of `G31`, smallest first.
    pub fn normal_2_subgroups(&self) -> Result<&[GroupTable<Mat>], G31Error> {
        cached(&self.normal_2, || Ok(self.g31()?.normal_2_subgroups()?)).map(Vec::as_slice)
    }

    pub fn five_generators(&self) -> Result<&FiveGenerators, G31Error> {
        cached(&self.five, || {
            let m = self.class_m();
            let mut mus = Vec::new();
            let mut negated = Vec::new();
            for j in 1..=5 {
                let (_, w) = s_and_w(j);
                let c = ScaledSignedPerm::from_perm(tau_inverse(&w));
                let mu = c.compose(&mu0()).compose(&c.inverse());
                if m.contains(&mu) {
                    mus.push(mu);
                    negated.push(false);
                } else if m.contains(&mu.neg()) {
                    mus.push(mu.neg());
                    negated.push(true);
                } else {
                    return Err(G31Error::Construction(format!("{mu} is not in M or -M")));
                }
            }
            let lifts = mus.iter().map(reflection_lift).collect::<Result<_, _>>()?;
            Ok(FiveGenerators { mus, negated, lifts })
        })
    }

    /// `G31` acting on the orbit of the root of `μ̃0`; the action is faithful.
    pub fn root_action(&self) -> Result<&OrbitAction, G31Error> {
        cached(&self.roots, || {
            let g = self.g31()?;
            let r = reflection_lift(&mu0())?;
            let d = r.sub(&Mat::identity(4)).map_err(GroupError::from)?;
            let root = (0..4)
                .map(|j| d.column(j))
                .find(|c| c.iter().any(|x| !x.is_zero()))
                .ok_or_else(|| G31Error::Construction("reflection equals identity".into()))?;
            Ok(OrbitAction::new(g.active_generators(), root, 1 << 12)?)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Poly;

    #[test]
    fn reflection_of_mu0() {
        let r = reflection_lift(&mu0()).unwrap();
        assert_eq!(r.trace(), GaussRat::from_integer(2));
        assert!(is_reflection(&r));
        assert!(r.mul(&r).unwrap().is_identity());
        let one = GaussRat::one();
        let expected = Poly::from_roots(&[(one.clone(), 3), (-&one, 1)]);
        assert_eq!(r.charpoly().unwrap(), expected);
        // With this basis the reflection lies over -i·μ0.
        assert_eq!(lambda2(&r), mu0().to_matrix().scalar_mul(&GaussRat::from_ints(0, -1)));
    }

    #[test]
    fn s_and_w_relation() {
        let (s1, _) = s_and_w(1);
        for j in 1..=5 {
            let (s, w) = s_and_w(j);
            assert_eq!(s1.conjugate_by(&w), s);
        }
    }

    #[test]
    fn class_m_has_sixty_elements() {
        let ctx = G31Context::new();
        assert_eq!(ctx.class_m().len(), 60);
        let refl = ctx.reflections().unwrap();
        assert_eq!(refl.len(), 60);
        assert!(refl.iter().all(is_reflection));
    }
}
