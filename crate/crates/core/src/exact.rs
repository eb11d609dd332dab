//! Exact arithmetic in ℚ and the Gaussian rationals ℚ(i).
//!
//! [`Rational`] keeps values that fit in a pair of `i64` inline and falls back to
//! arbitrary precision only when an intermediate result overflows. Both
//! representations are canonical, so derived equality and hashing are value-based.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse exact value from {0:?}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, `den > 0`.
    Small { num: i64, den: i64 },
    /// Reduced and never representable as `Small`.
    Big(Box<BigRational>),
}

/// An exact rational number with reduced numerator and positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct Rational(Repr);

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                state.write_i64(*num);
                state.write_i64(*den);
            }
            Repr::Big(b) => b.hash(state),
        }
    }
}

fn reduce_i128(num: i128, den: i128) -> Rational {
    debug_assert!(den != 0);
    let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
    let g = num.gcd(&den);
    if g > 1 {
        num /= g;
        den /= g;
    }
    match (i64::try_from(num), i64::try_from(den)) {
        (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
        _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
            BigInt::from(num),
            BigInt::from(den),
        )))),
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small { num: n, den: 1 })
    }

    /// `num/den`, reduced. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, ExactError> {
        if den == 0 {
            return Err(ExactError::DivisionByZero);
        }
        Ok(reduce_i128(num as i128, den as i128))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational::new already reduced and normalised the sign.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        match &self.0 {
            Repr::Small { num: 0, .. } => Err(ExactError::DivisionByZero),
            Repr::Small { num, den } => Ok(reduce_i128(*den as i128, *num as i128)),
            Repr::Big(b) => Ok(Self::from_big(b.recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact non-negative square root, if `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        let (num, den) = (self.numer(), self.denom());
        let (rn, rd) = (num.sqrt(), den.sqrt());
        if &rn * &rn == num && &rd * &rd == den {
            Some(Self::from_big(BigRational::new_raw(rn, rd)))
        } else {
            None
        }
    }
}

macro_rules! small_or_big {
    ($a:expr, $b:expr, |$an:ident, $ad:ident, $bn:ident, $bd:ident| $small:expr, |$x:ident, $y:ident| $big:expr) => {
        match (&$a.0, &$b.0) {
            (Repr::Small { num: $an, den: $ad }, Repr::Small { num: $bn, den: $bd }) => {
                let ($an, $ad, $bn, $bd) = (*$an as i128, *$ad as i128, *$bn as i128, *$bd as i128);
                match $small {
                    Some(r) => r,
                    None => {
                        let ($x, $y) = ($a.to_big(), $b.to_big());
                        Rational::from_big($big)
                    }
                }
            }
            _ => {
                let ($x, $y) = ($a.to_big(), $b.to_big());
                Rational::from_big($big)
            }
        }
    };
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        small_or_big!(
            self,
            rhs,
            |an, ad, bn, bd| {
                if ad == bd {
                    Some(reduce_i128(an + bn, ad))
                } else {
                    (an * bd).checked_add(bn * ad).map(|n| reduce_i128(n, ad * bd))
                }
            },
            |x, y| x + y
        )
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.is_zero() || rhs.is_zero() {
            return Rational::zero();
        }
        small_or_big!(
            self,
            rhs,
            |an, ad, bn, bd| Some(reduce_i128(an * bn, ad * bd)),
            |x, y| x * y
        )
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Rational::from_big(-self.to_big()),
            },
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t { (&self).$m(rhs) }
        }
    )*
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t { -&self }
        }
    };
}

forward_owned!(Rational, Add add, Sub sub, Mul mul);

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
                (*an as i128 * *bd as i128).cmp(&(*bn as i128 * *ad as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    /// Always `num/den`, e.g. `-3/1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRat {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(Rational::one(), Rational::zero())
    }

    pub fn i() -> Self {
        GaussRat::new(Rational::zero(), Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        GaussRat::new(Rational::from_integer(n), Rational::zero())
    }

    /// `re + im·i` from small integers.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRat::new(Rational::from_integer(re), Rational::from_integer(im))
    }

    pub fn from_rational(r: Rational) -> Self {
        GaussRat::new(r, Rational::zero())
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::from_ints(1, 0),
            1 => GaussRat::from_ints(0, 1),
            2 => GaussRat::from_ints(-1, 0),
            _ => GaussRat::from_ints(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// `|z|² = re² + im²`.
    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.im.is_zero() {
            return Ok(GaussRat::from_rational(self.re.inv()?));
        }
        let n = self.norm().inv()?;
        Ok(GaussRat::new(&self.re * &n, -(&self.im * &n)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }

    /// Lexicographic comparison on `(re, im)`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }

    /// True when `(re, im)` is lexicographically greater than `(0, 0)`.
    pub fn is_lex_positive(&self) -> bool {
        self.lex_cmp(&GaussRat::zero()) == Ordering::Greater
    }

    /// A square root in ℚ(i), if one exists. Of the two roots `±λ` the one with
    /// lexicographically maximal `(re, im)` is returned.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        // x² - y² = re, 2xy = im, x² + y² = |z|.
        let modulus = self.norm().sqrt()?;
        let half = Rational::new(1, 2).expect("nonzero");
        let x2 = &(&modulus + &self.re) * &half;
        let y2 = &(&modulus - &self.re) * &half;
        let x = x2.sqrt()?;
        let mut y = y2.sqrt()?;
        if self.im.signum() < 0 {
            y = -y;
        }
        let root = GaussRat::new(x, y);
        if &root * &root != *self {
            return None;
        }
        let other = -&root;
        Some(if root.lex_cmp(&other) == Ordering::Less {
            other
        } else {
            root
        })
    }

    /// Canonical string `re_num/re_den+im_num/im_den*i`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Exact square root in ℚ, `None` when `r` is not a rational square.
pub fn sqrt_rational(r: &Rational) -> Option<Rational> {
    r.sqrt()
}

/// Exact square root in ℚ(i), lexicographically maximal of the two roots.
pub fn sqrt_gaussian(z: &GaussRat) -> Option<GaussRat> {
    z.sqrt()
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussRat::from_rational(&self.re * &rhs.re),
            (true, false) => GaussRat::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => GaussRat::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => GaussRat::new(
                &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
                &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
            ),
        }
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

forward_owned!(GaussRat, Add add, Sub sub, Mul mul);

impl From<Rational> for GaussRat {
    fn from(r: Rational) -> Self {
        GaussRat::from_rational(r)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::from_integer(n)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}*i", self.re, self.im)
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{:?}", self.re),
            (true, false) => write!(f, "{:?}i", self.im),
            (false, false) => write!(
                f,
                "({:?}{}{:?}i)",
                self.re,
                if self.im.signum() < 0 { "" } else { "+" },
                self.im
            ),
        }
    }
}

impl FromStr for GaussRat {
    type Err = ExactError;
    /// Parses the canonical form only.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let body = s.strip_suffix("*i").ok_or_else(bad)?;
        // The separator is the first '+' after position 0 (the real part may start with '-').
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+')
            .map(|(idx, _)| idx)
            .ok_or_else(bad)?;
        let re: Rational = body[..split].parse().map_err(|_| bad())?;
        let im: Rational = body[split + 1..].parse().map_err(|_| bad())?;
        Ok(GaussRat::new(re, im))
    }
}

impl Serialize for GaussRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical())
    }
}

impl<'de> Deserialize<'de> for GaussRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literal rationals; panics on a zero denominator.
#[doc(hidden)]
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

#[doc(hidden)]
pub fn gq(re: (i64, i64), im: (i64, i64)) -> GaussRat {
    GaussRat::new(q(re.0, re.1), q(im.0, im.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn field_examples() {
        let a = GaussRat::from_ints(1, 1);
        let b = GaussRat::from_ints(1, -1);
        assert_eq!(&a * &b, GaussRat::from_integer(2));
        assert_eq!(GaussRat::i().inv().unwrap(), GaussRat::from_ints(0, -1));
        assert_eq!(GaussRat::from_ints(0, 2).conj(), GaussRat::from_ints(0, -2));
        assert_eq!(GaussRat::zero().inv(), Err(ExactError::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(ExactError::DivisionByZero));
        assert_eq!(
            GaussRat::one().checked_div(&GaussRat::zero()),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn rational_sqrt_examples() {
        assert_eq!(sqrt_rational(&q(1, 4)), Some(q(1, 2)));
        assert_eq!(sqrt_rational(&q(2, 1)), None);
        assert_eq!(sqrt_rational(&q(9, 16)), Some(q(3, 4)));
        assert_eq!(sqrt_rational(&q(-1, 1)), None);
        assert_eq!(sqrt_rational(&q(0, 1)), Some(q(0, 1)));
    }

    #[test]
    fn gaussian_sqrt_examples() {
        assert_eq!(sqrt_gaussian(&GaussRat::from_integer(-1)), Some(GaussRat::i()));
        assert_eq!(
            sqrt_gaussian(&GaussRat::from_ints(0, 2)),
            Some(GaussRat::from_ints(1, 1))
        );
        assert_eq!(sqrt_gaussian(&GaussRat::i()), None);
        assert_eq!(sqrt_gaussian(&GaussRat::from_integer(2)), None);
        // (3 - 4i)/25 = ((2 - i)/5)², canonical root has positive real part.
        assert_eq!(sqrt_gaussian(&gq((3, 25), (-4, 25))), Some(gq((2, 5), (-1, 5))));
    }

    #[test]
    fn overflow_falls_back_to_big_and_back() {
        let m = Rational::from_integer(i64::MAX);
        let sq = &m * &m;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = sq.checked_div(&m).unwrap();
        assert_eq!(back, m);
        assert!(matches!(back.0, Repr::Small { .. }));
        let min = Rational::from_integer(i64::MIN);
        assert_eq!((-&min).numer(), -BigInt::from(i64::MIN));
        assert_eq!(-(-&min), min);
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(GaussRat::i().canonical(), "0/1+1/1*i");
        assert_eq!(gq((-1, 2), (-3, 1)).canonical(), "-1/2+-3/1*i");
        assert_eq!("-1/2+-3/1*i".parse::<GaussRat>().unwrap(), gq((-1, 2), (-3, 1)));
        assert!("1/2".parse::<GaussRat>().is_err());
        assert!("1/0+0/1*i".parse::<GaussRat>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        prop_oneof![
            (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d)),
            (any::<i64>(), 1i64..i64::MAX).prop_map(|(n, d)| q(n, d)),
        ]
    }

    fn arb_gauss() -> impl Strategy<Value = GaussRat> {
        (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussRat::new(re, im))
    }

    proptest! {
        #[test]
        fn sqrt_of_square_is_plus_minus(z in arb_gauss()) {
            let r = sqrt_gaussian(&(&z * &z)).expect("square has a root");
            prop_assert!(r == z || r == -&z);
        }

        #[test]
        fn conj_is_multiplicative(a in arb_gauss(), b in arb_gauss()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }

        #[test]
        fn canonical_round_trip(z in arb_gauss()) {
            prop_assert_eq!(z.canonical().parse::<GaussRat>().unwrap(), z);
        }

        #[test]
        fn small_path_agrees_with_bigrational(a in arb_rational(), b in arb_rational()) {
            let (x, y) = (a.to_big(), b.to_big());
            prop_assert_eq!((&a + &b).to_big(), &x + &y);
            prop_assert_eq!((&a - &b).to_big(), &x - &y);
            prop_assert_eq!((&a * &b).to_big(), &x * &y);
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap().to_big(), &x / &y);
            }
        }

        #[test]
        fn division_inverts_multiplication(a in arb_gauss(), b in arb_gauss()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        }
    }
}
