//! Dense exact matrices over ℚ(i).

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{ExactError, GaussRat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("malformed matrix export: {0}")]
    Malformed(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A column vector.
pub type Vector = Vec<GaussRat>;

/// Row-major dense matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<GaussRat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, GaussRat::one())
    }

    pub fn scalar(n: usize, s: GaussRat) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn diag(d: &[GaussRat]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self, MatError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer matrix literal, mostly for constants and tests.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussRat::from_integer(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Columns given as vectors.
    pub fn from_columns(cols: &[Vector]) -> Result<Self, MatError> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(MatError::DimensionMismatch("ragged columns".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussRat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    fn check_same_shape(&self, rhs: &Mat, op: &str) -> Result<(), MatError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatError::DimensionMismatch(format!(
                "{op} of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    /// Matrix product. Zero entries are skipped, which makes products of
    /// monomial matrices cost O(n) entry multiplications.
    pub fn mul(&self, rhs: &Mat) -> Result<Mat, MatError> {
        if self.cols != rhs.rows {
            return Err(MatError::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    let slot = &mut out[(i, j)];
                    *slot = if slot.is_zero() { prod } else { &*slot + &prod };
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Result<Vector, MatError> {
        if self.cols != v.len() {
            return Err(MatError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols).fold(GaussRat::zero(), |acc, j| {
                    let a = &self[(i, j)];
                    if a.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &v[j])
                    }
                })
            })
            .collect())
    }

    pub fn add(&self, rhs: &Mat) -> Result<Mat, MatError> {
        self.check_same_shape(rhs, "sum")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &Mat) -> Result<Mat, MatError> {
        self.check_same_shape(rhs, "difference")?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> Mat {
        self.map(|x| -x)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scalar_mul(&self, s: &GaussRat) -> Mat {
        self.map(|x| s * x)
    }

    pub fn conj_entrywise(&self) -> Mat {
        self.map(GaussRat::conj)
    }

    pub fn map(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn trace(&self) -> GaussRat {
        (0..self.rows.min(self.cols)).fold(GaussRat::zero(), |acc, i| &acc + &self[(i, i)])
    }

    fn require_square(&self, what: &str) -> Result<usize, MatError> {
        if !self.is_square() {
            return Err(MatError::DimensionMismatch(format!(
                "{what} of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.rows)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<GaussRat, MatError> {
        let n = self.require_square("determinant")?;
        if n == 0 {
            return Ok(GaussRat::one());
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = GaussRat::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(GaussRat::zero()),
                }
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = num.checked_div(&prev)?;
                }
                a[(i, k)] = GaussRat::zero();
            }
            prev = pivot;
        }
        let d = a[(n - 1, n - 1)].clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// Determinant by plain Gaussian elimination with divisions; kept as an
    /// independent route for cross-checking [`Mat::det`].
    pub fn det_by_elimination(&self) -> Result<GaussRat, MatError> {
        let n = self.require_square("determinant")?;
        let mut a = self.clone();
        let mut det = GaussRat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(GaussRat::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                det = -det;
            }
            let pivot = a[(k, k)].clone();
            det = &det * &pivot;
            let pinv = pivot.inv()?;
            for i in k + 1..n {
                let f = &a[(i, k)] * &pinv;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let v = &a[(i, j)] - &(&f * &a[(k, j)]);
                    a[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(X·Id - A)` by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> Result<Poly, MatError> {
        let n = self.require_square("characteristic polynomial")?;
        let mut coeffs = vec![GaussRat::zero(); n + 1];
        coeffs[n] = GaussRat::one();
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·Id ; c_{n-k} = -tr(A·M_k)/k
            let mut next = self.mul(&m)?;
            for i in 0..n {
                next[(i, i)] = &next[(i, i)] + &coeffs[n - k + 1];
            }
            let am = self.mul(&next)?;
            let k_inv = Rational::new(1, k as i64)?;
            coeffs[n - k] = -am.trace().scale(&k_inv);
            m = next;
        }
        Ok(Poly::new(coeffs))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> Result<(Mat, Vec<usize>), MatError> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            let inv = a[(r, c)].inv()?;
            for j in c..a.cols {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
            for i in 0..a.rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..a.cols {
                    let v = &a[(i, j)] - &(&f * &a[(r, j)]);
                    a[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((a, pivots))
    }

    pub fn rank(&self) -> Result<usize, MatError> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of the null space, each vector scaled so its first nonzero
    /// coordinate is 1.
    pub fn kernel_basis(&self) -> Result<Vec<Vector>, MatError> {
        let (r, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![GaussRat::zero(); self.cols];
            v[f] = GaussRat::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, f)];
            }
            basis.push(normalize_leading(v)?);
        }
        Ok(basis)
    }

    /// Some solution of `A·x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[GaussRat]) -> Result<Option<Vector>, MatError> {
        if b.len() != self.rows {
            return Err(MatError::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref()?;
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussRat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Mat, MatError> {
        let n = self.require_square("inverse")?;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                GaussRat::one()
            } else {
                GaussRat::zero()
            }
        });
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(MatError::Singular);
        }
        Ok(Mat::from_fn(n, n, |i, j| r[(i, j + n)].clone()))
    }

    pub fn pow(&self, mut e: u64) -> Result<Mat, MatError> {
        let n = self.require_square("power")?;
        let mut base = self.clone();
        let mut acc = Mat::identity(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Least `k ≤ cap` with `A^k = Id`.
    pub fn element_order(&self, cap: u64) -> Result<Option<u64>, MatError> {
        self.require_square("element order")?;
        let mut p = self.clone();
        for k in 1..=cap {
            if p.is_identity() {
                return Ok(Some(k));
            }
            p = p.mul(self)?;
        }
        Ok(None)
    }

    /// Concatenated canonical entry strings.
    pub fn canonical_key(&self) -> String {
        let mut s = String::with_capacity(self.entries.len() * 12);
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&e.canonical());
        }
        s
    }

    pub fn to_json(&self) -> MatJson {
        MatJson {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(GaussRat::canonical).collect(),
        }
    }

    pub fn from_json(j: &MatJson) -> Result<Mat, MatError> {
        if j.entries.len() != j.rows * j.cols {
            return Err(MatError::Malformed(format!(
                "{} entries for {}x{}",
                j.entries.len(),
                j.rows,
                j.cols
            )));
        }
        let entries = j
            .entries
            .iter()
            .map(|s| s.parse::<GaussRat>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Mat {
            rows: j.rows,
            cols: j.cols,
            entries,
        })
    }
}

fn normalize_leading(v: Vector) -> Result<Vector, MatError> {
    match v.iter().find(|x| !x.is_zero()) {
        None => Ok(v),
        Some(lead) => {
            let inv = lead.inv()?;
            Ok(v.iter().map(|x| x * &inv).collect())
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:?}", self[(i, j)])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// JSON form `{ "rows": n, "cols": m, "entries": [canonical strings] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = MatJson::deserialize(deserializer)?;
        Mat::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// Polynomial over ℚ(i), coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<GaussRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn one() -> Self {
        Poly::new(vec![GaussRat::one()])
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::new(vec![]);
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    /// `∏ (X - root)^mult`.
    pub fn from_roots(roots: &[(GaussRat, usize)]) -> Poly {
        roots.iter().fold(Poly::one(), |acc, (root, mult)| {
            let lin = Poly::new(vec![-root, GaussRat::one()]);
            (0..*mult).fold(acc, |a, _| a.mul(&lin))
        })
    }

    pub fn eval(&self, x: &GaussRat) -> GaussRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c:?}"),
                1 => format!("{c:?}·X"),
                _ => format!("{c:?}·X^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
