//! Matrices with polynomial entries: Jacobians and their algebra.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    /// Row-major constructor; every entry must have `nvars` variables.
    pub fn new(rows: usize, cols: usize, nvars: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|p| p.nvars() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: bad.nvars(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            nvars,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(nvars);
        }
        m
    }

    /// Constant matrix embedded in the polynomial ring with `nvars` variables.
    pub fn from_rational(m: &RationalMatrix, nvars: usize) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols(), nvars);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.entries[i * m.cols() + j] = Polynomial::constant(nvars, m.get(i, j).clone());
            }
        }
        out
    }

    /// `diag(p_1, ..., p_n)`.
    pub fn diagonal(nvars: usize, diag: &[Polynomial]) -> Result<Self> {
        let n = diag.len();
        let mut m = Self::zeros(n, n, nvars);
        for (i, p) in diag.iter().enumerate() {
            if p.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: p.nvars(),
                });
            }
            m.entries[i * n + i] = p.clone();
        }
        Ok(m)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) -> Result<()> {
        if p.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: p.nvars(),
            });
        }
        self.entries[i * self.cols + j] = p;
        Ok(())
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_entries(|p| p.scale(c))
    }

    /// Multiplies every entry by the polynomial `p`.
    pub fn scale_poly(&self, p: &Polynomial) -> Result<Self> {
        if p.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: p.nvars(),
            });
        }
        Ok(self.map_entries(|e| e * p))
    }

    fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// `M · v` for a column vector of polynomials.
    pub fn mul_column(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(self.nvars);
                for (k, vk) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !vk.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(vk)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Exact determinant by Laplace expansion along rows, memoized on the set
    /// of columns already used. Costs `O(2^n · n)` polynomial products, which
    /// is the practical limit (n up to about 10).
    pub fn det(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(self.nvars));
        }
        assert!(n < 32, "cofactor determinant limited to n < 32");
        let full: u32 = (1u32 << n) - 1;
        // memo[mask] = det of rows popcount(mask).. over columns not in mask
        let mut memo: Vec<Option<Polynomial>> = vec![None; 1usize << n];
        memo[full as usize] = Some(Polynomial::one(self.nvars));
        // Masks with more bits come first so sub-results are ready.
        let mut masks: Vec<u32> = (0..full).collect();
        masks.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
        for mask in masks {
            let row = mask.count_ones() as usize;
            let mut acc = Polynomial::zero(self.nvars);
            let mut position = 0usize;
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if !entry.is_zero() {
                    if let Some(minor) = &memo[(mask | (1 << col)) as usize] {
                        if !minor.is_zero() {
                            let term = entry * minor;
                            acc = if position.is_multiple_of(2) {
                                &acc + &term
                            } else {
                                &acc - &term
                            };
                        }
                    }
                }
                position += 1;
            }
            memo[mask as usize] = Some(acc);
        }
        Ok(memo[0].take().expect("computed"))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        self.require_square()?;
        let mut out = Self::identity(self.rows, self.nvars);
        for _ in 0..k {
            out = out.matmul(self)?;
        }
        Ok(out)
    }

    /// Least `k` with `M^k = 0`, or `None` when `M^n != 0` (then `M` is not
    /// nilpotent, since over a domain nilpotency forces `M^n = 0`).
    pub fn nilpotency_index(&self) -> Result<Option<usize>> {
        self.require_square()?;
        let mut power = self.clone();
        for k in 1..=self.rows.max(1) {
            if power.is_zero() {
                return Ok(Some(k));
            }
            power = power.matmul(self)?;
        }
        Ok(None)
    }

    pub fn is_nilpotent(&self) -> Result<bool> {
        Ok(self.nilpotency_index()?.is_some())
    }

    /// Inverse of `M = I + N` with `N` nilpotent: `Σ_{k<n} (-N)^k`.
    pub fn unipotent_inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let identity = Self::identity(n, self.nvars);
        let nil = self.sub(&identity)?;
        let index = nil.nilpotency_index()?.ok_or(Error::NotNilpotent)?;
        let neg = nil.scale(&-Rational::from_integer(1.into()));
        let mut term = identity.clone();
        let mut sum = identity;
        for _ in 1..index {
            term = term.matmul(&neg)?;
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }

    /// Evaluates every entry at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<RationalMatrix> {
        let values = self
            .entries
            .iter()
            .map(|p| p.evaluate(point))
            .collect::<Result<Vec<_>>>()?;
        RationalMatrix::new(self.rows, self.cols, values)
    }

    /// Splits `M = Σ_m m · M_m` into one rational coefficient matrix per monomial.
    pub fn coefficient_matrices(&self) -> BTreeMap<Monomial, RationalMatrix> {
        let mut out: BTreeMap<Monomial, RationalMatrix> = BTreeMap::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                for (m, c) in self.get(i, j).terms() {
                    if c.is_zero() {
                        continue;
                    }
                    out.entry(m.clone())
                        .or_insert_with(|| RationalMatrix::zeros(self.rows, self.cols))
                        .set(i, j, c.clone());
                }
            }
        }
        out
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
