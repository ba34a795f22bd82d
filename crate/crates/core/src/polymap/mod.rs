//! Polynomial maps `F: ℚ^n → ℚ^n` and the map-level algorithms.

mod certificate;
mod inverse;

use alloc::vec::Vec;

use num_traits::{One, Zero};

pub use certificate::{
    line_injectivity_certificate, CertificateClause, LineInjectivityCertificate,
};
pub use inverse::{
    conjugate_normalize, constant_kernel, degree_bound_report, invert_by_reduction,
    invert_fixed_point, invert_with_affine_part, BoundReport, Conjugation, InverseResult,
};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational};
use crate::polymatrix::PolyMatrix;

/// An n-tuple of polynomials in n variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

/// `F(x) = translation + linear_part · x + H(x)` with `ord(H) >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDecomposition {
    pub linear_part: RationalMatrix,
    pub translation: Vec<Rational>,
    pub higher_part: PolyMap,
    /// Total degree of `H`; 0 when `H = 0`.
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KellerReport {
    pub keller: bool,
    pub determinant: Polynomial,
}

/// `F = M · X` with `M = I + d^{-1} JH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactorization {
    /// Homogeneous degree of `H`, `None` when `H = 0`.
    pub degree: Option<u32>,
    pub matrix: PolyMatrix,
}

impl PolyMap {
    /// Components must all live in `components.len()` variables.
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if let Some(bad) = components.iter().find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        Ok(PolyMap { components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (0..n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    /// The linear map `x ↦ M x`.
    pub fn linear(m: &RationalMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let components = (0..n)
            .map(|i| {
                let mut p = Polynomial::zero(n);
                for j in 0..n {
                    p = &p + &Polynomial::term(Monomial::var(n, j), m.get(i, j).clone());
                }
                p
            })
            .collect();
        Ok(PolyMap { components })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    /// `max_i deg F_i`, 0 for the zero map.
    pub fn degree(&self) -> u32 {
        self.components
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMap::identity(self.nvars())
    }

    pub fn jacobian(&self) -> PolyMatrix {
        let n = self.nvars();
        let mut entries = Vec::with_capacity(n * n);
        for f in &self.components {
            for j in 0..n {
                entries.push(f.partial_derivative(j).expect("index in range"));
            }
        }
        PolyMatrix::new(n, n, n, entries).expect("square by construction")
    }

    /// `F(G)`, exact.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        self.compose_truncated(inner, None)
    }

    pub fn compose_truncated(&self, inner: &PolyMap, max_degree: Option<u32>) -> Result<PolyMap> {
        if self.nvars() != inner.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: inner.nvars(),
            });
        }
        let components = self
            .components
            .iter()
            .map(|f| f.substitute(&inner.components, max_degree))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { components })
    }

    pub fn add(&self, other: &PolyMap) -> Result<PolyMap> {
        self.zip(other, Polynomial::checked_add)
    }

    pub fn sub(&self, other: &PolyMap) -> Result<PolyMap> {
        self.zip(other, Polynomial::checked_sub)
    }

    fn zip(
        &self,
        other: &PolyMap,
        f: impl Fn(&Polynomial, &Polynomial) -> Result<Polynomial>,
    ) -> Result<PolyMap> {
        if self.nvars() != other.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMap { components })
    }

    /// `M · F` for a constant matrix `M`.
    pub fn left_multiply(&self, m: &RationalMatrix) -> Result<PolyMap> {
        let pm = PolyMatrix::from_rational(m, self.nvars());
        PolyMap::new(pm.mul_column(&self.components)?)
    }

    /// `S^{-1} · F(S x)`.
    pub fn linear_conjugate(&self, s: &RationalMatrix) -> Result<PolyMap> {
        let s_inv = s.inverse()?;
        self.compose(&PolyMap::linear(s)?)?.left_multiply(&s_inv)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|f| f.evaluate(point)).collect()
    }

    pub fn decompose(&self) -> MapDecomposition {
        let n = self.nvars();
        let mut linear_part = RationalMatrix::zeros(n, n);
        let mut translation = Vec::with_capacity(n);
        let mut higher = Vec::with_capacity(n);
        for (i, f) in self.components.iter().enumerate() {
            translation.push(f.constant_term());
            for j in 0..n {
                linear_part.set(i, j, f.coefficient(&Monomial::var(n, j)));
            }
            let h = Polynomial::from_terms(
                n,
                f.terms()
                    .filter(|(m, _)| m.degree() >= 2)
                    .map(|(m, c)| (m.exponents().to_vec(), c.clone())),
            )
            .expect("same number of variables");
            higher.push(h);
        }
        let higher_part = PolyMap { components: higher };
        let degree = higher_part.degree();
        MapDecomposition {
            linear_part,
            translation,
            higher_part,
            degree,
        }
    }

    /// True when `F = x + H` with `ord(H) >= 2`.
    pub fn is_normalized(&self) -> bool {
        let dec = self.decompose();
        dec.translation.iter().all(Zero::is_zero)
            && dec.linear_part == RationalMatrix::identity(self.nvars())
    }

    /// `H = F - x` for a normalized map.
    pub fn higher_part(&self) -> Result<PolyMap> {
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        self.sub(&PolyMap::identity(self.nvars()))
    }

    /// `L^{-1} (F(x) - F(0))`, which has the form `x + H`.
    pub fn normalize(&self) -> Result<PolyMap> {
        let dec = self.decompose();
        let l_inv = dec.linear_part.inverse()?;
        let n = self.nvars();
        let shifted = PolyMap {
            components: self
                .components
                .iter()
                .zip(&dec.translation)
                .map(|(f, c)| f - &Polynomial::constant(n, c.clone()))
                .collect(),
        };
        shifted.left_multiply(&l_inv)
    }

    pub fn is_keller(&self) -> KellerReport {
        let determinant = self.jacobian().det().expect("Jacobian is square");
        let keller = !determinant.is_zero() && determinant.is_constant();
        KellerReport {
            keller,
            determinant,
        }
    }

    /// `H` and its homogeneous degree for `F = x + H` with `H` homogeneous.
    pub(crate) fn homogeneous_higher_part(&self) -> Result<(PolyMap, Option<u32>)> {
        let h = self.higher_part()?;
        let mut degree = None;
        for p in h.components() {
            if p.is_zero() {
                continue;
            }
            match (p.homogeneous_degree(), degree) {
                (None, _) => return Err(Error::NotHomogeneous),
                (Some(d), None) => degree = Some(d),
                (Some(d), Some(prev)) if d != prev => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok((h, degree))
    }

    /// Factorization `F = (I + d^{-1} JH) X` from Euler's identity. The
    /// product is recomputed and compared with `F` before returning.
    pub fn euler_decompose(&self) -> Result<EulerFactorization> {
        let n = self.nvars();
        let (h, degree) = self.homogeneous_higher_part()?;
        let identity = PolyMatrix::identity(n, n);
        let matrix = match degree {
            None => identity,
            Some(d) => {
                let inv_d = Rational::new(One::one(), d.into());
                identity.add(&h.jacobian().scale(&inv_d))?
            }
        };
        let x = PolyMap::identity(n);
        if matrix.mul_column(x.components())? != self.components {
            return Err(Error::TheoremContradiction(alloc::format!(
                "Euler factorization (I + JH/d) X != F for degree {:?}",
                degree
            )));
        }
        Ok(EulerFactorization { degree, matrix })
    }

    /// Recovers `X = (I + d^{-1} JH)^{-1} F` through the unipotent inverse,
    /// which shows each `x_i` lies in the ideal generated by the `F_j`.
    pub fn verify_ideal_remark(&self) -> Result<bool> {
        let factor = self.euler_decompose()?;
        let inv = factor.matrix.unipotent_inverse()?;
        let recovered = inv.mul_column(&self.components)?;
        Ok(recovered == PolyMap::identity(self.nvars()).components)
    }
}
