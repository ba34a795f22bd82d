//! Exact evidence that `F = x + H` (homogeneous `H`, Keller) is injective on
//! the line through the origin and a given point.
//!
//! For `b = λa`, `F(b) - F(a) = (λ - 1)[I + d^{-1}(λ^{d-1} + ... + 1) JH(a)] a`.
//! The bracket is unipotent because `JH(a)` is nilpotent, so the only
//! collision on the line is `λ = 1`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{univariate_gcd, Polynomial, Rational};
use crate::polymap::PolyMap;
use crate::polymatrix::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateClause {
    /// `JH(a)` is nilpotent.
    Nilpotency,
    /// `det(I + d^{-1}(λ^{d-1}+...+1) JH(a)) = 1` in ℚ[λ].
    DeterminantIdentity,
    /// The monic gcd of `F_i(λa) - F_i(a)` is a power of `λ - 1`.
    GcdRoots,
}

impl CertificateClause {
    pub fn name(self) -> &'static str {
        match self {
            CertificateClause::Nilpotency => "nilpotency",
            CertificateClause::DeterminantIdentity => "det-identity",
            CertificateClause::GcdRoots => "gcd-roots",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineInjectivityCertificate {
    pub point: Vec<Rational>,
    /// Homogeneous degree of `H` (1 is used when `H = 0`).
    pub degree: u32,
    /// Least `k` with `JH(a)^k = 0`.
    pub nilpotency_witness: Option<usize>,
    pub det_identity_holds: bool,
    /// The determinant as a polynomial in λ.
    pub det_polynomial: Polynomial,
    pub gcd_root_check: bool,
    /// Monic gcd of the nonzero `F_i(λa) - F_i(a)`.
    pub line_gcd: Polynomial,
}

impl LineInjectivityCertificate {
    pub fn failed_clause(&self) -> Option<CertificateClause> {
        if self.nilpotency_witness.is_none() {
            Some(CertificateClause::Nilpotency)
        } else if !self.det_identity_holds {
            Some(CertificateClause::DeterminantIdentity)
        } else if !self.gcd_root_check {
            Some(CertificateClause::GcdRoots)
        } else {
            None
        }
    }

    pub fn is_valid(&self) -> bool {
        self.failed_clause().is_none()
    }
}

/// Builds the certificate for the line through `point`.
///
/// Preconditions (checked): `F = x + H` with `H` homogeneous, `det JF = 1`,
/// and `point != 0`.
pub fn line_injectivity_certificate(
    f: &PolyMap,
    point: &[Rational],
) -> Result<LineInjectivityCertificate> {
    let n = f.nvars();
    if point.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: point.len(),
        });
    }
    if point.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let (h, degree) = f.homogeneous_higher_part()?;
    if !f.is_keller().determinant.is_one() {
        return Err(Error::NotKeller);
    }
    let d = degree.unwrap_or(1);

    // (i) JH(a) nilpotent
    let jh_at = h.jacobian().evaluate(point)?;
    let nilpotency_witness = jh_at.nilpotency_index()?;

    // (ii) det(I + d^{-1}(1 + λ + ... + λ^{d-1}) JH(a)) == 1 in ℚ[λ]
    let lambda = Polynomial::var(1, 0);
    let mut geometric = Polynomial::zero(1);
    for k in 0..d {
        geometric = &geometric + &lambda.pow(k);
    }
    let factor = geometric.scale(&Rational::new(One::one(), d.into()));
    let m = PolyMatrix::identity(n, 1)
        .add(&PolyMatrix::from_rational(&jh_at, 1).scale_poly(&factor)?)?;
    let det_polynomial = m.det()?;
    let det_identity_holds = det_polynomial.is_one();

    // (iii) gcd of F_i(λa) - F_i(a) over ℚ[λ]
    let line: Vec<Polynomial> = point
        .iter()
        .map(|a| Polynomial::term(Monomial::var(1, 0), a.clone()))
        .collect();
    let f_at_a = f.evaluate(point)?;
    let mut line_gcd = Polynomial::zero(1);
    for (fi, fa) in f.components().iter().zip(&f_at_a) {
        let p = &fi.substitute(&line, None)? - &Polynomial::constant(1, fa.clone());
        if !p.is_zero() {
            line_gcd = univariate_gcd(&line_gcd, &p)?;
        }
    }
    let gcd_root_check = is_power_of_lambda_minus_one(&line_gcd);

    Ok(LineInjectivityCertificate {
        point: point.to_vec(),
        degree: d,
        nilpotency_witness,
        det_identity_holds,
        det_polynomial,
        gcd_root_check,
        line_gcd,
    })
}

/// `g = (λ - 1)^m` for some `m >= 1`.
fn is_power_of_lambda_minus_one(g: &Polynomial) -> bool {
    match g.degree() {
        None | Some(0) => false,
        Some(m) => {
            let base = &Polynomial::var(1, 0) - &Polynomial::one(1);
            *g == base.pow(m)
        }
    }
}
