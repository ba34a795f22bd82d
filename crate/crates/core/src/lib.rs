//! Exact arithmetic for polynomial maps `F = x + H` over the rationals.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`Polynomial`]: sparse multivariate polynomials with [`Rational`]
//!   coefficients, including degree-truncated substitution.
//! - [`RationalMatrix`] and [`PolyMatrix`]: exact kernels, ranks,
//!   determinants, nilpotency tests and unipotent inverses.
//! - [`PolyMap`] with the map-level operations: Keller test, Euler
//!   factorization, line-injectivity certificates, kernel-normalizing
//!   conjugation and two inversion algorithms with inverse-degree reports.
//! - [`druzkowski`]: power-linear maps `x + (Ax)^{*d}` and seeded corpus
//!   generators.
//!
//! Text parsing, file formats and the command line live in the `keller`
//! companion crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod druzkowski;
mod error;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod polymap;
pub mod polymatrix;

pub use druzkowski::{CorpusEntry, DruzkowskiSpec, Generator};
pub use error::{Error, Result};
pub use matrix::RationalMatrix;
pub use monomial::Monomial;
pub use poly::{univariate_gcd, Polynomial, Rational};
pub use polymap::{
    conjugate_normalize, constant_kernel, degree_bound_report, invert_by_reduction,
    invert_fixed_point, line_injectivity_certificate, BoundReport, CertificateClause, Conjugation,
    EulerFactorization, InverseResult, KellerReport, LineInjectivityCertificate, MapDecomposition,
    PolyMap,
};
pub use polymatrix::PolyMatrix;
