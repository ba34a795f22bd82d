//! Formal inversion of `F = x + H` and inverse-degree bounds.
//!
//! Writing the inverse as `x - G`, the correction satisfies `G = H(x - G)`.
//! [`invert_fixed_point`] iterates that identity with degree-truncated
//! composition. [`invert_by_reduction`] first conjugates `F` by a constant matrix
//! so that `H` only involves `x_1..x_r` (`n - r` being the dimension of the
//! constant kernel of `JH`), inverts the `r`-variable sub-map, and recovers
//! the remaining components with one substitution each. The inverse then has
//! degree at most `d^r`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{kernel_from_echelon, Echelon, RationalMatrix};
use crate::poly::{Polynomial, Rational};
use crate::polymap::PolyMap;
use crate::polymatrix::PolyMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseResult {
    /// `x - G`.
    pub inverse_map: PolyMap,
    /// `G`.
    pub correction: PolyMap,
    pub iterations: usize,
    pub truncation_bound: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub d: u32,
    pub r: usize,
    pub kernel_dim: usize,
    /// `d^r`
    pub bound: u64,
    /// `d^(n-1)`
    pub bcw_bound: u64,
    pub actual_inverse_degree: u32,
}

/// `G = T^{-1} F(T x)` with the constant kernel of `J(G - x)` equal to
/// `span{e_{r+1}, ..., e_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation {
    pub transform: RationalMatrix,
    pub transform_inverse: RationalMatrix,
    pub conjugate: PolyMap,
    pub rank: usize,
}

fn stacked_coefficients(jh: &PolyMatrix) -> Result<RationalMatrix> {
    if !jh.is_square() {
        return Err(Error::NotSquare {
            rows: jh.rows(),
            cols: jh.cols(),
        });
    }
    let parts = jh.coefficient_matrices();
    RationalMatrix::vstack(jh.cols(), parts.values())
}

/// Basis of `{v ∈ ℚ^n : JH · v = 0}` as a polynomial identity, computed as
/// the kernel of all monomial coefficient matrices of `JH` stacked together.
pub fn constant_kernel(jh: &PolyMatrix) -> Result<Vec<Vec<Rational>>> {
    Ok(stacked_coefficients(jh)?.kernel())
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = alloc::vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

fn contradiction(msg: alloc::string::String) -> Error {
    Error::TheoremContradiction(msg)
}

/// Kernel-normalizing linear conjugation.
///
/// The first `r` columns of `T` are the unit vectors at the pivot columns of
/// the kernel elimination, the last `n - r` columns the kernel basis. The
/// postcondition (last `n - r` columns of `J(G - x)` vanish and the constant
/// kernel is exactly `e_{r+1}, ..., e_n`) is checked before returning.
pub fn conjugate_normalize(f: &PolyMap) -> Result<Conjugation> {
    let n = f.nvars();
    let h = f.higher_part()?;
    let Echelon { reduced, pivots } = stacked_coefficients(&h.jacobian())?.echelon();
    let kernel = kernel_from_echelon(&reduced, &pivots);
    let r = pivots.len();
    let columns: Vec<Vec<Rational>> = pivots.iter().map(|&p| unit(n, p)).chain(kernel).collect();
    let transform = RationalMatrix::from_columns(n, &columns)?;
    let transform_inverse = transform
        .inverse()
        .map_err(|_| contradiction(format!("conjugating matrix is singular: {:?}", transform)))?;
    let conjugate = if transform == RationalMatrix::identity(n) {
        f.clone()
    } else {
        f.compose(&PolyMap::linear(&transform)?)?
            .left_multiply(&transform_inverse)?
    };

    let jg = conjugate.higher_part()?.jacobian();
    for j in r..n {
        if (0..n).any(|i| !jg.get(i, j).is_zero()) {
            return Err(contradiction(format!(
                "column {} of J(G - x) is not zero after conjugation",
                j + 1
            )));
        }
    }
    let expected: Vec<Vec<Rational>> = (r..n).map(|i| unit(n, i)).collect();
    if constant_kernel(&jg)? != expected {
        return Err(contradiction(format!(
            "constant kernel of J(G - x) is not spanned by e_{}..e_{}",
            r + 1,
            n
        )));
    }
    Ok(Conjugation {
        transform,
        transform_inverse,
        conjugate,
        rank: r,
    })
}

/// Fixed-point inversion: `G_0 = 0`, `G_{k+1} = H(x - G_k)` truncated to
/// total degree `max_degree`, until `G_{k+1} = G_k`.
///
/// Iteration `k` fixes every term of degree `<= k + 1`, so a fixed point is
/// reached within `max_degree + 1` steps. The result is then checked by exact
/// composition `F(x - G) = x`; stabilization alone proves nothing.
pub fn invert_fixed_point(f: &PolyMap, max_degree: u32) -> Result<InverseResult> {
    let n = f.nvars();
    let h = f.higher_part()?;
    let x = PolyMap::identity(n);
    let mut g = PolyMap::new(alloc::vec![Polynomial::zero(n); n])?;
    let budget = max_degree as usize + 1;
    for iteration in 1..=budget {
        let next = h.compose_truncated(&x.sub(&g)?, Some(max_degree))?;
        if next == g {
            let inverse_map = x.sub(&g)?;
            if !f.compose(&inverse_map)?.is_identity() {
                return Err(Error::NoPolynomialInverse { max_degree });
            }
            return Ok(InverseResult {
                inverse_map,
                correction: g,
                iterations: iteration,
                truncation_bound: max_degree,
            });
        }
        g = next;
    }
    Err(Error::NoPolynomialInverse { max_degree })
}

/// Inverts a map whose linear part is invertible (translation allowed) by
/// normalizing it first: `F = c + L N(x)` gives `F^{-1}(y) = N^{-1}(L^{-1}(y - c))`.
pub fn invert_with_affine_part(f: &PolyMap, max_degree: u32) -> Result<InverseResult> {
    if f.is_normalized() {
        return invert_fixed_point(f, max_degree);
    }
    let n = f.nvars();
    let dec = f.decompose();
    let l_inv = dec.linear_part.inverse()?;
    let normalized = f.normalize()?;
    let inner = invert_fixed_point(&normalized, max_degree)?;
    let shift: Vec<Polynomial> = (0..n)
        .map(|i| &Polynomial::var(n, i) - &Polynomial::constant(n, dec.translation[i].clone()))
        .collect();
    let affine = PolyMap::new(shift)?.left_multiply(&l_inv)?;
    let inverse_map = inner.inverse_map.compose(&affine)?;
    if !f.compose(&inverse_map)?.is_identity() {
        return Err(Error::NoPolynomialInverse { max_degree });
    }
    let x = PolyMap::identity(n);
    Ok(InverseResult {
        correction: x.sub(&inverse_map)?,
        inverse_map,
        iterations: inner.iterations,
        truncation_bound: max_degree,
    })
}

fn saturating_power(base: u32, exp: usize) -> u64 {
    (base as u64).saturating_pow(exp.min(u32::MAX as usize) as u32)
}

fn as_truncation(bound: u64) -> u32 {
    bound.min(u32::MAX as u64) as u32
}

/// Inversion through the kernel-normalized form, with the inverse-degree report.
///
/// Steps: conjugate so that `H_i ∈ ℚ[x_1..x_r]`; invert the sub-map
/// `(G_1..G_r)` in `r` variables with truncation `d^{r-1}`; set
/// `G_i = H_i(x_1 - G_1, ..., x_r - G_r)` for all `i` with truncation `d^r`;
/// verify `G(G^{-1}) = x` exactly and conjugate back.
///
/// `F` must be normalized and Keller (`NotKeller` otherwise); the bound is
/// only claimed for Keller maps, so any later failure is a contradiction.
pub fn invert_by_reduction(f: &PolyMap) -> Result<(InverseResult, BoundReport)> {
    let n = f.nvars();
    if !f.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !f.is_keller().determinant.is_one() {
        return Err(Error::NotKeller);
    }
    let d = f.degree().max(1);
    let conj = conjugate_normalize(f)?;
    let r = conj.rank;
    let gh = conj.conjugate.higher_part()?;
    let full_bound = saturating_power(d, r);
    let bcw_bound = saturating_power(d, n - 1);

    let mut args: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
    let mut iterations = 0;
    if r > 0 {
        let sub_h = gh.components()[..r]
            .iter()
            .map(|p| p.resize_vars(r))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| {
                contradiction(format!("conjugated H depends on variables beyond x_{}", r))
            })?;
        let sub_map = PolyMap::identity(r).add(&PolyMap::new(sub_h)?)?;
        let sub_bound = as_truncation(saturating_power(d, r - 1));
        let sub = invert_fixed_point(&sub_map, sub_bound)?;
        iterations = sub.iterations;
        for (j, gj) in sub.correction.components().iter().enumerate() {
            args[j] = &args[j] - &gj.resize_vars(n)?;
        }
    }
    let correction = PolyMap::new(
        gh.components()
            .iter()
            .map(|hi| hi.substitute(&args, Some(as_truncation(full_bound))))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let x = PolyMap::identity(n);
    let g_inverse = x.sub(&correction)?;
    // F = T G T^{-1} exactly, so F(F^{-1}) = T G(G^{-1}) T^{-1} and checking G
    // suffices. G stays sparse where a scrambled F^{-1} is dense.
    if !conj.conjugate.compose(&g_inverse)?.is_identity() {
        return Err(contradiction(format!(
            "sub-map inverted but G(G^-1) != x at truncation d^r = {}",
            full_bound
        )));
    }
    let inverse_map = if conj.transform == RationalMatrix::identity(n) {
        g_inverse
    } else {
        g_inverse
            .compose(&PolyMap::linear(&conj.transform_inverse)?)?
            .left_multiply(&conj.transform)?
    };
    let actual = inverse_map.degree();
    let report = BoundReport {
        n,
        d,
        r,
        kernel_dim: n - r,
        bound: full_bound,
        bcw_bound,
        actual_inverse_degree: actual,
    };
    if actual as u64 > full_bound {
        return Err(contradiction(format!(
            "inverse degree {} exceeds d^r = {}",
            actual, full_bound
        )));
    }
    if actual as u64 > bcw_bound {
        return Err(contradiction(format!(
            "inverse degree {} exceeds d^(n-1) = {}",
            actual, bcw_bound
        )));
    }
    let result = InverseResult {
        correction: x.sub(&inverse_map)?,
        inverse_map,
        iterations,
        truncation_bound: as_truncation(full_bound),
    };
    Ok((result, report))
}

pub fn degree_bound_report(f: &PolyMap) -> Result<BoundReport> {
    invert_by_reduction(f).map(|(_, report)| report)
}
