//! Power-linear maps `F = x + (Ax)^{*d}` and seeded corpus generators.
//!
//! Each `H_i = (A^i x)^d` where `A^i` is row `i` of `A`. The Jacobian of `H`
//! factors as `d · diag((Ax)^{*(d-1)}) · A`, so its constant kernel equals
//! `ker A`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{same_span, RationalMatrix};
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Rational};
use crate::polymap::{constant_kernel, PolyMap};
use crate::polymatrix::PolyMatrix;

/// Default coefficient range for generated matrices and polynomials.
pub const DEFAULT_COEFF_RANGE: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DruzkowskiSpec {
    matrix: RationalMatrix,
    degree: u32,
}

impl DruzkowskiSpec {
    pub fn new(matrix: RationalMatrix, degree: u32) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if matrix.rows() == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if degree < 2 {
            return Err(Error::DegreeTooSmall(degree));
        }
        Ok(DruzkowskiSpec { matrix, degree })
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.matrix.rows()
    }

    /// The linear forms `A^i x`.
    pub fn linear_forms(&self) -> Vec<Polynomial> {
        let n = self.nvars();
        (0..n)
            .map(|i| {
                let mut p = Polynomial::zero(n);
                for j in 0..n {
                    p = &p + &Polynomial::term(Monomial::var(n, j), self.matrix.get(i, j).clone());
                }
                p
            })
            .collect()
    }

    /// `F_i = x_i + (A^i x)^d`, fully expanded.
    pub fn expand(&self) -> PolyMap {
        let n = self.nvars();
        let components = self
            .linear_forms()
            .iter()
            .enumerate()
            .map(|(i, l)| &Polynomial::var(n, i) + &l.pow(self.degree))
            .collect();
        PolyMap::new(components).expect("n components in n variables")
    }

    /// `JH = d · diag((Ax)^{*(d-1)}) · A` from the closed form.
    pub fn structural_jacobian(&self) -> PolyMatrix {
        let n = self.nvars();
        let diag: Vec<Polynomial> = self
            .linear_forms()
            .iter()
            .map(|l| l.pow(self.degree - 1))
            .collect();
        PolyMatrix::diagonal(n, &diag)
            .expect("same number of variables")
            .matmul(&PolyMatrix::from_rational(&self.matrix, n))
            .expect("square")
            .scale(&Rational::from_integer(self.degree.into()))
    }

    /// Checks that the constant kernel of `JH` and `ker A` are the same
    /// subspace (mutual containment by rank comparison).
    pub fn kernel_equality_check(&self) -> Result<bool> {
        let n = self.nvars();
        let jh_kernel = constant_kernel(&self.structural_jacobian())?;
        let a_kernel = self.matrix.kernel();
        if same_span(n, &jh_kernel, &a_kernel)? {
            Ok(true)
        } else {
            Err(Error::TheoremContradiction(format!(
                "constant kernel of JH (dim {}) differs from ker A (dim {})",
                jh_kernel.len(),
                a_kernel.len()
            )))
        }
    }

    pub fn keller_facts_check(&self) -> Result<KellerFacts> {
        let f = self.expand();
        let keller = f.is_keller().keller;
        let jh = self.structural_jacobian();
        let nilpotent = jh.is_nilpotent()?;
        let det_a = self.matrix.det()?;
        let rank_a = self.matrix.rank();
        let facts = KellerFacts {
            keller,
            nilpotent,
            det_a_zero: det_a.is_zero(),
            rank_a,
        };
        if keller && !(nilpotent && facts.det_a_zero && rank_a < self.nvars()) {
            return Err(Error::TheoremContradiction(format!(
                "Keller power-linear map with nilpotent={} det(A)={} rank(A)={}",
                nilpotent, det_a, rank_a
            )));
        }
        if nilpotent && !keller {
            return Err(Error::TheoremContradiction(
                "JH nilpotent but det JF is not constant".into(),
            ));
        }
        Ok(facts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KellerFacts {
    pub keller: bool,
    pub nilpotent: bool,
    pub det_a_zero: bool,
    pub rank_a: usize,
}

fn random_int(rng: &mut ChaCha8Rng, range: i64) -> i64 {
    rng.gen_range(-range..=range)
}

fn random_nonzero(rng: &mut ChaCha8Rng, range: i64) -> i64 {
    let range = range.max(1);
    loop {
        let v = rng.gen_range(-range..=range);
        if v != 0 {
            return v;
        }
    }
}

/// Strictly upper-triangular `A` with entries uniform in
/// `[-coeff_range, coeff_range]`. `JH` is then strictly upper triangular,
/// so the map is Keller and invertible.
pub fn gen_triangular_druzkowski(
    n: usize,
    d: u32,
    seed: u64,
    coeff_range: i64,
) -> Result<DruzkowskiSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            a.set(
                i,
                j,
                Rational::from_integer(random_int(&mut rng, coeff_range).into()),
            );
        }
    }
    DruzkowskiSpec::new(a, d)
}

/// Unrestricted `A` (generally not Keller). Each row is zeroed with
/// probability 1/4 so rank-deficient matrices are common.
pub fn gen_random_druzkowski(
    n: usize,
    d: u32,
    seed: u64,
    coeff_range: i64,
) -> Result<DruzkowskiSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = RationalMatrix::zeros(n, n);
    for i in 0..n {
        let zero_row = rng.gen_ratio(1, 4);
        for j in 0..n {
            let v = random_int(&mut rng, coeff_range);
            if !zero_row {
                a.set(i, j, Rational::from_integer(v.into()));
            }
        }
    }
    DruzkowskiSpec::new(a, d)
}

/// Triangular Keller map: `F_i = x_i + H_i` where `H_i` has
/// `terms_per_component` random terms of degree `2..=d` in `x_{i+1}, ..., x_n`.
pub fn gen_triangular_keller(
    n: usize,
    d: u32,
    seed: u64,
    terms_per_component: usize,
) -> Result<PolyMap> {
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    if d < 2 {
        return Err(Error::DegreeTooSmall(d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let mut h = Polynomial::zero(n);
        if i + 1 < n {
            for _ in 0..terms_per_component {
                let deg = rng.gen_range(2..=d);
                let mut exps = vec![0u32; n];
                for _ in 0..deg {
                    exps[rng.gen_range(i + 1..n)] += 1;
                }
                let c = random_nonzero(&mut rng, DEFAULT_COEFF_RANGE);
                h = &h + &Polynomial::term(Monomial::new(exps), Rational::from_integer(c.into()));
            }
        }
        components.push(&Polynomial::var(n, i) + &h);
    }
    PolyMap::new(components)
}

/// Which generator produced a corpus entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    TriangularKeller,
    TriangularDruzkowski,
    RandomDruzkowski,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::TriangularKeller => "triangular-keller",
            Generator::TriangularDruzkowski => "triangular-druzkowski",
            Generator::RandomDruzkowski => "random-druzkowski",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            Generator::TriangularKeller,
            Generator::TriangularDruzkowski,
            Generator::RandomDruzkowski,
        ]
        .into_iter()
        .find(|g| g.name() == name)
    }

    pub fn expected_keller(self) -> Option<bool> {
        match self {
            Generator::TriangularKeller | Generator::TriangularDruzkowski => Some(true),
            Generator::RandomDruzkowski => None,
        }
    }
}

/// Seed of the `index`-th entry of a corpus with base seed `seed`.
pub fn entry_seed(seed: u64, index: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ index.wrapping_add(1).wrapping_mul(0xBF58_476D_1CE4_E5B9)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub generator: Generator,
    pub n: usize,
    pub d: u32,
    pub seed: u64,
    pub map: PolyMap,
    /// Present for power-linear entries.
    pub spec: Option<DruzkowskiSpec>,
    /// `None` when the generator gives no guarantee.
    pub expected_keller: Option<bool>,
}

/// Terms per component used by corpus generation of triangular Keller maps.
pub const DEFAULT_TERMS_PER_COMPONENT: usize = 3;

impl CorpusEntry {
    /// Regenerates an entry from its provenance; bit-identical across runs.
    pub fn generate(generator: Generator, n: usize, d: u32, seed: u64) -> Result<Self> {
        let (map, spec) = match generator {
            Generator::TriangularKeller => (
                gen_triangular_keller(n, d, seed, DEFAULT_TERMS_PER_COMPONENT)?,
                None,
            ),
            Generator::TriangularDruzkowski => {
                let spec = gen_triangular_druzkowski(n, d, seed, DEFAULT_COEFF_RANGE)?;
                (spec.expand(), Some(spec))
            }
            Generator::RandomDruzkowski => {
                let spec = gen_random_druzkowski(n, d, seed, DEFAULT_COEFF_RANGE)?;
                (spec.expand(), Some(spec))
            }
        };
        Ok(CorpusEntry {
            generator,
            n,
            d,
            seed,
            map,
            spec,
            expected_keller: generator.expected_keller(),
        })
    }
}

/// `count` entries cycling through the `(n, d)` shapes, seeds derived from
/// `seed` with [`entry_seed`].
pub fn corpus(
    generator: Generator,
    shapes: &[(usize, u32)],
    seed: u64,
    count: usize,
) -> Result<Vec<CorpusEntry>> {
    (0..count)
        .map(|i| {
            let (n, d) = shapes[i % shapes.len()];
            CorpusEntry::generate(generator, n, d, entry_seed(seed, i as u64))
        })
        .collect()
}

/// Random invertible integer matrix with entries in `[-range, range]`.
pub fn random_invertible_matrix(n: usize, seed: u64, range: i64) -> RationalMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(
                    i,
                    j,
                    Rational::from_integer(random_int(&mut rng, range).into()),
                );
            }
        }
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// Random nonzero point with rational coordinates `p/q`, `|p| <= range`, `1 <= q <= range`.
pub fn random_rational_point(n: usize, seed: u64, range: i64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let point: Vec<Rational> = (0..n)
            .map(|_| {
                let num = random_int(&mut rng, range);
                let den = rng.gen_range(1..=range.max(1));
                Rational::new(num.into(), den.into())
            })
            .collect();
        if point.iter().any(|v| !v.is_zero()) {
            return point;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn spec(n: usize, d: u32, a: &[i64]) -> DruzkowskiSpec {
        DruzkowskiSpec::new(RationalMatrix::from_i64(n, n, a).unwrap(), d).unwrap()
    }

    #[test]
    fn expand_examples() {
        let f = spec(2, 3, &[0, 1, 0, 0]).expand();
        assert_eq!(
            f,
            PolyMap::new(vec![&x(2, 0) + &x(2, 1).pow(3), x(2, 1)]).unwrap()
        );
        assert!(spec(3, 3, &[0; 9]).expand().is_identity());
        let f = spec(3, 3, &[0, 1, 1, 0, 0, 1, 0, 0, 0]).expand();
        let expected = PolyMap::new(vec![
            &x(3, 0) + &(&x(3, 1) + &x(3, 2)).pow(3),
            &x(3, 1) + &x(3, 2).pow(3),
            x(3, 2),
        ])
        .unwrap();
        assert_eq!(f, expected);
        assert_eq!(
            DruzkowskiSpec::new(RationalMatrix::identity(2), 1),
            Err(Error::DegreeTooSmall(1))
        );
    }

    #[test]
    fn structural_jacobian_examples() {
        let jh = spec(2, 3, &[0, 1, 0, 0]).structural_jacobian();
        assert_eq!(
            jh.get(0, 1),
            &x(2, 1).pow(2).scale(&Rational::from_integer(3.into()))
        );
        assert!(jh.get(0, 0).is_zero() && jh.get(1, 0).is_zero() && jh.get(1, 1).is_zero());
        assert!(spec(2, 3, &[0; 4]).structural_jacobian().is_zero());
    }

    #[test]
    fn structural_matches_direct() {
        for seed in 0..20 {
            let s = gen_random_druzkowski(3, 2 + (seed % 2) as u32, seed, 3).unwrap();
            let direct = s
                .expand()
                .jacobian()
                .sub(&PolyMatrix::identity(3, 3))
                .unwrap();
            assert_eq!(s.structural_jacobian(), direct);
        }
    }

    #[test]
    fn kernel_equality_examples() {
        assert!(spec(2, 3, &[0, 1, 0, 0]).kernel_equality_check().unwrap());
        assert!(spec(2, 3, &[0; 4]).kernel_equality_check().unwrap());
        assert!(spec(2, 2, &[1, 0, 0, 1]).kernel_equality_check().unwrap());
    }

    #[test]
    fn keller_facts_examples() {
        let facts = spec(3, 3, &[0, 1, 2, 0, 0, -1, 0, 0, 0])
            .keller_facts_check()
            .unwrap();
        assert!(facts.keller && facts.nilpotent && facts.det_a_zero);
        let facts = spec(2, 2, &[1, 0, 0, 1]).keller_facts_check().unwrap();
        assert!(!facts.keller && !facts.nilpotent);
        let facts = spec(2, 3, &[0; 4]).keller_facts_check().unwrap();
        assert!(facts.keller && facts.nilpotent && facts.rank_a == 0);
    }

    #[test]
    fn identity_spec_det_not_constant() {
        // A = I, d = 2: det JF = (1 + 2 x1)(1 + 2 x2)
        let f = spec(2, 2, &[1, 0, 0, 1]).expand();
        let two = Rational::from_integer(2.into());
        let expected = &(&Polynomial::one(2) + &x(2, 0).scale(&two))
            * &(&Polynomial::one(2) + &x(2, 1).scale(&two));
        assert_eq!(f.is_keller().determinant, expected);
    }

    #[test]
    fn triangular_druzkowski_generator() {
        let s = gen_triangular_druzkowski(2, 3, 11, 3).unwrap();
        let a = s.matrix();
        assert!(a.get(0, 0).is_zero() && a.get(1, 0).is_zero() && a.get(1, 1).is_zero());
        assert_eq!(gen_triangular_druzkowski(2, 3, 11, 3).unwrap(), s);
        assert!(gen_triangular_druzkowski(1, 3, 5, 3)
            .unwrap()
            .expand()
            .is_identity());
    }

    #[test]
    fn triangular_keller_generator() {
        let f = gen_triangular_keller(2, 3, 4, 3).unwrap();
        assert_eq!(f.component(1), &x(2, 1));
        assert!(f.component(0).depends_only_on_first(2));
        assert!(gen_triangular_keller(1, 3, 4, 3).unwrap().is_identity());
        for seed in 0..10 {
            let f = gen_triangular_keller(4, 3, seed, 3).unwrap();
            assert!(f.is_keller().keller);
            assert_eq!(f, gen_triangular_keller(4, 3, seed, 3).unwrap());
        }
    }

    #[test]
    fn generator_names_round_trip() {
        for g in [
            Generator::TriangularKeller,
            Generator::TriangularDruzkowski,
            Generator::RandomDruzkowski,
        ] {
            assert_eq!(Generator::from_name(g.name()), Some(g));
        }
        assert_eq!(Generator::from_name("nope"), None);
    }
}
