use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A power product `x_1^{e_1} ... x_n^{e_n}` stored as a dense exponent vector.
///
/// The derived ordering is graded lexicographic: total degree first, then the
/// exponent vectors compared left to right, so `x1 > x2 > ... > 1` within a degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { degree, exponents }
    }

    /// The constant monomial `1`.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exponents: vec![0; nvars],
        }
    }

    /// `x_{index+1}` (indices are zero-based).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exponents = vec![0; nvars];
        exponents[index] = 1;
        Monomial {
            degree: 1,
            exponents,
        }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    #[inline]
    pub fn exponent(&self, index: usize) -> u32 {
        self.exponents[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            degree: self.degree + other.degree,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Formal derivative with respect to `x_{index+1}`: returns the multiplier
    /// and the lowered monomial, or `None` when the variable is absent.
    pub fn derivative(&self, index: usize) -> Option<(u32, Monomial)> {
        let e = self.exponents[index];
        if e == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[index] -= 1;
        Some((
            e,
            Monomial {
                degree: self.degree - 1,
                exponents,
            },
        ))
    }

    /// Same power product viewed in `nvars` variables. Trailing variables are
    /// dropped when shrinking, so callers must check they are unused.
    pub(crate) fn resized(&self, nvars: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents.resize(nvars, 0);
        Monomial::new(exponents)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text: `x1^2*x3`, with `1` for the constant monomial.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}
