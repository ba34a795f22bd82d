//! Sparse multivariate polynomials over ℚ.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration is in
//! ascending graded-lex order and printing (descending) is deterministic.
//! No zero coefficient is ever stored.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn check_nvars(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, Rational::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{index+1}`; panics if `index >= nvars`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), Rational::one())
    }

    pub fn term(monomial: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        let nvars = monomial.nvars();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            check_nvars(nvars, exps.len())?;
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest total degree of a term, `None` for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// `Some(d)` when every term has total degree `d`; `None` for zero or
    /// mixed-degree polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match (self.order(), self.degree()) {
            (Some(lo), Some(hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// Highest exponent of `x_{index+1}` among the terms.
    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(index))
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: &Monomial, c: &Rational) {
        if let Some(existing) = self.terms.get_mut(m) {
            *existing += c;
            if existing.is_zero() {
                self.terms.remove(m);
            }
        } else if !c.is_zero() {
            self.terms.insert(m.clone(), c.clone());
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        let (mut acc, rest) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &rest.terms {
            acc.add_term_ref(m, c);
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        let mut acc = self.clone();
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), -c.clone());
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.mul_truncated(other, None)
    }

    /// Product with every term of total degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Polynomial, max_degree: Option<u32>) -> Result<Polynomial> {
        check_nvars(self.nvars, other.nvars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        // Clear denominators once so the inner loop is integer arithmetic;
        // rationals are only normalized when the result is assembled.
        let a = IntegerForm::new(self);
        let b = IntegerForm::new(other);
        let denom = &a.denom * &b.denom;
        let small = match (&a.small, &b.small) {
            (Some(sa), Some(sb)) => {
                let mut acc: HashMap<Monomial, i128> = HashMap::new();
                let mut overflow = false;
                'outer: for (i, m1) in self.terms.keys().enumerate() {
                    let room = match max_degree {
                        Some(d) if m1.degree() > d => break,
                        Some(d) => Some(d - m1.degree()),
                        None => None,
                    };
                    for (j, m2) in other.terms.keys().enumerate() {
                        if room.is_some_and(|r| m2.degree() > r) {
                            break;
                        }
                        let prod = sa[i] as i128 * sb[j] as i128;
                        let slot = acc.entry(m1.mul(m2)).or_insert(0);
                        match slot.checked_add(prod) {
                            Some(v) => *slot = v,
                            None => {
                                overflow = true;
                                break 'outer;
                            }
                        }
                    }
                }
                if overflow {
                    None
                } else {
                    Some(
                        acc.into_iter()
                            .filter(|(_, v)| *v != 0)
                            .map(|(m, v)| (m, Rational::new(BigInt::from(v), denom.clone())))
                            .collect(),
                    )
                }
            }
            _ => None,
        };
        let terms = match small {
            Some(terms) => terms,
            None => {
                let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
                for (m1, n1) in self.terms.keys().zip(&a.numerators) {
                    let room = match max_degree {
                        Some(d) if m1.degree() > d => break,
                        Some(d) => Some(d - m1.degree()),
                        None => None,
                    };
                    for (m2, n2) in other.terms.keys().zip(&b.numerators) {
                        if room.is_some_and(|r| m2.degree() > r) {
                            break;
                        }
                        let prod = n1 * n2;
                        match acc.entry(m1.mul(m2)) {
                            hashbrown::hash_map::Entry::Occupied(mut o) => *o.get_mut() += prod,
                            hashbrown::hash_map::Entry::Vacant(v) => {
                                v.insert(prod);
                            }
                        }
                    }
                }
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(m, v)| (m, Rational::new(v, denom.clone())))
                    .collect()
            }
        };
        Ok(Polynomial {
            nvars: self.nvars,
            terms,
        })
    }

    /// Drops every term of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .take_while(|(m, _)| m.degree() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        self.pow_truncated(k, None)
    }

    pub fn pow_truncated(&self, k: u32, max_degree: Option<u32>) -> Polynomial {
        let mut result = match max_degree {
            Some(d) => Polynomial::one(self.nvars).truncate(d),
            None => Polynomial::one(self.nvars),
        };
        for _ in 0..k {
            result = result
                .mul_truncated(self, max_degree)
                .expect("same number of variables");
        }
        result
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `x_{index+1}` (zero-based index).
    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        if index >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((e, lowered)) = m.derivative(index) {
                out.add_term(lowered, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn homogeneous_component(&self, k: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        check_nvars(self.nvars, point.len())?;
        // Powers per variable, built on demand.
        let mut powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|v| vec![Rational::one(), v.clone()])
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().expect("nonempty") * &point[i];
                    table.push(next);
                }
                t *= &table[e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Composition `p(args_1, ..., args_n)`.
    ///
    /// With `max_degree = Some(D)` every intermediate product is truncated to
    /// total degree `<= D`, which yields exactly the truncation of the full
    /// composition. Evaluation is a multivariate Horner scheme so that each
    /// step multiplies by a single argument.
    pub fn substitute(&self, args: &[Polynomial], max_degree: Option<u32>) -> Result<Polynomial> {
        check_nvars(self.nvars, args.len())?;
        let target = match args.first() {
            Some(a) => a.nvars,
            None => {
                // A polynomial in zero variables is a constant.
                return Ok(self.clone());
            }
        };
        for a in args {
            check_nvars(target, a.nvars)?;
        }
        // Lexicographically descending exponent vectors make each variable's
        // groups contiguous with descending exponents.
        let mut terms: Vec<(&[u32], &Rational)> =
            self.terms.iter().map(|(m, c)| (m.exponents(), c)).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(a.0));
        Ok(horner(&terms, 0, args, target, max_degree))
    }

    /// The same polynomial viewed in `nvars` variables. Growing appends unused
    /// variables; shrinking fails if a dropped variable occurs.
    pub fn resize_vars(&self, nvars: usize) -> Result<Polynomial> {
        if nvars < self.nvars {
            for m in self.terms.keys() {
                if let Some(i) = m.exponents()[nvars..].iter().position(|&e| e > 0) {
                    return Err(Error::IndexOutOfRange {
                        index: nvars + i,
                        nvars,
                    });
                }
            }
        }
        Ok(Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.resized(nvars), c.clone()))
                .collect(),
        })
    }

    /// True if no term involves a variable with index `>= count`.
    pub fn depends_only_on_first(&self, count: usize) -> bool {
        self.terms.keys().all(|m| {
            m.exponents()[count.min(self.nvars)..]
                .iter()
                .all(|&e| e == 0)
        })
    }

    /// Leading coefficient in the univariate case (highest power of `x1`).
    fn univariate_leading(&self) -> Option<(u32, &Rational)> {
        self.terms.iter().next_back().map(|(m, c)| (m.degree(), c))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Result<Polynomial> {
        if self.nvars != 1 {
            return Err(Error::NotUnivariate { nvars: self.nvars });
        }
        Ok(match self.univariate_leading() {
            Some((_, lc)) => self.scale(&lc.recip()),
            None => self.clone(),
        })
    }

    /// Euclidean division in ℚ[λ].
    pub fn univariate_div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if self.nvars != 1 {
            return Err(Error::NotUnivariate { nvars: self.nvars });
        }
        if divisor.nvars != 1 {
            return Err(Error::NotUnivariate {
                nvars: divisor.nvars,
            });
        }
        let (dd, dlc) = match divisor.univariate_leading() {
            Some((d, c)) => (d, c.clone()),
            None => return Err(Error::Singular),
        };
        let mut quotient = Polynomial::zero(1);
        let mut rem = self.clone();
        while let Some((rd, rlc)) = rem.univariate_leading() {
            if rd < dd {
                break;
            }
            let factor = Polynomial::term(Monomial::new(vec![rd - dd]), rlc / &dlc);
            rem = &rem - &(&factor * divisor);
            quotient = &quotient + &factor;
        }
        Ok((quotient, rem))
    }
}

/// `p = numerators / denom` termwise, with an `i64` copy when everything fits.
struct IntegerForm {
    denom: BigInt,
    numerators: Vec<BigInt>,
    small: Option<Vec<i64>>,
}

impl IntegerForm {
    fn new(p: &Polynomial) -> Self {
        let mut denom = BigInt::one();
        for c in p.terms.values() {
            if !c.denom().is_one() {
                denom = denom.lcm(c.denom());
            }
        }
        let numerators: Vec<BigInt> = p
            .terms
            .values()
            .map(|c| {
                if c.denom() == &denom {
                    c.numer().clone()
                } else {
                    c.numer() * (&denom / c.denom())
                }
            })
            .collect();
        let small = numerators.iter().map(|v| v.to_i64()).collect();
        IntegerForm {
            denom,
            numerators,
            small,
        }
    }
}

fn horner(
    terms: &[(&[u32], &Rational)],
    var: usize,
    args: &[Polynomial],
    target: usize,
    max_degree: Option<u32>,
) -> Polynomial {
    if var == args.len() {
        let mut c = Rational::zero();
        for (_, v) in terms {
            c += *v;
        }
        let p = Polynomial::constant(target, c);
        return match max_degree {
            Some(d) => p.truncate(d),
            None => p,
        };
    }
    let arg = &args[var];
    let mut acc: Option<Polynomial> = None;
    let mut prev_exp = 0u32;
    let mut start = 0;
    while start < terms.len() {
        let e = terms[start].0[var];
        let mut end = start + 1;
        while end < terms.len() && terms[end].0[var] == e {
            end += 1;
        }
        let inner = horner(&terms[start..end], var + 1, args, target, max_degree);
        acc = Some(match acc {
            None => inner,
            Some(mut a) => {
                for _ in 0..(prev_exp - e) {
                    a = a
                        .mul_truncated(arg, max_degree)
                        .expect("same number of variables");
                }
                &a + &inner
            }
        });
        prev_exp = e;
        start = end;
    }
    let mut a = match acc {
        Some(a) => a,
        None => return Polynomial::zero(target),
    };
    for _ in 0..prev_exp {
        a = a
            .mul_truncated(arg, max_degree)
            .expect("same number of variables");
    }
    a
}

/// Monic gcd in ℚ[λ] by Euclid's algorithm; `gcd(0, 0) = 0`.
pub fn univariate_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let mut a = p.monic()?;
    let mut b = q.monic()?;
    while !b.is_zero() {
        let (_, r) = a.univariate_div_rem(&b)?;
        a = b;
        b = r.monic()?;
    }
    Ok(a)
}

// Operator impls panic on mismatched variable counts; the `checked_*`
// methods are the fallible versions.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("polynomial variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical text form, terms in descending graded-lex order:
/// `-3/2*x2^2*x3 + x1 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn c(n: usize, v: i64) -> Polynomial {
        Polynomial::from_int(n, v)
    }

    #[test]
    fn add_examples() {
        let x1 = x(1, 0);
        assert!((&x1 + &(-&x1)).is_zero());
        let sq = x1.pow(2);
        let p = &sq + &Polynomial::constant(1, q(1, 2));
        assert_eq!(format!("{}", &p + &sq), "2*x1^2 + 1/2");
        let x2c = x(2, 1).pow(3);
        assert_eq!(format!("{}", &(&x(2, 0) + &x2c) + &x2c), "2*x2^3 + x1");
    }

    #[test]
    fn add_dimension_mismatch() {
        assert_eq!(
            x(1, 0).checked_add(&x(2, 0)),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
        assert!(x(1, 0).checked_mul(&x(2, 0)).is_err());
    }

    #[test]
    fn mul_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        assert_eq!(&(&x1 + &x2) * &(&x1 - &x2), &x1.pow(2) - &x2.pow(2));
        assert!((&x1 * &Polynomial::zero(2)).is_zero());
        let (y2, y3) = (x(3, 1), x(3, 2));
        let cube = (&y2 + &y3).pow(3);
        let expected = &(&(&y2.pow(3) + &(&c(3, 3) * &(&y2.pow(2) * &y3)))
            + &(&c(3, 3) * &(&y2 * &y3.pow(2))))
            + &y3.pow(3);
        assert_eq!(cube, expected);
    }

    #[test]
    fn derivative_examples() {
        let x1 = x(3, 0);
        assert_eq!(
            x1.pow(3).partial_derivative(0).unwrap(),
            &c(3, 3) * &x1.pow(2)
        );
        assert!(x(3, 1).pow(3).partial_derivative(0).unwrap().is_zero());
        let s = &x(3, 1) + &x(3, 2);
        assert_eq!(
            s.pow(3).partial_derivative(1).unwrap(),
            &c(3, 3) * &s.pow(2)
        );
        assert_eq!(
            x1.partial_derivative(3),
            Err(Error::IndexOutOfRange { index: 3, nvars: 3 })
        );
    }

    #[test]
    fn substitute_examples() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &x1 + &x2.pow(3);
        let args = [&x1 - &x2.pow(3), x2.clone()];
        assert_eq!(p.substitute(&args, None).unwrap(), x1);
        assert_eq!(p.substitute(&[x1.clone(), x2.clone()], None).unwrap(), p);
        let sq = x(1, 0).pow(2);
        assert!(sq.substitute(&[&x1 + &x2], Some(1)).unwrap().is_zero());
        assert!(p.substitute(core::slice::from_ref(&x1), None).is_err());
    }

    #[test]
    fn homogeneous_component_examples() {
        let x1 = x(1, 0);
        let p = &x1 + &x1.pow(3);
        assert_eq!(p.homogeneous_component(3), x1.pow(3));
        assert!(p.homogeneous_component(2).is_zero());
        let sum = (0..=3).fold(Polynomial::zero(1), |acc, k| {
            &acc + &p.homogeneous_component(k)
        });
        assert_eq!(sum, p);
    }

    #[test]
    fn evaluate_examples() {
        let p = &x(2, 0) + &x(2, 1).pow(3);
        let pt = [q(1, 1), q(2, 1)];
        assert_eq!(p.evaluate(&pt).unwrap(), q(9, 1));
        assert!(Polynomial::zero(2).evaluate(&pt).unwrap().is_zero());
        let r = &p + &c(2, 7);
        assert_eq!(r.evaluate(&[q(0, 1), q(0, 1)]).unwrap(), q(7, 1));
        assert!(p.evaluate(&[q(1, 1)]).is_err());
    }

    #[test]
    fn gcd_examples() {
        let l = x(1, 0);
        let one = c(1, 1);
        let lm1 = &l - &one;
        assert_eq!(univariate_gcd(&(&l.pow(2) - &one), &lm1).unwrap(), lm1);
        let p = &(&c(1, 2) * &l) + &c(1, 4);
        assert_eq!(
            univariate_gcd(&p, &Polynomial::zero(1)).unwrap(),
            &l + &c(1, 2)
        );
        let a = &lm1.pow(2) * &(&l + &c(1, 2));
        let b = &lm1 * &(&l + &c(1, 3));
        assert_eq!(univariate_gcd(&a, &b).unwrap(), lm1);
        assert!(univariate_gcd(&Polynomial::zero(1), &Polynomial::zero(1))
            .unwrap()
            .is_zero());
        assert!(univariate_gcd(&x(2, 0), &x(2, 1)).is_err());
    }

    #[test]
    fn display_canonical() {
        let p = &(&x(3, 0) - &(&Polynomial::constant(3, q(3, 2)) * &(&x(3, 1).pow(2) * &x(3, 2))))
            + &c(3, 1);
        assert_eq!(format!("{}", p), "-3/2*x2^2*x3 + x1 + 1");
        assert_eq!(format!("{}", Polynomial::zero(2)), "0");
        assert_eq!(format!("{}", -&x(2, 1)), "-x2");
    }

    #[test]
    fn resize_vars() {
        let p = x(3, 1);
        assert_eq!(p.resize_vars(2).unwrap(), x(2, 1));
        assert!(p.resize_vars(1).is_err());
        assert_eq!(x(2, 1).resize_vars(3).unwrap(), p);
    }
}
