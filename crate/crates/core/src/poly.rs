//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose ordering is graded
//! reverse lexicographic. Iteration order is therefore deterministic and the
//! last term is the grevlex-leading one. Zero coefficients are never stored,
//! so structural equality is mathematical equality.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent vector of a monomial, ordered by grevlex.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product of the factorials of the exponents.
    pub fn factorial_weight(&self) -> Scalar {
        let mut acc = Scalar::one();
        for &e in &self.0 {
            for k in 2..=e {
                acc *= Scalar::from_integer(k.into());
            }
        }
        acc
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..self.0.len().min(other.0.len())).rev() {
                if self.0[i] != other.0[i] {
                    return other.0[i].cmp(&self.0[i]);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `degree` in `nvars` variables, grevlex
/// descending (largest first).
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(pos: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = current.len();
        if pos + 1 == n {
            current[pos] = remaining;
            out.push(Monomial(current.clone()));
            current[pos] = 0;
            return;
        }
        for e in (0..=remaining).rev() {
            current[pos] = e;
            rec(pos + 1, remaining - e, current, out);
        }
        current[pos] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    rec(0, degree, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        Poly::monomial(Monomial::var(nvars, index), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, Vec<u32>)>,
    {
        let mut p = Poly::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer coefficients. Panics on length
    /// mismatch.
    pub fn from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Poly::from_terms(
            nvars,
            terms
                .iter()
                .map(|(c, e)| (crate::scalar::int(*c), e.to_vec())),
        )
        .expect("exponent length must match nvars")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        Ok(self.mul_truncated(other, u32::MAX))
    }

    /// Product keeping only terms of total degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &Poly, max_degree: u32) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if da > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree() > max_degree {
                    continue;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        self.pow_truncated(e, u32::MAX)
    }

    pub fn pow_truncated(&self, e: u32, max_degree: u32) -> Poly {
        let mut acc = Poly::one(self.nvars).truncate(max_degree);
        for _ in 0..e {
            acc = acc.mul_truncated(self, max_degree);
        }
        acc
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter_degrees(|k| k == d)
    }

    /// Terms of total degree `<= max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Poly {
        self.filter_degrees(|k| k <= max_degree)
    }

    pub fn filter_degrees(&self, keep: impl Fn(u32) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m.degree()))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn partial(&self, index: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[index];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[index] -= 1;
            out.add_term(Monomial(ex), c * Scalar::from_integer(e.into()));
        }
        out
    }

    /// Composition `self(images[0], …, images[nvars-1])`, keeping only terms
    /// of degree `<= max_degree` in the image variables.
    pub fn substitute_truncated(&self, images: &[Poly], max_degree: u32) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::Dimension {
                expected: target,
                found: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target).truncate(max_degree), p.truncate(max_degree)])
            .collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone()).truncate(max_degree);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i]
                        .last()
                        .expect("nonempty")
                        .mul_truncated(&images[i], max_degree);
                    powers[i].push(next);
                }
                t = t.mul_truncated(&powers[i][e as usize], max_degree);
                if t.is_zero() {
                    break;
                }
            }
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, images: &[Poly]) -> Result<Poly> {
        self.substitute_truncated(images, u32::MAX)
    }

    /// Linear change of variables `x_i -> Σ_j m[i][j] y_j`.
    pub fn linear_substitute(&self, m: &crate::linalg::Matrix) -> Result<Poly> {
        if m.rows() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: m.rows(),
            });
        }
        let images: Vec<Poly> = (0..m.rows())
            .map(|i| {
                let mut p = Poly::zero(m.cols());
                for j in 0..m.cols() {
                    p.add_term(Monomial::var(m.cols(), j), m[(i, j)].clone());
                }
                p
            })
            .collect();
        self.substitute(&images)
    }

    /// Coefficient vector of a homogeneous polynomial against a list of
    /// monomial columns.
    pub fn coefficient_vector(&self, columns: &[Monomial]) -> Vec<Scalar> {
        columns.iter().map(|m| self.coeff_of(m)).collect()
    }

    /// Embeds into a ring with more variables: variable `i` becomes
    /// `positions[i]`.
    pub fn relabel(&self, nvars: usize, positions: &[usize]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[positions[i]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

/// Exact `add`, `sub` or `mul`.
pub fn arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

// Operator sugar. These panic on a variable-count mismatch; use `arith` or
// the `checked_*` methods for fallible arithmetic.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = *c < Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = m.degree() == 0;
            if !abs.is_one() || is_const {
                write!(f, "{}", abs)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "x{}", i)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn x() -> Poly {
        Poly::var(2, 0)
    }
    fn y() -> Poly {
        Poly::var(2, 1)
    }

    #[test]
    fn difference_of_squares() {
        let p = arith(&(&x() + &y()), &(&x() - &y()), ArithOp::Mul).unwrap();
        assert_eq!(p, &(&x() * &x()) - &(&y() * &y()));
    }

    #[test]
    fn additive_identity() {
        let p = &(&x() * &y()) + &Poly::constant(2, int(3));
        assert_eq!(arith(&p, &Poly::zero(2), ArithOp::Add).unwrap(), p);
    }

    #[test]
    fn monomial_expansion() {
        let p = &(&x() * &x()) + &(&y() * &y());
        let q = &p * &(&x() * &y());
        let expect = Poly::from_int_terms(2, &[(1, &[3, 1]), (1, &[1, 3])]);
        assert_eq!(q, expect);
    }

    #[test]
    fn mismatched_arity_is_an_error() {
        let err = arith(&Poly::var(2, 0), &Poly::var(3, 0), ArithOp::Add).unwrap_err();
        assert_eq!(err, Error::Dimension { expected: 2, found: 3 });
    }

    #[test]
    fn evaluation() {
        let p = &(&x() * &x()) + &(&y() * &y());
        assert_eq!(p.eval(&[int(1), int(2)]).unwrap(), int(5));
        let q = Poly::from_int_terms(2, &[(1, &[3, 1])]);
        assert_eq!(q.eval(&[int(2), frac(1, 2)]).unwrap(), int(4));
        let r = &q + &Poly::constant(2, int(-7));
        assert_eq!(r.eval(&[int(0), int(0)]).unwrap(), int(-7));
        assert!(p.eval(&[int(1)]).is_err());
    }

    #[test]
    fn grevlex_order() {
        // x^2 > xy > y^2 > x > y > 1 for two variables
        let mons = monomials_of_degree(2, 2);
        assert_eq!(
            mons,
            vec![
                Monomial::new(vec![2, 0]),
                Monomial::new(vec![1, 1]),
                Monomial::new(vec![0, 2])
            ]
        );
        // grevlex in three variables: x y^2 ... vs x^2 z: x^2 z < x y^2
        assert!(Monomial::new(vec![1, 2, 0]) > Monomial::new(vec![2, 0, 1]));
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(6, 5).len(), 252);
    }

    #[test]
    fn substitution_truncates() {
        // (x + y)^3 with y -> x^2, truncated at degree 4
        let p = (&x() + &y()).pow(3);
        let images = [Poly::var(1, 0), Poly::var(1, 0).pow(2)];
        let q = p.substitute_truncated(&images, 4).unwrap();
        // (t + t^2)^3 = t^3 + 3 t^4 + ...
        assert_eq!(q, Poly::from_int_terms(1, &[(1, &[3]), (3, &[4])]));
    }

    #[test]
    fn partials() {
        let p = Poly::from_int_terms(2, &[(1, &[3, 1]), (2, &[0, 2])]);
        assert_eq!(p.partial(0), Poly::from_int_terms(2, &[(3, &[2, 1])]));
        assert_eq!(p.partial(1), Poly::from_int_terms(2, &[(1, &[3, 0]), (4, &[0, 1])]));
    }
}
