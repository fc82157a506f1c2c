//! Dense univariate polynomials over the rationals: gcd, square-free
//! decomposition, rational roots and interpolation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Scalar;

/// Coefficients from the constant term upwards; never has trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    coeffs: Vec<Scalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        UPoly::new(vec![c])
    }

    /// `x - root`
    pub fn linear(root: &Scalar) -> Self {
        UPoly::new(vec![-root.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Scalar::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().expect("nonempty") / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UPoly::new(quot), UPoly::new(rem))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&(Scalar::one() / self.leading()))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: pairs `(factor, multiplicity)` with
    /// monic, pairwise coprime, square-free factors of positive degree, whose
    /// product (with multiplicities) equals `self` up to a constant.
    pub fn square_free(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().is_none_or(|d| d == 0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().is_some_and(|deg| deg > 0) {
            let a = b.gcd(&d);
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Multiplicity pattern of the complex roots, one entry per distinct
    /// root, sorted descending.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (f, m) in self.square_free() {
            for _ in 0..f.degree().unwrap_or(0) {
                out.push(m);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Distinct rational roots, ascending. `None` if a coefficient is too
    /// large to enumerate candidate divisors.
    pub fn rational_roots(&self) -> Option<Vec<Scalar>> {
        let mut roots = Vec::new();
        if self.degree().is_none_or(|d| d == 0) {
            return Some(roots);
        }
        // clear denominators
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        if ints[0].is_zero() {
            roots.push(Scalar::zero());
            while ints.first().is_some_and(Zero::is_zero) {
                ints.remove(0);
            }
        }
        if ints.len() > 1 {
            let a0 = divisors(&ints[0])?;
            let an = divisors(ints.last().expect("nonempty"))?;
            let reduced = UPoly::new(ints.iter().map(|v| Scalar::from_integer(v.clone())).collect());
            for p in &a0 {
                for q in &an {
                    for sign in [1i64, -1] {
                        let cand = Scalar::new(p * BigInt::from(sign), q.clone());
                        if reduced.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }

    /// Lagrange interpolation through `(xs[i], ys[i])` with distinct `xs`.
    pub fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> UPoly {
        assert_eq!(xs.len(), ys.len());
        let mut acc = UPoly::zero();
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UPoly::constant(Scalar::one());
            let mut denom = Scalar::one();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&UPoly::linear(xj));
                    denom *= xi - xj;
                }
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }
}

/// Positive divisors of a nonzero integer fitting in `u64`.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.checked_mul(d)? <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d != n / d {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 10_000_000 {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*x", c)?,
                _ => write!(f, "({})*x^{}", c, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn up(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x^2+1)
        let f = up(&[-1, 1]).mul(&up(&[-1, 1])).mul(&up(&[-1, 1]));
        let g = up(&[2, 1]).mul(&up(&[2, 1]));
        let h = up(&[1, 0, 1]);
        let p = f.mul(&g).mul(&h).scale(&int(5));
        let sf = p.square_free();
        assert_eq!(
            sf,
            vec![(up(&[1, 0, 1]), 1), (up(&[2, 1]), 2), (up(&[-1, 1]), 3)]
        );
        assert_eq!(p.root_multiplicities(), vec![3, 2, 1, 1]);
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3) x
        let p = up(&[-1, 2]).mul(&up(&[3, 1])).mul(&up(&[0, 1]));
        assert_eq!(p.rational_roots().unwrap(), vec![int(-3), int(0), frac(1, 2)]);
        assert!(up(&[-2, 0, 1]).rational_roots().unwrap().is_empty());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = up(&[3, -1, 0, 2]);
        let xs: Vec<Scalar> = (0..4).map(int).collect();
        let ys: Vec<Scalar> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UPoly::interpolate(&xs, &ys), p);
    }

    #[test]
    fn division() {
        let (q, r) = up(&[1, 0, 0, 1]).div_rem(&up(&[1, 1]));
        assert_eq!(q, up(&[1, -1, 1]));
        assert!(r.is_zero());
    }
}
