//! Binary forms `Σ c_i s^(d-i) t^i`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::univariate::UPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    degree: u32,
    /// `coeffs[i]` multiplies `s^(degree-i) t^i`.
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    pub fn new(degree: u32, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != degree as usize + 1 {
            return Err(Error::Dimension {
                expected: degree as usize + 1,
                found: coeffs.len(),
            });
        }
        Ok(BinaryForm { degree, coeffs })
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Scalar::zero(); degree as usize + 1],
        }
    }

    /// From a homogeneous polynomial in two variables `(s, t)`; the zero
    /// polynomial needs the degree supplied.
    pub fn from_poly(p: &Poly, degree: u32) -> Result<Self> {
        if p.nvars() != 2 {
            return Err(Error::Dimension {
                expected: 2,
                found: p.nvars(),
            });
        }
        let mut f = BinaryForm::zero(degree);
        for (m, c) in p.terms() {
            if m.degree() != degree {
                return Err(Error::NotHomogeneous { index: 0 });
            }
            f.coeffs[m.exponents()[1] as usize] = c.clone();
        }
        Ok(f)
    }

    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero(2);
        for (i, c) in self.coeffs.iter().enumerate() {
            let i = i as u32;
            p.add_term(crate::poly::Monomial::new(vec![self.degree - i, i]), c.clone());
        }
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let d = self.degree as usize;
        let mut acc = Scalar::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..d - i {
                term *= s;
            }
            for _ in 0..i {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// `f(x) = F(1, x)`; roots of `F` in `P¹` other than `[0:1]`.
    pub fn dehomogenize(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `[0:1]` (i.e. `s = 0`).
    pub fn multiplicity_at_infinity(&self) -> usize {
        match self.dehomogenize().degree() {
            Some(k) => self.degree as usize - k,
            None => self.degree as usize,
        }
    }

    /// Multiplicities of the distinct roots in `P¹` over the algebraic
    /// closure, descending. Empty for the zero form.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = self.dehomogenize().root_multiplicities();
        let inf = self.multiplicity_at_infinity();
        if inf > 0 {
            out.push(inf);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}
