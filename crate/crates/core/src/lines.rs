//! Normal bundles of lines on hypersurfaces.
//!
//! For a line `L` on a hypersurface `X = {F = 0} ⊂ P^(n+1)`, the normal
//! bundle `N_{L/X}` is the kernel of `O(1)^n → O(d)` given by the partials
//! of `F` transverse to `L`. Its splitting type is recovered from the
//! dimensions of the graded pieces of the syzygy module of those partials.

use alloc::vec;
use alloc::vec::Vec;

use crate::binary::BinaryForm;
use crate::contact::LineSpec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{monomials_of_degree, Poly};
use crate::scalar::Scalar;

fn check_hypersurface(f: &Poly, line: &LineSpec) -> Result<u32> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous { index: 0 });
    }
    if line.base().len() != f.nvars() {
        return Err(Error::Dimension {
            expected: f.nvars(),
            found: line.base().len(),
        });
    }
    f.degree().ok_or_else(|| Error::Input("zero polynomial".into()))
}

/// Whether `F` vanishes identically on the line through `base` and
/// `base + direction`.
pub fn line_in_hypersurface(f: &Poly, line: &LineSpec) -> Result<bool> {
    check_hypersurface(f, line)?;
    Ok(line.restrict(f)?.is_zero())
}

/// The degrees `a_1 <= … <= a_(n-1)` with `N_{L/X} = ⊕ O(a_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub degrees: Vec<i64>,
}

impl SplittingType {
    pub fn sum(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `h⁰(N(m)) = Σ max(0, a_i + m + 1)`.
    pub fn h0(&self, m: i64) -> usize {
        self.degrees.iter().map(|a| (a + m + 1).max(0) as usize).sum()
    }
}

/// Completes the two points of the line to a basis of `Q^(N+1)` with
/// standard vectors; returned as the columns of a matrix.
fn adapted_basis(line: &LineSpec) -> Matrix {
    let nv = line.base().len();
    let mut basis = vec![line.base().to_vec(), line.direction().to_vec()];
    for i in 0..nv {
        let mut e = vec![Scalar::from_integer(0.into()); nv];
        e[i] = Scalar::from_integer(1.into());
        let mut trial = basis.clone();
        trial.push(e);
        if Matrix::from_rows(trial.clone()).rank() == trial.len() {
            basis = trial;
        }
    }
    Matrix::from_rows(basis).transpose()
}

/// Dimension of the space of tuples `(g_i)` of binary forms of degree `e`
/// with `Σ g_i · row_i = 0`.
fn syzygy_dimension(row: &[BinaryForm], e: i64) -> usize {
    if e < 0 {
        return 0;
    }
    let e = e as u32;
    let k = row.len();
    let d1 = row[0].degree();
    let src = monomials_of_degree(2, e);
    let dst = monomials_of_degree(2, e + d1);
    let mut m = Matrix::zeros(dst.len(), k * src.len());
    for (i, f) in row.iter().enumerate() {
        let fp = f.to_poly();
        for (j, mono) in src.iter().enumerate() {
            let prod = &fp * &Poly::monomial(mono.clone(), Scalar::from_integer(1.into()));
            for (r, target) in dst.iter().enumerate() {
                m[(r, i * src.len() + j)] = prod.coeff_of(target);
            }
        }
    }
    k * src.len() - m.rank()
}

/// Splitting type of the normal bundle of a line contained in the
/// hypersurface `F = 0` of `P^(n+1)`.
pub fn splitting_type(f: &Poly, line: &LineSpec) -> Result<SplittingType> {
    let d = check_hypersurface(f, line)? as i64;
    if !line_in_hypersurface(f, line)? {
        return Err(Error::LineNotContained);
    }
    let nv = f.nvars();
    if nv < 3 {
        return Err(Error::Input("a hypersurface containing a line needs at least three variables".into()));
    }
    let n = nv - 2;
    let g = f.linear_substitute(&adapted_basis(line))?;
    let mut restrict = vec![Poly::zero(2); nv];
    restrict[0] = Poly::var(2, 0);
    restrict[1] = Poly::var(2, 1);
    let row: Vec<BinaryForm> = (2..nv)
        .map(|i| BinaryForm::from_poly(&g.partial(i).substitute(&restrict)?, (d - 1) as u32))
        .collect::<Result<_>>()?;
    if row.iter().all(BinaryForm::is_zero) {
        return Err(Error::DegenerateRow);
    }
    let h = |m: i64| syzygy_dimension(&row, m + 1);
    // Δh(m) = #{i : a_i >= -m}
    let delta = |m: i64| h(m) as i64 - h(m - 1) as i64;
    let mut degrees = Vec::new();
    for j in -d - 1..=d + 1 {
        let count = delta(-j) - delta(-j - 1);
        if count < 0 {
            return Err(Error::Inconsistent("syzygy Hilbert function is not that of a bundle".into()));
        }
        degrees.extend(core::iter::repeat_n(j, count as usize));
    }
    let st = SplittingType { degrees };
    if st.degrees.len() != n - 1 {
        return Err(Error::Inconsistent("recovered rank differs from n - 1".into()));
    }
    for m in -d - 3..=d + 3 {
        if st.h0(m) != h(m) {
            return Err(Error::Inconsistent("splitting type does not reproduce the Hilbert function".into()));
        }
    }
    Ok(st)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoskunCheck {
    /// `Σ a_i = n - d`.
    pub sum_ok: bool,
    /// `a_1 < 0`: deformations of the line cannot cover `X`.
    pub a1_negative: bool,
    /// `d >= n + 1`, which forces `a_1 < 0`.
    pub covers_impossible: bool,
}

pub fn coskun_check(f: &Poly, line: &LineSpec) -> Result<(SplittingType, CoskunCheck)> {
    let st = splitting_type(f, line)?;
    let n = f.nvars() as i64 - 2;
    let d = f.degree().unwrap_or(0) as i64;
    let check = CoskunCheck {
        sum_ok: st.sum() == n - d,
        a1_negative: st.degrees.first().is_some_and(|&a| a < 0),
        covers_impossible: d > n,
    };
    if check.sum_ok && check.covers_impossible && !check.a1_negative {
        return Err(Error::Inconsistent("degree count forces a negative summand".into()));
    }
    Ok((st, check))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn line(p: &[i64], q: &[i64]) -> LineSpec {
        LineSpec::new(p.iter().map(|&v| int(v)).collect(), q.iter().map(|&v| int(v)).collect()).unwrap()
    }

    fn fermat_cubic() -> Poly {
        Poly::from_int_terms(4, &[(1, &[3, 0, 0, 0]), (1, &[0, 3, 0, 0]), (1, &[0, 0, 3, 0]), (1, &[0, 0, 0, 3])])
    }

    #[test]
    fn containment() {
        let q = Poly::from_int_terms(4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]);
        let l = line(&[1, 0, 0, 0], &[0, 1, 0, 0]);
        assert!(line_in_hypersurface(&q, &l).unwrap());
        let c = Poly::from_int_terms(4, &[(1, &[2, 0, 0, 0]), (1, &[0, 2, 0, 0])]);
        assert!(!line_in_hypersurface(&c, &l).unwrap());
        assert!(line_in_hypersurface(&fermat_cubic(), &line(&[1, -1, 0, 0], &[0, 0, 1, -1])).unwrap());
        let bad = Poly::from_int_terms(4, &[(1, &[1, 0, 0, 0]), (1, &[0, 2, 0, 0])]);
        assert_eq!(line_in_hypersurface(&bad, &l), Err(Error::NotHomogeneous { index: 0 }));
    }

    #[test]
    fn classical_splittings() {
        let q = Poly::from_int_terms(4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])]);
        assert_eq!(splitting_type(&q, &line(&[1, 0, 0, 0], &[0, 1, 0, 0])).unwrap().degrees, vec![0]);
        let (st, chk) = coskun_check(&fermat_cubic(), &line(&[1, -1, 0, 0], &[0, 0, 1, -1])).unwrap();
        assert_eq!(st.degrees, vec![-1]);
        assert!(chk.sum_ok && chk.a1_negative && chk.covers_impossible);
        // hyperplane x4 = 0 in P^4, n = 3
        let h = Poly::from_int_terms(5, &[(1, &[0, 0, 0, 0, 1])]);
        assert_eq!(splitting_type(&h, &line(&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0])).unwrap().degrees, vec![1, 1]);
    }

    #[test]
    fn not_contained() {
        let c = Poly::from_int_terms(4, &[(1, &[2, 0, 0, 0]), (1, &[0, 0, 2, 0])]);
        assert_eq!(splitting_type(&c, &line(&[0, 1, 0, 0], &[1, 0, 0, 0])), Err(Error::LineNotContained));
    }

    #[test]
    fn non_reduced_along_the_line() {
        let c = Poly::from_int_terms(4, &[(1, &[0, 0, 2, 0]), (1, &[0, 0, 0, 2])]);
        assert_eq!(splitting_type(&c, &line(&[1, 0, 0, 0], &[0, 1, 0, 0])), Err(Error::DegenerateRow));
    }
}
