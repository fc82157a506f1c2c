//! Pencils of quadrics `{sA + tB}`: extraction from `|F_2|`, simultaneous
//! diagonalization, base locus multiplicities and classification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::binary::BinaryForm;
use crate::error::{Error, Result};
use crate::jets::FundForms;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly};
use crate::scalar::{self, Scalar};
use crate::univariate::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPencil {
    a: Matrix,
    b: Matrix,
    span_dim: usize,
}

fn upper_entries(m: &Matrix) -> Vec<Scalar> {
    let n = m.rows();
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|ij| m[ij].clone()).collect()
}

impl QuadricPencil {
    /// The span of two symmetric matrices. When they are dependent, `a` is
    /// the nonzero one (if any) and `b` is zero.
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if !a.is_square() || a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::Dimension {
                expected: a.rows(),
                found: b.rows(),
            });
        }
        if !a.is_symmetric() || !b.is_symmetric() {
            return Err(Error::Input("pencil members must be symmetric".into()));
        }
        let span_dim = Matrix::from_rows(vec![upper_entries(&a), upper_entries(&b)]).rank();
        let n = a.rows();
        Ok(match span_dim {
            2 => QuadricPencil { a, b, span_dim },
            1 => {
                let a = if a.is_zero() { b } else { a };
                QuadricPencil {
                    a,
                    b: Matrix::zeros(n, n),
                    span_dim,
                }
            }
            _ => QuadricPencil {
                a,
                b,
                span_dim: 0,
            },
        })
    }

    pub fn from_forms(p: &Poly, q: &Poly) -> Result<Self> {
        QuadricPencil::new(Matrix::from_quadratic_form(p)?, Matrix::from_quadratic_form(q)?)
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn span_dim(&self) -> usize {
        self.span_dim
    }

    pub fn member(&self, s: &Scalar, t: &Scalar) -> Matrix {
        self.a.combine(s, &self.b, t)
    }

    /// `det(sA + tB)` as a binary form of degree `n`.
    pub fn discriminant(&self) -> BinaryForm {
        let n = self.n();
        let xs: Vec<Scalar> = (0..=n as i64).map(scalar::int).collect();
        let ys: Vec<Scalar> = xs
            .iter()
            .map(|x| self.member(&Scalar::one(), x).det())
            .collect();
        let g = UPoly::interpolate(&xs, &ys);
        let mut coeffs = g.coeffs().to_vec();
        coeffs.resize(n + 1, Scalar::zero());
        BinaryForm::new(n as u32, coeffs).expect("degree n")
    }

    /// The same pencil after the congruence `x = P y`.
    pub fn congruence(&self, p: &Matrix) -> Result<QuadricPencil> {
        QuadricPencil::new(self.a.congruence(p), self.b.congruence(p))
    }
}

/// `|F_2|` as a pencil. Codimension above two has no pencil.
pub fn pencil_extract(ff: &FundForms) -> Result<QuadricPencil> {
    let n = ff.n();
    match ff.c() {
        0 => QuadricPencil::new(Matrix::zeros(n, n), Matrix::zeros(n, n)),
        1 => QuadricPencil::new(ff.quadric_matrix(0), Matrix::zeros(n, n)),
        2 => QuadricPencil::new(ff.quadric_matrix(0), ff.quadric_matrix(1)),
        c => Err(Error::Codimension(c)),
    }
}

/// Simultaneous diagonalization over the rationals.
///
/// Positive definiteness is not available over ℚ, so instead of `PᵀAP = Id`
/// this returns `Pᵀ A' P = diag(d)` and `Pᵀ B P = diag(d)·diag(λ)` for the
/// first invertible member `A' = A + μB`, `μ ∈ {0, 1, -1, 2, -2, …}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilNormalization {
    pub shift: Scalar,
    pub lambda: Vec<Scalar>,
    pub diagonal: Vec<Scalar>,
    pub transform: Matrix,
}

impl PencilNormalization {
    /// `λ_a - λ_b`.
    pub fn lambda_diff(&self, a: usize, b: usize) -> Scalar {
        &self.lambda[a] - &self.lambda[b]
    }
}

/// `Pᵀ M P = diag(d)` for a symmetric `M`.
pub fn diagonalize_symmetric(m: &Matrix) -> (Matrix, Vec<Scalar>) {
    let n = m.rows();
    let mut a = m.clone();
    let mut p = Matrix::identity(n);
    // apply the column operation col_i += f·col_j to p and the congruence to a
    let add = |a: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Scalar| {
        for r in 0..n {
            let v = &p[(r, i)] + f * &p[(r, j)];
            p[(r, i)] = v;
        }
        for r in 0..n {
            let v = &a[(r, i)] + f * &a[(r, j)];
            a[(r, i)] = v;
        }
        for c in 0..n {
            let v = &a[(i, c)] + f * &a[(j, c)];
            a[(i, c)] = v;
        }
    };
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                add(&mut a, &mut p, k, j, &Scalar::one());
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // a[k][k] + 2 a[k][j] + a[j][j] = 2 a[k][j] != 0
                add(&mut a, &mut p, k, j, &Scalar::one());
            }
        }
        if a[(k, k)].is_zero() {
            continue;
        }
        let piv = a[(k, k)].clone();
        for j in k + 1..n {
            if a[(k, j)].is_zero() {
                continue;
            }
            let f = -(&a[(k, j)] / &piv);
            add(&mut a, &mut p, j, k, &f);
        }
    }
    let d = (0..n).map(|i| a[(i, i)].clone()).collect();
    (p, d)
}

fn shifts() -> impl Iterator<Item = Scalar> {
    (0..).map(|i: i64| scalar::int(if i % 2 == 1 { i / 2 + 1 } else { -(i / 2) }))
}

pub fn pencil_normalize(p: &QuadricPencil) -> Result<PencilNormalization> {
    if p.span_dim != 2 {
        return Err(Error::Contract("normalization needs a pencil of dimension two".into()));
    }
    let n = p.n();
    let (mu, a1) = shifts()
        .take(n + 2)
        .map(|mu| (mu.clone(), p.member(&Scalar::one(), &mu)))
        .find(|(_, m)| !m.det().is_zero())
        .ok_or(Error::NoInvertibleMember)?;
    // χ(x) = det(B - x A')
    let xs: Vec<Scalar> = (0..=n as i64).map(scalar::int).collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|x| p.b.combine(&Scalar::one(), &a1, &-x.clone()).det())
        .collect();
    let charpoly = UPoly::interpolate(&xs, &ys);
    let mut eigen: Vec<(Scalar, usize)> = Vec::new();
    for (f, mult) in charpoly.square_free() {
        let roots = f.rational_roots().unwrap_or_default();
        if roots.len() < f.degree().unwrap_or(0) {
            return Err(Error::IrrationalEigenvalues { charpoly });
        }
        eigen.extend(roots.into_iter().map(|r| (r, mult)));
    }
    eigen.sort();
    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    let mut lambda = Vec::with_capacity(n);
    let mut diagonal = Vec::with_capacity(n);
    for (l, mult) in eigen {
        let kernel = p.b.combine(&Scalar::one(), &a1, &-l.clone()).nullspace();
        if kernel.len() != mult {
            return Err(Error::NotDiagonalizable);
        }
        let v = Matrix::from_rows(kernel).transpose();
        let (q, d) = diagonalize_symmetric(&a1.congruence(&v));
        let vq = v.mul(&q);
        for j in 0..mult {
            columns.push(vq.column(j));
            lambda.push(l.clone());
            diagonal.push(d[j].clone());
        }
    }
    let transform = Matrix::from_rows(columns).transpose();
    Ok(PencilNormalization {
        shift: mu,
        lambda,
        diagonal,
        transform,
    })
}

/// Deterministic invertible integer matrices with entries in `[-60, 60]`.
fn shears(n: usize, count: usize) -> Vec<Matrix> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        ((state >> 33) % 121) as i64 - 60
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| scalar::int(next())).collect()).collect();
        let m = Matrix::from_rows(rows);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

/// Splits a ternary quadratic form as `a2 z² + a1 z + a0` with `a_i` binary
/// forms in `(x, y)`.
fn split_in_z(m: &Matrix) -> [Poly; 3] {
    let q = m.quadratic_form();
    let mut parts = [Poly::zero(2), Poly::zero(2), Poly::zero(2)];
    for (mono, c) in q.terms() {
        let e = mono.exponents();
        parts[e[2] as usize].add_term(Monomial::new(vec![e[0], e[1]]), c.clone());
    }
    [parts[2].clone(), parts[1].clone(), parts[0].clone()]
}

/// Intersection multiplicities of the base points of a pencil of conics,
/// as a partition of four in descending order.
pub fn base_locus_multiplicities(p: &QuadricPencil) -> Result<Vec<usize>> {
    if p.n() != 3 {
        return Err(Error::Dimension {
            expected: 3,
            found: p.n(),
        });
    }
    if p.span_dim != 2 {
        return Err(Error::Contract("base locus needs a pencil of dimension two".into()));
    }
    if p.discriminant().is_zero() {
        return Err(Error::DegeneratePencil);
    }
    let mut best: Option<Vec<usize>> = None;
    let mut good = 0;
    for s in shears(3, 6) {
        if good == 3 {
            break;
        }
        let [a2, a1, a0] = split_in_z(&p.a.congruence(&s));
        let [b2, b1, b0] = split_in_z(&p.b.congruence(&s));
        if a2.is_zero() && b2.is_zero() {
            continue;
        }
        let x = &(&a2 * &b0) - &(&a0 * &b2);
        let y = &(&a2 * &b1) - &(&a1 * &b2);
        let z = &(&a1 * &b0) - &(&a0 * &b1);
        let res = &(&x * &x) - &(&y * &z);
        if res.is_zero() {
            continue;
        }
        good += 1;
        let parts = BinaryForm::from_poly(&res, 4)?.root_multiplicities();
        if parts.iter().sum::<usize>() != 4 {
            return Err(Error::Inconsistent(format!("multiplicities {:?} do not sum to four", parts)));
        }
        if best.as_ref().is_none_or(|b| parts.len() > b.len()) {
            best = Some(parts);
        }
    }
    best.ok_or(Error::PositiveDimensionalBase)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PencilTag {
    FourDistinct,
    TwoDouble,
    DoublePlusTwo,
    Quadruple,
    TriplePlusOne,
    DegenerateSeg,
    DegenerateSquares,
    SingleRankGe2,
    SingleRank1,
    Zero,
}

impl PencilTag {
    pub fn name(self) -> &'static str {
        match self {
            PencilTag::FourDistinct => "FOUR_DISTINCT",
            PencilTag::TwoDouble => "TWO_DOUBLE",
            PencilTag::DoublePlusTwo => "DOUBLE_PLUS_TWO",
            PencilTag::Quadruple => "QUADRUPLE",
            PencilTag::TriplePlusOne => "TRIPLE_PLUS_ONE",
            PencilTag::DegenerateSeg => "DEGENERATE_SEG",
            PencilTag::DegenerateSquares => "DEGENERATE_SQUARES",
            PencilTag::SingleRankGe2 => "SINGLE_RANK_GE2",
            PencilTag::SingleRank1 => "SINGLE_RANK1",
            PencilTag::Zero => "ZERO",
        }
    }

    /// Roman numeral of the case, for the seven pencil cases.
    pub fn case(self) -> Option<&'static str> {
        Some(match self {
            PencilTag::FourDistinct => "i",
            PencilTag::TwoDouble => "ii",
            PencilTag::DoublePlusTwo => "iii",
            PencilTag::Quadruple => "iv",
            PencilTag::TriplePlusOne => "v",
            PencilTag::DegenerateSeg => "vi",
            PencilTag::DegenerateSquares => "vii",
            _ => return None,
        })
    }

    pub fn from_partition(parts: &[usize]) -> Option<PencilTag> {
        Some(match parts {
            [1, 1, 1, 1] => PencilTag::FourDistinct,
            [2, 2] => PencilTag::TwoDouble,
            [2, 1, 1] => PencilTag::DoublePlusTwo,
            [4] => PencilTag::Quadruple,
            [3, 1] => PencilTag::TriplePlusOne,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilClass {
    pub tag: PencilTag,
    /// Base locus multiplicities, for pencils of conics with a smooth member.
    pub partition: Option<Vec<usize>>,
    /// No member of the span is a smooth quadric.
    pub degenerate_dual: bool,
}

/// Restriction to a complement of the common kernel of `A` and `B`,
/// spanned by standard basis vectors.
fn reduce_common_kernel(p: &QuadricPencil) -> QuadricPencil {
    let n = p.n();
    let kernel = p.a.vstack(&p.b).nullspace();
    let mut rows = kernel.clone();
    let mut keep = Vec::new();
    for i in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        let mut trial = rows.clone();
        trial.push(e);
        if Matrix::from_rows(trial.clone()).rank() > rows.len() {
            rows = trial;
            keep.push(i);
        }
    }
    QuadricPencil::new(p.a.submatrix(&keep, &keep), p.b.submatrix(&keep, &keep)).expect("principal submatrices")
}

/// Classifies the span of `A` and `B`. Configurations outside the
/// implemented taxonomy give [`Error::Unrecognized`].
pub fn pencil_classify(p: &QuadricPencil) -> Result<PencilClass> {
    let n = p.n();
    match p.span_dim {
        0 => {
            return Ok(PencilClass {
                tag: PencilTag::Zero,
                partition: None,
                degenerate_dual: true,
            })
        }
        1 => {
            let r = p.a.rank();
            return Ok(PencilClass {
                tag: if r == 1 {
                    PencilTag::SingleRank1
                } else {
                    PencilTag::SingleRankGe2
                },
                partition: None,
                degenerate_dual: r < n,
            });
        }
        _ => {}
    }
    let disc = p.discriminant();
    if disc.is_zero() {
        return classify_degenerate(p);
    }
    let unrecognized = |what: String| Err(Error::Unrecognized(what));
    if n == 3 {
        let parts = base_locus_multiplicities(p)?;
        let Some(tag) = PencilTag::from_partition(&parts) else {
            return unrecognized(format!("base locus partition {:?}", parts));
        };
        return Ok(PencilClass {
            tag,
            partition: Some(parts),
            degenerate_dual: false,
        });
    }
    if n < 3 {
        return unrecognized(format!("pencil of quadrics in {} variables", n));
    }
    let mults = disc.root_multiplicities();
    if mults.iter().all(|&m| m == 1) {
        return Ok(PencilClass {
            tag: PencilTag::FourDistinct,
            partition: None,
            degenerate_dual: false,
        });
    }
    if mults == [n - 1, 1] {
        // the (n-1)-fold root is rational; find it and test the rank
        let root = if disc.multiplicity_at_infinity() == n - 1 {
            (Scalar::zero(), Scalar::one())
        } else {
            let f = disc
                .dehomogenize()
                .square_free()
                .into_iter()
                .find(|(_, m)| *m == n - 1)
                .map(|(f, _)| f)
                .expect("factor of multiplicity n-1");
            (Scalar::one(), -(&f.coeffs()[0] / &f.coeffs()[1]))
        };
        if p.member(&root.0, &root.1).rank() == 1 {
            return Ok(PencilClass {
                tag: PencilTag::TwoDouble,
                partition: None,
                degenerate_dual: false,
            });
        }
    }
    unrecognized(format!("eigenvalue multiplicities {:?} in {} variables", mults, n))
}

fn classify_degenerate(p: &QuadricPencil) -> Result<PencilClass> {
    let r = reduce_common_kernel(p);
    let m = r.n();
    let disc = r.discriminant();
    let tag = if m == 3 && disc.is_zero() {
        Some(PencilTag::DegenerateSeg)
    } else if m == 2 && r.span_dim == 2 && disc.root_multiplicities() == [1, 1] {
        Some(PencilTag::DegenerateSquares)
    } else {
        None
    };
    match tag {
        Some(tag) => Ok(PencilClass {
            tag,
            partition: None,
            degenerate_dual: true,
        }),
        None => Err(Error::Unrecognized(format!(
            "degenerate pencil with {} essential variables",
            m
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(rows)
    }

    fn pencil(a: &[&[i64]], b: &[&[i64]]) -> QuadricPencil {
        QuadricPencil::new(m(a), m(b)).unwrap()
    }

    fn forms(p: &[(i64, &[u32])], q: &[(i64, &[u32])]) -> QuadricPencil {
        QuadricPencil::from_forms(&Poly::from_int_terms(3, p), &Poly::from_int_terms(3, q)).unwrap()
    }

    #[test]
    fn span_dimension() {
        let id = [&[1, 0, 0][..], &[0, 1, 0], &[0, 0, 1]];
        assert_eq!(pencil(&id, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).span_dim(), 2);
        assert_eq!(pencil(&id, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).span_dim(), 1);
        let z = [&[0, 0, 0][..], &[0, 0, 0], &[0, 0, 0]];
        assert_eq!(pencil(&z, &z).span_dim(), 0);
    }

    #[test]
    fn normalize_distinct() {
        let p = pencil(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let nf = pencil_normalize(&p).unwrap();
        assert_eq!(nf.lambda, vec![int(1), int(2), int(3)]);
        assert_eq!(nf.transform, Matrix::identity(3));
        assert_eq!(nf.lambda_diff(2, 0), int(2));
    }

    #[test]
    fn normalize_repeated() {
        let p = pencil(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let nf = pencil_normalize(&p).unwrap();
        assert_eq!(nf.lambda, vec![int(-1), int(1), int(1)]);
        let t = &nf.transform;
        assert_eq!(p.a().congruence(t), Matrix::diagonal(&nf.diagonal));
        let dl: Vec<Scalar> = nf.diagonal.iter().zip(&nf.lambda).map(|(d, l)| d * l).collect();
        assert_eq!(p.b().congruence(t), Matrix::diagonal(&dl));
    }

    #[test]
    fn normalize_failures() {
        // Jordan block: A = [[0,1],[1,0]], B = [[1,0],[0,0]] relative to A
        let p = pencil(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]], &[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(pencil_normalize(&p), Err(Error::NotDiagonalizable));
        let p = pencil(&[&[1, 0], &[0, 1]], &[&[0, 2], &[2, 0]]);
        assert!(pencil_normalize(&p).is_ok());
        let p = pencil(&[&[1, 0], &[0, 2]], &[&[0, 1], &[1, 0]]);
        assert!(matches!(pencil_normalize(&p), Err(Error::IrrationalEigenvalues { .. })));
        let p = pencil(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]], &[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(pencil_normalize(&p), Err(Error::NoInvertibleMember));
    }

    #[test]
    fn base_locus_examples() {
        let p = forms(&[(1, &[2, 0, 0]), (-1, &[0, 0, 2])], &[(1, &[0, 2, 0]), (-1, &[0, 0, 2])]);
        assert_eq!(base_locus_multiplicities(&p).unwrap(), vec![1, 1, 1, 1]);
        let p = forms(&[(1, &[1, 1, 0])], &[(1, &[0, 0, 2])]);
        assert_eq!(base_locus_multiplicities(&p).unwrap(), vec![2, 2]);
        // xy and x^2 - y^2 span a cone pencil: every member is singular
        let p = forms(&[(1, &[1, 1, 0])], &[(1, &[2, 0, 0]), (-1, &[0, 2, 0])]);
        assert_eq!(base_locus_multiplicities(&p), Err(Error::DegeneratePencil));
        // a smooth conic osculating to order four: y z - x^2 and y^2
        let p = forms(&[(1, &[0, 1, 1]), (-1, &[2, 0, 0])], &[(1, &[0, 2, 0])]);
        assert_eq!(base_locus_multiplicities(&p).unwrap(), vec![4]);
    }

    #[test]
    fn classification_of_normal_forms() {
        let c = |a: &[&[i64]], b: &[&[i64]]| pencil_classify(&pencil(a, b)).unwrap();
        assert_eq!(c(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]).tag, PencilTag::FourDistinct);
        let iii = c(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(iii.tag, PencilTag::DoublePlusTwo);
        assert_eq!(iii.partition, Some(vec![2, 1, 1]));
        assert_eq!(c(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]], &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).tag, PencilTag::Quadruple);
        assert_eq!(c(&[&[0, 0, 1], &[0, 1, 1], &[1, 1, 0]], &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]]).tag, PencilTag::TriplePlusOne);
        assert_eq!(c(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]], &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]]).tag, PencilTag::TwoDouble);
        let seg = forms(&[(1, &[1, 0, 1])], &[(1, &[0, 1, 1])]);
        let cls = pencil_classify(&seg).unwrap();
        assert_eq!(cls.tag, PencilTag::DegenerateSeg);
        assert!(cls.degenerate_dual);
        let sq = forms(&[(1, &[2, 0, 0])], &[(1, &[0, 2, 0])]);
        assert_eq!(pencil_classify(&sq).unwrap().tag, PencilTag::DegenerateSquares);
    }

    #[test]
    fn printed_triple_point_matrices_have_a_double_root() {
        // q5 with a zero in the middle entry gives det = -sλ(sλ + t)^2
        let p = pencil(&[&[0, 0, 1], &[0, 1, 1], &[1, 1, 0]], &[&[0, 0, 1], &[0, 0, 0], &[1, 0, 1]]);
        assert_eq!(pencil_classify(&p).unwrap().tag, PencilTag::DoublePlusTwo);
    }

    #[test]
    fn single_quadrics_and_zero() {
        let one = pencil(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]], &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        let cls = pencil_classify(&one).unwrap();
        assert_eq!((cls.tag, cls.degenerate_dual), (PencilTag::SingleRank1, true));
        let full = pencil(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let cls = pencil_classify(&full).unwrap();
        assert_eq!((cls.tag, cls.degenerate_dual), (PencilTag::SingleRankGe2, false));
        let cone = pencil(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]], &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(pencil_classify(&cone).unwrap().degenerate_dual);
        let z = [&[0, 0][..], &[0, 0]];
        assert_eq!(pencil_classify(&pencil(&z, &z)).unwrap().tag, PencilTag::Zero);
    }

    #[test]
    fn higher_dimensional_pencils() {
        let id: Vec<&[i64]> = vec![&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]];
        let c = |b: &[&[i64]]| pencil_classify(&pencil(&id, b));
        assert_eq!(c(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, 3, 0], &[0, 0, 0, 4]]).unwrap().tag, PencilTag::FourDistinct);
        assert_eq!(c(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]]).unwrap().tag, PencilTag::TwoDouble);
        assert!(matches!(
            c(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
            Err(Error::Unrecognized(_))
        ));
        let sq = QuadricPencil::from_forms(
            &Poly::from_int_terms(4, &[(1, &[2, 0, 0, 0])]),
            &Poly::from_int_terms(4, &[(1, &[0, 2, 0, 0])]),
        )
        .unwrap();
        assert_eq!(pencil_classify(&sq).unwrap().tag, PencilTag::DegenerateSquares);
        let seg = QuadricPencil::from_forms(
            &Poly::from_int_terms(5, &[(1, &[1, 0, 1, 0, 0])]),
            &Poly::from_int_terms(5, &[(1, &[0, 1, 1, 0, 0])]),
        )
        .unwrap();
        assert_eq!(pencil_classify(&seg).unwrap().tag, PencilTag::DegenerateSeg);
    }
}
