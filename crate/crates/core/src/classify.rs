//! Predicted class of a codimension two variety satisfying the Fubini
//! hypothesis, with the evidence behind it, and generators for examples of
//! each class.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::contact::{ci_test_f4f5, fubini_test, CIWitness, FubiniReport};
use crate::error::{Error, Result};
use crate::jets::{
    chart_from_graph, chart_from_implicit, chart_from_parametrization, fundamental_forms, Chart, FundForms,
    VarietySpec,
};
use crate::linalg::Matrix;
use crate::pencils::{pencil_classify, pencil_extract, PencilClass, PencilTag};
use crate::poly::{Monomial, Poly};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremClass {
    CiTwoQuadrics,
    CurveTimesQuadric,
    ConeSegP1xP2,
    CurveTimesDegenerateGauss,
    ScrollPn1,
    QuadricHypersurface,
    Linear,
    Indeterminate,
}

impl TheoremClass {
    pub fn name(self) -> &'static str {
        match self {
            TheoremClass::CiTwoQuadrics => "CI_TWO_QUADRICS",
            TheoremClass::CurveTimesQuadric => "CURVE_TIMES_QUADRIC",
            TheoremClass::ConeSegP1xP2 => "CONE_SEG_P1xP2",
            TheoremClass::CurveTimesDegenerateGauss => "CURVE_TIMES_DEGENERATE_GAUSS",
            TheoremClass::ScrollPn1 => "SCROLL_PN1",
            TheoremClass::QuadricHypersurface => "QUADRIC_HYPERSURFACE",
            TheoremClass::Linear => "LINEAR",
            TheoremClass::Indeterminate => "INDETERMINATE",
        }
    }

    pub fn number(self) -> Option<u8> {
        Some(match self {
            TheoremClass::CiTwoQuadrics => 1,
            TheoremClass::CurveTimesQuadric => 2,
            TheoremClass::ConeSegP1xP2 => 3,
            TheoremClass::CurveTimesDegenerateGauss => 4,
            TheoremClass::ScrollPn1 => 5,
            TheoremClass::QuadricHypersurface => 6,
            TheoremClass::Linear => 7,
            TheoremClass::Indeterminate => return None,
        })
    }

    pub fn from_number(k: u8) -> Option<TheoremClass> {
        Some(match k {
            1 => TheoremClass::CiTwoQuadrics,
            2 => TheoremClass::CurveTimesQuadric,
            3 => TheoremClass::ConeSegP1xP2,
            4 => TheoremClass::CurveTimesDegenerateGauss,
            5 => TheoremClass::ScrollPn1,
            6 => TheoremClass::QuadricHypersurface,
            7 => TheoremClass::Linear,
            _ => return None,
        })
    }
}

/// The predicted class and everything it was derived from.
#[derive(Clone, Debug)]
pub struct Classification {
    pub class: TheoremClass,
    pub chart: Chart,
    pub forms: FundForms,
    pub fubini: FubiniReport,
    pub pencil: Option<PencilClass>,
    pub ci: Option<CIWitness>,
    /// Why the result is indeterminate; empty otherwise.
    pub diagnostics: Vec<String>,
}

pub fn theorem_classify(spec: &VarietySpec, point: &[Scalar], order: u32) -> Result<Classification> {
    let chart = chart_from_implicit(spec, point, order)?;
    classify_chart(chart, order)
}

pub fn classify_chart(chart: Chart, order: u32) -> Result<Classification> {
    if chart.c() > 2 {
        return Err(Error::Codimension(chart.c()));
    }
    if order < 3 {
        return Err(Error::OrderOutOfRange(order as usize));
    }
    let forms = fundamental_forms(&chart, order.min(5))?;
    let fubini = fubini_test(&forms)?;
    let mut diagnostics = Vec::new();
    let pencil = match pencil_classify(&pencil_extract(&forms)?) {
        Ok(p) => Some(p),
        Err(Error::Unrecognized(what)) => {
            diagnostics.push(format!("pencil not recognized: {}", what));
            None
        }
        Err(e) => return Err(e),
    };
    let ci = if fubini.holds && forms.order() >= 5 {
        Some(ci_test_f4f5(&forms, &fubini)?)
    } else {
        None
    };
    if !fubini.holds {
        diagnostics.push(format!(
            "Fubini hypothesis fails: |F_3| has residual dimension {} modulo the ideal of |F_2|",
            fubini.residual
        ));
    }
    let mut class = TheoremClass::Indeterminate;
    if let (true, Some(p)) = (fubini.holds, &pencil) {
        class = match p.tag {
            PencilTag::Zero => TheoremClass::Linear,
            PencilTag::SingleRank1 => TheoremClass::ScrollPn1,
            PencilTag::SingleRankGe2 => TheoremClass::QuadricHypersurface,
            PencilTag::TwoDouble => TheoremClass::CurveTimesQuadric,
            PencilTag::DegenerateSeg => TheoremClass::ConeSegP1xP2,
            PencilTag::DoublePlusTwo
            | PencilTag::Quadruple
            | PencilTag::TriplePlusOne
            | PencilTag::DegenerateSquares => TheoremClass::CurveTimesDegenerateGauss,
            PencilTag::FourDistinct => match &ci {
                Some(w) if w.passes => TheoremClass::CiTwoQuadrics,
                Some(_) => {
                    diagnostics.push("F_4 and F_5 are not those of a complete intersection of two quadrics".into());
                    TheoremClass::Indeterminate
                }
                None => {
                    diagnostics.push("the complete intersection test needs jets of order five".into());
                    TheoremClass::Indeterminate
                }
            },
        };
    }
    Ok(Classification {
        class,
        chart,
        forms,
        fubini,
        pencil,
        ci,
        diagnostics,
    })
}

/// Which pencil a class 4 chart carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Class4Variant {
    #[default]
    DoublePlusTwo,
    Quadruple,
    TriplePlusOne,
    Squares,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleParams {
    pub n: usize,
    pub r: Scalar,
    pub u: Scalar,
    pub v: Scalar,
    pub w: Scalar,
    pub lambda: Vec<Scalar>,
    pub rho: Vec<Scalar>,
    pub variant: Class4Variant,
}

impl ExampleParams {
    pub fn new(n: usize) -> Self {
        ExampleParams {
            n,
            r: Scalar::zero(),
            u: Scalar::zero(),
            v: Scalar::zero(),
            w: Scalar::zero(),
            lambda: (1..=n as i64).map(scalar::int).collect(),
            rho: Vec::new(),
            variant: Class4Variant::default(),
        }
    }

    fn rho_or_zero(&self) -> Result<Vec<Scalar>> {
        if self.rho.is_empty() {
            return Ok(vec![Scalar::zero(); self.n]);
        }
        if self.rho.len() != self.n {
            return Err(Error::InvalidParams(format!("rho needs {} entries", self.n)));
        }
        Ok(self.rho.clone())
    }
}

/// A generated example: either a projective variety with a point on it, or
/// a local chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Example {
    Spec { spec: VarietySpec, point: Vec<Scalar> },
    Chart(Chart),
}

impl Example {
    pub fn classify(&self, order: u32) -> Result<Classification> {
        match self {
            Example::Spec { spec, point } => theorem_classify(spec, point, order),
            Example::Chart(chart) => classify_chart(chart.clone(), order),
        }
    }
}

fn var(nvars: usize, i: usize) -> Poly {
    Poly::var(nvars, i)
}

fn sq(nvars: usize, i: usize) -> Poly {
    Poly::monomial(Monomial::var(nvars, i).mul(&Monomial::var(nvars, i)), Scalar::one())
}

fn e0(nvars: usize) -> Vec<Scalar> {
    let mut p = vec![Scalar::zero(); nvars];
    p[0] = Scalar::one();
    p
}

/// An example of the given class of the codimension two classification.
pub fn example_generate(class: u8, params: &ExampleParams) -> Result<Example> {
    let n = params.n;
    if n == 0 {
        return Err(Error::InvalidParams("dimension must be positive".into()));
    }
    match class {
        1 => class1(params),
        2 => {
            if n < 3 {
                return Err(Error::InvalidParams("class 2 needs n >= 3".into()));
            }
            let mut z1 = Poly::zero(n);
            for a in 0..n - 1 {
                z1 = &z1 + &sq(n, a);
            }
            let z2 = &sq(n, n - 1) + &(&sq(n, n - 1) * &var(n, n - 1)).scale(&params.r);
            Ok(Example::Chart(chart_from_graph(n, vec![z1, z2], 5)?))
        }
        3 => {
            if n < 3 {
                return Err(Error::InvalidParams("class 3 needs n >= 3".into()));
            }
            let nvars = n + 3;
            let minor = |i: usize, j: usize, k: usize, l: usize| &(&var(nvars, i) * &var(nvars, j)) - &(&var(nvars, k) * &var(nvars, l));
            let gens = vec![minor(0, 4, 1, 3), minor(0, 5, 2, 3), minor(1, 5, 2, 4)];
            let spec = VarietySpec::new(nvars, gens, Some("cone over Seg(P1 x P2)".into()))?;
            // rank one matrix [[1, R, U], [V, V R, V U]]; cone coordinates W
            let (r, u, v) = (&params.r, &params.u, &params.v);
            let mut point = vec![Scalar::one(), r.clone(), u.clone(), v.clone(), v * r, v * u];
            point.extend(core::iter::repeat_n(params.w.clone(), n - 3));
            Ok(Example::Spec { spec, point })
        }
        4 => class4(params),
        5 => {
            let z1 = sq(n, 0);
            let z2 = &(&sq(n, 0) * &var(n, 0)) + &(&sq(n, 0) * &var(n, n - 1)).scale(&params.r);
            Ok(Example::Chart(chart_from_graph(n, vec![z1, z2], 5)?))
        }
        6 => {
            let nvars = n + 3;
            let mu = if params.lambda.len() == n {
                params.lambda.clone()
            } else {
                vec![Scalar::one(); n]
            };
            if mu.iter().any(Zero::is_zero) {
                return Err(Error::InvalidParams("quadric coefficients must be nonzero".into()));
            }
            let mut q = &var(nvars, 0) * &var(nvars, n + 1);
            for (a, m) in mu.iter().enumerate() {
                q = &q - &sq(nvars, a + 1).scale(m);
            }
            let spec = VarietySpec::new(nvars, vec![var(nvars, n + 2), q], Some("quadric hypersurface".into()))?;
            Ok(Example::Spec { spec, point: e0(nvars) })
        }
        7 => {
            let nvars = n + 3;
            let spec = VarietySpec::new(nvars, vec![var(nvars, n + 1), var(nvars, n + 2)], Some("linear space".into()))?;
            Ok(Example::Spec { spec, point: e0(nvars) })
        }
        _ => Err(Error::InvalidParams(format!("no class {}", class))),
    }
}

fn class1(params: &ExampleParams) -> Result<Example> {
    let n = params.n;
    if params.lambda.len() != n {
        return Err(Error::InvalidParams(format!("lambda needs {} entries", n)));
    }
    for a in 0..n {
        for b in a + 1..n {
            if params.lambda[a] == params.lambda[b] {
                return Err(Error::InvalidParams("lambda must be pairwise distinct".into()));
            }
        }
    }
    let rho = params.rho_or_zero()?;
    let nvars = n + 3;
    let (x0, y1, y2) = (var(nvars, 0), var(nvars, n + 1), var(nvars, n + 2));
    let mut g1 = &(&x0 * &y1) + &(&y2 * &y2).scale(&params.r);
    let mut g2 = &x0 * &y2;
    for a in 0..n {
        let xa = var(nvars, a + 1);
        g1 = &g1 - &(&xa * &xa);
        g2 = &g2 - &(&xa * &xa).scale(&params.lambda[a]);
        g2 = &g2 - &(&xa * &y1).scale(&rho[a]);
    }
    g2 = &g2 + &(&y1 * &y1).scale(&params.w);
    g2 = &g2 - &(&y1 * &y2).scale(&params.v);
    g2 = &g2 - &(&y2 * &y2).scale(&params.u);
    let spec = VarietySpec::new(nvars, vec![g1, g2], Some("complete intersection of two quadrics".into()))?;
    Ok(Example::Spec { spec, point: e0(nvars) })
}

fn class4(params: &ExampleParams) -> Result<Example> {
    let n = params.n;
    let quad = |terms: &[(i64, usize, usize)]| {
        let mut p = Poly::zero(n);
        for &(c, i, j) in terms {
            let m = Monomial::var(n, i).mul(&Monomial::var(n, j));
            p.add_term(m, scalar::int(c));
        }
        p
    };
    let lam = params.lambda.first().cloned().unwrap_or_else(Scalar::one);
    let (f4, f5) = match (n, params.variant) {
        (3, Class4Variant::DoublePlusTwo) | (3, Class4Variant::Quadruple) => {
            let lam = if params.variant == Class4Variant::Quadruple {
                Scalar::zero()
            } else {
                if lam.is_zero() {
                    return Err(Error::InvalidParams("lambda must be nonzero".into()));
                }
                lam
            };
            // q4 = diag(0, 1, λ), q5 = [[0,1,0],[1,0,0],[0,0,1]], halved
            let f4 = &quad(&[(1, 1, 1)]) + &quad(&[(1, 2, 2)]).scale(&lam);
            (f4, quad(&[(2, 0, 1), (1, 2, 2)]))
        }
        (3, Class4Variant::TriplePlusOne) => {
            if lam.is_zero() {
                return Err(Error::InvalidParams("lambda must be nonzero".into()));
            }
            // q4 = [[0,0,λ],[0,λ,1],[λ,1,0]], q5 = [[0,0,1],[0,1,0],[1,0,1]]
            let f4 = &(&quad(&[(2, 0, 2)]) + &quad(&[(1, 1, 1)])).scale(&lam) + &quad(&[(2, 1, 2)]);
            (f4, quad(&[(2, 0, 2), (1, 1, 1), (1, 2, 2)]))
        }
        (_, Class4Variant::Squares) | (4.., _) if n >= 2 => (quad(&[(1, 0, 0)]), quad(&[(1, 1, 1)])),
        _ => return Err(Error::InvalidParams("class 4 needs n = 3, or n >= 2 for the squares pencil".into())),
    };
    // cubic terms in the ideal of |F_2| keep the Fubini hypothesis
    let rho = params.rho_or_zero()?;
    let mut lin = Poly::zero(n);
    for (a, r) in rho.iter().enumerate() {
        lin.add_term(Monomial::var(n, a), r.clone());
    }
    let f4 = &f4 + &(&lin * &f5);
    Ok(Example::Chart(chart_from_graph(n, vec![f4, f5], 5)?))
}

/// Projection centre used by [`seg_projection_example`], in the Plücker
/// order `p12, p13, p14, p15, p23, p24, p25, p34, p35, p45`.
pub const SEG_PROJECTION_CENTER: [i64; 10] = [0, 1, 2, -1, 3, 1, -2, 1, 2, 1];

/// Plücker coordinates of the affine cell of `G(2,5)` spanned by the rows
/// `(1, 0, a3, a4, a5)` and `(0, 1, b3, b4, b5)`, in variables
/// `(a3, a4, a5, b3, b4, b5)`.
pub fn grassmannian_cell() -> Vec<Poly> {
    let nv = 6;
    let a = |k: usize| Poly::var(nv, k - 3);
    let b = |k: usize| Poly::var(nv, k);
    let mut out = vec![Poly::one(nv)];
    for k in 3..=5 {
        out.push(b(k));
    }
    for k in 3..=5 {
        out.push(-&a(k));
    }
    for (k, l) in [(3, 4), (3, 5), (4, 5)] {
        out.push(&(&a(k) * &b(l)) - &(&a(l) * &b(k)));
    }
    out
}

/// Chart of the projection of `G(2,5) ⊂ P⁹` from [`SEG_PROJECTION_CENTER`]
/// to `P⁸`, at the image of the origin of the affine cell.
pub fn seg_projection_example() -> Result<Chart> {
    let cell = grassmannian_cell();
    let center: Vec<Scalar> = SEG_PROJECTION_CENTER.iter().map(|&c| scalar::int(c)).collect();
    // x - x45·c, then drop the last coordinate
    let coords: Vec<Poly> = (0..9).map(|i| &cell[i] - &cell[9].scale(&center[i])).collect();
    chart_from_parametrization(6, &coords, 5)
}

/// Intersection with the hyperplane `h · x = 0` through `point`, as a
/// variety in a `P^(N-1)` whose first coordinate vector is `point`.
pub fn linear_section(spec: &VarietySpec, point: &[Scalar], h: &[Scalar]) -> Result<(VarietySpec, Vec<Scalar>)> {
    let nv = spec.nvars();
    if h.len() != nv {
        return Err(Error::Dimension {
            expected: nv,
            found: h.len(),
        });
    }
    let dot: Scalar = h.iter().zip(point).map(|(a, b)| a * b).sum();
    if !dot.is_zero() {
        return Err(Error::Input("hyperplane does not contain the point".into()));
    }
    let mut basis = vec![point.to_vec()];
    for v in Matrix::from_rows(vec![h.to_vec()]).nullspace() {
        let mut trial = basis.clone();
        trial.push(v);
        if Matrix::from_rows(trial.clone()).rank() == trial.len() {
            basis = trial;
        }
    }
    let m = Matrix::from_rows(basis).transpose();
    let gens = spec
        .generators()
        .iter()
        .map(|g| g.linear_substitute(&m))
        .collect::<Result<Vec<_>>>()?;
    let section = VarietySpec::new(m.cols(), gens, spec.label.as_ref().map(|l| format!("{} (hyperplane section)", l)))?;
    Ok((section, e0(m.cols())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn class1_generators() {
        let mut p = ExampleParams::new(3);
        p.r = int(1);
        let Example::Spec { spec, .. } = example_generate(1, &p).unwrap() else {
            panic!("class 1 is a spec");
        };
        let g1 = Poly::from_int_terms(
            6,
            &[(1, &[1, 0, 0, 0, 1, 0]), (-1, &[0, 2, 0, 0, 0, 0]), (-1, &[0, 0, 2, 0, 0, 0]), (-1, &[0, 0, 0, 2, 0, 0]), (1, &[0, 0, 0, 0, 0, 2])],
        );
        let g2 = Poly::from_int_terms(
            6,
            &[(1, &[1, 0, 0, 0, 0, 1]), (-1, &[0, 2, 0, 0, 0, 0]), (-2, &[0, 0, 2, 0, 0, 0]), (-3, &[0, 0, 0, 2, 0, 0])],
        );
        assert_eq!(spec.generators(), &[g1, g2]);
    }

    #[test]
    fn class1_rejects_repeated_lambda() {
        let mut p = ExampleParams::new(3);
        p.lambda = vec![int(1), int(1), int(2)];
        assert!(matches!(example_generate(1, &p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn linear_and_segre_specs() {
        let Example::Spec { spec, .. } = example_generate(7, &ExampleParams::new(3)).unwrap() else {
            panic!("class 7 is a spec");
        };
        assert_eq!(spec.generators(), &[Poly::var(6, 4), Poly::var(6, 5)]);
        let Example::Spec { spec, .. } = example_generate(3, &ExampleParams::new(3)).unwrap() else {
            panic!("class 3 is a spec");
        };
        assert_eq!(spec.generators().len(), 3);
        assert!(spec.generators().iter().all(|g| g.degree() == Some(2) && g.len() == 2));
    }

    #[test]
    fn class1_is_a_complete_intersection() {
        let mut p = ExampleParams::new(3);
        p.r = int(1);
        let cls = example_generate(1, &p).unwrap().classify(5).unwrap();
        assert_eq!(cls.class, TheoremClass::CiTwoQuadrics);
        let sigma = cls.ci.unwrap().sigma.unwrap();
        assert_eq!(sigma[0][1][1], int(-1));
    }

    #[test]
    fn curve_times_quadric_chart() {
        let f4 = Poly::from_int_terms(3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0])]);
        let f5 = Poly::from_int_terms(3, &[(1, &[0, 0, 2]), (1, &[0, 0, 3])]);
        let cls = classify_chart(chart_from_graph(3, vec![f4, f5], 5).unwrap(), 5).unwrap();
        assert_eq!(cls.class, TheoremClass::CurveTimesQuadric);
    }

    #[test]
    fn fubini_failure_is_explained() {
        let f4 = Poly::from_int_terms(3, &[(1, &[2, 0, 0]), (1, &[0, 2, 0]), (1, &[0, 0, 2])]);
        let f5 = Poly::from_int_terms(3, &[(1, &[3, 0, 0]), (1, &[0, 1, 1])]);
        let cls = classify_chart(chart_from_graph(3, vec![f4, f5], 5).unwrap(), 5).unwrap();
        assert_eq!(cls.class, TheoremClass::Indeterminate);
        assert!(!cls.diagnostics.is_empty());
    }

    #[test]
    fn codimension_three_rejected() {
        let z = Poly::zero(2);
        let ch = chart_from_graph(2, vec![z.clone(), z.clone(), z], 5).unwrap();
        assert_eq!(classify_chart(ch, 5).err(), Some(Error::Codimension(3)));
    }
}
