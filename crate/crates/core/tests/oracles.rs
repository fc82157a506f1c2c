use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use projdiff_core::classify::{example_generate, linear_section, seg_projection_example, Example, ExampleParams, TheoremClass};
use projdiff_core::contact::{ci_test_f4f5, fubini_test};
use projdiff_core::jets::{fundamental_forms, FundForms};
use projdiff_core::pencils::{base_locus_multiplicities, pencil_normalize, QuadricPencil};
use projdiff_core::scalar::{frac, int};
use projdiff_core::univariate::UPoly;
use projdiff_core::{Matrix, Scalar};

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-4..=4))).collect()).collect();
        let m = Matrix::from_rows(rows);
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn multiplicity(p: &UPoly, root: &Scalar) -> usize {
    let lin = UPoly::linear(root);
    let mut q = p.clone();
    let mut m = 0;
    loop {
        let (quo, rem) = q.div_rem(&lin);
        if !rem.is_zero() {
            return m;
        }
        q = quo;
        m += 1;
    }
}

/// Base-point multiplicities read off the Segre symbol: root multiplicities
/// of the discriminant together with the rank of the member at each root.
fn segre_partition(p: &QuadricPencil) -> Vec<usize> {
    let disc = p.discriminant();
    let mut roots: Vec<(usize, Matrix)> = Vec::new();
    let inf = disc.multiplicity_at_infinity();
    if inf > 0 {
        roots.push((inf, p.b().clone()));
    }
    let affine = disc.dehomogenize();
    for r in affine.rational_roots().expect("rational roots") {
        roots.push((multiplicity(&affine, &r), p.member(&Scalar::one(), &r)));
    }
    let (m, member) = roots.into_iter().max_by_key(|(m, _)| *m).expect("a root");
    match (m, member.rank()) {
        (1, _) => vec![1, 1, 1, 1],
        (2, 1) => vec![2, 2],
        (2, _) => vec![2, 1, 1],
        (3, 2) => vec![3, 1],
        (3, _) => vec![4],
        _ => panic!("unexpected root multiplicity {}", m),
    }
}

fn nondegenerate_pencils() -> Vec<(Matrix, Matrix)> {
    let m = Matrix::from_i64;
    vec![
        (m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])),
        (m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]), m(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]])),
        (m(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 2]]), m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
        (m(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]), m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])),
        (m(&[&[0, 0, 1], &[0, 1, 1], &[1, 1, 0]]), m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 1]])),
        (m(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]]), m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]])),
    ]
}

#[test]
fn base_locus_agrees_with_segre_symbol() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (a, b) in nondegenerate_pencils() {
        for _ in 0..6 {
            let p = random_invertible(&mut rng, 3);
            let s: i64 = rng.gen_range(1..=3);
            let t: i64 = rng.gen_range(-3..=3);
            let a2 = a.congruence(&p);
            let b2 = b.congruence(&p).combine(&int(s), &a2, &int(t));
            let pencil = QuadricPencil::new(a2, b2).unwrap();
            assert_eq!(base_locus_multiplicities(&pencil).unwrap(), segre_partition(&pencil));
        }
    }
}

#[test]
fn normalization_is_a_congruence() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let lambda = [int(1), int(-2), frac(1, 3), int(5)];
    for _ in 0..8 {
        let p = random_invertible(&mut rng, 4);
        let a = Matrix::identity(4).congruence(&p);
        let b = Matrix::diagonal(&lambda).congruence(&p);
        let norm = pencil_normalize(&QuadricPencil::new(a.clone(), b.clone()).unwrap()).unwrap();
        let shifted = a.combine(&Scalar::one(), &b, &norm.shift);
        let t = &norm.transform;
        assert_eq!(shifted.congruence(t), Matrix::diagonal(&norm.diagonal));
        let scaled: Vec<Scalar> = norm.diagonal.iter().zip(&norm.lambda).map(|(d, l)| d * l).collect();
        assert_eq!(b.congruence(t), Matrix::diagonal(&scaled));
        for i in 1..4 {
            assert!(!norm.lambda_diff(i, i - 1).is_zero());
        }
    }
}

fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Ways to split five positions into a pair and a triple.
fn pair_splits() -> Vec<([usize; 2], [usize; 3])> {
    let mut out = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            let rest: Vec<usize> = (0..5).filter(|&k| k != i && k != j).collect();
            out.push(([i, j], [rest[0], rest[1], rest[2]]));
        }
    }
    out
}

fn verify_ci_tensors(ff: &FundForms, rho: &[Vec<Vec<Scalar>>], sigma: &[Vec<Vec<Scalar>>]) {
    let (n, c) = (ff.n(), ff.c());
    let s = |u: usize, v: usize, w: usize| {
        if v == w {
            sigma[u][v][w].clone()
        } else {
            &sigma[u][v][w] / int(2)
        }
    };
    let q = |v: usize, a: usize, b: usize| ff.coefficient(2, v, &[a, b]);
    for u in 0..c {
        for t in tuples(n, 3) {
            let mut rhs = Scalar::zero();
            for i in 0..3 {
                let rest: Vec<usize> = (0..3).filter(|&k| k != i).map(|k| t[k]).collect();
                for v in 0..c {
                    rhs += &rho[u][t[i]][v] * q(v, rest[0], rest[1]);
                }
            }
            assert_eq!(ff.coefficient(3, u, &t), rhs);
        }
        for t in tuples(n, 4) {
            let mut rhs = Scalar::zero();
            for i in 0..4 {
                let rest: Vec<usize> = (0..4).filter(|&k| k != i).map(|k| t[k]).collect();
                for v in 0..c {
                    rhs += &rho[u][t[i]][v] * ff.coefficient(3, v, &rest);
                }
            }
            for v in 0..c {
                for w in 0..c {
                    let pairings = q(v, t[0], t[1]) * q(w, t[2], t[3])
                        + q(v, t[0], t[2]) * q(w, t[1], t[3])
                        + q(v, t[0], t[3]) * q(w, t[1], t[2]);
                    rhs += int(2) * s(u, v, w) * pairings;
                }
            }
            assert_eq!(ff.coefficient(4, u, &t), rhs);
        }
        for t in tuples(n, 5) {
            let mut rhs = Scalar::zero();
            for i in 0..5 {
                let rest: Vec<usize> = (0..5).filter(|&k| k != i).map(|k| t[k]).collect();
                for v in 0..c {
                    rhs += &rho[u][t[i]][v] * ff.coefficient(4, v, &rest);
                }
            }
            for v in 0..c {
                for w in 0..c {
                    let mut acc = Scalar::zero();
                    for (pair, triple) in pair_splits() {
                        let tri: Vec<usize> = triple.iter().map(|&k| t[k]).collect();
                        acc += q(v, t[pair[0]], t[pair[1]]) * ff.coefficient(3, w, &tri);
                    }
                    rhs += int(2) * s(u, v, w) * acc;
                }
            }
            assert_eq!(ff.coefficient(5, u, &t), rhs);
        }
    }
}

#[test]
fn ci_witnesses_reproduce_the_tensors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..4 {
        let mut params = ExampleParams::new(3);
        params.r = int(rng.gen_range(-3..=3));
        params.u = int(rng.gen_range(-3..=3));
        params.v = int(rng.gen_range(-3..=3));
        params.w = int(rng.gen_range(-3..=3));
        params.rho = (0..3).map(|_| int(rng.gen_range(-2..=2))).collect();
        let cls = example_generate(1, &params).unwrap().classify(5).unwrap();
        assert_eq!(cls.class, TheoremClass::CiTwoQuadrics);
        let ci = cls.ci.unwrap();
        verify_ci_tensors(&cls.forms, ci.rho.as_ref().unwrap(), ci.sigma.as_ref().unwrap());
    }
}

#[test]
fn curve_times_quadric_fails_the_ci_test_only_when_bent() {
    for (r, passes) in [(0, true), (1, false)] {
        let mut params = ExampleParams::new(3);
        params.r = int(r);
        let Example::Chart(chart) = example_generate(2, &params).unwrap() else {
            panic!("class 2 is a chart");
        };
        let ff = fundamental_forms(&chart, 5).unwrap();
        let rep = fubini_test(&ff).unwrap();
        assert!(rep.holds);
        assert_eq!(ci_test_f4f5(&ff, &rep).unwrap().passes, passes);
    }
}

#[test]
fn projected_grassmannian_is_not_fubini() {
    let chart = seg_projection_example().unwrap();
    assert_eq!((chart.n(), chart.c()), (6, 2));
    let ff = fundamental_forms(&chart, 3).unwrap();
    let rep = fubini_test(&ff).unwrap();
    assert!(!rep.holds);
    assert!(rep.residual > 0);
}

#[test]
fn hyperplane_section_keeps_class_one() {
    let mut params = ExampleParams::new(4);
    params.r = int(1);
    let Example::Spec { spec, point } = example_generate(1, &params).unwrap() else {
        panic!("class 1 is a spec");
    };
    let h = [0, 1, -1, 2, 3, 1, -2].map(int);
    let (section, p) = linear_section(&spec, &point, &h).unwrap();
    assert_eq!(section.nvars(), 6);
    let cls = projdiff_core::classify::theorem_classify(&section, &p, 5).unwrap();
    assert_eq!(cls.class, TheoremClass::CiTwoQuadrics, "{:?}", cls.diagnostics);
}
