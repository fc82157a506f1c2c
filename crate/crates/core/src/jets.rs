//! Adapted local charts `z = f(w)` of a variety at a point and the
//! fundamental forms read off from them.
//!
//! Tensors follow the raw partial derivative convention: the quadric graph
//! `z = w1² + w2²` has `q = 2·Id`. As a polynomial, `F_k^u` is `k!` times the
//! degree `k` part of the jet `f^u`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{FormSpace, Matrix};
use crate::poly::{Monomial, Poly};
use crate::scalar::{self, Scalar};

/// A projective variety `X ⊂ P^N` given by homogeneous generators in
/// `N + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    nvars: usize,
    generators: Vec<Poly>,
    pub label: Option<String>,
}

impl VarietySpec {
    pub fn new(nvars: usize, generators: Vec<Poly>, label: Option<String>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Input("at least one homogeneous variable required".into()));
        }
        for (index, g) in generators.iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: g.nvars(),
                });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous { index });
            }
        }
        Ok(VarietySpec {
            nvars,
            generators,
            label,
        })
    }

    /// Number of homogeneous coordinates, `N + 1`.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ambient_dim(&self) -> usize {
        self.nvars - 1
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Exact membership of a projective point.
    pub fn contains_point(&self, point: &[Scalar]) -> Result<bool> {
        if point.len() != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found: point.len(),
            });
        }
        if point.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        for g in &self.generators {
            if !g.eval(point)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Local graph `z^u = f^u(w)` of an `n`-dimensional variety of codimension
/// `c`, truncated at `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    n: usize,
    order: u32,
    jets: Vec<Poly>,
    base_point: Vec<Scalar>,
    tangent_frame: Vec<Vec<Scalar>>,
    normal_frame: Vec<Vec<Scalar>>,
}

impl Chart {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.jets.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn jets(&self) -> &[Poly] {
        &self.jets
    }

    /// Homogeneous representative of the point, normalized so the affine
    /// patch coordinate is one.
    pub fn base_point(&self) -> &[Scalar] {
        &self.base_point
    }

    /// `n + 1` vectors: the base point followed by `T_1 … T_n`.
    pub fn tangent_frame(&self) -> &[Vec<Scalar>] {
        &self.tangent_frame
    }

    pub fn normal_frame(&self) -> &[Vec<Scalar>] {
        &self.normal_frame
    }

    /// Ambient vector `Σ v_a T_a` of a chart direction.
    pub fn lift_direction(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.base_point.len()];
        for (va, t) in v.iter().zip(&self.tangent_frame[1..]) {
            for (o, x) in out.iter_mut().zip(t) {
                *o += va * x;
            }
        }
        Ok(out)
    }

    /// Chart direction `v` with `d ≡ Σ v_a T_a` modulo the base point, or
    /// `None` if `d` is not tangent.
    pub fn tangent_coordinates(&self, d: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if d.len() != self.base_point.len() {
            return Err(Error::Dimension {
                expected: self.base_point.len(),
                found: d.len(),
            });
        }
        let m = Matrix::from_rows(self.tangent_frame.clone()).transpose();
        Ok(m.solve(d).map(|x| x[1..].to_vec()))
    }
}

fn check_jets(n: usize, jets: &[Poly]) -> Result<()> {
    for (index, f) in jets.iter().enumerate() {
        if f.nvars() != n {
            return Err(Error::Dimension {
                expected: n,
                found: f.nvars(),
            });
        }
        if f.order().is_some_and(|o| o < 2) {
            return Err(Error::NotAdapted { index });
        }
    }
    Ok(())
}

/// Chart of the graph `z = f(w)` in the standard affine patch of
/// `P^(n+c)` with coordinates `(x0, w_1…w_n, z_1…z_c)`.
pub fn chart_from_graph(n: usize, jets: Vec<Poly>, order: u32) -> Result<Chart> {
    if order < 2 {
        return Err(Error::OrderOutOfRange(order as usize));
    }
    check_jets(n, &jets)?;
    let c = jets.len();
    let total = n + c + 1;
    let e = |i: usize| {
        let mut v = vec![Scalar::zero(); total];
        v[i] = Scalar::one();
        v
    };
    Ok(Chart {
        n,
        order,
        jets: jets.iter().map(|f| f.truncate(order)).collect(),
        base_point: e(0),
        tangent_frame: (0..=n).map(e).collect(),
        normal_frame: (n + 1..total).map(e).collect(),
    })
}

/// Projective closure of a graph chart: `x0^(K-1) z_u - Σ_k x0^(K-k) f_k^u`.
pub fn graph_spec(chart: &Chart) -> Result<VarietySpec> {
    let n = chart.n;
    let c = chart.c();
    let nvars = n + c + 1;
    let k = chart.order;
    let positions: Vec<usize> = (1..=n).collect();
    let x0 = Poly::var(nvars, 0);
    let mut gens = Vec::with_capacity(c);
    for (u, f) in chart.jets.iter().enumerate() {
        let mut g = &Poly::var(nvars, n + 1 + u) * &x0.pow(k - 1);
        for d in 2..=k {
            let part = f.homogeneous_part(d).relabel(nvars, &positions);
            g = &g - &(&part * &x0.pow(k - d));
        }
        gens.push(g);
    }
    VarietySpec::new(nvars, gens, Some("graph".into()))
}

/// Solves `eqs(y) = 0` for the `dependent` coordinates as power series in
/// the `free` ones, up to degree `order`. The equations must vanish at the
/// origin and their Jacobian with respect to the dependent coordinates must
/// be invertible there. Returns one series per dependent coordinate, in the
/// variables `free`.
pub fn solve_series(eqs: &[Poly], free: &[usize], dependent: &[usize], order: u32) -> Result<Vec<Poly>> {
    let nf = free.len();
    if eqs.len() != dependent.len() {
        return Err(Error::Dimension {
            expected: dependent.len(),
            found: eqs.len(),
        });
    }
    let nvars = free.len() + dependent.len();
    let mut jac = Matrix::zeros(eqs.len(), dependent.len());
    for (i, g) in eqs.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: g.nvars(),
            });
        }
        if !g.homogeneous_part(0).is_zero() {
            return Err(Error::NotOnVariety);
        }
        for (j, &d) in dependent.iter().enumerate() {
            jac[(i, j)] = g.coeff_of(&Monomial::var(nvars, d));
        }
    }
    let inv = jac
        .inverse()
        .ok_or_else(|| Error::Singular("Jacobian block is not invertible".into()))?;
    let mut images = vec![Poly::zero(nf); nvars];
    for (a, &f) in free.iter().enumerate() {
        images[f] = Poly::var(nf, a);
    }
    let mut phi = vec![Poly::zero(nf); dependent.len()];
    for d in 1..=order {
        for (j, &dep) in dependent.iter().enumerate() {
            images[dep] = phi[j].clone();
        }
        let residual: Vec<Poly> = eqs
            .iter()
            .map(|g| g.substitute_truncated(&images, d).map(|p| p.homogeneous_part(d)))
            .collect::<Result<_>>()?;
        for (j, p) in phi.iter_mut().enumerate() {
            let mut corr = Poly::zero(nf);
            for (i, r) in residual.iter().enumerate() {
                if !inv[(j, i)].is_zero() {
                    corr = &corr - &r.scale(&inv[(j, i)]);
                }
            }
            *p = &*p + &corr;
        }
    }
    Ok(phi)
}

fn patch_index(point: &[Scalar]) -> Result<(usize, Vec<Scalar>)> {
    if point.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ints = scalar::primitive_integer_vector(point);
    let mut best = 0;
    for (i, v) in ints.iter().enumerate() {
        if v.abs() > ints[best].abs() {
            best = i;
        }
    }
    let lead = Scalar::from_integer(ints[best].clone());
    let normalized = ints
        .iter()
        .map(|v| Scalar::from_integer(v.clone()) / &lead)
        .collect();
    Ok((best, normalized))
}

/// Adapted chart of `spec` at `point`, by power series solution of the
/// dehomogenized equations.
pub fn chart_from_implicit(spec: &VarietySpec, point: &[Scalar], order: u32) -> Result<Chart> {
    if order < 2 {
        return Err(Error::OrderOutOfRange(order as usize));
    }
    if !spec.contains_point(point)? {
        return Err(Error::NotOnVariety);
    }
    let nv = spec.nvars();
    let nn = nv - 1;
    let (i0, p) = patch_index(point)?;
    // affine coordinate j corresponds to ambient index amb[j]
    let amb: Vec<usize> = (0..nv).filter(|&i| i != i0).collect();
    let images: Vec<Poly> = (0..nv)
        .map(|i| {
            if i == i0 {
                Poly::one(nn)
            } else {
                let j = amb.iter().position(|&a| a == i).expect("affine index");
                &Poly::var(nn, j) + &Poly::constant(nn, p[i].clone())
            }
        })
        .collect();
    let local: Vec<Poly> = spec
        .generators()
        .iter()
        .map(|g| g.substitute(&images))
        .collect::<Result<_>>()?;

    let mut jac_rows = Vec::new();
    let mut selected = Vec::new();
    for (i, g) in local.iter().enumerate() {
        let row: Vec<Scalar> = (0..nn).map(|j| g.coeff_of(&Monomial::var(nn, j))).collect();
        let mut trial = jac_rows.clone();
        trial.push(row.clone());
        if Matrix::from_rows(trial).rank() > jac_rows.len() {
            jac_rows.push(row);
            selected.push(i);
        }
    }
    let c = jac_rows.len();
    let n = nn - c;
    let (dependent, free) = if c == 0 {
        (Vec::new(), (0..nn).collect::<Vec<_>>())
    } else {
        let (_, pivots) = Matrix::from_rows(jac_rows).rref();
        let free = (0..nn).filter(|j| !pivots.contains(j)).collect();
        (pivots, free)
    };
    let eqs: Vec<Poly> = selected.iter().map(|&i| local[i].clone()).collect();
    let phi = solve_series(&eqs, &free, &dependent, order)?;

    let mut back = vec![Poly::zero(n); nn];
    for (a, &f) in free.iter().enumerate() {
        back[f] = Poly::var(n, a);
    }
    for (j, &d) in dependent.iter().enumerate() {
        back[d] = phi[j].clone();
    }
    for (i, g) in local.iter().enumerate() {
        if !g.substitute_truncated(&back, order)?.is_zero() {
            return Err(Error::Singular(format!(
                "generator {} does not vanish on the solved chart; the Jacobian rank {} is below the codimension",
                i, c
            )));
        }
    }

    let mut tangent_frame = vec![p.clone()];
    for (a, &f) in free.iter().enumerate() {
        let mut t = vec![Scalar::zero(); nv];
        t[amb[f]] = Scalar::one();
        for (j, &d) in dependent.iter().enumerate() {
            t[amb[d]] = phi[j].coeff_of(&Monomial::var(n, a));
        }
        tangent_frame.push(t);
    }
    let normal_frame = dependent
        .iter()
        .map(|&d| {
            let mut v = vec![Scalar::zero(); nv];
            v[amb[d]] = Scalar::one();
            v
        })
        .collect();
    let jets = phi.iter().map(|f| f.filter_degrees(|d| d >= 2)).collect();
    Ok(Chart {
        n,
        order,
        jets,
        base_point: p,
        tangent_frame,
        normal_frame,
    })
}

/// Power series `1 / h` up to `order`, for `h` with nonzero constant term.
fn series_inverse(h: &Poly, order: u32) -> Result<Poly> {
    let c0 = h.homogeneous_part(0).coeff_of(&Monomial::one(h.nvars()));
    if c0.is_zero() {
        return Err(Error::Singular("vanishing patch coordinate".into()));
    }
    // 1/h = (1/c0) Σ (-(h - c0)/c0)^k
    let inv0 = Scalar::one() / &c0;
    let rest = (h - &Poly::constant(h.nvars(), c0)).scale(&-inv0.clone());
    let mut acc = Poly::one(h.nvars());
    let mut power = Poly::one(h.nvars());
    for _ in 0..order {
        power = power.mul_truncated(&rest, order);
        if power.is_zero() {
            break;
        }
        acc = &acc + &power;
    }
    Ok(acc.scale(&inv0))
}

/// Chart at `u = 0` of the image of a polynomial map `u ↦ [x_0(u) : … : x_N(u)]`
/// with `n` parameters. The differential at the origin must be injective.
pub fn chart_from_parametrization(n: usize, coords: &[Poly], order: u32) -> Result<Chart> {
    if order < 2 {
        return Err(Error::OrderOutOfRange(order as usize));
    }
    if let Some(bad) = coords.iter().find(|p| p.nvars() != n) {
        return Err(Error::Dimension {
            expected: n,
            found: bad.nvars(),
        });
    }
    let nv = coords.len();
    let zero = vec![Scalar::zero(); n];
    let point: Vec<Scalar> = coords.iter().map(|p| p.eval(&zero)).collect::<Result<_>>()?;
    let (i0, p) = patch_index(&point)?;
    let amb: Vec<usize> = (0..nv).filter(|&i| i != i0).collect();
    let inv = series_inverse(&coords[i0], order)?;
    let affine: Vec<Poly> = amb
        .iter()
        .map(|&i| {
            let y = coords[i].mul_truncated(&inv, order);
            &y - &Poly::constant(n, p[i].clone())
        })
        .collect();
    let nn = affine.len();
    // choose n affine coordinates whose linear parts are independent
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut free = Vec::new();
    for (j, y) in affine.iter().enumerate() {
        let row: Vec<Scalar> = (0..n).map(|a| y.coeff_of(&Monomial::var(n, a))).collect();
        let mut trial = rows.clone();
        trial.push(row.clone());
        if Matrix::from_rows(trial).rank() > rows.len() {
            rows.push(row);
            free.push(j);
        }
    }
    if free.len() < n {
        return Err(Error::Singular("parametrization is not immersive".into()));
    }
    let dependent: Vec<usize> = (0..nn).filter(|j| !free.contains(j)).collect();
    // invert w_a = y_{free[a]}(u): unknowns u in variables (w, u)
    let eqs: Vec<Poly> = free
        .iter()
        .enumerate()
        .map(|(a, &f)| {
            let positions: Vec<usize> = (n..2 * n).collect();
            &Poly::var(2 * n, a) - &affine[f].relabel(2 * n, &positions)
        })
        .collect();
    let wvars: Vec<usize> = (0..n).collect();
    let uvars: Vec<usize> = (n..2 * n).collect();
    let u_of_w = solve_series(&eqs, &wvars, &uvars, order)?;
    let phi: Vec<Poly> = dependent
        .iter()
        .map(|&d| affine[d].substitute_truncated(&u_of_w, order))
        .collect::<Result<_>>()?;

    let mut tangent_frame = vec![p.clone()];
    for (a, &f) in free.iter().enumerate() {
        let mut t = vec![Scalar::zero(); nv];
        t[amb[f]] = Scalar::one();
        for (j, &d) in dependent.iter().enumerate() {
            t[amb[d]] = phi[j].coeff_of(&Monomial::var(n, a));
        }
        tangent_frame.push(t);
    }
    let normal_frame = dependent
        .iter()
        .map(|&d| {
            let mut v = vec![Scalar::zero(); nv];
            v[amb[d]] = Scalar::one();
            v
        })
        .collect();
    Ok(Chart {
        n,
        order,
        jets: phi.iter().map(|f| f.filter_degrees(|d| d >= 2)).collect(),
        base_point: p,
        tangent_frame,
        normal_frame,
    })
}

/// Fundamental forms `F_2 … F_K` of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundForms {
    n: usize,
    c: usize,
    order: u32,
    /// `forms[k - 2][u]` is `F_k^u`.
    forms: Vec<Vec<Poly>>,
}

impl FundForms {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `F_k^u = Σ r^u_{i_1…i_k} w^{i_1}…w^{i_k}`.
    pub fn form(&self, k: u32, u: usize) -> &Poly {
        &self.forms[(k - 2) as usize][u]
    }

    pub fn forms(&self, k: u32) -> &[Poly] {
        &self.forms[(k - 2) as usize]
    }

    /// The tensor entry `∂^k f^u / ∂w_{i_1}…∂w_{i_k}` at the origin.
    pub fn coefficient(&self, k: u32, u: usize, indices: &[usize]) -> Scalar {
        assert_eq!(indices.len(), k as usize);
        let mut e = vec![0u32; self.n];
        for &i in indices {
            e[i] += 1;
        }
        let m = Monomial::new(e);
        let fk: Scalar = (1..=k as i64).map(|i| Scalar::from_integer(BigInt::from(i))).product();
        self.form(k, u).coeff_of(&m) * m.factorial_weight() / fk
    }

    /// `|F_k|` as a space of forms.
    pub fn space(&self, k: u32) -> FormSpace {
        FormSpace::span(self.n, k, self.forms(k)).expect("fundamental forms are homogeneous")
    }

    /// The symmetric matrix `q^u`.
    pub fn quadric_matrix(&self, u: usize) -> Matrix {
        Matrix::from_quadratic_form(self.form(2, u)).expect("F_2 is quadratic")
    }
}

/// Reads `F_2 … F_K` off a chart.
pub fn fundamental_forms(chart: &Chart, order: u32) -> Result<FundForms> {
    if !(2..=5).contains(&order) || order > chart.order {
        return Err(Error::OrderOutOfRange(order as usize));
    }
    let forms = (2..=order)
        .map(|k| {
            let fk: Scalar = (1..=k as i64).map(|i| Scalar::from_integer(BigInt::from(i))).product();
            chart
                .jets
                .iter()
                .map(|f| f.homogeneous_part(k).scale(&fk))
                .collect()
        })
        .collect();
    Ok(FundForms {
        n: chart.n,
        c: chart.c(),
        order,
        forms,
    })
}

/// Re-centers the jets, viewed as an exact graph, at a nearby point `w0`.
pub fn recenter(chart: &Chart, w0: &[Scalar]) -> Result<Chart> {
    let n = chart.n;
    let images: Vec<Poly> = (0..n)
        .map(|a| &Poly::var(n, a) + &Poly::constant(n, w0[a].clone()))
        .collect();
    let jets = chart
        .jets
        .iter()
        .map(|f| f.substitute(&images).map(|g| g.filter_degrees(|d| d >= 2)))
        .collect::<Result<Vec<_>>>()?;
    chart_from_graph(n, jets, chart.order)
}

/// Deterministic sample points of height at most ten.
pub fn sample_offsets(n: usize, count: usize) -> Vec<Vec<Scalar>> {
    let mut state: u64 = 0x2545_f491_4f6c_dd1d;
    let mut next = move || {
        state = state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        (state >> 33) as i64
    };
    (0..count)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let num = next() % 21 - 10;
                    let den = next() % 10 + 1;
                    scalar::frac(num, den)
                })
                .collect()
        })
        .collect()
}

/// Warns when `dim |F_2|` or the Fubini residual differ at nearby sample
/// points. A heuristic: jets are treated as an exact graph.
pub fn generality_check(chart: &Chart, order: u32) -> Result<Vec<String>> {
    let order = order.min(chart.order).min(5);
    let base = fundamental_forms(chart, order)?;
    let dim2 = base.space(2).dim();
    let resid = if order >= 3 {
        Some(crate::contact::fubini_ideal_residual(&base)?)
    } else {
        None
    };
    let mut warnings = Vec::new();
    for w0 in sample_offsets(chart.n, 5) {
        let ff = fundamental_forms(&recenter(chart, &w0)?, order)?;
        let d = ff.space(2).dim();
        if d != dim2 {
            warnings.push(format!(
                "dim |F_2| is {} at the point but {} nearby; the point may not be general",
                dim2, d
            ));
            break;
        }
        if let Some(r) = resid {
            let r2 = crate::contact::fubini_ideal_residual(&ff)?;
            if r2 != r {
                warnings.push(format!(
                    "Fubini residual is {} at the point but {} nearby; the point may not be general",
                    r, r2
                ));
                break;
            }
        }
    }
    Ok(warnings)
}
