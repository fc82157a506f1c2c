//! Contact of lines with a variety, contact-locus ideals, the Fubini test
//! and the `F_4`/`F_5` complete intersection test.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::jets::{FundForms, VarietySpec};
use crate::linalg::{ideal_degree_piece, FormSpace, Matrix};
use crate::poly::{monomials_of_degree, Monomial, Poly};
use crate::scalar::{self, Scalar};

/// The line `{base + t·direction}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSpec {
    base: Vec<Scalar>,
    direction: Vec<Scalar>,
}

impl LineSpec {
    pub fn new(base: Vec<Scalar>, direction: Vec<Scalar>) -> Result<Self> {
        if base.len() != direction.len() {
            return Err(Error::Dimension {
                expected: base.len(),
                found: direction.len(),
            });
        }
        if base.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        if Matrix::from_rows(vec![base.clone(), direction.clone()]).rank() < 2 {
            return Err(Error::Input("line direction is proportional to the base point".into()));
        }
        Ok(LineSpec { base, direction })
    }

    pub fn base(&self) -> &[Scalar] {
        &self.base
    }

    pub fn direction(&self) -> &[Scalar] {
        &self.direction
    }

    /// `p(s·base + t·direction)` as a polynomial in `(s, t)`.
    pub fn restrict(&self, p: &Poly) -> Result<Poly> {
        let images: Vec<Poly> = self
            .base
            .iter()
            .zip(&self.direction)
            .map(|(b, d)| {
                let mut q = Poly::zero(2);
                q.add_term(Monomial::var(2, 0), b.clone());
                q.add_term(Monomial::var(2, 1), d.clone());
                q
            })
            .collect();
        p.substitute(&images)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContactOrder {
    Finite(u32),
    Contained,
}

/// Largest `k <= max_k` such that every generator restricted to the line
/// vanishes to order at least `k + 1` at the base point.
pub fn contact_order(spec: &VarietySpec, line: &LineSpec, max_k: u32) -> Result<ContactOrder> {
    if !spec.contains_point(line.base())? {
        return Err(Error::NotOnVariety);
    }
    let mut best: Option<u32> = None;
    for g in spec.generators() {
        let r = line.restrict(g)?;
        // order in t at s = 1
        let Some(ord) = r.terms().map(|(m, _)| m.exponents()[1]).min() else {
            continue;
        };
        let k = ord.saturating_sub(1);
        best = Some(best.map_or(k, |b| b.min(k)));
    }
    Ok(match best {
        None => ContactOrder::Contained,
        Some(k) => ContactOrder::Finite(k.min(max_k)),
    })
}

/// The ideal generated by `|F_2| … |F_k|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactIdeal {
    k: u32,
    nvars: usize,
    generators: Vec<Poly>,
}

impl ContactIdeal {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn piece(&self, d: u32) -> Result<FormSpace> {
        let gens: Vec<Poly> = self
            .generators
            .iter()
            .filter(|g| g.degree().is_some_and(|e| e <= d))
            .cloned()
            .collect();
        ideal_degree_piece(self.nvars, &gens, d)
    }
}

pub fn contact_ideal(ff: &FundForms, k: u32) -> Result<ContactIdeal> {
    if k < 2 || k > ff.order() {
        return Err(Error::OrderOutOfRange(k as usize));
    }
    let generators = (2..=k)
        .flat_map(|j| ff.forms(j).iter().filter(|p| !p.is_zero()).cloned())
        .collect();
    Ok(ContactIdeal {
        k,
        nvars: ff.n(),
        generators,
    })
}

/// Whether the tangent direction `v` lies in the contact locus `C_k`.
pub fn direction_membership(ci: &ContactIdeal, v: &[Scalar]) -> Result<bool> {
    if v.len() != ci.nvars {
        return Err(Error::Dimension {
            expected: ci.nvars,
            found: v.len(),
        });
    }
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    for g in &ci.generators {
        if !g.eval(v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FubiniReport {
    pub holds: bool,
    /// `rho[u][a][v]`, present when the test holds.
    pub rho: Option<Vec<Vec<Vec<Scalar>>>>,
    /// `dim(|F_3| + (|F_2|)_3) - dim (|F_2|)_3`.
    pub residual: usize,
}

/// Linear system whose columns are the coefficient vectors of `polys` over
/// the monomials of `degree`, one row per monomial.
fn columns_matrix(n: usize, degree: u32, polys: &[Poly]) -> Matrix {
    let monos = monomials_of_degree(n, degree);
    let mut m = Matrix::zeros(monos.len(), polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (i, mono) in monos.iter().enumerate() {
            m[(i, j)] = p.coeff_of(mono);
        }
    }
    m
}

fn scaled(p: &Poly, k: i64) -> Poly {
    p.scale(&scalar::frac(1, k))
}

/// Cyclic-sum formulation: solves `r^u_{abc} = Σ_cyc ρ^u_{av} q^v_{bc}`,
/// equivalently `f_3^u = Σ ρ^u_{av} w_a f_2^v`.
pub fn fubini_cyclic(ff: &FundForms) -> Result<Option<Vec<Vec<Vec<Scalar>>>>> {
    if ff.order() < 3 {
        return Err(Error::OrderOutOfRange(ff.order() as usize));
    }
    let (n, c) = (ff.n(), ff.c());
    let mut products = Vec::with_capacity(n * c);
    for a in 0..n {
        for v in 0..c {
            products.push(&Poly::var(n, a) * &scaled(ff.form(2, v), 2));
        }
    }
    let m = columns_matrix(n, 3, &products);
    let monos = monomials_of_degree(n, 3);
    let mut rho = Vec::with_capacity(c);
    for u in 0..c {
        let rhs = scaled(ff.form(3, u), 6).coefficient_vector(&monos);
        let Some(x) = m.solve(&rhs) else {
            return Ok(None);
        };
        rho.push((0..n).map(|a| x[a * c..(a + 1) * c].to_vec()).collect());
    }
    Ok(Some(rho))
}

/// Ideal formulation: `dim(|F_3| + (|F_2|)_3) - dim (|F_2|)_3`.
pub fn fubini_ideal_residual(ff: &FundForms) -> Result<usize> {
    if ff.order() < 3 {
        return Err(Error::OrderOutOfRange(ff.order() as usize));
    }
    let gens: Vec<Poly> = ff.forms(2).iter().filter(|p| !p.is_zero()).cloned().collect();
    let i3 = ideal_degree_piece(ff.n(), &gens, 3)?;
    let both = i3.sum(&ff.space(3))?;
    Ok(both.dim() - i3.dim())
}

/// Runs both formulations and cross-checks them; the ideal one decides.
pub fn fubini_test(ff: &FundForms) -> Result<FubiniReport> {
    let residual = fubini_ideal_residual(ff)?;
    let rho = fubini_cyclic(ff)?;
    if rho.is_some() != (residual == 0) {
        return Err(Error::Inconsistent(format!(
            "cyclic system solvable: {}, ideal residual: {}",
            rho.is_some(),
            residual
        )));
    }
    Ok(FubiniReport {
        holds: residual == 0,
        rho,
        residual,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CIWitness {
    pub passes: bool,
    /// `rho[u][a][v]` solving the degree three equations jointly with sigma.
    pub rho: Option<Vec<Vec<Vec<Scalar>>>>,
    /// `sigma[u][v][w]`, symmetric in `(v, w)`: the coefficient of
    /// `z^v z^w` in the osculating quadric for `z^u`.
    pub sigma: Option<Vec<Vec<Vec<Scalar>>>>,
}

/// Checks that the jets agree to order five with a complete intersection of
/// quadrics `z^u = f_2^u + Σ ρ^u_{av} w_a z^v + Σ σ^u_{vw} z^v z^w`:
///
/// * `f_3 = Σ ρ w_a f_2^v`
/// * `f_4 = Σ ρ w_a f_3^v + Σ σ_{vw} f_2^v f_2^w`
/// * `f_5 = Σ ρ w_a f_4^v + Σ σ_{vw} (f_2^v f_3^w + f_3^v f_2^w)`
///
/// solved jointly for `ρ` and `σ`, with the minimal-support solution.
pub fn ci_test_f4f5(ff: &FundForms, report: &FubiniReport) -> Result<CIWitness> {
    if ff.order() < 5 {
        return Err(Error::OrderOutOfRange(ff.order() as usize));
    }
    if !report.holds {
        return Err(Error::Contract("the complete intersection test needs the Fubini hypothesis".into()));
    }
    let (n, c) = (ff.n(), ff.c());
    let f: Vec<Vec<Poly>> = (2..=5u32)
        .map(|k| {
            let fact = [2, 6, 24, 120][(k - 2) as usize];
            ff.forms(k).iter().map(|p| scaled(p, fact)).collect()
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..c).flat_map(|v| (v..c).map(move |w| (v, w))).collect();
    let zero = Poly::zero(n);
    // one column per unknown, stacked over degrees 3, 4, 5
    let mut cols: Vec<[Poly; 3]> = Vec::new();
    for a in 0..n {
        let wa = Poly::var(n, a);
        for v in 0..c {
            cols.push([&wa * &f[0][v], &wa * &f[1][v], &wa * &f[2][v]]);
        }
    }
    for &(v, w) in &pairs {
        let d4 = if v == w {
            &f[0][v] * &f[0][v]
        } else {
            &f[0][v] * &f[0][w]
        };
        let d5 = &(&f[0][v] * &f[1][w]) + &(&f[1][v] * &f[0][w]);
        cols.push([zero.clone(), d4, d5]);
    }
    let blocks: Vec<Matrix> = (0..3)
        .map(|i| {
            let polys: Vec<Poly> = cols.iter().map(|col| col[i].clone()).collect();
            columns_matrix(n, 3 + i as u32, &polys)
        })
        .collect();
    let m = blocks[0].vstack(&blocks[1]).vstack(&blocks[2]);
    let monos: Vec<Vec<Monomial>> = (3..=5).map(|d| monomials_of_degree(n, d)).collect();

    let mut rho = Vec::with_capacity(c);
    let mut sigma = Vec::with_capacity(c);
    for u in 0..c {
        let mut rhs = f[1][u].coefficient_vector(&monos[0]);
        rhs.extend(f[2][u].coefficient_vector(&monos[1]));
        rhs.extend(f[3][u].coefficient_vector(&monos[2]));
        let Some(x) = m.solve(&rhs) else {
            return Ok(CIWitness {
                passes: false,
                rho: None,
                sigma: None,
            });
        };
        rho.push((0..n).map(|a| x[a * c..(a + 1) * c].to_vec()).collect());
        let mut s = vec![vec![Scalar::zero(); c]; c];
        for (i, &(v, w)) in pairs.iter().enumerate() {
            s[v][w] = x[n * c + i].clone();
            s[w][v] = x[n * c + i].clone();
        }
        sigma.push(s);
    }
    Ok(CIWitness {
        passes: true,
        rho: Some(rho),
        sigma: Some(sigma),
    })
}
