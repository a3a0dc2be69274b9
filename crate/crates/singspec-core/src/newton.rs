//! Newton diagrams of germs: compact facets with their supporting
//! functionals, the piecewise-linear valuation they induce, its shift by
//! `e = (1,...,1)`, sufficient non-degeneracy certificates, and the
//! convenientization `f + sum x_i^{mu+2}` for variables missing a pure power.

use crate::linalg::{solve_square, Echelon};
use crate::localstd::{milnor_number, StdOptions};
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// A compact facet of the Newton polyhedron: the support points lying on it
/// and the unique functional equal to 1 on the facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub vertices: Vec<Monomial>,
    pub functional: Vec<Rat>,
}

/// The Newton polyhedron data of a germ.
#[derive(Debug, Clone)]
pub struct NewtonDiagram {
    nvars: usize,
    support: Vec<Monomial>,
    facets: Vec<Facet>,
    /// First variable with no pure power in the support, if any.
    missing_var: Option<usize>,
}

impl NewtonDiagram {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn support(&self) -> &[Monomial] {
        &self.support
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// True when every variable has a pure power in the support; only then do
    /// the cones over the compact facets cover the positive orthant.
    pub fn convenient(&self) -> bool {
        self.missing_var.is_none()
    }

    /// First variable with no pure power in the support, if any.
    pub fn missing_pure_power(&self) -> Option<usize> {
        self.missing_var
    }
}

fn dot(a: &[Rat], m: &Monomial) -> Rat {
    a.iter()
        .zip(m.exps())
        .map(|(ai, &e)| ai * Rat::from_integer(BigInt::from(e)))
        .sum()
}

fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut visit: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        // Advance the last index that can still move right.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] + (k - i) < n {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Computes the compact facets of the Newton polyhedron of `f`.
///
/// Every size-`nvars` subset of the support is tested: when the functional
/// solving `a . s = 1` on the subset exists, has strictly positive entries,
/// and is at least 1 on the whole support, it supports a compact facet.
/// Every compact facet arises this way because it contains `nvars` linearly
/// independent support points.
pub fn newton_diagram(f: &Polynomial) -> Result<NewtonDiagram> {
    if f.is_zero() {
        return Err(Error::invalid("Newton diagram of the zero polynomial"));
    }
    if !f.in_maximal_ideal() {
        return Err(Error::invalid("the germ must vanish at the origin (no constant term)"));
    }
    let d = f.nvars();
    let mut support: Vec<Monomial> = f.support().into_iter().cloned().collect();
    support.sort_by(|a, b| a.exps().cmp(b.exps()));

    let mut missing_var = None;
    for i in 0..d {
        let has_pure = support.iter().any(|m| {
            m.exps().iter().enumerate().all(|(k, &e)| k == i || e == 0) && m.exps()[i] > 0
        });
        if !has_pure {
            missing_var = Some(i);
            break;
        }
    }

    let one = Rat::one();
    let rhs = vec![Rat::one(); d];
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let mut facets: Vec<Facet> = Vec::new();
    for_each_combination(support.len(), d, |idx| {
        let rows: Vec<Vec<Rat>> = idx
            .iter()
            .map(|&i| {
                support[i]
                    .exps()
                    .iter()
                    .map(|&e| Rat::from_integer(BigInt::from(e)))
                    .collect()
            })
            .collect();
        let Some(a) = solve_square(&rows, &rhs) else {
            return;
        };
        if !a.iter().all(|ai| ai > &Rat::zero()) {
            return;
        }
        if !support.iter().all(|s| dot(&a, s) >= one) {
            return;
        }
        if seen.insert(a.clone()) {
            let vertices: Vec<Monomial> = support
                .iter()
                .filter(|s| dot(&a, s) == one)
                .cloned()
                .collect();
            facets.push(Facet { vertices, functional: a });
        }
    });
    facets.sort_by(|p, q| p.functional.cmp(&q.functional));
    Ok(NewtonDiagram { nvars: d, support, facets, missing_var })
}

/// The piecewise-linear function induced by the diagram, evaluated at a
/// lattice point: the minimum of the facet functionals. Requires a
/// convenient diagram, where the facet cones tile the orthant.
pub fn valuation(diagram: &NewtonDiagram, v: &[u32]) -> Result<Rat> {
    if let Some(var) = diagram.missing_var {
        return Err(Error::NotConvenient { var });
    }
    if v.len() != diagram.nvars {
        return Err(Error::invalid(format!(
            "point has {} coordinates, diagram has {} variables",
            v.len(),
            diagram.nvars
        )));
    }
    let m = Monomial::new(v.to_vec());
    diagram
        .facets
        .iter()
        .map(|f| dot(&f.functional, &m))
        .min()
        .ok_or_else(|| Error::internal("convenient diagram with no facets"))
}

/// The valuation of the monomial shifted by `e = (1,...,1)`; the quantity
/// whose multiset over a maximal basis is the spectrum.
pub fn shifted_valuation(diagram: &NewtonDiagram, m: &Monomial) -> Result<Rat> {
    valuation(diagram, &m.shifted())
}

/// Per-facet non-degeneracy verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FacetStatus {
    /// The facet carries exactly `nvars` support points and they are linearly
    /// independent, so its cone is simplicial; non-degeneracy follows for the
    /// facet and all its faces.
    SimplicialCertified,
    /// Two variables only: the face polynomial, written as a univariate
    /// polynomial along the facet, is square-free; the face has no critical
    /// point in the torus.
    SquareFreeCertified,
    /// Neither sufficient criterion applies; degeneracy is unresolved.
    Unknown,
}

fn facet_rank(facet: &Facet) -> usize {
    let mut ech = Echelon::new(facet.vertices.first().map_or(0, |m| m.nvars()));
    for v in &facet.vertices {
        let row: Vec<Rat> = v
            .exps()
            .iter()
            .map(|&e| Rat::from_integer(BigInt::from(e)))
            .collect();
        ech.try_insert(row);
    }
    ech.rank()
}

/// Dense univariate remainder `a mod b`; coefficient index is the degree.
fn uni_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = r.last().unwrap().clone();
        if !lead.is_zero() {
            let factor = &lead / &b[db];
            let shift = r.len() - 1 - db;
            for (i, bc) in b.iter().enumerate() {
                let t = &factor * bc;
                r[shift + i] -= t;
            }
        }
        r.pop();
        while r.len() > db && r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    while r.last().map_or(false, |c| c.is_zero()) {
        r.pop();
    }
    r
}

/// Degree of gcd(a, a'), used for the square-free test.
fn uni_is_squarefree(coeffs: &[Rat]) -> bool {
    let mut a: Vec<Rat> = coeffs.to_vec();
    while a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
    if a.len() <= 1 {
        return true;
    }
    let mut b: Vec<Rat> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
        .collect();
    while b.last().map_or(false, |c| c.is_zero()) {
        b.pop();
    }
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len() == 1
}

/// Writes the face polynomial of a two-variable facet as a univariate
/// polynomial along the primitive lattice direction of the segment and
/// tests it for square-freeness.
fn two_var_face_squarefree(f: &Polynomial, facet: &Facet) -> bool {
    let one = Rat::one();
    let mut pts: Vec<(&Monomial, &Rat)> = f
        .terms()
        .filter(|(m, _)| dot(&facet.functional, m) == one)
        .collect();
    pts.sort_by_key(|(m, _)| m.exps()[0]);
    let u = pts.first().unwrap().0.exps().to_vec();
    let w = pts.last().unwrap().0.exps().to_vec();
    // A compact segment cannot be vertical: the step in x is positive.
    let dx = w[0] - u[0];
    let g = {
        let dy = i64::from(w[1]) - i64::from(u[1]);
        let gc = num_integer::gcd(i64::from(dx), dy.abs()).max(1);
        i64::from(dx) / gc
    };
    let steps = (i64::from(dx) / g) as usize;
    let mut coeffs = vec![Rat::zero(); steps + 1];
    for (m, c) in pts {
        let k = (i64::from(m.exps()[0] - u[0]) / g) as usize;
        coeffs[k] = c.clone();
    }
    uni_is_squarefree(&coeffs)
}

/// Applies the sufficient non-degeneracy criteria facet by facet. `Unknown`
/// is a verdict, not an error; callers decide whether to proceed.
pub fn nondegeneracy_check(f: &Polynomial, diagram: &NewtonDiagram) -> Vec<FacetStatus> {
    diagram
        .facets
        .iter()
        .map(|facet| {
            if facet.vertices.len() == diagram.nvars && facet_rank(facet) == diagram.nvars {
                FacetStatus::SimplicialCertified
            } else if diagram.nvars == 2 && two_var_face_squarefree(f, facet) {
                FacetStatus::SquareFreeCertified
            } else {
                FacetStatus::Unknown
            }
        })
        .collect()
}

/// Adds `x_i^{mu+2}` for every variable lacking a pure power. Terms at that
/// degree do not change the right-equivalence class, so the Milnor number is
/// preserved; this is verified and any change reported as an error.
pub fn make_convenient(f: &Polynomial, opts: &StdOptions) -> Result<Polynomial> {
    let nvars = f.nvars();
    let missing: Vec<usize> = (0..nvars)
        .filter(|&i| {
            !f.terms().any(|(m, _)| {
                m.exps().iter().enumerate().all(|(k, &e)| k == i || e == 0) && m.exps()[i] > 0
            })
        })
        .collect();
    if missing.is_empty() {
        return Ok(f.clone());
    }
    let mu = milnor_number(f, opts)?;
    let power = u32::try_from(mu + 2).map_err(|_| Error::invalid("Milnor number too large"))?;
    let mut out = f.clone();
    for i in missing {
        let mut exps = vec![0u32; nvars];
        exps[i] = power;
        out.insert_add(Monomial::new(exps), Rat::one());
    }
    let mu_after = milnor_number(&out, opts)?;
    if mu_after != mu {
        return Err(Error::MuMismatch { expected: mu, got: mu_after });
    }
    Ok(out)
}
