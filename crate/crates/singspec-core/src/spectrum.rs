//! Singularity spectra.
//!
//! The generic route builds a maximal basis of the quotient for the shifted
//! Newton filtration: candidates are monomial residue classes, visited in
//! decreasing shifted valuation, and kept greedily while they grow the rank.
//! For a non-degenerate convenient germ the multiset of kept valuations is
//! the spectrum. Weighted-homogeneous germs also get the direct formula
//! `(alpha + e) . w` over a monomial basis of the quotient.

use crate::linalg::{solve_unique, Echelon, SolveOutcome};
use crate::localstd::{
    adaptive_standard_basis, reduce_class, Colength, IdealBasis, StandardBasis, StdOptions,
};
use crate::newton::{
    make_convenient, newton_diagram, nondegeneracy_check, shifted_valuation, FacetStatus,
    NewtonDiagram,
};
use crate::poly::{Monomial, Polynomial};
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Options shared by the spectrum entry points.
#[derive(Debug, Clone, Default)]
pub struct SpectrumOptions {
    /// Skip the non-degeneracy gate and trust the input.
    pub assume_nondegenerate: bool,
    /// Shuffle the visiting order among candidates of equal valuation with
    /// this seed. The computed spectrum must not depend on it; the knob
    /// exists so robustness tests can exercise arbitrary tie-breaking.
    pub candidate_seed: Option<u64>,
    pub std: StdOptions,
}

/// Which quotient the basis spans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// The Jacobian ideal; the basis has Milnor-number many entries.
    Jacobian,
    /// The ideal generated by the germ and its partials; Tjurina-number many.
    Tjurina,
}

/// A sorted multiset of spectral exponents in an (n+1)-variable ambient
/// space; symmetry pairs exponents to n+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    nvars: usize,
    exponents: Vec<Rat>,
}

impl Spectrum {
    pub fn new(mut exponents: Vec<Rat>, nvars: usize) -> Self {
        exponents.sort();
        Spectrum { nvars, exponents }
    }

    pub fn exponents(&self) -> &[Rat] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.exponents.first()
    }

    pub fn max(&self) -> Option<&Rat> {
        self.exponents.last()
    }
}

/// Monomial representatives with their shifted valuations, sorted by
/// increasing valuation; the classes form a basis of the quotient.
#[derive(Debug, Clone)]
pub struct MaximalBasis {
    entries: Vec<(Monomial, Rat)>,
}

impl MaximalBasis {
    pub fn entries(&self) -> &[(Monomial, Rat)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn valuations(&self) -> Vec<Rat> {
        self.entries.iter().map(|(_, v)| v.clone()).collect()
    }
}

fn gate_degeneracy(f: &Polynomial, d: &NewtonDiagram, opts: &SpectrumOptions) -> Result<()> {
    if opts.assume_nondegenerate {
        return Ok(());
    }
    let verdicts = nondegeneracy_check(f, d);
    if let Some(facet) = verdicts.iter().position(|s| *s == FacetStatus::Unknown) {
        return Err(Error::DegeneracyUnresolved { facet });
    }
    Ok(())
}

/// A convenient, degeneracy-gated germ with its diagram and Milnor number.
pub(crate) struct NewtonContext {
    pub f: Polynomial,
    pub mu: usize,
    pub diagram: NewtonDiagram,
}

/// Validates and convenientizes the germ, computes its diagram, and applies
/// the non-degeneracy gate.
pub(crate) fn prepare(f: &Polynomial, opts: &SpectrumOptions) -> Result<NewtonContext> {
    let mu = crate::localstd::milnor_number(f, &opts.std)?;
    let g = make_convenient(f, &opts.std)?;
    let diagram = newton_diagram(&g)?;
    gate_degeneracy(&g, &diagram, opts)?;
    Ok(NewtonContext { f: g, mu, diagram })
}

fn all_monomials_below(nvars: usize, degree_bound: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            rec(exps, i + 1, left - e, out);
        }
        exps[i] = 0;
    }
    if degree_bound > 0 {
        rec(&mut exps, 0, degree_bound - 1, &mut out);
    }
    out
}

fn quotient_basis_ideal(f: &Polynomial, kind: IdealKind) -> Result<IdealBasis> {
    match kind {
        IdealKind::Jacobian => IdealBasis::jacobian(f),
        IdealKind::Tjurina => IdealBasis::extended_jacobian(f),
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Fisher-Yates within each run of equal valuations, leaving the
/// valuation-descending order itself intact.
fn shuffle_ties(cands: &mut [(Monomial, Vec<Rat>, Rat)], seed: u64) {
    let mut state = seed;
    let mut i = 0;
    while i < cands.len() {
        let mut j = i + 1;
        while j < cands.len() && cands[j].2 == cands[i].2 {
            j += 1;
        }
        for t in (i + 1..j).rev() {
            let r = i + (splitmix64(&mut state) % (t - i + 1) as u64) as usize;
            cands.swap(t, r);
        }
        i = j;
    }
}

/// Greedy maximal-basis construction over a prepared diagram.
pub(crate) fn basis_for(
    f: &Polynomial,
    diagram: &NewtonDiagram,
    kind: IdealKind,
    opts: &SpectrumOptions,
) -> Result<MaximalBasis> {
    let std = &opts.std;
    let sb: StandardBasis = adaptive_standard_basis(&quotient_basis_ideal(f, kind)?, std)?;
    let Colength::Finite(colength) = sb.colength() else {
        return Err(Error::NotIsolated);
    };
    if colength == 0 {
        return Err(Error::internal("quotient by the unit ideal"));
    }
    let std_mons = sb.standard_monomials()?;
    let index: BTreeMap<&Monomial, usize> =
        std_mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let cutoff = 1 + std_mons.iter().map(|m| m.degree()).max().unwrap_or(0);

    // Candidates: every monomial with a nonzero residue class. Higher degrees
    // lie in the ideal outright, so this bound is exhaustive.
    let mut cands: Vec<(Monomial, Vec<Rat>, Rat)> = Vec::new();
    for m in all_monomials_below(f.nvars(), cutoff) {
        let class = reduce_class(&Polynomial::monomial_term(m.clone(), Rat::from_integer(1.into())), &sb)?;
        if class.is_zero() {
            continue;
        }
        let mut coords = vec![Rat::zero(); colength];
        for (cm, cc) in class.terms() {
            coords[index[cm]] = cc.clone();
        }
        let val = shifted_valuation(diagram, &m)?;
        cands.push((m, coords, val));
    }
    // Largest valuation first; ties broken by the local order.
    cands.sort_by(|a, b| b.2.cmp(&a.2).then_with(|| b.0.cmp(&a.0)));
    if let Some(seed) = opts.candidate_seed {
        shuffle_ties(&mut cands, seed);
    }

    let mut ech = Echelon::new(colength);
    let mut entries: Vec<(Monomial, Rat)> = Vec::new();
    for (m, coords, val) in cands {
        if ech.try_insert(coords) {
            entries.push((m, val));
            if ech.rank() == colength {
                break;
            }
        }
    }
    if entries.len() != colength {
        return Err(Error::internal("candidate classes failed to span the quotient"));
    }
    entries.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    Ok(MaximalBasis { entries })
}

/// Maximal basis of the chosen quotient for the shifted Newton filtration.
/// The germ must already be convenient; use `spectrum_newton` for automatic
/// convenientization.
pub fn maximal_basis(
    f: &Polynomial,
    kind: IdealKind,
    opts: &SpectrumOptions,
) -> Result<MaximalBasis> {
    let diagram = newton_diagram(f)?;
    if let Some(var) = diagram.missing_pure_power() {
        return Err(Error::NotConvenient { var });
    }
    gate_degeneracy(f, &diagram, opts)?;
    basis_for(f, &diagram, kind, opts)
}

/// The spectrum of an isolated, Newton non-degenerate germ: the valuation
/// multiset of a Jacobian maximal basis. Variables missing a pure power are
/// first topped up with `x_i^{mu+2}`, which leaves the spectrum unchanged.
pub fn spectrum_newton(f: &Polynomial, opts: &SpectrumOptions) -> Result<Spectrum> {
    let ctx = prepare(f, opts)?;
    let basis = basis_for(&ctx.f, &ctx.diagram, IdealKind::Jacobian, opts)?;
    if basis.len() != ctx.mu {
        return Err(Error::internal("basis size differs from the Milnor number"));
    }
    Ok(Spectrum::new(basis.valuations(), f.nvars()))
}

/// Weights making every support point have weighted degree 1, when they are
/// unique and positive.
pub fn find_weights(f: &Polynomial) -> Option<Vec<Rat>> {
    if f.is_zero() {
        return None;
    }
    let rows: Vec<Vec<Rat>> = f
        .support()
        .iter()
        .map(|m| {
            m.exps()
                .iter()
                .map(|&e| Rat::from_integer(BigInt::from(e)))
                .collect()
        })
        .collect();
    let rhs = vec![Rat::from_integer(1.into()); rows.len()];
    match solve_unique(&rows, &rhs) {
        SolveOutcome::Unique(w) if w.iter().all(|wi| wi > &Rat::zero()) => Some(w),
        _ => None,
    }
}

fn weighted_shifted(m: &Monomial, w: &[Rat]) -> Rat {
    m.shifted()
        .iter()
        .zip(w)
        .map(|(&e, wi)| wi * Rat::from_integer(BigInt::from(e)))
        .sum()
}

/// Spectrum of a weighted-homogeneous germ: `(alpha + e) . w` over a
/// monomial basis of the Milnor algebra.
pub fn spectrum_quasihomogeneous(
    f: &Polynomial,
    w: &[Rat],
    opts: &StdOptions,
) -> Result<Spectrum> {
    if w.len() != f.nvars() {
        return Err(Error::invalid(format!(
            "weight vector has length {}, expected {}",
            w.len(),
            f.nvars()
        )));
    }
    if !w.iter().all(|wi| wi > &Rat::zero()) {
        return Err(Error::invalid("weights must be positive"));
    }
    let one = Rat::from_integer(1.into());
    for m in f.support() {
        let d: Rat = m
            .exps()
            .iter()
            .zip(w)
            .map(|(&e, wi)| wi * Rat::from_integer(BigInt::from(e)))
            .sum();
        if d != one {
            return Err(Error::NotWeightedHomogeneous {
                msg: format!(
                    "support point {m:?} has weighted degree {d}, expected 1"
                ),
            });
        }
    }
    let sb = adaptive_standard_basis(&IdealBasis::jacobian(f)?, opts)?;
    if sb.colength() == Colength::Infinite {
        return Err(Error::NotIsolated);
    }
    let exps: Vec<Rat> = sb
        .standard_monomials()?
        .iter()
        .map(|m| weighted_shifted(m, w))
        .collect();
    Ok(Spectrum::new(exps, f.nvars()))
}

/// True when the sorted exponents pair up to n+1.
pub fn check_symmetry(s: &Spectrum) -> bool {
    let target = Rat::from_integer(BigInt::from(s.nvars()));
    let e = s.exponents();
    (0..e.len()).all(|i| &e[i] + &e[e.len() - 1 - i] == target)
}

/// Exact summary statistics: sum of squared deviations from `center`, the
/// range, and the mean.
pub fn stats(s: &Spectrum, center: &Rat) -> Result<(Rat, Rat, Rat)> {
    if s.is_empty() {
        return Err(Error::invalid("statistics of an empty spectrum"));
    }
    let mut sum_sq = Rat::zero();
    let mut sum = Rat::zero();
    for a in s.exponents() {
        let d = a - center;
        sum_sq += &d * &d;
        sum += a;
    }
    let range = s.max().unwrap() - s.min().unwrap();
    let mean = sum / Rat::from_integer(BigInt::from(s.len()));
    Ok((sum_sq, range, mean))
}
