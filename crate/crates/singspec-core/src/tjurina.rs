//! Tjurina spectra and the excluded exponents.
//!
//! The Tjurina spectrum is the valuation multiset of a maximal basis of
//! `O/(f, J(f))` for the shifted Newton filtration; it is a sub-multiset of
//! the spectrum. The difference set is reported together with lower bounds
//! for its members derived from the prefix-counting rule, and the
//! maximal-exponent exclusion criterion is checked against it.

use crate::spectrum::{basis_for, prepare, IdealKind, Spectrum, SpectrumOptions};
use crate::poly::Polynomial;
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::One;

/// Spectrum, Tjurina spectrum, their multiset difference, and lower bounds
/// for the difference.
#[derive(Debug, Clone)]
pub struct ExclusionReport {
    pub sp: Spectrum,
    pub sp_tau: Spectrum,
    /// `sp` minus `sp_tau` as multisets, sorted ascending; size `mu - tau`.
    pub rset: Vec<Rat>,
    /// For each k, a lower bound for the k-th smallest excluded exponent.
    pub bounds: Vec<Rat>,
    pub mu: usize,
    pub tau: usize,
}

/// The Tjurina spectrum of an isolated, Newton non-degenerate germ.
pub fn tjurina_spectrum(f: &Polynomial, opts: &SpectrumOptions) -> Result<Spectrum> {
    let ctx = prepare(f, opts)?;
    let basis = basis_for(&ctx.f, &ctx.diagram, IdealKind::Tjurina, opts)?;
    Ok(Spectrum::new(basis.valuations(), f.nvars()))
}

/// Lower bounds for the `d` smallest excluded exponents, computed from the
/// sorted spectrum alone: for each k, take the largest index r whose prefix
/// count `#{j : a_j <= a_r}` is at most k; the bound is `a_r + 1`.
pub fn exclusion_lower_bounds(s: &Spectrum, d: usize) -> Result<Vec<Rat>> {
    let exps = s.exponents();
    if d > exps.len() {
        return Err(Error::invalid(format!(
            "requested {d} bounds from a spectrum of size {}",
            exps.len()
        )));
    }
    let one = Rat::from_integer(BigInt::one());
    let mut bounds = Vec::with_capacity(d);
    for k in 1..=d {
        let mut chosen: Option<&Rat> = None;
        for a in exps {
            let prefix = exps.iter().filter(|b| *b <= a).count();
            if prefix <= k {
                chosen = Some(a);
            }
        }
        let a = chosen.ok_or_else(|| Error::HypothesisViolated {
            msg: format!(
                "no spectrum element has prefix count at most {k}; the smallest \
                 exponent has multiplicity greater than {k}"
            ),
        })?;
        bounds.push(a + &one);
    }
    Ok(bounds)
}

/// Full exclusion data for a germ: both spectra, the excluded multiset, and
/// its lower bounds.
pub fn exclusion_report(f: &Polynomial, opts: &SpectrumOptions) -> Result<ExclusionReport> {
    let ctx = prepare(f, opts)?;
    let jac = basis_for(&ctx.f, &ctx.diagram, IdealKind::Jacobian, opts)?;
    let tju = basis_for(&ctx.f, &ctx.diagram, IdealKind::Tjurina, opts)?;
    let sp = Spectrum::new(jac.valuations(), f.nvars());
    let sp_tau = Spectrum::new(tju.valuations(), f.nvars());
    if sp.len() != ctx.mu {
        return Err(Error::internal("spectrum size differs from the Milnor number"));
    }
    let mut rset: Vec<Rat> = sp.exponents().to_vec();
    for v in sp_tau.exponents() {
        let i = rset
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::internal("Tjurina spectrum is not nested in the spectrum"))?;
        rset.remove(i);
    }
    rset.sort();
    let bounds = exclusion_lower_bounds(&sp, rset.len())?;
    let (mu, tau) = (sp.len(), sp_tau.len());
    Ok(ExclusionReport { sp, sp_tau, rset, bounds, mu, tau })
}

/// True when the germ is quasihomogeneous (nothing excluded) or the largest
/// spectral exponent is excluded exactly once.
pub fn check_max_excluded(rep: &ExclusionReport) -> bool {
    if rep.rset.is_empty() {
        return rep.mu == rep.tau;
    }
    let max = rep.sp.max().expect("nonempty spectrum");
    rep.rset.iter().filter(|x| *x == max).count() == 1
}
