//! Local standard bases for ideals in the power-series ring, computed with
//! the tangent-cone algorithm: Buchberger pair completion where every
//! reduction is a Mora weak normal form with smallest-ecart selection.
//!
//! For an ideal of finite colength the quotient is spanned by the standard
//! monomials (those outside the leading ideal), and `m^k` is contained in the
//! ideal once `k` exceeds every standard monomial's degree. That nilpotency
//! cutoff makes exact class representatives computable by plain tail
//! reduction, with no unit denominators.

use crate::poly::{jacobian_generators, Monomial, Polynomial};
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Tuning knobs for basis computations.
#[derive(Debug, Clone)]
pub struct StdOptions {
    /// Maximum number of reduction steps before giving up. Non-isolated or
    /// pathological inputs are caught by this guard.
    pub budget: u64,
}

impl Default for StdOptions {
    fn default() -> Self {
        StdOptions { budget: 10_000_000 }
    }
}

impl StdOptions {
    /// Default options, with the budget overridable through the
    /// `SINGSPEC_BUDGET` environment variable.
    pub fn from_env() -> Self {
        let mut opts = StdOptions::default();
        if let Ok(s) = std::env::var("SINGSPEC_BUDGET") {
            if let Ok(b) = s.trim().parse::<u64>() {
                if b > 0 {
                    opts.budget = b;
                }
            }
        }
        opts
    }
}

struct Budget {
    initial: u64,
    left: u64,
}

impl Budget {
    fn new(n: u64) -> Self {
        Budget { initial: n, left: n }
    }

    fn step(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded { steps: self.initial });
        }
        self.left -= 1;
        Ok(())
    }
}

/// A finite list of nonzero generators of an ideal.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    nvars: usize,
    gens: Vec<Polynomial>,
}

impl IdealBasis {
    /// Drops zero generators; the remaining list must be nonempty and share
    /// one variable count.
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::invalid("ideal needs at least one nonzero generator"));
        }
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::invalid(format!(
                "generator has {} variables, expected {nvars}",
                g.nvars()
            )));
        }
        Ok(IdealBasis { nvars, gens })
    }

    /// The Jacobian ideal, generated by all partial derivatives.
    pub fn jacobian(f: &Polynomial) -> Result<Self> {
        IdealBasis::new(f.nvars(), jacobian_generators(f)).map_err(|_| Error::NotIsolated)
    }

    /// The ideal generated by `f` together with its partial derivatives.
    pub fn extended_jacobian(f: &Polynomial) -> Result<Self> {
        let mut gens = vec![f.clone()];
        gens.extend(jacobian_generators(f));
        IdealBasis::new(f.nvars(), gens).map_err(|_| Error::NotIsolated)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}

/// Vector-space dimension of the quotient by an ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

/// A standard basis with respect to the local order, minimalized so that no
/// leading monomial divides another.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    nvars: usize,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
}

impl StandardBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Minimal generators of the leading-term ideal.
    pub fn leading_ideal(&self) -> &[Monomial] {
        &self.leads
    }

    /// Per-variable exponent bound: the least pure power of each variable in
    /// the leading ideal, or `None` for a variable with no pure power.
    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        if self.leads.iter().any(|m| m.is_one()) {
            return Some(vec![0; self.nvars]);
        }
        let mut bounds = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            let mut best: Option<u32> = None;
            for m in &self.leads {
                let pure = m.exps().iter().enumerate().all(|(k, &e)| k == i || e == 0);
                if pure && m.exps()[i] > 0 {
                    let e = m.exps()[i];
                    best = Some(best.map_or(e, |b| b.min(e)));
                }
            }
            bounds.push(best?);
        }
        Some(bounds)
    }

    /// Dimension of the quotient: the number of standard monomials, finite
    /// exactly when every variable has a pure power in the leading ideal.
    pub fn colength(&self) -> Colength {
        let Some(bounds) = self.pure_power_bounds() else {
            return Colength::Infinite;
        };
        let mut count = 0usize;
        self.for_each_box_monomial(&bounds, |m, leads| {
            if !leads.iter().any(|l| l.divides(m)) {
                count += 1;
            }
        });
        Colength::Finite(count)
    }

    /// The standard monomials (a monomial basis of the quotient), sorted
    /// descending in the local order so `1` comes first.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let Some(bounds) = self.pure_power_bounds() else {
            return Err(Error::invalid(
                "the quotient is infinite dimensional; no finite monomial basis",
            ));
        };
        let mut out = Vec::new();
        self.for_each_box_monomial(&bounds, |m, leads| {
            if !leads.iter().any(|l| l.divides(m)) {
                out.push(m.clone());
            }
        });
        out.sort_by(|a, b| b.cmp(a));
        Ok(out)
    }

    /// Visits every monomial in the box below the pure-power bounds. All
    /// standard monomials lie in that box.
    fn for_each_box_monomial<F: FnMut(&Monomial, &[Monomial])>(
        &self,
        bounds: &[u32],
        mut visit: F,
    ) {
        if bounds.iter().any(|&b| b == 0) {
            return;
        }
        let mut idx = vec![0u32; self.nvars];
        loop {
            let m = Monomial::new(idx.clone());
            visit(&m, &self.leads);
            let mut k = 0;
            loop {
                if k == self.nvars {
                    return;
                }
                idx[k] += 1;
                if idx[k] < bounds[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    /// One more than the largest standard-monomial degree; every monomial of
    /// at least this degree lies in the ideal.
    pub(crate) fn nilpotency_cutoff(&self) -> Result<u32> {
        let mons = self.standard_monomials()?;
        Ok(mons.iter().map(|m| m.degree()).max().map_or(0, |d| d + 1))
    }
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let l = fm.lcm(gm);
    let qf = fm.quotient_into(&l).expect("lcm divisible");
    let qg = gm.quotient_into(&l).expect("lcm divisible");
    let inv_f = Rat::from_integer(1.into()) / fc;
    let inv_g = Rat::from_integer(1.into()) / gc;
    f.mul_term(&qf, &inv_f).sub(&g.mul_term(&qg, &inv_g))
}

/// Cancels the leading term of `h` against `g`.
fn reduce_lead_once(h: &Polynomial, g: &Polynomial) -> Polynomial {
    let (hm, hc) = h.lead().expect("nonzero");
    let (gm, gc) = g.lead().expect("nonzero");
    let quot = gm.quotient_into(hm).expect("divisible");
    let factor = hc / gc;
    h.sub(&g.mul_term(&quot, &factor))
}

/// Mora weak normal form: repeatedly cancels the leading term against the
/// reducer of smallest ecart whose lead divides it (ties broken by list
/// position, base reducers before recorded intermediates). When the chosen
/// reducer has strictly larger ecart than the current remainder, the
/// remainder is first recorded as an extra reducer; that rule is what makes
/// the loop terminate for local orders.
///
/// With `trunc = Some(n)` every intermediate is cut modulo `m^n`, which
/// computes normal forms for the ideal enlarged by `m^n`.
fn mora_nf(
    h: &Polynomial,
    basis: &[Polynomial],
    budget: &mut Budget,
    trunc: Option<u32>,
) -> Result<Polynomial> {
    let mut pushed: Vec<Polynomial> = Vec::new();
    let mut h = h.clone();
    if let Some(n) = trunc {
        h = h.truncated(n);
    }
    loop {
        let Some((hm, _)) = h.lead() else {
            return Ok(h);
        };
        let hm = hm.clone();
        let mut best: Option<(u32, bool, usize)> = None;
        for (i, g) in basis.iter().enumerate() {
            if g.lead().expect("nonzero").0.divides(&hm) {
                let e = g.ecart();
                if best.map_or(true, |(be, _, _)| e < be) {
                    best = Some((e, false, i));
                }
            }
        }
        for (i, g) in pushed.iter().enumerate() {
            if g.lead().expect("nonzero").0.divides(&hm) {
                let e = g.ecart();
                if best.map_or(true, |(be, _, _)| e < be) {
                    best = Some((e, true, i));
                }
            }
        }
        let Some((ecart, from_pushed, idx)) = best else {
            return Ok(h);
        };
        if ecart > h.ecart() {
            pushed.push(h.clone());
        }
        budget.step()?;
        let g = if from_pushed { pushed[idx].clone() } else { basis[idx].clone() };
        h = reduce_lead_once(&h, &g);
        if let Some(n) = trunc {
            h = h.truncated(n);
        }
    }
}

fn pair_key(basis: &[Polynomial], i: usize, j: usize) -> (u32, Vec<u32>, usize, usize) {
    let li = basis[i].lead().expect("nonzero").0;
    let lj = basis[j].lead().expect("nonzero").0;
    let l = li.lcm(lj);
    (l.degree(), l.exps().to_vec(), i, j)
}

/// Computes a minimalized standard basis of the ideal with respect to the
/// local order. Deterministic for a fixed generator ordering.
pub fn standard_basis(ideal: &IdealBasis, opts: &StdOptions) -> Result<StandardBasis> {
    standard_basis_impl(ideal, opts, None)
}

/// Exact standard basis via adaptive degree truncation. A run truncated at
/// degree `n` computes a basis of the ideal enlarged by `m^n`; when the
/// nilpotency cutoff `c` of that answer lands strictly below `n`, every
/// monomial of degree `c` lies in `I + m^n`, so multiplying by powers of the
/// maximal ideal gives `m^c` inside `I + m^t` for every `t >= n`, and the
/// intersection of those is `I` itself. Hence `m^n` is inside `I`, the
/// enlarged ideal equals `I`, and the truncated answer is exact.
///
/// Truncation keeps high-degree generator tails (such as the pure powers a
/// convenient representative carries) out of the reduction entirely. The
/// untruncated run remains the fallback and the sole authority for infinite
/// colength.
pub(crate) fn adaptive_standard_basis(
    ideal: &IdealBasis,
    opts: &StdOptions,
) -> Result<StandardBasis> {
    let max_gen = ideal.generators().iter().map(|g| g.degree()).max().unwrap_or(0);
    let cap = max_gen.saturating_mul(4).max(64);
    let mut n: u32 = 4;
    while n <= cap {
        let sb = standard_basis_impl(ideal, opts, Some(n))?;
        if sb.colength() != Colength::Infinite && sb.nilpotency_cutoff()? < n {
            return Ok(sb);
        }
        // Cost grows steeply with the truncation degree, so step gently: the
        // first adequate degree is usually just past the failing one.
        n += (n / 4).max(2);
    }
    standard_basis(ideal, opts)
}

fn standard_basis_impl(
    ideal: &IdealBasis,
    opts: &StdOptions,
    trunc: Option<u32>,
) -> Result<StandardBasis> {
    let nvars = ideal.nvars();
    let mut budget = Budget::new(opts.budget);
    let mut basis: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| match trunc {
            Some(n) => g.truncated(n),
            None => g.clone(),
        })
        .filter(|g| !g.is_zero())
        .map(|g| g.content_normalized())
        .collect();
    let mut pairs: BTreeSet<(u32, Vec<u32>, usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pairs.insert(pair_key(&basis, i, j));
        }
    }
    while let Some((_, _, i, j)) = pairs.pop_first() {
        let li = basis[i].lead().expect("nonzero").0;
        let lj = basis[j].lead().expect("nonzero").0;
        // Coprime leading monomials always reduce to zero.
        if li.exps().iter().zip(lj.exps()).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        budget.step()?;
        let s = spoly(&basis[i], &basis[j]);
        let nf = mora_nf(&s, &basis, &mut budget, trunc)?;
        if !nf.is_zero() {
            let nf = nf.content_normalized();
            let k = basis.len();
            basis.push(nf);
            for i in 0..k {
                pairs.insert(pair_key(&basis, i, k));
            }
        }
    }
    // Minimalize: drop any element whose lead is divisible by another kept
    // lead; equal leads keep the earliest.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        let li = basis[i].lead().expect("nonzero").0;
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let lj = basis[j].lead().expect("nonzero").0;
            if lj.divides(li) && (lj != li || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let elements: Vec<Polynomial> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| if k { Some(g) } else { None })
        .collect();
    let leads = elements
        .iter()
        .map(|g| g.lead().expect("nonzero").0.clone())
        .collect();
    Ok(StandardBasis { nvars, elements, leads })
}

/// Colength of the ideal: the vector-space dimension of the quotient.
pub fn colength(ideal: &IdealBasis, opts: &StdOptions) -> Result<Colength> {
    Ok(adaptive_standard_basis(ideal, opts)?.colength())
}

/// The exact residue class representative of `h` supported on the standard
/// monomials. Requires finite colength; monomials at or above the nilpotency
/// cutoff lie in the ideal and are dropped outright, so the result differs
/// from `h` by an ideal element exactly (no unit factor).
pub fn reduce_class(h: &Polynomial, sb: &StandardBasis) -> Result<Polynomial> {
    if h.nvars() != sb.nvars() {
        return Err(Error::invalid(format!(
            "polynomial has {} variables, basis has {}",
            h.nvars(),
            sb.nvars()
        )));
    }
    let cutoff = sb.nilpotency_cutoff()?;
    let mut work: BTreeMap<Monomial, Rat> = BTreeMap::new();
    for (m, c) in h.terms() {
        if m.degree() < cutoff {
            work.insert(m.clone(), c.clone());
        }
    }
    let mut out = Polynomial::zero(h.nvars());
    // The largest pending monomial strictly decreases, so each monomial below
    // the cutoff is handled at most once.
    while let Some((m, c)) = work.pop_last() {
        let red = sb
            .elements()
            .iter()
            .find(|g| g.lead().expect("nonzero").0.divides(&m));
        match red {
            None => out.insert_add(m, c),
            Some(g) => {
                let (gm, gc) = g.lead().expect("nonzero");
                let quot = gm.quotient_into(&m).expect("divisible");
                let factor = &c / gc;
                for (tm, tc) in g.terms() {
                    let target = tm.mul(&quot);
                    if target == m || target.degree() >= cutoff {
                        continue;
                    }
                    let delta = &factor * tc;
                    use std::collections::btree_map::Entry;
                    match work.entry(target) {
                        Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Weak normal form of `g` against the basis: zero exactly when `g` lies in
/// the ideal. For finite-colength ideals the result is the exact class
/// representative supported on standard monomials; otherwise only the leading
/// term is guaranteed irreducible.
pub fn normal_form(g: &Polynomial, sb: &StandardBasis, opts: &StdOptions) -> Result<Polynomial> {
    match sb.colength() {
        Colength::Finite(_) => reduce_class(g, sb),
        Colength::Infinite => {
            let mut budget = Budget::new(opts.budget);
            mora_nf(g, sb.elements(), &mut budget, None)
        }
    }
}

fn require_in_maximal_ideal(f: &Polynomial) -> Result<()> {
    if f.in_maximal_ideal() {
        Ok(())
    } else {
        Err(Error::invalid("the germ must vanish at the origin (no constant term)"))
    }
}

/// Colength of the Jacobian ideal; errors when the singularity is not
/// isolated.
pub fn milnor_number(f: &Polynomial, opts: &StdOptions) -> Result<usize> {
    require_in_maximal_ideal(f)?;
    let sb = adaptive_standard_basis(&IdealBasis::jacobian(f)?, opts)?;
    sb.colength().finite().ok_or(Error::NotIsolated)
}

/// Colength of the ideal generated by `f` and its partials.
pub fn tjurina_number(f: &Polynomial, opts: &StdOptions) -> Result<usize> {
    require_in_maximal_ideal(f)?;
    let sb = adaptive_standard_basis(&IdealBasis::extended_jacobian(f)?, opts)?;
    sb.colength().finite().ok_or(Error::NotIsolated)
}

/// True exactly when `f` lies in its own Jacobian ideal.
pub fn is_quasihomogeneous(f: &Polynomial, opts: &StdOptions) -> Result<bool> {
    require_in_maximal_ideal(f)?;
    let sb = adaptive_standard_basis(&IdealBasis::jacobian(f)?, opts)?;
    if sb.colength() == Colength::Infinite {
        return Err(Error::NotIsolated);
    }
    Ok(reduce_class(f, &sb)?.is_zero())
}

/// A right-determinacy cutoff: the germ is equivalent to any perturbation by
/// terms of degree above this bound. Returns the Milnor number plus two.
pub fn determinacy_bound(f: &Polynomial, opts: &StdOptions) -> Result<usize> {
    Ok(milnor_number(f, opts)? + 2)
}
