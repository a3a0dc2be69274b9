//! Exact verdicts for the spectral variance inequalities.
//!
//! Three checks share one report shape: deviation from the symmetry center
//! `(n+1)/2`, deviation from the mean, and the mean-centered check after
//! dropping the largest one or two exponents (the reduction used when the
//! maximal Tjurina number of a deformation falls short of the Milnor number
//! by one or two). A standalone comparison bounds how the truncated variance
//! changes when a different element is dropped instead of the second-largest.

use crate::spectrum::Spectrum;
use crate::{Error, Rat, Result};
use num_bigint::BigInt;
use num_traits::Zero;

/// Which inequality a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Deviations measured from the symmetry center `(n+1)/2`.
    Hertling,
    /// Deviations measured from the mean of the multiset.
    MeanCentered,
    /// Mean-centered check after dropping the largest `mu - tau_max`
    /// exponents.
    MeanCenteredReduced { tau_max: usize },
}

/// Exact outcome of a variance-versus-range check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityVerdict {
    pub mode: CheckMode,
    /// Whether `lhs <= rhs`.
    pub holds: bool,
    /// `(1/count) * sum (a_i - center)^2`.
    pub lhs: Rat,
    /// `range / 12`.
    pub rhs: Rat,
    /// `rhs - lhs`; nonnegative exactly when the inequality holds.
    pub slack: Rat,
    /// `sum (a_i - center)^2 - count * range / 12 = -count * slack`; the
    /// quantity usually tabulated when the inequality is cleared of
    /// denominators.
    pub scaled_residual: Rat,
    pub count: usize,
    pub center: Rat,
    pub range: Rat,
}

fn verdict_for(exps: &[Rat], center: Rat, mode: CheckMode) -> Result<InequalityVerdict> {
    if exps.is_empty() {
        return Err(Error::invalid("inequality check on an empty multiset"));
    }
    let count = exps.len();
    let count_rat = Rat::from_integer(BigInt::from(count));
    let mut sum_sq = Rat::zero();
    for a in exps {
        let d = a - &center;
        sum_sq += &d * &d;
    }
    let min = exps.iter().min().expect("nonempty");
    let max = exps.iter().max().expect("nonempty");
    let range = max - min;
    let lhs = &sum_sq / &count_rat;
    let rhs = &range / Rat::from_integer(12.into());
    let slack = &rhs - &lhs;
    let scaled_residual = &sum_sq - &count_rat * &rhs;
    Ok(InequalityVerdict {
        mode,
        holds: slack >= Rat::zero(),
        lhs,
        rhs,
        slack,
        scaled_residual,
        count,
        center,
        range,
    })
}

/// Variance about the symmetry center `(n+1)/2` against `range/12`.
pub fn hertling_check(s: &Spectrum) -> Result<InequalityVerdict> {
    let center = Rat::from_integer(BigInt::from(s.nvars())) / Rat::from_integer(2.into());
    verdict_for(s.exponents(), center, CheckMode::Hertling)
}

/// Variance about the mean against `range/12`.
pub fn variance_check_mean(s: &Spectrum) -> Result<InequalityVerdict> {
    let sum: Rat = s.exponents().iter().sum();
    if s.is_empty() {
        return Err(Error::invalid("inequality check on an empty multiset"));
    }
    let mean = sum / Rat::from_integer(BigInt::from(s.len()));
    verdict_for(s.exponents(), mean, CheckMode::MeanCentered)
}

/// Mean-centered check on the multiset with its largest `mu - tau_max`
/// elements removed; `tau_max` must be `mu`, `mu - 1`, or `mu - 2`.
pub fn reduced_variance_check(s: &Spectrum, tau_max: usize) -> Result<InequalityVerdict> {
    let mu = s.len();
    if tau_max > mu || mu - tau_max > 2 {
        return Err(Error::BadTauMax { tau_max, mu });
    }
    let kept = &s.exponents()[..tau_max];
    let sub = Spectrum::new(kept.to_vec(), s.nvars());
    let mut v = variance_check_mean(&sub)?;
    v.mode = CheckMode::MeanCenteredReduced { tau_max };
    Ok(v)
}

/// Result of comparing the two truncated variances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropCompare {
    /// Truncated statistic with the two largest elements dropped.
    pub v1: Rat,
    /// Truncated statistic with the k-th and the largest element dropped.
    pub v2: Rat,
    /// `v1 >= v2`.
    pub ok: bool,
}

/// For sorted positive `xs` with mean `b` and a 1-based index
/// `1 <= k <= m-2`, compares
/// `V1 = s2/(m-2) - s^2/(m-2)^2 - (x_{m-2}-x_1)/12` (drop the top two) with
/// the analogue `V2` dropping `x_k` and `x_m` instead, where `s, s2` are the
/// plain and squared sums of the kept elements.
///
/// The hypothesis guaranteeing `V1 >= V2` is
/// `2bm >= (m-1)(x_k + x_{m-1}) + 2 x_m`; it holds with equality when all
/// elements coincide and is automatic for `m = 3`. Violations are reported
/// as errors, never as silent verdicts.
pub fn variance_drop_compare(xs: &[Rat], k: usize, b: &Rat) -> Result<DropCompare> {
    let m = xs.len();
    let fail = |msg: String| Err(Error::HypothesisViolated { msg });
    if m < 3 {
        return fail(format!("need at least 3 elements, got {m}"));
    }
    if xs.windows(2).any(|w| w[0] > w[1]) {
        return fail("elements must be sorted ascending".to_string());
    }
    if xs[0] <= Rat::zero() {
        return fail("elements must be positive".to_string());
    }
    if k < 1 || k > m - 2 {
        return fail(format!("index k = {k} outside 1..={}", m - 2));
    }
    let m_rat = Rat::from_integer(BigInt::from(m));
    let total: Rat = xs.iter().sum();
    if total != b * &m_rat {
        return fail(format!("sum {} differs from b*m = {}", total, b * &m_rat));
    }
    let gate_lhs = Rat::from_integer(2.into()) * b * &m_rat;
    let gate_rhs = Rat::from_integer(BigInt::from(m - 1)) * (&xs[k - 1] + &xs[m - 2])
        + Rat::from_integer(2.into()) * &xs[m - 1];
    if gate_lhs < gate_rhs {
        return fail(format!(
            "2bm = {gate_lhs} is below (m-1)(x_k + x_(m-1)) + 2 x_m = {gate_rhs}"
        ));
    }

    let twelve = Rat::from_integer(12.into());
    let m2 = Rat::from_integer(BigInt::from(m - 2));
    let stat = |skip_a: usize, skip_b: usize, top: &Rat| -> Rat {
        let mut s = Rat::zero();
        let mut s2 = Rat::zero();
        for (j, x) in xs.iter().enumerate() {
            if j == skip_a || j == skip_b {
                continue;
            }
            s += x;
            s2 += x * x;
        }
        &s2 / &m2 - (&s * &s) / (&m2 * &m2) - (top - &xs[0]) / &twelve
    };
    let v1 = stat(m - 2, m - 1, &xs[m - 3]);
    let v2 = stat(k - 1, m - 1, &xs[m - 2]);
    let ok = v1 >= v2;
    Ok(DropCompare { v1, v2, ok })
}
