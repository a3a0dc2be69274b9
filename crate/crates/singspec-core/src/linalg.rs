//! Exact rational linear algebra: incremental row echelon forms and small
//! dense solvers. Everything is over `Rat`; no pivoting heuristics are needed
//! because arithmetic is exact.

use crate::Rat;
use num_traits::Zero;

/// Incremental reduced row-echelon accumulator.
///
/// Rows are stored normalized (pivot coefficient 1) and fully reduced against
/// each other, so membership of a new vector in the current row space is
/// decided by reducing it to zero.
#[derive(Debug, Clone)]
pub struct Echelon {
    width: usize,
    /// Sorted map pivot column -> normalized row.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Eliminates all known pivots from `v` in place.
    pub fn reduce(&self, v: &mut [Rat]) {
        assert_eq!(v.len(), self.width);
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let factor = v[*pivot].clone();
                for (i, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        v[i] -= &factor * r;
                    }
                }
            }
        }
    }

    /// Reduces `v` and, if a nonzero remainder survives, inserts it as a new
    /// row. Returns `true` when the rank grew.
    pub fn try_insert(&mut self, mut v: Vec<Rat>) -> bool {
        self.reduce(&mut v);
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let lead = v[pivot].clone();
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c /= &lead;
            }
        }
        // Back-substitute into existing rows to keep the form fully reduced.
        for (_, row) in self.rows.iter_mut() {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        row[i] -= &factor * c;
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    /// True when `v` lies in the row space.
    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}

/// Outcome of solving a (possibly overdetermined) linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Rat>),
    Inconsistent,
    Underdetermined,
}

/// Solves `a * x = b` exactly for a unique solution.
///
/// `a` is given by rows. Returns `Underdetermined` when the coefficient
/// matrix has column rank below the number of unknowns.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> SolveOutcome {
    assert_eq!(a.len(), b.len());
    let ncols = match a.first() {
        Some(row) => row.len(),
        None => return SolveOutcome::Underdetermined,
    };
    // Augmented echelon over [a | b].
    let mut ech = Echelon::new(ncols + 1);
    for (row, rhs) in a.iter().zip(b) {
        let mut aug = row.clone();
        aug.push(rhs.clone());
        ech.try_insert(aug);
    }
    // Inconsistent iff some row is (0,...,0 | 1).
    if ech.rows.iter().any(|(p, _)| *p == ncols) {
        return SolveOutcome::Inconsistent;
    }
    if ech.rank() < ncols {
        return SolveOutcome::Underdetermined;
    }
    // Fully reduced echelon with pivots exactly 0..ncols-1: read the solution
    // off the augmented column.
    let mut x = vec![Rat::zero(); ncols];
    for (pivot, row) in &ech.rows {
        x[*pivot] = row[ncols].clone();
    }
    SolveOutcome::Unique(x)
}

/// Solves a square system, returning `None` when the matrix is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    match solve_unique(a, b) {
        SolveOutcome::Unique(x) => Some(x),
        _ => None,
    }
}
