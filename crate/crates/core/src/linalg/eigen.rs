//! Cycle-mean eigenvalues of max-plus and min-plus matrices.

use super::{closure, default_max_iter, Matrix, SolveError};
use crate::error::Error;
use crate::semiring::{ExtReal, Semiring, Tropical};

/// Best cycle mean of `a` (largest for max-plus, smallest for min-plus),
/// by Karp's recurrence over walks of exactly `k` edges.
///
/// `a[i][j]` is the weight of the edge `i → j`; the semiring zero means no edge.
pub fn cycle_mean_eigenvalue<S: Tropical>(a: &Matrix<S>) -> Result<f64, Error> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch {
            op: "cycle mean",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let n = a.rows();
    // walks[k][v]: best weight of a walk with k edges ending at v, any start
    let mut walks = vec![vec![S::one(); n]];
    for k in 1..=n {
        let prev = &walks[k - 1];
        let next: Vec<ExtReal> = (0..n)
            .map(|v| (0..n).fold(S::zero(), |acc, u| S::add(acc, S::mul(prev[u], a.get(u, v)))))
            .collect();
        walks.push(next);
    }

    let better = |x: f64, y: f64| if S::MAXIMIZE { x > y } else { x < y };
    let mut best: Option<f64> = None;
    for v in 0..n {
        let Some(full) = walks[n][v].finite() else {
            continue;
        };
        // worst ratio over k, in the opposite sense of the semiring
        let mut worst: Option<f64> = None;
        for (k, row) in walks.iter().enumerate().take(n) {
            if let Some(part) = row[v].finite() {
                let ratio = (full - part) / (n - k) as f64;
                if worst.is_none_or(|w| better(w, ratio)) {
                    worst = Some(ratio);
                }
            }
        }
        if let Some(w) = worst {
            if best.is_none_or(|b| better(w, b)) {
                best = Some(w);
            }
        }
    }
    best.ok_or(Error::UndefinedEigenvalue)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair<S: Semiring> {
    pub value: f64,
    /// Column vector `v` with `A ⊙ v = λ ⊙ v`; not identically zero.
    pub vector: Matrix<S>,
}

/// Eigenvalue together with an eigenvector taken from a critical column of
/// the closure of `λ⁻¹ ⊙ A`.
///
/// With non-integer weights the normalised matrix may carry rounding
/// residue on its critical cycles; the closure then reports divergence.
pub fn eigenpair<S: Tropical>(a: &Matrix<S>) -> Result<Eigenpair<S>, SolveError<S>> {
    let value = cycle_mean_eigenvalue(a)?;
    let n = a.rows();
    let normalized = a.scale(ExtReal::new(-value));
    let star = closure(&normalized, default_max_iter(n))?.result;
    let plus = normalized.mul(&star)?;
    let critical = (0..n)
        .filter_map(|i| plus.get(i, i).finite().map(|d| (i, d.abs())))
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .map(|(i, _)| i)
        .ok_or(Error::UndefinedEigenvalue)?;
    let vector = Matrix::new(n, 1, star.column(critical))?;
    Ok(Eigenpair { value, vector })
}
