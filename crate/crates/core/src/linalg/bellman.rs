//! Kleene closure and iterative solvers for `X = H ⊙ X ⊕ F`.
//!
//! Convergence is detected by exact equality of successive iterates. In the
//! selective instances `⊕` returns one of its arguments, so once the partial
//! sums stop improving they are bit-identical; no tolerance is involved.

use thiserror::Error;

use super::Matrix;
use crate::error::{Capability, Error};
use crate::semiring::{require, Semiring};

/// Outcome of a converged closure or fixpoint iteration.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureReport<S: Semiring> {
    pub result: Matrix<S>,
    /// Iterations performed, including the final one that confirmed stability.
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Error)]
pub enum SolveError<S: Semiring> {
    #[error(transparent)]
    Algebra(#[from] Error),

    /// No stabilisation within the iteration budget; `last` is the final iterate.
    #[error("no fixpoint after {iterations} iterations")]
    Divergence { iterations: usize, last: Matrix<S> },
}

impl<S: Semiring> SolveError<S> {
    pub fn is_divergence(&self) -> bool {
        matches!(self, SolveError::Divergence { .. })
    }
}

/// Iteration budget used when callers have no better bound.
pub fn default_max_iter(n: usize) -> usize {
    2 * n.max(1)
}

fn check_system<S: Semiring>(h: &Matrix<S>, f: &Matrix<S>) -> Result<(), Error> {
    require::<S>(Capability::Idempotent)?;
    if !h.is_square() {
        return Err(Error::ShapeMismatch {
            op: "bellman (H must be square)",
            left: h.shape(),
            right: h.shape(),
        });
    }
    if f.rows() != h.rows() {
        return Err(Error::ShapeMismatch {
            op: "bellman",
            left: h.shape(),
            right: f.shape(),
        });
    }
    Ok(())
}

/// `A* = I ⊕ A ⊕ A² ⊕ …`, via `P ← I ⊕ A ⊙ P` from `P = I`.
///
/// On success the result satisfies `A* = I ⊕ A ⊙ A*`.
pub fn closure<S: Semiring>(a: &Matrix<S>, max_iter: usize) -> Result<ClosureReport<S>, SolveError<S>> {
    let n = a.rows();
    let id = Matrix::identity(n);
    check_system(a, &id)?;
    let mut current = id.clone();
    for iteration in 1..=max_iter {
        let next = id.add(&a.mul(&current)?)?;
        if next == current {
            return Ok(ClosureReport {
                result: next,
                iterations: iteration,
                converged: true,
            });
        }
        current = next;
    }
    Err(SolveError::Divergence {
        iterations: max_iter,
        last: current,
    })
}

/// One synchronous sweep `H ⊙ X ⊕ F`.
pub fn jacobi_step<S: Semiring>(h: &Matrix<S>, x: &Matrix<S>, f: &Matrix<S>) -> Result<Matrix<S>, Error> {
    h.mul(x)?.add(f)
}

/// Jacobi-type iteration from `X = F`; every component of a sweep reads the
/// previous iterate. This is Bellman's shortest-path scheme.
pub fn solve_jacobi<S: Semiring>(
    h: &Matrix<S>,
    f: &Matrix<S>,
    max_iter: usize,
) -> Result<ClosureReport<S>, SolveError<S>> {
    check_system(h, f)?;
    let mut x = f.clone();
    for iteration in 1..=max_iter {
        let next = jacobi_step(h, &x, f)?;
        if next == x {
            return Ok(ClosureReport {
                result: next,
                iterations: iteration,
                converged: true,
            });
        }
        x = next;
    }
    Err(SolveError::Divergence {
        iterations: max_iter,
        last: x,
    })
}

/// Gauss–Seidel-type iteration from `X = F`; within a sweep, row `i` reads
/// the rows `< i` already updated in that sweep. This is Ford's scheme.
pub fn solve_gauss_seidel<S: Semiring>(
    h: &Matrix<S>,
    f: &Matrix<S>,
    max_iter: usize,
) -> Result<ClosureReport<S>, SolveError<S>> {
    check_system(h, f)?;
    let (n, k) = f.shape();
    let mut x = f.clone();
    for iteration in 1..=max_iter {
        let mut changed = false;
        for i in 0..n {
            let hrow = h.row(i);
            for c in 0..k {
                let value = hrow
                    .iter()
                    .enumerate()
                    .fold(f.get(i, c), |acc, (j, &hij)| S::add(acc, S::mul(hij, x.get(j, c))));
                if value != x.get(i, c) {
                    x.set(i, c, value);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(ClosureReport {
                result: x,
                iterations: iteration,
                converged: true,
            });
        }
    }
    Err(SolveError::Divergence {
        iterations: max_iter,
        last: x,
    })
}
