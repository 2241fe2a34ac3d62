//! Dense matrices over a semiring, the Kleene closure, the stationary
//! Bellman equation `X = H ⊙ X ⊕ F`, and cycle-mean eigenvalues.

mod bellman;
mod eigen;
mod matrix;

pub use bellman::{
    closure, default_max_iter, jacobi_step, solve_gauss_seidel, solve_jacobi, ClosureReport, SolveError,
};
pub use eigen::{cycle_mean_eigenvalue, eigenpair, Eigenpair};
pub use matrix::Matrix;
