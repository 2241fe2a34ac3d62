//! The weak interval extension `I(S)` of an idempotent semiring.
//!
//! An interval `[lower, upper]` is the order interval
//! `{x : lower ⪯ x ⪯ upper}` in the *standard* order of `S`. For min-plus
//! that order is the reverse of `≤`, so the interval written `5..2` holds
//! every real between 2 and 5. Operations act endpointwise, and the
//! extension is again an idempotent semiring.

use std::marker::PhantomData;

use thiserror::Error;

use crate::error::{Capability, Error, Result};
use crate::linalg::{solve_jacobi, ClosureReport, Matrix, SolveError};
use crate::semiring::{checked, unsupported, Capabilities, Idempotent, Semiring, SemiringId};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntervalElem<T> {
    pub lower: T,
    pub upper: T,
}

impl<T: Copy> IntervalElem<T> {
    /// The degenerate interval `[a, a]`.
    pub fn point(a: T) -> Self {
        Self { lower: a, upper: a }
    }
}

/// Constructs `[lower, upper]`, rejecting endpoints with `lower ⋠ upper`.
pub fn interval<S: Idempotent>(lower: S::Elem, upper: S::Elem) -> Result<IntervalElem<S::Elem>> {
    let x = IntervalElem { lower, upper };
    if Interval::<S>::contains(&x) {
        Ok(x)
    } else {
        Err(Error::NotInCarrier {
            semiring: Interval::<S>::id().to_string(),
            value: format!("{}..{}", S::format_elem(&lower), S::format_elem(&upper)),
        })
    }
}

/// `I(S)` as a semiring instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Interval<S>(PhantomData<S>);

impl<S> Default for Interval<S> {
    fn default() -> Self {
        Interval(PhantomData)
    }
}

impl<S: Idempotent> Semiring for Interval<S> {
    type Elem = IntervalElem<S::Elem>;

    const FLAGS: Capabilities = Capabilities {
        idempotent: true,
        semifield: false,
        radicable: S::FLAGS.radicable,
    };

    fn id() -> SemiringId {
        SemiringId::IntervalOf(Box::new(S::id()))
    }

    fn carrier() -> &'static str {
        "closed order intervals [lower, upper] of the inner semiring"
    }

    fn zero() -> Self::Elem {
        IntervalElem::point(S::zero())
    }

    fn one() -> Self::Elem {
        IntervalElem::point(S::one())
    }

    fn add(a: Self::Elem, b: Self::Elem) -> Self::Elem {
        IntervalElem {
            lower: S::add(a.lower, b.lower),
            upper: S::add(a.upper, b.upper),
        }
    }

    fn mul(a: Self::Elem, b: Self::Elem) -> Self::Elem {
        IntervalElem {
            lower: S::mul(a.lower, b.lower),
            upper: S::mul(a.upper, b.upper),
        }
    }

    fn contains(a: &Self::Elem) -> bool {
        S::contains(&a.lower) && S::contains(&a.upper) && S::precedes(a.lower, a.upper)
    }

    /// Literal `lo..hi`; a bare value is the degenerate interval.
    fn parse_elem(s: &str) -> Result<Self::Elem> {
        let t = s.trim();
        let x = match t.split_once("..") {
            Some((lo, hi)) => IntervalElem {
                lower: S::parse_elem(lo)?,
                upper: S::parse_elem(hi)?,
            },
            None => IntervalElem::point(S::parse_elem(t)?),
        };
        checked::<Self>(x, t)
    }

    fn format_elem(a: &Self::Elem) -> String {
        format!("{}..{}", S::format_elem(&a.lower), S::format_elem(&a.upper))
    }

    fn inv(_a: Self::Elem) -> Result<Self::Elem> {
        Err(unsupported::<Self>(Capability::Semifield))
    }

    fn nth_root(a: Self::Elem, n: u32) -> Result<Self::Elem> {
        Ok(IntervalElem {
            lower: S::nth_root(a.lower, n)?,
            upper: S::nth_root(a.upper, n)?,
        })
    }

    fn approx_eq(a: Self::Elem, b: Self::Elem, rel_tol: f64) -> bool {
        S::approx_eq(a.lower, b.lower, rel_tol) && S::approx_eq(a.upper, b.upper, rel_tol)
    }
}

impl<S: Idempotent> Idempotent for Interval<S> {}

/// `lower ⪯ a ⪯ upper`.
pub fn interval_contains<S: Idempotent>(x: &IntervalElem<S::Elem>, a: S::Elem) -> bool {
    S::precedes(x.lower, a) && S::precedes(a, x.upper)
}

/// Set inclusion `inner ⊆ outer` of order intervals.
pub fn interval_subset<S: Idempotent>(inner: &IntervalElem<S::Elem>, outer: &IntervalElem<S::Elem>) -> bool {
    S::precedes(outer.lower, inner.lower) && S::precedes(inner.upper, outer.upper)
}

/// Splits an interval matrix into its lower and upper endpoint matrices.
pub fn endpoints<S: Idempotent>(m: &Matrix<Interval<S>>) -> (Matrix<S>, Matrix<S>) {
    let lower = m.map::<S>(|x| x.lower).expect("endpoints lie in the inner carrier");
    let upper = m.map::<S>(|x| x.upper).expect("endpoints lie in the inner carrier");
    (lower, upper)
}

/// Reassembles an interval matrix from endpoint matrices.
pub fn from_endpoints<S: Idempotent>(lower: &Matrix<S>, upper: &Matrix<S>) -> Result<Matrix<Interval<S>>> {
    if lower.shape() != upper.shape() {
        return Err(Error::ShapeMismatch {
            op: "interval endpoints",
            left: lower.shape(),
            right: upper.shape(),
        });
    }
    let data = lower
        .as_slice()
        .iter()
        .zip(upper.as_slice())
        .map(|(&lo, &hi)| IntervalElem { lower: lo, upper: hi })
        .collect();
    Matrix::new(lower.rows(), lower.cols(), data)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Lower,
    Upper,
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Endpoint::Lower => "lower",
            Endpoint::Upper => "upper",
        })
    }
}

#[derive(Debug, Error)]
#[error("{endpoint} endpoint system: {source}")]
pub struct IntervalSolveError<S: Semiring> {
    pub endpoint: Endpoint,
    #[source]
    pub source: SolveError<S>,
}

/// Interval solution of `X = H ⊙ X ⊕ F` together with the two endpoint runs.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalReport<S: Idempotent> {
    pub solution: Matrix<Interval<S>>,
    pub lower: ClosureReport<S>,
    pub upper: ClosureReport<S>,
    /// Scalar Jacobi solves performed; always two.
    pub scalar_solves: usize,
}

/// Exact interval solution of the stationary Bellman equation.
///
/// The lower (upper) endpoint of the answer is the scalar least solution for
/// the lower (upper) endpoint data. By monotonicity of `⊕` and `⊙`, every
/// selection `H' ∈ H`, `F' ∈ F` whose least solution exists has that solution
/// inside the returned intervals. The two scalar solves run concurrently.
pub fn interval_bellman_solve<S: Idempotent>(
    h: &Matrix<Interval<S>>,
    f: &Matrix<Interval<S>>,
    max_iter: usize,
) -> std::result::Result<IntervalReport<S>, IntervalSolveError<S>> {
    let (h_lo, h_hi) = endpoints(h);
    let (f_lo, f_hi) = endpoints(f);
    let (lower, upper) = rayon::join(
        || solve_jacobi(&h_lo, &f_lo, max_iter),
        || solve_jacobi(&h_hi, &f_hi, max_iter),
    );
    let lower = lower.map_err(|source| IntervalSolveError {
        endpoint: Endpoint::Lower,
        source,
    })?;
    let upper = upper.map_err(|source| IntervalSolveError {
        endpoint: Endpoint::Upper,
        source,
    })?;
    let solution = from_endpoints(&lower.result, &upper.result).map_err(|e| IntervalSolveError {
        endpoint: Endpoint::Lower,
        source: SolveError::Algebra(e),
    })?;
    Ok(IntervalReport {
        solution,
        lower,
        upper,
        scalar_solves: 2,
    })
}
