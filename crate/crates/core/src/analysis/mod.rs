//! Idempotent analysis on finite domains.
//!
//! A [`GridFunction`] is a function from a finite ordered domain into a
//! semiring. On such domains the idempotent integral is an exact `⊕`-fold,
//! so the integral, Maslov measures, the scalar product and kernel operators
//! are all computed without approximation. With [`UnitMaxMin`] values the
//! pointwise operations are fuzzy-set union and intersection.
//!
//! [`UnitMaxMin`]: crate::semiring::UnitMaxMin

mod legendre;

pub use legendre::{legendre_transform, uniform_grid};

use crate::error::{Capability, Error, Result};
use crate::linalg::Matrix;
use crate::semiring::{require, Semiring};

/// `f : X → S` on a finite, nonempty domain `X`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction<S: Semiring, X = f64> {
    domain: Vec<X>,
    values: Vec<S::Elem>,
}

impl<S: Semiring, X: Clone + PartialEq> GridFunction<S, X> {
    pub fn new(domain: Vec<X>, values: Vec<S::Elem>) -> Result<Self> {
        if domain.is_empty() {
            return Err(Error::Domain("grid function needs a nonempty domain".into()));
        }
        if domain.len() != values.len() {
            return Err(Error::Domain(format!(
                "{} points but {} values",
                domain.len(),
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !S::contains(v)) {
            return Err(Error::NotInCarrier {
                semiring: S::id().to_string(),
                value: format!("{bad:?}"),
            });
        }
        Ok(Self { domain, values })
    }

    /// Samples `f` at every domain point.
    pub fn from_fn(domain: Vec<X>, f: impl Fn(&X) -> S::Elem) -> Result<Self> {
        let values = domain.iter().map(f).collect();
        Self::new(domain, values)
    }

    /// The function equal to `c` everywhere.
    pub fn constant(domain: Vec<X>, c: S::Elem) -> Result<Self> {
        let values = vec![c; domain.len()];
        Self::new(domain, values)
    }

    pub fn domain(&self) -> &[X] {
        &self.domain
    }

    pub fn values(&self) -> &[S::Elem] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&X, &S::Elem)> {
        self.domain.iter().zip(&self.values)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(S::Elem, S::Elem) -> S::Elem) -> Result<Self> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Self {
            domain: self.domain.clone(),
            values,
        })
    }
}

/// `(f ⊕ g)(x) = f(x) ⊕ g(x)`; fuzzy union for [`UnitMaxMin`](crate::semiring::UnitMaxMin).
pub fn pointwise_add<S: Semiring, X: Clone + PartialEq>(
    f: &GridFunction<S, X>,
    g: &GridFunction<S, X>,
) -> Result<GridFunction<S, X>> {
    f.zip_with(g, S::add)
}

/// `(f ⊙ g)(x) = f(x) ⊙ g(x)`; fuzzy intersection for [`UnitMaxMin`](crate::semiring::UnitMaxMin).
pub fn pointwise_mul<S: Semiring, X: Clone + PartialEq>(
    f: &GridFunction<S, X>,
    g: &GridFunction<S, X>,
) -> Result<GridFunction<S, X>> {
    f.zip_with(g, S::mul)
}

/// `(λ ⊙ f)(x) = λ ⊙ f(x)`.
pub fn pointwise_scale<S: Semiring, X: Clone + PartialEq>(lambda: S::Elem, f: &GridFunction<S, X>) -> GridFunction<S, X> {
    GridFunction {
        domain: f.domain.clone(),
        values: f.values.iter().map(|&v| S::mul(lambda, v)).collect(),
    }
}

/// Idempotent integral: the supremum of `f` in the standard order.
///
/// For min-plus this is the conventional infimum.
pub fn integrate<S: Semiring, X>(f: &GridFunction<S, X>) -> Result<S::Elem> {
    require::<S>(Capability::Idempotent)?;
    Ok(f.values.iter().fold(S::zero(), |acc, &v| S::add(acc, v)))
}

/// Integral against the Maslov measure with density `ψ`:
/// `sup_x f(x) ⊙ ψ(x)`.
pub fn measure_integrate<S: Semiring, X: Clone + PartialEq>(
    f: &GridFunction<S, X>,
    density: &GridFunction<S, X>,
) -> Result<S::Elem> {
    integrate(&pointwise_mul(f, density)?)
}

/// Idempotent scalar product `⟨f, g⟩ = sup_x f(x) ⊙ g(x)`.
pub fn scalar_product<S: Semiring, X: Clone + PartialEq>(
    f: &GridFunction<S, X>,
    g: &GridFunction<S, X>,
) -> Result<S::Elem> {
    measure_integrate(f, g)
}

/// Integral operator with kernel `K`: `(Kf)(x) = ⊕_y K(x, y) ⊙ f(y)`.
///
/// Columns of `K` follow the domain order of `f`; the output is indexed by
/// the rows of `K`. Output points are independent of one another.
pub fn kernel_apply<S: Semiring, X>(k: &Matrix<S>, f: &GridFunction<S, X>) -> Result<GridFunction<S, usize>> {
    require::<S>(Capability::Idempotent)?;
    if k.cols() != f.values.len() {
        return Err(Error::ShapeMismatch {
            op: "kernel",
            left: k.shape(),
            right: (f.values.len(), 1),
        });
    }
    let values = (0..k.rows())
        .map(|x| {
            k.row(x)
                .iter()
                .zip(&f.values)
                .fold(S::zero(), |acc, (&kxy, &fy)| S::add(acc, S::mul(kxy, fy)))
        })
        .collect();
    Ok(GridFunction {
        domain: (0..k.rows()).collect(),
        values,
    })
}
