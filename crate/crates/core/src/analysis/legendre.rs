use rayon::prelude::*;

use super::GridFunction;
use crate::error::{Error, Result};
use crate::semiring::{ExtReal, MaxPlus, Semiring};

/// Points `lo, lo + step, …` up to `hi` (inclusive when it falls on the grid).
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0 && step.is_finite() && lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::Domain(format!("bad grid {lo}..{hi} step {step}")));
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

/// `(Lf)(p) = sup_x (p·x − f(x))`, sampled at `slopes`.
///
/// This is the max-plus integral operator with kernel `K(p, x) = p·x`
/// applied to the max-plus inverse of `f`, so it is the idempotent
/// counterpart of the Fourier transform. `f` must be finite everywhere.
pub fn legendre_transform(f: &GridFunction<MaxPlus, f64>, slopes: &[f64]) -> Result<GridFunction<MaxPlus, f64>> {
    if slopes.is_empty() {
        return Err(Error::Domain("empty slope grid".into()));
    }
    let negated: Vec<(f64, ExtReal)> = f
        .iter()
        .map(|(&x, &v)| match v {
            ExtReal::Finite(_) => Ok((x, MaxPlus::inv(v)?)),
            _ => Err(Error::Domain(format!("Legendre transform needs finite values, f({x}) = {v}"))),
        })
        .collect::<Result<_>>()?;
    let values: Vec<ExtReal> = slopes
        .par_iter()
        .map(|&p| {
            negated
                .iter()
                .fold(MaxPlus::zero(), |acc, &(x, g)| MaxPlus::add(acc, MaxPlus::mul(ExtReal::new(p * x), g)))
        })
        .collect();
    GridFunction::new(slopes.to_vec(), values)
}
