use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{PointCloud, TropicalPolynomial};
use crate::error::{Error, Result};

/// Half-width of the log-radius range used when sampling a torus coordinate.
pub const DEFAULT_LOG_RADIUS: f64 = 6.0;

/// Laurent polynomial `f(x, y) = Σ c_k x^{a_k} y^{b_k}` on `(C*)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexCurveSpec {
    monomials: Vec<([i32; 2], Complex64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Var {
    X,
    Y,
}

impl ComplexCurveSpec {
    /// Rejects the zero polynomial, constants, and repeated exponents.
    pub fn new(monomials: Vec<([i32; 2], Complex64)>) -> Result<Self> {
        for (i, (exp, c)) in monomials.iter().enumerate() {
            if !(c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::Domain(format!("monomial {i} has a non-finite coefficient")));
            }
            if monomials[..i].iter().any(|(e, _)| e == exp) {
                return Err(Error::Domain(format!("duplicate exponent {exp:?}")));
            }
        }
        let monomials: Vec<_> = monomials.into_iter().filter(|(_, c)| c.norm() > 0.0).collect();
        if monomials.is_empty() {
            return Err(Error::Domain("the zero polynomial defines no curve".into()));
        }
        // on the torus, f and f / monomial have the same zeros
        let first = monomials[0].0;
        if monomials.iter().all(|(e, _)| e[0] - first[0] == 0 && e[1] - first[1] == 0) {
            return Err(Error::Domain("a monomial has no zeros on the torus".into()));
        }
        Ok(Self { monomials })
    }

    pub fn monomials(&self) -> &[([i32; 2], Complex64)] {
        &self.monomials
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.monomials
            .iter()
            .map(|(e, c)| c * x.powi(e[0]) * y.powi(e[1]))
            .sum()
    }

    /// Whether every coefficient has modulus one (within `1e-12`).
    pub fn has_unit_coefficients(&self) -> bool {
        self.monomials.iter().all(|(_, c)| (c.norm() - 1.0).abs() <= 1e-12)
    }

    /// Max-plus polynomial with coefficients `ln |c_k|`.
    pub fn tropicalize(&self) -> Result<TropicalPolynomial> {
        TropicalPolynomial::new(
            self.monomials
                .iter()
                .map(|(e, c)| (vec![i64::from(e[0]), i64::from(e[1])], c.norm().ln()))
                .collect(),
        )
    }

    fn degree_in(&self, var: Var) -> i32 {
        let k = var as usize;
        let hi = self.monomials.iter().map(|(e, _)| e[k]).max().unwrap_or(0);
        let lo = self.monomials.iter().map(|(e, _)| e[k]).min().unwrap_or(0);
        hi - lo
    }

    /// Coefficients (ascending) of the univariate polynomial in the free
    /// variable once `fixed` is set to `value`, shifted to start at degree 0.
    fn restrict(&self, fixed: Var, value: Complex64) -> Vec<Complex64> {
        let (fk, free) = match fixed {
            Var::X => (0, 1),
            Var::Y => (1, 0),
        };
        let lo = self.monomials.iter().map(|(e, _)| e[free]).min().unwrap_or(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (self.degree_in(if free == 1 { Var::Y } else { Var::X }) + 1) as usize];
        for (e, c) in &self.monomials {
            coeffs[(e[free] - lo) as usize] += c * value.powi(e[fk]);
        }
        coeffs
    }
}

/// Nonzero roots of `Σ c_k t^k`, or `None` when nothing is left to solve.
fn nonzero_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    let negligible = |c: &Complex64| c.norm() <= 1e-14 * scale;
    let hi = coeffs.iter().rposition(|c| !negligible(c))?;
    // factors of t give zero roots, which are off the torus
    let lo = coeffs.iter().position(|c| !negligible(c))?;
    let core = &coeffs[lo..=hi];
    let degree = core.len() - 1;
    match degree {
        0 => None,
        1 => Some(vec![-core[0] / core[1]]),
        _ => {
            let lead = core[degree];
            let mut companion = DMatrix::<Complex64>::zeros(degree, degree);
            for i in 1..degree {
                companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
            }
            for i in 0..degree {
                companion[(i, degree - 1)] = -core[i] / lead;
            }
            let eig = companion.schur().eigenvalues()?;
            let poly = |t: Complex64| core.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + c);
            let deriv = |t: Complex64| {
                core.iter()
                    .enumerate()
                    .skip(1)
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, (k, c)| acc * t + c * k as f64)
            };
            Some(
                eig.iter()
                    .map(|&root| {
                        // two Newton steps to polish the eigenvalue
                        let mut t = root;
                        for _ in 0..2 {
                            let d = deriv(t);
                            if d.norm() > 0.0 {
                                t -= poly(t) / d;
                            }
                        }
                        t
                    })
                    .filter(|t| t.norm() > 0.0 && t.re.is_finite() && t.im.is_finite())
                    .collect(),
            )
        }
    }
}

/// Points of `Log_h(V)` sampled by fixing one coordinate and solving for the other.
#[derive(Clone, Debug, PartialEq)]
pub struct AmoebaSample {
    pub cloud: PointCloud,
    /// Samples where the restricted polynomial had no nonzero roots.
    pub skipped: usize,
}

/// [`amoeba_sample_with`] using [`DEFAULT_LOG_RADIUS`].
pub fn amoeba_sample(f: &ComplexCurveSpec, h: f64, n_samples: usize, seed: u64) -> Result<AmoebaSample> {
    amoeba_sample_with(f, h, n_samples, seed, DEFAULT_LOG_RADIUS)
}

/// Samples the amoeba of `V(f)` under `Log_h(z) = (h ln|z₁|, h ln|z₂|)`.
///
/// Sample `i` draws a torus point `z = e^{t + iθ}` with `t` uniform in
/// `[-log_radius, log_radius]` and `θ` uniform in `[0, 2π)`, fixes one
/// coordinate to `z`, and solves for the other through the companion
/// matrix. The fixed coordinate alternates between `x` (even `i`) and `y`
/// (odd `i`) when `f` depends on both. Each sample has its own RNG stream
/// derived from `(seed, i)`, so results do not depend on scheduling, and
/// the cloud for `h` is exactly `h` times the cloud for `h = 1`.
pub fn amoeba_sample_with(
    f: &ComplexCurveSpec,
    h: f64,
    n_samples: usize,
    seed: u64,
    log_radius: f64,
) -> Result<AmoebaSample> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("h must be positive, got {h}")));
    }
    if !(log_radius > 0.0 && log_radius.is_finite()) {
        return Err(Error::Domain(format!("log radius must be positive, got {log_radius}")));
    }
    if n_samples == 0 {
        return Err(Error::Domain("no samples requested".into()));
    }
    let solvable_x = f.degree_in(Var::Y) > 0;
    let solvable_y = f.degree_in(Var::X) > 0;

    let per_sample: Vec<Option<Vec<Vec<f64>>>> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let t = rng.random_range(-log_radius..=log_radius);
            let theta = rng.random_range(0.0..TAU);
            let z = Complex64::from_polar(t.exp(), theta);
            let fixed = match (solvable_x, solvable_y) {
                (true, true) if i % 2 == 1 => Var::Y,
                (true, _) => Var::X,
                (false, _) => Var::Y,
            };
            let roots = nonzero_roots(&f.restrict(fixed, z))?;
            if roots.is_empty() {
                return None;
            }
            let fixed_log = h * z.norm().ln();
            Some(
                roots
                    .into_iter()
                    .map(|w| {
                        let free_log = h * w.norm().ln();
                        match fixed {
                            Var::X => vec![fixed_log, free_log],
                            Var::Y => vec![free_log, fixed_log],
                        }
                    })
                    .collect(),
            )
        })
        .collect();

    let skipped = per_sample.iter().filter(|s| s.is_none()).count();
    if skipped == n_samples {
        return Err(Error::Domain("every sample was degenerate".into()));
    }
    let points = per_sample.into_iter().flatten().flatten().collect();
    Ok(AmoebaSample {
        cloud: PointCloud::new(format!("amoeba h={h}"), points),
        skipped,
    })
}

/// Distance, in the second `Log_h` coordinate, from `point` to the amoeba
/// slice above its first coordinate, probed at `n_angles` equally spaced
/// arguments of `x`. Zero (up to rounding) means `point` is in the amoeba.
pub fn amoeba_distance(f: &ComplexCurveSpec, point: [f64; 2], h: f64, n_angles: usize) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) || n_angles == 0 {
        return Err(Error::Domain("need h > 0 and at least one angle".into()));
    }
    if f.degree_in(Var::Y) == 0 {
        return Err(Error::Domain("curve does not depend on y".into()));
    }
    let modulus = (point[0] / h).exp();
    let best = (0..n_angles)
        .filter_map(|k| {
            let theta = TAU * k as f64 / n_angles as f64;
            let x = Complex64::from_polar(modulus, theta);
            nonzero_roots(&f.restrict(Var::X, x))
        })
        .flatten()
        .map(|y| (h * y.norm().ln() - point[1]).abs())
        .fold(f64::INFINITY, f64::min);
    Ok(best)
}
