use rayon::prelude::*;

use super::{BoxRegion, PointCloud};
use crate::error::{Error, Result};

/// Tie tolerance for exact evaluation; plotting uses half the grid step.
pub const EXACT_EPS: f64 = 1e-9;

/// Max-plus polynomial `max_i (⟨a_i, x⟩ + c_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TropicalPolynomial {
    dim: usize,
    terms: Vec<(Vec<i64>, f64)>,
}

impl TropicalPolynomial {
    /// Needs at least two terms with distinct exponent vectors of one length.
    pub fn new(terms: Vec<(Vec<i64>, f64)>) -> Result<Self> {
        if terms.len() < 2 {
            return Err(Error::Domain("a tropical polynomial needs at least two terms".into()));
        }
        let dim = terms[0].0.len();
        if dim == 0 {
            return Err(Error::Domain("exponent vectors must be nonempty".into()));
        }
        for (i, (exp, coeff)) in terms.iter().enumerate() {
            if exp.len() != dim {
                return Err(Error::Domain(format!("term {i} has {} exponents, expected {dim}", exp.len())));
            }
            if !coeff.is_finite() {
                return Err(Error::Domain(format!("term {i} has non-finite coefficient")));
            }
            if terms[..i].iter().any(|(e, _)| e == exp) {
                return Err(Error::Domain(format!("duplicate exponent {exp:?}")));
            }
        }
        Ok(Self { dim, terms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(Vec<i64>, f64)] {
        &self.terms
    }

    /// Adds `c` to every coefficient.
    pub fn shifted(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k + c)).collect(),
        }
    }

    fn term_value(&self, i: usize, x: &[f64]) -> f64 {
        let (exp, c) = &self.terms[i];
        exp.iter().zip(x).map(|(&a, &xi)| a as f64 * xi).sum::<f64>() + c
    }

    // whether the two largest term values are within eps, in one pass
    fn is_tie(&self, x: &[f64], eps: f64) -> bool {
        let (mut first, mut second) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for i in 0..self.terms.len() {
            let v = self.term_value(i, x);
            if v > first {
                second = first;
                first = v;
            } else if v > second {
                second = v;
            }
        }
        second >= first - eps
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TropEval {
    pub value: f64,
    /// Indices of terms within `eps` of the maximum, ascending.
    pub witnesses: Vec<usize>,
}

pub fn trop_eval(p: &TropicalPolynomial, x: &[f64], eps: f64) -> Result<TropEval> {
    if x.len() != p.dim {
        return Err(Error::Domain(format!("point has dimension {}, polynomial {}", x.len(), p.dim)));
    }
    let values: Vec<f64> = (0..p.terms.len()).map(|i| p.term_value(i, x)).collect();
    let value = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let witnesses = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v >= value - eps)
        .map(|(i, _)| i)
        .collect();
    Ok(TropEval { value, witnesses })
}

// k·step, divided by 1/step when that is an integer so that decimal steps
// give the nearest doubles (-39 · 0.05 would print as -1.9500000000000002)
fn grid_point(k: i64, step: f64) -> f64 {
    let inv = 1.0 / step;
    if inv.round() >= 1.0 && (inv - inv.round()).abs() <= 1e-9 * inv {
        k as f64 / inv.round()
    } else {
        k as f64 * step
    }
}

/// Grid points of `region` where at least two terms attain the maximum
/// within `eps`: a sampling of the tropical hypersurface.
///
/// The grid is anchored at the origin (points are integer multiples of
/// `grid_step`), so loci through the origin with rational slopes are hit
/// exactly. An empty result is valid.
pub fn corner_locus_sample(p: &TropicalPolynomial, region: &BoxRegion, grid_step: f64, eps: f64) -> Result<PointCloud> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::Domain(format!("grid step must be positive, got {grid_step}")));
    }
    if !(eps > 0.0) {
        return Err(Error::Domain(format!("eps must be positive, got {eps}")));
    }
    if region.dim() != p.dim {
        return Err(Error::Domain(format!("box has dimension {}, polynomial {}", region.dim(), p.dim)));
    }
    let axes: Vec<Vec<f64>> = region
        .lo
        .iter()
        .zip(&region.hi)
        .map(|(&lo, &hi)| {
            let first = (lo / grid_step).ceil() as i64;
            let last = (hi / grid_step).floor() as i64;
            (first..=last).map(|k| grid_point(k, grid_step)).collect()
        })
        .collect();
    if axes.iter().any(Vec::is_empty) {
        return Ok(PointCloud::new("corner locus", Vec::new()));
    }

    // split along the first axis; the rest is enumerated odometer-style
    let points: Vec<Vec<f64>> = axes[0]
        .par_iter()
        .flat_map_iter(|&x0| {
            let mut found = Vec::new();
            let mut idx = vec![0usize; axes.len()];
            let mut point = vec![x0; axes.len()];
            loop {
                for d in 1..axes.len() {
                    point[d] = axes[d][idx[d]];
                }
                if p.is_tie(&point, eps) {
                    found.push(point.clone());
                }
                // advance the odometer over axes 1..
                let mut d = axes.len() - 1;
                loop {
                    if d == 0 {
                        return found;
                    }
                    idx[d] += 1;
                    if idx[d] < axes[d].len() {
                        break;
                    }
                    idx[d] = 0;
                    d -= 1;
                }
            }
        })
        .collect();
    Ok(PointCloud::new("corner locus", points))
}
