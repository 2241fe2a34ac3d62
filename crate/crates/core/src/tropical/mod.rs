//! Tropical polynomials, their corner loci, amoebas of plane curves under
//! `Log_h`, and the Hausdorff comparison between the two as `h → 0`.
//!
//! Amoebas depend on the chosen coordinates on the torus; nothing here
//! tries to canonicalise them.

mod curve;
mod experiment;
mod hausdorff;
mod poly;

pub use curve::{amoeba_distance, amoeba_sample, amoeba_sample_with, AmoebaSample, ComplexCurveSpec, DEFAULT_LOG_RADIUS};
pub use experiment::{convergence_experiment, ConvergenceConfig, ConvergenceRow};
pub use hausdorff::{directed_hausdorff, hausdorff_distance};
pub use poly::{corner_locus_sample, trop_eval, TropEval, TropicalPolynomial, EXACT_EPS};

use crate::error::{Error, Result};

/// Sampled points in `R^n` with a label.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloud {
    pub tag: String,
    pub points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(tag: impl Into<String>, points: Vec<Vec<f64>>) -> Self {
        Self {
            tag: tag.into(),
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(Vec::len)
    }

    /// Smallest axis-aligned box holding every point.
    pub fn bounding_box(&self) -> Result<BoxRegion> {
        let dim = self
            .dim()
            .ok_or_else(|| Error::Domain(format!("point cloud `{}` is empty", self.tag)))?;
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for p in &self.points {
            for (d, &c) in p.iter().enumerate() {
                lo[d] = lo[d].min(c);
                hi[d] = hi[d].max(c);
            }
        }
        BoxRegion::new(lo, hi)
    }

    /// Points inside `region`, boundary included.
    pub fn clip(&self, region: &BoxRegion) -> PointCloud {
        PointCloud {
            tag: self.tag.clone(),
            points: self.points.iter().filter(|p| region.contains(p)).cloned().collect(),
        }
    }

    /// Every coordinate multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> PointCloud {
        PointCloud {
            tag: self.tag.clone(),
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|c| factor * c).collect())
                .collect(),
        }
    }
}

/// Axis-aligned box `[lo_1, hi_1] × … × [lo_n, hi_n]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoxRegion {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoxRegion {
    pub fn new(lo: Vec<f64>, hi: Vec<f64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::Domain("box bounds must have equal, positive length".into()));
        }
        if lo.iter().zip(&hi).any(|(a, b)| !(a.is_finite() && b.is_finite() && a <= b)) {
            return Err(Error::Domain(format!("invalid box {lo:?}..{hi:?}")));
        }
        Ok(Self { lo, hi })
    }

    /// The square `[lo, hi]^dim`.
    pub fn cube(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.len() == self.dim() && p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(c, (a, b))| a <= c && c <= b)
    }

    /// Grows every side by `margin`.
    pub fn inflate(&self, margin: f64) -> BoxRegion {
        BoxRegion {
            lo: self.lo.iter().map(|a| a - margin).collect(),
            hi: self.hi.iter().map(|b| b + margin).collect(),
        }
    }
}
