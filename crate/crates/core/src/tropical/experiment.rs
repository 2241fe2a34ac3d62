use super::{
    amoeba_sample_with, corner_locus_sample, hausdorff_distance, ComplexCurveSpec, PointCloud, TropicalPolynomial,
    DEFAULT_LOG_RADIUS,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceConfig {
    pub h_list: Vec<f64>,
    pub n_samples: usize,
    pub seed: u64,
    pub log_radius: f64,
    /// Spacing of the corner-locus grid; the tie tolerance is half of it.
    pub grid_step: f64,
}

impl ConvergenceConfig {
    pub fn new(h_list: Vec<f64>, n_samples: usize, seed: u64) -> Self {
        Self {
            h_list,
            n_samples,
            seed,
            log_radius: DEFAULT_LOG_RADIUS,
            grid_step: 0.005,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceRow {
    pub h: f64,
    pub distance: f64,
    pub amoeba_points: usize,
    pub skeleton_points: usize,
    pub skipped: usize,
}

/// Hausdorff distance between `Log_h(V)` and the corner locus of `p` for
/// each `h`, both clipped to the amoeba's bounding box grown by one grid
/// step.
///
/// Only curves whose coefficients all have modulus one are accepted: then
/// the dequantizing deformation leaves `f` unchanged and `p` must be its
/// tropicalization (all coefficients zero).
pub fn convergence_experiment(
    f: &ComplexCurveSpec,
    p: &TropicalPolynomial,
    config: &ConvergenceConfig,
) -> Result<Vec<ConvergenceRow>> {
    if !f.has_unit_coefficients() {
        return Err(Error::Domain(
            "only curves with unit-modulus coefficients have a known deformation".into(),
        ));
    }
    let mut expected: Vec<_> = f.tropicalize()?.terms().iter().map(|(e, _)| e.clone()).collect();
    let mut given: Vec<_> = p.terms().iter().map(|(e, _)| e.clone()).collect();
    expected.sort();
    given.sort();
    if expected != given || p.terms().iter().any(|(_, c)| c.abs() > 1e-12) {
        return Err(Error::Domain("tropical polynomial is not the tropicalization of the curve".into()));
    }
    if config.h_list.is_empty() {
        return Err(Error::Domain("no values of h given".into()));
    }
    if !(config.grid_step > 0.0 && config.grid_step.is_finite()) {
        return Err(Error::Domain(format!("grid step must be positive, got {}", config.grid_step)));
    }

    config
        .h_list
        .iter()
        .map(|&h| {
            let sample = amoeba_sample_with(f, h, config.n_samples, config.seed, config.log_radius)?;
            let region = sample.cloud.bounding_box()?.inflate(config.grid_step);
            let skeleton = corner_locus_sample(p, &region, config.grid_step, config.grid_step / 2.0)?;
            let amoeba: PointCloud = sample.cloud.clip(&region);
            if skeleton.is_empty() {
                return Err(Error::Domain(format!("corner locus misses the amoeba box at h = {h}")));
            }
            Ok(ConvergenceRow {
                h,
                distance: hausdorff_distance(&amoeba, &skeleton)?,
                amoeba_points: amoeba.len(),
                skeleton_points: skeleton.len(),
                skipped: sample.skipped,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;

    fn line() -> ComplexCurveSpec {
        let one = Complex64::new(1.0, 0.0);
        ComplexCurveSpec::new(vec![([1, 0], one), ([0, 1], one), ([0, 0], one)]).unwrap()
    }

    #[test]
    fn distances_shrink_with_h() {
        let f = line();
        let p = f.tropicalize().unwrap();
        let mut config = ConvergenceConfig::new(vec![1.0, 0.5, 0.25], 300, 11);
        config.grid_step = 0.02;
        let rows = convergence_experiment(&f, &p, &config).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.windows(2).all(|w| w[1].distance < w[0].distance), "{rows:?}");
    }

    #[test]
    fn rejects_mismatched_inputs() {
        let f = line();
        let config = ConvergenceConfig::new(vec![1.0], 10, 0);
        let wrong = TropicalPolynomial::new(vec![(vec![1, 0], 0.0), (vec![0, 0], 0.0)]).unwrap();
        assert!(convergence_experiment(&f, &wrong, &config).is_err());
        let scaled = ComplexCurveSpec::new(vec![([1, 0], Complex64::new(2.0, 0.0)), ([0, 0], Complex64::new(1.0, 0.0))]).unwrap();
        let p = scaled.tropicalize().unwrap();
        assert!(convergence_experiment(&scaled, &p, &config).is_err());
    }
}
