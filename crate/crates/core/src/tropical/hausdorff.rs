use rayon::prelude::*;

use super::PointCloud;
use crate::error::{Error, Result};

fn check(a: &PointCloud, b: &PointCloud) -> Result<()> {
    for c in [a, b] {
        if c.is_empty() {
            return Err(Error::Domain(format!("point cloud `{}` is empty", c.tag)));
        }
        let dim = c.points[0].len();
        if c.points.iter().any(|p| p.len() != dim) {
            return Err(Error::Domain(format!("point cloud `{}` mixes dimensions", c.tag)));
        }
    }
    if a.dim() != b.dim() {
        return Err(Error::Domain(format!(
            "clouds `{}` and `{}` have different dimensions",
            a.tag, b.tag
        )));
    }
    Ok(())
}

fn dist2(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `sup_{a ∈ A} min_{b ∈ B} |a − b|` in the Euclidean metric.
pub fn directed_hausdorff(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    check(a, b)?;
    let worst = a
        .points
        .par_iter()
        .map(|p| b.points.iter().map(|q| dist2(p, q)).fold(f64::INFINITY, f64::min))
        .reduce(|| 0.0, f64::max);
    Ok(worst.sqrt())
}

/// Symmetric Hausdorff distance; brute force, `O(|A|·|B|)`.
pub fn hausdorff_distance(a: &PointCloud, b: &PointCloud) -> Result<f64> {
    Ok(directed_hausdorff(a, b)?.max(directed_hausdorff(b, a)?))
}
