//! Maslov dequantization: the change of variables `x ↦ h ln x` and the
//! deformed addition `u ⊕_h v = h ln(e^{u/h} + e^{v/h})`.
//!
//! For `h > 0` the deformed semiring tends to max-plus as `h → 0⁺`; for
//! `h < 0` it tends to min-plus. The limits themselves are [`MaxPlus`] and
//! [`MinPlus`]; this module only represents nonzero `h`.
//!
//! [`MaxPlus`]: crate::semiring::MaxPlus
//! [`MinPlus`]: crate::semiring::MinPlus

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::semiring::ExtReal;

/// The deformation parameter `h`, finite and nonzero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformationParam(f64);

impl DeformationParam {
    pub fn new(h: f64) -> Result<Self> {
        if h.is_finite() && h != 0.0 {
            Ok(Self(h))
        } else {
            Err(Error::Domain(format!("deformation parameter must be finite and nonzero, got {h}")))
        }
    }

    pub fn h(self) -> f64 {
        self.0
    }

    /// Zero of the deformed semiring: `−∞` for `h > 0`, `+∞` for `h < 0`.
    pub fn zero(self) -> ExtReal {
        if self.0 > 0.0 {
            ExtReal::NegInf
        } else {
            ExtReal::PosInf
        }
    }
}

/// `Φ_h(x) = h ln x`, with `Φ_h(0)` the semiring zero.
pub fn phi_h(x: f64, p: DeformationParam) -> Result<ExtReal> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!("Φ_h is defined on nonnegative reals, got {x}")));
    }
    if x == 0.0 {
        return Ok(p.zero());
    }
    Ok(ExtReal::new(p.h() * x.ln()))
}

/// The deformed sum in overflow-safe form
/// `sel(u, v) + h ln(1 + e^{−|u−v|/|h|})`, where `sel` is `max` for `h > 0`
/// and `min` for `h < 0`.
pub fn add_h(u: ExtReal, v: ExtReal, p: DeformationParam) -> ExtReal {
    let zero = p.zero();
    if u == zero {
        return v;
    }
    if v == zero {
        return u;
    }
    match (u, v) {
        (ExtReal::Finite(a), ExtReal::Finite(b)) => {
            let h = p.h();
            let sel = if h > 0.0 { a.max(b) } else { a.min(b) };
            let gap = (a - b).abs() / h.abs();
            ExtReal::new(sel + h * (-gap).exp().ln_1p())
        }
        // the top marker dominates the selection
        (ExtReal::Finite(_), top) | (top, _) => top,
    }
}

/// `Φ_h(|z|)`: the passage from complex numbers through the modulus.
pub fn dequantize_complex(z: Complex64, p: DeformationParam) -> Result<ExtReal> {
    phi_h(z.norm(), p)
}

/// Distance of `u ⊕_h v` from its limit; lies in `[0, |h| ln 2]`.
pub fn deformation_residual(u: f64, v: f64, p: DeformationParam) -> Result<f64> {
    if !(u.is_finite() && v.is_finite()) {
        return Err(Error::Domain("residual needs finite arguments".into()));
    }
    // the correction term alone; subtracting the selected value would round
    let h = p.h().abs();
    Ok(h * (-(u - v).abs() / h).exp().ln_1p())
}
