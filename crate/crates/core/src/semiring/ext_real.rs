use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A real number extended with explicit bottom and top markers.
///
/// Infinities are tags rather than IEEE infinities so that absorption by the
/// semiring zero is decided by rule (`-inf + inf` never produces NaN).
/// NaN is never stored and `-0.0` is normalised to `0.0`.
#[derive(Clone, Copy, Debug)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    /// Converts a float, mapping IEEE infinities onto the tags.
    ///
    /// Panics on NaN.
    pub fn new(x: f64) -> Self {
        assert!(!x.is_nan(), "ExtReal cannot hold NaN");
        if x == f64::INFINITY {
            ExtReal::PosInf
        } else if x == f64::NEG_INFINITY {
            ExtReal::NegInf
        } else {
            // adding +0.0 turns -0.0 into +0.0
            ExtReal::Finite(x + 0.0)
        }
    }

    pub fn try_new(x: f64) -> Option<Self> {
        (!x.is_nan()).then(|| Self::new(x))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// The value as an IEEE float, infinities included.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Finite(x) => x,
            ExtReal::PosInf => f64::INFINITY,
        }
    }

    pub fn neg(self) -> Self {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::Finite(x) => ExtReal::new(-x),
            ExtReal::PosInf => ExtReal::NegInf,
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Sum of two extended reals where `absorbing` wins over everything,
    /// including the opposite infinity.
    pub(crate) fn add_absorbing(self, other: Self, absorbing: Self) -> Self {
        if self == absorbing || other == absorbing {
            return absorbing;
        }
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::new(a + b),
            (ExtReal::Finite(_), inf) | (inf, _) => inf,
        }
    }

    /// Relative closeness for finite values, equality for the markers.
    pub fn approx_eq(self, other: Self, rel_tol: f64) -> bool {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => {
                a == b || (a - b).abs() <= rel_tol * a.abs().max(b.abs()).max(1.0)
            }
            (a, b) => a == b,
        }
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl Eq for ExtReal {}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            // NaN is excluded at construction
            (Finite(a), Finite(b)) => a.partial_cmp(b).expect("ExtReal holds no NaN"),
        }
    }
}

impl From<f64> for ExtReal {
    fn from(x: f64) -> Self {
        ExtReal::new(x)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("+inf"),
            ExtReal::Finite(x) => f.write_str(&format_real(*x)),
        }
    }
}

/// Shortest decimal that parses back to `x`, in exponent form when the
/// plain form would run past 16 digits of zeros.
pub fn format_real(x: f64) -> String {
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "-inf" | "-infinity" | "-∞" => return Ok(ExtReal::NegInf),
            "+inf" | "inf" | "+infinity" | "infinity" | "∞" | "+∞" => return Ok(ExtReal::PosInf),
            _ => {}
        }
        let x: f64 = t
            .parse()
            .map_err(|_| Error::Parse(format!("invalid number `{t}`")))?;
        ExtReal::try_new(x).ok_or_else(|| Error::Parse(format!("invalid number `{t}`")))
    }
}
