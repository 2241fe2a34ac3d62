use super::{checked, unsupported, Capabilities, format_real, ExtReal, Idempotent, Semiring, SemiringId, Tropical};
use crate::error::{Capability, Error, Result};

fn parse_ext<S: Semiring<Elem = ExtReal>>(s: &str) -> Result<ExtReal> {
    checked::<S>(s.parse()?, s)
}

fn parse_f64(s: &str) -> Result<f64> {
    let t = s.trim();
    t.parse::<f64>()
        .ok()
        .filter(|x| !x.is_nan())
        .ok_or_else(|| Error::Parse(format!("invalid number `{t}`")))
}

fn root_of(a: ExtReal, n: u32) -> Result<ExtReal> {
    if n == 0 {
        return Err(Error::Domain("root order must be at least 1".into()));
    }
    Ok(match a {
        ExtReal::Finite(x) => ExtReal::new(x / f64::from(n)),
        marker => marker,
    })
}

/// `R ∪ {−∞}` with `⊕ = max`, `⊙ = +`, zero `−∞`, unit `0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MaxPlus;

impl Semiring for MaxPlus {
    type Elem = ExtReal;

    const FLAGS: Capabilities = Capabilities {
        idempotent: true,
        semifield: true,
        radicable: true,
    };

    fn id() -> SemiringId {
        SemiringId::MaxPlus
    }

    fn carrier() -> &'static str {
        "reals with -inf"
    }

    fn zero() -> ExtReal {
        ExtReal::NegInf
    }

    fn one() -> ExtReal {
        ExtReal::ZERO
    }

    fn add(a: ExtReal, b: ExtReal) -> ExtReal {
        a.max(b)
    }

    fn mul(a: ExtReal, b: ExtReal) -> ExtReal {
        a.add_absorbing(b, ExtReal::NegInf)
    }

    fn contains(a: &ExtReal) -> bool {
        *a != ExtReal::PosInf
    }

    fn parse_elem(s: &str) -> Result<ExtReal> {
        parse_ext::<Self>(s)
    }

    fn format_elem(a: &ExtReal) -> String {
        a.to_string()
    }

    fn inv(a: ExtReal) -> Result<ExtReal> {
        match a {
            ExtReal::NegInf => Err(Error::NoInverse),
            x => Ok(x.neg()),
        }
    }

    fn nth_root(a: ExtReal, n: u32) -> Result<ExtReal> {
        root_of(a, n)
    }

    fn approx_eq(a: ExtReal, b: ExtReal, rel_tol: f64) -> bool {
        a.approx_eq(b, rel_tol)
    }
}

impl Idempotent for MaxPlus {}

impl Tropical for MaxPlus {
    const MAXIMIZE: bool = true;
}

/// `R ∪ {+∞}` with `⊕ = min`, `⊙ = +`, zero `+∞`, unit `0`.
///
/// The standard order is the reverse of `≤`: `5 ⪯ 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MinPlus;

impl Semiring for MinPlus {
    type Elem = ExtReal;

    const FLAGS: Capabilities = MaxPlus::FLAGS;

    fn id() -> SemiringId {
        SemiringId::MinPlus
    }

    fn carrier() -> &'static str {
        "reals with +inf"
    }

    fn zero() -> ExtReal {
        ExtReal::PosInf
    }

    fn one() -> ExtReal {
        ExtReal::ZERO
    }

    fn add(a: ExtReal, b: ExtReal) -> ExtReal {
        a.min(b)
    }

    fn mul(a: ExtReal, b: ExtReal) -> ExtReal {
        a.add_absorbing(b, ExtReal::PosInf)
    }

    fn contains(a: &ExtReal) -> bool {
        *a != ExtReal::NegInf
    }

    fn parse_elem(s: &str) -> Result<ExtReal> {
        parse_ext::<Self>(s)
    }

    fn format_elem(a: &ExtReal) -> String {
        a.to_string()
    }

    fn inv(a: ExtReal) -> Result<ExtReal> {
        match a {
            ExtReal::PosInf => Err(Error::NoInverse),
            x => Ok(x.neg()),
        }
    }

    fn nth_root(a: ExtReal, n: u32) -> Result<ExtReal> {
        root_of(a, n)
    }

    fn approx_eq(a: ExtReal, b: ExtReal, rel_tol: f64) -> bool {
        a.approx_eq(b, rel_tol)
    }
}

impl Idempotent for MinPlus {}

impl Tropical for MinPlus {
    const MAXIMIZE: bool = false;
}

/// `R ∪ {−∞, +∞}` with `⊕ = max`, `⊙ = min`; zero `−∞`, unit `+∞`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MaxMin;

impl Semiring for MaxMin {
    type Elem = ExtReal;

    const FLAGS: Capabilities = Capabilities {
        idempotent: true,
        semifield: false,
        radicable: true,
    };

    fn id() -> SemiringId {
        SemiringId::MaxMin
    }

    fn carrier() -> &'static str {
        "reals with -inf and +inf"
    }

    fn zero() -> ExtReal {
        ExtReal::NegInf
    }

    fn one() -> ExtReal {
        ExtReal::PosInf
    }

    fn add(a: ExtReal, b: ExtReal) -> ExtReal {
        a.max(b)
    }

    fn mul(a: ExtReal, b: ExtReal) -> ExtReal {
        a.min(b)
    }

    fn contains(_a: &ExtReal) -> bool {
        true
    }

    fn parse_elem(s: &str) -> Result<ExtReal> {
        parse_ext::<Self>(s)
    }

    fn format_elem(a: &ExtReal) -> String {
        a.to_string()
    }

    // ⊙ is idempotent, so x = a solves x^n = a.
    fn nth_root(a: ExtReal, n: u32) -> Result<ExtReal> {
        if n == 0 {
            return Err(Error::Domain("root order must be at least 1".into()));
        }
        Ok(a)
    }
}

impl Idempotent for MaxMin {}

/// `{0, 1}` with `⊕ = or`, `⊙ = and`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Boolean;

impl Semiring for Boolean {
    type Elem = bool;

    const FLAGS: Capabilities = Capabilities {
        idempotent: true,
        semifield: true,
        radicable: true,
    };

    fn id() -> SemiringId {
        SemiringId::Boolean
    }

    fn carrier() -> &'static str {
        "{0, 1}"
    }

    fn zero() -> bool {
        false
    }

    fn one() -> bool {
        true
    }

    fn add(a: bool, b: bool) -> bool {
        a || b
    }

    fn mul(a: bool, b: bool) -> bool {
        a && b
    }

    fn contains(_a: &bool) -> bool {
        true
    }

    fn parse_elem(s: &str) -> Result<bool> {
        match s.trim() {
            "1" | "true" => Ok(true),
            "0" | "false" => Ok(false),
            other => Err(Error::Parse(format!("invalid boolean `{other}`"))),
        }
    }

    fn format_elem(a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }

    fn inv(a: bool) -> Result<bool> {
        if a {
            Ok(true)
        } else {
            Err(Error::NoInverse)
        }
    }

    fn nth_root(a: bool, n: u32) -> Result<bool> {
        if n == 0 {
            return Err(Error::Domain("root order must be at least 1".into()));
        }
        Ok(a)
    }
}

impl Idempotent for Boolean {}

/// `[0, 1]` with `⊕ = max`, `⊙ = min`: membership grades of fuzzy sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct UnitMaxMin;

impl Semiring for UnitMaxMin {
    type Elem = f64;

    const FLAGS: Capabilities = Capabilities {
        idempotent: true,
        semifield: false,
        radicable: true,
    };

    fn id() -> SemiringId {
        SemiringId::UnitMaxMin
    }

    fn carrier() -> &'static str {
        "[0, 1]"
    }

    fn zero() -> f64 {
        0.0
    }

    fn one() -> f64 {
        1.0
    }

    fn add(a: f64, b: f64) -> f64 {
        a.max(b)
    }

    fn mul(a: f64, b: f64) -> f64 {
        a.min(b)
    }

    fn contains(a: &f64) -> bool {
        (0.0..=1.0).contains(a)
    }

    fn parse_elem(s: &str) -> Result<f64> {
        checked::<Self>(parse_f64(s)? + 0.0, s)
    }

    fn format_elem(a: &f64) -> String {
        format_real(*a)
    }

    fn nth_root(a: f64, n: u32) -> Result<f64> {
        if n == 0 {
            return Err(Error::Domain("root order must be at least 1".into()));
        }
        Ok(a)
    }
}

impl Idempotent for UnitMaxMin {}

/// Nonnegative reals with ordinary `+` and `×`.
///
/// Not idempotent; this is the undeformed object that dequantization starts
/// from, kept for comparison.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NonNegPlusTimes;

impl Semiring for NonNegPlusTimes {
    type Elem = f64;

    const FLAGS: Capabilities = Capabilities {
        idempotent: false,
        semifield: true,
        radicable: true,
    };

    fn id() -> SemiringId {
        SemiringId::NonNegPlusTimes
    }

    fn carrier() -> &'static str {
        "nonnegative reals"
    }

    fn zero() -> f64 {
        0.0
    }

    fn one() -> f64 {
        1.0
    }

    fn add(a: f64, b: f64) -> f64 {
        a + b
    }

    fn mul(a: f64, b: f64) -> f64 {
        a * b
    }

    fn contains(a: &f64) -> bool {
        a.is_finite() && *a >= 0.0
    }

    fn parse_elem(s: &str) -> Result<f64> {
        checked::<Self>(parse_f64(s)? + 0.0, s)
    }

    fn format_elem(a: &f64) -> String {
        format_real(*a)
    }

    fn inv(a: f64) -> Result<f64> {
        if a == 0.0 {
            Err(Error::NoInverse)
        } else {
            Ok(1.0 / a)
        }
    }

    fn nth_root(a: f64, n: u32) -> Result<f64> {
        match n {
            0 => Err(Error::Domain("root order must be at least 1".into())),
            1 => Ok(a),
            3 => Ok(a.cbrt()),
            _ => Ok(a.powf(1.0 / f64::from(n))),
        }
    }

    fn leq(_a: f64, _b: f64) -> Result<bool> {
        Err(unsupported::<Self>(Capability::Idempotent))
    }

    fn approx_eq(a: f64, b: f64, rel_tol: f64) -> bool {
        a == b || (a - b).abs() <= rel_tol * a.abs().max(b.abs()).max(1.0)
    }
}
