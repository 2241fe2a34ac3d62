//! The abstract semiring interface and its concrete instances.
//!
//! Every algorithm in this crate is written once against [`Semiring`]; the
//! instances are zero-sized marker types whose element type is
//! [`Semiring::Elem`]. Capabilities that only some instances have (idempotent
//! addition, inverses, roots) are advertised through [`Capabilities`] and
//! checked at run time, returning [`Error::Unsupported`] when missing.

mod ext_real;
mod instances;
mod laws;

use std::fmt;
use std::str::FromStr;

pub use ext_real::{format_real, ExtReal};
pub use instances::{Boolean, MaxMin, MaxPlus, MinPlus, NonNegPlusTimes, UnitMaxMin};
pub use laws::check_axioms;

use crate::error::{Capability, Error, Result};

/// Which optional structure a semiring instance carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Capabilities {
    pub idempotent: bool,
    pub semifield: bool,
    pub radicable: bool,
}

impl Capabilities {
    pub fn has(&self, cap: Capability) -> bool {
        match cap {
            Capability::Idempotent => self.idempotent,
            Capability::Semifield => self.semifield,
            Capability::Radicable => self.radicable,
        }
    }
}

/// Identifies a semiring instance; the string form is the CLI name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SemiringId {
    MaxPlus,
    MinPlus,
    MaxMin,
    Boolean,
    UnitMaxMin,
    NonNegPlusTimes,
    IntervalOf(Box<SemiringId>),
}

impl fmt::Display for SemiringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemiringId::MaxPlus => f.write_str("maxplus"),
            SemiringId::MinPlus => f.write_str("minplus"),
            SemiringId::MaxMin => f.write_str("maxmin"),
            SemiringId::Boolean => f.write_str("boolean"),
            SemiringId::UnitMaxMin => f.write_str("unitmaxmin"),
            SemiringId::NonNegPlusTimes => f.write_str("nonneg"),
            SemiringId::IntervalOf(inner) => write!(f, "interval:{inner}"),
        }
    }
}

impl FromStr for SemiringId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("interval:") {
            return Ok(SemiringId::IntervalOf(Box::new(inner.parse()?)));
        }
        Ok(match s {
            "maxplus" => SemiringId::MaxPlus,
            "minplus" => SemiringId::MinPlus,
            "maxmin" => SemiringId::MaxMin,
            "boolean" => SemiringId::Boolean,
            "unitmaxmin" => SemiringId::UnitMaxMin,
            "nonneg" => SemiringId::NonNegPlusTimes,
            other => return Err(Error::Parse(format!("unknown semiring `{other}`"))),
        })
    }
}

/// Run-time description of a semiring instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Descriptor<S: Semiring> {
    pub id: SemiringId,
    pub carrier: &'static str,
    pub zero: S::Elem,
    pub one: S::Elem,
    pub flags: Capabilities,
}

pub trait Semiring: Copy + Default + fmt::Debug + Send + Sync + 'static {
    type Elem: Copy + PartialEq + fmt::Debug + Send + Sync;

    const FLAGS: Capabilities;

    fn id() -> SemiringId;

    fn carrier() -> &'static str;

    fn zero() -> Self::Elem;

    fn one() -> Self::Elem;

    fn add(a: Self::Elem, b: Self::Elem) -> Self::Elem;

    fn mul(a: Self::Elem, b: Self::Elem) -> Self::Elem;

    /// Whether `a` lies in the declared carrier.
    fn contains(a: &Self::Elem) -> bool;

    fn parse_elem(s: &str) -> Result<Self::Elem>;

    fn format_elem(a: &Self::Elem) -> String;

    /// Multiplicative inverse of a nonzero element.
    fn inv(_a: Self::Elem) -> Result<Self::Elem> {
        Err(unsupported::<Self>(Capability::Semifield))
    }

    /// Some `x` with `x ⊙ … ⊙ x` (`n` factors) equal to `a`.
    fn nth_root(_a: Self::Elem, _n: u32) -> Result<Self::Elem> {
        Err(unsupported::<Self>(Capability::Radicable))
    }

    /// The standard partial order: `a ⪯ b` iff `a ⊕ b = b`.
    fn leq(a: Self::Elem, b: Self::Elem) -> Result<bool> {
        require::<Self>(Capability::Idempotent)?;
        Ok(Self::add(a, b) == b)
    }

    /// Equality up to a relative tolerance on real payloads; exact otherwise.
    fn approx_eq(a: Self::Elem, b: Self::Elem, _rel_tol: f64) -> bool {
        a == b
    }

    fn descriptor() -> Descriptor<Self> {
        Descriptor {
            id: Self::id(),
            carrier: Self::carrier(),
            zero: Self::zero(),
            one: Self::one(),
            flags: Self::FLAGS,
        }
    }
}

/// Semirings whose addition is idempotent, so the standard order is total
/// information about `⊕`.
pub trait Idempotent: Semiring {
    /// Infallible form of [`Semiring::leq`].
    fn precedes(a: Self::Elem, b: Self::Elem) -> bool {
        Self::add(a, b) == b
    }
}

/// Max-plus and min-plus: extended reals with `⊙ = +` and a selective `⊕`.
pub trait Tropical: Idempotent<Elem = ExtReal> {
    /// `true` when `⊕` is `max`.
    const MAXIMIZE: bool;
}

/// `a ⊙ a ⊙ … ⊙ a` with `n` factors; `n = 0` gives the unit.
pub fn power<S: Semiring>(a: S::Elem, n: u32) -> S::Elem {
    (0..n).fold(S::one(), |acc, _| S::mul(acc, a))
}

/// `⊕`-fold of an iterator, starting from the zero.
pub fn sum<S: Semiring>(items: impl IntoIterator<Item = S::Elem>) -> S::Elem {
    items.into_iter().fold(S::zero(), S::add)
}

pub(crate) fn unsupported<S: Semiring>(capability: Capability) -> Error {
    Error::Unsupported {
        semiring: S::id().to_string(),
        capability,
    }
}

pub(crate) fn require<S: Semiring>(capability: Capability) -> Result<()> {
    if S::FLAGS.has(capability) {
        Ok(())
    } else {
        Err(unsupported::<S>(capability))
    }
}

/// Parses a literal and checks carrier membership.
pub(crate) fn checked<S: Semiring>(a: S::Elem, literal: &str) -> Result<S::Elem> {
    if S::contains(&a) {
        Ok(a)
    } else {
        Err(Error::NotInCarrier {
            semiring: S::id().to_string(),
            value: literal.trim().to_string(),
        })
    }
}
