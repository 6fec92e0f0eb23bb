//! Singularity descriptors and their numeric invariants.
//!
//! Two kinds are modelled: the quasi-homogeneous cusp `{x^p = y^q}` with
//! coprime exponents (one Puiseux pair, link the `(p,q)` torus knot) and the
//! ordinary double point.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The cusp `{x^p - y^q = 0}`, normalized so that `p < q`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct CuspDescriptor {
    p: u32,
    q: u32,
}

impl CuspDescriptor {
    /// Validates and sorts the exponents; `(p,q)` and `(q,p)` give the same
    /// descriptor.
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::ExponentTooSmall { p, q });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(CuspDescriptor { p, q })
    }

    /// The ordinary cusp `x^2 = y^3`.
    pub fn ordinary() -> Self {
        CuspDescriptor { p: 2, q: 3 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn milnor_number(&self) -> u64 {
        (self.p as u64 - 1) * (self.q as u64 - 1)
    }

    /// `M = p + q - p/q - q/p - 1`.
    pub fn m_number(&self) -> Rational {
        let (p, q) = (self.p as i64, self.q as i64);
        Rational::from_integer(p + q - 1) - Rational::new(p, q) - Rational::new(q, p)
    }

    /// `M̄ = p + q - ⌈p/q⌉ - ⌈q/p⌉ - 1`.
    pub fn m_bar_number(&self) -> i64 {
        let (p, q) = (self.p as i64, self.q as i64);
        p + q - Rational::new(p, q).ceil() - Rational::new(q, p).ceil() - 1
    }
}

impl TryFrom<[u32; 2]> for CuspDescriptor {
    type Error = Error;

    fn try_from([p, q]: [u32; 2]) -> Result<Self> {
        CuspDescriptor::new(p, q)
    }
}

impl From<CuspDescriptor> for [u32; 2] {
    fn from(c: CuspDescriptor) -> Self {
        [c.p, c.q]
    }
}

impl fmt::Display for CuspDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl fmt::Debug for CuspDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cusp{self}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityDescriptor {
    Cusp(CuspDescriptor),
    OrdinaryDoublePoint,
}

impl From<CuspDescriptor> for SingularityDescriptor {
    fn from(c: CuspDescriptor) -> Self {
        SingularityDescriptor::Cusp(c)
    }
}

/// `(p-1)(q-1)` for a cusp, 1 for a node.
pub fn milnor_number(s: &SingularityDescriptor) -> u64 {
    match s {
        SingularityDescriptor::Cusp(c) => c.milnor_number(),
        SingularityDescriptor::OrdinaryDoublePoint => 1,
    }
}

pub fn m_number(s: &SingularityDescriptor) -> Rational {
    match s {
        SingularityDescriptor::Cusp(c) => c.m_number(),
        SingularityDescriptor::OrdinaryDoublePoint => Rational::ZERO,
    }
}

pub fn m_bar_number(s: &SingularityDescriptor) -> i64 {
    match s {
        SingularityDescriptor::Cusp(c) => c.m_bar_number(),
        SingularityDescriptor::OrdinaryDoublePoint => 0,
    }
}

/// `N² = M̄ - M`, the self-intersection of the nef part of `K + D`.
pub fn n_squared_defect(s: &SingularityDescriptor) -> Rational {
    Rational::from_integer(m_bar_number(s)) - m_number(s)
}
