//! Tristram–Levine signatures of torus knots.
//!
//! For the `(p,q)` torus knot the signature function `x ↦ σ(e^{2πix})` is read
//! off the jump set `Σ = {i/p + j/q}`: at a point `x` that is not a jump,
//! `σ = -#(Σ ∩ (x, x+1)) + #(Σ \ (x, x+1))`. Everything here is exact.

mod seifert;
mod step;

pub use seifert::{bidiagonal_seifert, seifert_signature_at, SeifertMatrix, DEFAULT_TOLERANCE};
pub use step::{common_breakpoints, interval_midpoints, StepFunction};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::singularities::CuspDescriptor;

/// Sorted multiset of jump positions in `(0,2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpSet {
    elements: Vec<Rational>,
}

impl JumpSet {
    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Multiplicity of `s`.
    pub fn count(&self, s: Rational) -> usize {
        self.count_below(s, true) - self.count_below(s, false)
    }

    /// Number of elements `< s` (or `<= s` when `inclusive`).
    fn count_below(&self, s: Rational, inclusive: bool) -> usize {
        self.elements
            .partition_point(|e| if inclusive { *e <= s } else { *e < s })
    }

    /// Number of elements in the open interval `(lo, hi)`.
    fn count_open(&self, lo: Rational, hi: Rational) -> usize {
        self.count_below(hi, false) - self.count_below(lo, true)
    }
}

pub fn jump_set(c: &CuspDescriptor) -> JumpSet {
    let (p, q) = (c.p() as i64, c.q() as i64);
    let mut elements: Vec<Rational> = (1..p)
        .flat_map(|i| (1..q).map(move |j| Rational::new(i * q + j * p, p * q)))
        .collect();
    elements.sort_unstable();
    JumpSet { elements }
}

fn check_unit_interval(x: Rational) -> Result<()> {
    if x <= Rational::ZERO || x >= Rational::ONE {
        return Err(Error::OutOfRange(x));
    }
    Ok(())
}

fn signature_from_jumps(jumps: &JumpSet, x: Rational) -> Result<i64> {
    check_unit_interval(x)?;
    let upper = x + Rational::ONE;
    if jumps.count(x) > 0 {
        return Err(Error::BreakpointEvaluation(x));
    }
    if jumps.count(upper) > 0 {
        return Err(Error::BreakpointEvaluation(x));
    }
    let inside = jumps.count_open(x, upper) as i64;
    let outside = jumps.len() as i64 - inside;
    Ok(outside - inside)
}

/// `σ(e^{2πix})` for the `(p,q)` torus knot by the counting formula.
pub fn torus_signature_at(c: &CuspDescriptor, x: Rational) -> Result<i64> {
    signature_from_jumps(&jump_set(c), x)
}

/// The full signature function of the `(p,q)` torus knot as a step function.
pub fn torus_signature_function(c: &CuspDescriptor) -> StepFunction {
    let jumps = jump_set(c);
    let breakpoints = jumps
        .elements()
        .iter()
        .map(|&s| {
            if s > Rational::ONE {
                s - Rational::ONE
            } else {
                s
            }
        })
        .collect();
    StepFunction::from_sampler(breakpoints, |x| signature_from_jumps(&jumps, x))
        .expect("midpoints of the jump refinement are never jumps")
}

pub fn integral(f: &StepFunction) -> Rational {
    f.integral()
}

/// `-3∫σ - M - μ` for the cusp; lies strictly between 0 and 2/9 for every
/// cuspidal singularity.
pub fn signature_defect(c: &CuspDescriptor) -> Rational {
    let integral = torus_signature_function(c).integral();
    -(integral * 3) - c.m_number() - Rational::from_integer(c.milnor_number() as i64)
}

/// All cusps `(p,q)` with `p < q` and `pq <= max_product`, in `(p,q)` order.
pub fn cusps_up_to_product(max_product: u32) -> Vec<CuspDescriptor> {
    (2..)
        .take_while(|p| p * (p + 1) <= max_product)
        .flat_map(|p| {
            ((p + 1)..=max_product / p).filter_map(move |q| CuspDescriptor::new(p, q).ok())
        })
        .collect()
}

/// [`signature_defect`] for every cusp with `pq <= max_product`.
pub fn defect_table(max_product: u32) -> Vec<(CuspDescriptor, Rational)> {
    #[cfg(feature = "parallel")]
    {
        defect_table_parallel(max_product)
    }
    #[cfg(not(feature = "parallel"))]
    {
        defect_table_sequential(max_product)
    }
}

pub fn defect_table_sequential(max_product: u32) -> Vec<(CuspDescriptor, Rational)> {
    cusps_up_to_product(max_product)
        .into_iter()
        .map(|c| (c, signature_defect(&c)))
        .collect()
}

#[cfg(feature = "parallel")]
pub fn defect_table_parallel(max_product: u32) -> Vec<(CuspDescriptor, Rational)> {
    use rayon::prelude::*;

    cusps_up_to_product(max_product)
        .into_par_iter()
        .map(|c| (c, signature_defect(&c)))
        .collect()
}
