//! Deformation scenarios and the obstructions they must pass.
//!
//! A scenario describes a deformation whose central fiber `X₀` has a single
//! cusp and whose generic fiber `Y` (geometric genus `g`) carries cusps
//! `z₁…zₙ` plus `R` ordinary double points. Four necessary conditions are
//! checked:
//!
//! * genus formula: `μ₀ = 2g + 2R + Σ μₖ`;
//! * two-sided signature bound: `|σ₀ - Σ σₖ + R| ≤ b₁(Y) = 2g + R` almost
//!   everywhere on the circle;
//! * one-sided signature bound: `Σ(-σₖ) + σ₀ ≤ 2g` almost everywhere;
//! * M-number bound: `Σ Mₖ - M₀ < 8g + 2R + 2/9`.
//!
//! Passing all four means "not obstructed", never "exists".

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::Rational;
use crate::signature::{
    common_breakpoints, interval_midpoints, torus_signature_function, StepFunction,
};
use crate::singularities::CuspDescriptor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationScenario {
    pub central: CuspDescriptor,
    pub cusps: Vec<CuspDescriptor>,
    pub double_points: u32,
    pub genus: u32,
}

impl DeformationScenario {
    pub fn new(
        central: CuspDescriptor,
        cusps: Vec<CuspDescriptor>,
        double_points: u32,
        genus: u32,
    ) -> Self {
        DeformationScenario {
            central,
            cusps,
            double_points,
            genus,
        }
    }

    /// Total number of singular points `N = n + R` of the generic fiber.
    pub fn singular_point_count(&self) -> usize {
        self.cusps.len() + self.double_points as usize
    }

    /// Cusps of the generic fiber with multiplicities, in descriptor order.
    pub fn cusp_multiplicities(&self) -> BTreeMap<CuspDescriptor, i64> {
        let mut counts = BTreeMap::new();
        for c in &self.cusps {
            *counts.entry(*c).or_insert(0) += 1;
        }
        counts
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Admissible,
    Obstructed,
}

/// `μ₀` against `2g + 2R + Σ μₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenusFormulaCheck {
    pub verdict: Verdict,
    pub central_milnor: u64,
    pub fiber_side: u64,
}

/// Result of a sweep over the common refinement of all signature functions.
/// `witness` is the leftmost midpoint where `left_side` is largest;
/// `margin = bound - left_side` is negative exactly when the check fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureCheck {
    pub verdict: Verdict,
    pub witness: Rational,
    pub left_side: i64,
    pub bound: i64,
    pub margin: i64,
}

/// Strict inequality `left_side < right_side` between exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrictBoundCheck {
    pub verdict: Verdict,
    pub left_side: Rational,
    pub right_side: Rational,
}

impl StrictBoundCheck {
    fn compare(left_side: Rational, right_side: Rational) -> Self {
        StrictBoundCheck {
            verdict: Verdict::from_bool(left_side < right_side),
            left_side,
            right_side,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObstructionReport {
    pub betti: u64,
    pub genus_formula: GenusFormulaCheck,
    pub signature_bound: SignatureCheck,
    pub one_sided_bound: SignatureCheck,
    pub m_number_bound: StrictBoundCheck,
    pub overall: Overall,
}

impl ObstructionReport {
    pub fn is_admissible(&self) -> bool {
        self.overall == Overall::Admissible
    }

    /// True when every check other than the genus formula holds.
    pub fn passes_inequalities(&self) -> bool {
        self.signature_bound.verdict.holds()
            && self.one_sided_bound.verdict.holds()
            && self.m_number_bound.verdict.holds()
    }
}

/// `b₁(Y) = 2g + R`.
pub fn betti_number(s: &DeformationScenario) -> u64 {
    2 * s.genus as u64 + s.double_points as u64
}

pub fn check_genus_formula(s: &DeformationScenario) -> GenusFormulaCheck {
    let central_milnor = s.central.milnor_number();
    let fiber_side = 2 * s.genus as u64
        + 2 * s.double_points as u64
        + s.cusps
            .iter()
            .map(CuspDescriptor::milnor_number)
            .sum::<u64>();
    GenusFormulaCheck {
        verdict: Verdict::from_bool(central_milnor == fiber_side),
        central_milnor,
        fiber_side,
    }
}

/// Signature values of the central and generic fibers at one point.
struct SweepPoint {
    x: Rational,
    central: i64,
    fiber_cusps: i64,
}

/// Evaluates all signature functions at every midpoint of their common
/// refinement. Double points are not included here; each contributes the
/// constant `-1`.
fn sweep<'a, F>(s: &DeformationScenario, signature_of: F) -> Vec<SweepPoint>
where
    F: Fn(&CuspDescriptor) -> &'a StepFunction,
{
    let central = signature_of(&s.central);
    let fiber: Vec<(&StepFunction, i64)> = s
        .cusp_multiplicities()
        .into_iter()
        .map(|(c, n)| (signature_of(&c), n))
        .collect();
    let breakpoints =
        common_breakpoints(std::iter::once(central).chain(fiber.iter().map(|(f, _)| *f)));
    interval_midpoints(&breakpoints)
        .map(|x| {
            let at = |f: &StepFunction| f.value_at(x).expect("midpoint of common refinement");
            SweepPoint {
                x,
                central: at(central),
                fiber_cusps: fiber.iter().map(|(f, n)| n * at(f)).sum(),
            }
        })
        .collect()
}

fn worst_case(
    points: &[SweepPoint],
    bound: i64,
    left: impl Fn(&SweepPoint) -> i64,
) -> SignatureCheck {
    let (witness, left_side) = points
        .iter()
        .map(|pt| (pt.x, left(pt)))
        .fold(None, |best: Option<(Rational, i64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        })
        .expect("sweep always has at least one interval");
    SignatureCheck {
        verdict: Verdict::from_bool(left_side <= bound),
        witness,
        left_side,
        bound,
        margin: bound - left_side,
    }
}

fn two_sided(s: &DeformationScenario, points: &[SweepPoint]) -> SignatureCheck {
    let r = s.double_points as i64;
    worst_case(points, betti_number(s) as i64, |pt| {
        (pt.central - (pt.fiber_cusps - r)).abs()
    })
}

fn one_sided(s: &DeformationScenario, points: &[SweepPoint]) -> SignatureCheck {
    worst_case(points, 2 * s.genus as i64, |pt| {
        -pt.fiber_cusps + pt.central
    })
}

/// Signature functions keyed by cusp, built on demand.
#[derive(Default)]
pub struct SignatureCache {
    functions: BTreeMap<CuspDescriptor, StepFunction>,
}

impl SignatureCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cache pre-filled with the signature functions of `cusps`.
    pub fn with_cusps<I: IntoIterator<Item = CuspDescriptor>>(cusps: I) -> Self {
        let mut cache = Self::new();
        for c in cusps {
            cache.insert(c);
        }
        cache
    }

    pub fn insert(&mut self, c: CuspDescriptor) {
        self.functions
            .entry(c)
            .or_insert_with(|| torus_signature_function(&c));
    }

    pub fn prepare(&mut self, s: &DeformationScenario) {
        self.insert(s.central);
        for c in &s.cusps {
            self.insert(*c);
        }
    }

    /// Panics if `c` was never inserted.
    pub fn get(&self, c: &CuspDescriptor) -> &StepFunction {
        &self.functions[c]
    }
}

fn sweep_fresh(s: &DeformationScenario) -> Vec<SweepPoint> {
    let mut cache = SignatureCache::new();
    cache.prepare(s);
    sweep(s, |c| cache.get(c))
}

/// `|σ₀(x) - (Σ σₖ(x) - R)| ≤ 2g + R` at every interval midpoint.
pub fn check_signature_bound(s: &DeformationScenario) -> SignatureCheck {
    two_sided(s, &sweep_fresh(s))
}

/// `Σ(-σₖ(x)) + σ₀(x) ≤ 2g` at every interval midpoint.
pub fn check_one_sided_bound(s: &DeformationScenario) -> SignatureCheck {
    one_sided(s, &sweep_fresh(s))
}

/// The right side `8g + 2R + 2/9` of the M-number bound.
pub fn m_number_budget(genus: u32, double_points: u32) -> Rational {
    Rational::from_integer(8 * genus as i64 + 2 * double_points as i64) + Rational::new(2, 9)
}

/// `Σ Mₖ - M₀ < 8g + 2R + 2/9`, strict.
pub fn check_m_number_bound(s: &DeformationScenario) -> StrictBoundCheck {
    let left = s
        .cusps
        .iter()
        .map(CuspDescriptor::m_number)
        .sum::<Rational>()
        - s.central.m_number();
    StrictBoundCheck::compare(left, m_number_budget(s.genus, s.double_points))
}

/// Runs every check using signature functions from `cache`, which must
/// already hold the central cusp and every fiber cusp.
pub fn full_report_cached(s: &DeformationScenario, cache: &SignatureCache) -> ObstructionReport {
    let points = sweep(s, |c| cache.get(c));
    let genus_formula = check_genus_formula(s);
    let signature_bound = two_sided(s, &points);
    let one_sided_bound = one_sided(s, &points);
    let m_number_bound = check_m_number_bound(s);
    let all_hold = genus_formula.verdict.holds()
        && signature_bound.verdict.holds()
        && one_sided_bound.verdict.holds()
        && m_number_bound.verdict.holds();
    ObstructionReport {
        betti: betti_number(s),
        genus_formula,
        signature_bound,
        one_sided_bound,
        m_number_bound,
        overall: if all_hold {
            Overall::Admissible
        } else {
            Overall::Obstructed
        },
    }
}

pub fn full_report(s: &DeformationScenario) -> ObstructionReport {
    let mut cache = SignatureCache::new();
    cache.prepare(s);
    full_report_cached(s, &cache)
}

/// Bound for a parametric curve of bidegree `(p,q)` with the given cusps and
/// `R` double points: `Σ Mₖ < p + q - p/q - q/p - 7/9 + 2R`, strict.
pub fn bmy_check(
    p: u32,
    q: u32,
    cusps: &[CuspDescriptor],
    double_points: u32,
) -> Result<StrictBoundCheck> {
    let degree = CuspDescriptor::new(p, q)?;
    let (p, q) = (degree.p() as i64, degree.q() as i64);
    let right = Rational::from_integer(p + q + 2 * double_points as i64)
        - Rational::new(p, q)
        - Rational::new(q, p)
        - Rational::new(7, 9);
    let left = cusps.iter().map(CuspDescriptor::m_number).sum();
    Ok(StrictBoundCheck::compare(left, right))
}
