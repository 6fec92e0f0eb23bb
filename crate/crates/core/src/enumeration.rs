//! Search for generic-fiber configurations a central cusp may deform to.
//!
//! Cusp multisets are explored depth-first as non-decreasing sequences of
//! candidates, so the traversal order is already the canonical
//! lexicographic order. Two partial sums prune the tree, both monotone under
//! extension because every cusp has `μ > 0` and `M > 0`:
//!
//! * `Σ μₖ > μ₀` (only when the genus formula is required);
//! * `Σ Mₖ - M₀ ≥ 8·max_genus + 2·max_double_points + 2/9`.

use crate::deformation::{
    check_genus_formula, full_report_cached, m_number_budget, DeformationScenario,
    ObstructionReport, SignatureCache,
};
use crate::rational::Rational;
use crate::singularities::CuspDescriptor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub central: CuspDescriptor,
    pub max_genus: u32,
    pub max_double_points: u32,
    pub require_genus_formula: bool,
    /// Overrides the default candidate universe when set.
    pub candidates: Option<Vec<CuspDescriptor>>,
}

impl SearchBudget {
    pub fn new(central: CuspDescriptor, max_genus: u32, max_double_points: u32) -> Self {
        SearchBudget {
            central,
            max_genus,
            max_double_points,
            require_genus_formula: true,
            candidates: None,
        }
    }

    pub fn without_genus_formula(mut self) -> Self {
        self.require_genus_formula = false;
        self
    }

    pub fn with_candidates(mut self, candidates: Vec<CuspDescriptor>) -> Self {
        self.candidates = Some(candidates);
        self
    }

    /// Candidate fiber cusps in ascending `(p,q)` order: by default every
    /// cusp whose Milnor number does not exceed that of the central one.
    pub fn candidate_cusps(&self) -> Vec<CuspDescriptor> {
        let mut out = match &self.candidates {
            Some(c) => c.clone(),
            None => cusps_with_milnor_at_most(self.central.milnor_number()),
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Every cusp `(p,q)` with `(p-1)(q-1) <= bound`, ascending.
pub fn cusps_with_milnor_at_most(bound: u64) -> Vec<CuspDescriptor> {
    let mut out = Vec::new();
    let mut p = 2u32;
    while (p as u64 - 1) * p as u64 <= bound {
        let mut q = p + 1;
        while (p as u64 - 1) * (q as u64 - 1) <= bound {
            if let Ok(c) = CuspDescriptor::new(p, q) {
                out.push(c);
            }
            q += 1;
        }
        p += 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub scenario: DeformationScenario,
    pub report: ObstructionReport,
}

struct Search<'a> {
    budget: &'a SearchBudget,
    candidates: Vec<CuspDescriptor>,
    cache: SignatureCache,
    central_milnor: u64,
    central_m: Rational,
    max_slack: Rational,
}

impl<'a> Search<'a> {
    fn new(budget: &'a SearchBudget) -> Self {
        let candidates = budget.candidate_cusps();
        let cache = SignatureCache::with_cusps(candidates.iter().copied().chain([budget.central]));
        Search {
            budget,
            candidates,
            cache,
            central_milnor: budget.central.milnor_number(),
            central_m: budget.central.m_number(),
            max_slack: m_number_budget(budget.max_genus, budget.max_double_points),
        }
    }

    fn admits(&self, cusp: &CuspDescriptor, milnor_sum: u64, m_sum: Rational) -> bool {
        if self.budget.require_genus_formula
            && milnor_sum + cusp.milnor_number() > self.central_milnor
        {
            return false;
        }
        m_sum + cusp.m_number() - self.central_m < self.max_slack
    }

    /// Emits admissible `(g, R)` completions of `cusps`, g-major.
    fn evaluate(&self, cusps: &[CuspDescriptor], out: &mut Vec<SearchResult>) {
        for genus in 0..=self.budget.max_genus {
            for double_points in 0..=self.budget.max_double_points {
                let scenario = DeformationScenario::new(
                    self.budget.central,
                    cusps.to_vec(),
                    double_points,
                    genus,
                );
                if self.budget.require_genus_formula
                    && !check_genus_formula(&scenario).verdict.holds()
                {
                    continue;
                }
                let report = full_report_cached(&scenario, &self.cache);
                let keep = if self.budget.require_genus_formula {
                    report.is_admissible()
                } else {
                    report.passes_inequalities()
                };
                if keep {
                    out.push(SearchResult { scenario, report });
                }
            }
        }
    }

    /// Depth-first over multisets extending `prefix` with candidates at index
    /// `start` or later.
    fn descend(
        &self,
        prefix: &mut Vec<CuspDescriptor>,
        start: usize,
        milnor_sum: u64,
        m_sum: Rational,
        out: &mut Vec<SearchResult>,
    ) {
        self.evaluate(prefix, out);
        for (i, c) in self.candidates.iter().enumerate().skip(start) {
            if !self.admits(c, milnor_sum, m_sum) {
                continue;
            }
            prefix.push(*c);
            self.descend(
                prefix,
                i,
                milnor_sum + c.milnor_number(),
                m_sum + c.m_number(),
                out,
            );
            prefix.pop();
        }
    }
}

/// Every admissible configuration within `budget`, in canonical order:
/// cusp multisets lexicographically (each as a non-decreasing list), then
/// genus, then double points.
pub fn enumerate_admissible(budget: &SearchBudget) -> Vec<SearchResult> {
    #[cfg(feature = "parallel")]
    {
        enumerate_parallel(budget)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_sequential(budget)
    }
}

pub fn enumerate_sequential(budget: &SearchBudget) -> Vec<SearchResult> {
    let search = Search::new(budget);
    let mut out = Vec::new();
    search.descend(&mut Vec::new(), 0, 0, Rational::ZERO, &mut out);
    out
}

/// Splits the search tree across rayon tasks down to a fixed depth and
/// concatenates child results in candidate order, which yields the same
/// sequence as [`enumerate_sequential`].
#[cfg(feature = "parallel")]
pub fn enumerate_parallel(budget: &SearchBudget) -> Vec<SearchResult> {
    let search = Search::new(budget);
    search.descend_parallel(Vec::new(), 0, 0, Rational::ZERO, PARALLEL_DEPTH)
}

#[cfg(feature = "parallel")]
const PARALLEL_DEPTH: usize = 3;

#[cfg(feature = "parallel")]
impl Search<'_> {
    fn descend_parallel(
        &self,
        prefix: Vec<CuspDescriptor>,
        start: usize,
        milnor_sum: u64,
        m_sum: Rational,
        depth: usize,
    ) -> Vec<SearchResult> {
        use rayon::prelude::*;

        if depth == 0 {
            let mut out = Vec::new();
            let mut prefix = prefix;
            self.descend(&mut prefix, start, milnor_sum, m_sum, &mut out);
            return out;
        }
        let mut out = Vec::new();
        self.evaluate(&prefix, &mut out);
        let children: Vec<Vec<SearchResult>> = (start..self.candidates.len())
            .into_par_iter()
            .filter(|&i| self.admits(&self.candidates[i], milnor_sum, m_sum))
            .map(|i| {
                let c = self.candidates[i];
                let mut next = prefix.clone();
                next.push(c);
                self.descend_parallel(
                    next,
                    i,
                    milnor_sum + c.milnor_number(),
                    m_sum + c.m_number(),
                    depth - 1,
                )
            })
            .collect();
        out.extend(children.into_iter().flatten());
        out
    }
}

pub fn count_admissible(budget: &SearchBudget) -> usize {
    enumerate_admissible(budget).len()
}

/// Sort key of the canonical order.
pub fn canonical_key(s: &DeformationScenario) -> (Vec<CuspDescriptor>, u32, u32) {
    let mut cusps = s.cusps.clone();
    cusps.sort_unstable();
    (cusps, s.genus, s.double_points)
}
