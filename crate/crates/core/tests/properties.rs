use proptest::prelude::*;

use cuspsig::deformation::{
    check_m_number_bound, check_signature_bound, full_report, DeformationScenario,
};
use cuspsig::document::{parse_scenario, scenario_to_json};
use cuspsig::enumeration::{count_admissible, enumerate_admissible, SearchBudget};
use cuspsig::signature::{
    common_breakpoints, cusps_up_to_product, torus_signature_at, torus_signature_function,
};
use cuspsig::{CuspDescriptor, Rational};

fn grid() -> Vec<CuspDescriptor> {
    cusps_up_to_product(100)
}

fn any_cusp() -> impl Strategy<Value = CuspDescriptor> {
    let g = grid();
    (0..g.len()).prop_map(move |i| g[i])
}

fn small_cusp() -> impl Strategy<Value = CuspDescriptor> {
    let g = cusps_up_to_product(40);
    (0..g.len()).prop_map(move |i| g[i])
}

fn scenario() -> impl Strategy<Value = DeformationScenario> {
    (
        any_cusp(),
        prop::collection::vec(small_cusp(), 0..4),
        0u32..4,
        0u32..3,
    )
        .prop_map(|(central, cusps, r, g)| DeformationScenario::new(central, cusps, r, g))
}

/// Riemann sum on the grid of cells of width `1/pq` sampled at cell
/// midpoints, which never hit a jump.
#[test]
fn integral_equals_midpoint_riemann_sum() {
    for c in grid() {
        let n = (c.p() * c.q()) as i64;
        let riemann: Rational = (0..n)
            .map(|k| {
                let x = Rational::new(2 * k + 1, 2 * n);
                Rational::new(torus_signature_at(&c, x).unwrap(), n)
            })
            .sum();
        assert_eq!(torus_signature_function(&c).integral(), riemann, "{c}");
    }
}

proptest! {
    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = Rational::new(n, d);
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn scenario_json_round_trip(s in scenario()) {
        prop_assert_eq!(parse_scenario(&scenario_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn sweep_at_midpoints_equals_sweep_anywhere(s in scenario(), seeds in prop::collection::vec(1i64..1000, 64)) {
        let mut functions = vec![torus_signature_function(&s.central)];
        functions.extend(s.cusps.iter().map(torus_signature_function));
        let cuts = common_breakpoints(functions.iter());

        let r = s.double_points as i64;
        let mut worst = i64::MIN;
        let ends: Vec<Rational> = std::iter::once(Rational::ZERO)
            .chain(cuts.iter().copied())
            .chain(std::iter::once(Rational::ONE))
            .collect();
        for (i, w) in ends.windows(2).enumerate() {
            // Any interior point a + t(b - a), t in (0,1).
            let t = Rational::new(seeds[i % seeds.len()], 1000);
            let x = w[0] + (w[1] - w[0]) * t;
            let s0 = torus_signature_at(&s.central, x).unwrap();
            let sk: i64 = s.cusps.iter().map(|c| torus_signature_at(c, x).unwrap()).sum();
            worst = worst.max((s0 - (sk - r)).abs());
        }
        prop_assert_eq!(check_signature_bound(&s).left_side, worst);
    }

    #[test]
    fn m_bound_monotone_in_budget(s in scenario()) {
        if check_m_number_bound(&s).verdict.holds() {
            let more_genus = DeformationScenario { genus: s.genus + 1, ..s.clone() };
            let more_nodes = DeformationScenario { double_points: s.double_points + 1, ..s.clone() };
            prop_assert!(check_m_number_bound(&more_genus).verdict.holds());
            prop_assert!(check_m_number_bound(&more_nodes).verdict.holds());
        }
    }

    #[test]
    fn report_checks_are_independent_of_overall(s in scenario()) {
        let rep = full_report(&s);
        let all = rep.genus_formula.verdict.holds()
            && rep.signature_bound.verdict.holds()
            && rep.one_sided_bound.verdict.holds()
            && rep.m_number_bound.verdict.holds();
        prop_assert_eq!(rep.is_admissible(), all);
        prop_assert_eq!(rep.betti, 2 * s.genus as u64 + s.double_points as u64);
        prop_assert_eq!(rep.signature_bound.margin, rep.signature_bound.bound - rep.signature_bound.left_side);
    }

    #[test]
    fn signature_values_are_even_and_bounded(c in any_cusp(), n in 1i64..9999) {
        let x = Rational::new(n, 10_000);
        if let Ok(v) = torus_signature_at(&c, x) {
            prop_assert_eq!(v % 2, 0);
            prop_assert!(v <= 0);
            prop_assert!(v.unsigned_abs() <= c.milnor_number());
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    for (p, q) in [(2, 9), (3, 5), (3, 7)] {
        let budget = SearchBudget::new(CuspDescriptor::new(p, q).unwrap(), 1, 3);
        let first = enumerate_admissible(&budget);
        let second = enumerate_admissible(&budget);
        assert_eq!(first, second);
        assert_eq!(count_admissible(&budget), first.len());
    }
}
