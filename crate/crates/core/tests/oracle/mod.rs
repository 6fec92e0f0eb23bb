//! Independent reimplementation of the invariants and inequalities, used to
//! validate the library. Works on plain `(p, q)` pairs and
//! `num_rational::Ratio<i64>`; shares no code path with the crate beyond the
//! rational type it is built on.

#![allow(dead_code)]

use num_integer::Integer;
use num_rational::Ratio;

pub type Q = Ratio<i64>;
pub type Pair = (i64, i64);

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// `{i/p + j/q}` by explicit double loop, unsorted.
pub fn jumps((p, qq): Pair) -> Vec<Q> {
    let mut out = Vec::new();
    for i in 1..p {
        for j in 1..qq {
            out.push(q(i, p) + q(j, qq));
        }
    }
    out
}

/// Counting formula; `None` at a jump.
pub fn sigma(pair: Pair, x: Q) -> Option<i64> {
    let upper = x + 1;
    let mut value = 0;
    for s in jumps(pair) {
        if s == x || s == upper {
            return None;
        }
        if s > x && s < upper {
            value -= 1;
        } else {
            value += 1;
        }
    }
    Some(value)
}

pub fn milnor(pair: Pair) -> i64 {
    jumps(pair).len() as i64
}

pub fn m_number((p, qq): Pair) -> Q {
    Q::from_integer(p + qq - 1) - q(p, qq) - q(qq, p)
}

/// Midpoints of the common refinement of the signature functions of `pairs`.
pub fn refinement_midpoints(pairs: &[Pair]) -> Vec<Q> {
    let one = Q::from_integer(1);
    let mut cuts = vec![Q::from_integer(0), one];
    for &pair in pairs {
        for s in jumps(pair) {
            cuts.push(if s > one { s - one } else { s });
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts.windows(2).map(|w| (w[0] + w[1]) / 2).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub genus: bool,
    pub two_sided: bool,
    pub one_sided: bool,
    pub m_bound: bool,
}

impl Verdicts {
    pub fn admissible(&self) -> bool {
        self.genus && self.two_sided && self.one_sided && self.m_bound
    }
}

pub fn judge(central: Pair, cusps: &[Pair], r: i64, g: i64) -> Verdicts {
    let genus = milnor(central) == 2 * g + 2 * r + cusps.iter().map(|&c| milnor(c)).sum::<i64>();

    let mut all = vec![central];
    all.extend_from_slice(cusps);
    let mut two_sided = true;
    let mut one_sided = true;
    for x in refinement_midpoints(&all) {
        let s0 = sigma(central, x).unwrap();
        let sk: i64 = cusps.iter().map(|&c| sigma(c, x).unwrap()).sum();
        if (s0 - (sk - r)).abs() > 2 * g + r {
            two_sided = false;
        }
        if -sk + s0 > 2 * g {
            one_sided = false;
        }
    }

    let lhs: Q = cusps.iter().map(|&c| m_number(c)).sum::<Q>() - m_number(central);
    let rhs = Q::from_integer(8 * g + 2 * r) + q(2, 9);
    Verdicts {
        genus,
        two_sided,
        one_sided,
        m_bound: lhs < rhs,
    }
}

/// Coprime `(p,q)`, `2 <= p < q`, with `(p-1)(q-1) <= bound`.
pub fn candidates(bound: i64) -> Vec<Pair> {
    let mut out = Vec::new();
    for p in 2..=bound + 1 {
        for qq in (p + 1)..=bound + 1 {
            if p.gcd(&qq) == 1 && (p - 1) * (qq - 1) <= bound {
                out.push((p, qq));
            }
        }
    }
    out.sort();
    out
}

fn multisets(
    cands: &[Pair],
    start: usize,
    budget: i64,
    prefix: &mut Vec<Pair>,
    out: &mut Vec<Vec<Pair>>,
) {
    out.push(prefix.clone());
    for i in start..cands.len() {
        let mu = milnor(cands[i]);
        if mu <= budget {
            prefix.push(cands[i]);
            multisets(cands, i, budget - mu, prefix, out);
            prefix.pop();
        }
    }
}

/// Every non-decreasing cusp multiset with total Milnor number at most
/// `budget`.
pub fn all_multisets(cands: &[Pair], budget: i64) -> Vec<Vec<Pair>> {
    let mut out = Vec::new();
    multisets(cands, 0, budget, &mut Vec::new(), &mut out);
    out
}

/// Unpruned search: every multiset with `Σμ <= μ₀`, every `(g, R)` in the
/// box, judged in full, then sorted.
pub fn brute_force(
    central: Pair,
    max_genus: i64,
    max_double_points: i64,
) -> Vec<(Vec<Pair>, i64, i64)> {
    let mu0 = milnor(central);
    let mut out = Vec::new();
    for cusps in all_multisets(&candidates(mu0), mu0) {
        for g in 0..=max_genus {
            for r in 0..=max_double_points {
                if judge(central, &cusps, r, g).admissible() {
                    out.push((cusps.clone(), g, r));
                }
            }
        }
    }
    out.sort();
    out
}
