//! Empirical validation and search: orbit tests for candidate number
//! systems, the exhaustive quadratic-generator classifications, the
//! base -2 degree table and its bound function.

use std::collections::{HashMap, HashSet};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binding::{canonical_iota, encode_in, QuadBinding, SmallQuadBinding};
use crate::digit::{Digit, DigitString};
use crate::error::{Error, Result};
use crate::quad::{OrderSpec, QuadraticInt};
use crate::system::NumberSystem;
use crate::{Coeff, QuadInt};

/// `j(k) = (-2)^k / 3 - (-1)^k / 2 + 1/6`, evaluated exactly. It is an
/// integer for every `k >= 0`, and the cumulative value range of base -2
/// strings of degree at most `d` is the interval between `j(d+1)` and
/// `j(d+2)`.
pub fn bound_j(k: u32) -> i64 {
    let pow: i128 = if k % 2 == 0 { 1i128 << k } else { -(1i128 << k) };
    let sign: i128 = if k % 2 == 0 { 1 } else { -1 };
    let num = 2 * pow - 3 * sign + 1;
    assert!(num % 6 == 0, "j({k}) must be integral");
    i64::try_from(num / 6).expect("j(k) fits in i64 for tested k")
}

/// One row of the base -2 degree table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: u32,
    pub min: i64,
    pub max: i64,
}

/// Exact value range of base -2 strings of each degree, by exhaustive
/// enumeration. Row 0 covers the constants {0, 1}; row `d >= 1` covers
/// the `2^d` strings with top digit at position `d`.
pub fn degree_table(d_max: u32) -> Result<Vec<DegreeRow>> {
    if d_max > 24 {
        return Err(Error::TooLarge {
            size: 1u128 << (d_max + 1),
            guard: 1u128 << 25,
        });
    }
    let mut rows = vec![DegreeRow {
        degree: 0,
        min: 0,
        max: 1,
    }];
    for d in 1..=d_max {
        let top: i64 = if d % 2 == 0 { 1 << d } else { -(1i64 << d) };
        let mut min = i64::MAX;
        let mut max = i64::MIN;
        // odometer over the 2^d lower digits with delta value updates
        let mut bits = vec![false; d as usize];
        let mut value = top;
        loop {
            min = min.min(value);
            max = max.max(value);
            let mut j = 0;
            loop {
                if j == d as usize {
                    break;
                }
                let pow: i64 = if j % 2 == 0 { 1 << j } else { -(1i64 << j) };
                if bits[j] {
                    bits[j] = false;
                    value -= pow;
                    j += 1;
                } else {
                    bits[j] = true;
                    value += pow;
                    break;
                }
            }
            if j == d as usize {
                break;
            }
        }
        rows.push(DegreeRow {
            degree: d,
            min,
            max,
        });
    }
    Ok(rows)
}

/// Degree-bound and cumulative-interval report for base -2.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub z_max: i64,
    pub degree_bound_violations: Vec<i64>,
    pub max_degree_seen: usize,
    /// (d, low endpoint, high endpoint) with exact set equality verified
    pub intervals: Vec<(u32, i64, i64)>,
    pub intervals_exact: bool,
}

/// Checks `deg(encode(z)) <= log2(3|z| + 2) + 1` for all `0 < |z| <=
/// z_max`, and that the degree-at-most-`d` value sets are exactly the
/// integer intervals with endpoints `j(d+1)`, `j(d+2)` for `d <= d_max`.
pub fn check_bounds(z_max: i64, d_max: u32) -> Result<BoundsReport> {
    let neg2 = crate::catalog::find("neg2")
        .and_then(|b| b.as_quadratic().cloned())
        .expect("catalog has neg2");
    let small = neg2.to_small()?;
    let mut violations = Vec::new();
    let mut max_degree_seen = 0;
    for z in -z_max..=z_max {
        if z == 0 {
            continue;
        }
        let s = small.encode(&QuadraticInt::new(z, 0), 128)?;
        let deg = s.degree().expect("non-zero value");
        max_degree_seen = max_degree_seen.max(deg);
        let bound = ((3 * z.abs() + 2) as f64).log2() + 1.0;
        if (deg as f64) > bound + 1e-9 {
            violations.push(z);
        }
    }

    if d_max > 24 {
        return Err(Error::TooLarge {
            size: 1u128 << (d_max + 1),
            guard: 1u128 << 25,
        });
    }
    let mut intervals = Vec::new();
    let mut intervals_exact = true;
    for d in 0..=d_max {
        // all values of strings with degree <= d, i.e. d+1 free digits
        let count = 1u64 << (d + 1);
        let mut values: Vec<i64> = Vec::with_capacity(count as usize);
        for mask in 0..count {
            let mut v = 0i64;
            for j in 0..=d {
                if mask >> j & 1 == 1 {
                    v += if j % 2 == 0 { 1 << j } else { -(1i64 << j) };
                }
            }
            values.push(v);
        }
        values.sort_unstable();
        values.dedup();
        let (lo, hi) = {
            let (a, b) = (bound_j(d + 1), bound_j(d + 2));
            (a.min(b), a.max(b))
        };
        let exact = values.len() as u64 == count
            && values.first() == Some(&lo)
            && values.last() == Some(&hi)
            && values.len() as i64 == hi - lo + 1;
        intervals_exact &= exact;
        intervals.push((d, lo, hi));
    }
    Ok(BoundsReport {
        z_max,
        degree_bound_violations: violations,
        max_degree_seen,
        intervals,
        intervals_exact,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Valid,
    Invalid,
    Inconclusive,
}

/// Outcome of an attractor run over a witness set.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub system: String,
    /// did `sigma(hold(x)) = iota(x) + 1` hold exactly for all digits
    pub consistency: bool,
    /// starting elements whose backward orbit failed to reach zero
    pub witness_failures: Vec<String>,
    /// non-zero cycles of the digit-stripping map, rotated to start at
    /// their minimal element
    pub attractor_cycles: Vec<Vec<String>>,
    pub verdict: Verdict,
    /// distinct elements whose orbits were resolved
    pub elements_checked: u64,
}

/// Runs the backward digit-stripping map `z -> (z - iota(d))/X` from
/// every element of the coefficient box `|a|, |b| <= bound`, plus every
/// lattice point of the absorbing ball `|z| <= 1/(|X| - 1)` (all cycles
/// live there, since the map contracts the modulus outside it). Verdict
/// `Valid` means every orbit reached zero; a cycle or a residue failure
/// makes it `Invalid`.
pub fn attractor_test(bind: &QuadBinding, bound: i64) -> Result<ValidationReport> {
    let consistency = bind.check_hold_identity();
    let sb = bind.to_small()?;
    let name = bind.system().name().to_string();
    run_attractor(&sb, bound, consistency, name)
}

fn run_attractor(
    sb: &SmallQuadBinding,
    bound: i64,
    consistency: bool,
    system: String,
) -> Result<ValidationReport> {
    let x_abs = sb.order.embed(&sb.x).norm();
    let rational = sb.order.is_integers();
    let disc = sb.order.t * sb.order.t - 4 * sb.order.c;

    let mut starts: Vec<(i64, i64)> = Vec::new();
    let b_range = if rational { 0 } else { bound };
    for a in -bound..=bound {
        for b in -b_range..=b_range {
            starts.push((a, b));
        }
    }
    // absorbing ball: only meaningful when the ring is discrete in its
    // archimedean image (rational, or imaginary quadratic)
    let mut ball_covered = rational || disc < 0;
    if x_abs <= 1.0 + 1e-9 {
        ball_covered = false;
    } else if ball_covered {
        let r = 1.0 / (x_abs - 1.0) + 1e-6;
        let omega = sb.order.omega_complex();
        let b_lim = if rational {
            0
        } else {
            (r / omega.im).abs().ceil() as i64
        };
        for b in -b_lim..=b_lim {
            let center = omega * b as f64;
            let a_half = (r * r - center.im * center.im).max(0.0).sqrt();
            let a_lo = (-a_half - center.re).floor() as i64;
            let a_hi = (a_half - center.re).ceil() as i64;
            for a in a_lo..=a_hi {
                starts.push((a, b));
            }
        }
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Status {
        Good,
        Bad,
    }
    let mut status: HashMap<(i64, i64), Status> = HashMap::new();
    status.insert((0, 0), Status::Good);
    let mut cycles: Vec<Vec<String>> = Vec::new();
    let mut cycle_keys: HashSet<Vec<(i64, i64)>> = HashSet::new();
    let mut failures: Vec<String> = Vec::new();
    let step_cap = 10_000usize;

    for start in starts {
        if status.contains_key(&start) {
            continue;
        }
        let mut path: Vec<(i64, i64)> = Vec::new();
        let mut z = QuadraticInt::new(start.0, start.1);
        let outcome: Status = loop {
            let key = (z.a, z.b);
            if let Some(&s) = status.get(&key) {
                break s;
            }
            if let Some(pos) = path.iter().position(|&p| p == key) {
                // new cycle
                let mut cyc: Vec<(i64, i64)> = path[pos..].to_vec();
                let min_idx = cyc
                    .iter()
                    .enumerate()
                    .min_by_key(|(_, p)| **p)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                cyc.rotate_left(min_idx);
                if cycle_keys.insert(cyc.clone()) {
                    cycles.push(
                        cyc.iter()
                            .map(|&(a, b)| QuadraticInt::new(a, b).to_string())
                            .collect(),
                    );
                }
                break Status::Bad;
            }
            path.push(key);
            if path.len() > step_cap {
                break Status::Bad;
            }
            match sb.tau(&z) {
                Ok((_, next)) => z = next,
                Err(_) => {
                    failures.push(QuadraticInt::new(key.0, key.1).to_string());
                    break Status::Bad;
                }
            }
        };
        if outcome == Status::Bad && failures.len() < 32 {
            failures.push(QuadraticInt::new(start.0, start.1).to_string());
        }
        for p in path {
            status.insert(p, outcome);
        }
    }

    let any_bad = !cycles.is_empty() || !failures.is_empty();
    let verdict = if !consistency || any_bad {
        Verdict::Invalid
    } else if ball_covered {
        Verdict::Valid
    } else {
        Verdict::Inconclusive
    };
    failures.dedup();
    Ok(ValidationReport {
        system,
        consistency,
        witness_failures: failures,
        attractor_cycles: cycles,
        verdict,
        elements_checked: status.len() as u64,
    })
}

/// A validated generator found by the search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchHit {
    /// field label, `"Q"` for the rational case
    pub field: String,
    /// minimal-polynomial data (t, c) of `X`, absent for the rational case
    pub order: Option<(i64, i64)>,
    pub x: String,
    /// `hold(1)` in digit text
    pub hold_one: String,
    /// discriminant of the order, 1 for the rational case
    pub discriminant: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedCandidate {
    pub order: Option<(i64, i64)>,
    pub x: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    pub n: u32,
    pub accepted: Vec<SearchHit>,
    pub rejected: Vec<RejectedCandidate>,
}

/// Exhaustive search for generators with `|N(X)| = n + 1` over `Z` and
/// the imaginary quadratic orders: every monic `x^2 - t x + c` with
/// `c = n + 1`, `t^2 < 4c`, plus the rational candidates `X = +-(n+1)`.
/// Candidates are attractor-tested; for even `n` the digit set is closed
/// under negation so `X` and `-X` give equivalent systems and only the
/// representative with `t >= 0` (resp. `X > 0`) is reported.
pub fn search_quadratic(n: u32, bound: i64) -> Result<SearchOutcome> {
    assert!(n == 1 || n == 2, "search covers alphabet orders 1 and 2");
    let c = (n + 1) as i64;
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();

    let t_max = ((4 * c - 1) as f64).sqrt().floor() as i64;
    let mut candidates: Vec<Option<i64>> = vec![None, None]; // two rational signs
    for t in -t_max..=t_max {
        candidates.push(Some(t));
    }

    let mut rational_sign = -1i64;
    for cand in candidates {
        let (order, x, label) = match cand {
            None => {
                let sign = rational_sign;
                rational_sign = 1;
                (
                    OrderSpec::<i64>::integers(),
                    QuadraticInt::new(sign * c, 0),
                    format!("{}", sign * c),
                )
            }
            Some(t) => {
                let o = OrderSpec::<i64> {
                    kind: crate::quad::OrderKind::Quadratic,
                    t,
                    c,
                    omega_desc: format!("root of x^2 - ({t})x + {c}"),
                };
                (o, QuadraticInt::new(0, 1), "w".to_string())
            }
        };
        match probe_candidate(n, &order, &x, bound) {
            Ok((report, hold_one)) if report.verdict == Verdict::Valid => {
                accepted.push(SearchHit {
                    field: field_label(&order),
                    order: cand.map(|t| (t, c)),
                    x: label,
                    hold_one,
                    discriminant: if order.is_integers() {
                        1
                    } else {
                        order.t * order.t - 4 * order.c
                    },
                });
            }
            Ok((report, _)) => {
                let reason = if let Some(cyc) = report.attractor_cycles.first() {
                    format!("cycle {}", cyc.join(" -> "))
                } else if let Some(w) = report.witness_failures.first() {
                    format!("no expansion for {w}")
                } else {
                    "inconclusive".to_string()
                };
                rejected.push(RejectedCandidate {
                    order: cand.map(|t| (t, c)),
                    x: label,
                    reason,
                });
            }
            Err(Error::NonTerminating { .. }) => rejected.push(RejectedCandidate {
                order: cand.map(|t| (t, c)),
                x: label,
                reason: "no finite expansion of a digit plus one".to_string(),
            }),
            Err(e) => rejected.push(RejectedCandidate {
                order: cand.map(|t| (t, c)),
                x: label,
                reason: e.to_string(),
            }),
        }
    }

    // negation equivalence for even n: X and -X generate the same system
    // up to alternating digit signs, so keep t >= 0 (resp. X > 0)
    if n % 2 == 0 {
        let all: Vec<(Option<(i64, i64)>, String)> =
            accepted.iter().map(|h| (h.order, h.x.clone())).collect();
        accepted.retain(|h| {
            let (neg_rep, mirror): (bool, (Option<(i64, i64)>, String)) = match h.order {
                Some((t, c)) => (t < 0, (Some((-t, c)), h.x.clone())),
                None => {
                    let v: i64 = h.x.parse().unwrap_or(0);
                    (v < 0, (None, format!("{}", -v)))
                }
            };
            !(neg_rep && all.contains(&mirror))
        });
    }

    Ok(SearchOutcome {
        n,
        accepted,
        rejected,
    })
}

/// Builds the candidate's hold table by greedy encoding of `iota(x) + 1`
/// and runs the attractor over the witness set.
fn probe_candidate(
    n: u32,
    order: &OrderSpec<i64>,
    x: &QuadraticInt<i64>,
    bound: i64,
) -> Result<(ValidationReport, String)> {
    let iota = canonical_iota::<i64>(n, order)?;
    let mut hold = Vec::with_capacity(n as usize);
    for e in 0..n {
        let target = iota[e as usize].add(&QuadraticInt::new(1, 0));
        hold.push(encode_in(order, x, &iota, &target, 64)?);
    }
    let hold_one = hold[0].to_text(n);
    let sys = NumberSystem::new(&format!("candidate-{}", field_label(order)), n, hold)?;
    // the full binding over canonical coefficients revalidates the identity
    let big = QuadBinding::new(sys, to_big_order(order), QuadInt::from_ints(x.a, x.b))?;
    let sb = big.to_small()?;
    let report = run_attractor(
        &sb,
        bound,
        big.check_hold_identity(),
        big.system().name().to_string(),
    )?;
    Ok((report, hold_one))
}

fn to_big_order(o: &OrderSpec<i64>) -> OrderSpec<Coeff> {
    OrderSpec {
        kind: o.kind,
        t: Coeff::from(o.t),
        c: Coeff::from(o.c),
        omega_desc: o.omega_desc.clone(),
    }
}

fn field_label(order: &OrderSpec<i64>) -> String {
    if order.is_integers() {
        return "Q".to_string();
    }
    let disc = order.t * order.t - 4 * order.c;
    // squarefree core of the discriminant
    let mut d = disc.abs();
    let mut core = 1i64;
    let mut p = 2;
    while p * p <= d {
        let mut k = 0;
        while d % p == 0 {
            d /= p;
            k += 1;
        }
        if k % 2 == 1 {
            core *= p;
        }
        p += 1;
    }
    core *= d;
    format!("Q(sqrt({}))", if disc < 0 { -core } else { core })
}

/// Result of the plus-one degree-growth experiment.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub system: String,
    pub trials: u64,
    pub max_growth: i64,
    /// trials where `deg(z + 1) - deg(z)` exceeded the allowed growth
    pub violations: u64,
    /// trials violating the top-digit side condition (tracked only where
    /// the allowed growth is 2)
    pub side_condition_violations: u64,
}

/// Random strings `z`, checking `deg(z + 1) <= deg(z) + allowed_growth`
/// and, when `allowed_growth == 2`, the side condition that a non-zero
/// top digit at `d + 2` forces position `d + 1` to be zero or of the
/// opposite sign.
pub fn plus_one_growth(
    sys: &NumberSystem,
    trials: u64,
    max_deg: usize,
    allowed_growth: i64,
    seed: u64,
) -> Result<GrowthReport> {
    let n = sys.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let one = DigitString::one();
    let mut max_growth = i64::MIN;
    let mut violations = 0;
    let mut side_violations = 0;
    for _ in 0..trials {
        let len = rng.gen_range(0..=max_deg + 1);
        let digits: Vec<Digit> = (0..len)
            .map(|_| {
                let r = rng.gen_range(0..=n);
                if r == 0 {
                    Digit::Zero
                } else {
                    Digit::Root(r - 1)
                }
            })
            .collect();
        let z = DigitString::from_digits(digits);
        let res = sys.add(&z, &one, sys.default_cap(&z, &one))?;
        let (Some(dz), Some(dr)) = (z.degree(), res.degree()) else {
            continue; // -inf degree on either side: growth is trivially fine
        };
        let growth = dr as i64 - dz as i64;
        max_growth = max_growth.max(growth);
        if growth > allowed_growth {
            violations += 1;
        }
        if allowed_growth == 2 {
            let top = res.get(dz + 2);
            if !top.is_zero() {
                let below = res.get(dz + 1);
                if !below.is_zero() && below == top {
                    side_violations += 1;
                }
            }
        }
    }
    Ok(GrowthReport {
        system: sys.name().to_string(),
        trials,
        max_growth,
        violations,
        side_condition_violations: side_violations,
    })
}

/// Complex embedding of the generator, for reports.
pub fn embedding_of(bind: &QuadBinding) -> Complex64 {
    bind.order_spec().embed(bind.x())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn j_values() {
        let expected = [0, 0, 1, -2, 5, -10, 21, -42, 85];
        for (k, want) in expected.iter().enumerate() {
            assert_eq!(bound_j(k as u32), *want, "j({k})");
        }
        // j(k+1) + 2 j(k) = (1 - (-1)^k) / 2
        for k in 0..40u32 {
            let pattern = if k % 2 == 1 { 1 } else { 0 };
            assert_eq!(bound_j(k + 1), -2 * bound_j(k) + pattern);
        }
    }

    #[test]
    fn degree_table_rows() {
        let rows = degree_table(6).unwrap();
        let want = [
            (0, 0, 1),
            (1, -2, -1),
            (2, 2, 5),
            (3, -10, -3),
            (4, 6, 21),
            (5, -42, -11),
            (6, 22, 85),
        ];
        for (row, (d, min, max)) in rows.iter().zip(want) {
            assert_eq!((row.degree, row.min, row.max), (d, min, max));
        }
        // sign alternation: the whole row carries sign (-1)^d
        for row in &rows[1..] {
            if row.degree % 2 == 0 {
                assert!(row.min > 0);
            } else {
                assert!(row.max < 0);
            }
        }
    }

    #[test]
    fn bounds_report() {
        let rep = check_bounds(200, 8).unwrap();
        assert!(rep.degree_bound_violations.is_empty());
        assert!(rep.intervals_exact);
        assert_eq!(rep.intervals[4], (4, -10, 21));
    }

    #[test]
    fn attractor_accepts_neg2() {
        let b = catalog::find("neg2").unwrap();
        let rep = attractor_test(b.as_quadratic().unwrap(), 100).unwrap();
        assert_eq!(rep.verdict, Verdict::Valid);
        assert!(rep.consistency);
    }

    #[test]
    fn attractor_rejects_base_two() {
        // X = 2 with digits {0, 1}: -1 maps to itself
        let sys =
            NumberSystem::new("base2", 1, vec![DigitString::parse("0,1", 1).unwrap()]).unwrap();
        let bind = QuadBinding::new(
            sys,
            OrderSpec::<Coeff>::integers(),
            QuadInt::from_ints(2, 0),
        )
        .unwrap();
        let rep = attractor_test(&bind, 10).unwrap();
        assert_eq!(rep.verdict, Verdict::Invalid);
        assert!(rep
            .attractor_cycles
            .iter()
            .any(|c| c == &vec!["-1".to_string()]));
    }

    #[test]
    fn attractor_rejects_pseudo() {
        let bind = catalog::pseudo_remark_candidate().unwrap();
        let rep = attractor_test(&bind, 10).unwrap();
        assert_eq!(rep.verdict, Verdict::Invalid);
        assert!(!rep.attractor_cycles.is_empty());
    }

    #[test]
    fn search_n2_matches_classification() {
        let out = search_quadratic(2, 30).unwrap();
        let mut orders: Vec<Option<(i64, i64)>> = out.accepted.iter().map(|h| h.order).collect();
        orders.sort();
        assert_eq!(orders, vec![None, Some((0, 3)), Some((1, 3)), Some((2, 3))]);
        // the t = +-3 candidates are rejected
        for t in [-3i64, 3] {
            assert!(out.rejected.iter().any(|r| r.order == Some((t, 3))));
        }
        // rational representative is +3
        assert!(out.accepted.iter().any(|h| h.order.is_none() && h.x == "3"));
    }

    #[test]
    fn search_n1_fields() {
        let out = search_quadratic(1, 30).unwrap();
        let mut fields: Vec<String> = out.accepted.iter().map(|h| h.field.clone()).collect();
        fields.sort();
        fields.dedup();
        assert_eq!(
            fields,
            vec!["Q", "Q(sqrt(-1))", "Q(sqrt(-2))", "Q(sqrt(-7))"]
        );
        // the stated generators are present
        for t in [-2i64, -1, 0] {
            assert!(
                out.accepted.iter().any(|h| h.order == Some((t, 2))),
                "t={t}"
            );
        }
        // rational case is -2, and +2 is rejected
        assert!(out
            .accepted
            .iter()
            .any(|h| h.order.is_none() && h.x == "-2"));
        assert!(out.rejected.iter().any(|r| r.order.is_none() && r.x == "2"));
    }

    #[test]
    fn growth_examples() {
        let q11 = catalog::find("q11").unwrap().system().clone();
        // z = 1: z + 1 = hold(1), growth 2
        let res = q11
            .add(&DigitString::one(), &DigitString::one(), 64)
            .unwrap();
        assert_eq!(res.to_text(2), "-1,1,-1");
        let rep = plus_one_growth(&q11, 2000, 12, 2, 7).unwrap();
        assert_eq!(rep.violations, 0);
        assert_eq!(rep.side_condition_violations, 0);
        assert_eq!(rep.max_growth, 2);

        let q2n2 = catalog::find("q2n2").unwrap().system().clone();
        let res = q2n2
            .add(&DigitString::one(), &DigitString::one(), 64)
            .unwrap();
        assert_eq!(res.degree(), Some(3));
        let rep = plus_one_growth(&q2n2, 2000, 12, 3, 7).unwrap();
        assert_eq!(rep.violations, 0);
    }

    #[test]
    fn validated_systems_have_forced_constant_digit() {
        for n in [1u32, 2] {
            let out = search_quadratic(n, 20).unwrap();
            for hit in out.accepted {
                let first = hit.hold_one.split(',').next().unwrap().to_string();
                if n == 1 {
                    assert_eq!(first, "0", "{hit:?}");
                } else {
                    assert_eq!(first, "-1", "{hit:?}");
                }
            }
        }
    }

    #[test]
    fn attractor_monotone_in_bound() {
        // valid at a larger bound implies no counterexample at smaller ones
        let b = catalog::find("q11").unwrap();
        let q = b.as_quadratic().unwrap();
        let big = attractor_test(q, 40).unwrap();
        assert_eq!(big.verdict, Verdict::Valid);
        for bound in [1, 5, 20] {
            let rep = attractor_test(q, bound).unwrap();
            assert_eq!(rep.verdict, Verdict::Valid);
            assert!(rep.elements_checked <= big.elements_checked);
        }
    }
}
