//! Golden values for `gt-toolkit verify`: monomial lists, Hilbert function
//! values, resolutions and semigroup facts, each recomputed and compared
//! exactly.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use gt_core::hilbert::{
    hf_by_counting, hf_closed_form, hf_reduced, hilbert_series, surface_profile,
};
use gt_core::invariants::{invariant_monomials, surface_triples, CyclicAction, ExponentVector};
use gt_core::resolution::{
    betti_table, first_betti_via_fibers, generator_counts, BettiTable, GeneratorCounts,
};
use gt_core::semigroup::{
    is_normal_up_to, lemma_two_zero_check, make_h3t, make_hk, member, semigroup_of_action,
    trung_cm_check, AffineSemigroup,
};
use gt_core::serde_big::rational;
use gt_core::togliatti::{classify, wlp_fails_in_degree};
use gt_core::toric::minimal_generators;
use serde::Serialize;
use serde_json::Value;

use crate::catalogue::listed_theta;
use crate::report::Report;
use crate::{EXIT_CHECK_FAILED, EXIT_OK};

pub const CUBIC_T1: &[&str] = &["x0^3", "x1^3", "x2^3", "x0*x1*x2"];

pub const CUBIC_T2: &[&str] = &[
    "x0^6",
    "x0^3*x1^3",
    "x0^4*x1*x2",
    "x1^6",
    "x0*x1^4*x2",
    "x0^2*x1^2*x2^2",
    "x0^3*x2^3",
    "x1^3*x2^3",
    "x0*x1*x2^4",
    "x2^6",
];

pub const CUBIC_T3: &[&str] = &[
    "x0^9",
    "x0^6*x1^3",
    "x0^7*x1*x2",
    "x0^3*x1^6",
    "x0^4*x1^4*x2",
    "x0^5*x1^2*x2^2",
    "x0^6*x2^3",
    "x1^9",
    "x0*x1^7*x2",
    "x0^2*x1^5*x2^2",
    "x0^3*x1^3*x2^3",
    "x0^4*x1*x2^4",
    "x1^6*x2^3",
    "x0*x1^4*x2^4",
    "x0^2*x1^2*x2^5",
    "x0^3*x2^6",
    "x1^3*x2^6",
    "x0*x1*x2^7",
    "x2^9",
];

pub const CUBIC_T4: &[&str] = &[
    "x0^12",
    "x0^9*x1^3",
    "x0^10*x1*x2",
    "x0^6*x1^6",
    "x0^7*x1^4*x2",
    "x0^8*x1^2*x2^2",
    "x0^9*x2^3",
    "x0^3*x1^9",
    "x0^4*x1^7*x2",
    "x0^5*x1^5*x2^2",
    "x0^6*x1^3*x2^3",
    "x0^7*x1*x2^4",
    "x1^12",
    "x0*x1^10*x2",
    "x0^2*x1^8*x2^2",
    "x0^3*x1^6*x2^3",
    "x0^4*x1^4*x2^4",
    "x0^5*x1^2*x2^5",
    "x0^6*x2^6",
    "x1^9*x2^3",
    "x0*x1^7*x2^4",
    "x0^2*x1^5*x2^5",
    "x0^3*x1^3*x2^6",
    "x0^4*x1*x2^7",
    "x1^6*x2^6",
    "x0*x1^4*x2^7",
    "x0^2*x1^2*x2^8",
    "x0^3*x2^9",
    "x1^3*x2^9",
    "x0*x1*x2^10",
    "x2^12",
];

pub const QUINTIC_013: &[&str] = &["x0^5", "x1^5", "x2^5", "x0^2*x1^2*x2", "x0*x1*x2^3"];

pub const OCTIC_035: &[&str] = &[
    "x0^8",
    "x1^8",
    "x2^8",
    "x0^6*x1*x2",
    "x0^4*x1^2*x2^2",
    "x0^2*x1^3*x2^3",
    "x1^4*x2^4",
];

pub const SEXTIC_023: &[&str] = &[
    "x0^6",
    "x0^3*x1^3",
    "x0^4*x2^2",
    "x1^6",
    "x0*x1^3*x2^2",
    "x0^2*x2^4",
    "x2^6",
];

pub const H6: &[[u32; 3]] = &[
    [6, 0, 0],
    [0, 6, 0],
    [0, 0, 6],
    [4, 1, 1],
    [1, 4, 1],
    [1, 1, 4],
    [2, 2, 2],
];

pub const H9: &[[u32; 3]] = &[
    [9, 0, 0],
    [0, 9, 0],
    [0, 0, 9],
    [7, 1, 1],
    [1, 7, 1],
    [1, 1, 7],
    [5, 2, 2],
    [2, 5, 2],
    [2, 2, 5],
    [3, 3, 3],
];

pub const H12: &[[u32; 3]] = &[
    [12, 0, 0],
    [0, 12, 0],
    [0, 0, 12],
    [10, 1, 1],
    [1, 10, 1],
    [1, 1, 10],
    [8, 2, 2],
    [2, 8, 2],
    [2, 2, 8],
    [6, 3, 3],
    [3, 6, 3],
    [3, 3, 6],
    [4, 4, 4],
];

pub const H2_9: &[[u32; 3]] = &[
    [9, 0, 0],
    [0, 9, 0],
    [0, 0, 9],
    [5, 2, 2],
    [2, 5, 2],
    [2, 2, 5],
    [3, 3, 3],
];

/// Generators of a semigroup whose ring is not Cohen–Macaulay.
pub const NON_CM: &[[u32; 3]] = &[
    [5, 0, 0],
    [0, 5, 0],
    [0, 0, 5],
    [3, 1, 1],
    [2, 2, 1],
    [1, 3, 1],
];

/// Nonzero Betti numbers `b_{l,·}` for each `l = 1..c`, as written in a
/// direct sum `b_{l,1} ⊕ b_{l,2}`; compared order-insensitively per `l`.
pub const BETTI_D4: &[&[u64]] = &[&[2], &[1]];
pub const BETTI_D6_GORENSTEIN: &[&[u64]] = &[&[9], &[16], &[9], &[1]];
pub const BETTI_D8_THETA6: &[&[u64]] = &[&[13], &[30], &[25], &[4, 5], &[2]];
pub const BETTI_D8_THETA4: &[&[u64]] = &[&[7], &[6, 8], &[8, 3], &[3]];

/// Parses `x0^2*x1*x2^3` (spaces also accepted as separators).
pub fn parse_monomial(s: &str, num_vars: usize) -> Option<ExponentVector> {
    let mut v = vec![0u32; num_vars];
    for factor in s.split(['*', ' ']).filter(|f| !f.is_empty()) {
        let body = factor.strip_prefix('x')?;
        let (var, exp) = match body.split_once('^') {
            Some((var, exp)) => (var, exp.parse().ok()?),
            None => (body, 1),
        };
        let var: usize = var.parse().ok()?;
        *v.get_mut(var)? += exp;
    }
    Some(ExponentVector(v))
}

fn monomial_set(list: &[&str]) -> BTreeSet<ExponentVector> {
    list.iter()
        .map(|s| parse_monomial(s, 3).expect("fixture monomial"))
        .collect()
}

fn semigroup(gens: &[[u32; 3]]) -> AffineSemigroup {
    AffineSemigroup::new(gens.iter().map(|g| ExponentVector(g.to_vec())).collect())
        .expect("fixture semigroup")
}

fn act(d: i64, w: &[i64]) -> CyclicAction {
    CyclicAction::new(d, w).expect("fixture action")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn invariant_check(name: &str, action: &CyclicAction, t: u32, expected: &[&str]) -> Check {
    let got: BTreeSet<ExponentVector> = invariant_monomials(action, t)
        .monomials
        .into_iter()
        .collect();
    let want = monomial_set(expected);
    check(
        name,
        got == want && want.len() == expected.len(),
        format!("{} monomials", got.len()),
    )
}

fn betti_ranks(t: &BettiTable) -> Vec<Vec<u64>> {
    (1..=t.c)
        .map(|l| {
            let mut r: Vec<u64> = (1..=2).map(|i| t.get(l, i)).filter(|&v| v > 0).collect();
            r.sort_unstable();
            r
        })
        .collect()
}

fn betti_check(name: &str, triples: &[(u32, u32, u32)], expected: &[&[u64]]) -> Check {
    let want: Vec<Vec<u64>> = expected
        .iter()
        .map(|r| {
            let mut r = r.to_vec();
            r.sort_unstable();
            r
        })
        .collect();
    let bad: Vec<String> = triples
        .iter()
        .filter(|&&(a, b, d)| {
            betti_ranks(&betti_table(
                &surface_profile(a, b, d).expect("fixture triple"),
            )) != want
        })
        .map(|t| format!("{t:?}"))
        .collect();
    let shape: Vec<String> = expected
        .iter()
        .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join("+"))
        .collect();
    let detail = if triples.is_empty() {
        "no surfaces in this case".to_string()
    } else if bad.is_empty() {
        format!("{} surfaces: ({})", triples.len(), shape.join(", "))
    } else {
        format!("mismatch for {}", bad.join(", "))
    };
    check(name, !triples.is_empty() && bad.is_empty(), detail)
}

fn theta_group(d: u32, theta: i64) -> Vec<(u32, u32, u32)> {
    surface_triples(d, d)
        .into_iter()
        .filter(|&(a, b, d)| {
            surface_profile(a, b, d)
                .expect("sweep triple")
                .theta_counted
                == theta
        })
        .collect()
}

pub fn invariant_checks() -> Vec<Check> {
    let cubic = act(3, &[0, 1, 2]);
    vec![
        invariant_check(
            "invariants (5; 0,1,3), t = 1",
            &act(5, &[0, 1, 3]),
            1,
            QUINTIC_013,
        ),
        invariant_check("invariants (3; 0,1,2), t = 1", &cubic, 1, CUBIC_T1),
        invariant_check("invariants (3; 0,1,2), t = 2", &cubic, 2, CUBIC_T2),
        invariant_check("invariants (3; 0,1,2), t = 3", &cubic, 3, CUBIC_T3),
        invariant_check("invariants (3; 0,1,2), t = 4", &cubic, 4, CUBIC_T4),
        invariant_check(
            "invariants (8; 0,3,5), t = 1",
            &act(8, &[0, 3, 5]),
            1,
            OCTIC_035,
        ),
        invariant_check(
            "invariants (6; 0,2,3), t = 1",
            &act(6, &[0, 2, 3]),
            1,
            SEXTIC_023,
        ),
    ]
}

pub fn hilbert_checks() -> Vec<Check> {
    let cubic = act(3, &[0, 1, 2]);
    let p = surface_profile(1, 2, 3).expect("cubic surface");
    let triples: Vec<(u64, u64, u64)> = (2..=4)
        .map(|t| {
            (
                hf_by_counting(&cubic, t),
                hf_reduced(1, 2, 3, t).expect("valid"),
                hf_closed_form(&p, t).expect("integral"),
            )
        })
        .collect();
    let hp: Vec<String> = hilbert_series(&p)
        .map(|h| h.polynomial.iter().map(rational::to_string).collect())
        .unwrap_or_default();
    let threefold = act(4, &[0, 1, 2, 3]);
    let hf4 = (hf_by_counting(&threefold, 1), hf_by_counting(&threefold, 2));
    let b11 = first_betti_via_fibers(&threefold, 1);
    let x3_b1 = (
        first_betti_via_fibers(&cubic, 1),
        first_betti_via_fibers(&cubic, 2),
    );
    vec![
        check(
            "HF(X_3, 2..4) = 10, 19, 31 by three routes",
            triples == [(10, 10, 10), (19, 19, 19), (31, 31, 31)],
            format!("{triples:?}"),
        ),
        check(
            "HP(X_3) = 3/2 t^2 + 3/2 t + 1",
            hp == ["3/2", "3/2", "1"],
            hp.join(", "),
        ),
        check(
            "HF(X_4, 1..2) = 10, 43 for (4; 0,1,2,3)",
            hf4 == (10, 43),
            format!("{hf4:?}"),
        ),
        check(
            "b_11 = 12 for (4; 0,1,2,3)",
            b11.agree && b11.via_fibers == 12,
            format!(
                "binomial - HF = {}, fibers = {}",
                b11.via_hilbert, b11.via_fibers
            ),
        ),
        check(
            "b_11 = 0, b_12 = 1 for X_3",
            x3_b1.0.value() == Some(0) && x3_b1.1.value() == Some(1),
            format!("{:?}, {:?}", x3_b1.0.value(), x3_b1.1.value()),
        ),
    ]
}

pub fn resolution_checks() -> Vec<Check> {
    let d6_gor: Vec<_> = theta_group(6, 6);
    let d8_six: Vec<_> = theta_group(8, 6);
    vec![
        betti_check(
            "resolution d = 4 (two quadrics)",
            &surface_triples(4, 4),
            BETTI_D4,
        ),
        betti_check(
            "resolution d = 6, Gorenstein case",
            &d6_gor,
            BETTI_D6_GORENSTEIN,
        ),
        betti_check("resolution d = 8, theta = 6", &d8_six, BETTI_D8_THETA6),
        betti_check(
            "resolution d = 8, theta = 4",
            &theta_group(8, 4),
            BETTI_D8_THETA4,
        ),
        check(
            "d = 6 Gorenstein case has cm_type 1",
            d6_gor.iter().all(|&(a, b, d)| {
                betti_table(&surface_profile(a, b, d).expect("valid")).get(4, 2) == 1
            }),
            format!("{} surfaces", d6_gor.len()),
        ),
    ]
}

pub fn ideal_checks() -> Vec<Check> {
    let g = minimal_generators(&act(3, &[0, 1, 2]));
    let cubic: Vec<String> = g.cubics.iter().map(|b| b.display()).collect();
    let unique = g.quadrics.is_empty()
        && g.cubics.len() == 1
        && g.generators[g.cubics[0].rhs[0]] == ExponentVector(vec![1, 1, 1])
        && g.cubics[0].lhs.iter().all(|&k| {
            g.generators[k]
                .as_slice()
                .iter()
                .filter(|&&x| x > 0)
                .count()
                == 1
        });
    let counts = |a, b, d| {
        let p = surface_profile(a, b, d).expect("valid");
        (
            minimal_generators(&p.params.action()).counts,
            generator_counts(&p),
        )
    };
    let c136 = counts(1, 3, 6);
    let c123 = counts(1, 2, 3);
    vec![
        check(
            "X_3 ideal is the single cubic w1w3w4 - w2^3",
            unique,
            format!("{cubic:?}"),
        ),
        check(
            "(1,2,3): 0 quadrics, 1 cubic",
            c123.0 == c123.1
                && c123.1
                    == GeneratorCounts {
                        quadrics: 0,
                        cubics: 1,
                    },
            format!("{:?}", c123.0),
        ),
        check(
            "(1,3,6): 9 quadrics, 0 cubics",
            c136.0 == c136.1
                && c136.1
                    == GeneratorCounts {
                        quadrics: 9,
                        cubics: 0,
                    },
            format!("{:?}", c136.0),
        ),
    ]
}

pub fn togliatti_checks() -> Vec<Check> {
    let c5 = classify(&act(5, &[0, 1, 3]));
    let c3 = classify(&act(3, &[0, 1, 2]));
    let w = wlp_fails_in_degree(&act(3, &[0, 1, 2]), 2);
    vec![
        check(
            "(5; 0,1,3) is a GT-system",
            c5.is_gt_system,
            format!("mu_d = {}, kernel {}", c5.mu_d, c5.kernel_dimension),
        ),
        check(
            "(3; 0,1,2) is a GT-system",
            c3.is_gt_system,
            format!("mu_d = {}", c3.mu_d),
        ),
        check(
            "x L fails to be injective from degree 2 to 3 for (3; 0,1,2)",
            w.fails && w.source_dim == 6 && w.target_dim == 6,
            format!("{} -> {}, rank {}", w.source_dim, w.target_dim, w.rank),
        ),
    ]
}

pub fn semigroup_checks() -> Vec<Check> {
    let list_check = |name: &str, h: AffineSemigroup, expected: &[[u32; 3]]| {
        let want = semigroup(expected);
        check(
            name,
            h == want,
            format!("{} generators", h.generators().len()),
        )
    };
    let h6 = make_h3t(2).expect("t >= 1");
    let non_members = [[3i64, 3, 0], [0, 9, 9], [0, 15, 9], [0, 9, 15]];
    let all_out = non_members.iter().all(|w| !member(&h6, w).member);
    let normal = is_normal_up_to(&h6, 3).expect("axes present");
    let trung_ok: Vec<u32> = (1..=4)
        .filter(|&t| {
            trung_cm_check(&make_h3t(t).expect("t >= 1"), 6)
                .expect("axes")
                .verified()
        })
        .collect();
    let bad = trung_cm_check(&semigroup(NON_CM), 6).expect("axes present");
    let gt = trung_cm_check(&semigroup_of_action(&act(6, &[0, 1, 3])), 6).expect("axes present");
    vec![
        list_check("H_6 generators", h6.clone(), H6),
        list_check("H_9 generators", make_h3t(3).expect("t >= 1"), H9),
        list_check("H_12 generators", make_h3t(4).expect("t >= 1"), H12),
        list_check("H^1 with t' = 1 is H_6", make_hk(1, 1).expect("k >= 1"), H6),
        list_check("H^2 with t' = 1", make_hk(2, 1).expect("k >= 1"), H2_9),
        check(
            "(3,3,0), (0,9,9), (0,15,9), (0,9,15) are not in H_6",
            all_out,
            format!("{non_members:?}"),
        ),
        check(
            "H_6 is not normal, witness (3,3,0)",
            normal.witness.as_deref() == Some(&[3, 3, 0][..]),
            format!("{:?}", normal.witness),
        ),
        check(
            "two-zero membership rule for H_6, box 18",
            lemma_two_zero_check(2, 18).expect("t >= 1"),
            "exhaustive",
        ),
        check(
            "H_3t Cohen-Macaulay up to degree 6, t = 1..4",
            trung_ok == [1, 2, 3, 4],
            format!("verified for t in {trung_ok:?}"),
        ),
        check(
            "non-CM semigroup yields a confirmed witness",
            bad.witness.as_ref().is_some_and(|w| w.confirmed),
            format!("{:?}", bad.witness.as_ref().map(|w| &w.w)),
        ),
        check(
            "(6; 0,1,3) semigroup Cohen-Macaulay up to degree 6",
            gt.verified(),
            "no witness",
        ),
    ]
}

/// Listed `θ` agrees with counting except at the entries listed as 5,
/// which count to 6; reported as a pass with the mismatches in the detail.
pub fn catalogue_check() -> Check {
    let mut mismatches = Vec::new();
    let mut unexplained = Vec::new();
    for d in [4, 6, 8] {
        for (a, b, d) in surface_triples(d, d) {
            let listed = listed_theta(a, b, d).expect("catalogue covers d = 4, 6, 8");
            let counted = surface_profile(a, b, d).expect("valid").theta_counted;
            if i64::from(listed) != counted {
                let entry = format!("({a},{b},{d}): listed {listed}, counted {counted}");
                if listed == 5 && counted == 6 {
                    mismatches.push(entry);
                } else {
                    unexplained.push(entry);
                }
            }
        }
    }
    let mut detail = format!("{} listed-5 entries count to 6", mismatches.len());
    if !unexplained.is_empty() {
        write!(detail, "; unexplained: {}", unexplained.join(", ")).unwrap();
    }
    check(
        "theta catalogue d = 4, 6, 8 against counting",
        unexplained.is_empty(),
        detail,
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

pub fn run_checks() -> VerifyReport {
    let mut checks = invariant_checks();
    checks.extend(hilbert_checks());
    checks.extend(resolution_checks());
    checks.extend(ideal_checks());
    checks.extend(togliatti_checks());
    checks.extend(semigroup_checks());
    checks.push(catalogue_check());
    let passed = checks.iter().filter(|c| c.passed).count();
    VerifyReport {
        failed: checks.len() - passed,
        passed,
        checks,
    }
}

impl Report for VerifyReport {
    fn table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut s = String::new();
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            writeln!(
                s,
                "{}  {}{}  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                " ".repeat(pad),
                c.detail
            )
            .unwrap();
        }
        writeln!(s, "{} passed, {} failed", self.passed, self.failed).unwrap();
        s
    }

    fn json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    fn exit_code(&self) -> u8 {
        if self.failed == 0 {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_monomials() {
        assert_eq!(
            parse_monomial("x0^2*x1*x2^3", 3),
            Some(ExponentVector(vec![2, 1, 3]))
        );
        assert_eq!(
            parse_monomial("x0 x1 x2^4", 3),
            Some(ExponentVector(vec![1, 1, 4]))
        );
        assert_eq!(parse_monomial("y0", 3), None);
        assert_eq!(parse_monomial("x3", 3), None);
    }

    #[test]
    fn fixture_lists_have_no_duplicates() {
        for (list, n) in [(CUBIC_T2, 10), (CUBIC_T3, 19), (CUBIC_T4, 31)] {
            assert_eq!(list.len(), n);
            assert_eq!(monomial_set(list).len(), n);
        }
    }

    #[test]
    fn all_golden_checks_pass() {
        let r = run_checks();
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(r.exit_code(), EXIT_OK);
    }
}
