use std::collections::{BTreeMap, HashMap};

use gt_core::hilbert::{surface_invariants, surface_profile, SurfaceParams};
use gt_core::invariants::{invariant_monomials, surface_triples, CyclicAction};
use gt_core::resolution::{betti_table, check_series, first_betti_via_fibers, generator_counts};
use gt_core::semigroup::{
    is_normal_up_to, make_h3t, member, semigroup_of_action, trung_cm_check, GradedElements,
};
use gt_core::togliatti::togliatti_bound_ok;
use gt_core::toric::{fiber_partition, ideal_dimension, FiberPartition};
use rayon::prelude::*;

#[test]
fn theta_formula_matches_counting() {
    surface_triples(3, 30).par_iter().for_each(|&(a, b, d)| {
        let p = surface_profile(a, b, d).unwrap();
        assert!(p.is_consistent(), "({a},{b},{d}): {:?}", p.integrity);
        let inv = surface_invariants(&p).unwrap();
        assert_eq!(inv.mu_d, p.mu_d_counted as u64);
        assert_eq!(inv.codim, inv.mu_d - 3);
        assert!(togliatti_bound_ok(&p.params.action()));
    });
}

#[test]
fn lambda_is_never_one_for_coprime_a() {
    for (a, b, d) in surface_triples(3, 40) {
        let p = SurfaceParams::new(a, b, d).unwrap();
        if p.gcd_ad == 1 {
            assert_ne!(p.lambda, 1, "({a},{b},{d})");
        }
        assert!(p.lambda >= 1 && p.lambda <= p.d_prime);
    }
}

#[test]
fn betti_tables_are_level_with_regularity_three() {
    surface_triples(3, 30).par_iter().for_each(|&(a, b, d)| {
        let p = surface_profile(a, b, d).unwrap();
        let t = betti_table(&p);
        let inv = surface_invariants(&p).unwrap();
        assert_eq!(t.projective_dimension(), inv.codim);
        assert_eq!(t.get(t.c, 2), inv.cm_type);
        assert!(t.top_is_level());
        assert_eq!(t.regularity(), 3);
        let counts = generator_counts(&p);
        assert_eq!((counts.quadrics, counts.cubics), (t.get(1, 1), t.get(1, 2)));
        if p.theta() >= 4 {
            assert_eq!(counts.cubics, 0);
        }
        check_series(&p).unwrap();
    });
}

#[test]
fn first_betti_from_fibers_matches_table() {
    surface_triples(3, 14).par_iter().for_each(|&(a, b, d)| {
        let p = surface_profile(a, b, d).unwrap();
        let fb = first_betti_via_fibers(&p.params.action(), 1);
        assert!(fb.agree);
        assert_eq!(fb.value(), Some(betti_table(&p).get(1, 1)), "({a},{b},{d})");
    });
}

fn union_find_rank(p: &FiberPartition) -> u64 {
    // |V| − components of the graph whose vertices are multisets and whose
    // edges are the star differences of each fiber: equals the number of
    // independent differences.
    let mut parent: HashMap<&[usize], &[usize]> = HashMap::new();
    fn find<'a>(parent: &mut HashMap<&'a [usize], &'a [usize]>, x: &'a [usize]) -> &'a [usize] {
        let p = *parent.get(x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = find(parent, p);
        parent.insert(x, r);
        r
    }
    let mut merges = 0;
    for f in &p.fibers {
        for m in &f.multisets[1..] {
            let (ra, rb) = (find(&mut parent, &f.multisets[0]), find(&mut parent, m));
            if ra != rb {
                parent.insert(ra, rb);
                merges += 1;
            }
        }
    }
    merges
}

#[test]
fn ideal_dimension_two_ways() {
    surface_triples(3, 10).par_iter().for_each(|&(a, b, d)| {
        let act = CyclicAction::surface(a, b, d).unwrap();
        for j in 2..=3 {
            let p = fiber_partition(&act, j);
            assert_eq!(ideal_dimension(&act, j), p.relation_count());
            assert_eq!(union_find_rank(&p), p.relation_count());
            let fibers: BTreeMap<_, _> = p
                .fibers
                .iter()
                .map(|f| (&f.product, f.multisets.len()))
                .collect();
            assert_eq!(fibers.len(), p.fibers.len());
        }
    });
}

#[test]
fn h3t_lies_in_h3() {
    let h3 = make_h3t(1).unwrap();
    for t in 1..=6 {
        for g in make_h3t(t).unwrap().generators() {
            assert!(member(&h3, &g.to_signed()).member, "t={t} {g:?}");
        }
    }
}

#[test]
fn two_nonzero_coordinates_either_member_or_both_shifts_fail() {
    for t in 2..=3u32 {
        let h = make_h3t(t).unwrap();
        let g = h.degree();
        let bound = 4 * 3 * t as i64;
        let elements = GradedElements::new(&h, (2 * bound as u64 / g + 2) as usize);
        let axes: Vec<Vec<i64>> = h
            .axis_indices()
            .unwrap()
            .iter()
            .map(|&k| h.generators()[k].to_signed())
            .collect();
        for zero in 0..3 {
            let others: Vec<usize> = (0..3).filter(|&p| p != zero).collect();
            for x in 1..=bound {
                for y in 1..=bound {
                    let mut w = vec![0i64; 3];
                    w[others[0]] = x;
                    w[others[1]] = y;
                    if elements.contains(&w, g) == Some(true) {
                        continue;
                    }
                    let shifted_in = |f: &Vec<i64>| {
                        let s: Vec<i64> = w.iter().zip(f).map(|(a, b)| a + b).collect();
                        elements.contains(&s, g) == Some(true)
                    };
                    let hits = axes.iter().filter(|f| shifted_in(f)).count();
                    assert!(hits < 2, "t={t} w={w:?}");
                }
            }
        }
    }
}

#[test]
fn normality_and_bounded_cm_agree_on_gt_semigroups() {
    surface_triples(3, 10).par_iter().for_each(|&(a, b, d)| {
        let h = semigroup_of_action(&CyclicAction::surface(a, b, d).unwrap());
        let normal = is_normal_up_to(&h, 4).unwrap();
        let trung = trung_cm_check(&h, 4).unwrap();
        assert!(normal.normal_up_to_bound, "({a},{b},{d})");
        assert!(trung.hypothesis_ok && trung.verified(), "({a},{b},{d})");
    });
}

#[test]
fn invariant_counts_for_prime_orders() {
    for d in [5u32, 7, 11] {
        for a in 1..d {
            for b in a + 1..d {
                let act = CyclicAction::surface(a, b, d).unwrap();
                assert_eq!(invariant_monomials(&act, 1).count as u32, (d + 5) / 2);
            }
        }
    }
}
