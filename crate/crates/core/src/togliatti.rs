//! Togliatti-system classification of the invariant ideal `I_d`.
//!
//! `I_d` is generated by the degree-`d` invariant monomials. It is a
//! Togliatti candidate when the generator count is at most
//! `binom(d+n-1, n-1)`; the weak Lefschetz test multiplies by
//! `L = x_0 + ⋯ + x_n` between consecutive graded pieces of `R/I_d` and
//! checks for maximal rank with an exact integer rank.

use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, integer_rank, IntegerMatrix};
use crate::invariants::{invariant_monomials, monomials_of_degree, CyclicAction, ExponentVector};

/// `binom(d+n-1, n-1)`.
pub fn togliatti_bound(action: &CyclicAction) -> BigUint {
    let d = u64::from(action.order());
    let n = action.n() as u64;
    binomial(d + n - 1, n as i64 - 1)
}

pub fn togliatti_bound_ok(action: &CyclicAction) -> bool {
    let mu = invariant_monomials(action, 1).count;
    BigUint::from(mu) <= togliatti_bound(action)
}

/// Which maximal-rank condition was tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankTest {
    /// source dimension <= target dimension
    Injectivity,
    /// source dimension > target dimension
    Surjectivity,
}

/// Result of testing `×L : (R/I_d)_j → (R/I_d)_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WlpCheck {
    pub degree: u64,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub test: RankTest,
    /// `rank < min(source_dim, target_dim)`.
    pub fails: bool,
    /// `source_dim - rank`.
    pub kernel_dimension: usize,
}

/// Monomial basis of `(R/I_d)_j`: degree-`j` monomials divisible by no
/// degree-`d` invariant.
pub fn quotient_basis(
    action: &CyclicAction,
    generators: &[ExponentVector],
    j: u64,
) -> Vec<ExponentVector> {
    let all = monomials_of_degree(action.num_vars(), j);
    if j < u64::from(action.order()) {
        return all;
    }
    all.into_iter()
        .filter(|m| !generators.iter().any(|g| m.divisible_by(g)))
        .collect()
}

pub fn wlp_fails_in_degree(action: &CyclicAction, j: u64) -> WlpCheck {
    let generators = invariant_monomials(action, 1).monomials;
    let source = quotient_basis(action, &generators, j);
    let target = quotient_basis(action, &generators, j + 1);
    let target_index: HashMap<&ExponentVector, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();

    // Rows: target monomials, columns: source monomials.
    let mut matrix = IntegerMatrix::zeros(target.len(), source.len());
    for (col, m) in source.iter().enumerate() {
        for var in 0..action.num_vars() {
            let mut shifted = m.clone();
            shifted.0[var] += 1;
            if let Some(&row) = target_index.get(&shifted) {
                matrix.set(row, col, 1);
            }
        }
    }
    let rank = integer_rank(&matrix);
    let test = if source.len() <= target.len() {
        RankTest::Injectivity
    } else {
        RankTest::Surjectivity
    };
    WlpCheck {
        degree: j,
        source_dim: source.len(),
        target_dim: target.len(),
        rank,
        test,
        fails: rank < source.len().min(target.len()),
        kernel_dimension: source.len() - rank,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GtClassification {
    pub action: CyclicAction,
    pub mu_d: usize,
    #[serde(with = "crate::serde_big::biguint")]
    pub bound: BigUint,
    pub is_togliatti_candidate: bool,
    pub wlp_fails_at_d_minus_1: bool,
    pub kernel_dimension: usize,
    pub wlp: WlpCheck,
    pub is_gt_system: bool,
}

pub fn classify(action: &CyclicAction) -> GtClassification {
    let mu_d = invariant_monomials(action, 1).count;
    let bound = togliatti_bound(action);
    let is_togliatti_candidate = BigUint::from(mu_d) <= bound;
    let wlp = wlp_fails_in_degree(action, u64::from(action.order()) - 1);
    GtClassification {
        action: action.clone(),
        mu_d,
        bound,
        is_togliatti_candidate,
        wlp_fails_at_d_minus_1: wlp.fails,
        kernel_dimension: wlp.kernel_dimension,
        is_gt_system: is_togliatti_candidate && wlp.fails,
        wlp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial_u64;

    fn act(d: i64, w: &[i64]) -> CyclicAction {
        CyclicAction::new(d, w).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert!(togliatti_bound_ok(&act(5, &[0, 1, 3])));
        assert!(togliatti_bound_ok(&act(3, &[0, 1, 2])));
        let five_vars = act(2, &[0, 1, 1, 1, 1]);
        assert_eq!(invariant_monomials(&five_vars, 1).count, 11);
        assert_eq!(togliatti_bound(&five_vars), BigUint::from(10u32));
        assert!(!togliatti_bound_ok(&five_vars));
    }

    #[test]
    fn wlp_examples() {
        let c = wlp_fails_in_degree(&act(5, &[0, 1, 3]), 4);
        assert!(c.fails);
        assert_eq!(c.test, RankTest::Injectivity);

        let c = wlp_fails_in_degree(&act(3, &[0, 1, 2]), 2);
        assert_eq!((c.source_dim, c.target_dim), (6, 6));
        assert!(c.fails);
        assert_eq!(c.kernel_dimension, 1);
    }

    #[test]
    fn wlp_in_other_degrees() {
        let a = act(3, &[0, 1, 2]);
        let low = wlp_fails_in_degree(&a, 0);
        assert!(!low.fails);
        assert_eq!((low.source_dim, low.target_dim, low.rank), (1, 3, 1));
        // (R/I_3)_4 -> (R/I_3)_5 has a larger source than target.
        let high = wlp_fails_in_degree(&a, 4);
        assert!(high.source_dim > high.target_dim);
        assert_eq!(high.test, RankTest::Surjectivity);
    }

    #[test]
    fn classify_examples() {
        for d in 3..=8 {
            assert!(classify(&act(d, &[0, 1, 2])).is_gt_system, "d={d}");
        }
        assert!(classify(&act(4, &[0, 1, 2, 3])).is_gt_system);
        for n in 2..=4i64 {
            let w: Vec<i64> = (0..=n).collect();
            let c = classify(&act(n + 1, &w));
            assert!(c.is_gt_system, "n={n}");
            assert!(c.kernel_dimension >= 1);
        }
    }

    #[test]
    fn low_degree_quotient_is_whole_ring() {
        for d in 3..=7i64 {
            let a = act(d, &[0, 1, 3]);
            let gens = invariant_monomials(&a, 1).monomials;
            let q = quotient_basis(&a, &gens, d as u64 - 1);
            assert_eq!(q.len() as u64, binomial_u64(d as u64 + 1, 2));
        }
    }
}
