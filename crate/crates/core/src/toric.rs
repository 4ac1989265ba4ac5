//! Low-degree pieces of the toric ideal `I(X_d) ⊂ k[w_1, …, w_{μ_d}]`.
//!
//! `w_k ↦ m_k` sends a degree-`j` monomial in the `w` (a multiset of `j`
//! generator indices) to a degree-`jd` monomial in the `x`. Multisets with
//! the same image form a fiber, and `I_j` is spanned by differences inside
//! fibers. Every product `w_v · (u − u′)` stays inside one fiber of the
//! next degree, so span ranks are computed fiber by fiber.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{binomial_u64, integer_rank, IntegerMatrix};
use crate::hilbert::hf_by_counting;
use crate::invariants::{invariant_monomials, CyclicAction, ExponentVector};
use crate::resolution::GeneratorCounts;

/// Sorted (nondecreasing) list of 0-based generator indices.
pub type Multiset = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    pub product: ExponentVector,
    /// Lexicographically increasing.
    pub multisets: Vec<Multiset>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPartition {
    pub degree: u32,
    pub generators: Vec<ExponentVector>,
    /// Ordered by product, canonical (descending lex) order.
    pub fibers: Vec<Fiber>,
}

impl FiberPartition {
    /// `Σ (|fiber| − 1)`, the dimension of the degree-`j` part of the ideal.
    pub fn relation_count(&self) -> u64 {
        self.fibers
            .iter()
            .map(|f| f.multisets.len() as u64 - 1)
            .sum()
    }

    pub fn multiset_count(&self) -> u64 {
        self.fibers.iter().map(|f| f.multisets.len() as u64).sum()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Fiber> {
        self.fibers.iter().filter(|f| f.multisets.len() > 1)
    }
}

/// Calls `f` on every nondecreasing index sequence of length `j` over
/// `0..n`, in lexicographic order.
pub fn for_each_multiset(n: usize, j: usize, mut f: impl FnMut(&[usize])) {
    fn go(n: usize, j: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == j {
            f(cur);
            return;
        }
        for k in start..n {
            cur.push(k);
            go(n, j, k, cur, f);
            cur.pop();
        }
    }
    go(n, j, 0, &mut Vec::with_capacity(j), &mut f);
}

fn product_of(generators: &[ExponentVector], m: &[usize]) -> ExponentVector {
    let mut p = vec![0u32; generators[0].len()];
    for &k in m {
        for (x, &e) in p.iter_mut().zip(generators[k].as_slice()) {
            *x += e;
        }
    }
    ExponentVector(p)
}

fn partition_of(generators: Vec<ExponentVector>, j: u32) -> FiberPartition {
    let mut groups: BTreeMap<ExponentVector, Vec<Multiset>> = BTreeMap::new();
    for_each_multiset(generators.len(), j as usize, |m| {
        groups
            .entry(product_of(&generators, m))
            .or_default()
            .push(m.to_vec());
    });
    let fibers = groups
        .into_iter()
        .rev()
        .map(|(product, multisets)| Fiber { product, multisets })
        .collect();
    FiberPartition {
        degree: j,
        generators,
        fibers,
    }
}

pub fn fiber_partition(action: &CyclicAction, j: u32) -> FiberPartition {
    partition_of(invariant_monomials(action, 1).monomials, j)
}

/// `binom(μ_d+j−1, j) − HF(X_d, j)`.
pub fn ideal_dimension(action: &CyclicAction, j: u32) -> u64 {
    let mu = invariant_monomials(action, 1).count as u64;
    let total = binomial_u64(mu + u64::from(j) - 1, i64::from(j));
    total - hf_by_counting(action, j)
}

/// `lhs − rhs` as a pair of multisets of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binomial {
    pub lhs: Multiset,
    pub rhs: Multiset,
}

impl Binomial {
    /// Both sides map to the same monomial.
    pub fn is_relation(&self, generators: &[ExponentVector]) -> bool {
        self.lhs.len() == self.rhs.len()
            && [&self.lhs, &self.rhs]
                .iter()
                .all(|m| m.iter().all(|&k| k < generators.len()))
            && product_of(generators, &self.lhs) == product_of(generators, &self.rhs)
    }

    pub fn display(&self) -> String {
        let side = |m: &[usize]| {
            let mut out = String::new();
            let mut i = 0;
            while i < m.len() {
                let k = m[i];
                let e = m[i..].iter().take_while(|&&x| x == k).count();
                out.push_str(&format!("w{}", k + 1));
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
                i += e;
            }
            out
        };
        format!("{} - {}", side(&self.lhs), side(&self.rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialGeneratorSet {
    pub generators: Vec<ExponentVector>,
    pub quadrics: Vec<Binomial>,
    pub cubics: Vec<Binomial>,
    pub counts: GeneratorCounts,
    /// Minimal generators are guaranteed only up to this degree.
    pub verified_through_degree: u32,
    /// True for surfaces, where no generators occur above degree 3.
    pub complete: bool,
}

fn insert_sorted(m: &[usize], v: usize) -> Multiset {
    let mut out = m.to_vec();
    let pos = out.partition_point(|&x| x <= v);
    out.insert(pos, v);
    out
}

/// Rows of `S_1 · I_j` inside the degree-`j+1` fibers, keyed by product.
/// `I_j` is spanned by `u_0 − u_k` for each fiber `{u_0, u_1, …}`.
fn lifted_rows(lower: &FiberPartition) -> BTreeMap<ExponentVector, Vec<(Multiset, Multiset)>> {
    let mut rows: BTreeMap<ExponentVector, Vec<(Multiset, Multiset)>> = BTreeMap::new();
    for fiber in lower.nontrivial() {
        let base = &fiber.multisets[0];
        for other in &fiber.multisets[1..] {
            for v in 0..lower.generators.len() {
                let lhs = insert_sorted(base, v);
                let rhs = insert_sorted(other, v);
                let key = fiber.product.add(&lower.generators[v]);
                rows.entry(key).or_default().push((lhs, rhs));
            }
        }
    }
    rows
}

fn difference_matrix(
    index: &BTreeMap<&[usize], usize>,
    rows: &[(Multiset, Multiset)],
) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(rows.len(), index.len());
    for (r, (lhs, rhs)) in rows.iter().enumerate() {
        m.set(r, index[lhs.as_slice()], 1);
        m.set(r, index[rhs.as_slice()], -1);
    }
    m
}

/// Per upper fiber: `(fiber, rank of S_1·I_j restricted to it)`.
fn lifted_ranks<'a>(
    lower: &FiberPartition,
    upper: &'a FiberPartition,
) -> Vec<(&'a Fiber, usize, Vec<(Multiset, Multiset)>)> {
    let mut rows = lifted_rows(lower);
    upper
        .nontrivial()
        .map(|fiber| {
            let index: BTreeMap<&[usize], usize> = fiber
                .multisets
                .iter()
                .enumerate()
                .map(|(i, m)| (m.as_slice(), i))
                .collect();
            let r = rows.remove(&fiber.product).unwrap_or_default();
            let rank = if r.is_empty() {
                0
            } else {
                integer_rank(&difference_matrix(&index, &r))
            };
            (fiber, rank, r)
        })
        .collect()
}

/// Quadrics as fiber differences, plus cubics completing `S_1·I_2` to
/// `I_3`, chosen greedily in basis order.
pub fn minimal_generators(action: &CyclicAction) -> BinomialGeneratorSet {
    let p2 = fiber_partition(action, 2);
    let p3 = partition_of(p2.generators.clone(), 3);

    let quadrics: Vec<Binomial> = p2
        .nontrivial()
        .flat_map(|f| {
            f.multisets[1..].iter().map(|m| Binomial {
                lhs: f.multisets[0].clone(),
                rhs: m.clone(),
            })
        })
        .collect();

    let mut cubics = Vec::new();
    for (fiber, rank, mut rows) in lifted_ranks(&p2, &p3) {
        let needed = fiber.multisets.len() - 1 - rank;
        if needed == 0 {
            continue;
        }
        let index: BTreeMap<&[usize], usize> = fiber
            .multisets
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i))
            .collect();
        let mut current = rank;
        for (a, u) in fiber.multisets.iter().enumerate() {
            for v in &fiber.multisets[a + 1..] {
                if current == fiber.multisets.len() - 1 {
                    break;
                }
                rows.push((u.clone(), v.clone()));
                let r = integer_rank(&difference_matrix(&index, &rows));
                if r > current {
                    current = r;
                    cubics.push(Binomial {
                        lhs: u.clone(),
                        rhs: v.clone(),
                    });
                } else {
                    rows.pop();
                }
            }
        }
    }

    let counts = GeneratorCounts {
        quadrics: quadrics.len() as u64,
        cubics: cubics.len() as u64,
    };
    BinomialGeneratorSet {
        generators: p2.generators,
        quadrics,
        cubics,
        counts,
        verified_through_degree: 3,
        complete: action.n() == 2,
    }
}

/// `dim I_4` against the rank of `S_1·I_3` in degree 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeFourCheck {
    pub ideal_dimension: u64,
    pub lifted_rank: u64,
    pub no_new_generators: bool,
}

pub fn degree_four_check(action: &CyclicAction) -> DegreeFourCheck {
    let p3 = fiber_partition(action, 3);
    let p4 = partition_of(p3.generators.clone(), 4);
    let lifted_rank: u64 = lifted_ranks(&p3, &p4)
        .iter()
        .map(|(_, r, _)| *r as u64)
        .sum();
    let ideal_dimension = p4.relation_count();
    DegreeFourCheck {
        ideal_dimension,
        lifted_rank,
        no_new_generators: ideal_dimension == lifted_rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(d: i64, w: &[i64]) -> CyclicAction {
        CyclicAction::new(d, w).unwrap()
    }

    #[test]
    fn multiset_enumeration() {
        let mut all = Vec::new();
        for_each_multiset(3, 2, |m| all.push(m.to_vec()));
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
    }

    #[test]
    fn fiber_examples() {
        let a = act(3, &[0, 1, 2]);
        assert_eq!(fiber_partition(&a, 2).relation_count(), 0);
        let p = fiber_partition(&a, 3);
        let nontrivial: Vec<_> = p.nontrivial().collect();
        assert_eq!(nontrivial.len(), 1);
        assert_eq!(nontrivial[0].product, ExponentVector::from(vec![3, 3, 3]));
        assert_eq!(nontrivial[0].multisets, vec![vec![0, 2, 3], vec![1, 1, 1]]);
        assert_eq!(fiber_partition(&act(6, &[0, 1, 3]), 2).relation_count(), 9);
    }

    #[test]
    fn ideal_dimension_examples() {
        let a = act(3, &[0, 1, 2]);
        assert_eq!(ideal_dimension(&a, 2), 0);
        assert_eq!(ideal_dimension(&a, 3), 1);
        assert_eq!(ideal_dimension(&a, 0), 0);
        assert_eq!(ideal_dimension(&act(5, &[0, 1, 3]), 2), 1);
    }

    #[test]
    fn generator_examples() {
        let g = minimal_generators(&act(3, &[0, 1, 2]));
        assert!(g.quadrics.is_empty());
        assert_eq!(
            g.cubics,
            vec![Binomial {
                lhs: vec![0, 2, 3],
                rhs: vec![1, 1, 1]
            }]
        );
        assert_eq!(g.cubics[0].display(), "w1w3w4 - w2^3");

        let c = |d, w: &[i64]| minimal_generators(&act(d, w)).counts;
        assert_eq!(
            c(6, &[0, 1, 3]),
            GeneratorCounts {
                quadrics: 9,
                cubics: 0
            }
        );
        assert_eq!(
            c(5, &[0, 1, 3]),
            GeneratorCounts {
                quadrics: 1,
                cubics: 2
            }
        );
    }

    #[test]
    fn emitted_binomials_are_relations() {
        for (d, w) in [
            (5, vec![0, 1, 3]),
            (8, vec![0, 1, 4]),
            (7, vec![0, 2, 3]),
            (4, vec![0, 1, 2, 3]),
        ] {
            let g = minimal_generators(&act(d, &w));
            for b in g.quadrics.iter().chain(&g.cubics) {
                assert!(b.is_relation(&g.generators), "{b:?}");
            }
        }
    }

    #[test]
    fn degree_four_examples() {
        for (d, w) in [(3, vec![0, 1, 2]), (5, vec![0, 1, 3]), (6, vec![0, 1, 3])] {
            assert!(degree_four_check(&act(d, &w)).no_new_generators);
        }
    }

    #[test]
    fn threefold_is_marked_incomplete() {
        let g = minimal_generators(&act(4, &[0, 1, 2, 3]));
        assert!(!g.complete);
        assert_eq!(g.counts.quadrics, 12);
    }
}
