//! Diagonal cyclic actions and their invariant monomials.
//!
//! A cyclic group of order `d` acting diagonally with weights
//! `(α_0, …, α_n)` fixes the monomial `x^a` exactly when
//! `Σ α_i a_i ≡ 0 (mod d)`. Everything here is residue arithmetic on
//! exponent vectors; no roots of unity are materialized.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};
use crate::exact::gcd_all;

/// Exponent vector of a monomial `x_0^{a_0} ⋯ x_n^{a_n}`.
///
/// The derived `Ord` is ascending lexicographic; canonical listings use
/// [`ExponentVector::canonical_cmp`], which is descending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&a| u64::from(a)).sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Coordinatewise sum. Lengths must match.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Coordinatewise difference, `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    /// Whether `other` divides `self` as monomials.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Lexicographic descending order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&a| i64::from(a)).collect()
    }

    /// Renders the monomial as `x0^2*x1*x2^3`; the empty product is `1`.
    pub fn monomial_string(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{a}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

/// All exponent vectors of the given degree in `num_vars` variables, in
/// canonical (lexicographic descending) order.
pub fn monomials_of_degree(num_vars: usize, degree: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    if num_vars == 0 {
        if degree == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    let mut current = vec![0u32; num_vars];
    fill_descending(&mut current, 0, degree, &mut |v| {
        out.push(ExponentVector(v.to_vec()));
    });
    out
}

fn fill_descending(current: &mut [u32], i: usize, remaining: u64, emit: &mut impl FnMut(&[u32])) {
    if i + 1 == current.len() {
        current[i] = remaining as u32;
        emit(current);
        return;
    }
    for a in (0..=remaining).rev() {
        current[i] = a as u32;
        fill_descending(current, i + 1, remaining - a, emit);
    }
}

/// Input form of an action: `{"d": 5, "weights": [0, 1, 3]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionSpec {
    pub d: i64,
    pub weights: Vec<i64>,
}

/// Cyclic group of order `d` acting by `diag(e^{α_0}, …, e^{α_n})`.
///
/// Weights are reduced mod `d` but keep the caller's variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ActionSpec", into = "ActionSpec")]
pub struct CyclicAction {
    order: u32,
    weights: Vec<u32>,
}

impl CyclicAction {
    pub fn new(order: i64, weights: &[i64]) -> Result<Self> {
        if order < 2 {
            return Err(GtError::InvalidAction(format!(
                "group order must be at least 2, got {order}"
            )));
        }
        if order > i64::from(u32::MAX) {
            return Err(GtError::InvalidAction(format!(
                "group order {order} too large"
            )));
        }
        if weights.len() < 2 {
            return Err(GtError::InvalidAction(format!(
                "need at least two weights (n >= 1), got {}",
                weights.len()
            )));
        }
        let reduced: Vec<u32> = weights.iter().map(|w| w.rem_euclid(order) as u32).collect();
        let mut all: Vec<i64> = reduced.iter().map(|&w| i64::from(w)).collect();
        all.push(order);
        if gcd_all(&all)? != 1 {
            return Err(GtError::InvalidAction(format!(
                "gcd of weights {weights:?} and order {order} must be 1"
            )));
        }
        Ok(Self {
            order: order as u32,
            weights: reduced,
        })
    }

    /// `⟨M_{d; 0, a, b}⟩` acting on three variables.
    pub fn surface(a: u32, b: u32, d: u32) -> Result<Self> {
        Self::new(i64::from(d), &[0, i64::from(a), i64::from(b)])
    }

    /// Group order `d`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn num_vars(&self) -> usize {
        self.weights.len()
    }

    /// `n`, the projective dimension of the source space.
    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    /// Same group with variables permuted so that weights ascend.
    pub fn sorted(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        Self {
            order: self.order,
            weights,
        }
    }

    /// `Σ α_i a_i mod d`.
    pub fn residue(&self, v: &ExponentVector) -> u32 {
        let d = u64::from(self.order);
        let s = self
            .weights
            .iter()
            .zip(v.as_slice())
            .fold(0u64, |acc, (&w, &a)| {
                (acc + u64::from(w) * u64::from(a)) % d
            });
        s as u32
    }
}

impl TryFrom<ActionSpec> for CyclicAction {
    type Error = GtError;

    fn try_from(spec: ActionSpec) -> Result<Self> {
        Self::new(spec.d, &spec.weights)
    }
}

impl From<CyclicAction> for ActionSpec {
    fn from(a: CyclicAction) -> Self {
        ActionSpec {
            d: i64::from(a.order),
            weights: a.weights.iter().map(|&w| i64::from(w)).collect(),
        }
    }
}

impl fmt::Display for CyclicAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(ToString::to_string).collect();
        write!(f, "({}; {})", self.order, w.join(","))
    }
}

pub fn is_invariant(action: &CyclicAction, v: &ExponentVector) -> bool {
    v.len() == action.num_vars() && action.residue(v) == 0
}

/// Invariant monomials of degree `t·d`, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBasis {
    pub action: CyclicAction,
    pub t: u32,
    pub monomials: Vec<ExponentVector>,
    pub count: usize,
}

pub fn invariant_monomials(action: &CyclicAction, t: u32) -> InvariantBasis {
    let degree = u64::from(t) * u64::from(action.order());
    let d = u64::from(action.order());
    let weights: Vec<u64> = action.weights().iter().map(|&w| u64::from(w)).collect();
    let mut monomials = Vec::new();
    let mut current = vec![0u32; action.num_vars()];
    enumerate_invariant(&weights, d, &mut current, 0, degree, 0, &mut monomials);
    let count = monomials.len();
    InvariantBasis {
        action: action.clone(),
        t,
        monomials,
        count,
    }
}

fn enumerate_invariant(
    weights: &[u64],
    d: u64,
    current: &mut [u32],
    i: usize,
    remaining: u64,
    residue: u64,
    out: &mut Vec<ExponentVector>,
) {
    if i + 1 == current.len() {
        if (residue + weights[i] * remaining) % d == 0 {
            current[i] = remaining as u32;
            out.push(ExponentVector(current.to_vec()));
        }
        return;
    }
    for a in (0..=remaining).rev() {
        current[i] = a as u32;
        let r = (residue + weights[i] * a) % d;
        enumerate_invariant(weights, d, current, i + 1, remaining - a, r, out);
    }
}

/// Number of invariant monomials of degree `d`.
pub fn mu_d(action: &CyclicAction) -> usize {
    invariant_monomials(action, 1).count
}

/// Splits an invariant monomial of degree `t·d` into `t` invariant factors
/// of degree `d` whose coordinatewise sum is the input.
///
/// Each step looks for `d` of the weights (each `α_i` repeated `a_i`
/// times) summing to a multiple of `d`; such a choice always exists once
/// the degree is at least `2d - 1`.
pub fn egz_factor(action: &CyclicAction, v: &ExponentVector) -> Result<Vec<ExponentVector>> {
    let d = u64::from(action.order());
    if v.len() != action.num_vars() {
        return Err(GtError::InvalidArgument(format!(
            "exponent vector has {} coordinates, action has {} variables",
            v.len(),
            action.num_vars()
        )));
    }
    let degree = v.degree();
    if degree == 0 || degree % d != 0 {
        return Err(GtError::DegreeNotMultiple {
            degree,
            order: action.order(),
        });
    }
    if !is_invariant(action, v) {
        return Err(GtError::NotInvariant(v.0.clone()));
    }
    let mut parts = Vec::with_capacity((degree / d) as usize);
    let mut rest = v.clone();
    while rest.degree() > d {
        let part = zero_sum_part(action, &rest).ok_or_else(|| GtError::NoZeroSumSubsequence {
            exponents: rest.0.clone(),
            order: action.order(),
        })?;
        rest = rest.checked_sub(&part).expect("part divides the monomial");
        parts.push(part);
    }
    parts.push(rest);
    Ok(parts)
}

/// Finds `b <= v` with `|b| = d` and `Σ α_i b_i ≡ 0 (mod d)`.
///
/// Dynamic programming over (variables processed, elements picked,
/// residue). Reconstruction walks the variables backwards taking the fewest
/// copies of each, which pushes the choice towards small variable indices.
fn zero_sum_part(action: &CyclicAction, v: &ExponentVector) -> Option<ExponentVector> {
    let d = action.order() as usize;
    let nv = action.num_vars();
    let weights = action.weights();
    let idx = |k: usize, r: usize| k * d + r;
    // reach[i] describes sub-multisets drawn from the first i variables.
    let mut reach = vec![vec![false; (d + 1) * d]; nv + 1];
    reach[0][idx(0, 0)] = true;
    for i in 0..nv {
        let avail = (v.0[i] as usize).min(d);
        let w = weights[i] as usize;
        let (done, todo) = reach.split_at_mut(i + 1);
        let (prev, next) = (&done[i], &mut todo[0]);
        for k in 0..=d {
            for r in 0..d {
                if !prev[idx(k, r)] {
                    continue;
                }
                for b in 0..=avail.min(d - k) {
                    next[idx(k + b, (r + b * w) % d)] = true;
                }
            }
        }
    }
    if !reach[nv][idx(d, 0)] {
        return None;
    }
    let mut part = vec![0u32; nv];
    let (mut k, mut r) = (d, 0usize);
    for i in (0..nv).rev() {
        let avail = (v.0[i] as usize).min(d);
        let w = weights[i] as usize;
        let b = (0..=avail.min(k))
            .find(|&b| {
                let pr = (r + d * d - (b * w) % d) % d;
                reach[i][idx(k - b, pr)]
            })
            .expect("reachable state has a predecessor");
        part[i] = b as u32;
        r = (r + d * d - (b * w) % d) % d;
        k -= b;
    }
    debug_assert_eq!((k, r), (0, 0));
    Some(ExponentVector(part))
}

/// All surface actions `(d; 0, a, b)` with `0 < a < b < d` and
/// `gcd(a, b, d) = 1`, for `d` in the given inclusive range.
pub fn surface_triples(min_d: u32, max_d: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for d in min_d.max(3)..=max_d {
        for a in 1..d {
            for b in a + 1..d {
                if num_integer::gcd(num_integer::gcd(a, b), d) == 1 {
                    out.push((a, b, d));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    fn act(d: i64, w: &[i64]) -> CyclicAction {
        CyclicAction::new(d, w).unwrap()
    }

    #[test]
    fn action_validation() {
        assert!(CyclicAction::new(1, &[0, 1]).is_err());
        assert!(CyclicAction::new(5, &[1]).is_err());
        assert!(CyclicAction::new(4, &[0, 2]).is_err());
        let a = act(5, &[0, 6, -2]);
        assert_eq!(a.weights(), &[0, 1, 3]);
        assert_eq!(a.n(), 2);
        // d <= n is accepted
        assert_eq!(act(2, &[0, 1, 1, 1, 1]).n(), 4);
    }

    #[test]
    fn invariance_examples() {
        let a = act(5, &[0, 1, 3]);
        assert!(is_invariant(&a, &ev(&[2, 2, 1])));
        assert!(!is_invariant(&a, &ev(&[4, 1, 0])));
        for d in 2..9 {
            let a = act(d, &[0, 1, 2]);
            for i in 0..3 {
                let mut v = vec![0; 3];
                v[i] = d as u32;
                assert!(is_invariant(&a, &ev(&v)));
            }
        }
    }

    #[test]
    fn degree_five_invariants() {
        let basis = invariant_monomials(&act(5, &[0, 1, 3]), 1);
        assert_eq!(
            basis.monomials,
            vec![
                ev(&[5, 0, 0]),
                ev(&[2, 2, 1]),
                ev(&[1, 1, 3]),
                ev(&[0, 5, 0]),
                ev(&[0, 0, 5])
            ]
        );
        assert_eq!(basis.count, 5);
    }

    #[test]
    fn sextic_invariants_of_cubic_action() {
        let basis = invariant_monomials(&act(3, &[0, 1, 2]), 2);
        assert_eq!(basis.count, 10);
        assert!(basis.monomials.contains(&ev(&[4, 1, 1])));
        assert!(basis.monomials.contains(&ev(&[2, 2, 2])));
    }

    #[test]
    fn order_eight_invariants() {
        let basis = invariant_monomials(&act(8, &[0, 3, 5]), 1);
        let mut expected = vec![
            ev(&[8, 0, 0]),
            ev(&[6, 1, 1]),
            ev(&[4, 2, 2]),
            ev(&[0, 8, 0]),
            ev(&[2, 3, 3]),
            ev(&[0, 4, 4]),
            ev(&[0, 0, 8]),
        ];
        expected.sort_by(ExponentVector::canonical_cmp);
        assert_eq!(basis.monomials, expected);
    }

    #[test]
    fn mu_d_examples() {
        assert_eq!(mu_d(&act(3, &[0, 1, 2])), 4);
        assert_eq!(mu_d(&act(5, &[0, 1, 3])), 5);
        assert_eq!(mu_d(&act(4, &[0, 1, 2, 3])), 10);
    }

    #[test]
    fn monomial_listing_is_canonical() {
        let all = monomials_of_degree(3, 4);
        assert_eq!(all.len(), 15);
        assert!(all
            .windows(2)
            .all(|w| w[0].canonical_cmp(&w[1]) == Ordering::Less));
        assert_eq!(monomials_of_degree(3, 0), vec![ev(&[0, 0, 0])]);
    }

    #[test]
    fn egz_base_case_is_identity() {
        let a = act(5, &[0, 1, 3]);
        for m in invariant_monomials(&a, 1).monomials {
            assert_eq!(egz_factor(&a, &m).unwrap(), vec![m]);
        }
    }

    #[test]
    fn egz_examples() {
        let a = act(3, &[0, 1, 2]);
        let parts = egz_factor(&a, &ev(&[2, 2, 2])).unwrap();
        assert_eq!(parts, vec![ev(&[1, 1, 1]), ev(&[1, 1, 1])]);

        // Exhaustive enumeration: the only split of x0^4 x1 x2 into two
        // degree-3 invariants is x0^3 · x0x1x2.
        let target = ev(&[4, 1, 1]);
        let cubics = invariant_monomials(&a, 1).monomials;
        let mut splits = Vec::new();
        for (i, p) in cubics.iter().enumerate() {
            for q in &cubics[i..] {
                if p.add(q) == target {
                    splits.push((p.clone(), q.clone()));
                }
            }
        }
        assert_eq!(splits, vec![(ev(&[3, 0, 0]), ev(&[1, 1, 1]))]);
        let mut parts = egz_factor(&a, &target).unwrap();
        parts.sort_by(ExponentVector::canonical_cmp);
        assert_eq!(parts, vec![ev(&[3, 0, 0]), ev(&[1, 1, 1])]);
    }

    #[test]
    fn egz_errors() {
        let a = act(3, &[0, 1, 2]);
        assert!(matches!(
            egz_factor(&a, &ev(&[5, 1, 0])),
            Err(GtError::NotInvariant(_))
        ));
        assert!(matches!(
            egz_factor(&a, &ev(&[2, 1, 1])),
            Err(GtError::DegreeNotMultiple { .. })
        ));
        assert!(egz_factor(&a, &ev(&[3, 0])).is_err());
    }

    #[test]
    fn surface_triples_respect_gcd() {
        let t = surface_triples(3, 4);
        assert_eq!(t, vec![(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]);
    }
}
