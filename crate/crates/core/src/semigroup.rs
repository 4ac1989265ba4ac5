//! Homogeneous affine semigroups `H ⊂ ℕ^m` and a bounded Cohen–Macaulay
//! test.
//!
//! All semigroups handled here have generators of one coordinate sum `g`,
//! so `H` is graded by `sum / g`. When every `g·e_i` is a generator the
//! cone of `H` is the orthant and `H̄ = L(H) ∩ ℕ^m`. The CM test takes
//! `f_i = g·e_i` and `z = g` and looks for `w ∈ H̄ \ H` with `w + f_i`
//! and `w + f_j` in `H` for some `i ≠ j`.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};
use crate::exact::{integer_rank, IntegerMatrix, RowLattice};
use crate::invariants::{invariant_monomials, CyclicAction, ExponentVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SemigroupSpec {
    dim: usize,
    generators: Vec<Vec<i64>>,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SemigroupSpec", into = "SemigroupSpec")]
pub struct AffineSemigroup {
    dim: usize,
    generators: Vec<ExponentVector>,
    degree: u64,
}

impl TryFrom<SemigroupSpec> for AffineSemigroup {
    type Error = GtError;

    fn try_from(spec: SemigroupSpec) -> Result<Self> {
        if spec.generators.iter().any(|g| g.len() != spec.dim) {
            return Err(GtError::InvalidSemigroup(format!(
                "every generator must have {} coordinates",
                spec.dim
            )));
        }
        Self::from_signed(&spec.generators)
    }
}

impl From<AffineSemigroup> for SemigroupSpec {
    fn from(h: AffineSemigroup) -> Self {
        SemigroupSpec {
            dim: h.dim,
            generators: h.generators.iter().map(ExponentVector::to_signed).collect(),
        }
    }
}

impl fmt::Debug for AffineSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", g.as_slice())?;
        }
        write!(f, "⟩")
    }
}

impl AffineSemigroup {
    /// Deduplicates and sorts the generators (descending lex).
    pub fn new(generators: Vec<ExponentVector>) -> Result<Self> {
        let first = generators
            .first()
            .ok_or(GtError::EmptyInput("generators"))?;
        let dim = first.len();
        let degree = first.degree();
        if dim == 0 {
            return Err(GtError::InvalidSemigroup(
                "ambient dimension must be positive".into(),
            ));
        }
        if degree == 0 {
            return Err(GtError::InvalidSemigroup(
                "generators must be nonzero".into(),
            ));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(GtError::InvalidSemigroup(
                    "generators have different lengths".into(),
                ));
            }
            if g.degree() != degree {
                return Err(GtError::InvalidSemigroup(format!(
                    "generator {:?} has coordinate sum {}, expected {degree}",
                    g.as_slice(),
                    g.degree()
                )));
            }
        }
        let mut generators = generators;
        generators.sort_by(ExponentVector::canonical_cmp);
        generators.dedup();
        Ok(Self {
            dim,
            generators,
            degree,
        })
    }

    pub fn from_signed(generators: &[Vec<i64>]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| {
                g.iter()
                    .map(|&x| u32::try_from(x))
                    .collect::<std::result::Result<Vec<u32>, _>>()
                    .map(ExponentVector)
                    .map_err(|_| {
                        GtError::InvalidSemigroup(format!(
                            "generator {g:?} has a negative or oversized coordinate"
                        ))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Common coordinate sum `g` of the generators.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Index of `g·e_i` among the generators, for each coordinate `i`.
    pub fn axis_indices(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .map(|i| {
                self.generators.iter().position(|v| {
                    v.as_slice()
                        .iter()
                        .enumerate()
                        .all(|(j, &x)| u64::from(x) == if j == i { self.degree } else { 0 })
                })
            })
            .collect()
    }

    fn require_axes(&self) -> Result<Vec<usize>> {
        self.axis_indices().ok_or_else(|| {
            GtError::Unsupported(
                "saturation needs a multiple of every coordinate axis among the generators".into(),
            )
        })
    }
}

/// The semigroup generated by the degree-`d` invariants; `g = d`.
pub fn semigroup_of_action(action: &CyclicAction) -> AffineSemigroup {
    AffineSemigroup::new(invariant_monomials(action, 1).monomials)
        .expect("invariants form a valid semigroup")
}

fn axis(i: usize, size: u32) -> ExponentVector {
    let mut v = vec![0; 3];
    v[i] = size;
    ExponentVector(v)
}

fn shifted_family(size: u32, shift: u32, previous: &AffineSemigroup) -> AffineSemigroup {
    let mut gens: Vec<ExponentVector> = (0..3).map(|i| axis(i, size)).collect();
    gens.extend(
        previous
            .generators()
            .iter()
            .map(|g| ExponentVector(g.as_slice().iter().map(|&x| x + shift).collect())),
    );
    AffineSemigroup::new(gens).expect("family generators share a degree")
}

fn h3() -> AffineSemigroup {
    let mut gens: Vec<ExponentVector> = (0..3).map(|i| axis(i, 3)).collect();
    gens.push(ExponentVector(vec![1, 1, 1]));
    AffineSemigroup::new(gens).expect("H_3")
}

/// `H_{3t} = ⟨3t·e_1, 3t·e_2, 3t·e_3, m + H_{3(t−1)}⟩`, `m = (1,1,1)`.
pub fn make_h3t(t: u32) -> Result<AffineSemigroup> {
    if t == 0 {
        return Err(GtError::InvalidArgument("t must be at least 1".into()));
    }
    let mut h = h3();
    for s in 2..=t {
        h = shifted_family(3 * s, 1, &h);
    }
    Ok(h)
}

/// `H^k_{3(1+t′k)} = ⟨axis vectors, k·m + H^k_{3(1+(t′−1)k)}⟩` with
/// `H^k_3 = H_3`.
pub fn make_hk(k: u32, t_prime: u32) -> Result<AffineSemigroup> {
    if k == 0 {
        return Err(GtError::InvalidArgument("k must be at least 1".into()));
    }
    let mut h = h3();
    for s in 1..=t_prime {
        h = shifted_family(3 * (1 + s * k), k, &h);
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub member: bool,
    /// Generator indices, nondecreasing, summing to the query.
    pub decomposition: Option<Vec<usize>>,
}

fn dominates(w: &[i64], g: &ExponentVector) -> bool {
    w.iter().zip(g.as_slice()).all(|(&a, &b)| a >= i64::from(b))
}

fn decompose(
    h: &AffineSemigroup,
    w: &mut Vec<i64>,
    failed: &mut HashSet<Vec<i64>>,
    path: &mut Vec<usize>,
) -> bool {
    if w.iter().all(|&x| x == 0) {
        return true;
    }
    if failed.contains(w.as_slice()) {
        return false;
    }
    for (k, g) in h.generators().iter().enumerate() {
        if !dominates(w, g) {
            continue;
        }
        for (x, &e) in w.iter_mut().zip(g.as_slice()) {
            *x -= i64::from(e);
        }
        path.push(k);
        let found = decompose(h, w, failed, path);
        for (x, &e) in w.iter_mut().zip(g.as_slice()) {
            *x += i64::from(e);
        }
        if found {
            return true;
        }
        path.pop();
    }
    failed.insert(w.clone());
    false
}

/// Exact membership by depth-first search with a memo of failed residues.
pub fn member(h: &AffineSemigroup, w: &[i64]) -> Membership {
    let no = Membership {
        member: false,
        decomposition: None,
    };
    if w.len() != h.dim() || w.iter().any(|&x| x < 0) {
        return no;
    }
    let total: i64 = w.iter().sum();
    if total as u64 % h.degree() != 0 {
        return no;
    }
    let mut path = Vec::new();
    let mut scratch = w.to_vec();
    if decompose(h, &mut scratch, &mut HashSet::new(), &mut path) {
        path.sort_unstable();
        debug_assert_eq!(recompose(h, &path), w);
        Membership {
            member: true,
            decomposition: Some(path),
        }
    } else {
        no
    }
}

/// Coordinatewise sum of the listed generators.
pub fn recompose(h: &AffineSemigroup, indices: &[usize]) -> Vec<i64> {
    let mut out = vec![0i64; h.dim()];
    for &k in indices {
        for (x, &e) in out.iter_mut().zip(h.generators()[k].as_slice()) {
            *x += i64::from(e);
        }
    }
    out
}

pub fn group_lattice(h: &AffineSemigroup) -> RowLattice {
    let rows: Vec<Vec<i64>> = h
        .generators()
        .iter()
        .map(ExponentVector::to_signed)
        .collect();
    RowLattice::from_rows(&rows, h.dim())
}

/// `w ∈ L(H)`.
pub fn lattice_member(h: &AffineSemigroup, w: &[i64]) -> bool {
    w.len() == h.dim() && group_lattice(h).contains(w)
}

/// `w ∈ H̄`; needs every `g·e_i` among the generators.
pub fn saturation_member(h: &AffineSemigroup, w: &[i64]) -> Result<bool> {
    h.require_axes()?;
    Ok(w.len() == h.dim() && w.iter().all(|&x| x >= 0) && lattice_member(h, w))
}

/// Elements of `H` by level: `levels[k]` holds everything of coordinate
/// sum `k·g`.
#[derive(Debug, Clone)]
pub struct GradedElements {
    levels: Vec<HashSet<Vec<u32>>>,
}

impl GradedElements {
    pub fn new(h: &AffineSemigroup, max_level: usize) -> Self {
        let mut levels = vec![HashSet::from([vec![0u32; h.dim()]])];
        for _ in 0..max_level {
            let prev = levels.last().expect("level 0 present");
            let next: HashSet<Vec<u32>> = prev
                .par_iter()
                .flat_map_iter(|e| {
                    h.generators()
                        .iter()
                        .map(move |g| e.iter().zip(g.as_slice()).map(|(a, b)| a + b).collect())
                })
                .collect();
            levels.push(next);
        }
        Self { levels }
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &HashSet<Vec<u32>> {
        &self.levels[k]
    }

    /// Membership for vectors up to the computed level; `None` beyond it.
    pub fn contains(&self, w: &[i64], g: u64) -> Option<bool> {
        if w.iter().any(|&x| x < 0) {
            return Some(false);
        }
        let total = w.iter().sum::<i64>() as u64;
        if total % g != 0 {
            return Some(false);
        }
        let k = (total / g) as usize;
        let level = self.levels.get(k)?;
        let key: Vec<u32> = w.iter().map(|&x| x as u32).collect();
        Some(level.contains(&key))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(HashSet::len).collect()
    }
}

/// Nonnegative integer vectors of length `dim` with sum `total`, lex
/// descending.
fn vectors_of_sum(dim: usize, total: u64) -> impl Iterator<Item = Vec<i64>> {
    crate::invariants::monomials_of_degree(dim, total)
        .into_iter()
        .map(|m| m.to_signed())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub bound: u32,
    pub normal_up_to_bound: bool,
    pub witness: Option<Vec<i64>>,
}

/// First `w ∈ H̄ \ H` with coordinate sum at most `D·g`, scanning levels
/// upward and each level in descending lex order.
pub fn is_normal_up_to(h: &AffineSemigroup, bound: u32) -> Result<NormalityReport> {
    h.require_axes()?;
    let lattice = group_lattice(h);
    let elements = GradedElements::new(h, bound as usize);
    let g = h.degree();
    for k in 0..=bound {
        let witness = vectors_of_sum(h.dim(), u64::from(k) * g)
            .find(|w| lattice.contains(w) && elements.contains(w, g) == Some(false));
        if witness.is_some() {
            return Ok(NormalityReport {
                bound,
                normal_up_to_bound: false,
                witness,
            });
        }
    }
    Ok(NormalityReport {
        bound,
        normal_up_to_bound: true,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TrungStatus {
    VerifiedUpTo,
    Counterexample,
}

/// `w ∈ H̄ \ H` with `w + f_i, w + f_j ∈ H`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrungWitness {
    pub w: Vec<i64>,
    /// Positions in `f_indices`.
    pub i: usize,
    pub j: usize,
    pub level: u32,
    /// All four membership facts re-derived with [`member`] and
    /// [`saturation_member`].
    pub confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrungStats {
    pub level_sizes: Vec<usize>,
    pub candidates_examined: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrungReport {
    pub semigroup: AffineSemigroup,
    /// Generator indices of `f_1, …, f_m`.
    pub f_indices: Vec<usize>,
    pub z: u64,
    pub bound: u32,
    pub hypothesis_ok: bool,
    pub status: TrungStatus,
    pub witness: Option<TrungWitness>,
    pub stats: TrungStats,
}

impl TrungReport {
    pub fn verified(&self) -> bool {
        self.status == TrungStatus::VerifiedUpTo
    }
}

/// `f_i` rationally independent and `z·h ∈ ⟨f_1, …, f_m⟩` for every
/// generator `h`.
fn trung_hypothesis(h: &AffineSemigroup, f: &[usize], z: u64) -> bool {
    let rows: Vec<Vec<i64>> = f.iter().map(|&k| h.generators()[k].to_signed()).collect();
    let independent = IntegerMatrix::from_rows(&rows)
        .map(|m| integer_rank(&m) == f.len())
        .unwrap_or(false);
    let f_semigroup = AffineSemigroup::new(f.iter().map(|&k| h.generators()[k].clone()).collect());
    let covered = match f_semigroup {
        Ok(fs) => h.generators().iter().all(|v| {
            let scaled: Vec<i64> = v
                .as_slice()
                .iter()
                .map(|&x| i64::from(x) * z as i64)
                .collect();
            member(&fs, &scaled).member
        }),
        Err(_) => false,
    };
    independent && covered
}

/// Bounded check of the CM criterion through level `D`.
///
/// A witness at level `k` satisfies `w + f_i ∈ H_{k+1}`, so every
/// candidate is `e − f_i` for some `e` of level `k+1`. Candidates must be
/// nonnegative to lie in `H̄`, which makes the scan over `H_{k+1}`
/// exhaustive for each level.
pub fn trung_cm_check(h: &AffineSemigroup, bound: u32) -> Result<TrungReport> {
    let f = h.require_axes()?;
    let g = h.degree();
    let hypothesis_ok = trung_hypothesis(h, &f, g);
    let elements = GradedElements::new(h, bound as usize + 1);
    let f_vecs: Vec<Vec<i64>> = f.iter().map(|&k| h.generators()[k].to_signed()).collect();

    let per_level: Vec<(u64, Option<TrungWitness>)> = (0..=bound)
        .into_par_iter()
        .map(|k| {
            let mut upper: Vec<&Vec<u32>> = elements.level(k as usize + 1).iter().collect();
            upper.sort_unstable_by(|a, b| b.cmp(a));
            let mut examined = 0u64;
            for e in upper {
                for (i, fi) in f_vecs.iter().enumerate() {
                    let w: Vec<i64> = e.iter().zip(fi).map(|(&a, &b)| i64::from(a) - b).collect();
                    if w.iter().any(|&x| x < 0) {
                        continue;
                    }
                    examined += 1;
                    if elements.contains(&w, g) == Some(true) {
                        continue;
                    }
                    let partner = f_vecs.iter().enumerate().find(|&(j, fj)| {
                        j != i && {
                            let s: Vec<i64> = w.iter().zip(fj).map(|(a, b)| a + b).collect();
                            elements.contains(&s, g) == Some(true)
                        }
                    });
                    if let Some((j, _)) = partner {
                        let (i, j) = (i.min(j), i.max(j));
                        return (examined, Some(confirm(h, &f_vecs, w, i, j, k)));
                    }
                }
            }
            (examined, None)
        })
        .collect();

    let candidates_examined = per_level.iter().map(|(n, _)| n).sum();
    let witness = per_level.into_iter().find_map(|(_, w)| w);
    Ok(TrungReport {
        semigroup: h.clone(),
        f_indices: f,
        z: g,
        bound,
        hypothesis_ok,
        status: if witness.is_some() {
            TrungStatus::Counterexample
        } else {
            TrungStatus::VerifiedUpTo
        },
        witness,
        stats: TrungStats {
            level_sizes: elements.sizes(),
            candidates_examined,
        },
    })
}

fn confirm(
    h: &AffineSemigroup,
    f: &[Vec<i64>],
    w: Vec<i64>,
    i: usize,
    j: usize,
    level: u32,
) -> TrungWitness {
    let plus = |v: &[i64]| -> Vec<i64> { w.iter().zip(v).map(|(a, b)| a + b).collect() };
    let confirmed = !member(h, &w).member
        && member(h, &plus(&f[i])).member
        && member(h, &plus(&f[j])).member
        && saturation_member(h, &w).unwrap_or(false);
    TrungWitness {
        w,
        i,
        j,
        level,
        confirmed,
    }
}

/// For `w` with one zero coordinate and the others at most `B`:
/// `w ∈ H_{3t}` iff both nonzero-position coordinates are multiples of `3t`.
pub fn lemma_two_zero_check(t: u32, bound: u32) -> Result<bool> {
    let h = make_h3t(t)?;
    let step = 3 * t;
    let levels = (2 * bound).div_ceil(step) as usize;
    let elements = GradedElements::new(&h, levels);
    let g = h.degree();
    for zero in 0..3 {
        for x in 0..=bound {
            for y in 0..=bound {
                let mut w = [0i64; 3];
                let others: Vec<usize> = (0..3).filter(|&p| p != zero).collect();
                w[others[0]] = i64::from(x);
                w[others[1]] = i64::from(y);
                let inside = elements.contains(&w, g).expect("levels cover the box");
                if inside != (x % step == 0 && y % step == 0) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Every non-axis generator of `H_{3t}` has no zero coordinate and equals
/// `s·m + 3(t−s)·e_i` for some `0 < s <= t`.
pub fn h3t_structure_holds(t: u32) -> Result<bool> {
    let h = make_h3t(t)?;
    let axes = h.require_axes()?;
    let ok = h.generators().iter().enumerate().all(|(k, v)| {
        if axes.contains(&k) {
            return true;
        }
        let v = v.as_slice();
        if v.contains(&0) {
            return false;
        }
        let s = *v.iter().min().expect("three coordinates");
        if s == 0 || s > t {
            return false;
        }
        let rest: Vec<u32> = v.iter().map(|&x| x - s).collect();
        let nonzero: Vec<u32> = rest.iter().copied().filter(|&x| x != 0).collect();
        match nonzero.as_slice() {
            [] => s == t,
            [x] => *x == 3 * (t - s),
            _ => false,
        }
    });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(h: &AffineSemigroup) -> Vec<Vec<u32>> {
        h.generators().iter().map(|g| g.0.clone()).collect()
    }

    fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
        v.sort();
        v
    }

    #[test]
    fn h6_generators() {
        let h = make_h3t(2).unwrap();
        assert_eq!(
            sorted(gens(&h)),
            sorted(vec![
                vec![6, 0, 0],
                vec![0, 6, 0],
                vec![0, 0, 6],
                vec![4, 1, 1],
                vec![1, 4, 1],
                vec![1, 1, 4],
                vec![2, 2, 2]
            ])
        );
        assert_eq!(h.degree(), 6);
        for t in 1..=6 {
            assert_eq!(make_h3t(t).unwrap().generators().len() as u32, 3 * t + 1);
            assert!(h3t_structure_holds(t).unwrap());
        }
    }

    #[test]
    fn hk_family() {
        assert_eq!(make_hk(1, 1).unwrap(), make_h3t(2).unwrap());
        assert_eq!(make_hk(5, 0).unwrap(), make_h3t(1).unwrap());
        let h = make_hk(2, 1).unwrap();
        assert_eq!(
            sorted(gens(&h)),
            sorted(vec![
                vec![9, 0, 0],
                vec![0, 9, 0],
                vec![0, 0, 9],
                vec![5, 2, 2],
                vec![2, 5, 2],
                vec![2, 2, 5],
                vec![3, 3, 3]
            ])
        );
        for tp in 0..4 {
            assert_eq!(
                make_hk(3, tp).unwrap().generators().len() as u32,
                3 * (tp + 1) + 1
            );
        }
    }

    #[test]
    fn membership_examples() {
        let h = make_h3t(2).unwrap();
        let m = member(&h, &[2, 2, 2]);
        assert!(m.member);
        assert_eq!(recompose(&h, &m.decomposition.unwrap()), vec![2, 2, 2]);
        for w in [[3, 3, 0], [0, 9, 9], [0, 15, 9], [0, 9, 15]] {
            assert!(!member(&h, &w).member, "{w:?}");
        }
        assert!(!member(&h, &[-1, 4, 3]).member);
        assert!(!member(&h, &[1, 1, 1]).member);
        let m = member(&h, &[12, 3, 3]);
        assert_eq!(recompose(&h, &m.decomposition.unwrap()), vec![12, 3, 3]);
    }

    #[test]
    fn lattice_and_saturation_examples() {
        let h = make_h3t(2).unwrap();
        assert!(lattice_member(&h, &[3, -3, 0]));
        assert!(!lattice_member(&h, &[1, 1, 1]));
        assert!(h
            .generators()
            .iter()
            .all(|g| lattice_member(&h, &g.to_signed())));
        assert!(saturation_member(&h, &[3, 3, 0]).unwrap());
        assert!(!saturation_member(&h, &[1, 1, 1]).unwrap());
        assert!(!saturation_member(&h, &[-1, 4, 3]).unwrap());
        let no_axes = AffineSemigroup::from_signed(&[vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert!(matches!(
            saturation_member(&no_axes, &[1, 1, 0]),
            Err(GtError::Unsupported(_))
        ));
    }

    #[test]
    fn normality_examples() {
        let act = CyclicAction::new(5, &[0, 1, 3]).unwrap();
        assert!(
            is_normal_up_to(&semigroup_of_action(&act), 4)
                .unwrap()
                .normal_up_to_bound
        );
        let r = is_normal_up_to(&make_h3t(2).unwrap(), 3).unwrap();
        assert_eq!(r.witness, Some(vec![3, 3, 0]));
        assert!(
            is_normal_up_to(&make_h3t(1).unwrap(), 4)
                .unwrap()
                .normal_up_to_bound
        );
    }

    #[test]
    fn trung_examples() {
        for t in 1..=3 {
            let r = trung_cm_check(&make_h3t(t).unwrap(), 6).unwrap();
            assert!(r.hypothesis_ok);
            assert!(r.verified(), "t={t}");
        }
        let bad = AffineSemigroup::from_signed(&[
            vec![5, 0, 0],
            vec![0, 5, 0],
            vec![0, 0, 5],
            vec![3, 1, 1],
            vec![2, 2, 1],
            vec![1, 3, 1],
        ])
        .unwrap();
        let r = trung_cm_check(&bad, 6).unwrap();
        assert_eq!(r.status, TrungStatus::Counterexample);
        let w = r.witness.unwrap();
        assert!(w.confirmed);
        let act = CyclicAction::new(6, &[0, 1, 3]).unwrap();
        assert!(trung_cm_check(&semigroup_of_action(&act), 6)
            .unwrap()
            .verified());
    }

    #[test]
    fn two_zero_rule_cases() {
        assert!(lemma_two_zero_check(2, 18).unwrap());
        assert!(lemma_two_zero_check(1, 12).unwrap());
        assert!(lemma_two_zero_check(3, 18).unwrap());
    }

    #[test]
    fn semigroup_json() {
        let h = make_h3t(2).unwrap();
        let json = serde_json::to_string(&h).unwrap();
        let back: AffineSemigroup = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        let err =
            serde_json::from_str::<AffineSemigroup>(r#"{"dim":2,"generators":[[1,0],[1,1]]}"#);
        assert!(err.is_err());
    }
}
