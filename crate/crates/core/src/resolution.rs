//! Graded Betti numbers of `S/I(X_d)` for GT-surfaces.
//!
//! `S = k[w_1, …, w_{μ_d}]` and the resolution has length `c = μ_d − 3`.
//! Ranks come from closed formulas in `c` and `h = cm_type − 1`, split by
//! whether `θ = 3` or `θ >= 4`; the toric module recomputes the low
//! degrees by linear algebra.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};
use crate::exact::binomial_u64;
use crate::hilbert::{hf_by_counting, hilbert_series, SurfaceProfile};
use crate::invariants::{mu_d, CyclicAction};
use crate::toric::fiber_partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiCase {
    ThetaThree,
    ThetaAtLeastFour,
}

/// `entries[(l, i)] = b_{l,i}`, the rank of `S(−l−i)` in the `l`-th module.
/// Zero entries are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub mu_d: u64,
    pub c: u64,
    pub h: u64,
    pub case: BettiCase,
    #[serde(with = "entry_keys")]
    pub entries: BTreeMap<(u64, u64), u64>,
}

mod entry_keys {
    use std::collections::BTreeMap;

    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<(u64, u64), u64>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|(&(l, i), &v)| (format!("{l},{i}"), v))
            .collect::<BTreeMap<_, _>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<(u64, u64), u64>, D::Error> {
        BTreeMap::<String, u64>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| {
                let (l, i) = k
                    .split_once(',')
                    .ok_or_else(|| D::Error::custom(format!("bad Betti key {k:?}")))?;
                let l = l.trim().parse().map_err(D::Error::custom)?;
                let i = i.trim().parse().map_err(D::Error::custom)?;
                Ok(((l, i), v))
            })
            .collect()
    }
}

impl BettiTable {
    pub fn get(&self, l: u64, i: u64) -> u64 {
        self.entries.get(&(l, i)).copied().unwrap_or(0)
    }

    /// Index of the last nonzero module.
    pub fn projective_dimension(&self) -> u64 {
        self.entries.keys().map(|&(l, _)| l).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity of `I(X_d)`, read off the twists.
    pub fn regularity(&self) -> u64 {
        self.entries.keys().map(|&(_, i)| i).max().unwrap_or(0) + 1
    }

    pub fn top_is_level(&self) -> bool {
        let c = self.projective_dimension();
        self.entries.keys().all(|&(l, i)| l != c || i == 2)
    }
}

pub fn betti_table(profile: &SurfaceProfile) -> BettiTable {
    let d = u64::from(profile.d());
    let theta = u64::from(profile.theta());
    let c = (d + theta - 4) / 2;
    let h = (d + 2 - theta) / 2 - 1;
    let b = |n: u64, k: i64| binomial_u64(n, k);
    let mut entries = BTreeMap::new();
    let mut put = |l: u64, i: u64, v: u64| {
        if v != 0 {
            entries.insert((l, i), v);
        }
    };
    let case = if theta == 3 {
        for l in 1..c {
            put(l, 1, l * b(c, l as i64 + 1));
        }
        for l in 1..=c {
            put(l, 2, l * b(c, l as i64));
        }
        BettiCase::ThetaThree
    } else {
        for l in 1..c {
            let mut v = l * b(c, l as i64 + 1);
            if l + h < c {
                v += (c - h - l) * b(c, l as i64 - 1);
            }
            put(l, 1, v);
        }
        for l in (c - h).max(1)..=c {
            put(l, 2, (l + h + 1 - c) * b(c, l as i64));
        }
        BettiCase::ThetaAtLeastFour
    };
    BettiTable {
        mu_d: c + 3,
        c,
        h,
        case,
        entries,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCounts {
    pub quadrics: u64,
    pub cubics: u64,
}

pub fn generator_counts(profile: &SurfaceProfile) -> GeneratorCounts {
    let d = u64::from(profile.d());
    let theta = u64::from(profile.theta());
    let m = (d + theta + 2) / 2 - 3;
    if theta == 3 {
        GeneratorCounts {
            quadrics: binomial_u64(m, 2),
            cubics: m,
        }
    } else {
        GeneratorCounts {
            quadrics: binomial_u64(m, 2) + 2 * m + 1 - d,
            cubics: 0,
        }
    }
}

/// `b_{1,i}` computed as `binom(μ_d+i, i+1) − HF(i+1)` and as the sum of
/// `|fiber| − 1` over the degree-`(i+1)` fibers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstBetti {
    pub i: u32,
    pub via_hilbert: i128,
    pub via_fibers: u64,
    pub agree: bool,
}

impl FirstBetti {
    pub fn value(&self) -> Option<u64> {
        self.agree.then_some(self.via_fibers)
    }
}

pub fn first_betti_via_fibers(action: &CyclicAction, i: u32) -> FirstBetti {
    let mu = mu_d(action) as u64;
    let j = i + 1;
    let via_hilbert = i128::from(binomial_u64(mu + u64::from(i), i64::from(j)))
        - i128::from(hf_by_counting(action, j));
    let via_fibers = fiber_partition(action, j).relation_count();
    FirstBetti {
        i,
        via_hilbert,
        via_fibers,
        agree: via_hilbert == i128::from(via_fibers),
    }
}

/// `numerator / (1 − z)^denominator_exponent`, integer coefficients in
/// ascending powers of `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalSeries {
    pub numerator: Vec<i64>,
    pub denominator_exponent: u32,
}

impl RationalSeries {
    /// Cancels every factor `1 − z` shared by numerator and denominator.
    pub fn reduced(mut self) -> Self {
        trim(&mut self.numerator);
        while self.denominator_exponent > 0
            && !self.numerator.is_empty()
            && self.numerator.iter().sum::<i64>() == 0
        {
            // Synthetic division by (1 − z): q_k = Σ_{j<=k} p_j.
            let mut acc = 0;
            let mut q: Vec<i64> = self
                .numerator
                .iter()
                .map(|&p| {
                    acc += p;
                    acc
                })
                .collect();
            q.pop();
            self.numerator = q;
            trim(&mut self.numerator);
            self.denominator_exponent -= 1;
        }
        self
    }
}

fn trim(p: &mut Vec<i64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// The alternating sum of the resolution over `(1 − z)^{μ_d}`, reduced.
pub fn series_from_betti(table: &BettiTable) -> RationalSeries {
    let top = table.entries.keys().map(|&(l, i)| l + i).max().unwrap_or(0) as usize;
    let mut numerator = vec![0i64; top + 1];
    numerator[0] = 1;
    for (&(l, i), &v) in &table.entries {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        numerator[(l + i) as usize] += sign * v as i64;
    }
    RationalSeries {
        numerator,
        denominator_exponent: table.mu_d as u32,
    }
    .reduced()
}

/// Compares [`series_from_betti`] with the closed-form Hilbert series.
pub fn check_series(profile: &SurfaceProfile) -> Result<RationalSeries> {
    let from_betti = series_from_betti(&betti_table(profile));
    let closed = hilbert_series(profile)?;
    let expected = RationalSeries {
        numerator: closed.numerator,
        denominator_exponent: closed.denominator_exponent,
    }
    .reduced();
    if from_betti != expected {
        return Err(GtError::Discrepancy(format!(
            "series mismatch: Betti gives {from_betti:?}, closed form gives {expected:?}"
        )));
    }
    Ok(from_betti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::surface_profile;

    fn table(a: u32, b: u32, d: u32) -> BettiTable {
        betti_table(&surface_profile(a, b, d).unwrap())
    }

    fn entries(t: &BettiTable) -> Vec<((u64, u64), u64)> {
        t.entries.iter().map(|(&k, &v)| (k, v)).collect()
    }

    #[test]
    fn betti_examples() {
        let t = table(1, 3, 6);
        assert_eq!((t.c, t.h), (4, 0));
        assert_eq!(
            entries(&t),
            vec![((1, 1), 9), ((2, 1), 16), ((3, 1), 9), ((4, 2), 1)]
        );

        let t = table(1, 4, 8);
        assert_eq!((t.c, t.h), (5, 1));
        assert_eq!(
            entries(&t),
            vec![
                ((1, 1), 13),
                ((2, 1), 30),
                ((3, 1), 25),
                ((4, 1), 4),
                ((4, 2), 5),
                ((5, 2), 2)
            ]
        );

        let t = table(1, 2, 4);
        assert_eq!(entries(&t), vec![((1, 1), 2), ((2, 2), 1)]);

        let t = table(1, 3, 5);
        assert_eq!(t.case, BettiCase::ThetaThree);
        assert_eq!(entries(&t), vec![((1, 1), 1), ((1, 2), 2), ((2, 2), 2)]);
    }

    #[test]
    fn betti_shape() {
        for (a, b, d) in [(1, 3, 6), (1, 4, 8), (1, 2, 3), (3, 5, 8), (2, 5, 9)] {
            let p = surface_profile(a, b, d).unwrap();
            let t = betti_table(&p);
            assert_eq!(t.projective_dimension(), t.c);
            assert!(t.top_is_level());
            assert_eq!(t.regularity(), 3);
            assert_eq!(t.get(t.c, 2), t.h + 1);
        }
    }

    #[test]
    fn generator_count_examples() {
        let g = |a, b, d| generator_counts(&surface_profile(a, b, d).unwrap());
        assert_eq!(
            g(1, 2, 3),
            GeneratorCounts {
                quadrics: 0,
                cubics: 1
            }
        );
        assert_eq!(
            g(1, 3, 6),
            GeneratorCounts {
                quadrics: 9,
                cubics: 0
            }
        );
        assert_eq!(
            g(1, 3, 5),
            GeneratorCounts {
                quadrics: 1,
                cubics: 2
            }
        );
    }

    #[test]
    fn first_betti_examples() {
        let a = CyclicAction::new(3, &[0, 1, 2]).unwrap();
        let b1 = first_betti_via_fibers(&a, 1);
        assert_eq!((b1.via_hilbert, b1.via_fibers, b1.agree), (0, 0, true));
        assert_eq!(first_betti_via_fibers(&a, 2).value(), Some(1));
        let a = CyclicAction::new(4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(first_betti_via_fibers(&a, 1).value(), Some(12));
    }

    #[test]
    fn series_examples() {
        let s = series_from_betti(&table(1, 2, 3));
        assert_eq!(
            s,
            RationalSeries {
                numerator: vec![1, 1, 1],
                denominator_exponent: 3
            }
        );
        let s = series_from_betti(&table(1, 3, 6));
        assert_eq!(
            s,
            RationalSeries {
                numerator: vec![1, 4, 1],
                denominator_exponent: 3
            }
        );
        let s = series_from_betti(&table(1, 2, 4));
        assert_eq!(
            s,
            RationalSeries {
                numerator: vec![1, 2, 1],
                denominator_exponent: 3
            }
        );
        assert!(check_series(&surface_profile(3, 5, 8).unwrap()).is_ok());
    }

    #[test]
    fn betti_json_round_trip() {
        let t = table(1, 4, 8);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["entries"]["4,2"], 5);
        assert_eq!(json["case"], "theta_at_least_four");
        let back: BettiTable = serde_json::from_value(json).unwrap();
        assert_eq!(back, t);
    }
}
