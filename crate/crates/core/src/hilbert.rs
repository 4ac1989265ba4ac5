//! Hilbert functions of the varieties `X_d`.
//!
//! Three independent routes are provided:
//!
//! * [`hf_by_counting`]: solutions of `Σ y_i = td`, `Σ α_i y_i = rd`, any `n`;
//! * [`hf_reduced`]: the reduced two-variable systems for surfaces, where
//!   `y_2` is replaced by `y_2 / (a,d)` and the weight `b` by `λ`;
//! * [`hf_closed_form`]: `d/2 t² + θ/2 t + 1` with
//!   `θ = (a,d) + (λ,d′) + (λ − (a,d), d′)`.
//!
//! The surface profile always records the number of counted degree-`d`
//! invariants next to the formula value of `θ`, and flags any mismatch
//! instead of picking one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{GtError, Result};
use crate::invariants::{invariant_monomials, CyclicAction};

/// Counts degree-`td` invariant monomials by solving the two-equation
/// systems for every admissible `r`.
pub fn hf_by_counting(action: &CyclicAction, t: u32) -> u64 {
    let d = u64::from(action.order());
    let total = u64::from(t) * d;
    let weights: Vec<u64> = action.weights().iter().map(|&w| u64::from(w)).collect();
    let max_r = u64::from(action.max_weight()) * u64::from(t);
    (0..=max_r)
        .map(|r| count_fixed_weight(&weights, 2, total, 0, r * d))
        .sum()
}

/// Solutions in nonnegative integers of `Σ_{i>=from} y_i = remaining` and
/// `Σ_{i>=from} α_i y_i = target - partial`, with `y_0, y_1` solved last.
fn count_fixed_weight(
    weights: &[u64],
    from: usize,
    remaining: u64,
    partial: u64,
    target: u64,
) -> u64 {
    if partial > target {
        return 0;
    }
    if from < weights.len() {
        let w = weights[from];
        return (0..=remaining)
            .map(|y| count_fixed_weight(weights, from + 1, remaining - y, partial + w * y, target))
            .sum();
    }
    solve_pair(weights[0], weights[1], remaining, target - partial)
}

/// Number of `(y0, y1) >= 0` with `y0 + y1 = s` and `w0 y0 + w1 y1 = q`.
fn solve_pair(w0: u64, w1: u64, s: u64, q: u64) -> u64 {
    let (w0, w1, s, q) = (w0 as i128, w1 as i128, s as i128, q as i128);
    if w0 == w1 {
        return if q == w0 * s { (s + 1) as u64 } else { 0 };
    }
    let num = q - w0 * s;
    let den = w1 - w0;
    if num % den != 0 {
        return 0;
    }
    let y1 = num / den;
    u64::from((0..=s).contains(&y1))
}

/// The arithmetic data attached to `(d; 0, a, b)` that does not require
/// counting: `a′, b′, d′, d″, λ, μ` and the formula value of `θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceParams {
    pub a: u32,
    pub b: u32,
    pub d: u32,
    pub gcd_ad: u32,
    pub gcd_bd: u32,
    pub a_prime: u32,
    pub b_prime: u32,
    pub d_prime: u32,
    pub d_double_prime: u32,
    /// Unique `λ ∈ (0, d′]` with `b = λ a′ + μ d′`.
    pub lambda: u32,
    pub mu: i64,
    pub theta: u32,
}

impl SurfaceParams {
    pub fn new(a: u32, b: u32, d: u32) -> Result<Self> {
        let invalid = |reason: &str| GtError::InvalidSurface {
            a,
            b,
            d,
            reason: reason.to_string(),
        };
        if !(0 < a && a < b && b < d) {
            return Err(invalid("need 0 < a < b < d"));
        }
        if a.gcd(&b).gcd(&d) != 1 {
            return Err(invalid("need gcd(a, b, d) = 1"));
        }
        let gcd_ad = a.gcd(&d);
        let gcd_bd = b.gcd(&d);
        let a_prime = a / gcd_ad;
        let d_prime = d / gcd_ad;
        // d′ >= 2 because (a,d) <= a < d.
        let inv = i64::from(a_prime)
            .extended_gcd(&i64::from(d_prime))
            .x
            .rem_euclid(i64::from(d_prime));
        let mut lambda = (inv * i64::from(b)).rem_euclid(i64::from(d_prime));
        if lambda == 0 {
            lambda = i64::from(d_prime);
        }
        let mu = (i64::from(b) - lambda * i64::from(a_prime)) / i64::from(d_prime);
        debug_assert_eq!(
            lambda * i64::from(a_prime) + mu * i64::from(d_prime),
            i64::from(b)
        );
        let lambda = lambda as u32;
        let theta = gcd_ad
            + lambda.gcd(&d_prime)
            + (i64::from(lambda) - i64::from(gcd_ad))
                .unsigned_abs()
                .gcd(&u64::from(d_prime)) as u32;
        Ok(Self {
            a,
            b,
            d,
            gcd_ad,
            gcd_bd,
            a_prime,
            b_prime: b / gcd_bd,
            d_prime,
            d_double_prime: d / gcd_bd,
            lambda,
            mu,
            theta,
        })
    }

    pub fn action(&self) -> CyclicAction {
        CyclicAction::surface(self.a, self.b, self.d).expect("validated parameters")
    }
}

/// Outcome of comparing the `θ` formula against counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Integrity {
    Consistent,
    Discrepancy {
        theta_formula: i64,
        theta_counted: i64,
    },
}

/// All scalars attached to a surface `X_d` with group `⟨M_{d;0,a,b}⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceProfile {
    #[serde(flatten)]
    pub params: SurfaceParams,
    /// Degree-`d` invariants found by enumeration.
    pub mu_d_counted: usize,
    /// `2·mu_d_counted − d − 2`.
    pub theta_counted: i64,
    pub integrity: Integrity,
}

pub fn surface_profile(a: u32, b: u32, d: u32) -> Result<SurfaceProfile> {
    let params = SurfaceParams::new(a, b, d)?;
    let mu_d_counted = invariant_monomials(&params.action(), 1).count;
    let theta_counted = 2 * mu_d_counted as i64 - i64::from(d) - 2;
    let integrity = if theta_counted == i64::from(params.theta) {
        Integrity::Consistent
    } else {
        Integrity::Discrepancy {
            theta_formula: i64::from(params.theta),
            theta_counted,
        }
    };
    Ok(SurfaceProfile {
        params,
        mu_d_counted,
        theta_counted,
        integrity,
    })
}

impl SurfaceProfile {
    pub fn theta(&self) -> u32 {
        self.params.theta
    }

    pub fn d(&self) -> u32 {
        self.params.d
    }

    pub fn is_consistent(&self) -> bool {
        self.integrity == Integrity::Consistent
    }
}

/// Counts the reduced systems
/// `y_0 + y_1 + y_2′ = td`, `y_1 + λ y_2′ = r d′` subject to
/// `y_1 + (a,d) y_2′ <= td`, where `y_2 = (a,d) y_2′`.
///
/// `r` runs over `0..=t·max(λ, (a,d))`, the full range allowed by the
/// inequality; when `λ >= (a,d)` this is `0..=tλ`.
pub fn hf_reduced(a: u32, b: u32, d: u32, t: u32) -> Result<u64> {
    let p = SurfaceParams::new(a, b, d)?;
    Ok(hf_reduced_with(&p, t))
}

pub fn hf_reduced_with(p: &SurfaceParams, t: u32) -> u64 {
    let td = u64::from(t) * u64::from(p.d);
    let lambda = u64::from(p.lambda);
    let g = u64::from(p.gcd_ad);
    let dp = u64::from(p.d_prime);
    let max_r = u64::from(t) * lambda.max(g);
    let mut count = 0;
    for r in 0..=max_r {
        let rhs = r * dp;
        for y2 in 0..=rhs / lambda {
            let y1 = rhs - lambda * y2;
            if y1 + y2 <= td && y1 + g * y2 <= td {
                count += 1;
            }
        }
    }
    count
}

fn half_integer(numerator: i64, what: &str) -> Result<i64> {
    if numerator % 2 != 0 {
        return Err(GtError::NonIntegral(format!("{what} = {numerator}/2")));
    }
    Ok(numerator / 2)
}

/// Exact value of the Hilbert polynomial `d/2 t² + θ/2 t + 1`.
pub fn hilbert_polynomial_value(profile: &SurfaceProfile, t: u64) -> BigRational {
    let d = BigInt::from(profile.d());
    let theta = BigInt::from(profile.theta());
    let t = BigInt::from(t);
    BigRational::new(&d * &t * &t + theta * &t, BigInt::from(2))
        + BigRational::from_integer(1.into())
}

pub fn hf_closed_form(profile: &SurfaceProfile, t: u32) -> Result<u64> {
    let v = hilbert_polynomial_value(profile, u64::from(t));
    if !v.is_integer() {
        return Err(GtError::NonIntegral(format!("HF({t}) = {v}")));
    }
    Ok(v.to_integer().to_u64().expect("nonnegative value"))
}

/// Hilbert polynomial, series and a table of values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    /// Coefficients of `t², t, 1`.
    #[serde(with = "crate::serde_big::rational::vec")]
    pub polynomial: Vec<BigRational>,
    /// Series numerator, ascending powers of `z`.
    pub numerator: Vec<i64>,
    /// Exponent `k` of the denominator `(1 − z)^k`.
    pub denominator_exponent: u32,
    /// `HF(t)` for `t = 0..=horizon`.
    pub table: Vec<u64>,
}

pub const DEFAULT_HORIZON: u32 = 6;

pub fn hilbert_series(profile: &SurfaceProfile) -> Result<HilbertData> {
    hilbert_data(profile, DEFAULT_HORIZON)
}

pub fn hilbert_data(profile: &SurfaceProfile, horizon: u32) -> Result<HilbertData> {
    let d = i64::from(profile.d());
    let theta = i64::from(profile.theta());
    let numerator = vec![
        1,
        half_integer(d + theta - 4, "linear numerator coefficient")?,
        half_integer(d - theta + 2, "quadratic numerator coefficient")?,
    ];
    let two = BigInt::from(2);
    let polynomial = vec![
        BigRational::new(BigInt::from(d), two.clone()),
        BigRational::new(BigInt::from(theta), two),
        BigRational::from_integer(1.into()),
    ];
    let table = (0..=horizon)
        .map(|t| hf_closed_form(profile, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertData {
        polynomial,
        numerator,
        denominator_exponent: 3,
        table,
    })
}

/// Power-series coefficients of `numerator / (1 − z)^k` up to `z^terms-1`.
pub fn expand_series(numerator: &[i64], k: u32, terms: usize) -> Vec<i128> {
    let mut coeffs: Vec<i128> = (0..terms)
        .map(|i| numerator.get(i).copied().map_or(0, i128::from))
        .collect();
    for _ in 0..k {
        for i in 1..terms {
            coeffs[i] += coeffs[i - 1];
        }
    }
    coeffs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub mu_d: u64,
    pub degree: u64,
    pub codim: u64,
    pub cm_type: u64,
    pub reg: u64,
}

/// `μ_d`, degree, codimension, Cohen–Macaulay type and regularity from `θ`.
pub fn surface_invariants(profile: &SurfaceProfile) -> Result<SurfaceInvariants> {
    let d = i64::from(profile.d());
    let theta = i64::from(profile.theta());
    Ok(SurfaceInvariants {
        mu_d: half_integer(d + theta + 2, "mu_d")? as u64,
        degree: d as u64,
        codim: half_integer(d + theta - 4, "codim")? as u64,
        cm_type: half_integer(d - theta + 2, "cm_type")? as u64,
        reg: 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn act(d: i64, w: &[i64]) -> CyclicAction {
        CyclicAction::new(d, w).unwrap()
    }

    #[test]
    fn counting_examples() {
        let cubic = act(3, &[0, 1, 2]);
        let values: Vec<u64> = (0..=4).map(|t| hf_by_counting(&cubic, t)).collect();
        assert_eq!(values, vec![1, 4, 10, 19, 31]);
        let threefold = act(4, &[0, 1, 2, 3]);
        assert_eq!(hf_by_counting(&threefold, 1), 10);
        assert_eq!(hf_by_counting(&threefold, 2), 43);
        assert_eq!(hf_by_counting(&act(7, &[2, 3, 5]), 0), 1);
    }

    #[test]
    fn counting_handles_repeated_and_nonzero_first_weights() {
        for (d, w) in [
            (5, vec![1, 1, 3]),
            (6, vec![2, 5, 5]),
            (4, vec![3, 1]),
            (6, vec![1, 2, 3, 3, 5]),
        ] {
            let a = act(d, &w);
            for t in 0..=3 {
                assert_eq!(
                    hf_by_counting(&a, t),
                    invariant_monomials(&a, t).count as u64,
                    "{a} t={t}"
                );
            }
        }
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(hf_reduced(2, 3, 6, 1).unwrap(), 7);
        assert_eq!(hf_reduced(3, 5, 8, 1).unwrap(), 7);
        assert_eq!(hf_reduced(1, 2, 3, 2).unwrap(), 10);
        assert!(hf_reduced(3, 2, 6, 1).is_err());
        assert!(hf_reduced(2, 4, 6, 1).is_err());
    }

    #[test]
    fn reduced_count_when_lambda_is_below_gcd() {
        // (2,3,4): (a,d) = 2, λ = 1.
        let p = SurfaceParams::new(2, 3, 4).unwrap();
        assert_eq!((p.gcd_ad, p.lambda), (2, 1));
        for t in 0..=4 {
            assert_eq!(hf_reduced_with(&p, t), hf_by_counting(&p.action(), t));
        }
    }

    #[test]
    fn profile_examples() {
        let p = surface_profile(3, 5, 8).unwrap();
        assert_eq!((p.params.lambda, p.params.mu, p.theta()), (7, -2, 4));
        assert_eq!(p.mu_d_counted, 7);
        assert!(p.is_consistent());

        let p = surface_profile(1, 2, 3).unwrap();
        assert_eq!((p.params.lambda, p.theta()), (2, 3));

        let p = surface_profile(2, 3, 6).unwrap();
        assert_eq!((p.theta(), p.mu_d_counted), (6, 7));

        assert!(surface_profile(0, 2, 5).is_err());
        assert!(surface_profile(3, 6, 9).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let p = surface_profile(1, 2, 3).unwrap();
        assert_eq!(hf_closed_form(&p, 3).unwrap(), 19);
        assert_eq!(hf_closed_form(&p, 0).unwrap(), 1);
        assert_eq!(
            hf_closed_form(&surface_profile(3, 5, 8).unwrap(), 1).unwrap(),
            7
        );
    }

    #[test]
    fn series_examples() {
        let h = hilbert_series(&surface_profile(1, 2, 3).unwrap()).unwrap();
        assert_eq!(h.numerator, vec![1, 1, 1]);
        assert_eq!(&h.table[..5], &[1, 4, 10, 19, 31]);
        let h = hilbert_series(&surface_profile(2, 3, 6).unwrap()).unwrap();
        assert_eq!(h.numerator, vec![1, 4, 1]);
        assert_eq!(h.numerator.iter().sum::<i64>(), 6);
        let expanded = expand_series(&h.numerator, h.denominator_exponent, h.table.len());
        let table: Vec<i128> = h.table.iter().map(|&v| v as i128).collect();
        assert_eq!(expanded, table);
    }

    #[test]
    fn invariants_examples() {
        let inv = surface_invariants(&surface_profile(1, 3, 5).unwrap()).unwrap();
        assert_eq!((inv.mu_d, inv.codim), (5, 2));
        let inv = surface_invariants(&surface_profile(1, 2, 3).unwrap()).unwrap();
        assert_eq!((inv.mu_d, inv.codim, inv.cm_type), (4, 1, 1));
        let inv = surface_invariants(&surface_profile(3, 5, 8).unwrap()).unwrap();
        assert_eq!((inv.mu_d, inv.codim, inv.cm_type, inv.reg), (7, 4, 3, 3));
    }

    #[test]
    fn prime_order_invariants() {
        for d in [5u32, 7, 11, 13] {
            for a in 1..d {
                for b in a + 1..d {
                    let inv = surface_invariants(&surface_profile(a, b, d).unwrap()).unwrap();
                    assert_eq!(inv.mu_d, u64::from(d + 5) / 2);
                    assert_eq!(inv.codim, u64::from(d - 1) / 2);
                }
            }
        }
    }
}
