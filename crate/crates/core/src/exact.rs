//! Exact integer primitives: gcd chains, binomial coefficients, the floor-sum
//! identity, fraction-free rank and integer row echelon forms.
//!
//! Nothing in this crate touches floating point. Matrix entries are
//! arbitrary-precision; rank computations first run on `i128` with checked
//! arithmetic and restart on [`BigInt`] the moment an intermediate value
//! would overflow.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{GtError, Result};

/// Greatest common divisor of a nonempty list, taken on absolute values.
pub fn gcd_all(values: &[i64]) -> Result<u64> {
    let (first, rest) = values
        .split_first()
        .ok_or(GtError::EmptyInput("gcd_all needs at least one value"))?;
    Ok(rest
        .iter()
        .fold(first.unsigned_abs(), |acc, v| acc.gcd(&v.unsigned_abs())))
}

/// `sum_{i=1}^{n-1} floor(i*m/n)`, computed directly.
///
/// The result is checked against [`floor_sum_closed_form`]; the two always
/// agree for positive arguments.
///
/// # Panics
///
/// Panics if `m` or `n` is zero.
pub fn floor_sum(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1, "floor_sum requires m, n >= 1");
    let direct: u64 = (1..n).map(|i| i * m / n).sum();
    debug_assert_eq!(direct, floor_sum_closed_form(m, n));
    direct
}

/// `((m-1)(n-1) + gcd(m,n) - 1) / 2`.
pub fn floor_sum_closed_form(m: u64, n: u64) -> u64 {
    assert!(m >= 1 && n >= 1, "floor_sum requires m, n >= 1");
    ((m - 1) * (n - 1) + m.gcd(&n) - 1) / 2
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// [`binomial`] narrowed to `u64`.
///
/// # Panics
///
/// Panics if the value does not fit, which never happens for the
/// multiset counts used in this crate.
pub fn binomial_u64(n: u64, k: i64) -> u64 {
    u64::try_from(binomial(n, k)).expect("binomial coefficient exceeds u64")
}

/// Dense integer matrix with arbitrary-precision entries, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(GtError::InvalidArgument(
                "matrix rows have different lengths".into(),
            ));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().cloned().map(Into::into))
            .collect();
        Ok(Self {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: impl Into<BigInt>) {
        self.entries[row * self.cols + col] = value.into();
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Multiplies every entry of `row` by `factor`.
    pub fn scale_row(&mut self, row: usize, factor: &BigInt) {
        for c in 0..self.cols {
            self.entries[row * self.cols + c] *= factor;
        }
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.entries
            .iter()
            .map(i128::try_from)
            .map(|r| r.ok())
            .collect()
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank over the rationals via fraction-free (Bareiss) elimination.
///
/// Pivots are taken as the first nonzero entry, scanning columns left to
/// right and rows top to bottom, so the elimination order is deterministic.
pub fn integer_rank(m: &IntegerMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    if let Some(small) = m.to_i128() {
        if let Some(rank) = bareiss_rank_i128(small, m.rows, m.cols) {
            return rank;
        }
    }
    bareiss_rank_big(m.entries.clone(), m.rows, m.cols)
}

fn bareiss_rank_i128(mut a: Vec<i128>, rows: usize, cols: usize) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + c] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c];
        for i in rank + 1..rows {
            let lead = a[i * cols + c];
            for j in c + 1..cols {
                let v = pivot
                    .checked_mul(a[i * cols + j])?
                    .checked_sub(lead.checked_mul(a[rank * cols + j])?)?;
                a[i * cols + j] = v / prev;
            }
            a[i * cols + c] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut a: Vec<BigInt>, rows: usize, cols: usize) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let pivot = a[rank * cols + c].clone();
        for i in rank + 1..rows {
            let lead = a[i * cols + c].clone();
            for j in c + 1..cols {
                let v = &pivot * &a[i * cols + j] - &lead * &a[rank * cols + j];
                a[i * cols + j] = v / &prev;
            }
            a[i * cols + c] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Integer row echelon form of the row lattice of a matrix, obtained with
/// unimodular row operations only (Euclid on each pivot column). Pivots are
/// positive and entries above each pivot are reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowLattice {
    cols: usize,
    /// Echelon rows, each with its pivot column, pivot columns strictly increasing.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowLattice {
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut work: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
        for c in 0..cols {
            loop {
                let nonzero: Vec<usize> =
                    (0..work.len()).filter(|&i| !work[i][c].is_zero()).collect();
                if nonzero.len() <= 1 {
                    if let Some(&i) = nonzero.first() {
                        let mut row = work.swap_remove(i);
                        if row[c].is_negative() {
                            row.iter_mut().for_each(|v| *v = -v.clone());
                        }
                        echelon.push((c, row));
                    }
                    break;
                }
                let pivot_idx = *nonzero
                    .iter()
                    .min_by_key(|&&i| work[i][c].abs())
                    .expect("nonempty");
                let pivot_row = work[pivot_idx].clone();
                for &i in &nonzero {
                    if i == pivot_idx {
                        continue;
                    }
                    let q = work[i][c].div_floor(&pivot_row[c]);
                    for j in c..cols {
                        let delta = &q * &pivot_row[j];
                        work[i][j] -= delta;
                    }
                }
            }
        }
        for k in 0..echelon.len() {
            let (pc, pivot_row) = echelon[k].clone();
            for upper in echelon.iter_mut().take(k) {
                let q = upper.1[pc].div_floor(&pivot_row[pc]);
                if !q.is_zero() {
                    for j in pc..cols {
                        let delta = &q * &pivot_row[j];
                        upper.1[j] -= delta;
                    }
                }
            }
        }
        Self {
            cols,
            rows: echelon,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn echelon_rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows.iter().map(|(c, r)| (*c, r.as_slice()))
    }

    /// Whether `v` is an integer combination of the rows.
    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.cols {
            return false;
        }
        let mut rest: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (pc, row) in &self.rows {
            if rest[..*pc].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = rest[*pc].div_rem(&row[*pc]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for j in *pc..self.cols {
                    let delta = &q * &row[j];
                    rest[j] -= delta;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }
}
