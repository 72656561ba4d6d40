//! Exhaustive generation of `𝒜_n` and generating polynomials over it.
//!
//! Matrices are grown row by row. The state after each row is the vector of
//! column prefix sums, each `0` or `1`; a new row may put `+1` only where the
//! column sum is `0` and `-1` only where it is `1`, alternating in sign and
//! starting and ending with `+1`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::asm::{Asm, Permutation};
use crate::error::{Error, Result};
use crate::poly::{BivariatePolynomial, HalfIntPolynomial};
use crate::stats::{self, StatRecord};

/// Default cap on the number of matrices an enumeration may produce.
pub const DEFAULT_GUARD: u64 = 10_000_000;

/// `∏_{i=0}^{n-1} (3i+1)! / (n+i)!`, the number of `n x n` ASMs.
pub fn count_formula(n: usize) -> BigUint {
    let factorial = |m: usize| -> BigUint { (1..=m).map(BigUint::from).product() };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    num / den
}

fn check_guard(n: usize, count: BigUint, guard: u64) -> Result<()> {
    if count > BigUint::from(guard) {
        return Err(Error::TooLarge {
            n,
            count: count.to_string(),
            guard,
        });
    }
    Ok(())
}

pub fn check_asm_guard(n: usize, guard: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::NotSquare);
    }
    check_guard(n, count_formula(n), guard)
}

pub fn check_perm_guard(n: usize, guard: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::NotSquare);
    }
    check_guard(n, (1..=n).map(BigUint::from).product(), guard)
}

/// Admissible next rows for a column state (bit `j` set when column `j`
/// already sums to 1), in lexicographic order with `-1 < 0 < 1`.
fn row_candidates(n: usize, state: u32) -> Vec<Vec<i8>> {
    fn go(n: usize, state: u32, col: usize, prefix: i8, row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if col == n {
            if prefix == 1 {
                out.push(row.clone());
            }
            return;
        }
        let full = state >> col & 1 == 1;
        if prefix == 1 && full {
            row.push(-1);
            go(n, state, col + 1, 0, row, out);
            row.pop();
        }
        row.push(0);
        go(n, state, col + 1, prefix, row, out);
        row.pop();
        if prefix == 0 && !full {
            row.push(1);
            go(n, state, col + 1, 1, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    go(n, state, 0, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

fn apply_row(state: u32, row: &[i8]) -> u32 {
    let mut next = state;
    for (j, &x) in row.iter().enumerate() {
        match x {
            1 => next |= 1 << j,
            -1 => next &= !(1 << j),
            _ => {}
        }
    }
    next
}

struct Grower {
    n: usize,
    cache: HashMap<u32, Vec<Vec<i8>>>,
}

impl Grower {
    fn new(n: usize) -> Self {
        Grower {
            n,
            cache: HashMap::new(),
        }
    }

    fn extend(&mut self, state: u32, buf: &mut Vec<i8>, out: &mut Vec<Asm>) {
        let n = self.n;
        if buf.len() == n * n {
            debug_assert_eq!(state, (1u32 << n) - 1);
            out.push(Asm::from_entries_unchecked(n, buf.clone()));
            return;
        }
        let rows = self
            .cache
            .entry(state)
            .or_insert_with(|| row_candidates(n, state))
            .clone();
        for row in rows {
            let next = apply_row(state, &row);
            buf.extend_from_slice(&row);
            self.extend(next, buf, out);
            buf.truncate(buf.len() - n);
        }
    }
}

/// Every ASM of size `n` exactly once, in row-major lexicographic order.
pub fn enumerate_asms(n: usize, guard: u64) -> Result<Vec<Asm>> {
    check_asm_guard(n, guard)?;
    assert!(n < 32, "column state is a 32-bit mask");
    let first_rows = row_candidates(n, 0);
    let parts: Vec<Vec<Asm>> = first_rows
        .par_iter()
        .map(|row| {
            let mut grower = Grower::new(n);
            let mut buf = row.clone();
            let mut out = Vec::new();
            grower.extend(apply_row(0, row), &mut buf, &mut out);
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Statistic used as an exponent in a generating polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stat {
    Inversions,
    Weak,
    Beta,
}

impl Stat {
    /// The statistic in half-units.
    pub fn half_units(self, record: &StatRecord) -> u64 {
        let v = match self {
            Stat::Inversions => 2 * record.inv,
            Stat::Weak => record.weak2,
            Stat::Beta => 2 * record.beta,
        };
        u64::try_from(v).expect("statistics are non-negative")
    }
}

/// The set summed over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// All of `𝒜_n`.
    Asm,
    /// The permutation matrices `S_n ⊂ 𝒜_n`.
    Perm,
}

fn universe(n: usize, over: Universe, guard: u64) -> Result<Vec<Asm>> {
    match over {
        Universe::Asm => enumerate_asms(n, guard),
        Universe::Perm => {
            check_perm_guard(n, guard)?;
            Ok(Permutation::all(n)
                .map(|w| Asm::from_permutation(&w))
                .collect())
        }
    }
}

/// Tallies `key(stat_record(A))` over the matrices with per-worker maps.
fn tally<K, F>(items: &[Asm], key: F) -> BTreeMap<K, u64>
where
    K: Ord + Send,
    F: Fn(&StatRecord) -> K + Sync,
{
    items
        .par_iter()
        .fold(BTreeMap::new, |mut acc, a| {
            *acc.entry(key(&stats::stat_record(a))).or_insert(0u64) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut left, right| {
            for (k, c) in right {
                *left.entry(k).or_insert(0) += c;
            }
            left
        })
}

/// `Σ_{A} λ^{stat(A)}` over `𝒜_n` by full enumeration.
pub fn genfun_stat(n: usize, stat: Stat, guard: u64) -> Result<HalfIntPolynomial> {
    genfun_stat_over(n, stat, Universe::Asm, guard)
}

pub fn genfun_stat_over(
    n: usize,
    stat: Stat,
    over: Universe,
    guard: u64,
) -> Result<HalfIntPolynomial> {
    let items = universe(n, over, guard)?;
    let mut p = HalfIntPolynomial::zero();
    for (e, c) in tally(&items, |r| stat.half_units(r)) {
        p.add_term(e, c);
    }
    Ok(p)
}

/// The three bivariate sums `Σ λ^{x} q^{β}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bivariate {
    /// `(I, β)` over `S_n`.
    PermInversionsBeta,
    /// `(I, β)` over `𝒜_n`.
    AsmInversionsBeta,
    /// `(H, β)` over `𝒜_n`.
    AsmWeakBeta,
}

/// Brute-force evaluation of a bivariate generating polynomial.
pub fn bivariate_genfun(n: usize, kind: Bivariate, guard: u64) -> Result<BivariatePolynomial> {
    let (over, stat) = match kind {
        Bivariate::PermInversionsBeta => (Universe::Perm, Stat::Inversions),
        Bivariate::AsmInversionsBeta => (Universe::Asm, Stat::Inversions),
        Bivariate::AsmWeakBeta => (Universe::Asm, Stat::Weak),
    };
    let items = universe(n, over, guard)?;
    let mut p = BivariatePolynomial::zero();
    for ((a, b), c) in tally(&items, |r| (stat.half_units(r), r.beta as u64)) {
        p.add_term(a, b, c);
    }
    Ok(p)
}

/// `∏_{k=1}^{n-1} (1 - q^k)^{n-k}`.
pub fn signed_product(n: usize) -> HalfIntPolynomial {
    let mut p = HalfIntPolynomial::one();
    for k in 1..n {
        let factor = HalfIntPolynomial::one() - HalfIntPolynomial::integer_monomial(k as u64, 1);
        for _ in 0..n - k {
            p = &p * &factor;
        }
    }
    p
}

/// Both sides of `Σ_{w ∈ S_n} (-1)^{I(w)} q^{β(w)} = ∏ (1 - q^k)^{n-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedIdentity {
    pub lhs: HalfIntPolynomial,
    pub rhs: HalfIntPolynomial,
}

impl SignedIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn signed_identity_check(n: usize, guard: u64) -> Result<SignedIdentity> {
    let lhs = bivariate_genfun(n, Bivariate::PermInversionsBeta, guard)?
        .specialize_lambda(-1)
        .expect("inversion numbers are integers");
    Ok(SignedIdentity {
        lhs,
        rhs: signed_product(n),
    })
}
