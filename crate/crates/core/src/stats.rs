//! Inversion statistics of alternating sign matrices.
//!
//! `I` counts signed inversions, `I*` dual inversions, `N` the `-1` entries,
//! `H = I - N/2` the weak inversion number and `β` the lattice rank. Half
//! and quarter integers are kept exactly as scaled integers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::asm::Asm;
use crate::error::{Error, Result};

/// A half-integer stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_halves(halves: i64) -> Self {
        HalfInt(halves)
    }

    pub fn halves(self) -> i64 {
        self.0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A multiple of 1/4 stored as four times its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QuarterInt(pub i64);

impl QuarterInt {
    pub fn quarters(self) -> i64 {
        self.0
    }
}

impl fmt::Display for QuarterInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.0;
        if q % 4 == 0 {
            write!(f, "{}", q / 4)
        } else if q % 2 == 0 {
            write!(f, "{}/2", q / 2)
        } else {
            write!(f, "{q}/4")
        }
    }
}

/// A quadruple `(i, j, k, l)` with `i < j`, `k < l` and `a_jk · a_il ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inversion {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    /// `a_jk · a_il`, either `1` or `-1`.
    pub sign: i64,
}

impl Inversion {
    /// Column weight `l - k`.
    pub fn weight(&self) -> i64 {
        (self.l - self.k) as i64
    }

    /// Row weight `j - i`.
    pub fn row_weight(&self) -> i64 {
        (self.j - self.i) as i64
    }
}

/// All inversions in lexicographic `(i, j, k, l)` order.
pub fn inversion_list(a: &Asm) -> Vec<Inversion> {
    let nz = a.nonzeros();
    let mut out = Vec::new();
    for &(i, l, upper) in &nz {
        for &(j, k, lower) in &nz {
            if i < j && k < l {
                out.push(Inversion {
                    i,
                    j,
                    k,
                    l,
                    sign: upper * lower,
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Sums `f(i,j,k,l) · a_jk · a_il` over `i < j`, `k < l`.
///
/// Terms with a zero factor vanish, so only pairs of nonzero entries are
/// visited.
fn inversion_sum(a: &Asm, weight: impl Fn(usize, usize, usize, usize) -> i64) -> i64 {
    let nz = a.nonzeros();
    let mut total = 0;
    for &(j, k, lower) in &nz {
        for &(i, l, upper) in &nz {
            if i < j && k < l {
                total += weight(i, j, k, l) * lower * upper;
            }
        }
    }
    total
}

/// `I(A) = Σ_{i<j, k<l} a_jk a_il`.
pub fn inversion_number(a: &Asm) -> i64 {
    inversion_sum(a, |_, _, _, _| 1)
}

/// `I*(A) = Σ_{i<j, k<l} a_ik a_jl`.
pub fn dual_inversion_number(a: &Asm) -> i64 {
    let nz = a.nonzeros();
    let mut total = 0;
    for &(i, k, first) in &nz {
        for &(j, l, second) in &nz {
            if i < j && k < l {
                total += first * second;
            }
        }
    }
    total
}

/// `β` as the total column weight of inversions, `Σ (l-k) a_jk a_il`.
pub fn beta_weighted(a: &Asm) -> i64 {
    inversion_sum(a, |_, _, k, l| (l - k) as i64)
}

/// `β` as the total row weight of inversions, `Σ (j-i) a_jk a_il`.
pub fn beta_row_weighted(a: &Asm) -> i64 {
    inversion_sum(a, |i, j, _, _| (j - i) as i64)
}

/// `β(A) = Σ_{i,j} (δ_ij - a_ij)(n-i+1)(n-j+1)`, the `O(n²)` form.
pub fn beta_corner(a: &Asm) -> i64 {
    let n = a.size() as i64;
    let mut total = 0;
    for (idx, &x) in a.entries().iter().enumerate() {
        let i = (idx as i64) / n + 1;
        let j = (idx as i64) % n + 1;
        let delta = i64::from(i == j);
        total += (delta - x as i64) * (n - i + 1) * (n - j + 1);
    }
    total
}

/// The lattice rank `β`; alias for [`beta_corner`].
pub fn beta(a: &Asm) -> i64 {
    beta_corner(a)
}

/// `H(A) = I(A) - N(A)/2`.
pub fn weak_inversion(a: &Asm) -> HalfInt {
    HalfInt(2 * inversion_number(a) - a.minus_count() as i64)
}

/// The local share `H_pq(A)` of the weak inversion number:
///
/// `a_pq · ( ½(Σ_{r>p,s<q} a_rs + Σ_{r<p,s>q} a_rs) + ¼(Σ_{r<p} a_rq + Σ_{s>q} a_ps) )`
///
/// Summed over all positions this gives `H(A)`.
pub fn local_weak_contribution(a: &Asm, p: usize, q: usize) -> Result<QuarterInt> {
    let n = a.size();
    if !(1..=n).contains(&p) || !(1..=n).contains(&q) {
        return Err(Error::IndexOutOfRange { p, q, n });
    }
    let apq = a.get(p, q) as i64;
    if apq == 0 {
        return Ok(QuarterInt(0));
    }
    let mut lower_left = 0i64;
    for r in p + 1..=n {
        for s in 1..q {
            lower_left += a.get(r, s) as i64;
        }
    }
    let mut upper_right = 0i64;
    for r in 1..p {
        for s in q + 1..=n {
            upper_right += a.get(r, s) as i64;
        }
    }
    let above: i64 = (1..p).map(|r| a.get(r, q) as i64).sum();
    let right: i64 = (q + 1..=n).map(|s| a.get(p, s) as i64).sum();
    Ok(QuarterInt(
        apq * (2 * (lower_left + upper_right) + above + right),
    ))
}

/// The five statistics of one matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatRecord {
    #[serde(rename = "I")]
    pub inv: i64,
    #[serde(rename = "Istar")]
    pub dual_inv: i64,
    #[serde(rename = "N")]
    pub minus: i64,
    /// `2H`.
    #[serde(rename = "H2")]
    pub weak2: i64,
    pub beta: i64,
}

impl StatRecord {
    pub fn weak(&self) -> HalfInt {
        HalfInt(self.weak2)
    }
}

pub fn stat_record(a: &Asm) -> StatRecord {
    let inv = inversion_number(a);
    let minus = a.minus_count() as i64;
    StatRecord {
        inv,
        dual_inv: dual_inversion_number(a),
        minus,
        weak2: 2 * inv - minus,
        beta: beta_corner(a),
    }
}
