//! Brute-force reference computations used to cross-check the fast paths.
//!
//! None of these use the local cover criterion or the closed formulas they
//! are meant to check.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::asm::{Asm, CornerSumMatrix, Permutation};
use crate::poly::HalfIntPolynomial;
use crate::poset::{compare_corner_sums, covers_up, PosetOrdering};

/// All pairs `(x, y)` of indices into `universe` with `universe[y]`
/// covering `universe[x]`, decided from the order alone: `x < y` and no `z`
/// with `x < z < y`.
pub fn generic_cover_pairs(universe: &[Asm]) -> BTreeSet<(usize, usize)> {
    let sums: Vec<CornerSumMatrix> = universe.iter().map(Asm::corner_sum).collect();
    let m = universe.len();
    let mut less = vec![false; m * m];
    for x in 0..m {
        for y in 0..m {
            less[x * m + y] = compare_corner_sums(&sums[x], &sums[y]) == PosetOrdering::Less;
        }
    }
    let mut out = BTreeSet::new();
    for x in 0..m {
        for y in 0..m {
            if less[x * m + y] && !(0..m).any(|z| less[x * m + z] && less[z * m + y]) {
                out.insert((x, y));
            }
        }
    }
    out
}

/// Elements reachable from the unit matrix by repeatedly going up a cover.
pub fn bfs_closure(n: usize) -> HashSet<Asm> {
    let start = Asm::identity(n);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for e in covers_up(&a) {
            if seen.insert(e.upper.clone()) {
                queue.push_back(e.upper);
            }
        }
    }
    seen
}

/// `Σ_{i<j, w(i)>w(j)} (w(i) - w(j))` by a direct double loop.
pub fn permutation_beta(w: &Permutation) -> i64 {
    let v = w.images();
    let mut total = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                total += (v[i] - v[j]) as i64;
            }
        }
    }
    total
}

/// `∏_{k=1}^{n} (1 + λ + … + λ^{k-1})`.
pub fn inversion_product(n: usize) -> HalfIntPolynomial {
    let mut p = HalfIntPolynomial::one();
    for k in 1..=n {
        p = &p * &HalfIntPolynomial::from_integer_coeffs(vec![1; k]);
    }
    p
}
