#![allow(dead_code)]

use asmlat_core::poset::covers_up;
use asmlat_core::{enumerate_asms, Asm, Permutation, DEFAULT_GUARD};

pub fn example_a() -> Asm {
    Asm::validate(&[[0, 0, 1, 0], [0, 1, -1, 1], [1, -1, 1, 0], [0, 1, 0, 0]]).unwrap()
}

pub fn w(s: &str) -> Permutation {
    Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
}

pub fn perm(s: &str) -> Asm {
    Asm::from_permutation(&w(s))
}

pub fn all(n: usize) -> Vec<Asm> {
    enumerate_asms(n, DEFAULT_GUARD).unwrap()
}

/// Walks up covers from the unit matrix, choosing among the available
/// covers by the given picks.
pub fn walk_up(n: usize, picks: &[usize]) -> Asm {
    let mut a = Asm::identity(n);
    for &p in picks {
        let ups = covers_up(&a);
        if ups.is_empty() {
            break;
        }
        a = ups[p % ups.len()].upper.clone();
    }
    a
}
