//! Fixed inputs shared by the benchmarks.

use asmlat_core::poset::covers_up;
use asmlat_core::Asm;

/// A deterministic matrix of size `n` partway up the lattice: the first
/// available cover is taken `steps` times from the unit matrix, rotating
/// through the choices.
pub fn sample_asm(n: usize, steps: usize) -> Asm {
    let mut a = Asm::identity(n);
    for k in 0..steps {
        let ups = covers_up(&a);
        if ups.is_empty() {
            break;
        }
        a = ups[k % ups.len()].upper.clone();
    }
    a
}
