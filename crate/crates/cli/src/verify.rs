//! The `verify` report: every exhaustive property suite, run for all sizes
//! up to a bound.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::RangeInclusive;

use asmlat_core::enumerate::genfun_stat_over;
use asmlat_core::poset::{self, compare, covers_up, enumerate_bigrassmannians, PosetOrdering};
use asmlat_core::stats::{self, local_weak_contribution, stat_record};
use asmlat_core::{
    count_formula, enumerate_asms, from_corner_sum, genfun_stat, oracle, signed_identity_check,
    Asm, CornerSumMatrix, Permutation, Stat, Universe,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const RANDOM_TRIPLES: usize = 10_000;
const RANDOM_PERMUTATIONS: usize = 1000;

/// One named property with the counts at the largest size checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteLine {
    pub name: String,
    pub passed: u64,
    pub checked: u64,
    /// Sizes covered, e.g. `n=1..4`.
    pub scope: String,
    /// Cases checked over all sizes.
    pub cumulative: u64,
    pub failure: Option<String>,
}

impl SuiteLine {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub n_max: usize,
    pub lines: Vec<SuiteLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(SuiteLine::ok)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(
                f,
                "{}: {}/{} [{}, {} checked] {}",
                l.name,
                l.passed,
                l.checked,
                l.scope,
                l.cumulative,
                if l.ok() { "ok" } else { "FAIL" }
            )?;
            if let Some(msg) = &l.failure {
                writeln!(f, "  first failure: {msg}")?;
            }
        }
        let failed = self.lines.iter().filter(|l| !l.ok()).count();
        if failed == 0 {
            writeln!(
                f,
                "all {} suites passed (n <= {})",
                self.lines.len(),
                self.n_max
            )
        } else {
            writeln!(
                f,
                "{failed} of {} suites failed (n <= {})",
                self.lines.len(),
                self.n_max
            )
        }
    }
}

#[derive(Default)]
struct Tally {
    passed: u64,
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if ok {
            self.passed += 1;
        } else if self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn triangle(n: usize) -> i64 {
    (n * (n - 1) / 2) as i64
}

struct Runner {
    n_max: usize,
    universes: Vec<Vec<Asm>>,
    lines: Vec<SuiteLine>,
}

impl Runner {
    fn all(&self, n: usize) -> &[Asm] {
        &self.universes[n]
    }

    /// Runs `check` for each size in `1..=cap` (clipped to `n_max`).
    fn sized(
        &mut self,
        name: &str,
        sizes: RangeInclusive<usize>,
        check: impl Fn(&Self, usize, &mut Tally),
    ) {
        let (lo, hi) = (*sizes.start(), (*sizes.end()).min(self.n_max));
        let mut last = Tally::default();
        let mut cumulative = 0;
        let mut failure = None;
        for n in lo..=hi {
            let mut t = Tally::default();
            check(self, n, &mut t);
            cumulative += t.checked;
            if failure.is_none() {
                failure = t.failure.take().map(|m| format!("n={n}: {m}"));
            }
            last = t;
        }
        let scope = if lo > hi {
            format!("needs n>={lo}")
        } else if lo == hi {
            format!("n={lo}")
        } else {
            format!("n={lo}..{hi}")
        };
        self.lines.push(SuiteLine {
            name: name.to_string(),
            passed: last.passed,
            checked: last.checked,
            scope,
            cumulative,
            failure,
        });
    }

    fn single(&mut self, name: &str, scope: &str, check: impl FnOnce(&mut Tally)) {
        let mut t = Tally::default();
        check(&mut t);
        self.lines.push(SuiteLine {
            name: name.to_string(),
            passed: t.passed,
            checked: t.checked,
            scope: scope.to_string(),
            cumulative: t.checked,
            failure: t.failure,
        });
    }
}

/// Runs every suite for sizes `1..=n_max`; suites with a quadratic or cubic
/// number of cases stop at a smaller size. The caller checks the guard.
pub fn verify(n_max: usize) -> Report {
    let mut universes = vec![Vec::new()];
    for n in 1..=n_max {
        universes.push(enumerate_asms(n, u64::MAX).expect("guard checked by caller"));
    }
    let mut r = Runner {
        n_max,
        universes,
        lines: Vec::new(),
    };
    let all_sizes = 1..=n_max;

    r.sized("CornerSumRoundTrip", all_sizes.clone(), |r, n, t| {
        for a in r.all(n) {
            t.check(from_corner_sum(&a.corner_sum()).as_ref() == Ok(a), || {
                a.label()
            });
        }
    });
    r.sized("CornerSumInvariants", all_sizes.clone(), |r, n, t| {
        for a in r.all(n) {
            let c = a.corner_sum();
            t.check(
                CornerSumMatrix::new(&c.to_rows()).as_ref() == Ok(&c),
                || a.label(),
            );
        }
    });
    r.sized(
        "Involutions(transpose,dual)",
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let (tr, d) = (a.transpose(), a.dual());
                let ok = Asm::from_flat(n, tr.entries()).is_ok()
                    && Asm::from_flat(n, d.entries()).is_ok()
                    && tr.transpose() == *a
                    && d.dual() == *a
                    && tr.minus_count() == a.minus_count()
                    && d.minus_count() == a.minus_count();
                t.check(ok, || a.label());
            }
        },
    );
    r.sized("PermutationEmbedding", all_sizes.clone(), |_, n, t| {
        for w in Permutation::all(n) {
            let a = Asm::from_permutation(&w);
            t.check(Asm::validate(&a.to_rows()).is_ok(), || w.to_string());
        }
    });

    r.sized(
        "Theorem1(beta-equivalence)",
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let b = stats::beta_corner(a);
                let ok = stats::beta_weighted(a) == b
                    && stats::beta_row_weighted(a) == b
                    && poset::beta_poset_oracle(a) == b;
                t.check(ok, || a.label());
            }
        },
    );
    r.single(
        "BetaFormulas(random permutations)",
        &format!("{RANDOM_PERMUTATIONS} of size <= 50"),
        |t| {
            let mut rng = StdRng::seed_from_u64(50);
            for _ in 0..RANDOM_PERMUTATIONS {
                let n = rng.gen_range(1..=50);
                let mut images: Vec<usize> = (1..=n).collect();
                images.shuffle(&mut rng);
                let w = Permutation::new(images).expect("shuffled identity");
                let a = Asm::from_permutation(&w);
                let b = stats::beta_corner(&a);
                let ok = stats::beta_weighted(&a) == b
                    && stats::beta_row_weighted(&a) == b
                    && oracle::permutation_beta(&w) == b;
                t.check(ok, || w.to_string());
            }
        },
    );
    let top = triangle(n_max);
    r.sized(
        &format!("Duality(I+I*−N={top})"),
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let s = stat_record(a);
                t.check(s.inv + s.dual_inv - s.minus == triangle(n), || a.label());
            }
        },
    );
    r.sized("InversionBound(I<=beta)", all_sizes.clone(), |r, n, t| {
        for a in r.all(n) {
            t.check(stats::inversion_number(a) <= stats::beta(a), || a.label());
        }
    });
    r.sized(
        "DualInversions(I*=I(dual))",
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let ok = stats::dual_inversion_number(a) == stats::inversion_number(&a.dual());
                t.check(ok, || a.label());
            }
        },
    );
    r.sized(
        "LocalWeakSum(sum of H_pq = H)",
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let mut quarters = 0;
                for p in 1..=n {
                    for q in 1..=n {
                        quarters += local_weak_contribution(a, p, q)
                            .expect("in range")
                            .quarters();
                    }
                }
                t.check(quarters == 2 * stats::weak_inversion(a).halves(), || {
                    a.label()
                });
            }
        },
    );
    r.sized(
        "PermutationBeta(double loop)",
        all_sizes.clone(),
        |_, n, t| {
            for w in Permutation::all(n) {
                let a = Asm::from_permutation(&w);
                t.check(
                    stats::beta_weighted(&a) == oracle::permutation_beta(&w),
                    || w.to_string(),
                );
            }
        },
    );
    r.sized(
        "MaxH(two inversions per minus sign)",
        all_sizes.clone(),
        |r, n, t| {
            let w0 = Asm::from_permutation(&Permutation::longest(n));
            let top = 2 * triangle(n);
            for a in r.all(n) {
                let h2 = stat_record(a).weak2;
                let ok = (0..=top).contains(&h2) && ((h2 == top) == (*a == w0));
                t.check(ok, || format!("{} has 2H={h2}", a.label()));
            }
        },
    );

    r.sized("CoverCorrectness(local=generic)", 1..=4, |r, n, t| {
        let xs = r.all(n);
        let generic = oracle::generic_cover_pairs(xs);
        let index: HashMap<&Asm, usize> = xs.iter().enumerate().map(|(i, a)| (a, i)).collect();
        for (x, a) in xs.iter().enumerate() {
            let local: BTreeSet<usize> = covers_up(a).iter().map(|e| index[&e.upper]).collect();
            let expected: BTreeSet<usize> =
                generic.range((x, 0)..(x + 1, 0)).map(|&(_, y)| y).collect();
            t.check(local == expected, || a.label());
        }
    });
    r.sized(
        "Grading(cover raises beta by 1)",
        all_sizes.clone(),
        |r, n, t| {
            for a in r.all(n) {
                let b = stats::beta(a);
                for e in covers_up(a) {
                    t.check(stats::beta(&e.upper) == b + 1, || a.label());
                }
            }
        },
    );
    r.sized(
        "Reachability(cover closure from identity)",
        all_sizes.clone(),
        |r, n, t| {
            // Covers are revalidated, so the closure never leaves 𝒜_n.
            let closure = oracle::bfs_closure(n);
            for a in r.all(n) {
                t.check(closure.contains(a), || a.label());
            }
        },
    );
    r.sized("CoverDeltas(table rows)", all_sizes.clone(), |r, n, t| {
        for a in r.all(n) {
            let lo = stat_record(a);
            for e in covers_up(a) {
                let hi = stat_record(&e.upper);
                let d = e.deltas();
                let observed = (hi.inv - lo.inv, hi.minus - lo.minus, hi.weak2 - lo.weak2);
                let ok = observed == (d.d_inv, d.d_minus, d.d_weak2)
                    && (-1..=1).contains(&observed.0)
                    && (-2..=2).contains(&observed.2);
                t.check(ok, || {
                    format!("type {} above {}", e.cover_type.number(), a.label())
                });
            }
        }
    });
    r.sized("DualAntiAutomorphism", 1..=4, |r, n, t| {
        let xs = r.all(n);
        for a in xs {
            for b in xs {
                let fwd = compare(a, b).expect("same size") == PosetOrdering::Less;
                let back = compare(&b.dual(), &a.dual()).expect("same size") == PosetOrdering::Less;
                t.check(fwd == back, || format!("{} vs {}", a.label(), b.label()));
            }
        }
    });
    r.sized("TypeDuality", 1..=4, |r, n, t| {
        for a in r.all(n) {
            for e in covers_up(a) {
                let ok = match poset::try_cover(&e.upper.dual(), &e.lower.dual()) {
                    Ok(d) => {
                        let h = |x: &Asm| stats::weak_inversion(x).halves();
                        d.cover_type == e.cover_type.dual()
                            && h(&e.upper.dual()) - h(&e.lower.dual())
                                == -(h(&e.upper) - h(&e.lower))
                    }
                    Err(_) => false,
                };
                t.check(ok, || {
                    format!("type {} above {}", e.cover_type.number(), a.label())
                });
            }
        }
    });
    r.sized("TransposeIsomorphism", 1..=4, |r, n, t| {
        let xs = r.all(n);
        for a in xs {
            for b in xs {
                let ok = compare(a, b).ok() == compare(&a.transpose(), &b.transpose()).ok();
                t.check(ok, || format!("{} vs {}", a.label(), b.label()));
            }
        }
    });
    r.sized("LatticeLaws", all_sizes.clone(), |r, n, t| {
        let xs = r.all(n);
        if n <= 3 {
            for a in xs {
                for b in xs {
                    for c in xs {
                        t.check(lattice_laws(a, b, c), || triple(a, b, c));
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(n as u64);
            for _ in 0..RANDOM_TRIPLES {
                let a = &xs[rng.gen_range(0..xs.len())];
                let b = &xs[rng.gen_range(0..xs.len())];
                let c = &xs[rng.gen_range(0..xs.len())];
                t.check(lattice_laws(a, b, c), || triple(a, b, c));
            }
        }
    });
    r.sized(
        "Bigrassmannian=JoinIrreducible",
        all_sizes.clone(),
        |r, n, t| {
            let bigrass: BTreeSet<Asm> = enumerate_bigrassmannians(n)
                .iter()
                .map(Asm::from_permutation)
                .collect();
            for a in r.all(n) {
                t.check(poset::is_join_irreducible(a) == bigrass.contains(a), || {
                    a.label()
                });
            }
        },
    );

    r.sized("Count(product formula)", all_sizes.clone(), |r, n, t| {
        let len = r.all(n).len();
        t.check(count_formula(n).to_string() == len.to_string(), || {
            format!("enumerated {len}")
        });
    });
    r.sized("BetaPalindromic", all_sizes.clone(), |_, n, t| {
        let p = genfun_stat(n, Stat::Beta, u64::MAX).expect("guard checked");
        t.check(p.is_palindromic(), || p.to_text("λ"));
    });
    r.sized("HMonicPalindromic", all_sizes.clone(), |_, n, t| {
        let p = genfun_stat(n, Stat::Weak, u64::MAX).expect("guard checked");
        let ok = p.is_monic()
            && p.is_palindromic()
            && p.degree_half_units() == Some(2 * triangle(n) as u64);
        t.check(ok, || p.to_text("λ"));
    });
    r.sized("INotPalindromic", 3..=3, |_, n, t| {
        let p = genfun_stat(n, Stat::Inversions, u64::MAX).expect("guard checked");
        t.check(!p.is_palindromic(), || p.to_text("λ"));
    });
    r.sized("PermInversionProduct", all_sizes.clone(), |_, n, t| {
        let p = genfun_stat_over(n, Stat::Inversions, Universe::Perm, u64::MAX).expect("no guard");
        t.check(p == oracle::inversion_product(n), || p.to_text("λ"));
    });
    r.sized("EvalAtOne", all_sizes.clone(), |_, n, t| {
        let count = count_formula(n).to_string();
        for stat in [Stat::Inversions, Stat::Weak, Stat::Beta] {
            let p = genfun_stat(n, stat, u64::MAX).expect("guard checked");
            t.check(p.eval_at_one().to_string() == count, || format!("{stat:?}"));
        }
    });
    r.sized("SignedIdentity", all_sizes, |_, n, t| {
        let s = signed_identity_check(n, u64::MAX).expect("no guard");
        t.check(s.holds(), || {
            format!("{} vs {}", s.lhs.to_text("q"), s.rhs.to_text("q"))
        });
    });

    Report {
        n_max,
        lines: r.lines,
    }
}

fn triple(a: &Asm, b: &Asm, c: &Asm) -> String {
    format!("({}, {}, {})", a.label(), b.label(), c.label())
}

fn lattice_laws(a: &Asm, b: &Asm, c: &Asm) -> bool {
    let j = |x: &Asm, y: &Asm| poset::join(x, y).expect("same size");
    let m = |x: &Asm, y: &Asm| poset::meet(x, y).expect("same size");
    let n = a.size();
    let (ab_j, ab_m) = (j(a, b), m(a, b));
    Asm::from_flat(n, ab_j.entries()).is_ok()
        && Asm::from_flat(n, ab_m.entries()).is_ok()
        && ab_j == j(b, a)
        && ab_m == m(b, a)
        && j(a, a) == *a
        && m(a, a) == *a
        && j(&ab_j, c) == j(a, &j(b, c))
        && m(&ab_m, c) == m(a, &m(b, c))
        && j(a, &ab_m) == *a
        && m(a, &ab_j) == *a
        && m(a, &j(b, c)) == j(&ab_m, &m(a, c))
        && j(a, &m(b, c)) == m(&ab_j, &j(a, c))
}
