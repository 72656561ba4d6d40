//! The lattice order on alternating sign matrices.
//!
//! `A ≤ B` iff `Ã(i,j) ≥ B̃(i,j)` everywhere, so the unit matrix is the
//! bottom and the reversal permutation the top. Covers are single 2x2
//! exchanges `[[-1,1],[1,-1]]` at consecutive rows and columns, classified
//! into sixteen types by the lower block.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::asm::{Asm, CornerSumMatrix, Permutation};
use crate::error::{Error, Result};
use crate::stats;

/// Added to the lower block of a cover to obtain the upper block.
pub const EXCHANGE: [[i8; 2]; 2] = [[-1, 1], [1, -1]];

pub type Block = [[i8; 2]; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetOrdering {
    Less,
    Greater,
    Equal,
    Incomparable,
}

fn check_sizes(a: &Asm, b: &Asm) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(())
}

/// Compares two matrices of the same size through their corner sums.
pub fn compare(a: &Asm, b: &Asm) -> Result<PosetOrdering> {
    check_sizes(a, b)?;
    Ok(compare_corner_sums(&a.corner_sum(), &b.corner_sum()))
}

/// Corner-sum comparison; stops as soon as both strict directions are seen.
pub fn compare_corner_sums(a: &CornerSumMatrix, b: &CornerSumMatrix) -> PosetOrdering {
    let mut a_above = false;
    let mut b_above = false;
    for (x, y) in a.sums().iter().zip(b.sums()) {
        match x.cmp(y) {
            std::cmp::Ordering::Greater => a_above = true,
            std::cmp::Ordering::Less => b_above = true,
            std::cmp::Ordering::Equal => {}
        }
        if a_above && b_above {
            return PosetOrdering::Incomparable;
        }
    }
    match (a_above, b_above) {
        (false, false) => PosetOrdering::Equal,
        (true, false) => PosetOrdering::Less,
        (false, true) => PosetOrdering::Greater,
        (true, true) => unreachable!(),
    }
}

/// `A ≤ B`.
pub fn le(a: &Asm, b: &Asm) -> Result<bool> {
    Ok(matches!(
        compare(a, b)?,
        PosetOrdering::Less | PosetOrdering::Equal
    ))
}

/// One row of the cover classification table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverTypeRow {
    pub cover_type: u8,
    /// The type of the dual cover `(B*, A*)`.
    pub dual: u8,
    pub upper: Block,
    pub lower: Block,
    /// `I(B) - I(A)`.
    pub d_inv: i64,
    /// `N(B) - N(A)`, i.e. twice the tabulated `N(A,B)/2`.
    pub d_minus: i64,
    /// `2(H(B) - H(A))`.
    pub d_weak2: i64,
}

macro_rules! row {
    ($t:expr, $d:expr, $up:expr, $low:expr, $di:expr, $dn:expr, $dh:expr) => {
        CoverTypeRow {
            cover_type: $t,
            dual: $d,
            upper: $up,
            lower: $low,
            d_inv: $di,
            d_minus: $dn,
            d_weak2: $dh,
        }
    };
}

/// The sixteen cover types. Delta columns are `ΔI`, `ΔN` and `2ΔH`.
#[rustfmt::skip]
pub const COVER_TABLE: [CoverTypeRow; 16] = [
    row!(1,  1,  [[0, 1], [1, 0]],   [[1, 0], [0, 1]],    1,  0,  2),
    row!(2,  5,  [[0, 0], [1, 0]],   [[1, -1], [0, 1]],   0, -1,  1),
    row!(3,  9,  [[0, 1], [0, 0]],   [[1, 0], [-1, 1]],   0, -1,  1),
    row!(4,  13, [[0, 0], [0, 0]],   [[1, -1], [-1, 1]], -1, -2,  0),
    row!(5,  2,  [[0, 1], [1, -1]],  [[1, 0], [0, 0]],    1,  1,  1),
    row!(6,  6,  [[0, 0], [1, -1]],  [[1, -1], [0, 0]],   0,  0,  0),
    row!(7,  10, [[0, 1], [0, -1]],  [[1, 0], [-1, 0]],   0,  0,  0),
    row!(8,  14, [[0, 0], [0, -1]],  [[1, -1], [-1, 0]], -1, -1, -1),
    row!(9,  3,  [[-1, 1], [1, 0]],  [[0, 0], [0, 1]],    1,  1,  1),
    row!(10, 7,  [[-1, 0], [1, 0]],  [[0, -1], [0, 1]],   0,  0,  0),
    row!(11, 11, [[-1, 1], [0, 0]],  [[0, 0], [-1, 1]],   0,  0,  0),
    row!(12, 15, [[-1, 0], [0, 0]],  [[0, -1], [-1, 1]], -1, -1, -1),
    row!(13, 4,  [[-1, 1], [1, -1]], [[0, 0], [0, 0]],    1,  2,  0),
    row!(14, 8,  [[-1, 0], [1, -1]], [[0, -1], [0, 0]],   0,  1, -1),
    row!(15, 12, [[-1, 1], [0, -1]], [[0, 0], [-1, 0]],   0,  1, -1),
    row!(16, 16, [[-1, 0], [0, -1]], [[0, -1], [-1, 0]], -1,  0, -2),
];

/// A cover type in `1..=16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverType(u8);

impl CoverType {
    pub fn new(t: u8) -> Option<CoverType> {
        (1..=16).contains(&t).then_some(CoverType(t))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn row(self) -> &'static CoverTypeRow {
        &COVER_TABLE[self.0 as usize - 1]
    }

    pub fn dual(self) -> CoverType {
        CoverType(self.row().dual)
    }

    pub fn deltas(self) -> CoverDeltas {
        let row = self.row();
        CoverDeltas {
            d_inv: row.d_inv,
            d_minus: row.d_minus,
            d_weak2: row.d_weak2,
        }
    }
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Changes of `I`, `N` and `2H` along a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverDeltas {
    pub d_inv: i64,
    pub d_minus: i64,
    pub d_weak2: i64,
}

/// Classifies an exchange by its lower block `a` and upper block `b`.
pub fn classify_cover_type(a: Block, b: Block) -> Result<CoverType> {
    for r in 0..2 {
        for c in 0..2 {
            if !(-1..=1).contains(&a[r][c])
                || !(-1..=1).contains(&b[r][c])
                || b[r][c] - a[r][c] != EXCHANGE[r][c]
            {
                return Err(Error::NotAnExchangeBlock);
            }
        }
    }
    COVER_TABLE
        .iter()
        .find(|row| row.lower == a)
        .map(|row| CoverType(row.cover_type))
        .ok_or(Error::NotAnExchangeBlock)
}

/// A covering pair `lower ⋖ upper` with its exchange position.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoverEdge {
    pub lower: Asm,
    pub upper: Asm,
    /// 1-based row of the exchange block's top-left corner.
    pub r: usize,
    /// 1-based column of the exchange block's top-left corner.
    pub s: usize,
    pub cover_type: CoverType,
}

impl CoverEdge {
    pub fn deltas(&self) -> CoverDeltas {
        self.cover_type.deltas()
    }

    pub fn lower_block(&self) -> Block {
        block_at(&self.lower, self.r, self.s)
    }

    pub fn upper_block(&self) -> Block {
        block_at(&self.upper, self.r, self.s)
    }
}

/// `{"r","s","type","dI","dN2x","dH2x"}`.
impl Serialize for CoverEdge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.deltas();
        let mut st = serializer.serialize_struct("CoverEdge", 6)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("type", &self.cover_type.number())?;
        st.serialize_field("dI", &d.d_inv)?;
        st.serialize_field("dN2x", &d.d_minus)?;
        st.serialize_field("dH2x", &d.d_weak2)?;
        st.end()
    }
}

fn block_at(a: &Asm, r: usize, s: usize) -> Block {
    [
        [a.get(r, s), a.get(r, s + 1)],
        [a.get(r + 1, s), a.get(r + 1, s + 1)],
    ]
}

/// Returns the cover edge when `b` covers `a`, i.e. they differ exactly by
/// the exchange pattern on one 2x2 block of consecutive rows and columns.
pub fn try_cover(a: &Asm, b: &Asm) -> Result<CoverEdge> {
    check_sizes(a, b)?;
    let n = a.size();
    let diffs: Vec<(usize, i8)> = a
        .entries()
        .iter()
        .zip(b.entries())
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(idx, (x, y))| (idx, y - x))
        .collect();
    if diffs.len() != 4 {
        return Err(Error::NotACover);
    }
    let (first, _) = diffs[0];
    let (r, s) = (first / n + 1, first % n + 1);
    if r >= n || s >= n {
        return Err(Error::NotACover);
    }
    let expected = [
        ((r - 1) * n + (s - 1), EXCHANGE[0][0]),
        ((r - 1) * n + s, EXCHANGE[0][1]),
        (r * n + (s - 1), EXCHANGE[1][0]),
        (r * n + s, EXCHANGE[1][1]),
    ];
    if diffs != expected {
        return Err(Error::NotACover);
    }
    let cover_type = classify_cover_type(block_at(a, r, s), block_at(b, r, s))?;
    Ok(CoverEdge {
        lower: a.clone(),
        upper: b.clone(),
        r,
        s,
        cover_type,
    })
}

/// Applies `sign · EXCHANGE` at `(r, s)` and keeps the result if it is an ASM.
fn exchanged(a: &Asm, r: usize, s: usize, sign: i8) -> Option<Asm> {
    let n = a.size();
    let mut entries = a.entries().to_vec();
    for (dr, dc) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let idx = (r - 1 + dr) * n + (s - 1 + dc);
        let v = entries[idx] + sign * EXCHANGE[dr][dc];
        if !(-1..=1).contains(&v) {
            return None;
        }
        entries[idx] = v;
    }
    Asm::from_flat(n, &entries).ok()
}

/// Every `B` with `A ⋖ B`, sorted by exchange position.
pub fn covers_up(a: &Asm) -> Vec<CoverEdge> {
    let n = a.size();
    let mut out = Vec::new();
    for r in 1..n {
        for s in 1..n {
            if let Some(b) = exchanged(a, r, s, 1) {
                let cover_type = classify_cover_type(block_at(a, r, s), block_at(&b, r, s))
                    .expect("exchange of two ASMs is always classifiable");
                out.push(CoverEdge {
                    lower: a.clone(),
                    upper: b,
                    r,
                    s,
                    cover_type,
                });
            }
        }
    }
    out
}

/// Every `A` with `A ⋖ B`, sorted by exchange position.
pub fn covers_down(b: &Asm) -> Vec<CoverEdge> {
    let n = b.size();
    let mut out = Vec::new();
    for r in 1..n {
        for s in 1..n {
            if let Some(a) = exchanged(b, r, s, -1) {
                let cover_type = classify_cover_type(block_at(&a, r, s), block_at(b, r, s))
                    .expect("exchange of two ASMs is always classifiable");
                out.push(CoverEdge {
                    lower: a,
                    upper: b.clone(),
                    r,
                    s,
                    cover_type,
                });
            }
        }
    }
    out
}

fn combine(a: &Asm, b: &Asm, pick: fn(i32, i32) -> i32) -> Result<Asm> {
    check_sizes(a, b)?;
    let (ca, cb) = (a.corner_sum(), b.corner_sum());
    let sums = ca
        .sums()
        .iter()
        .zip(cb.sums())
        .map(|(&x, &y)| pick(x, y))
        .collect();
    let c = CornerSumMatrix::from_sums_unchecked(a.size(), sums);
    Ok(c.to_asm()
        .expect("entrywise min/max of corner sums is a corner sum matrix"))
}

/// Least upper bound: entrywise minimum of corner sums.
pub fn join(a: &Asm, b: &Asm) -> Result<Asm> {
    combine(a, b, i32::min)
}

/// Greatest lower bound: entrywise maximum of corner sums.
pub fn meet(a: &Asm, b: &Asm) -> Result<Asm> {
    combine(a, b, i32::max)
}

/// Exactly one descent and exactly one inverse descent.
pub fn is_bigrassmannian(w: &Permutation) -> bool {
    w.descents().len() == 1 && w.inverse().descents().len() == 1
}

/// Bigrassmannian permutations of `S_n` in lexicographic order.
pub fn enumerate_bigrassmannians(n: usize) -> Vec<Permutation> {
    Permutation::all(n).filter(is_bigrassmannian).collect()
}

/// `β` straight from its definition: the number of bigrassmannian
/// permutations weakly below `b`.
pub fn beta_poset_oracle(b: &Asm) -> i64 {
    let cb = b.corner_sum();
    enumerate_bigrassmannians(b.size())
        .iter()
        .filter(|w| {
            matches!(
                compare_corner_sums(&Asm::from_permutation(w).corner_sum(), &cb),
                PosetOrdering::Less | PosetOrdering::Equal
            )
        })
        .count() as i64
}

/// Covers exactly one element. The local cover criterion ranges over all of
/// `𝒜_n`, so no explicit universe is needed.
pub fn is_join_irreducible(a: &Asm) -> bool {
    covers_down(a).len() == 1
}

/// Length of a saturated chain from the unit matrix up to `a`, found by
/// repeatedly stepping down a cover.
pub fn rank_by_chain(a: &Asm) -> i64 {
    let mut current = a.clone();
    let mut steps = 0;
    while let Some(edge) = covers_down(&current).into_iter().next() {
        current = edge.lower;
        steps += 1;
    }
    debug_assert_eq!(current, Asm::identity(a.size()));
    steps
}

/// Checks that an edge is consistent with its classification.
pub fn edge_is_consistent(edge: &CoverEdge) -> bool {
    let lower = stats::stat_record(&edge.lower);
    let upper = stats::stat_record(&edge.upper);
    let d = edge.deltas();
    upper.beta - lower.beta == 1
        && upper.inv - lower.inv == d.d_inv
        && upper.minus - lower.minus == d.d_minus
        && upper.weak2 - lower.weak2 == d.d_weak2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_a() -> Asm {
        Asm::validate(&[[0, 0, 1, 0], [0, 1, -1, 1], [1, -1, 1, 0], [0, 1, 0, 0]]).unwrap()
    }

    fn middle() -> Asm {
        Asm::validate(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap()
    }

    fn w(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
    }

    fn perm(s: &str) -> Asm {
        Asm::from_permutation(&w(s))
    }

    #[test]
    fn table_rows_are_exchanges() {
        for (idx, row) in COVER_TABLE.iter().enumerate() {
            assert_eq!(row.cover_type as usize, idx + 1);
            for r in 0..2 {
                for c in 0..2 {
                    assert_eq!(row.upper[r][c] - row.lower[r][c], EXCHANGE[r][c]);
                }
            }
            let minus = |b: &Block| b.iter().flatten().filter(|&&x| x == -1).count() as i64;
            assert_eq!(row.d_minus, minus(&row.upper) - minus(&row.lower));
            assert_eq!(row.d_weak2, 2 * row.d_inv - row.d_minus);
            assert_eq!(COVER_TABLE[row.dual as usize - 1].dual, row.cover_type);
        }
    }

    #[test]
    fn dual_type_flips_blocks() {
        // Reversing rows maps the upper block of type m onto the lower block
        // of type m*.
        for row in &COVER_TABLE {
            let dual = &COVER_TABLE[row.dual as usize - 1];
            assert_eq!(dual.lower, [row.upper[1], row.upper[0]]);
            assert_eq!(dual.upper, [row.lower[1], row.lower[0]]);
            assert_eq!(dual.d_weak2, row.d_weak2);
        }
    }

    #[test]
    fn compare_examples() {
        for a in [example_a(), middle(), perm("4321")] {
            let id = Asm::identity(a.size());
            assert!(matches!(
                compare(&id, &a).unwrap(),
                PosetOrdering::Less | PosetOrdering::Equal
            ));
        }
        assert_eq!(
            compare(&Asm::identity(3), &Asm::identity(3)).unwrap(),
            PosetOrdering::Equal
        );
        assert_eq!(
            compare(&example_a(), &perm("3412")).unwrap(),
            PosetOrdering::Less
        );
        assert_eq!(
            compare(&perm("3412"), &example_a()).unwrap(),
            PosetOrdering::Greater
        );
        assert_eq!(
            compare(&perm("1342"), &perm("1423")).unwrap(),
            PosetOrdering::Incomparable
        );
        assert_eq!(
            compare(&Asm::identity(2), &Asm::identity(3)),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn try_cover_examples() {
        let e = try_cover(&example_a(), &perm("3412")).unwrap();
        assert_eq!((e.r, e.s, e.cover_type.number()), (2, 2, 4));
        let e = try_cover(&Asm::identity(2), &perm("21")).unwrap();
        assert_eq!((e.r, e.s, e.cover_type.number()), (1, 1, 1));
        assert_eq!(
            try_cover(&Asm::identity(3), &perm("321")),
            Err(Error::NotACover)
        );
        assert_eq!(
            try_cover(&perm("3412"), &example_a()),
            Err(Error::NotACover)
        );
        assert_eq!(
            try_cover(&Asm::identity(3), &Asm::identity(3)),
            Err(Error::NotACover)
        );
        assert!(matches!(
            try_cover(&Asm::identity(3), &Asm::identity(4)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn covers_up_examples() {
        let ups: Vec<Asm> = covers_up(&Asm::identity(3))
            .into_iter()
            .map(|e| e.upper)
            .collect();
        assert_eq!(ups, vec![perm("213"), perm("132")]);
        assert!(covers_up(&perm("4321")).is_empty());
        let ups: Vec<Asm> = covers_up(&middle()).into_iter().map(|e| e.upper).collect();
        assert_eq!(ups.len(), 2);
        assert!(ups.contains(&perm("231")) && ups.contains(&perm("312")));
    }

    #[test]
    fn covers_down_examples() {
        assert!(covers_down(&Asm::identity(4)).is_empty());
        let downs: Vec<Asm> = covers_down(&middle())
            .into_iter()
            .map(|e| e.lower)
            .collect();
        assert_eq!(downs.len(), 2);
        assert!(downs.contains(&perm("132")) && downs.contains(&perm("213")));
        assert!(covers_down(&perm("3412"))
            .iter()
            .any(|e| e.lower == example_a() && e.cover_type.number() == 4));
    }

    #[test]
    fn classify_examples() {
        let t = classify_cover_type([[1, 0], [0, 1]], [[0, 1], [1, 0]]).unwrap();
        assert_eq!(t.number(), 1);
        assert_eq!((t.deltas().d_inv, t.deltas().d_weak2), (1, 2));
        let t = classify_cover_type([[1, -1], [-1, 1]], [[0, 0], [0, 0]]).unwrap();
        assert_eq!(t.number(), 4);
        assert_eq!((t.deltas().d_inv, t.deltas().d_weak2), (-1, 0));
        let t = classify_cover_type([[0, -1], [-1, 0]], [[-1, 0], [0, -1]]).unwrap();
        assert_eq!(t.number(), 16);
        assert_eq!((t.deltas().d_inv, t.deltas().d_weak2), (-1, -2));
        assert_eq!(
            classify_cover_type([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
            Err(Error::NotAnExchangeBlock)
        );
        assert_eq!(
            classify_cover_type([[-1, 0], [0, 1]], [[-2, 1], [1, 0]]),
            Err(Error::NotAnExchangeBlock)
        );
    }

    #[test]
    fn join_meet_examples() {
        assert_eq!(join(&perm("132"), &perm("213")).unwrap(), middle());
        assert_eq!(meet(&perm("231"), &perm("312")).unwrap(), middle());
        let a = example_a();
        assert_eq!(meet(&a, &a).unwrap(), a);
        assert_eq!(join(&Asm::identity(4), &a).unwrap(), a);
        assert!(join(&Asm::identity(2), &a).is_err());
    }

    #[test]
    fn bigrassmannians() {
        assert!(is_bigrassmannian(&w("3412")));
        assert!(!is_bigrassmannian(&w("1234")));
        assert!(!is_bigrassmannian(&w("321")));
        assert_eq!(enumerate_bigrassmannians(3).len(), 4);
        assert_eq!(enumerate_bigrassmannians(4).len(), 10);
        assert!(enumerate_bigrassmannians(1).is_empty());
    }

    #[test]
    fn beta_oracle_examples() {
        let a = example_a();
        let below: Vec<String> = enumerate_bigrassmannians(4)
            .into_iter()
            .filter(|v| le(&Asm::from_permutation(v), &a).unwrap())
            .map(|v| v.to_string())
            .collect();
        let mut expected = vec!["1342", "1423", "3124", "2314", "1243", "1324", "2134"];
        expected.sort();
        assert_eq!(below, expected);
        assert_eq!(beta_poset_oracle(&a), 7);
        assert_eq!(beta_poset_oracle(&Asm::identity(4)), 0);
        assert_eq!(beta_poset_oracle(&perm("3412")), 8);
    }

    #[test]
    fn join_irreducible_examples() {
        assert!(!is_join_irreducible(&middle()));
        assert!(is_join_irreducible(&perm("132")));
        assert!(!is_join_irreducible(&Asm::identity(3)));
    }

    #[test]
    fn rank_by_chain_examples() {
        assert_eq!(rank_by_chain(&Asm::identity(4)), 0);
        assert_eq!(rank_by_chain(&example_a()), 7);
        assert_eq!(rank_by_chain(&perm("4321")), 10);
        assert_eq!(stats::beta_corner(&perm("4321")), 10);
    }

    #[test]
    fn cover_edge_json() {
        let e = try_cover(&example_a(), &perm("3412")).unwrap();
        assert!(edge_is_consistent(&e));
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"r":2,"s":2,"type":4,"dI":-1,"dN2x":-2,"dH2x":0}"#
        );
    }
}
