//! Alternating sign matrices, permutations and corner sum matrices.
//!
//! All public coordinates are 1-based: `(i, j)` is row `i`, column `j`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Line, Result};

/// An `n x n` alternating sign matrix.
///
/// Entries lie in `{-1, 0, 1}`, every row and column prefix sum is `0` or `1`
/// and every full row and column sums to `1`. Values are immutable once
/// constructed. The derived ordering is row-major lexicographic on entries
/// (for a fixed size), which is the canonical enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

/// Plain JSON form `{"n": int, "entries": [[int]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawMatrix {
    pub n: usize,
    pub entries: Vec<Vec<i64>>,
}

impl TryFrom<RawMatrix> for Asm {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        if raw.entries.len() != raw.n {
            return Err(Error::NotSquare);
        }
        Asm::validate(&raw.entries)
    }
}

impl From<Asm> for RawMatrix {
    fn from(a: Asm) -> Self {
        RawMatrix {
            n: a.n,
            entries: a.to_rows(),
        }
    }
}

impl Asm {
    /// Checks every defining condition and returns the matrix if all hold.
    ///
    /// Violations are reported deterministically: first any entry outside
    /// `{-1,0,1}` (row-major), then any full row sum and any full column sum
    /// that is not 1, then any row or column prefix sum outside `{0,1}`
    /// (row-major, row prefix before column prefix at each position).
    pub fn validate<R: AsRef<[i64]>>(rows: &[R]) -> Result<Asm> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.as_ref().len() != n) {
            return Err(Error::NotSquare);
        }
        let at = |i: usize, j: usize| rows[i].as_ref()[j];

        for i in 0..n {
            for j in 0..n {
                let value = at(i, j);
                if !(-1..=1).contains(&value) {
                    return Err(Error::EntryOutOfRange {
                        i: i + 1,
                        j: j + 1,
                        value,
                    });
                }
            }
        }
        for i in 0..n {
            let sum: i64 = (0..n).map(|j| at(i, j)).sum();
            if sum != 1 {
                return Err(Error::BadTotalSum {
                    line: Line::Row(i + 1),
                    sum,
                });
            }
        }
        for j in 0..n {
            let sum: i64 = (0..n).map(|i| at(i, j)).sum();
            if sum != 1 {
                return Err(Error::BadTotalSum {
                    line: Line::Column(j + 1),
                    sum,
                });
            }
        }

        let mut col_prefix = vec![0i64; n];
        for i in 0..n {
            let mut row_prefix = 0i64;
            for j in 0..n {
                row_prefix += at(i, j);
                col_prefix[j] += at(i, j);
                if !(0..=1).contains(&row_prefix) {
                    return Err(Error::BadPartialSum {
                        i: i + 1,
                        j: j + 1,
                        line: Line::Row(i + 1),
                        sum: row_prefix,
                    });
                }
                if !(0..=1).contains(&col_prefix[j]) {
                    return Err(Error::BadPartialSum {
                        i: i + 1,
                        j: j + 1,
                        line: Line::Column(j + 1),
                        sum: col_prefix[j],
                    });
                }
            }
        }

        Ok(Asm {
            n,
            entries: rows
                .iter()
                .flat_map(|r| r.as_ref().iter().map(|&x| x as i8))
                .collect(),
        })
    }

    /// Builds a matrix from row-major entries the caller has already checked.
    pub(crate) fn from_entries_unchecked(n: usize, entries: Vec<i8>) -> Asm {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    /// Validates row-major `i8` entries.
    pub fn from_flat(n: usize, entries: &[i8]) -> Result<Asm> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::NotSquare);
        }
        let rows: Vec<Vec<i64>> = entries
            .chunks(n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect();
        Asm::validate(&rows)
    }

    /// The `n x n` unit matrix. Panics if `n == 0`.
    pub fn identity(n: usize) -> Asm {
        assert!(n >= 1, "matrix size must be positive");
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Asm { n, entries }
    }

    /// The permutation matrix with a 1 at `(i, w(i))` for every row `i`.
    pub fn from_permutation(w: &Permutation) -> Asm {
        let n = w.len();
        let mut entries = vec![0; n * n];
        for (i, &image) in w.images().iter().enumerate() {
            entries[i * n + image - 1] = 1;
        }
        Asm { n, entries }
    }

    /// Inverse of [`Asm::from_permutation`]; fails when any entry is `-1`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        let minus = self.minus_count();
        if minus > 0 {
            return Err(Error::NotAPermutation { minus });
        }
        let images = self
            .entries
            .chunks(self.n)
            .map(|row| row.iter().position(|&x| x == 1).unwrap() + 1)
            .collect();
        Ok(Permutation { images })
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry `a_{ij}` with 1-based indices. Panics when out of range.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "index ({i},{j}) out of range for size {}",
            self.n
        );
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// Nonzero entries as `(i, j, a_ij)`, row-major, 1-based.
    pub fn nonzeros(&self) -> Vec<(usize, usize, i64)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(idx, &x)| (idx / self.n + 1, idx % self.n + 1, x as i64))
            .collect()
    }

    /// Number of entries equal to `-1`.
    pub fn minus_count(&self) -> usize {
        self.entries.iter().filter(|&&x| x == -1).count()
    }

    pub fn transpose(&self) -> Asm {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Asm { n, entries }
    }

    /// The dual `w0 A`: row `i` of the result is row `n + 1 - i` of `self`.
    pub fn dual(&self) -> Asm {
        let entries = self
            .entries
            .chunks(self.n)
            .rev()
            .flatten()
            .copied()
            .collect();
        Asm { n: self.n, entries }
    }

    pub fn corner_sum(&self) -> CornerSumMatrix {
        let n = self.n;
        let mut sums = vec![0i32; n * n];
        for i in 0..n {
            let mut row = 0i32;
            for j in 0..n {
                row += self.entries[i * n + j] as i32;
                sums[i * n + j] = row + if i > 0 { sums[(i - 1) * n + j] } else { 0 };
            }
        }
        CornerSumMatrix { n, sums }
    }

    /// Rows joined by `;`, entries by `,`, e.g. `0,1,0;1,-1,1;0,1,0`.
    pub fn flat_string(&self) -> String {
        self.entries
            .chunks(self.n)
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// One-line permutation notation for permutation matrices, otherwise
    /// [`Asm::flat_string`].
    pub fn label(&self) -> String {
        match self.to_permutation() {
            Ok(w) => w.to_string(),
            Err(_) => self.flat_string(),
        }
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm[{}]", self.flat_string())
    }
}

/// Writes the matrix text format: `n <size>` then one line per row.
impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for row in self.entries.chunks(self.n) {
            let line = row
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation { n, images });
            }
            seen[x] = true;
        }
        if n == 0 {
            return Err(Error::InvalidPermutation { n, images });
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The reversal `w0(i) = n - i + 1`.
    pub fn longest(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &w) in self.images.iter().enumerate() {
            images[w - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Positions `i` (1-based) with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.images
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p[0] > p[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Classical inversion count `#{i < j : w(i) > w(j)}`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        use itertools::Itertools;
        (1..=n).permutations(n).map(|images| Permutation { images })
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Digits run together when `n <= 9` (`3412`), comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() <= 9 { "" } else { "," };
        let s = self
            .images
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(sep);
        f.write_str(&s)
    }
}

/// Upper-left rectangle sums `Ã(i,j) = Σ_{p≤i, q≤j} a_pq`.
///
/// Rows and columns are weakly increasing with steps in `{0,1}` (starting
/// from an implicit zero border), and `Ã(i,n) = i`, `Ã(n,j) = j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CornerSumMatrix {
    n: usize,
    sums: Vec<i32>,
}

impl CornerSumMatrix {
    /// Checks the corner sum invariants.
    pub fn new<R: AsRef<[i64]>>(rows: &[R]) -> Result<CornerSumMatrix> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.as_ref().len() != n) {
            return Err(Error::NotSquare);
        }
        let at = |i: usize, j: usize| -> i64 {
            if i == 0 || j == 0 {
                0
            } else {
                rows[i - 1].as_ref()[j - 1]
            }
        };
        for i in 1..=n {
            for j in 1..=n {
                let here = at(i, j);
                if !(0..=1).contains(&(here - at(i - 1, j))) {
                    return Err(Error::InvalidCornerSums(format!(
                        "column step into ({i},{j}) is {}",
                        here - at(i - 1, j)
                    )));
                }
                if !(0..=1).contains(&(here - at(i, j - 1))) {
                    return Err(Error::InvalidCornerSums(format!(
                        "row step into ({i},{j}) is {}",
                        here - at(i, j - 1)
                    )));
                }
            }
        }
        for k in 1..=n {
            if at(k, n) != k as i64 {
                return Err(Error::InvalidCornerSums(format!(
                    "entry ({k},{n}) must be {k}"
                )));
            }
            if at(n, k) != k as i64 {
                return Err(Error::InvalidCornerSums(format!(
                    "entry ({n},{k}) must be {k}"
                )));
            }
        }
        Ok(CornerSumMatrix {
            n,
            sums: rows
                .iter()
                .flat_map(|r| r.as_ref().iter().map(|&x| x as i32))
                .collect(),
        })
    }

    pub(crate) fn from_sums_unchecked(n: usize, sums: Vec<i32>) -> CornerSumMatrix {
        CornerSumMatrix { n, sums }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `Ã(i,j)`; zero on the border `i == 0` or `j == 0`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i32 {
        if i == 0 || j == 0 {
            0
        } else {
            self.sums[(i - 1) * self.n + (j - 1)]
        }
    }

    pub fn sums(&self) -> &[i32] {
        &self.sums
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.sums
            .chunks(self.n)
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }

    /// Recovers the matrix via second differences.
    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.n;
        let rows: Vec<Vec<i64>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        (self.get(i, j) - self.get(i - 1, j) - self.get(i, j - 1)
                            + self.get(i - 1, j - 1)) as i64
                    })
                    .collect()
            })
            .collect();
        Asm::validate(&rows).map_err(|e| Error::InvalidCornerSums(e.to_string()))
    }
}

/// Inverse of [`Asm::corner_sum`].
pub fn from_corner_sum(c: &CornerSumMatrix) -> Result<Asm> {
    c.to_asm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_a() -> Asm {
        Asm::validate(&[[0, 0, 1, 0], [0, 1, -1, 1], [1, -1, 1, 0], [0, 1, 0, 0]]).unwrap()
    }

    fn perm(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(example_a().size(), 4);
        assert_eq!(
            Asm::validate(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap(),
            Asm::identity(3)
        );
        assert_eq!(
            Asm::validate(&[[1, -1], [0, 1]]),
            Err(Error::BadTotalSum {
                line: Line::Row(1),
                sum: 0
            })
        );
    }

    #[test]
    fn validate_error_paths() {
        let empty: [[i64; 0]; 0] = [];
        assert_eq!(Asm::validate(&empty), Err(Error::NotSquare));
        assert_eq!(Asm::validate(&[vec![1, 0], vec![0]]), Err(Error::NotSquare));
        assert_eq!(
            Asm::validate(&[[2, 0], [0, 1]]),
            Err(Error::EntryOutOfRange {
                i: 1,
                j: 1,
                value: 2
            })
        );
        assert!(Asm::validate(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).is_ok());
        assert_eq!(
            Asm::validate(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap(),
            Asm::from_permutation(&perm("213"))
        );
        let err = Asm::validate(&[[0, 1, 0, 0], [0, -1, 1, 1], [1, 1, -1, 0], [0, 0, 1, 0]]);
        assert_eq!(
            err,
            Err(Error::BadPartialSum {
                i: 2,
                j: 2,
                line: Line::Row(2),
                sum: -1
            })
        );
    }

    #[test]
    fn identity_and_permutations() {
        assert_eq!(Asm::identity(1).entries(), &[1]);
        assert_eq!(
            Asm::from_permutation(&perm("3412")).to_rows(),
            vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0]
            ]
        );
        assert_eq!(
            Asm::from_permutation(&Permutation::identity(4)),
            Asm::identity(4)
        );
        assert_eq!(
            Asm::from_permutation(&Permutation::longest(3)).to_rows(),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
        );
    }

    #[test]
    fn to_permutation() {
        let b = Asm::from_permutation(&perm("3412"));
        assert_eq!(b.to_permutation().unwrap().to_string(), "3412");
        assert_eq!(
            Asm::identity(5).to_permutation().unwrap().to_string(),
            "12345"
        );
        assert_eq!(
            example_a().to_permutation(),
            Err(Error::NotAPermutation { minus: 2 })
        );
    }

    #[test]
    fn corner_sums() {
        assert_eq!(
            Asm::identity(3).corner_sum().to_rows(),
            vec![vec![1, 1, 1], vec![1, 2, 2], vec![1, 2, 3]]
        );
        assert_eq!(
            Asm::from_permutation(&perm("231")).corner_sum().to_rows(),
            vec![vec![0, 1, 1], vec![0, 1, 2], vec![1, 2, 3]]
        );
        assert_eq!(
            Asm::from_permutation(&perm("213")).corner_sum().to_rows(),
            vec![vec![0, 1, 1], vec![1, 2, 2], vec![1, 2, 3]]
        );
        let c = example_a().corner_sum();
        assert_eq!(
            c.to_rows(),
            vec![
                vec![0, 0, 1, 1],
                vec![0, 1, 1, 2],
                vec![1, 1, 2, 3],
                vec![1, 2, 3, 4]
            ]
        );
        assert_eq!(from_corner_sum(&c).unwrap(), example_a());
    }

    #[test]
    fn corner_sum_inverse() {
        let c = CornerSumMatrix::new(&[[1, 1, 1], [1, 2, 2], [1, 2, 3]]).unwrap();
        assert_eq!(from_corner_sum(&c).unwrap(), Asm::identity(3));
        assert!(matches!(
            CornerSumMatrix::new(&[[1, 1], [1, 1]]),
            Err(Error::InvalidCornerSums(_))
        ));
        assert!(matches!(
            CornerSumMatrix::new(&[[2, 2], [1, 2]]),
            Err(Error::InvalidCornerSums(_))
        ));
    }

    #[test]
    fn transpose_and_dual() {
        assert_eq!(Asm::identity(4).transpose(), Asm::identity(4));
        let b = Asm::from_permutation(&perm("3412"));
        assert_eq!(b.transpose(), b);
        let a = example_a();
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(
            Asm::identity(4).dual(),
            Asm::from_permutation(&Permutation::longest(4))
        );
        assert_eq!(b.dual(), Asm::from_permutation(&perm("2143")));
        assert_eq!(a.dual().minus_count(), 2);
        assert_eq!(a.dual().to_rows()[0], vec![0, 1, 0, 0]);
        assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn minus_counts() {
        assert_eq!(example_a().minus_count(), 2);
        assert_eq!(Asm::from_permutation(&perm("3412")).minus_count(), 0);
        let mid = Asm::validate(&[[0, 1, 0], [1, -1, 1], [0, 1, 0]]).unwrap();
        assert_eq!(mid.minus_count(), 1);
    }

    #[test]
    fn permutation_basics() {
        let w = perm("3412");
        assert_eq!(w.inverse(), w);
        assert_eq!(perm("231").inverse(), perm("312"));
        assert_eq!(w.descents(), vec![2]);
        assert_eq!(w.inversions(), 4);
        assert_eq!(Permutation::all(3).count(), 6);
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }

    #[test]
    fn json_round_trip() {
        let a = example_a();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"{"n":4,"entries":[[0,0,1,0],[0,1,-1,1],[1,-1,1,0],[0,1,0,0]]}"#
        );
        let back: Asm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Asm>(r#"{"n":2,"entries":[[1,-1],[0,1]]}"#).is_err());
    }
}
