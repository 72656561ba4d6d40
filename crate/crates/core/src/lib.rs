//! Alternating sign matrices and their lattice.
//!
//! The crate covers:
//!
//! - [`Asm`], [`Permutation`] and [`CornerSumMatrix`], with validation,
//!   transpose, dual (row reversal) and the permutation embedding;
//! - inversion statistics in [`stats`]: `I`, `I*`, `N`, the weak inversion
//!   number `H` and the rank `β` by three independent formulas;
//! - the lattice order in [`poset`]: comparison, covers with their sixteen
//!   exchange types, join and meet, bigrassmannian permutations;
//! - exhaustive enumeration of `𝒜_n` and generating polynomials in
//!   [`enumerate`], with exact big-integer coefficients;
//! - the cover graph with DOT/JSON export in [`hasse`].
//!
//! ```
//! use asmlat_core::{Asm, stats, poset};
//!
//! let a = Asm::validate(&[
//!     [0, 0, 1, 0],
//!     [0, 1, -1, 1],
//!     [1, -1, 1, 0],
//!     [0, 1, 0, 0],
//! ]).unwrap();
//! assert_eq!(stats::inversion_number(&a), 5);
//! assert_eq!(stats::beta(&a), 7);
//! assert_eq!(poset::rank_by_chain(&a), 7);
//! ```

pub mod asm;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod hasse;
pub mod oracle;
pub mod poly;
pub mod poset;
pub mod stats;

pub use asm::{from_corner_sum, Asm, CornerSumMatrix, Permutation};
pub use enumerate::{
    bivariate_genfun, count_formula, enumerate_asms, genfun_stat, signed_identity_check, Bivariate,
    Stat, Universe, DEFAULT_GUARD,
};
pub use error::{Error, Line, Result};
pub use hasse::{build_hasse, HasseGraph};
pub use poly::{BivariatePolynomial, HalfIntPolynomial};
pub use poset::{CoverEdge, CoverType, PosetOrdering};
pub use stats::{HalfInt, Inversion, QuarterInt, StatRecord};
