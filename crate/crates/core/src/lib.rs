//! Exact enumeration and statistics on ordered multiset partitions.
//!
//! The crate is organised bottom-up:
//!
//! - [`qpoly`]: exact polynomials in `q` and the q-analog constructors.
//! - [`partitions`]: words, compositions, ordered multiset partitions, their
//!   lazy enumerators and the text notation.
//! - [`statistics`]: `inv`, `maj`, `minimaj`, the segmented-word map,
//!   standardization and cycle actions.
//! - [`switch_maps`]: the descent-preserving involutions `t_i`.
//! - [`distributions`]: generating functions by enumeration and by recursion,
//!   and the equidistribution checks built on them.
//! - [`symfunc`]: monomial and Schur expansions of the valley sums.
//! - [`colored`]: colored letters, flag major index and the colored checks.
//! - [`suites`]: named verification suites used by the CLI and the tests.

pub mod colored;
pub mod distributions;
pub mod error;
pub mod partitions;
pub mod qpoly;
pub mod report;
pub mod statistics;
pub mod suites;
pub mod switch_maps;
pub mod symfunc;

pub use error::{Error, ParseErrorKind, Result};
pub use partitions::{Composition, OrderedMultisetPartition, SegmentedWord, Subset, WeakComposition, Word};
pub use qpoly::{Overflow, QPoly};
pub use report::{Report, ReportEntry};
