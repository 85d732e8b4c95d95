//! Trace ideals, canonical ideals, Koszul homology and Ulrich tests for
//! numerical semigroup rings k[t^{a_1}, ..., t^{a_n}].
//!
//! The crate has four layers:
//!
//! * [`semigroup`] — exact integer arithmetic on numerical semigroups and
//!   genus-tree enumeration;
//! * [`ideal`] — fractional monomial ideal arithmetic (colon, product,
//!   trace, canonical and conductor ideals, Ulrich tests, classification);
//! * [`engine`] — finite-dimensional graded linear algebra over a truncated
//!   semigroup ring with prime-field coefficients (degreewise kernels,
//!   syzygies, free resolutions, Hilbert functions);
//! * [`homology`] — the finite-length invariants Tor_1, Ext^i, wedge^2,
//!   S^2, delta_1, H_1 with annihilation tests, the sixteen-condition
//!   equivalence battery, and the nearly-Gorenstein counterexample detector.
//!
//! [`scenario`] replays the hand-checked worked examples (baked syzygy
//! matrices included), and [`scan`] drives bulk verification over ranges of
//! semigroups.

pub mod engine;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod matrix;
pub mod ring;
pub mod scan;
pub mod scenario;
pub mod semigroup;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use semigroup::NumericalSemigroup;

/// Default coefficient field; char 2 is the other one exercised by the
/// worked examples.
pub const DEFAULT_PRIME: u32 = 101;
