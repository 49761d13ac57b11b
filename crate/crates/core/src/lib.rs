//! Exact-arithmetic calculator and verifier for upper and lower bounds on
//! the essential dimension of moduli stacks of parabolic vector bundles,
//! together with brute-force laboratories for the supporting linear
//! algebra and character-sum inequalities.
//!
//! The crate is organized around:
//!
//! - [`datum`]: the parabolic data model (points, multiplicities, weights)
//!   and its numeric invariants `N(D)`, `M(D)`, `l(D)`, parabolic degree
//!   and slope;
//! - [`flag`]: flag-variety dimension arithmetic and superadditivity;
//! - [`bounds`]: the recursions `F`, `G`, `H`, the legacy quartic `h_g`,
//!   Ext-dimension bounds, and per-theorem bound entries assembled into a
//!   [`bounds::BoundReport`];
//! - [`flaglab`]: generic flag triples over small prime fields with
//!   exhaustive subspace enumeration, verifying the slope and degree
//!   inequalities;
//! - [`isotropy`]: exhaustive verification of the cyclic-isotropy
//!   character-sum bound;
//! - [`linalg`]: the dense `F_q` matrix substrate;
//! - [`rat`]: exact rational helpers (parsing, canonical rendering).
//!
//! All arithmetic is exact; the crate contains no floating point.

pub mod bounds;
pub mod datum;
pub mod flag;
pub mod flaglab;
pub mod isotropy;
pub mod linalg;
pub mod rat;

pub use bounds::{compute_report, BoundEntry, BoundKind, BoundReport, Locus, TheoremId};
pub use datum::{validate_datum, ModuliContext, ParabolicDatum, ParabolicPoint, Weight};
