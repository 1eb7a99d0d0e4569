//! Coefficient sequences, area sums and univalence criteria for analytic
//! functions on the unit disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`] – truncated power series over `Complex64`, plus the
//!   generalized binomial coefficient.
//! * [`catalog`] – closed-form test functions with ground-truth univalence flags.
//! * [`sequences`] – the Aharonov sequence φₙ, the generalized sequence Φ_{λ,n}
//!   (two routes) and the exterior coefficients Ψₙ.
//! * [`transforms`] – disk automorphisms, the Koebe transform and the
//!   coefficient shift under pre-composition with an automorphism.
//! * [`criteria`] – Prawitz sums, criterion sums T_N, full-mapping scans and
//!   decay bounds.
//! * [`quadrature`] – polar quadrature on the disk, the Prawitz integral and the
//!   Grunsky norm.
//! * [`acceptance`] – the end-to-end checks shared by the test suite and the
//!   `selftest` command.

pub mod acceptance;
pub mod catalog;
pub mod criteria;
mod error;
pub mod exec;
pub mod quadrature;
pub mod sequences;
pub mod series;
pub mod transforms;

pub use catalog::{CatalogFunction, FunctionKind, UnivalenceFlags};
pub use error::{Error, Result};
pub use exec::Exec;
pub use num_complex::Complex64;
pub use series::{gen_binomial, PowerSeries};
