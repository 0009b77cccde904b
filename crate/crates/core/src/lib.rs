//! Certified verification of the signless-Laplacian to Randic ratio bound:
//! interval-arithmetic invariants, exhaustive and sampled graph searches,
//! and machine-checkable certificates for the inequality grids that the
//! general argument reduces to.
//!
//! All numeric claims are decided on enclosures, never on bare floats: the
//! `f64` carrier widens every operation outward by one ulp, and any sign
//! test it cannot settle is retried in exact rational arithmetic. Spectral
//! quantities come with certified brackets, cross-checked against an
//! independent characteristic-polynomial oracle on small cases.

pub mod bounds;
pub mod certifier;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod harness;
pub mod interval;
pub mod invariants;
pub mod oracle;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use interval::{CertInterval, Interval, RatInterval, SignTest};
