//! Topological invariants of plane curve cusps and the signature obstructions
//! they impose on deformations.
//!
//! The crate covers quasi-homogeneous cusps `{x^p = y^q}` and ordinary double
//! points: Milnor numbers, `M̄` and `M` numbers, exact Tristram–Levine
//! signature functions of torus knots, and the inequalities a deformation
//! `X₀ ⇝ Y` must satisfy. [`enumeration`] searches all generic-fiber
//! configurations not excluded by those inequalities.
//!
//! With the default `parallel` feature, batch work runs on rayon; disabling it
//! gives a sequential build with identical output.

pub mod deformation;
pub mod document;
pub mod enumeration;
pub mod error;
pub mod rational;
pub mod signature;
pub mod singularities;

pub use deformation::{DeformationScenario, ObstructionReport, Verdict};
pub use error::{Error, Result};
pub use rational::Rational;
pub use singularities::{CuspDescriptor, SingularityDescriptor};
