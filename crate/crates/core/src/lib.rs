//! LOCC convertibility of superpositions of bi-orthogonal bipartite states.
//!
//! Given `Γ₁ = √α₁|φ₁⟩ + √(1−α₁)|ψ₁⟩` and `Γ₂ = √α₂|φ₂⟩ + √(1−α₂)|ψ₂⟩`,
//! where each `|φ⟩`, `|ψ⟩` is a Schmidt-number-2 state on disjoint local
//! supports, this crate decides whether `Γ₁ → Γ₂` by LOCC:
//!
//! * [`majorization`] implements Nielsen's criterion on Schmidt spectra,
//! * [`entanglement`] holds the entropy identities and the `α₂` region solver,
//! * [`propositions`] classifies scenarios into regimes with closed-form
//!   admissibility conditions,
//! * [`oracle`] cross-checks the closed forms against brute force.
//!
//! Values are [`Number`]s: exact rationals reproduce fractional spectra bit
//! for bit, `f64` covers sweeps and entropies.

pub mod cli;
pub mod entanglement;
pub mod error;
pub mod majorization;
pub mod number;
pub mod oracle;
pub mod propositions;
pub mod states;

pub use error::{Error, Result};
pub use number::Number;
pub use states::{ProbabilityVector, Scenario, TwoTermState};
