//! Entropies, the entanglement of a bi-orthogonal superposition, and the
//! entropy condition that a conversion `Γ₁ → Γ₂` must satisfy.
//!
//! Everything here is computed in `f64`, whatever the input mode.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::TOLERANCE;
use crate::states::{ProbabilityVector, Scenario};

/// `−x log₂ x`, with `0 log 0 = 0`.
fn entropy_term(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * x.log2()
    }
}

/// `h₂(x) = −x log₂ x − (1−x) log₂(1−x)`; exactly zero at both endpoints.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::out_of_range("x", x, "0 <= x <= 1"));
    }
    if x == 0.0 || x == 1.0 {
        return Ok(0.0);
    }
    Ok(entropy_term(x) + entropy_term(1.0 - x))
}

/// Shannon entropy in bits of a probability list.
pub fn shannon_entropy(p: &[f64]) -> f64 {
    p.iter().copied().map(entropy_term).sum()
}

/// Entanglement entropy of a pure state with the given Schmidt spectrum.
pub fn von_neumann_entropy(v: &ProbabilityVector) -> f64 {
    shannon_entropy(&v.to_f64_vec())
}

/// `E(√α|φ⟩ + √(1−α)|ψ⟩) = α E(φ) + (1−α) E(ψ) + h₂(α)` for bi-orthogonal
/// `|φ⟩`, `|ψ⟩`.
pub fn superposition_entropy(e_phi: f64, e_psi: f64, alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::out_of_range("alpha", alpha, "0 <= alpha <= 1"));
    }
    if e_phi < 0.0 || !e_phi.is_finite() {
        return Err(Error::out_of_range("E_phi", e_phi, "E_phi >= 0"));
    }
    if e_psi < 0.0 || !e_psi.is_finite() {
        return Err(Error::out_of_range("E_psi", e_psi, "E_psi >= 0"));
    }
    Ok(alpha * e_phi + (1.0 - alpha) * e_psi + binary_entropy(alpha)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionStatus {
    Satisfied,
    Violated,
    /// Both sides agree to within `1e-12`; strictness is not decided.
    Boundary,
}

/// `g(α₂) = h₂(α₂) + slope·α₂ < threshold`.
///
/// For a scenario, `slope = E(φ₂) − E(ψ₂)` and the threshold is
/// `h₂(α₁) + α₁[E(φ₁) − E(ψ₁)] + E(ψ₁) − E(ψ₂)`, so the inequality is
/// `E(Γ₂) < E(Γ₁)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyCondition {
    pub slope: f64,
    pub threshold: f64,
}

impl EntropyCondition {
    pub fn new(slope: f64, threshold: f64) -> Self {
        EntropyCondition { slope, threshold }
    }

    pub fn for_scenario(s: &Scenario, alpha1: f64) -> Result<Self> {
        if !(alpha1 > 0.0 && alpha1 < 1.0) {
            return Err(Error::out_of_range("alpha1", alpha1, "0 < alpha1 < 1"));
        }
        let (e_phi1, e_psi1) = (s.phi1().entanglement(), s.psi1().entanglement());
        let (e_phi2, e_psi2) = (s.phi2().entanglement(), s.psi2().entanglement());
        let initial = binary_entropy(alpha1)? + alpha1 * (e_phi1 - e_psi1) + e_psi1;
        Ok(EntropyCondition {
            slope: e_phi2 - e_psi2,
            threshold: initial - e_psi2,
        })
    }

    pub fn g(&self, alpha2: f64) -> f64 {
        binary_entropy(alpha2.clamp(0.0, 1.0)).unwrap_or(0.0) + self.slope * alpha2
    }

    /// Unique maximizer of the strictly concave `g`, from `g′ = 0`.
    pub fn maximizer(&self) -> f64 {
        1.0 / (1.0 + 2f64.powf(-self.slope))
    }

    pub fn status(&self, alpha2: f64) -> ConditionStatus {
        let gap = self.g(alpha2) - self.threshold;
        if gap.abs() < TOLERANCE {
            ConditionStatus::Boundary
        } else if gap < 0.0 {
            ConditionStatus::Satisfied
        } else {
            ConditionStatus::Violated
        }
    }

    /// The open subset of `(0, 1)` where `g < threshold`.
    ///
    /// Concavity leaves at most one root on each side of the maximizer; each
    /// is bracketed on its monotone half and bisected to width `tol`.
    pub fn region(&self, tol: f64) -> Result<AlphaRegion> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::out_of_range("tol", tol, "tol > 0"));
        }
        let peak = self.maximizer();
        let c = self.threshold;
        let mut intervals = Vec::with_capacity(2);
        if self.g(peak) < c {
            intervals.push((0.0, 1.0));
        } else {
            // g(0) = 0, g(1) = slope
            if c > 0.0 {
                let root = bisect(|x| self.g(x) - c, 0.0, peak, tol);
                intervals.push((0.0, root));
            }
            if c > self.slope {
                let root = bisect(|x| self.g(x) - c, peak, 1.0, tol);
                intervals.push((root, 1.0));
            }
        }
        Ok(AlphaRegion {
            intervals,
            root_tolerance: tol,
        })
    }
}

/// Sign change of `f` on `[lo, hi]` narrowed to width `tol`; returns the midpoint.
fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let lo_negative = f(lo) < 0.0;
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Admissible `α₂` values: disjoint, sorted open intervals inside `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlphaRegion {
    pub intervals: Vec<(f64, f64)>,
    pub root_tolerance: f64,
}

impl AlphaRegion {
    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo < x && x < hi)
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Endpoints strictly inside `(0, 1)`, i.e. the located roots.
    pub fn interior_endpoints(&self) -> Vec<f64> {
        self.intervals
            .iter()
            .flat_map(|&(lo, hi)| [lo, hi])
            .filter(|&x| x > 0.0 && x < 1.0)
            .collect()
    }
}

/// Tri-state check of `E(Γ₂) < E(Γ₁)` in its expanded form.
pub fn necessary_condition(s: &Scenario, alpha1: f64, alpha2: f64) -> Result<ConditionStatus> {
    if !(alpha2 > 0.0 && alpha2 < 1.0) {
        return Err(Error::out_of_range("alpha2", alpha2, "0 < alpha2 < 1"));
    }
    Ok(EntropyCondition::for_scenario(s, alpha1)?.status(alpha2))
}

/// Admissible `α₂` region for a fixed `α₁`.
pub fn alpha2_region(s: &Scenario, alpha1: f64, tol: f64) -> Result<AlphaRegion> {
    EntropyCondition::for_scenario(s, alpha1)?.region(tol)
}
