//! Two-term bi-orthogonal states, scenarios and superposition spectra.
//!
//! A two-term state is `√p|aa⟩ + √(1−p)|bb⟩` with `1/2 < p < 1`. Two such
//! states on disjoint local supports superpose into a Schmidt-number-4 state
//! whose spectrum is the weighted union of the two individual spectra.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::{Number, TOLERANCE};

fn require_open_half_unit(name: &'static str, p: &Number) -> Result<()> {
    if p.is_finite() && *p > Number::half() && *p < Number::one() {
        Ok(())
    } else {
        Err(Error::out_of_range(name, p, "1/2 < value < 1"))
    }
}

pub(crate) fn require_closed_unit(name: &'static str, x: &Number) -> Result<()> {
    if x.is_finite() && *x >= Number::zero() && *x <= Number::one() {
        Ok(())
    } else {
        Err(Error::out_of_range(name, x, "0 <= value <= 1"))
    }
}

pub(crate) fn require_open_unit(name: &'static str, x: &Number) -> Result<()> {
    if x.is_finite() && *x > Number::zero() && *x < Number::one() {
        Ok(())
    } else {
        Err(Error::out_of_range(name, x, "0 < value < 1"))
    }
}

/// `√p|aa⟩ + √(1−p)|bb⟩` with the larger Schmidt coefficient `p`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoTermState {
    p: Number,
}

impl TwoTermState {
    pub fn new(p: Number) -> Result<Self> {
        require_open_half_unit("p", &p)?;
        Ok(TwoTermState { p })
    }

    pub fn p(&self) -> &Number {
        &self.p
    }

    /// Schmidt coefficients `(p, 1 − p)`, already descending.
    pub fn coefficients(&self) -> (Number, Number) {
        (self.p.clone(), Number::one() - &self.p)
    }

    pub fn spectrum(&self) -> ProbabilityVector {
        let (major, minor) = self.coefficients();
        ProbabilityVector { entries: vec![major, minor] }
    }

    /// Entanglement entropy in bits.
    pub fn entanglement(&self) -> f64 {
        crate::entanglement::binary_entropy(self.p.to_f64()).expect("p validated in (1/2, 1)")
    }
}

/// The four parameters `(ξ₁, η₁, ξ₂, η₂)` of `|φ₁⟩, |ψ₁⟩, |φ₂⟩, |ψ₂⟩`,
/// constrained by `1/2 < η₂ < ξ₂ < η₁ < ξ₁ < 1`.
///
/// The chain implies `η₁ > ξ₂`, which is exactly the pairwise
/// non-convertibility of the initial states into the final ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub xi1: Number,
    pub eta1: Number,
    pub xi2: Number,
    pub eta2: Number,
}

impl Scenario {
    pub fn new(xi1: Number, eta1: Number, xi2: Number, eta2: Number) -> Result<Self> {
        let half = Number::half();
        let one = Number::one();
        let links: [(&Number, &Number, &'static str); 5] = [
            (&half, &eta2, "1/2 < eta2"),
            (&eta2, &xi2, "eta2 < xi2"),
            (&xi2, &eta1, "xi2 < eta1"),
            (&eta1, &xi1, "eta1 < xi1"),
            (&xi1, &one, "xi1 < 1"),
        ];
        for (lo, hi, inequality) in links {
            if !(hi.is_finite() && lo.is_finite() && lo < hi) {
                return Err(Error::ChainViolation { inequality });
            }
        }
        Ok(Scenario { xi1, eta1, xi2, eta2 })
    }

    pub fn from_f64(xi1: f64, eta1: f64, xi2: f64, eta2: f64) -> Result<Self> {
        Scenario::new(xi1.into(), eta1.into(), xi2.into(), eta2.into())
    }

    pub fn is_exact(&self) -> bool {
        [&self.xi1, &self.eta1, &self.xi2, &self.eta2]
            .iter()
            .all(|n| n.is_exact())
    }

    pub fn to_real(&self) -> Scenario {
        Scenario {
            xi1: self.xi1.to_real(),
            eta1: self.eta1.to_real(),
            xi2: self.xi2.to_real(),
            eta2: self.eta2.to_real(),
        }
    }

    pub fn phi1(&self) -> TwoTermState {
        TwoTermState { p: self.xi1.clone() }
    }

    pub fn psi1(&self) -> TwoTermState {
        TwoTermState { p: self.eta1.clone() }
    }

    pub fn phi2(&self) -> TwoTermState {
        TwoTermState { p: self.xi2.clone() }
    }

    pub fn psi2(&self) -> TwoTermState {
        TwoTermState { p: self.eta2.clone() }
    }

    /// Spectrum of `Γ₁ = √α₁|φ₁⟩ + √(1−α₁)|ψ₁⟩`.
    pub fn gamma1(&self, alpha1: &Number) -> Result<ProbabilityVector> {
        superposition_schmidt(&self.xi1, &self.eta1, alpha1)
    }

    /// Spectrum of `Γ₂ = √α₂|φ₂⟩ + √(1−α₂)|ψ₂⟩`.
    pub fn gamma2(&self, alpha2: &Number) -> Result<ProbabilityVector> {
        superposition_schmidt(&self.xi2, &self.eta2, alpha2)
    }
}

/// Squared superposition amplitudes of `Γ₁` and `Γ₂`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuperpositionWeights {
    pub alpha1: Number,
    pub alpha2: Number,
}

impl SuperpositionWeights {
    pub fn new(alpha1: Number, alpha2: Number) -> Result<Self> {
        require_closed_unit("alpha1", &alpha1)?;
        require_closed_unit("alpha2", &alpha2)?;
        Ok(SuperpositionWeights { alpha1, alpha2 })
    }
}

/// Non-increasing list of non-negative values summing to one.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ProbabilityVector {
    entries: Vec<Number>,
}

impl ProbabilityVector {
    pub fn new(entries: Vec<Number>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidVector("empty".into()));
        }
        let zero = Number::zero();
        if let Some(bad) = entries.iter().find(|e| !e.is_finite() || !e.ge_tolerant(&zero)) {
            return Err(Error::InvalidVector(format!("negative entry {bad}")));
        }
        if entries.windows(2).any(|w| w[1].gt_tolerant(&w[0])) {
            return Err(Error::InvalidVector("entries are not non-increasing".into()));
        }
        let total = entries.iter().fold(Number::zero(), |acc, e| acc + e);
        if total.cmp_tolerant(&Number::one()) != Ordering::Equal {
            return Err(Error::InvalidVector(format!("entries sum to {total}, not 1")));
        }
        Ok(ProbabilityVector { entries })
    }

    /// Sorts into non-increasing order (stable) before validating.
    pub fn from_unsorted(mut entries: Vec<Number>) -> Result<Self> {
        entries.sort_by(|a, b| b.value_cmp(a));
        ProbabilityVector::new(entries)
    }

    pub fn from_f64(entries: &[f64]) -> Result<Self> {
        ProbabilityVector::new(entries.iter().copied().map(Number::from).collect())
    }

    pub fn entries(&self) -> &[Number] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.entries.iter().all(Number::is_exact)
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.entries.iter().map(Number::to_f64).collect()
    }

    /// Zero-padded copy of length `len` (no-op when already that long).
    pub fn padded(&self, len: usize) -> ProbabilityVector {
        let mut entries = self.entries.clone();
        while entries.len() < len {
            entries.push(Number::zero());
        }
        ProbabilityVector { entries }
    }

    /// Entrywise equality, with tolerance in real mode.
    pub fn approx_eq(&self, other: &ProbabilityVector) -> bool {
        let len = self.len().max(other.len());
        let a = self.padded(len);
        let b = other.padded(len);
        a.entries
            .iter()
            .zip(&b.entries)
            .all(|(x, y)| x.cmp_tolerant(y) == Ordering::Equal)
    }

    pub(crate) fn max_abs_diff(&self, other: &ProbabilityVector) -> f64 {
        let len = self.len().max(other.len());
        let a = self.padded(len);
        let b = other.padded(len);
        a.entries
            .iter()
            .zip(&b.entries)
            .map(|(x, y)| (x.to_f64() - y.to_f64()).abs())
            .fold(0.0, f64::max)
    }
}

/// Which of the four product terms of a superposition a coefficient came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SchmidtTerm {
    /// `αξ`
    PhiMajor,
    /// `α(1−ξ)`
    PhiMinor,
    /// `(1−α)η`
    PsiMajor,
    /// `(1−α)(1−η)`
    PsiMinor,
}

/// The four labelled coefficients of `√α|φ⟩ + √(1−α)|ψ⟩`, sorted
/// non-increasing; equal values keep construction order.
pub fn superposition_terms(
    xi: &Number,
    eta: &Number,
    alpha: &Number,
) -> Result<Vec<(SchmidtTerm, Number)>> {
    require_open_half_unit("xi", xi)?;
    require_open_half_unit("eta", eta)?;
    require_closed_unit("alpha", alpha)?;
    let one = Number::one();
    let beta = &one - alpha;
    let mut terms = vec![
        (SchmidtTerm::PhiMajor, alpha * xi),
        (SchmidtTerm::PhiMinor, alpha * (&one - xi)),
        (SchmidtTerm::PsiMajor, &beta * eta),
        (SchmidtTerm::PsiMinor, &beta * (&one - eta)),
    ];
    terms.sort_by(|a, b| b.1.value_cmp(&a.1));
    Ok(terms)
}

/// Descending Schmidt spectrum `{αξ, α(1−ξ), (1−α)η, (1−α)(1−η)}` of the
/// superposition of two bi-orthogonal two-term states.
pub fn superposition_schmidt(xi: &Number, eta: &Number, alpha: &Number) -> Result<ProbabilityVector> {
    let entries = superposition_terms(xi, eta, alpha)?
        .into_iter()
        .map(|(_, v)| v)
        .collect::<Vec<_>>();
    debug_assert!({
        let total = entries.iter().fold(Number::zero(), |acc, e| acc + e);
        (total.to_f64() - 1.0).abs() <= 4.0 * TOLERANCE
    });
    Ok(ProbabilityVector { entries })
}
