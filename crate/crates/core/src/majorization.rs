//! Nielsen's criterion: `|Ψ⟩ → |Φ⟩` by LOCC iff the Schmidt spectrum of
//! `|Ψ⟩` is majorized by that of `|Φ⟩`.

use serde::Serialize;

use crate::number::Number;
use crate::states::ProbabilityVector;

/// Outcome of a majorization test, with the margin at every `k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConversionVerdict {
    pub convertible: bool,
    /// `Σ_{j≤k} target_j − Σ_{j≤k} source_j` for `k = 1..=d`.
    pub margins: Vec<Number>,
    /// First `k` (1-based) whose inequality fails.
    pub first_failure: Option<usize>,
}

impl ConversionVerdict {
    /// Number of prefix inequalities that hold.
    pub fn satisfied_count(&self) -> usize {
        self.margins
            .iter()
            .filter(|m| m.ge_tolerant(&Number::zero()))
            .count()
    }
}

pub fn prefix_sums(v: &ProbabilityVector) -> Vec<Number> {
    v.entries()
        .iter()
        .scan(Number::zero(), |acc, x| {
            *acc = &*acc + x;
            Some(acc.clone())
        })
        .collect()
}

/// Tests `source ≺ target`. The shorter vector is zero-padded; every margin
/// is computed even after a failure.
pub fn majorizes(source: &ProbabilityVector, target: &ProbabilityVector) -> ConversionVerdict {
    let d = source.len().max(target.len());
    let source_sums = prefix_sums(&source.padded(d));
    let target_sums = prefix_sums(&target.padded(d));
    let zero = Number::zero();

    let margins: Vec<Number> = target_sums
        .iter()
        .zip(&source_sums)
        .map(|(t, s)| t - s)
        .collect();
    let first_failure = margins
        .iter()
        .position(|m| !m.ge_tolerant(&zero))
        .map(|i| i + 1);

    ConversionVerdict {
        convertible: first_failure.is_none(),
        margins,
        first_failure,
    }
}
