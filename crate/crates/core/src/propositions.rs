//! Regime classification of `ξ₂`, the admissible `α₁` intervals, and the
//! claimed criterion `α₁/α₂ ≤ ξ₂/ξ₁` for `Γ₁ → Γ₂`.
//!
//! Three regimes split `ξ₂` by the thresholds
//!
//! ```text
//! T_low  = (1−η₁)/(2−ξ₁−η₁)
//! T_high = ξ₁η₁/(1−ξ₁+η₁)
//! A      = η₁/(1−ξ₁+η₁)
//! ```
//!
//! | regime | ξ₂ range         | α₁ interval    |
//! |--------|------------------|----------------|
//! | R1     | `[T_high, 1)`    | `[A, ξ₂/ξ₁]`   |
//! | R2     | `[T_low, T_high)`| `[ξ₂, A)`      |
//! | R3     | `(1/2, T_low)`   | `[ξ₂, T_low]`  |
//!
//! Within a regime, with `α₁` in its interval and `α₂ > 1/2`, the claim is that
//! only the first majorization inequality matters. The R1 and R2 sufficiency
//! arguments lean on [`appendix_b1`], which does not hold on the whole chain
//! region; the oracle sweep reports where the claim and brute force disagree.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::Number;
use crate::states::{require_closed_unit, require_open_unit, superposition_terms, Scenario, SchmidtTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RegimeTag {
    R1,
    R2,
    R3,
}

impl RegimeTag {
    pub const ALL: [RegimeTag; 3] = [RegimeTag::R1, RegimeTag::R2, RegimeTag::R3];
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RegimeTag::R1 => "R1",
            RegimeTag::R2 => "R2",
            RegimeTag::R3 => "R3",
        };
        f.write_str(s)
    }
}

impl FromStr for RegimeTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "R1" | "1" => Ok(RegimeTag::R1),
            "R2" | "2" => Ok(RegimeTag::R2),
            "R3" | "3" => Ok(RegimeTag::R3),
            other => Err(format!("unknown regime {other:?}; expected R1, R2 or R3")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Thresholds {
    pub t_low: Number,
    pub t_high: Number,
    pub a: Number,
}

pub fn thresholds(s: &Scenario) -> Thresholds {
    let one = Number::one();
    let two = Number::from(2);
    let gap = &one - &s.xi1 + &s.eta1;
    Thresholds {
        t_low: (&one - &s.eta1) / (&two - &s.xi1 - &s.eta1),
        t_high: &s.xi1 * &s.eta1 / &gap,
        a: &s.eta1 / &gap,
    }
}

/// Interval with explicit endpoint kinds. Membership uses the tolerant
/// comparison of [`Number`]: closed ends admit values within tolerance,
/// open ends require clearing it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: Number,
    pub hi: Number,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Number, lo_closed: bool, hi: Number, hi_closed: bool) -> Self {
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn contains(&self, x: &Number) -> bool {
        let above = if self.lo_closed { x.ge_tolerant(&self.lo) } else { x.gt_tolerant(&self.lo) };
        let below = if self.hi_closed { self.hi.ge_tolerant(x) } else { self.hi.gt_tolerant(x) };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.value_cmp(&self.hi) {
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => !(self.lo_closed && self.hi_closed),
            std::cmp::Ordering::Greater => true,
        }
    }

    pub fn width(&self) -> f64 {
        self.hi.to_f64() - self.lo.to_f64()
    }

    pub fn distance_to_boundary(&self, x: f64) -> f64 {
        (x - self.lo.to_f64()).abs().min((x - self.hi.to_f64()).abs())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Regime {
    pub tag: RegimeTag,
    /// Whether `ξ₂` lies in this regime's range.
    pub applicable: bool,
    pub xi2_range: Interval,
    pub alpha1_interval: Interval,
    pub thresholds: Thresholds,
}

/// All three regimes, applicable or not.
pub fn evaluate_regimes(s: &Scenario) -> Vec<Regime> {
    let t = thresholds(s);
    let one = Number::one();
    let half = Number::half();
    RegimeTag::ALL
        .iter()
        .map(|&tag| {
            let (xi2_range, alpha1_interval) = match tag {
                RegimeTag::R1 => (
                    Interval::new(t.t_high.clone(), true, one.clone(), false),
                    Interval::new(t.a.clone(), true, &s.xi2 / &s.xi1, true),
                ),
                RegimeTag::R2 => (
                    Interval::new(t.t_low.clone(), true, t.t_high.clone(), false),
                    Interval::new(s.xi2.clone(), true, t.a.clone(), false),
                ),
                RegimeTag::R3 => (
                    Interval::new(half.clone(), false, t.t_low.clone(), false),
                    Interval::new(s.xi2.clone(), true, t.t_low.clone(), true),
                ),
            };
            Regime {
                tag,
                applicable: xi2_range.contains(&s.xi2),
                xi2_range,
                alpha1_interval,
                thresholds: t.clone(),
            }
        })
        .collect()
}

/// Every regime whose `ξ₂` condition holds. When `T_low > T_high` more than
/// one may apply; none is suppressed. An applicable regime may still have an
/// empty `α₁` interval.
pub fn classify_regimes(s: &Scenario) -> Vec<Regime> {
    evaluate_regimes(s).into_iter().filter(|r| r.applicable).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinAlpha2 {
    /// Infimum of admissible `α₂`: `max(α₁ξ₁/ξ₂, 1/2)`.
    pub value: Number,
    /// False when the value exceeds 1.
    pub feasible: bool,
}

pub fn min_alpha2(s: &Scenario, alpha1: &Number) -> Result<MinAlpha2> {
    require_open_unit("alpha1", alpha1)?;
    let ratio = alpha1 * &s.xi1 / &s.xi2;
    let value = ratio.max(Number::half().in_mode_of(alpha1));
    let feasible = Number::one().ge_tolerant(&value);
    Ok(MinAlpha2 { value, feasible })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropositionVerdict {
    pub hypotheses_met: bool,
    /// `Some(α₁ξ₁ ≤ α₂ξ₂)` when the hypotheses hold, `None` otherwise.
    pub convertible: Option<bool>,
    /// Regimes whose hypotheses all hold for these inputs.
    pub regimes: Vec<RegimeTag>,
    pub min_alpha2: MinAlpha2,
    pub reason: String,
}

pub fn convertible_iff(s: &Scenario, alpha1: &Number, alpha2: &Number) -> Result<PropositionVerdict> {
    require_open_unit("alpha1", alpha1)?;
    require_open_unit("alpha2", alpha2)?;
    let min = min_alpha2(s, alpha1)?;
    let applicable = classify_regimes(s);

    let not_met = |reason: String| PropositionVerdict {
        hypotheses_met: false,
        convertible: None,
        regimes: Vec::new(),
        min_alpha2: min.clone(),
        reason,
    };

    if applicable.is_empty() {
        return Ok(not_met(format!("xi2 = {} lies in no regime", s.xi2)));
    }
    let regimes: Vec<RegimeTag> = applicable
        .iter()
        .filter(|r| r.alpha1_interval.contains(alpha1))
        .map(|r| r.tag)
        .collect();
    if regimes.is_empty() {
        let listed = applicable
            .iter()
            .map(|r| format!("{}: {}", r.tag, r.alpha1_interval))
            .collect::<Vec<_>>()
            .join(", ");
        return Ok(not_met(format!("alpha1 = {alpha1} is outside every applicable interval ({listed})")));
    }
    if !alpha2.gt_tolerant(&Number::half()) {
        return Ok(not_met(format!("alpha2 = {alpha2} does not exceed 1/2")));
    }

    let convertible = (alpha2 * &s.xi2).ge_tolerant(&(alpha1 * &s.xi1));
    let tags = regimes.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let reason = if convertible {
        format!("{tags}: alpha1*xi1 <= alpha2*xi2 holds")
    } else {
        format!("{tags}: alpha1*xi1 > alpha2*xi2, alpha2 must be at least {}", min.value)
    };
    Ok(PropositionVerdict {
        hypotheses_met: true,
        convertible: Some(convertible),
        regimes,
        min_alpha2: min,
        reason,
    })
}

/// `ξ₁η₁/(1−ξ₁+η₁) > ξ₂η₂/(1−ξ₂+η₂)`.
pub fn appendix_a1(s: &Scenario) -> bool {
    let one = Number::one();
    let lhs = &s.xi1 * &s.eta1 / (&one - &s.xi1 + &s.eta1);
    let rhs = &s.xi2 * &s.eta2 / (&one - &s.xi2 + &s.eta2);
    lhs > rhs
}

/// `ξ > η/(1−ξ+η)`, equivalent to `(ξ−η)(1−ξ) > 0`.
pub fn appendix_a2(xi: &Number, eta: &Number) -> Result<bool> {
    let half = Number::half();
    let one = Number::one();
    if !(half < *eta && eta < xi && *xi < one) {
        return Err(Error::HypothesisViolated(format!(
            "expected 1/2 < eta < xi < 1, got xi = {xi}, eta = {eta}"
        )));
    }
    Ok(*xi > eta / (&one - xi + eta))
}

/// `(1−α₁)(1−η₁) > (1−α₂)(1−η₂)` under the hypothesis `α₁ξ₁ ≤ α₂ξ₂`.
///
/// This is not implied by the hypothesis plus the scenario chain alone: for
/// `(ξ₁,η₁,ξ₂,η₂) = (81/100, 4/5, 79/100, 51/100)`, `α₁ = 81/100`,
/// `α₂ = 17/20` it evaluates to false.
pub fn appendix_b1(s: &Scenario, alpha1: &Number, alpha2: &Number) -> Result<bool> {
    require_closed_unit("alpha1", alpha1)?;
    require_closed_unit("alpha2", alpha2)?;
    let lead1 = alpha1 * &s.xi1;
    let lead2 = alpha2 * &s.xi2;
    if lead1 > lead2 {
        return Err(Error::HypothesisViolated(format!(
            "alpha1*xi1 = {lead1} exceeds alpha2*xi2 = {lead2}"
        )));
    }
    let one = Number::one();
    let lhs = (&one - alpha1) * (&one - &s.eta1);
    let rhs = (&one - alpha2) * (&one - &s.eta2);
    Ok(lhs > rhs)
}

/// Descending order of the `Γ₁` terms used in each regime's argument.
pub fn gamma1_order(tag: RegimeTag) -> [SchmidtTerm; 4] {
    use SchmidtTerm::*;
    match tag {
        RegimeTag::R1 => [PhiMajor, PhiMinor, PsiMajor, PsiMinor],
        RegimeTag::R2 => [PhiMajor, PsiMajor, PhiMinor, PsiMinor],
        RegimeTag::R3 => [PhiMajor, PsiMajor, PsiMinor, PhiMinor],
    }
}

/// Descending order of the `Γ₂` terms once `α₂ ≥ α₁ξ₁/ξ₂`, in every regime.
pub fn gamma2_order() -> [SchmidtTerm; 4] {
    gamma1_order(RegimeTag::R1)
}

/// Whether the superposition spectrum is strictly decreasing in `order`.
pub fn strict_order_holds(order: &[SchmidtTerm; 4], xi: &Number, eta: &Number, alpha: &Number) -> Result<bool> {
    let terms = superposition_terms(xi, eta, alpha)?;
    let labels_match = terms.iter().map(|(t, _)| *t).eq(order.iter().copied());
    let strict = terms.windows(2).all(|w| w[0].1 > w[1].1);
    Ok(labels_match && strict)
}
