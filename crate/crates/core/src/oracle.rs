//! Brute-force convertibility and the randomized falsification sweep.
//!
//! The oracle builds both superposition spectra and applies the majorization
//! test directly; it never consults the propositions module. The sweep draws
//! scenarios inside the regimes and compares the two decision procedures,
//! while also checking the entropy identities, the appendix inequalities and
//! the Schmidt-order lemmas on every sample.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::entanglement::{
    necessary_condition, superposition_entropy, von_neumann_entropy, ConditionStatus,
};
use crate::error::{Error, Result};
use crate::majorization::{majorizes, ConversionVerdict};
use crate::number::Number;
use crate::propositions::{
    appendix_a1, appendix_a2, appendix_b1, classify_regimes, convertible_iff, gamma1_order, gamma2_order,
    min_alpha2, strict_order_holds, thresholds, RegimeTag,
};
use crate::states::{require_closed_unit, Scenario};

/// Decides `Γ₁ → Γ₂` from Nielsen's criterion alone.
pub fn brute_force_convertible(s: &Scenario, alpha1: &Number, alpha2: &Number) -> Result<ConversionVerdict> {
    require_closed_unit("alpha1", alpha1)?;
    require_closed_unit("alpha2", alpha2)?;
    let source = s.gamma1(alpha1)?;
    let target = s.gamma2(alpha2)?;
    Ok(majorizes(&source, &target))
}

pub const DEFAULT_BOUNDARY_MARGIN: f64 = 1e-9;

/// Draw attempts per sample index before giving up on it.
const MAX_ATTEMPTS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub samples: u64,
    pub seed: u64,
    pub boundary_margin: f64,
    pub regime_filter: Option<RegimeTag>,
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            samples: 10_000,
            seed: 42,
            boundary_margin: DEFAULT_BOUNDARY_MARGIN,
            regime_filter: None,
            output_path: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::ConfigInvalid("samples must be at least 1".into()));
        }
        if !(self.boundary_margin > 0.0 && self.boundary_margin < 0.01) {
            return Err(Error::ConfigInvalid(format!(
                "boundary_margin must lie in (0, 0.01), got {}",
                self.boundary_margin
            )));
        }
        Ok(())
    }
}

/// Per-sample property names, in report order.
pub mod property {
    pub const HYPOTHESES: &str = "hypotheses_met";
    pub const SUPERPOSITION_ENTROPY: &str = "superposition_entropy_equality";
    pub const ENTROPY_MONOTONE: &str = "entropy_monotone_under_conversion";
    pub const NECESSARY_CONDITION: &str = "necessary_condition_soundness";
    pub const APPENDIX_A1: &str = "appendix_a1";
    pub const APPENDIX_A2: &str = "appendix_a2";
    pub const APPENDIX_B1: &str = "appendix_b1";
    pub const GAMMA1_ORDER: &str = "gamma1_schmidt_order";
    pub const GAMMA2_ORDER: &str = "gamma2_schmidt_order";

    pub const ALL: [&str; 9] = [
        HYPOTHESES,
        SUPERPOSITION_ENTROPY,
        ENTROPY_MONOTONE,
        NECESSARY_CONDITION,
        APPENDIX_A1,
        APPENDIX_A2,
        APPENDIX_B1,
        GAMMA1_ORDER,
        GAMMA2_ORDER,
    ];
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MismatchRecord {
    pub index: u64,
    pub scenario: [f64; 4],
    pub regime: RegimeTag,
    pub alpha1: f64,
    pub alpha2: f64,
    pub proposition_convertible: Option<bool>,
    pub oracle_convertible: bool,
    pub oracle_first_failure: Option<usize>,
    pub oracle_margins: Vec<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RegimeCounts {
    pub total: u64,
    pub mismatches: u64,
    /// Samples on the convertible side of `α₁ξ₁ ≤ α₂ξ₂`.
    pub criterion_holds: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct PropertyTally {
    pub checked: u64,
    pub failed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub samples: u64,
    pub seed: u64,
    pub boundary_margin: f64,
    pub regime_filter: Option<RegimeTag>,
    pub total: u64,
    pub agreements: u64,
    pub mismatches: u64,
    /// Indices for which no admissible draw was found.
    pub exhausted: u64,
    pub per_regime: BTreeMap<RegimeTag, RegimeCounts>,
    pub properties: BTreeMap<String, PropertyTally>,
    pub mismatch_records: Vec<MismatchRecord>,
}

impl SweepReport {
    pub fn property_failures(&self) -> u64 {
        self.properties.values().map(|t| t.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.mismatches == 0 && self.property_failures() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Writes the json report via a sibling temporary file and a rename.
    pub fn write_json(&self, path: &Path) -> std::io::Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, self.to_json())?;
        fs::rename(&tmp, path)
    }
}

/// Everything checked for one `(scenario, α₁, α₂)` point.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCheck {
    pub regime: RegimeTag,
    pub criterion_holds: bool,
    pub proposition_convertible: Option<bool>,
    pub oracle: ConversionVerdict,
    /// `(property, passed)` for each property that applied to this point.
    pub properties: Vec<(&'static str, bool)>,
}

impl PointCheck {
    pub fn agrees(&self) -> bool {
        self.proposition_convertible == Some(self.oracle.convertible)
    }
}

/// Runs both decision procedures and every per-sample property on one point.
pub fn check_point(s: &Scenario, regime: RegimeTag, alpha1: &Number, alpha2: &Number) -> Result<PointCheck> {
    let verdict = convertible_iff(s, alpha1, alpha2)?;
    let oracle = brute_force_convertible(s, alpha1, alpha2)?;
    let criterion_holds = (alpha2 * &s.xi2) >= (alpha1 * &s.xi1);
    let mut properties = vec![(property::HYPOTHESES, verdict.hypotheses_met && verdict.regimes.contains(&regime))];

    let gamma1 = s.gamma1(alpha1)?;
    let gamma2 = s.gamma2(alpha2)?;
    let (a1, a2) = (alpha1.to_f64(), alpha2.to_f64());
    let e_gamma1 = von_neumann_entropy(&gamma1);
    let e_gamma2 = von_neumann_entropy(&gamma2);
    let eq1 = superposition_entropy(s.phi1().entanglement(), s.psi1().entanglement(), a1)?;
    let eq2 = superposition_entropy(s.phi2().entanglement(), s.psi2().entanglement(), a2)?;
    properties.push((
        property::SUPERPOSITION_ENTROPY,
        (eq1 - e_gamma1).abs() < 1e-10 && (eq2 - e_gamma2).abs() < 1e-10,
    ));

    if oracle.convertible && gamma1.max_abs_diff(&gamma2) > 1e-12 {
        properties.push((property::ENTROPY_MONOTONE, e_gamma1 >= e_gamma2 - 1e-12));
        let status = necessary_condition(&s.to_real(), a1, a2)?;
        properties.push((property::NECESSARY_CONDITION, status != ConditionStatus::Violated));
    }

    properties.push((property::APPENDIX_A1, appendix_a1(s)));
    properties.push((
        property::APPENDIX_A2,
        appendix_a2(&s.xi1, &s.eta1)? && appendix_a2(&s.xi2, &s.eta2)?,
    ));
    if criterion_holds && *alpha2 < Number::one() {
        properties.push((property::APPENDIX_B1, appendix_b1(s, alpha1, alpha2)?));
    }

    properties.push((
        property::GAMMA1_ORDER,
        strict_order_holds(&gamma1_order(regime), &s.xi1, &s.eta1, alpha1)?,
    ));
    if criterion_holds {
        properties.push((
            property::GAMMA2_ORDER,
            strict_order_holds(&gamma2_order(), &s.xi2, &s.eta2, alpha2)?,
        ));
    }

    Ok(PointCheck {
        regime,
        criterion_holds,
        proposition_convertible: verdict.convertible,
        oracle,
        properties,
    })
}

#[derive(Clone, Debug)]
struct Draw {
    scenario: Scenario,
    regime: RegimeTag,
    alpha1: f64,
    alpha2: f64,
}

fn far_from(x: f64, points: &[f64], margin: f64) -> bool {
    points.iter().all(|p| (x - p).abs() > margin)
}

/// One attempt at an admissible sample; `None` means redraw.
fn try_draw(rng: &mut ChaCha8Rng, cfg: &SweepConfig) -> Option<Draw> {
    let margin = cfg.boundary_margin;
    let mut v: [f64; 4] = std::array::from_fn(|_| 0.5 + 0.5 * rng.gen::<f64>());
    v.sort_by(|a, b| b.total_cmp(a));
    let chain = [1.0, v[0], v[1], v[2], v[3], 0.5];
    if chain.windows(2).any(|w| w[0] - w[1] <= margin) {
        return None;
    }
    let scenario = Scenario::from_f64(v[0], v[1], v[2], v[3]).ok()?;
    let t = thresholds(&scenario);
    let (t_low, t_high, a) = (t.t_low.to_f64(), t.t_high.to_f64(), t.a.to_f64());
    let (xi1, xi2) = (v[0], v[2]);
    if !far_from(xi2, &[t_low, t_high], margin) {
        return None;
    }

    let candidates: Vec<_> = classify_regimes(&scenario)
        .into_iter()
        .filter(|r| cfg.regime_filter.is_none_or(|f| f == r.tag))
        .filter(|r| r.alpha1_interval.width() > 4.0 * margin)
        .collect();
    if candidates.is_empty() {
        return None;
    }
    let regime = &candidates[rng.gen_range(0..candidates.len())];
    let iv = &regime.alpha1_interval;
    let (lo, hi) = (iv.lo.to_f64() + margin, iv.hi.to_f64() - margin);
    let alpha1 = lo + (hi - lo) * rng.gen::<f64>();
    if !far_from(alpha1, &[a, t_low, xi2, xi2 / xi1, 0.5, 1.0], margin) {
        return None;
    }

    let min = min_alpha2(&scenario, &Number::real(alpha1)).ok()?.value.to_f64();
    let spread: f64 = rng.gen_range(0.85..1.0);
    let floor = (min * spread).max(0.5);
    if floor >= 1.0 - margin {
        return None;
    }
    let alpha2 = floor + (1.0 - floor) * rng.gen::<f64>();
    if !far_from(alpha2, &[0.5, 1.0, min], margin) || (alpha1 * xi1 - alpha2 * xi2).abs() <= margin {
        return None;
    }

    Some(Draw {
        scenario,
        regime: regime.tag,
        alpha1,
        alpha2,
    })
}

enum Outcome {
    Exhausted,
    Checked { index: u64, draw: Box<Draw>, check: Box<PointCheck> },
}

fn run_index(cfg: &SweepConfig, index: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(draw) = try_draw(&mut rng, cfg) {
            let check = check_point(
                &draw.scenario,
                draw.regime,
                &Number::real(draw.alpha1),
                &Number::real(draw.alpha2),
            )?;
            return Ok(Outcome::Checked { index, draw: Box::new(draw), check: Box::new(check) });
        }
    }
    Ok(Outcome::Exhausted)
}

/// Deterministic in `(samples, seed, boundary_margin, regime_filter)`:
/// sample `i` uses its own ChaCha stream, so thread scheduling cannot
/// change the report.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    let outcomes = (0..cfg.samples)
        .into_par_iter()
        .map(|i| run_index(cfg, i))
        .collect::<Result<Vec<_>>>()?;

    let mut report = SweepReport {
        schema: 1,
        samples: cfg.samples,
        seed: cfg.seed,
        boundary_margin: cfg.boundary_margin,
        regime_filter: cfg.regime_filter,
        total: 0,
        agreements: 0,
        mismatches: 0,
        exhausted: 0,
        per_regime: BTreeMap::new(),
        properties: property::ALL
            .iter()
            .map(|name| (name.to_string(), PropertyTally::default()))
            .collect(),
        mismatch_records: Vec::new(),
    };

    for outcome in outcomes {
        let (index, draw, check) = match outcome {
            Outcome::Exhausted => {
                report.exhausted += 1;
                continue;
            }
            Outcome::Checked { index, draw, check } => (index, *draw, *check),
        };
        report.total += 1;
        let counts = report.per_regime.entry(check.regime).or_default();
        counts.total += 1;
        counts.criterion_holds += u64::from(check.criterion_holds);
        for (name, passed) in &check.properties {
            let tally = report.properties.get_mut(*name).expect("known property");
            tally.checked += 1;
            tally.failed += u64::from(!passed);
        }
        if check.agrees() {
            report.agreements += 1;
        } else {
            report.mismatches += 1;
            counts.mismatches += 1;
            let s = &draw.scenario;
            report.mismatch_records.push(MismatchRecord {
                index,
                scenario: [s.xi1.to_f64(), s.eta1.to_f64(), s.xi2.to_f64(), s.eta2.to_f64()],
                regime: check.regime,
                alpha1: draw.alpha1,
                alpha2: draw.alpha2,
                proposition_convertible: check.proposition_convertible,
                oracle_convertible: check.oracle.convertible,
                oracle_first_failure: check.oracle.first_failure,
                oracle_margins: check.oracle.margins.iter().map(Number::to_f64).collect(),
            });
        }
    }

    if let Some(path) = &cfg.output_path {
        report
            .write_json(path)
            .map_err(|e| Error::ConfigInvalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Number {
        Number::ratio(n, d)
    }

    fn reference() -> Scenario {
        Scenario::new(q(9, 10), q(4, 5), q(7, 10), q(3, 5)).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let s = reference();
        let first = brute_force_convertible(&s, &q(3, 5), &q(17, 20)).unwrap();
        assert!(!first.convertible);
        assert_eq!(first.first_failure, Some(2));

        let second = brute_force_convertible(&s, &q(3, 4), &q(49, 50)).unwrap();
        assert!(second.convertible);

        let pure = brute_force_convertible(&s, &Number::one(), &Number::one()).unwrap();
        assert!(!pure.convertible);
        assert_eq!(pure.first_failure, Some(1));

        assert!(brute_force_convertible(&s, &q(3, 2), &q(1, 2)).is_err());
    }

    #[test]
    fn oracle_exact_and_real_agree() {
        let mut checked = 0;
        for xn in (52..100).step_by(7) {
            for en in (51..xn).step_by(5) {
                for x2 in (51..en).step_by(4) {
                    for e2 in (51..x2).step_by(3) {
                        let s = Scenario::new(q(xn, 100), q(en, 100), q(x2, 100), q(e2, 100)).unwrap();
                        for a1 in (5..100).step_by(13) {
                            for a2 in (3..100).step_by(11) {
                                let (a1, a2) = (q(a1, 100), q(a2, 100));
                                let exact = brute_force_convertible(&s, &a1, &a2).unwrap();
                                // skip nonzero margins inside the float tolerance band
                                if exact.margins.iter().any(|m| !m.is_zero() && m.to_f64().abs() < 1e-9) {
                                    continue;
                                }
                                let real = brute_force_convertible(&s.to_real(), &a1.to_real(), &a2.to_real()).unwrap();
                                assert_eq!(exact.convertible, real.convertible);
                                assert_eq!(exact.first_failure, real.first_failure);
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn reference_point_through_harness() {
        let check = check_point(&reference(), RegimeTag::R2, &q(3, 4), &q(49, 50)).unwrap();
        assert!(check.agrees());
        assert!(check.criterion_holds);
        assert!(check.properties.iter().all(|(_, ok)| *ok), "{:?}", check.properties);
    }

    #[test]
    fn harness_flags_the_r1_counterexample() {
        let s = Scenario::new(q(81, 100), q(4, 5), q(79, 100), q(51, 100)).unwrap();
        let check = check_point(&s, RegimeTag::R1, &q(81, 100), &q(17, 20)).unwrap();
        assert_eq!(check.proposition_convertible, Some(true));
        assert!(!check.oracle.convertible);
        assert_eq!(check.oracle.first_failure, Some(3));
        assert!(check.properties.contains(&(property::APPENDIX_B1, false)));
    }

    #[test]
    fn config_validation() {
        let bad = SweepConfig { samples: 0, ..SweepConfig::default() };
        assert!(matches!(run_sweep(&bad), Err(Error::ConfigInvalid(_))));
        let bad_margin = SweepConfig { boundary_margin: 0.0, ..SweepConfig::default() };
        assert!(bad_margin.validate().is_err());
    }

    #[test]
    fn sweep_is_reproducible() {
        let cfg = SweepConfig { samples: 2_000, seed: 9, ..SweepConfig::default() };
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total, a.agreements + a.mismatches);
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = single.install(|| run_sweep(&cfg).unwrap());
        assert_eq!(a.to_json(), c.to_json());
    }

    #[test]
    fn sweep_respects_regime_filter() {
        for tag in RegimeTag::ALL {
            let cfg = SweepConfig {
                samples: 500,
                seed: 3,
                regime_filter: Some(tag),
                ..SweepConfig::default()
            };
            let report = run_sweep(&cfg).unwrap();
            assert_eq!(report.exhausted, 0);
            assert_eq!(report.per_regime.keys().copied().collect::<Vec<_>>(), vec![tag]);
            assert_eq!(report.per_regime[&tag].total, 500);
        }
    }

    #[test]
    fn sweep_mixes_both_sides_of_the_criterion() {
        let report = run_sweep(&SweepConfig { samples: 3_000, ..SweepConfig::default() }).unwrap();
        for counts in report.per_regime.values() {
            assert!(counts.criterion_holds > 0);
            assert!(counts.criterion_holds < counts.total);
        }
        assert_eq!(report.per_regime.len(), 3);
    }

    #[test]
    fn report_written_atomically() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.json");
        let cfg = SweepConfig {
            samples: 50,
            output_path: Some(path.clone()),
            ..SweepConfig::default()
        };
        let report = run_sweep(&cfg).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["schema"], 1);
        assert_eq!(parsed["total"], report.total);
        assert!(!dir.path().join("report.json.tmp").exists());
    }
}
