//! Acceptance criteria. Runs without the libtest harness so that every
//! `ACn [PASS]` / `ACn [FAIL]` line is printed; exits non-zero if any fails.

use std::sync::OnceLock;

use locc::entanglement::{
    alpha2_region, binary_entropy, superposition_entropy, von_neumann_entropy, EntropyCondition,
};
use locc::majorization::majorizes;
use locc::oracle::{brute_force_convertible, property, run_sweep, SweepConfig, SweepReport};
use locc::propositions::{
    appendix_a1, appendix_a2, appendix_b1, classify_regimes, convertible_iff, gamma1_order, min_alpha2,
    thresholds, RegimeTag,
};
use locc::states::{superposition_schmidt, superposition_terms, SchmidtTerm};
use locc::{Number, Scenario};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Number {
    Number::ratio(n, d)
}

fn reference() -> Scenario {
    Scenario::new(q(9, 10), q(4, 5), q(7, 10), q(3, 5)).unwrap()
}

fn verdict(id: &str, title: &str, ok: bool, detail: String) -> bool {
    println!("{id} [{}] {title}: {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn fractions(numers: &[i64], denom: i64) -> Vec<Number> {
    numers.iter().map(|n| q(*n, denom)).collect()
}

/// Four descending uniforms in (1/2, 1) with gaps above `margin`.
fn random_scenario(rng: &mut ChaCha8Rng, margin: f64) -> Scenario {
    loop {
        let mut v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.5..1.0));
        v.sort_by(|a, b| b.total_cmp(a));
        let chain = [1.0, v[0], v[1], v[2], v[3], 0.5];
        if chain.windows(2).all(|w| w[0] - w[1] > margin) {
            return Scenario::from_f64(v[0], v[1], v[2], v[3]).unwrap();
        }
    }
}

fn sweep_42() -> &'static SweepReport {
    static REPORT: OnceLock<SweepReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        run_sweep(&SweepConfig {
            samples: 100_000,
            seed: 42,
            boundary_margin: 1e-9,
            regime_filter: None,
            output_path: None,
        })
        .unwrap()
    })
}

fn ac1_entropy_table() -> bool {
    let expected = [(0.9, 0.4690), (0.8, 0.72192), (0.7, 0.88129), (0.6, 0.97095)];
    let worst = expected
        .iter()
        .map(|&(x, e)| (binary_entropy(x).unwrap() - e).abs())
        .fold(0.0, f64::max);
    verdict("AC1", "entropy table", worst < 5e-5, format!("max deviation {worst:.2e} (tol 5e-5)"))
}

fn ac2_reduced_condition_and_region() -> bool {
    let cond = EntropyCondition::for_scenario(&reference().to_real(), 0.6).unwrap();
    let region = alpha2_region(&reference().to_real(), 0.6, 1e-6).unwrap();
    let ok_constants = (cond.threshold - 0.57017).abs() < 5e-5 && (cond.slope + 0.08966).abs() < 5e-5;
    let ok_region = region.intervals.len() == 2
        && region.intervals[0].0 == 0.0
        && region.intervals[1].1 == 1.0
        && (region.intervals[0].1 - 0.1394).abs() < 1e-3
        && (region.intervals[1].0 - 0.8354).abs() < 1e-3;
    verdict(
        "AC2",
        "f(alpha2) < 0.57017 and its solution set",
        ok_constants && ok_region,
        format!(
            "threshold {:.5}, slope {:.5}, intervals {:?}",
            cond.threshold, cond.slope, region.intervals
        ),
    )
}

fn ac3_first_example_spectra_exact() -> bool {
    let g1 = superposition_schmidt(&q(9, 10), &q(4, 5), &q(3, 5)).unwrap();
    let g2 = superposition_schmidt(&q(7, 10), &q(3, 5), &q(17, 20)).unwrap();
    let m = majorizes(&g1, &g2);
    let ok = g1.entries() == fractions(&[108, 64, 16, 12], 200).as_slice()
        && g2.entries() == fractions(&[119, 51, 18, 12], 200).as_slice()
        && g1.is_exact()
        && g2.is_exact()
        && !m.convertible
        && m.first_failure == Some(2)
        && m.margins[1] == q(-2, 200);
    verdict(
        "AC3",
        "exact spectra and k=2 failure",
        ok,
        format!("first failure {:?}, margin {}", m.first_failure, m.margins[1]),
    )
}

fn ac4_second_example_end_to_end() -> bool {
    let s = reference();
    let t = thresholds(&s);
    let regimes: Vec<RegimeTag> = classify_regimes(&s).iter().map(|r| r.tag).collect();
    let min = min_alpha2(&s, &q(3, 4)).unwrap();
    let g1 = s.gamma1(&q(3, 4)).unwrap();
    let g2 = s.gamma2(&q(49, 50)).unwrap();
    let m = majorizes(&g1, &g2);
    let prop = convertible_iff(&s, &q(3, 4), &q(49, 50)).unwrap();
    let oracle = brute_force_convertible(&s, &q(3, 4), &q(49, 50)).unwrap();
    let ok = t.t_high == q(4, 5)
        && t.t_low == q(2, 3)
        && t.a == q(8, 9)
        && (t.t_low.to_f64() - 0.67).abs() < 5e-3
        && (t.a.to_f64() - 0.89).abs() < 5e-3
        && regimes == vec![RegimeTag::R2]
        && min.value == q(27, 28)
        && (min.value.to_f64() - 0.964).abs() < 5e-4
        && g1.entries() == fractions(&[675, 200, 75, 50], 1000).as_slice()
        && g2.entries() == fractions(&[686, 294, 12, 8], 1000).as_slice()
        && m.convertible
        && m.margins.iter().all(|x| x.ge_tolerant(&Number::zero()))
        && prop.hypotheses_met
        && prop.convertible == Some(true)
        && oracle.convertible;
    verdict(
        "AC4",
        "second worked example",
        ok,
        format!(
            "T_high={} T_low={} A={} regimes={regimes:?} min_alpha2={} prop={:?} oracle={}",
            t.t_high, t.t_low, t.a, min.value, prop.convertible, oracle.convertible
        ),
    )
}

fn ac5_proposition_oracle_equivalence() -> bool {
    let report = sweep_42();
    let per_regime = report
        .per_regime
        .iter()
        .map(|(tag, c)| format!("{tag} {}/{}", c.mismatches, c.total))
        .collect::<Vec<_>>()
        .join(", ");
    let ok = report.total == 100_000 && report.mismatches == 0 && report.per_regime.len() == 3;
    verdict(
        "AC5",
        "proposition vs brute-force equivalence (seed 42, 1e5 samples, margin 1e-9)",
        ok,
        format!("{} mismatches in {} samples ({per_regime})", report.mismatches, report.total),
    )
}

fn ac6_superposition_entropy_equality() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let xi = rng.gen_range(0.5..1.0f64).max(0.5 + 1e-12);
        let eta = rng.gen_range(0.5..1.0f64).max(0.5 + 1e-12);
        let alpha: f64 = rng.gen();
        let spectrum = superposition_schmidt(&xi.into(), &eta.into(), &alpha.into()).unwrap();
        let closed = superposition_entropy(binary_entropy(xi).unwrap(), binary_entropy(eta).unwrap(), alpha).unwrap();
        worst = worst.max((closed - von_neumann_entropy(&spectrum)).abs());
    }
    verdict("AC6", "superposition entropy equality", worst < 1e-10, format!("max |diff| {worst:.2e} over 1e4 samples"))
}

fn ac7_appendix_inequalities() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut a1_fail, mut a2_fail) = (0, 0);
    for _ in 0..100_000 {
        let s = random_scenario(&mut rng, 1e-9);
        a1_fail += usize::from(!appendix_a1(&s));
        a2_fail += usize::from(!appendix_a2(&s.xi2, &s.eta2).unwrap());
        a2_fail += usize::from(!appendix_a2(&s.xi1, &s.eta1).unwrap());
    }

    let (mut b1_checked, mut b1_fail, mut b1_fail_in_regimes, mut in_regimes) = (0, 0, 0, 0);
    while b1_checked < 100_000 {
        let s = random_scenario(&mut rng, 1e-9);
        let alpha1: f64 = rng.gen_range(1e-9..1.0);
        let floor = alpha1 * s.xi1.to_f64() / s.xi2.to_f64();
        if floor >= 1.0 {
            continue;
        }
        let alpha2 = rng.gen_range(floor..1.0);
        let (a1, a2) = (Number::real(alpha1), Number::real(alpha2));
        let Ok(holds) = appendix_b1(&s, &a1, &a2) else { continue };
        b1_checked += 1;
        b1_fail += usize::from(!holds);
        let in_r12 = classify_regimes(&s)
            .iter()
            .any(|r| r.tag != RegimeTag::R3 && r.alpha1_interval.contains(&a1));
        if in_r12 {
            in_regimes += 1;
            b1_fail_in_regimes += usize::from(!holds);
        }
    }
    verdict(
        "AC7",
        "appendix A.1, A.2 and B.1 on 1e5 random inputs each",
        a1_fail == 0 && a2_fail == 0 && b1_fail == 0,
        format!(
            "A.1 failures {a1_fail}, A.2 failures {a2_fail}, B.1 failures {b1_fail}/{b1_checked} \
             ({b1_fail_in_regimes}/{in_regimes} with alpha1 in an R1/R2 interval)"
        ),
    )
}

fn ac8_necessary_condition_soundness() -> bool {
    let report = sweep_42();
    let mono = report.properties[property::ENTROPY_MONOTONE];
    let nec = report.properties[property::NECESSARY_CONDITION];
    let ok = mono.checked > 0 && nec.checked > 0 && mono.failed == 0 && nec.failed == 0;
    verdict(
        "AC8",
        "entropy decrease and the entropy condition never violated on convertible pairs",
        ok,
        format!(
            "monotone {}/{} failed, necessary condition {}/{} violated",
            mono.failed, mono.checked, nec.failed, nec.checked
        ),
    )
}

/// Draws `α₁` in the range of each ordering lemma and checks the sort order.
fn ac9_schmidt_order_lemmas() -> bool {
    let margin = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lines = Vec::new();
    let mut all_ok = true;
    for tag in RegimeTag::ALL {
        let (mut done, mut bad) = (0, 0);
        while done < 10_000 {
            let s = random_scenario(&mut rng, margin);
            let t = thresholds(&s);
            let (t_low, a, xi2) = (t.t_low.to_f64(), t.a.to_f64(), s.xi2.to_f64());
            let (lo, hi) = match tag {
                RegimeTag::R1 => (a, 1.0),
                RegimeTag::R2 if xi2 >= t_low => (xi2, a),
                RegimeTag::R2 => continue,
                RegimeTag::R3 => (xi2.min(t_low), t_low),
            };
            if hi - lo <= 2.0 * margin {
                continue;
            }
            let alpha1 = rng.gen_range(lo + margin..hi - margin);
            let terms = superposition_terms(&s.xi1, &s.eta1, &alpha1.into()).unwrap();
            let labels: Vec<SchmidtTerm> = terms.iter().map(|(l, _)| *l).collect();
            let strict = terms.windows(2).all(|w| w[0].1 > w[1].1);
            bad += usize::from(labels != gamma1_order(tag) || !strict);
            done += 1;
        }
        all_ok &= bad == 0;
        lines.push(format!("{tag} {bad}/{done}"));
    }
    verdict("AC9", "Schmidt-order lemmas", all_ok, format!("order violations {}", lines.join(", ")))
}

fn main() {
    let criteria: [fn() -> bool; 9] = [
        ac1_entropy_table,
        ac2_reduced_condition_and_region,
        ac3_first_example_spectra_exact,
        ac4_second_example_end_to_end,
        ac5_proposition_oracle_equivalence,
        ac6_superposition_entropy_equality,
        ac7_appendix_inequalities,
        ac8_necessary_condition_soundness,
        ac9_schmidt_order_lemmas,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
