//! `locc` command-line front end.
//!
//! [`run`] parses arguments and returns the exit code together with the
//! complete stdout/stderr text; nothing is printed until a command finishes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::entanglement::{necessary_condition, von_neumann_entropy, ConditionStatus, EntropyCondition};
use crate::error::{Error, Result};
use crate::majorization::prefix_sums;
use crate::number::Number;
use crate::oracle::{brute_force_convertible, run_sweep, SweepConfig, SweepReport, DEFAULT_BOUNDARY_MARGIN};
use crate::propositions::{convertible_iff, evaluate_regimes, min_alpha2, thresholds, Regime, RegimeTag};
use crate::states::{Scenario, SuperpositionWeights};

pub const EXIT_CONVERTIBLE: i32 = 0;
pub const EXIT_NOT_CONVERTIBLE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

const CSV_HELP: &str = "\
CSV columns:
  check         k,gamma1,gamma2,source_prefix,target_prefix,margin,satisfied
  region        alpha2,g,threshold,in_region
  analyze       regime,alpha1,min_alpha2,feasible
  verify-props  kind,name,total,failed   (kind = regime | property)

Numbers are given as p/q (exact) or decimals (floating point).";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "locc",
    version,
    about = "LOCC convertibility of superpositions of bi-orthogonal entangled states",
    after_help = CSV_HELP
)]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "LOCC_DEFAULT_FORMAT", default_value = "human")]
    format: OutputFormat,

    /// Treat every input as a floating-point number, even p/q fractions.
    #[arg(long, global = true)]
    float: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ScenarioArgs {
    #[arg(allow_hyphen_values = true)]
    xi1: String,
    #[arg(allow_hyphen_values = true)]
    eta1: String,
    #[arg(allow_hyphen_values = true)]
    xi2: String,
    #[arg(allow_hyphen_values = true)]
    eta2: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide Γ₁ → Γ₂ for fixed α₁, α₂ (exit 0 convertible, 1 not, 2 bad input).
    Check {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(allow_hyphen_values = true)]
        alpha1: String,
        #[arg(allow_hyphen_values = true)]
        alpha2: String,
    },
    /// Solve the entropy condition E(Γ₂) < E(Γ₁) for α₂.
    Region {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(allow_hyphen_values = true)]
        alpha1: String,
        /// Bisection tolerance for the interval endpoints.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Grid points for the csv curve over [0.0005, 0.9995].
        #[arg(long, default_value_t = 1001)]
        points: usize,
    },
    /// Thresholds, regimes and the minimal α₂ over a grid of α₁.
    Analyze {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Grid subdivisions per α₁ interval.
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Randomized sweep comparing the regime criterion with brute force.
    VerifyProps {
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BOUNDARY_MARGIN)]
        boundary_margin: f64,
        /// Restrict samples to one regime (R1, R2 or R3).
        #[arg(long)]
        regime: Option<RegimeTag>,
        /// Also write the full json report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Default, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { 0 };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(code, text)
            };
        }
    };
    let fmt = args.format;
    let result = match args.command {
        Command::Check { scenario, alpha1, alpha2 } => {
            parse_scenario(&scenario, args.float).and_then(|s| {
                let a1 = parse_number("alpha1", &alpha1, args.float)?;
                let a2 = parse_number("alpha2", &alpha2, args.float)?;
                cmd_check(&s, a1, a2, fmt)
            })
        }
        Command::Region { scenario, alpha1, tol, points } => parse_scenario(&scenario, args.float)
            .and_then(|s| cmd_region(&s, parse_number("alpha1", &alpha1, args.float)?, tol, points, fmt)),
        Command::Analyze { scenario, steps } => {
            parse_scenario(&scenario, args.float).and_then(|s| cmd_analyze(&s, steps, fmt))
        }
        Command::VerifyProps { samples, seed, boundary_margin, regime, output } => {
            let cfg = SweepConfig {
                samples,
                seed,
                boundary_margin,
                regime_filter: regime,
                output_path: output,
            };
            cmd_verify_props(&cfg, fmt)
        }
    };
    result.unwrap_or_else(Outcome::input_error)
}

fn parse_number(name: &str, raw: &str, float: bool) -> Result<Number> {
    let n: Number = raw.parse().map_err(|e: Error| match e {
        Error::Parse { input, reason } => Error::Parse {
            input: format!("{name}={input}"),
            reason,
        },
        other => other,
    })?;
    Ok(if float { n.to_real() } else { n })
}

fn parse_scenario(args: &ScenarioArgs, float: bool) -> Result<Scenario> {
    Scenario::new(
        parse_number("xi1", &args.xi1, float)?,
        parse_number("eta1", &args.eta1, float)?,
        parse_number("xi2", &args.xi2, float)?,
        parse_number("eta2", &args.eta2, float)?,
    )
}

fn join(values: &[Number]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.join(",");
    line.push('\n');
    line
}

fn json_out(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("valid json");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct RegimeView {
    tag: RegimeTag,
    applicable: bool,
    xi2_range: String,
    alpha1_interval: String,
    alpha1_interval_empty: bool,
    /// No `ξ₂` in `(η₂, η₁)` can fall in this regime.
    unreachable: bool,
}

impl RegimeView {
    fn new(r: &Regime, s: &Scenario) -> Self {
        let range = &r.xi2_range;
        let unreachable = range.lo.value_cmp(&s.eta1).is_ge() || range.hi.value_cmp(&s.eta2).is_le();
        RegimeView {
            tag: r.tag,
            applicable: r.applicable,
            xi2_range: range.to_string(),
            alpha1_interval: r.alpha1_interval.to_string(),
            alpha1_interval_empty: r.alpha1_interval.is_empty(),
            unreachable,
        }
    }
}

fn scenario_json(s: &Scenario) -> serde_json::Value {
    json!({ "xi1": s.xi1, "eta1": s.eta1, "xi2": s.xi2, "eta2": s.eta2 })
}

fn status_label(status: ConditionStatus) -> &'static str {
    match status {
        ConditionStatus::Satisfied => "satisfied",
        ConditionStatus::Violated => "violated",
        ConditionStatus::Boundary => "boundary",
    }
}

fn in_open_unit(x: &Number) -> bool {
    *x > Number::zero() && *x < Number::one()
}

fn cmd_check(s: &Scenario, alpha1: Number, alpha2: Number, fmt: OutputFormat) -> Result<Outcome> {
    let weights = SuperpositionWeights::new(alpha1, alpha2)?;
    let (alpha1, alpha2) = (&weights.alpha1, &weights.alpha2);
    let gamma1 = s.gamma1(alpha1)?;
    let gamma2 = s.gamma2(alpha2)?;
    let oracle = brute_force_convertible(s, alpha1, alpha2)?;
    let source_sums = prefix_sums(&gamma1);
    let target_sums = prefix_sums(&gamma2);
    let t = thresholds(s);
    let regimes: Vec<RegimeView> = evaluate_regimes(s)
        .iter()
        .filter(|r| r.applicable)
        .map(|r| RegimeView::new(r, s))
        .collect();
    let open = in_open_unit(alpha1) && in_open_unit(alpha2);
    let proposition = if open { Some(convertible_iff(s, alpha1, alpha2)?) } else { None };
    let (a1, a2) = (alpha1.to_f64(), alpha2.to_f64());
    let necessary = if open { Some(necessary_condition(&s.to_real(), a1, a2)?) } else { None };
    let entropies = [
        ("phi1", s.phi1().entanglement()),
        ("psi1", s.psi1().entanglement()),
        ("phi2", s.phi2().entanglement()),
        ("psi2", s.psi2().entanglement()),
        ("gamma1", von_neumann_entropy(&gamma1)),
        ("gamma2", von_neumann_entropy(&gamma2)),
    ];
    let code = if oracle.convertible { EXIT_CONVERTIBLE } else { EXIT_NOT_CONVERTIBLE };

    let out = match fmt {
        OutputFormat::Json => json_out(json!({
            "schema": 1,
            "command": "check",
            "inputs": {
                "xi1": s.xi1, "eta1": s.eta1, "xi2": s.xi2, "eta2": s.eta2,
                "alpha1": alpha1, "alpha2": alpha2,
            },
            "gamma1": gamma1,
            "gamma2": gamma2,
            "prefix_sums": { "source": source_sums, "target": target_sums },
            "oracle": oracle,
            "thresholds": t,
            "regimes": regimes,
            "proposition": proposition,
            "entropies": entropies.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "necessary_condition": necessary.map(status_label),
        })),
        OutputFormat::Csv => {
            let mut out = csv_line(&[
                "k", "gamma1", "gamma2", "source_prefix", "target_prefix", "margin", "satisfied",
            ].map(String::from));
            for k in 0..oracle.margins.len() {
                let margin = &oracle.margins[k];
                out += &csv_line(&[
                    (k + 1).to_string(),
                    gamma1.entries()[k].to_string(),
                    gamma2.entries()[k].to_string(),
                    source_sums[k].to_string(),
                    target_sums[k].to_string(),
                    margin.to_string(),
                    margin.ge_tolerant(&Number::zero()).to_string(),
                ]);
            }
            out
        }
        OutputFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "scenario   xi1={} eta1={} xi2={} eta2={}", s.xi1, s.eta1, s.xi2, s.eta2);
            let _ = writeln!(out, "weights    alpha1={alpha1} alpha2={alpha2}");
            let _ = writeln!(out, "gamma1     {}", join(gamma1.entries()));
            let _ = writeln!(out, "gamma2     {}", join(gamma2.entries()));
            let _ = writeln!(out, "majorization (target prefix - source prefix):");
            for (k, m) in oracle.margins.iter().enumerate() {
                let ok = if m.ge_tolerant(&Number::zero()) { "ok" } else { "FAILS" };
                let _ = writeln!(out, "  k={}  {} vs {}  margin {}  {}", k + 1, source_sums[k], target_sums[k], m, ok);
            }
            match oracle.first_failure {
                None => {
                    let _ = writeln!(out, "oracle     convertible");
                }
                Some(k) => {
                    let _ = writeln!(out, "oracle     not convertible (first failure at k={k})");
                }
            }
            let _ = writeln!(out, "thresholds T_low={} T_high={} A={}", t.t_low, t.t_high, t.a);
            if regimes.is_empty() {
                let _ = writeln!(out, "regimes    none applicable");
            }
            for r in &regimes {
                let _ = writeln!(out, "regime     {} with alpha1 in {}", r.tag, r.alpha1_interval);
            }
            match &proposition {
                Some(p) if p.hypotheses_met => {
                    let verdict = if p.convertible == Some(true) { "convertible" } else { "not convertible" };
                    let _ = writeln!(out, "criterion  {verdict} ({}); min alpha2 = {}", p.reason, p.min_alpha2.value);
                }
                Some(p) => {
                    let _ = writeln!(out, "criterion  hypotheses not met: {}", p.reason);
                }
                None => {
                    let _ = writeln!(out, "criterion  not evaluated: alphas must lie in (0, 1)");
                }
            }
            let _ = write!(out, "entropy   ");
            for (k, v) in &entropies {
                let _ = write!(out, " E({k})={v:.5}");
            }
            out.push('\n');
            match necessary {
                Some(status) => {
                    let _ = writeln!(out, "E(gamma2) < E(gamma1): {}", status_label(status));
                }
                None => {
                    let _ = writeln!(out, "E(gamma2) < E(gamma1): not evaluated");
                }
            }
            out
        }
    };
    Ok(Outcome::ok(code, out))
}

/// `points` grid values evenly spaced over `[0.0005, 0.9995]`.
pub fn region_grid(points: usize) -> Vec<f64> {
    let (lo, hi) = (0.0005, 0.9995);
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

fn cmd_region(s: &Scenario, alpha1: Number, tol: f64, points: usize, fmt: OutputFormat) -> Result<Outcome> {
    if points < 2 {
        return Err(Error::out_of_range("points", points, "points >= 2"));
    }
    let cond = EntropyCondition::for_scenario(&s.to_real(), alpha1.to_f64())?;
    let region = cond.region(tol)?;
    let out = match fmt {
        OutputFormat::Json => json_out(json!({
            "schema": 1,
            "command": "region",
            "inputs": { "scenario": scenario_json(s), "alpha1": alpha1, "tol": tol },
            "slope": cond.slope,
            "threshold": cond.threshold,
            "maximizer": cond.maximizer(),
            "intervals": region.intervals,
            "root_tolerance": region.root_tolerance,
        })),
        OutputFormat::Csv => {
            let mut out = csv_line(&["alpha2", "g", "threshold", "in_region"].map(String::from));
            for x in region_grid(points) {
                out += &csv_line(&[
                    x.to_string(),
                    cond.g(x).to_string(),
                    cond.threshold.to_string(),
                    region.contains(x).to_string(),
                ]);
            }
            out
        }
        OutputFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "condition  f(alpha2) = h2(alpha2) {:+.5} alpha2 < {:.5}",
                cond.slope, cond.threshold
            );
            let _ = writeln!(out, "maximizer  alpha2* = {:.6}", cond.maximizer());
            if region.is_empty() {
                let _ = writeln!(out, "region     empty");
            }
            for (lo, hi) in &region.intervals {
                let _ = writeln!(out, "interval   ({lo:.6}, {hi:.6})");
            }
            out
        }
    };
    Ok(Outcome::ok(0, out))
}

/// `(alpha1, min_alpha2, feasible)`.
type GridRow = (Number, Number, bool);

fn cmd_analyze(s: &Scenario, steps: usize, fmt: OutputFormat) -> Result<Outcome> {
    if steps < 1 {
        return Err(Error::out_of_range("steps", steps, "steps >= 1"));
    }
    let t = thresholds(s);
    let regimes = evaluate_regimes(s);
    let mut notices = Vec::new();
    let mut grids: Vec<(RegimeTag, Vec<GridRow>)> = Vec::new();
    for r in &regimes {
        let view = RegimeView::new(r, s);
        if view.unreachable {
            notices.push(format!(
                "{}: empty regime, xi2 range {} does not meet (eta2, eta1) = ({}, {})",
                r.tag, view.xi2_range, s.eta2, s.eta1
            ));
        }
        if !r.applicable {
            continue;
        }
        if r.alpha1_interval.is_empty() {
            notices.push(format!("{}: empty alpha1 interval {}", r.tag, r.alpha1_interval));
            continue;
        }
        let iv = &r.alpha1_interval;
        let mut grid = Vec::new();
        for i in 0..=steps {
            if (i == 0 && !iv.lo_closed) || (i == steps && !iv.hi_closed) {
                continue;
            }
            let frac = Number::ratio(i as i64, steps as i64).in_mode_of(&iv.lo).in_mode_of(&iv.hi);
            let alpha1 = &iv.lo + (&iv.hi - &iv.lo) * frac;
            if !in_open_unit(&alpha1) {
                continue;
            }
            let m = min_alpha2(s, &alpha1)?;
            grid.push((alpha1, m.value, m.feasible));
        }
        grids.push((r.tag, grid));
    }
    if !regimes.iter().any(|r| r.applicable) {
        notices.push("no regime applies to this xi2".to_string());
    }

    let out = match fmt {
        OutputFormat::Json => {
            let regime_json: Vec<_> = regimes
                .iter()
                .map(|r| {
                    let grid = grids
                        .iter()
                        .find(|(tag, _)| *tag == r.tag)
                        .map(|(_, g)| {
                            g.iter()
                                .map(|(a, m, f)| json!({ "alpha1": a, "min_alpha2": m, "feasible": f }))
                                .collect::<Vec<_>>()
                        })
                        .unwrap_or_default();
                    json!({ "regime": RegimeView::new(r, s), "grid": grid })
                })
                .collect();
            json_out(json!({
                "schema": 1,
                "command": "analyze",
                "inputs": scenario_json(s),
                "thresholds": t,
                "regimes": regime_json,
                "notices": notices,
            }))
        }
        OutputFormat::Csv => {
            let mut out = csv_line(&["regime", "alpha1", "min_alpha2", "feasible"].map(String::from));
            for (tag, grid) in &grids {
                for (a, m, f) in grid {
                    out += &csv_line(&[tag.to_string(), a.to_string(), m.to_string(), f.to_string()]);
                }
            }
            out
        }
        OutputFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(out, "scenario   xi1={} eta1={} xi2={} eta2={}", s.xi1, s.eta1, s.xi2, s.eta2);
            let _ = writeln!(
                out,
                "thresholds T_high={} (~{:.4})  T_low={} (~{:.4})  A={} (~{:.4})",
                t.t_high,
                t.t_high.to_f64(),
                t.t_low,
                t.t_low.to_f64(),
                t.a,
                t.a.to_f64()
            );
            for r in regimes.iter().filter(|r| r.applicable) {
                let _ = writeln!(out, "regime     {} applies: xi2 in {}, alpha1 in {}", r.tag, r.xi2_range, r.alpha1_interval);
            }
            for n in &notices {
                let _ = writeln!(out, "notice     {n}");
            }
            for (tag, grid) in &grids {
                let _ = writeln!(out, "{tag} grid   alpha1 -> min alpha2");
                for (a, m, f) in grid {
                    let flag = if *f { "" } else { "  (infeasible: exceeds 1)" };
                    let _ = writeln!(out, "  {a}  ->  {m}{flag}");
                }
            }
            out
        }
    };
    Ok(Outcome::ok(0, out))
}

fn report_csv(report: &SweepReport) -> String {
    let mut out = csv_line(&["kind", "name", "total", "failed"].map(String::from));
    for (tag, counts) in &report.per_regime {
        out += &csv_line(&[
            "regime".into(),
            tag.to_string(),
            counts.total.to_string(),
            counts.mismatches.to_string(),
        ]);
    }
    for (name, tally) in &report.properties {
        out += &csv_line(&[
            "property".into(),
            name.clone(),
            tally.checked.to_string(),
            tally.failed.to_string(),
        ]);
    }
    out
}

fn cmd_verify_props(cfg: &SweepConfig, fmt: OutputFormat) -> Result<Outcome> {
    let report = run_sweep(cfg)?;
    let code = if report.passed() { 0 } else { 1 };
    let out = match fmt {
        OutputFormat::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        OutputFormat::Csv => report_csv(&report),
        OutputFormat::Human => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "sweep      samples={} seed={} margin={:e} regime={}",
                report.samples,
                report.seed,
                report.boundary_margin,
                report.regime_filter.map_or("any".to_string(), |t| t.to_string())
            );
            let _ = writeln!(
                out,
                "result     total={} agreements={} mismatches={} exhausted={}",
                report.total, report.agreements, report.mismatches, report.exhausted
            );
            for (tag, c) in &report.per_regime {
                let _ = writeln!(
                    out,
                    "  {tag}  total={} mismatches={} criterion_holds={}",
                    c.total, c.mismatches, c.criterion_holds
                );
            }
            for (name, t) in &report.properties {
                let _ = writeln!(out, "  property {name:<36} checked={:<7} failed={}", t.checked, t.failed);
            }
            for m in report.mismatch_records.iter().take(5) {
                let _ = writeln!(
                    out,
                    "  mismatch #{} {} scenario={:?} alpha1={} alpha2={} oracle fails at k={:?}",
                    m.index, m.regime, m.scenario, m.alpha1, m.alpha2, m.oracle_first_failure
                );
            }
            if report.mismatch_records.len() > 5 {
                let _ = writeln!(out, "  ... {} more mismatches", report.mismatch_records.len() - 5);
            }
            let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
            out
        }
    };
    Ok(Outcome::ok(code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("locc").chain(args.iter().copied()))
    }

    #[test]
    fn grid_contract() {
        let g = region_grid(1001);
        assert_eq!(g.len(), 1001);
        assert_eq!(g[0], 0.0005);
        assert!((g[1000] - 0.9995).abs() < 1e-15);
        assert!((g[500] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn check_exit_codes() {
        let yes = run_args(&["--format", "human", "check", "9/10", "4/5", "7/10", "3/5", "3/4", "49/50"]);
        assert_eq!(yes.code, EXIT_CONVERTIBLE, "{}", yes.stderr);
        assert!(yes.stdout.contains("27/40, 1/5, 3/40, 1/20"), "{}", yes.stdout);
        assert!(yes.stdout.contains("343/500, 147/500, 3/250, 1/125"));

        let no = run_args(&["--format", "human", "check", "9/10", "4/5", "7/10", "3/5", "3/5", "17/20"]);
        assert_eq!(no.code, EXIT_NOT_CONVERTIBLE);
        assert!(no.stdout.contains("first failure at k=2"));

        let bad = run_args(&["check", "9/10", "4/5", "4/5", "3/5", "3/4", "49/50"]);
        assert_eq!(bad.code, EXIT_INPUT_ERROR);
        assert!(bad.stderr.contains("xi2 < eta1"));

        let garbage = run_args(&["check", "9/10", "4/5", "7/10", "3/5", "x", "49/50"]);
        assert_eq!(garbage.code, EXIT_INPUT_ERROR);
        let range = run_args(&["check", "9/10", "4/5", "7/10", "3/5", "3/2", "49/50"]);
        assert_eq!(range.code, EXIT_INPUT_ERROR);
    }

    #[test]
    fn region_rejects_alpha1_zero() {
        let out = run_args(&["region", "9/10", "4/5", "7/10", "3/5", "0"]);
        assert_eq!(out.code, EXIT_INPUT_ERROR);
    }

    #[test]
    fn verify_props_rejects_zero_samples() {
        let out = run_args(&["verify-props", "--samples", "0"]);
        assert_eq!(out.code, EXIT_INPUT_ERROR);
        let flag = run_args(&["verify-props", "--regime", "R4"]);
        assert_eq!(flag.code, EXIT_INPUT_ERROR);
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("CSV columns"));
    }
}
