use std::fmt;

use serde::Serialize;
use tritcodes::distance::DEFAULT_BUDGET;
use tritcodes::spectrum::DIRECT_MAX_DEGREE;
use tritcodes::{
    build_code, conclude_distance, direct_enumerator, lemma_check, make_field,
    spectral_enumerator, weight_value_set, CodeSummary, DistanceOptions, DistanceReport, Epsilon,
    FieldCtx, LemmaReport, TernaryPoly, WeightEnumerator,
};

use crate::fixtures::{self, Fixture};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Spectral,
    Direct,
    Both,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: u32,
    pub modulus: Option<TernaryPoly>,
    pub method: Method,
    pub workers: usize,
    pub budget: u128,
}

impl RunConfig {
    pub fn new(m: u32) -> Self {
        RunConfig {
            m,
            modulus: None,
            method: Method::Spectral,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            budget: DEFAULT_BUDGET,
        }
    }
}

/// Exit code 2 for bad input, 1 for failed checks or internal errors.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) | CliError::Internal(msg) => f.write_str(msg),
        }
    }
}

impl From<tritcodes::Error> for CliError {
    fn from(e: tritcodes::Error) -> Self {
        let msg = format!("{}: {e}", e.kind());
        if e.is_input_error() {
            CliError::Invalid(msg)
        } else {
            CliError::Internal(msg)
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Internal(format!("{e:#}"))
    }
}

/// Serialized document plus the exit code it should produce.
pub struct Output {
    pub json: String,
    pub exit: i32,
}

impl Output {
    fn new<T: Serialize>(doc: &T, ok: bool) -> Result<Self, CliError> {
        let mut json = serde_json::to_string_pretty(doc)
            .map_err(|e| CliError::Internal(e.to_string()))?;
        json.push('\n');
        Ok(Output { json, exit: if ok { 0 } else { 1 } })
    }
}

fn field(cfg: &RunConfig) -> Result<FieldCtx, CliError> {
    Ok(make_field(cfg.m, cfg.modulus.as_ref())?)
}

fn check_method(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.method != Method::Spectral && cfg.m > DIRECT_MAX_DEGREE {
        return Err(CliError::Invalid(format!(
            "--method direct and --method both need m <= {DIRECT_MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// Fixture for this run, only when it was built from the same modulus.
fn matching_fixture(cfg: &RunConfig, ctx: &FieldCtx) -> Result<Option<Fixture>, CliError> {
    Ok(fixtures::load(cfg.m)?.filter(|f| f.modulus == *ctx.modulus()))
}

pub fn cmd_construct(cfg: &RunConfig) -> Result<Output, CliError> {
    let ctx = field(cfg)?;
    let code = build_code(&ctx)?;
    Output::new(&code.summary(), true)
}

fn distance_report(
    cfg: &RunConfig,
    ctx: &FieldCtx,
    dual: Option<WeightEnumerator>,
) -> Result<DistanceReport, CliError> {
    let code = build_code(ctx)?;
    let opts = DistanceOptions { budget: Some(cfg.budget), dual_enumerator: dual };
    Ok(conclude_distance(&code, &opts)?)
}

pub fn cmd_verify_distance(cfg: &RunConfig) -> Result<Output, CliError> {
    let ctx = field(cfg)?;
    let dual = spectral_enumerator(&ctx)?;
    let report = distance_report(cfg, &ctx, Some(dual))?;
    let ok = report.d == 4 && report.sphere_packing_ceiling == 4;
    Output::new(&report, ok)
}

#[derive(Serialize)]
struct DualSection {
    method: Method,
    enumerator: WeightEnumerator,
    paths_agree: Option<bool>,
}

fn dual_section(cfg: &RunConfig, ctx: &FieldCtx) -> Result<DualSection, CliError> {
    check_method(cfg)?;
    let (enumerator, paths_agree) = match cfg.method {
        Method::Spectral => (spectral_enumerator(ctx)?, None),
        Method::Direct => (direct_enumerator(ctx)?, None),
        Method::Both => {
            let direct = direct_enumerator(ctx)?;
            let spectral = spectral_enumerator(ctx)?;
            let agree = direct == spectral;
            (spectral, Some(agree))
        }
    };
    Ok(DualSection { method: cfg.method, enumerator, paths_agree })
}

#[derive(Serialize)]
struct Check {
    name: &'static str,
    passed: bool,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool) {
        self.0.push(Check { name, passed });
    }

    fn mismatch(&self) -> Option<String> {
        let failed: Vec<_> = self.0.iter().filter(|c| !c.passed).map(|c| c.name).collect();
        (!failed.is_empty()).then(|| failed.join(","))
    }
}

fn enumerator_checks(checks: &mut Checks, m: u32, e: &WeightEnumerator) {
    let n = 3u64.pow(m) - 1;
    let total = 3u64.pow(2 * m);
    let allowed = weight_value_set(m);
    checks.push("enumerator_total", e.total().to_string() == total.to_string());
    checks.push("zero_word", e.count(0).to_string() == "1");
    checks.push("weights_in_value_set", e.support().iter().all(|&w| allowed.contains(&(w as u64))));
    let moment = u128::from(n) * 2 * 3u128.pow(2 * m - 1);
    checks.push("first_moment", e.first_moment().to_string() == moment.to_string());
    let mid = 2 * 3usize.pow(m - 1);
    let divisible = e.iter().all(|(w, c)| {
        let mut c = c.clone();
        if w == 0 {
            return true;
        }
        if w == mid {
            c -= 2 * n;
        }
        (c % n).to_string() == "0"
    });
    checks.push("class_counts_divisible", divisible);
}

#[derive(Serialize)]
struct DualOutput {
    m: u32,
    dual: DualSection,
    fixture: &'static str,
    checks: Vec<Check>,
    mismatch: Option<String>,
}

fn fixture_status(fixture: &Option<Fixture>, matched: bool) -> &'static str {
    match (fixture, matched) {
        (None, _) => "absent",
        (Some(_), true) => "matched",
        (Some(_), false) => "mismatched",
    }
}

pub fn cmd_dual_spectrum(cfg: &RunConfig) -> Result<Output, CliError> {
    check_method(cfg)?;
    let ctx = field(cfg)?;
    let dual = dual_section(cfg, &ctx)?;
    let mut checks = Checks::default();
    enumerator_checks(&mut checks, cfg.m, &dual.enumerator);
    if let Some(agree) = dual.paths_agree {
        checks.push("paths_agree", agree);
    }
    let fixture = matching_fixture(cfg, &ctx)?;
    let mut matched = true;
    if let Some(f) = &fixture {
        matched = f.dual_enumerator == dual.enumerator;
        checks.push("enumerator_fixture", matched);
    }
    let mismatch = checks.mismatch();
    let doc = DualOutput {
        m: cfg.m,
        dual,
        fixture: fixture_status(&fixture, matched),
        checks: checks.0,
        mismatch: mismatch.clone(),
    };
    Output::new(&doc, mismatch.is_none())
}

fn lemma_reports(ctx: &FieldCtx) -> Vec<LemmaReport> {
    Epsilon::ALL.iter().map(|&e| lemma_check(ctx, e)).collect()
}

pub fn cmd_lemma_check(cfg: &RunConfig) -> Result<Output, CliError> {
    let ctx = field(cfg)?;
    let reports = lemma_reports(&ctx);
    let ok = reports.iter().all(|r| r.is_empty());
    Output::new(&reports, ok)
}

#[derive(Serialize)]
struct Report {
    m: u32,
    code: CodeSummary,
    distance: DistanceReport,
    lemma: Vec<LemmaReport>,
    dual: DualSection,
    fixture: &'static str,
    checks: Vec<Check>,
    mismatch: Option<String>,
}

#[derive(Serialize)]
struct FailedReport {
    m: u32,
    error: String,
    mismatch: &'static str,
}

pub fn cmd_report(cfg: &RunConfig) -> Result<Output, CliError> {
    check_method(cfg)?;
    let ctx = field(cfg)?;
    let code = build_code(&ctx)?;
    let summary = code.summary();
    let dual = dual_section(cfg, &ctx)?;
    let distance = match distance_report(cfg, &ctx, Some(dual.enumerator.clone())) {
        Ok(d) => d,
        Err(CliError::Internal(error)) => {
            return Output::new(&FailedReport { m: cfg.m, error, mismatch: "distance" }, false)
        }
        Err(e) => return Err(e),
    };
    let lemma = lemma_reports(&ctx);

    let mut checks = Checks::default();
    let m = cfg.m as usize;
    checks.push("parameters", summary.k == summary.n - 2 * m);
    checks.push("d", distance.d == 4 && distance.sphere_packing_ceiling == 4);
    checks.push("lemma", lemma.iter().all(|r| r.is_empty()));
    enumerator_checks(&mut checks, cfg.m, &dual.enumerator);
    if let Some(agree) = dual.paths_agree {
        checks.push("paths_agree", agree);
    }
    let fixture = matching_fixture(cfg, &ctx)?;
    let mut matched = true;
    if let Some(f) = &fixture {
        let gen_ok = f.generator == summary.generator;
        let params_ok = (f.n, f.k, f.d) == (summary.n, summary.k, distance.d);
        let enum_ok = f.dual_enumerator == dual.enumerator;
        checks.push("generator_fixture", gen_ok);
        checks.push("parameters_fixture", params_ok);
        checks.push("enumerator_fixture", enum_ok);
        matched = gen_ok && params_ok && enum_ok;
    }
    let mismatch = checks.mismatch();
    let doc = Report {
        m: cfg.m,
        code: summary,
        distance,
        lemma,
        dual,
        fixture: fixture_status(&fixture, matched),
        checks: checks.0,
        mismatch: mismatch.clone(),
    };
    Output::new(&doc, mismatch.is_none())
}
