//! Batch verification: configured check suites producing ordered reports.

mod algebra;
mod fock_checks;
mod render;
mod vertex;

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::fock::Trunc;
use crate::qring::parse_rational;

pub use render::{emit_report, parse_report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("unknown fault '{0}'")]
    UnknownFault(String),
    #[error("unknown format '{0}'")]
    UnknownFormat(String),
    #[error("malformed report: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Jacobi,
    Iso,
    Singular,
    Dims,
    FockRelations,
    Ope,
    Vanish,
    QuasiComm,
    Weights,
    All,
}

impl Suite {
    /// Every concrete suite, in execution order.
    pub const CONCRETE: [Suite; 9] = [
        Suite::Jacobi,
        Suite::Iso,
        Suite::Singular,
        Suite::Dims,
        Suite::FockRelations,
        Suite::Ope,
        Suite::Vanish,
        Suite::QuasiComm,
        Suite::Weights,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Iso => "iso",
            Suite::Singular => "singular",
            Suite::Dims => "dims",
            Suite::FockRelations => "fock-relations",
            Suite::Ope => "ope",
            Suite::Vanish => "vanish",
            Suite::QuasiComm => "quasi-comm",
            Suite::Weights => "weights",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// Deliberate perturbations. Each one must turn some checks of its suite into
/// failures; a suite that still passes under its fault is testing nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// jacobi: the trigonometric bracket uses `q^s + q^{-s}`.
    TrigCosine,
    /// jacobi: covariant quotients reduce with `q^{2r}` while bracketing with `q^r`.
    ReductionMismatch,
    /// iso: the target character is `σ_r ↦ q^{2r}`.
    CharacterSquare,
    /// singular: the vector `E_{m,n}(-1)^ℓ 1` replaces `E_{m,n}(-1)^{ℓ+1} 1`.
    SingularPower,
    /// dims: the quotient ideal is dropped, so `L = V`.
    DropSingular,
    /// fock-relations: modes are read off as coefficients of `z^{-n-1}`.
    ModeShift,
    /// ope: the pole of the contraction factor is moved by `q`.
    ContractionShift,
    /// vanish: one factor of the coincidence polynomial is omitted.
    DropFactor,
    /// quasi-comm: the shift `r = -(α+β)` is left out of the commutator formula.
    DropShift,
    /// weights: the expected weight uses `q^{-n}` in the numerator.
    WeightSwap,
}

impl Fault {
    pub const ALL: [Fault; 10] = [
        Fault::TrigCosine,
        Fault::ReductionMismatch,
        Fault::CharacterSquare,
        Fault::SingularPower,
        Fault::DropSingular,
        Fault::ModeShift,
        Fault::ContractionShift,
        Fault::DropFactor,
        Fault::DropShift,
        Fault::WeightSwap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::TrigCosine => "trig-cosine",
            Fault::ReductionMismatch => "reduction-mismatch",
            Fault::CharacterSquare => "character-square",
            Fault::SingularPower => "singular-power",
            Fault::DropSingular => "drop-singular",
            Fault::ModeShift => "mode-shift",
            Fault::ContractionShift => "contraction-shift",
            Fault::DropFactor => "drop-factor",
            Fault::DropShift => "drop-shift",
            Fault::WeightSwap => "weight-swap",
        }
    }

    /// The suite whose checks this fault is meant to break.
    pub fn target(self) -> Suite {
        match self {
            Fault::TrigCosine | Fault::ReductionMismatch => Suite::Jacobi,
            Fault::CharacterSquare => Suite::Iso,
            Fault::SingularPower => Suite::Singular,
            Fault::DropSingular => Suite::Dims,
            Fault::ModeShift => Suite::FockRelations,
            Fault::ContractionShift => Suite::Ope,
            Fault::DropFactor => Suite::Vanish,
            Fault::DropShift => Suite::QuasiComm,
            Fault::WeightSwap => Suite::Weights,
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fault {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Fault::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SuiteError::UnknownFault(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(SuiteError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Label box `|α|, |m| <= box` for the isomorphism and `D_q` checks.
    pub r#box: i32,
    /// Label box for the random Jacobi triples.
    pub jacobi_box: i32,
    pub jacobi_triples: usize,
    /// The interval `I = [lo, hi]` of the vacuum-module suites.
    pub interval: (i32, i32),
    pub levels: Vec<u32>,
    pub trunc: Trunc,
    /// Truncation of the two-fold tensor used for the level-two coincidence check.
    pub tensor_trunc: Trunc,
    /// `|α|, |β|` bound of the Fock relation and commutator-formula checks.
    pub fock_alpha_bound: i32,
    /// `|m|, |n|` window of the Fock relation and commutator-formula checks.
    pub fock_window: i32,
    /// `|α|, |β|` bound of the contraction-factor comparison.
    pub ope_alpha_bound: i32,
    pub nilpotency_window: i32,
    /// `|r|` bound of the group-action axiom check.
    pub r_bound: i32,
    /// Modes `j` of the group-action axiom check.
    pub r_modes: (i32, i32),
    /// PBW degree bound of the group-action axiom check.
    pub r_degree: i32,
    pub weight_bound: i32,
    /// Rational specializations of `q` used by rank computations.
    pub q_specs: Vec<String>,
    pub format: Format,
    pub perturb: Option<Fault>,
    /// When false every `elapsed_ms` is 0, which makes reports byte-identical.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 20240601,
            r#box: 3,
            jacobi_box: 4,
            jacobi_triples: 200,
            interval: (0, 3),
            levels: vec![1, 2],
            trunc: Trunc { k: 8, d: 8, n: 6 },
            tensor_trunc: Trunc { k: 4, d: 4, n: 4 },
            fock_alpha_bound: 2,
            fock_window: 2,
            ope_alpha_bound: 3,
            nilpotency_window: 2,
            r_bound: 2,
            r_modes: (-2, 3),
            r_degree: 3,
            weight_bound: 3,
            q_specs: vec!["7/5".into(), "11/7".into()],
            format: Format::Json,
            perturb: None,
            timing: true,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        let bad = |m: String| Err(SuiteError::Config(m));
        if self.r#box < 1 || self.jacobi_box < 1 {
            return bad("label boxes must be at least 1".into());
        }
        if self.jacobi_triples == 0 {
            return bad("need at least one Jacobi triple".into());
        }
        if self.interval.1 <= self.interval.0 {
            return bad(format!(
                "interval {}..{} must contain at least two integers",
                self.interval.0, self.interval.1
            ));
        }
        if self.levels.is_empty() || self.levels.contains(&0) {
            return bad("levels must be a nonempty list of positive integers".into());
        }
        self.trunc
            .validate()
            .and_then(|_| self.tensor_trunc.validate())
            .map_err(|e| SuiteError::Config(e.to_string()))?;
        if self.fock_alpha_bound < 0 || self.fock_window < 0 || self.ope_alpha_bound < 1 {
            return bad("Fock bounds must be nonnegative".into());
        }
        if 2 * self.fock_window > self.trunc.d as i32 {
            return bad(format!(
                "Fock window {} leaves no test vectors at degree bound {}",
                self.fock_window, self.trunc.d
            ));
        }
        if self.nilpotency_window < 0
            || self.r_bound < 0
            || self.r_degree < 0
            || self.weight_bound < 1
        {
            return bad("windows and degree bounds must be nonnegative".into());
        }
        if self.r_modes.1 < self.r_modes.0 {
            return bad("empty mode range for the group-action axiom".into());
        }
        self.q_points().map(|_| ())
    }

    /// The parsed `q` specializations: at least two, distinct, and not in `{0, ±1}`.
    pub fn q_points(&self) -> Result<Vec<BigRational>, SuiteError> {
        if self.q_specs.len() < 2 {
            return Err(SuiteError::Config(
                "rank computations need at least two q specializations".into(),
            ));
        }
        let mut out: Vec<BigRational> = Vec::new();
        for s in &self.q_specs {
            let x = parse_rational(s)
                .ok_or_else(|| SuiteError::Config(format!("'{s}' is not a rational number")))?;
            let one = BigRational::from_integer(1.into());
            if x == BigRational::from_integer(0.into()) || x == one || x == -one {
                return Err(SuiteError::Config(format!(
                    "q = {s} is not a generic point"
                )));
            }
            if out.contains(&x) {
                return Err(SuiteError::Config(format!("q = {s} is listed twice")));
            }
            out.push(x);
        }
        Ok(out)
    }

    fn fault(&self, f: Fault) -> bool {
        self.perturb == Some(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub paper_anchor: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckRecord {
    /// The suite name, i.e. the part of `check_id` before the first `/`.
    pub fn suite(&self) -> &str {
        self.check_id.split('/').next().unwrap_or("")
    }
}

/// Check records ordered by `check_id`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        Self { records }
    }

    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status != Status::Pass)
    }

    pub fn get(&self, check_id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.check_id == check_id)
    }
}

/// What a check found: a witness on failure and any computed values worth
/// reporting, which are merged into the record's parameters.
#[derive(Default)]
pub(crate) struct Verdict {
    pub witness: Option<String>,
    pub details: Map<String, Value>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self::default()
    }

    pub fn from_witness(w: Option<String>) -> Self {
        Self {
            witness: w,
            details: Map::new(),
        }
    }

    pub fn detail(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), v.into());
        self
    }
}

type CheckFn<'a> = Box<dyn FnOnce() -> Result<Verdict, String> + Send + 'a>;

pub(crate) struct Job<'a> {
    id: String,
    anchor: &'static str,
    params: Map<String, Value>,
    run: CheckFn<'a>,
}

impl<'a> Job<'a> {
    pub fn new(
        id: impl Into<String>,
        anchor: &'static str,
        params: Value,
        run: impl FnOnce() -> Result<Verdict, String> + Send + 'a,
    ) -> Self {
        let params = match params {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Self {
            id: id.into(),
            anchor,
            params,
            run: Box::new(run),
        }
    }

    fn execute(self, timing: bool) -> CheckRecord {
        let start = Instant::now();
        let result = (self.run)();
        let elapsed_ms = if timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        let mut params = self.params;
        let (status, witness) = match result {
            Ok(v) => {
                params.extend(v.details);
                match v.witness {
                    None => (Status::Pass, None),
                    Some(w) => (Status::Fail, Some(w)),
                }
            }
            Err(e) => (Status::Error, Some(e)),
        };
        CheckRecord {
            check_id: self.id,
            paper_anchor: self.anchor.to_string(),
            params,
            status,
            witness,
            elapsed_ms,
        }
    }
}

/// Runs jobs on a small worker pool; the caller sorts the output.
fn execute_all(jobs: Vec<Job<'_>>, timing: bool) -> Vec<CheckRecord> {
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(jobs.len().max(1));
    let queue = Mutex::new(jobs.into_iter());
    let done = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue lock").next();
                let Some(job) = next else { break };
                let rec = job.execute(timing);
                done.lock().expect("result lock").push(rec);
            });
        }
    });
    done.into_inner().expect("result lock")
}

fn jobs_for<'a>(config: &'a SuiteConfig, suite: Suite, q: &'a [BigRational]) -> Vec<Job<'a>> {
    match suite {
        Suite::Jacobi => algebra::jacobi_jobs(config),
        Suite::Iso => algebra::iso_jobs(config),
        Suite::Singular => vertex::singular_jobs(config),
        Suite::Dims => vertex::dims_jobs(config, q),
        Suite::FockRelations => fock_checks::relation_jobs(config),
        Suite::Ope => fock_checks::ope_jobs(config),
        Suite::Vanish => {
            let mut jobs = fock_checks::vanish_jobs(config);
            jobs.extend(vertex::nilpotency_jobs(config, q));
            jobs
        }
        Suite::QuasiComm => {
            let mut jobs = fock_checks::quasi_jobs(config);
            jobs.extend(vertex::r_axiom_jobs(config));
            jobs
        }
        Suite::Weights => fock_checks::weight_jobs(config),
        Suite::All => Suite::CONCRETE
            .into_iter()
            .flat_map(|s| jobs_for(config, s, q))
            .collect(),
    }
}

/// Runs the named suite. The report is deterministic given the configuration,
/// apart from `elapsed_ms` when timing is on.
pub fn run_suite(config: &SuiteConfig, suite: Suite) -> Result<Report, SuiteError> {
    config.validate()?;
    let q = config.q_points()?;
    let jobs = jobs_for(config, suite, &q);
    Ok(Report::new(execute_all(jobs, config.timing)))
}

fn err_string(e: impl fmt::Display) -> String {
    e.to_string()
}
