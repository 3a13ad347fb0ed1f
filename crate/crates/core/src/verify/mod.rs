//! Named verification suites. Each suite checks one family of identities by
//! two independent numerical routes over a parameter grid and reports the
//! worst residual of every check against its threshold.

mod suites;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::QParams;
use crate::table::{Cell, Table};

pub use suites::{
    AlphaZeroSuite, CorollarySuite, GenFunSuite, GramSuite, IsometrySuite, KernelSuite,
    MomentsSuite, OperatorsSuite, PolysSuite, QExpSuite, QLimitSuite,
};

/// Settings shared by all suites.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub grid: Vec<QParams>,
    pub n_max: usize,
    pub quad_order: usize,
    pub atoms_tol: f64,
}

impl VerifyConfig {
    /// `q ∈ {0.3, 0.5, 0.8}`, `α ∈ {-0.5, 0, 0.25}`, `n <= 10`.
    pub fn default_grid() -> Vec<QParams> {
        let mut grid = Vec::with_capacity(9);
        for &q in &[0.3, 0.5, 0.8] {
            for &a in &[-0.5, 0.0, 0.25] {
                grid.push(QParams::new(q, a).expect("default grid is valid"));
            }
        }
        grid
    }

    /// The distinct values of `q` in the grid, ascending.
    pub fn q_values(&self) -> Vec<f64> {
        let mut qs: Vec<f64> = self.grid.iter().map(|p| p.q()).collect();
        qs.sort_by(f64::total_cmp);
        qs.dedup();
        qs
    }
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            grid: Self::default_grid(),
            n_max: 10,
            quad_order: 400,
            atoms_tol: 1e-15,
        }
    }
}

/// One residual compared against its threshold; passes iff `residual < threshold`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub threshold: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub description: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual_ratio(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.residual / c.threshold)
            .fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Collects checks; an evaluation error becomes a failed check with the
/// error message attached.
#[derive(Debug, Default)]
pub struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, residual: Result<f64>, threshold: f64) {
        let name = name.into();
        let check = match residual {
            Ok(r) => Check {
                name,
                residual: r,
                threshold,
                passed: r < threshold,
                note: None,
            },
            Err(e) => Check {
                name,
                residual: f64::INFINITY,
                threshold,
                passed: false,
                note: Some(e.to_string()),
            },
        };
        self.checks.push(check);
    }

    pub fn finish(self, suite: &dyn Suite) -> SuiteReport {
        SuiteReport {
            suite: suite.name().to_string(),
            description: suite.description().to_string(),
            checks: self.checks,
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, cfg: &VerifyConfig) -> SuiteReport;
}

/// Suites by name. `all` is reserved and runs every registered suite.
pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, Box<dyn Suite>>,
    order: Vec<&'static str>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry {
            suites: BTreeMap::new(),
            order: Vec::new(),
        }
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(MomentsSuite));
        r.register(Box::new(QExpSuite));
        r.register(Box::new(GramSuite));
        r.register(Box::new(PolysSuite));
        r.register(Box::new(GenFunSuite));
        r.register(Box::new(KernelSuite));
        r.register(Box::new(IsometrySuite));
        r.register(Box::new(CorollarySuite));
        r.register(Box::new(AlphaZeroSuite));
        r.register(Box::new(QLimitSuite));
        r.register(Box::new(OperatorsSuite));
        r
    }

    /// Adds a suite, replacing any suite of the same name.
    pub fn register(&mut self, suite: Box<dyn Suite>) {
        let name = suite.name();
        assert_ne!(name, "all", "`all` is reserved");
        if self.suites.insert(name, suite).is_none() {
            self.order.push(name);
        }
    }

    /// Names in registration order.
    pub fn names(&self) -> &[&'static str] {
        &self.order
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites.get(name).map(|s| s.as_ref())
    }

    pub fn run(&self, name: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
        if name == "all" {
            return Ok(self.order.iter().map(|n| self.suites[n].run(cfg)).collect());
        }
        match self.get(name) {
            Some(s) => Ok(vec![s.run(cfg)]),
            None => Err(Error::InvalidParams(format!(
                "unknown suite `{name}`; available: {}, all",
                self.order.join(", ")
            ))),
        }
    }
}

/// Reports as a table with columns `suite, check, residual, threshold, passed`.
pub fn reports_table(reports: &[SuiteReport]) -> Table {
    let mut t = Table::new(["suite", "check", "residual", "threshold", "passed"]);
    for r in reports {
        for c in &r.checks {
            t.push_cells(vec![
                Cell::from(r.suite.as_str()),
                Cell::from(c.name.as_str()),
                Cell::from(c.residual),
                Cell::from(c.threshold),
                Cell::from(c.passed),
            ]);
        }
    }
    let failed = reports.iter().flat_map(|r| r.failures()).count();
    t.footer("failed", failed);
    t.footer("passed", failed == 0);
    t
}
