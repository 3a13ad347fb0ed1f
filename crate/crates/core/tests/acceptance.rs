//! Acceptance criteria, one verification suite each. Prints one line per
//! criterion and exits nonzero if any criterion fails. Runs without the
//! libtest harness so the lines are never captured.

use qcs_core::verify::{SuiteRegistry, VerifyConfig};

const CRITERIA: [(u32, &str, &str); 11] = [
    (1, "moments", "moment identity, n <= 12, relative 1e-8"),
    (
        2,
        "qexp",
        "q-exponential series vs reciprocal product, 1e-12",
    ),
    (
        3,
        "gram",
        "orthonormality of phi_0..phi_10 at quadrature order 400, 1e-7",
    ),
    (
        4,
        "polys",
        "recurrence vs terminating 3phi2, n <= 12, relative 1e-10",
    ),
    (5, "genfun", "wavefunction series vs closed form, 1e-9"),
    (
        6,
        "kernel",
        "kernel routes 1e-10, K(z,z) = N 1e-13, Gram PSD -1e-10",
    ),
    (7, "isometry", "basis mapping and 9x9 isometry, 1e-7"),
    (
        8,
        "corollary",
        "integral representation of Q_n, n <= 6, 1e-6",
    ),
    (9, "alpha0", "alpha = 0 reductions, 1e-11"),
    (
        10,
        "qlimit",
        "q -> 1 Barut-Girardello limit, decreasing and < 1e-2",
    ),
    (
        11,
        "operators",
        "position matrix and recurrence residual 1e-11",
    ),
];

fn main() {
    let registry = SuiteRegistry::with_defaults();
    let cfg = VerifyConfig::default();
    let mut failed = Vec::new();
    for (id, suite, summary) in CRITERIA {
        let report = registry
            .run(suite, &cfg)
            .expect("suite is registered")
            .remove(0);
        let worst = report
            .checks
            .iter()
            .max_by(|a, b| (a.residual / a.threshold).total_cmp(&(b.residual / b.threshold)))
            .expect("suite produced checks");
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {id:>2} ({suite}): {summary}; worst {} = {:.3e} (threshold {:.0e})",
            worst.name, worst.residual, worst.threshold
        );
        for c in report.failures() {
            println!(
                "         failed: {} = {:.3e} {}",
                c.name,
                c.residual,
                c.note.as_deref().unwrap_or("")
            );
        }
        if !report.passed() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!(
            "acceptance: {} of {} criteria passed",
            CRITERIA.len(),
            CRITERIA.len()
        );
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
