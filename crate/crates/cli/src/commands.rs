use num_complex::Complex64 as C64;
use qcs_core::limits::{limit_sweep_q_to_1, strictly_decreasing, BGTarget};
use qcs_core::measures::{make_quadrature, radial_measure, weight_omega_qgauss, weight_omega_x};
use qcs_core::orthopoly::{asc_eval_3phi2, asc_eval_sym, basis_phi, ThetaPoint};
use qcs_core::qcore::{
    q_bracket, q_exp, q_exp_product, q_factorial, q_pochhammer, q_pochhammer_inf, x_factorial,
};
use qcs_core::states::{
    normalization, reproducing_kernel, wavefunction_closed, wavefunction_series,
};
use qcs_core::table::{Cell, Table};
use qcs_core::verify::{reports_table, SuiteRegistry, VerifyConfig};
use qcs_core::{QParams, SeriesControl};

use crate::args::{
    EvalArgs, EvalSubject, ExportArgs, ExportSubject, GlobalOpts, VerifyArgs, WeightRoute,
};
use crate::{emit, CliError};

const DEFAULT_Q: f64 = 0.5;
const DEFAULT_ALPHA: f64 = 0.0;
const DEFAULT_NMAX: usize = 10;

fn params(g: &GlobalOpts) -> Result<QParams, CliError> {
    Ok(QParams::new(
        g.q.unwrap_or(DEFAULT_Q),
        g.alpha.unwrap_or(DEFAULT_ALPHA),
    )?)
}

fn control(g: &GlobalOpts) -> Result<SeriesControl, CliError> {
    let d = SeriesControl::default();
    Ok(SeriesControl::new(g.tol, d.max_terms, d.consecutive_small)?)
}

fn need<T: Copy>(v: Option<T>, flag: &str, subject: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{subject} needs --{flag}")))
}

fn cx(re_im: C64) -> [Cell; 2] {
    [Cell::from(re_im.re), Cell::from(re_im.im)]
}

pub fn eval(a: &EvalArgs, g: &GlobalOpts) -> Result<(), CliError> {
    let p = params(g)?;
    let ctrl = control(g)?;
    let q = p.q();
    let name = format!("{:?}", a.subject).to_lowercase();
    let degree = || a.n.unwrap_or(g.nmax.unwrap_or(DEFAULT_NMAX) as u32);

    let mut t;
    match a.subject {
        EvalSubject::Bracket => {
            let n = need(a.n, "n", &name)?;
            t = Table::new(["n", "value"]);
            t.push_cells(vec![Cell::from(n as i64), Cell::from(q_bracket(n, q))]);
        }
        EvalSubject::Factorial => {
            let n = need(a.n, "n", &name)?;
            t = Table::new(["n", "q_factorial", "x_factorial"]);
            t.push_cells(vec![
                Cell::from(n as i64),
                Cell::from(q_factorial(n, q)),
                Cell::from(x_factorial(n, &p)),
            ]);
        }
        EvalSubject::Pochhammer => {
            let base = need(a.a, "a", &name)?;
            let (n, v) = match a.n {
                Some(n) => (n as i64, q_pochhammer(base, q, n)),
                None => (-1, q_pochhammer_inf(base, q, &ctrl)?),
            };
            t = Table::new(["n", "re", "im"]);
            let [re, im] = cx(v);
            t.push_cells(vec![Cell::from(n), re, im]);
            t.footer("rel_tol", ctrl.rel_tol);
        }
        EvalSubject::Qexp => {
            let xi = need(a.xi, "xi", &name)?;
            let s = q_exp(xi, q, &ctrl)?;
            let pr = q_exp_product(xi, q, &ctrl)?;
            t = Table::new(["series_re", "series_im", "product_re", "product_im"]);
            t.push_cells(cx(s).into_iter().chain(cx(pr)).collect());
            t.footer("rel_tol", ctrl.rel_tol);
        }
        EvalSubject::Phi => {
            let n = degree();
            let x = need(a.x, "x", &name)?;
            let phi = basis_phi(n as usize, x, &p)?;
            t = Table::new(["n", "x", "value"]);
            t.push_cells(vec![
                Cell::from(n as i64),
                Cell::from(x),
                Cell::from(phi.as_slice()[n as usize]),
            ]);
        }
        EvalSubject::Asc => {
            let n = degree();
            let x = need(a.x, "x", &name)?;
            let pt = ThetaPoint::from_x(x, q)?;
            let rec = asc_eval_sym(n as usize, x, &p).as_slice()[n as usize];
            let hyp = if p.alpha() == 0.0 {
                f64::NAN
            } else {
                let s = p.sqrt_alpha();
                asc_eval_3phi2(n, pt.theta(), s, -s, q)?.re
            };
            t = Table::new(["n", "x", "recurrence", "three_phi2"]);
            t.push_cells(vec![
                Cell::from(n as i64),
                Cell::from(x),
                Cell::from(rec),
                Cell::from(hyp),
            ]);
        }
        EvalSubject::Kernel => {
            let z = need(a.z, "z", &name)?;
            let w = need(a.w, "w", &name)?;
            t = Table::new(["re", "im"]);
            t.push_cells(cx(reproducing_kernel(z, w, &p, &ctrl)?).to_vec());
            t.footer("rel_tol", ctrl.rel_tol);
        }
        EvalSubject::Normalization => {
            let r2 = match (a.r2, a.z) {
                (Some(r2), _) => r2,
                (None, Some(z)) => z.norm_sqr(),
                (None, None) => return Err(CliError::Usage(format!("{name} needs --r2 or --z"))),
            };
            t = Table::new(["r2", "value"]);
            t.push_cells(vec![
                Cell::from(r2),
                Cell::from(normalization(r2, &p, &ctrl)?),
            ]);
            t.footer("rel_tol", ctrl.rel_tol);
        }
        EvalSubject::Wavefunction => {
            let z = need(a.z, "z", &name)?;
            let x = need(a.x, "x", &name)?;
            let theta = ThetaPoint::from_x(x, q)?.theta();
            let closed = wavefunction_closed(z, theta, &p, &ctrl)?;
            let series = wavefunction_series(z, x, &p, g.nmax)?;
            t = Table::new(["x", "closed_re", "closed_im", "series_re", "series_im"]);
            let mut row = vec![Cell::from(x)];
            row.extend(cx(closed));
            row.extend(cx(series.value));
            t.push_cells(row);
            t.footer("series_terms", series.terms);
            t.footer("tail_estimate", series.tail_estimate);
        }
        EvalSubject::Weight => {
            let x = need(a.x, "x", &name)?;
            t = Table::new(["x", "value"]);
            t.push_cells(vec![
                Cell::from(x),
                Cell::from(weight_omega_x(x, &p, &ctrl)?),
            ]);
            t.footer("rel_tol", ctrl.rel_tol);
        }
    }
    emit(&t, g, &format!("eval-{name}"))
}

/// The default grid, restricted to the given `q` and/or `α`.
fn verify_grid(g: &GlobalOpts) -> Result<Vec<QParams>, CliError> {
    let grid = match (g.q, g.alpha) {
        (Some(q), Some(a)) => vec![QParams::new(q, a)?],
        (Some(q), None) => {
            QParams::new(q, 0.0)?;
            VerifyConfig::default_grid()
                .into_iter()
                .filter_map(|p| QParams::new(q, p.alpha()).ok())
                .collect()
        }
        (None, Some(a)) => VerifyConfig::default_grid()
            .into_iter()
            .filter_map(|p| QParams::new(p.q(), a).ok())
            .collect(),
        (None, None) => VerifyConfig::default_grid(),
    };
    let mut unique: Vec<QParams> = Vec::new();
    for p in grid {
        if !unique.contains(&p) {
            unique.push(p);
        }
    }
    if unique.is_empty() {
        return Err(CliError::Usage(
            "no valid (q, alpha) pair left in the grid".into(),
        ));
    }
    Ok(unique)
}

/// Returns whether every check passed.
pub fn verify(a: &VerifyArgs, g: &GlobalOpts) -> Result<bool, CliError> {
    let cfg = VerifyConfig {
        grid: verify_grid(g)?,
        n_max: g.nmax.unwrap_or(DEFAULT_NMAX),
        quad_order: g.quad_order,
        atoms_tol: g.atoms_tol,
    };
    let registry = SuiteRegistry::with_defaults();
    let reports = registry
        .run(&a.suite, &cfg)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    for r in &reports {
        let verdict = if r.passed() { "pass" } else { "FAIL" };
        eprintln!(
            "{verdict} {}: worst residual/threshold {:.3e}",
            r.suite,
            r.max_residual_ratio()
        );
    }
    emit(&reports_table(&reports), g, &format!("verify-{}", a.suite))?;
    Ok(reports.iter().all(|r| r.passed()))
}

pub fn export(a: &ExportArgs, g: &GlobalOpts) -> Result<(), CliError> {
    let p = params(g)?;
    let ctrl = control(g)?;
    if a.points < 1 {
        return Err(CliError::Usage("--points must be at least 1".into()));
    }
    // interior points of I_q, ascending
    let h = p.interval_halfwidth();
    let xs: Vec<f64> = (0..a.points)
        .map(|j| -h + 2.0 * h * (j as f64 + 1.0) / (a.points as f64 + 1.0))
        .collect();

    let t = match a.subject {
        ExportSubject::Atoms => radial_measure(&p, g.atoms_tol)?.to_table(),
        ExportSubject::Quadrature => make_quadrature(&p, g.quad_order)?.to_table(),
        ExportSubject::WeightCurve => {
            if a.route == WeightRoute::Qgauss && p.alpha() != 0.0 {
                return Err(CliError::Usage("--route qgauss needs alpha = 0".into()));
            }
            let mut t = Table::new(["x", "omega"]);
            for &x in &xs {
                let w = match a.route {
                    WeightRoute::General => weight_omega_x(x, &p, &ctrl)?,
                    WeightRoute::Qgauss => {
                        weight_omega_qgauss(ThetaPoint::from_x(x, p.q())?.theta(), p.q(), &ctrl)?
                    }
                };
                t.push_row(vec![x, w]);
            }
            t
        }
        ExportSubject::WavefunctionGrid => {
            let z = need(a.z, "z", "wavefunction-grid")?;
            let mut t = Table::new(["x", "re", "im"]);
            for &x in &xs {
                let theta = ThetaPoint::from_x(x, p.q())?.theta();
                let v = wavefunction_closed(z, theta, &p, &ctrl)?;
                t.push_row(vec![x, v.re, v.im]);
            }
            t
        }
        ExportSubject::Sweep => {
            let target = BGTarget::new(a.nu, a.z.unwrap_or(C64::new(0.5, 0.0)), a.x)?;
            let sweep = limit_sweep_q_to_1(&target, &a.q_list, &ctrl)?;
            let mut t = Table::new(["q", "error"]);
            for s in &sweep {
                t.push_row(vec![s.q, s.error]);
            }
            t.footer("strictly_decreasing", strictly_decreasing(&sweep));
            t
        }
    };
    emit(&t, g, a.subject.file_stem())
}
