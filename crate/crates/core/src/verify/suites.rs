use std::f64::consts::PI;

use crate::bargmann::{
    asc_integral_representation, isometry_matrix, kernel_alpha0_product, kernel_eval,
    monomial_image, transform, TransformInput,
};
use crate::error::Result;
use crate::limits::{
    arik_coon_reduction_report, coefficient_limit_error, limit_sweep_q_to_1, BGTarget,
    DEFAULT_Q_LIST,
};
use crate::measures::{make_quadrature, radial_measure_for_order};
use crate::orthopoly::{
    asc_eval_3phi2_xi, asc_eval_sym_xi, basis_phi, basis_phi_theta, ThetaPoint,
};
use crate::qcore::{q_exp, q_exp_product, x_factorial, x_seq, QParams, SeriesControl};
use crate::states::{
    kernel_gram_matrix, min_eigenvalue_hermitian, normalization, position_matrix,
    position_spectrum, reproducing_kernel, reproducing_kernel_series, wavefunction_closed,
    wavefunction_series_theta, FockVector,
};
use crate::C64;

use super::{Recorder, Suite, SuiteReport, VerifyConfig};

fn tag(p: &QParams) -> String {
    format!("q={} alpha={}", p.q(), p.alpha())
}

fn max_of<I: IntoIterator<Item = Result<f64>>>(it: I) -> Result<f64> {
    let mut m = 0.0f64;
    for v in it {
        m = m.max(v?);
    }
    Ok(m)
}

fn ctrl() -> SeriesControl {
    SeriesControl::default()
}

/// Series control for routes compared at the 1e-9 level near the disk edge.
fn tight() -> SeriesControl {
    SeriesControl::default().with_rel_tol(1e-16)
}

/// Labels at fixed fractions of the disk radius.
fn sample_labels(p: &QParams, fractions: &[(f64, f64)]) -> Vec<C64> {
    fractions
        .iter()
        .map(|&(f, arg)| C64::from_polar(f * p.disk_radius(), arg))
        .collect()
}

pub struct MomentsSuite;

impl Suite for MomentsSuite {
    fn name(&self) -> &'static str {
        "moments"
    }

    fn description(&self) -> &'static str {
        "radial atoms reproduce x_n! for n = 0..12 (relative)"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let order = cfg.n_max.max(12) as u32;
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let res = radial_measure_for_order(p, cfg.atoms_tol, order).and_then(|m| {
                max_of((0..=order).map(|n| {
                    let want = x_factorial(n, p);
                    Ok((m.radial_moment(n)? - want).abs() / want)
                }))
            });
            rec.record(format!("moments {}", tag(p)), res, 1e-8);
        }
        rec.finish(self)
    }
}

pub struct QExpSuite;

impl Suite for QExpSuite {
    fn name(&self) -> &'static str {
        "qexp"
    }

    fn description(&self) -> &'static str {
        "q-exponential series equals the reciprocal product for |xi|(1-q) <= 0.95"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for q in cfg.q_values() {
            let res = max_of((0..20).map(|i| {
                let r = 0.95 / (1.0 - q) * (i + 1) as f64 / 20.0;
                // golden-angle spread covers both half-lines and the complex plane
                let xi = C64::from_polar(r, 2.399963229728653 * i as f64);
                let a = q_exp(xi, q, &ctrl())?;
                let b = q_exp_product(xi, q, &ctrl())?;
                Ok((a - b).norm() / b.norm())
            }));
            rec.record(format!("e_q duality q={q}"), res, 1e-12);
        }
        rec.finish(self)
    }
}

pub struct GramSuite;

impl Suite for GramSuite {
    fn name(&self) -> &'static str {
        "gram"
    }

    fn description(&self) -> &'static str {
        "phi_0..phi_n are orthonormal under quadrature against omega"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let res = make_quadrature(p, cfg.quad_order).map(|quad| {
                let dim = cfg.n_max + 1;
                let mut g = vec![vec![0.0; dim]; dim];
                for (pt, w) in quad.points().zip(quad.weights()) {
                    let phi = basis_phi_theta(cfg.n_max, &pt, p);
                    for m in 0..dim {
                        for n in 0..dim {
                            g[m][n] += w * phi[m] * phi[n];
                        }
                    }
                }
                let mut worst = 0.0f64;
                for (m, row) in g.iter().enumerate() {
                    for (n, v) in row.iter().enumerate() {
                        let want = if m == n { 1.0 } else { 0.0 };
                        worst = worst.max((v - want).abs());
                    }
                }
                worst
            });
            rec.record(format!("gram {}", tag(p)), res, 1e-7);
        }
        rec.finish(self)
    }
}

pub struct PolysSuite;

impl Suite for PolysSuite {
    fn name(&self) -> &'static str {
        "polys"
    }

    fn description(&self) -> &'static str {
        "Al-Salam-Chihara recurrence equals the terminating 3phi2 (relative), n <= 12"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for q in cfg.q_values() {
            // α = 0.3 needs q > 0.3; inadmissible pairs are skipped
            for alpha in [0.1, 0.3].into_iter().filter(|&a| a < q) {
                let res = QParams::new(q, alpha).and_then(|p| {
                    let a = alpha.sqrt();
                    let h = p.interval_halfwidth();
                    max_of((0..21).flat_map(|i| {
                        let xi = (-1.0 + 2.0 * i as f64 / 20.0) * h * p.sqrt_one_minus_q() / 2.0;
                        let rec_vals = asc_eval_sym_xi(12, xi, &p);
                        (0..=12u32).map(move |n| {
                            let direct = asc_eval_3phi2_xi(n, xi, a, -a, q)?;
                            let r = rec_vals[n as usize];
                            let d = (direct - r).abs();
                            Ok(if d == 0.0 { 0.0 } else { d / r.abs() })
                        })
                    }))
                });
                rec.record(format!("asc q={q} alpha={alpha}"), res, 1e-10);
            }
        }
        rec.finish(self)
    }
}

pub struct GenFunSuite;

impl Suite for GenFunSuite {
    fn name(&self) -> &'static str {
        "genfun"
    }

    fn description(&self) -> &'static str {
        "wavefunction series equals the closed form for |z| <= 0.9 (1-q)^(-1/2)"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let labels = sample_labels(p, &[(0.3, 0.4), (0.6, 2.0), (0.9, -1.1), (0.9, PI)]);
            let res = max_of(labels.iter().flat_map(|&z| {
                [0.2, 1.1, 1.9, 2.9].into_iter().map(move |theta| {
                    let pt = ThetaPoint::from_theta(theta, p.q())?;
                    let s = wavefunction_series_theta(z, &pt, p, None)?.value;
                    let c = wavefunction_closed(z, theta, p, &tight())?;
                    Ok((s - c).norm())
                })
            }));
            rec.record(format!("genfun {}", tag(p)), res, 1e-9);
        }
        rec.finish(self)
    }
}

pub struct KernelSuite;

impl Suite for KernelSuite {
    fn name(&self) -> &'static str {
        "kernel"
    }

    fn description(&self) -> &'static str {
        "reproducing kernel: power series vs 2phi1, diagonal vs N, positive Gram matrices"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let pts = sample_labels(p, &[(0.2, 0.3), (0.55, 2.1), (0.9, -1.2)]);
            let routes = max_of(pts.iter().flat_map(|&z| {
                pts.iter().map(move |&w| {
                    let k = reproducing_kernel(z, w, p, &ctrl())?;
                    let s = reproducing_kernel_series(z, w, p, 4000);
                    Ok((k - s).norm() / k.norm())
                })
            }));
            rec.record(format!("series vs 2phi1 {}", tag(p)), routes, 1e-10);
            let diag = max_of(pts.iter().map(|&z| {
                let k = reproducing_kernel(z, z, p, &ctrl())?;
                let n = normalization(z.norm_sqr(), p, &ctrl())?;
                Ok((k - n).norm() / n)
            }));
            rec.record(format!("K(z,z) = N {}", tag(p)), diag, 1e-13);
            let psd = kernel_gram_matrix(&pts, p, &ctrl())
                .map(|g| (-min_eigenvalue_hermitian(&g)).max(0.0));
            rec.record(format!("gram psd {}", tag(p)), psd, 1e-10);
        }
        rec.finish(self)
    }
}

pub struct IsometrySuite;

impl Suite for IsometrySuite {
    fn name(&self) -> &'static str {
        "isometry"
    }

    fn description(&self) -> &'static str {
        "transform maps phi_n to z^n / sqrt(x_n!) and is isometric, n <= 8"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        const DIM: usize = 9;
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let quad = match make_quadrature(p, cfg.quad_order) {
                Ok(q) => q,
                Err(e) => {
                    rec.record(format!("quadrature {}", tag(p)), Err(e), 1e-7);
                    continue;
                }
            };
            let labels = sample_labels(p, &[(0.1, 0.5), (0.4, 2.0), (0.6, -2.5)]);
            let mapping = max_of(labels.iter().flat_map(|&z| {
                let quad = &quad;
                (0..DIM).map(move |n| {
                    let v = FockVector::basis(n, n + 1);
                    let b = transform(TransformInput::Fock(&v), z, p, quad)?;
                    Ok((b - monomial_image(n, z, p)).norm())
                })
            }));
            rec.record(format!("basis mapping {}", tag(p)), mapping, 1e-7);
            let iso = radial_measure_for_order(p, cfg.atoms_tol, 2 * DIM as u32)
                .and_then(|meas| isometry_matrix(DIM, &meas, &quad))
                .map(|g| {
                    let mut worst = 0.0f64;
                    for (m, row) in g.iter().enumerate() {
                        for (n, v) in row.iter().enumerate() {
                            let want = if m == n { 1.0 } else { 0.0 };
                            worst = worst.max((v - want).norm());
                        }
                    }
                    worst
                });
            rec.record(format!("isometry {}", tag(p)), iso, 1e-7);
        }
        rec.finish(self)
    }
}

pub struct CorollarySuite;

impl Suite for CorollarySuite {
    fn name(&self) -> &'static str {
        "corollary"
    }

    fn description(&self) -> &'static str {
        "integral representation of Q_n through the kernel (conjugated monomial), n <= 6"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let res = radial_measure_for_order(p, cfg.atoms_tol, 6).and_then(|meas| {
                max_of([0.5, PI / 3.0, 2.0, 2.8].into_iter().flat_map(|theta| {
                    let want = asc_eval_sym_xi(6, theta.cos(), p);
                    let meas = &meas;
                    (0..=6u32).map(move |n| {
                        let v = asc_integral_representation(n, theta, meas)?;
                        Ok((v - want[n as usize]).abs())
                    })
                }))
            });
            rec.record(format!("corollary {}", tag(p)), res, 1e-6);
        }
        rec.finish(self)
    }
}

pub struct AlphaZeroSuite;

impl Suite for AlphaZeroSuite {
    fn name(&self) -> &'static str {
        "alpha0"
    }

    fn description(&self) -> &'static str {
        "alpha = 0 collapses: q-Hermite basis, Arik-Coon atoms, e_q norm, double-Pochhammer kernel"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        for q in cfg.q_values() {
            let p = match QParams::arik_coon(q) {
                Ok(p) => p,
                Err(e) => {
                    rec.record(format!("alpha0 q={q}"), Err(e), 1e-11);
                    continue;
                }
            };
            match arik_coon_reduction_report(&p) {
                Ok(r) => {
                    rec.record(format!("q-Hermite basis q={q}"), Ok(r.basis), 1e-11);
                    rec.record(format!("Arik-Coon atoms q={q}"), Ok(r.atoms), 1e-11);
                    rec.record(
                        format!("e_q normalization q={q}"),
                        Ok(r.normalization),
                        1e-11,
                    );
                }
                Err(e) => rec.record(format!("reduction q={q}"), Err(e), 1e-11),
            }
            let labels = sample_labels(&p, &[(0.2, 0.7), (0.5, -2.2), (0.8, 1.5)]);
            let kernel = max_of(labels.iter().flat_map(|&z| {
                let p = &p;
                [0.3, 1.4, 2.6].into_iter().map(move |theta| {
                    let t = kernel_eval(z, theta, p, &ctrl())?;
                    let d = kernel_alpha0_product(z, theta, q, &ctrl())?;
                    Ok((t - d).norm() / d.norm())
                })
            }));
            rec.record(format!("double-Pochhammer kernel q={q}"), kernel, 1e-11);
        }
        rec.finish(self)
    }
}

pub struct QLimitSuite;

impl Suite for QLimitSuite {
    fn name(&self) -> &'static str {
        "qlimit"
    }

    fn description(&self) -> &'static str {
        "q -> 1 with alpha = -q^(2 nu): decreasing error to the Barut-Girardello target"
    }

    fn run(&self, _cfg: &VerifyConfig) -> SuiteReport {
        let mut rec = Recorder::new();
        let nus = [0.5, 1.0, 2.0];
        let labels = [
            C64::new(0.4, 0.0),
            C64::new(0.3, 0.5),
            C64::new(0.0, -0.8),
            C64::new(-1.0, 0.0),
        ];
        let xs = [-1.5, 0.2, 1.0, 2.0];
        for &nu in &nus {
            let mut ratio = 0.0f64;
            let mut last = 0.0f64;
            let mut failure = None;
            for &z in &labels {
                for &x in &xs {
                    let sweep = BGTarget::new(nu, z, x)
                        .and_then(|t| limit_sweep_q_to_1(&t, &DEFAULT_Q_LIST, &ctrl()));
                    match sweep {
                        Ok(s) => {
                            for w in s.windows(2) {
                                ratio = ratio.max(w[1].error / w[0].error);
                            }
                            last = last.max(s[s.len() - 1].error);
                        }
                        Err(e) => failure = Some(e),
                    }
                }
            }
            match failure {
                Some(e) => rec.record(format!("sweep nu={nu}"), Err(e), 1.0),
                None => {
                    rec.record(format!("error decrease ratio nu={nu}"), Ok(ratio), 1.0);
                    rec.record(format!("error at q=0.999 nu={nu}"), Ok(last), 1e-2);
                }
            }
        }
        // coefficient-level limit at the reference index ν = 1
        let coeff = max_of((0..=4u32).map(|n| coefficient_limit_error(n, 1.0, 0.999)));
        rec.record("coefficient limit nu=1", coeff, 1e-2);
        rec.finish(self)
    }
}

pub struct OperatorsSuite;

impl Suite for OperatorsSuite {
    fn name(&self) -> &'static str {
        "operators"
    }

    fn description(&self) -> &'static str {
        "position matrix is symmetric with spectrum inside I_q; three-term recurrence of phi_n"
    }

    fn run(&self, cfg: &VerifyConfig) -> SuiteReport {
        const DIM: usize = 60;
        let mut rec = Recorder::new();
        for p in &cfg.grid {
            let m = position_matrix(DIM, p);
            let asym = (&m - m.transpose()).abs().max();
            rec.record(format!("symmetric {}", tag(p)), Ok(asym), f64::MIN_POSITIVE);
            let spectrum = position_spectrum(DIM, p);
            let edge = spectrum.iter().fold(0.0f64, |a, e| a.max(e.abs())) / p.interval_halfwidth();
            rec.record(format!("spectrum inside I_q {}", tag(p)), Ok(edge), 1.0);
            let h = p.interval_halfwidth();
            let res = max_of((1..40).map(|i| {
                let x = h * (-1.0 + 2.0 * i as f64 / 40.0);
                let phi = basis_phi(cfg.n_max + 1, x, p)?;
                let mut worst = 0.0f64;
                for n in 0..=cfg.n_max {
                    let up = x_seq(n as u32 + 1, p).sqrt() * phi[n + 1];
                    let down = if n > 0 {
                        x_seq(n as u32, p).sqrt() * phi[n - 1]
                    } else {
                        0.0
                    };
                    worst = worst.max((x * phi[n] - up - down).abs());
                }
                Ok(worst)
            }));
            rec.record(format!("recurrence residual {}", tag(p)), res, 1e-11);
        }
        rec.finish(self)
    }
}
