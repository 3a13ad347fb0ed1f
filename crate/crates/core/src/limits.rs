//! Degenerations of the construction: `α = 0` (Arik-Coon states and
//! continuous q-Hermite polynomials) and `q → 1` with `α = -q^{2ν}`
//! (Barut-Girardello states over Meixner-Pollaczek polynomials).

use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::measures::radial_measure;
use crate::orthopoly::{basis_phi_theta, meixner_pollaczek_norm, q_hermite_normalized, ThetaPoint};
use crate::qcore::{
    q_exp, q_pochhammer_inf_real, q_pochhammer_real, sum_ratio_series, x_factorial, QParams,
    SeriesControl,
};
use crate::states::{normalization, wavefunction_closed_phase};
use crate::C64;

/// Modified Bessel function `I_σ(x)` from its ascending series, `σ > -1`.
pub fn bessel_i(sigma: f64, x: f64, ctrl: &SeriesControl) -> Result<f64> {
    if sigma.is_nan() || sigma <= -1.0 {
        return Err(Error::domain(format!(
            "bessel_i needs sigma > -1, got {sigma}"
        )));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!("bessel_i needs x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(if sigma == 0.0 { 1.0 } else { 0.0 });
    }
    let first = (0.5 * x).powf(sigma) / gamma(sigma + 1.0);
    let y = 0.25 * x * x;
    let v = sum_ratio_series(
        C64::new(first, 0.0),
        ctrl,
        None,
        || format!("I_{sigma}({x})"),
        |k| {
            let k = k as f64;
            Ok(C64::new(y / ((k + 1.0) * (k + 1.0 + sigma)), 0.0))
        },
    )?;
    Ok(v.re)
}

/// Confluent hypergeometric `1F1(a; b; x) = Σ (a)_k / (b)_k x^k / k!`.
pub fn hyp1f1(a: C64, b: C64, x: C64, ctrl: &SeriesControl) -> Result<C64> {
    if b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0 {
        return Err(Error::Pole(format!(
            "1F1 lower parameter b = {} is a nonpositive integer",
            b.re
        )));
    }
    sum_ratio_series(
        C64::new(1.0, 0.0),
        ctrl,
        None,
        || format!("1F1({a}; {b}; {x})"),
        |k| {
            let k = k as f64;
            Ok((a + k) / (b + k) * x / (k + 1.0))
        },
    )
}

/// Barut-Girardello target point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BGTarget {
    nu: f64,
    z: C64,
    x: f64,
}

impl BGTarget {
    pub fn new(nu: f64, z: C64, x: f64) -> Result<Self> {
        if !(nu.is_finite() && nu > 0.0) {
            return Err(Error::InvalidParams(format!("nu must be > 0, got {nu}")));
        }
        if !x.is_finite() || !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidParams("non-finite target point".into()));
        }
        Ok(BGTarget { nu, z, x })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn z(&self) -> C64 {
        self.z
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

/// `Γ(2ν) r^{1-2ν} I_{2ν-1}(2r)`.
pub fn bg_normalization_bessel(nu: f64, r: f64, ctrl: &SeriesControl) -> Result<f64> {
    if r == 0.0 {
        return Ok(1.0);
    }
    Ok(gamma(2.0 * nu) * r.powf(1.0 - 2.0 * nu) * bessel_i(2.0 * nu - 1.0, 2.0 * r, ctrl)?)
}

/// `Σ_n r^{2n} / (n! (2ν)_n)`.
pub fn bg_normalization_series(nu: f64, r: f64, ctrl: &SeriesControl) -> Result<f64> {
    let r2 = r * r;
    let v = sum_ratio_series(
        C64::new(1.0, 0.0),
        ctrl,
        None,
        || "Barut-Girardello norm".into(),
        |n| {
            let n = n as f64;
            Ok(C64::new(r2 / ((n + 1.0) * (2.0 * nu + n)), 0.0))
        },
    )?;
    Ok(v.re)
}

/// `e^{i z̄} 1F1(ν + ix; 2ν; -2i z̄) / √(Γ(2ν) |z|^{1-2ν} I_{2ν-1}(2|z|))`.
pub fn bg_wavefunction(t: &BGTarget, ctrl: &SeriesControl) -> Result<C64> {
    if t.z == C64::new(0.0, 0.0) {
        return Err(Error::domain("Barut-Girardello closed form needs z != 0"));
    }
    let i = C64::i();
    let zb = t.z.conj();
    let f = hyp1f1(
        C64::new(t.nu, t.x),
        C64::new(2.0 * t.nu, 0.0),
        -2.0 * i * zb,
        ctrl,
    )?;
    let n = bg_normalization_bessel(t.nu, t.z.norm(), ctrl)?;
    Ok((i * zb).exp() * f / n.sqrt())
}

/// Series form `N^{-1/2} Σ_n z̄^n / √(n! (2ν)_n) · p_n(x)` over normalized
/// Meixner-Pollaczek polynomials.
pub fn bg_wavefunction_series(t: &BGTarget, ctrl: &SeriesControl) -> Result<C64> {
    let r = t.z.norm();
    let norm = bg_normalization_series(t.nu, r, ctrl)?;
    // coefficients fall off like r^n / n!; grow the order until negligible
    let mut n_max = 16;
    loop {
        let mut c = C64::new(1.0, 0.0);
        let mut last = 1.0f64;
        for n in 1..=n_max {
            c *= t.z.conj() / (n as f64 * (2.0 * t.nu + n as f64 - 1.0)).sqrt();
            last = c.norm();
        }
        if last < 1e-18 || n_max >= ctrl.max_terms {
            break;
        }
        n_max *= 2;
    }
    let p = meixner_pollaczek_norm(n_max, t.x, t.nu)?;
    let mut c = C64::new(1.0, 0.0);
    let mut acc = crate::qcore::sum::ComplexSum::new();
    acc.add(c * p[0]);
    for n in 1..=n_max {
        c *= t.z.conj() / (n as f64 * (2.0 * t.nu + n as f64 - 1.0)).sqrt();
        acc.add(c * p[n]);
    }
    Ok(acc.value() / norm.sqrt())
}

/// The substituted q-state for the limit: `α = -q^{2ν}`, label `z√(1-q)`,
/// phase `e^{iθ} = i q^{ix}` (so `θ = π/2 + x ln q` stays real).
pub fn bg_q_wavefunction(t: &BGTarget, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    let p = QParams::new(q, -q.powf(2.0 * t.nu))?;
    let label = t.z * p.sqrt_one_minus_q();
    if !p.in_disk(label) {
        return Err(Error::domain(format!(
            "substituted label {label} leaves the disk at q = {q}"
        )));
    }
    let phase = C64::i() * C64::from_polar(1.0, t.x * q.ln());
    wavefunction_closed_phase(label, phase, &p, ctrl)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepPoint {
    pub q: f64,
    pub error: f64,
}

pub const DEFAULT_Q_LIST: [f64; 3] = [0.9, 0.99, 0.999];

/// `|ϑ_q − ϑ_BG|` at each `q` of `q_list`.
pub fn limit_sweep_q_to_1(
    t: &BGTarget,
    q_list: &[f64],
    ctrl: &SeriesControl,
) -> Result<Vec<SweepPoint>> {
    let target = bg_wavefunction(t, ctrl)?;
    q_list
        .iter()
        .map(|&q| {
            let v = bg_q_wavefunction(t, q, ctrl)?;
            Ok(SweepPoint {
                q,
                error: (v - target).norm(),
            })
        })
        .collect()
}

/// True if the errors strictly decrease along the sweep.
pub fn strictly_decreasing(sweep: &[SweepPoint]) -> bool {
    sweep.windows(2).all(|w| w[1].error < w[0].error)
}

/// Relative gap between `(1-q)^n / x_n!` at `α = -q^{2ν}` and `1/(n! (2ν)_n)`.
pub fn coefficient_limit_error(n: u32, nu: f64, q: f64) -> Result<f64> {
    let p = QParams::new(q, -q.powf(2.0 * nu))?;
    let lhs = (1.0 - q).powi(n as i32) / x_factorial(n, &p);
    let rhs: f64 = (1..=n)
        .map(|k| 1.0 / (k as f64 * (2.0 * nu + k as f64 - 1.0)))
        .product();
    Ok((lhs - rhs).abs() / rhs)
}

/// Maximum residuals of the three `α = 0` collapses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ArikCoonReport {
    /// Atoms against `(q;q)_∞ q^k / (q;q)_k`.
    pub atoms: f64,
    /// `φ_n` against normalized continuous q-Hermite, `n <= 10`.
    pub basis: f64,
    /// `N_{q,0}(r²)` against `e_q(r²)`, relative.
    pub normalization: f64,
}

impl ArikCoonReport {
    pub fn max(&self) -> f64 {
        self.atoms.max(self.basis).max(self.normalization)
    }
}

pub fn arik_coon_reduction_report(p: &QParams) -> Result<ArikCoonReport> {
    if p.alpha() != 0.0 {
        return Err(Error::InvalidParams(format!(
            "Arik-Coon reduction needs alpha = 0, got {}",
            p.alpha()
        )));
    }
    let q = p.q();
    let ctrl = SeriesControl::default();

    let meas = radial_measure(p, 1e-15)?;
    let qq = q_pochhammer_inf_real(q, q, &ctrl.with_rel_tol(1e-17))?;
    let atoms = meas
        .atoms()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let want = qq * q.powi(k as i32) / q_pochhammer_real(q, q, k as u32);
            (a.weight - want).abs()
        })
        .fold(0.0, f64::max);

    let mut basis = 0.0f64;
    for i in 1..40 {
        let theta = std::f64::consts::PI * i as f64 / 40.0;
        let pt = ThetaPoint::from_theta(theta, q)?;
        let phi = basis_phi_theta(10, &pt, p);
        let h = q_hermite_normalized(10, theta, q);
        for n in 0..=10 {
            basis = basis.max((phi[n] - h[n]).abs());
        }
    }

    let mut norm = 0.0f64;
    let r_max2 = 0.95 / (1.0 - q);
    for i in 0..20 {
        let r2 = r_max2 * i as f64 / 19.0;
        let a = normalization(r2, p, &ctrl)?;
        let b = q_exp(C64::new(r2, 0.0), q, &ctrl)?.re;
        norm = norm.max((a - b).abs() / b);
    }

    Ok(ArikCoonReport {
        atoms,
        basis,
        normalization: norm,
    })
}
