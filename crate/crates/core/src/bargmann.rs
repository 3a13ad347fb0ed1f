//! Bargmann-type transform onto holomorphic functions on the disk
//! `|z| < (1-q)^{-1/2}`, with kernel
//! `T(z, ξ) = 1/(z√(1-q) e^{-iθ}; q)_∞ · 2φ1(√α e^{-iθ}, -√α e^{-iθ}; -α | q; z√(1-q) e^{iθ})`.
//!
//! Angular integrals over the disk are done analytically: a holomorphic `F`
//! is handled through its Taylor coefficients, and `∫ |z^j|² ν(d²z)` is the
//! radial moment `x_j!`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::{gauss_legendre, weight_density_theta, DiscreteRadialMeasure, Quadrature};
use crate::orthopoly::{basis_phi_theta, ThetaPoint};
use crate::qcore::{
    basic_hypergeometric, q_pochhammer_inf, sum::ComplexSum, x_factorial, QParams, SeriesControl,
};
use crate::states::FockVector;
use crate::C64;

/// Coefficients beyond the highest requested index kept in isometry sums, so
/// that leakage into higher powers is measured rather than assumed away.
const EXTRA_COEFFS: usize = 8;

/// The integral kernel `T(z, ξ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransformKernel {
    params: QParams,
    ctrl: SeriesControl,
}

impl TransformKernel {
    pub fn new(p: &QParams, ctrl: &SeriesControl) -> Self {
        TransformKernel {
            params: *p,
            ctrl: *ctrl,
        }
    }

    pub fn params(&self) -> &QParams {
        &self.params
    }

    /// `T(z, ξ(θ))`, summed as a generic `2φ1` with complex parameters.
    pub fn eval(&self, z: C64, theta: f64) -> Result<C64> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::domain(format!("theta = {theta} outside [0, pi]")));
        }
        let p = &self.params;
        let w = z * p.sqrt_one_minus_q();
        if w.norm() >= 1.0 {
            return Err(Error::domain(format!(
                "kernel needs |z| sqrt(1-q) < 1, got {}",
                w.norm()
            )));
        }
        let u = C64::from_polar(1.0, theta);
        let a = p.sqrt_alpha() * u.conj();
        let series = basic_hypergeometric(
            &[a, -a],
            &[C64::new(-p.alpha(), 0.0)],
            p.q(),
            w * u,
            &self.ctrl,
        )?;
        Ok(series / q_pochhammer_inf(w * u.conj(), p.q(), &self.ctrl)?)
    }

    /// Taylor coefficients `t_0(ξ), …, t_{count-1}(ξ)` of `z ↦ T(z, ξ)`,
    /// extracted by a trapezoidal DFT on the circle `|z| = r_0 / 2`.
    ///
    /// Aliasing from index `j + L` is damped by `2^{-L}`; `L >= 64`.
    pub fn taylor_coefficients(&self, theta: f64, count: usize) -> Result<Vec<C64>> {
        let len = (2 * count).next_power_of_two().max(64);
        let rho = 0.5 * self.params.disk_radius();
        let samples = (0..len)
            .map(|l| {
                self.eval(
                    C64::from_polar(rho, 2.0 * PI * l as f64 / len as f64),
                    theta,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((0..count)
            .map(|j| {
                let s: C64 = samples
                    .iter()
                    .enumerate()
                    .map(|(l, v)| {
                        v * C64::from_polar(1.0, -2.0 * PI * ((j * l) % len) as f64 / len as f64)
                    })
                    .collect::<ComplexSum>()
                    .value();
                s / (len as f64 * rho.powi(j as i32))
            })
            .collect())
    }
}

/// Free-function form of [`TransformKernel::eval`].
pub fn kernel_eval(z: C64, theta: f64, p: &QParams, ctrl: &SeriesControl) -> Result<C64> {
    TransformKernel::new(p, ctrl).eval(z, theta)
}

/// `1 / (z√(1-q) e^{-iθ}, z√(1-q) e^{iθ}; q)_∞`, the kernel at `α = 0`.
pub fn kernel_alpha0_product(z: C64, theta: f64, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    let w = z * (1.0 - q).sqrt();
    let u = C64::from_polar(1.0, theta);
    let den = q_pochhammer_inf(w * u.conj(), q, ctrl)? * q_pochhammer_inf(w * u, q, ctrl)?;
    Ok(den.inv())
}

/// A function on `I_q` to be transformed.
#[derive(Clone, Copy)]
pub enum TransformInput<'a> {
    /// `Σ c_n φ_n`.
    Fock(&'a FockVector),
    /// Pointwise values.
    Sampled(&'a dyn Fn(&ThetaPoint) -> C64),
}

impl TransformInput<'_> {
    fn at(&self, pt: &ThetaPoint, p: &QParams) -> C64 {
        match self {
            TransformInput::Fock(v) => {
                let phi = basis_phi_theta(v.n_max(), pt, p);
                v.coeffs()
                    .iter()
                    .zip(phi.as_slice())
                    .map(|(c, f)| c * *f)
                    .collect::<ComplexSum>()
                    .value()
            }
            TransformInput::Sampled(f) => f(pt),
        }
    }
}

/// `B[f](z) = ∫ T(z, ξ) f(ξ) ω(ξ) dξ` by quadrature.
pub fn transform(f: TransformInput<'_>, z: C64, p: &QParams, quad: &Quadrature) -> Result<C64> {
    let kernel = TransformKernel::new(p, &SeriesControl::default());
    let mut acc = ComplexSum::new();
    for (pt, w) in quad.points().zip(quad.weights()) {
        acc.add(kernel.eval(z, pt.theta())? * f.at(&pt, p) * *w);
    }
    Ok(acc.value())
}

/// Transform output: values on a grid of labels and, when available, the
/// Taylor coefficients `B[f](z) = Σ_j b_j z^j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HolomorphicSample {
    pub points: Vec<C64>,
    pub values: Vec<C64>,
    pub coeffs: Option<Vec<C64>>,
}

/// Kernel Taylor coefficients precomputed at every quadrature node, so that
/// transforms reduce to weighted sums.
#[derive(Debug, Clone)]
pub struct TransformPlan<'a> {
    quad: &'a Quadrature,
    taylor: Vec<Vec<C64>>,
    n_coeffs: usize,
}

impl<'a> TransformPlan<'a> {
    pub fn new(quad: &'a Quadrature, n_coeffs: usize, ctrl: &SeriesControl) -> Result<Self> {
        let kernel = TransformKernel::new(quad.params(), ctrl);
        let taylor = quad
            .nodes()
            .iter()
            .map(|&theta| kernel.taylor_coefficients(theta, n_coeffs))
            .collect::<Result<Vec<_>>>()?;
        Ok(TransformPlan {
            quad,
            taylor,
            n_coeffs,
        })
    }

    pub fn n_coeffs(&self) -> usize {
        self.n_coeffs
    }

    /// Taylor coefficients `b_j = ∫ t_j(ξ) f(ξ) ω(ξ) dξ` of `B[f]`.
    pub fn coefficients(&self, f: TransformInput<'_>) -> Vec<C64> {
        let p = self.quad.params();
        let vals: Vec<C64> = self
            .quad
            .points()
            .zip(self.quad.weights())
            .map(|(pt, w)| f.at(&pt, p) * *w)
            .collect();
        (0..self.n_coeffs)
            .map(|j| {
                self.taylor
                    .iter()
                    .zip(&vals)
                    .map(|(t, v)| t[j] * v)
                    .collect::<ComplexSum>()
                    .value()
            })
            .collect()
    }

    pub fn transform_fock(&self, v: &FockVector, points: &[C64]) -> HolomorphicSample {
        let coeffs = self.coefficients(TransformInput::Fock(v));
        let values = points
            .iter()
            .map(|&z| eval_power_series(&coeffs, z))
            .collect();
        HolomorphicSample {
            points: points.to_vec(),
            values,
            coeffs: Some(coeffs),
        }
    }
}

fn eval_power_series(coeffs: &[C64], z: C64) -> C64 {
    coeffs
        .iter()
        .rev()
        .fold(C64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// `⟨F, G⟩ = ∫ conj(F) G ν(d²z)` for `F = Σ a_j z^j`, `G = Σ b_j z^j`:
/// the angular integral leaves `Σ_j conj(a_j) b_j ∫ r^{2j} dρ`.
pub fn holomorphic_inner(a: &[C64], b: &[C64], meas: &DiscreteRadialMeasure) -> Result<C64> {
    let mut acc = ComplexSum::new();
    for (j, (x, y)) in a.iter().zip(b).enumerate() {
        acc.add(x.conj() * y * meas.radial_moment(j as u32)?);
    }
    Ok(acc.value())
}

/// `⟨B[φ_m], B[φ_n]⟩` over the disk; expected `δ_{mn}`.
pub fn isometry_check(
    m: usize,
    n: usize,
    meas: &DiscreteRadialMeasure,
    quad: &Quadrature,
) -> Result<C64> {
    let dim = m.max(n) + 1;
    let plan = TransformPlan::new(quad, dim + EXTRA_COEFFS, &SeriesControl::default())?;
    let a = plan.coefficients(TransformInput::Fock(&FockVector::basis(m, dim)));
    let b = plan.coefficients(TransformInput::Fock(&FockVector::basis(n, dim)));
    holomorphic_inner(&a, &b, meas)
}

/// Matrix `⟨B[φ_m], B[φ_n]⟩` for `m, n < dim`, sharing one plan.
pub fn isometry_matrix(
    dim: usize,
    meas: &DiscreteRadialMeasure,
    quad: &Quadrature,
) -> Result<Vec<Vec<C64>>> {
    let plan = TransformPlan::new(quad, dim + EXTRA_COEFFS, &SeriesControl::default())?;
    let coeffs: Vec<Vec<C64>> = (0..dim)
        .map(|n| plan.coefficients(TransformInput::Fock(&FockVector::basis(n, dim))))
        .collect();
    coeffs
        .iter()
        .map(|a| {
            coeffs
                .iter()
                .map(|b| holomorphic_inner(a, b, meas))
                .collect()
        })
        .collect()
}

/// `∫ conj((z√(1-q))^n) T(z, ξ) ν(d²z) = (1-q)^{n/2} t_n(ξ) ∫ r^{2n} dρ`,
/// which reproduces `Q_n(ξ√(1-q)/2; √α, -√α | q)`.
///
/// The monomial is conjugated: with both factors holomorphic the angular
/// integral would vanish for every `n >= 1`.
pub fn asc_integral_representation(
    n: u32,
    theta: f64,
    meas: &DiscreteRadialMeasure,
) -> Result<f64> {
    let p = meas.params();
    let kernel = TransformKernel::new(p, &SeriesControl::default());
    let t = kernel.taylor_coefficients(theta, n as usize + 1)?[n as usize];
    let v = t * p.sqrt_one_minus_q().powi(n as i32) * meas.radial_moment(n)?;
    Ok(v.re)
}

/// `B[φ_n](z)` computed in the rescaled variable `η = s ξ`: Gauss-Legendre
/// in θ with `η = s · 2cosθ/√(1-q)`, kernel `T(z, η/s)`, basis `φ_n(η/s)` and
/// weight `ω(η/s)/s`. Any `s > 0` must return `z^n/√(x_n!)`; `s = √2` is
/// the convention of the Arik-Coon transform.
pub fn rescaled_basis_mapping(
    n: usize,
    z: C64,
    p: &QParams,
    order: usize,
    scale: f64,
) -> Result<C64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidParams(format!(
            "scale must be > 0, got {scale}"
        )));
    }
    let ctrl = SeriesControl::default().with_rel_tol(1e-16);
    let kernel = TransformKernel::new(p, &ctrl);
    let h = p.interval_halfwidth();
    let (nodes, weights) = gauss_legendre(order);
    let mut acc = ComplexSum::new();
    for (t, w) in nodes.iter().zip(&weights) {
        let theta = 0.5 * PI * (t + 1.0);
        let eta = scale * h * theta.cos();
        let deta = scale * h * theta.sin();
        let pt = ThetaPoint::from_x(eta / scale, p.q())?;
        if !pt.is_interior() {
            continue;
        }
        // ω(ξ) dξ/dθ, with ξ = η/s
        let omega = weight_density_theta(&pt, p, &ctrl)? / (h * pt.sin_theta());
        let weight_eta = omega / scale;
        let phi = basis_phi_theta(n, &pt, p)[n];
        acc.add(kernel.eval(z, pt.theta())? * (phi * weight_eta * deta * w * 0.5 * PI));
    }
    Ok(acc.value())
}

/// `z^n / √(x_n!)`, the image of `φ_n`.
pub fn monomial_image(n: usize, z: C64, p: &QParams) -> C64 {
    z.powu(n as u32) / x_factorial(n as u32, p).sqrt()
}
