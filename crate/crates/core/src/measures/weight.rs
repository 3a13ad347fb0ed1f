use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::orthopoly::ThetaPoint;
use crate::qcore::{q_pochhammer_inf, q_pochhammer_inf_real, QParams, SeriesControl};
use crate::C64;

/// `∏_{k >= start} (1 - γ c q^k + γ² q^{2k})` with `c = x √(1-q) = 2 cos θ`.
fn g_product_from(
    two_cos: f64,
    gamma: C64,
    q: f64,
    start: usize,
    ctrl: &SeriesControl,
) -> Result<C64> {
    let cutoff = ctrl.rel_tol * (1.0 - q);
    let mut prod = C64::new(1.0, 0.0);
    let mut qk = q.powi(start as i32);
    let mut small = 0;
    for _ in 0..ctrl.max_terms {
        let lin = gamma * two_cos * qk;
        let quad = gamma * gamma * qk * qk;
        prod *= C64::new(1.0, 0.0) - lin + quad;
        if lin.norm() + quad.norm() < cutoff {
            small += 1;
            if small >= ctrl.consecutive_small {
                return Ok(prod);
            }
        } else {
            small = 0;
        }
        qk *= q;
    }
    Err(Error::non_convergent(
        format!("g(x, {gamma}; {q})"),
        ctrl.max_terms,
    ))
}

/// `g(x, γ; q) = ∏_{k>=0} (1 - γ x (1-q)^{1/2} q^k + γ² q^{2k})`.
pub fn g_product(x: f64, gamma: C64, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    g_product_from(x * (1.0 - q).sqrt(), gamma, q, 0, ctrl)
}

/// `g(x, √α) g(x, -√α)` multiplied pairwise so that only `α` enters:
/// `∏_k [(1 + α q^{2k})² - α c² q^{2k}]`.
fn paired_alpha_product(two_cos: f64, alpha: f64, q: f64, ctrl: &SeriesControl) -> Result<f64> {
    if alpha == 0.0 {
        return Ok(1.0);
    }
    let cutoff = ctrl.rel_tol * (1.0 - q);
    let mut prod = 1.0;
    let mut q2k = 1.0;
    let mut small = 0;
    for _ in 0..ctrl.max_terms {
        let s = 1.0 + alpha * q2k;
        let cross = alpha * two_cos * two_cos * q2k;
        prod *= s * s - cross;
        if (2.0 * alpha * q2k).abs() + cross.abs() < cutoff {
            small += 1;
            if small >= ctrl.consecutive_small {
                return Ok(prod);
            }
        } else {
            small = 0;
        }
        q2k *= q * q;
    }
    Err(Error::non_convergent(
        "g(x, sqrt(alpha)) g(x, -sqrt(alpha))",
        ctrl.max_terms,
    ))
}

/// `ω(x) |dx/dθ|`: the weight as a density in `θ`, smooth on `[0, π]`.
///
/// The `k = 0` factors of `g(x, 1) g(x, -1)` are `4 sin² θ`, which cancels the
/// `1/sin θ` of `√((1-q)/(4 - (1-q)x²))` against the Jacobian.
pub fn weight_density_theta(pt: &ThetaPoint, p: &QParams, ctrl: &SeriesControl) -> Result<f64> {
    let q = p.q();
    let c = 2.0 * pt.cos_theta();
    let s = pt.sin_theta();
    let ends = 4.0 * s * s;
    let g_plus = g_product_from(c, C64::new(1.0, 0.0), q, 1, ctrl)?;
    let g_minus = g_product_from(c, C64::new(-1.0, 0.0), q, 1, ctrl)?;
    let sq = q.sqrt();
    let g_sq_plus = g_product_from(c, C64::new(sq, 0.0), q, 0, ctrl)?;
    let g_sq_minus = g_product_from(c, C64::new(-sq, 0.0), q, 0, ctrl)?;
    let numerator = crate::qcore::real_part(g_plus * g_minus * g_sq_plus * g_sq_minus);
    let denominator = paired_alpha_product(c, p.alpha(), q, ctrl)?;
    let norm = q_pochhammer_inf_real(q, q, ctrl)? * q_pochhammer_inf_real(-p.alpha(), q, ctrl)?;
    Ok(norm / (2.0 * PI) * ends * numerator / denominator)
}

/// Orthogonality weight `ω_{q,α}(x)`; zero at the endpoints of `I_q`.
pub fn weight_omega(pt: &ThetaPoint, p: &QParams, ctrl: &SeriesControl) -> Result<f64> {
    if !pt.is_interior() {
        return Ok(0.0);
    }
    let jacobian = 2.0 * pt.sin_theta() / p.sqrt_one_minus_q();
    Ok(weight_density_theta(pt, p, ctrl)? / jacobian)
}

/// [`weight_omega`] at a position; errors outside the closed interval.
pub fn weight_omega_x(x: f64, p: &QParams, ctrl: &SeriesControl) -> Result<f64> {
    let pt = ThetaPoint::from_x(x, p.q())?;
    weight_omega(&pt, p, ctrl)
}

/// The q-Gaussian weight
/// `(q;q)_∞ (√(1-q)/π) sin θ ∏_{n>=1} |1 - q^n e^{2iθ}|²`.
pub fn weight_omega_qgauss(theta: f64, q: f64, ctrl: &SeriesControl) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::domain(format!("theta = {theta} outside [0, pi]")));
    }
    let e2 = C64::from_polar(q, 2.0 * theta);
    let prod = q_pochhammer_inf(e2, q, ctrl)?.norm_sqr();
    Ok(q_pochhammer_inf_real(q, q, ctrl)? * (1.0 - q).sqrt() / PI * theta.sin() * prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ctrl() -> SeriesControl {
        SeriesControl::default()
    }

    #[test]
    fn g_of_zero_gamma() {
        assert_eq!(
            g_product(0.7, C64::new(0.0, 0.0), 0.5, &ctrl()).unwrap(),
            C64::new(1.0, 0.0)
        );
    }

    #[test]
    fn g_oracle_value() {
        // oracle: 50-digit truncated product
        let v = g_product(0.5, C64::new(0.7, 0.0), 0.5, &ctrl()).unwrap();
        assert_relative_eq!(v.re, 1.1411977503433298018, max_relative = 1e-13);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn g_plus_minus_one_is_modulus_product() {
        let q: f64 = 0.45;
        for i in 1..10 {
            let theta = PI * i as f64 / 10.0;
            let x = 2.0 * theta.cos() / (1.0 - q).sqrt();
            let lhs = g_product(x, C64::new(1.0, 0.0), q, &ctrl()).unwrap()
                * g_product(x, C64::new(-1.0, 0.0), q, &ctrl()).unwrap();
            // independent complex product ∏ |1 - q^{2k} e^{2iθ}|²
            let mut rhs = 1.0;
            for k in 0..200 {
                rhs *=
                    (C64::new(1.0, 0.0) - C64::from_polar(q.powi(2 * k), 2.0 * theta)).norm_sqr();
            }
            assert!((lhs.re - rhs).abs() < 1e-13 * rhs.max(1e-300));
        }
    }

    #[test]
    fn paired_product_matches_complex_route() {
        let q: f64 = 0.6;
        let theta: f64 = 1.2;
        let x = 2.0 * f64::cos(theta) / (1.0 - q).sqrt();
        for &alpha in &[-0.7, -0.2, 0.3, 0.55] {
            let p = QParams::new(q, alpha).unwrap();
            let s = p.sqrt_alpha();
            let complex =
                g_product(x, s, q, &ctrl()).unwrap() * g_product(x, -s, q, &ctrl()).unwrap();
            let real = paired_alpha_product(2.0 * theta.cos(), alpha, q, &ctrl()).unwrap();
            assert!((complex.re - real).abs() < 1e-13 * real);
            assert!(complex.im.abs() < 1e-13);
        }
    }

    #[test]
    fn vanishes_at_endpoints() {
        let p = QParams::new(0.5, 0.3).unwrap();
        for &theta in &[0.0, PI] {
            let pt = ThetaPoint::from_theta(theta, 0.5).unwrap();
            assert_eq!(weight_omega(&pt, &p, &ctrl()).unwrap(), 0.0);
        }
        let near = ThetaPoint::from_theta(1e-6, 0.5).unwrap();
        assert!(weight_omega(&near, &p, &ctrl()).unwrap() < 1e-5);
        assert!(weight_omega_x(3.0, &p, &ctrl()).is_err());
        assert_eq!(weight_omega_qgauss(0.0, 0.5, &ctrl()).unwrap(), 0.0);
    }

    #[test]
    fn general_weight_reduces_to_qgauss() {
        for &q in &[0.3, 0.5, 0.8] {
            let p = QParams::arik_coon(q).unwrap();
            for i in 1..40 {
                let theta = PI * i as f64 / 40.0;
                let pt = ThetaPoint::from_theta(theta, q).unwrap();
                let a = weight_omega(&pt, &p, &ctrl()).unwrap();
                let b = weight_omega_qgauss(theta, q, &ctrl()).unwrap();
                assert!(
                    (a - b).abs() < 1e-11 * b.max(1e-3),
                    "q={q} theta={theta}: {a} vs {b}"
                );
            }
        }
        let pt = ThetaPoint::from_theta(PI / 2.0, 0.5).unwrap();
        let p = QParams::arik_coon(0.5).unwrap();
        assert!(
            (weight_omega(&pt, &p, &ctrl()).unwrap()
                - weight_omega_qgauss(PI / 2.0, 0.5, &ctrl()).unwrap())
            .abs()
                < 1e-12
        );
    }

    #[test]
    fn positive_inside_interval() {
        for &q in &[0.3, 0.5, 0.8] {
            for &alpha in &[-0.5, 0.0, 0.25] {
                let p = QParams::new(q, alpha).unwrap();
                for i in 1..101 {
                    let x = p.interval_halfwidth() * (-1.0 + 2.0 * i as f64 / 101.0);
                    assert!(weight_omega_x(x, &p, &ctrl()).unwrap() > 0.0);
                }
            }
        }
    }
}
