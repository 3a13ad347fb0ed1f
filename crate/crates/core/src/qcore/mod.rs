//! q-calculus primitives.
//!
//! Everything here is evaluated in complex arithmetic; the real-valued
//! entry points are thin wrappers that check the imaginary part vanishes.

mod hypergeometric;
mod params;
pub mod sum;

pub use hypergeometric::{basic_hypergeometric, terminating_order};
pub use params::{QParams, SeriesControl};

use crate::error::{Error, Result};
use crate::C64;

pub(crate) fn real_part(z: C64) -> f64 {
    debug_assert!(
        z.im.abs() <= 1e-12 * z.re.abs().max(1.0),
        "expected a real value, got {z}"
    );
    z.re
}

/// `[n]_q = (1 - q^n) / (1 - q)`.
pub fn q_bracket(n: u32, q: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    // expm1 keeps full precision as q -> 1.
    -(f64::from(n) * q.ln()).exp_m1() / (1.0 - q)
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32, q: f64) -> f64 {
    (1..=n).map(|k| q_bracket(k, q)).product()
}

/// Finite q-Pochhammer symbol `(a; q)_n`.
pub fn q_pochhammer(a: C64, q: f64, n: u32) -> C64 {
    let mut prod = C64::new(1.0, 0.0);
    let mut qk = 1.0;
    for _ in 0..n {
        prod *= C64::new(1.0, 0.0) - a * qk;
        qk *= q;
    }
    prod
}

pub fn q_pochhammer_real(a: f64, q: f64, n: u32) -> f64 {
    real_part(q_pochhammer(C64::new(a, 0.0), q, n))
}

/// Infinite q-Pochhammer symbol `(a; q)_∞`.
///
/// Factors are multiplied until `consecutive_small` successive values of
/// `|a q^k|` fall below `rel_tol (1 - q)`, which bounds the neglected tail
/// `Σ |a q^j|` by `rel_tol`.
pub fn q_pochhammer_inf(a: C64, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    if a == C64::new(0.0, 0.0) {
        return Ok(C64::new(1.0, 0.0));
    }
    let cutoff = ctrl.rel_tol * (1.0 - q);
    let mut prod = C64::new(1.0, 0.0);
    let mut factor = a;
    let mut small = 0;
    for _ in 0..ctrl.max_terms {
        prod *= C64::new(1.0, 0.0) - factor;
        if factor.norm() < cutoff {
            small += 1;
            if small >= ctrl.consecutive_small {
                return Ok(prod);
            }
        } else {
            small = 0;
        }
        factor *= q;
    }
    Err(Error::non_convergent(
        format!("({a}; {q})_inf"),
        ctrl.max_terms,
    ))
}

pub fn q_pochhammer_inf_real(a: f64, q: f64, ctrl: &SeriesControl) -> Result<f64> {
    q_pochhammer_inf(C64::new(a, 0.0), q, ctrl).map(real_part)
}

/// Generic driver for `Σ t_k` with `t_{k+1} = t_k · ratio(k)`.
///
/// With `terms = Some(n)` exactly `n` terms are summed; otherwise the series
/// stops once `consecutive_small` successive terms, and the geometric tail
/// estimated from the last ratio, are below `rel_tol · |partial sum|`.
pub(crate) fn sum_ratio_series<F>(
    first: C64,
    ctrl: &SeriesControl,
    terms: Option<usize>,
    what: impl FnOnce() -> String,
    mut ratio: F,
) -> Result<C64>
where
    F: FnMut(usize) -> Result<C64>,
{
    let mut acc = sum::ComplexSum::new();
    let mut term = first;
    acc.add(term);
    if let Some(n) = terms {
        for k in 0..n.saturating_sub(1) {
            term *= ratio(k)?;
            acc.add(term);
        }
        return Ok(acc.value());
    }
    let mut small = 0;
    for k in 0..ctrl.max_terms {
        let r = ratio(k)?;
        term *= r;
        acc.add(term);
        // a small term is not enough when the ratio is close to 1: the
        // geometric tail term·ρ/(1-ρ) must be small as well
        let rho = r.norm();
        let tail = if rho < 1.0 {
            term.norm() * rho / (1.0 - rho)
        } else {
            f64::INFINITY
        };
        let bound = ctrl.rel_tol * acc.value().norm();
        if term.norm() <= bound && (tail <= bound || term.norm() == 0.0) {
            small += 1;
            if small >= ctrl.consecutive_small {
                return Ok(acc.value());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::non_convergent(what(), ctrl.max_terms))
}

/// The q-exponential `e_q(ξ) = Σ ξ^n / [n]_q!`, summed as a series.
pub fn q_exp(xi: C64, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    if xi.norm() * (1.0 - q) >= 1.0 {
        return Err(Error::domain(format!(
            "q_exp needs |xi|(1-q) < 1, got {}",
            xi.norm() * (1.0 - q)
        )));
    }
    let step = xi * (1.0 - q);
    sum_ratio_series(
        C64::new(1.0, 0.0),
        ctrl,
        None,
        || format!("e_q({xi})"),
        |k| Ok(step / (1.0 - q.powi(k as i32 + 1))),
    )
}

/// `e_q(ξ)` through its product form `1 / (ξ(1-q); q)_∞`.
pub fn q_exp_product(xi: C64, q: f64, ctrl: &SeriesControl) -> Result<C64> {
    if xi.norm() * (1.0 - q) >= 1.0 {
        return Err(Error::domain(format!(
            "q_exp needs |xi|(1-q) < 1, got {}",
            xi.norm() * (1.0 - q)
        )));
    }
    Ok(q_pochhammer_inf(xi * (1.0 - q), q, ctrl)?.inv())
}

/// The deformed sequence `x_n = (1 + α q^(n-1)) [n]_q`, with `x_0 = 0`.
pub fn x_seq(n: u32, p: &QParams) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (1.0 + p.alpha() * p.q().powi(n as i32 - 1)) * q_bracket(n, p.q())
}

/// Generalized factorial `x_n! = (-α; q)_n [n]_q!`, with `x_0! = 1`.
pub fn x_factorial(n: u32, p: &QParams) -> f64 {
    q_pochhammer_real(-p.alpha(), p.q(), n) * q_factorial(n, p.q())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn bracket_values() {
        assert_eq!(q_bracket(0, 0.5), 0.0);
        assert_relative_eq!(q_bracket(1, 0.5), 1.0, max_relative = 1e-15);
        assert_relative_eq!(q_bracket(3, 0.5), 1.75, max_relative = 1e-15);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(q_factorial(0, 0.5), 1.0);
        assert_relative_eq!(q_factorial(2, 0.5), 1.5, max_relative = 1e-15);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(q_pochhammer(c(0.7, 0.2), 0.5, 0), c(1.0, 0.0));
        assert_relative_eq!(
            q_pochhammer_real(-0.25, 0.5, 2),
            1.40625,
            max_relative = 1e-15
        );
    }

    #[test]
    fn pochhammer_inf_of_zero() {
        let ctrl = SeriesControl::default();
        assert_eq!(
            q_pochhammer_inf(c(0.0, 0.0), 0.3, &ctrl).unwrap(),
            c(1.0, 0.0)
        );
    }

    #[test]
    fn pochhammer_inf_caps_terms() {
        let ctrl = SeriesControl::default().with_max_terms(5);
        assert!(matches!(
            q_pochhammer_inf(c(0.5, 0.0), 0.9, &ctrl),
            Err(Error::NonConvergent { .. })
        ));
    }

    #[test]
    fn q_exp_domain() {
        let ctrl = SeriesControl::default();
        assert_eq!(q_exp(c(0.0, 0.0), 0.5, &ctrl).unwrap(), c(1.0, 0.0));
        assert!(matches!(
            q_exp(c(2.0, 0.0), 0.5, &ctrl),
            Err(Error::Domain(_))
        ));
        assert!(q_exp_product(c(0.0, 2.5), 0.5, &ctrl).is_err());
    }

    #[test]
    fn x_sequence_values() {
        let p = QParams::new(0.5, 0.25).unwrap();
        assert_eq!(x_seq(0, &p), 0.0);
        assert_relative_eq!(x_seq(1, &p), 1.25, max_relative = 1e-15);
        assert_relative_eq!(x_seq(3, &p), 1.859375, max_relative = 1e-15);
        assert_eq!(x_factorial(0, &p), 1.0);
        assert_relative_eq!(x_factorial(2, &p), 2.109375, max_relative = 1e-15);
    }

    #[test]
    fn bracket_tends_to_n() {
        for k in 1..=6 {
            let q = 1.0 - 10f64.powi(-k);
            for n in 1..=20u32 {
                let bound = f64::from(n * n) * 10f64.powi(-k);
                assert!((q_bracket(n, q) - f64::from(n)).abs() <= bound);
            }
        }
    }
}
