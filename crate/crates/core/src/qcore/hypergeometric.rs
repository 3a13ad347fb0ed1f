use super::{sum_ratio_series, SeriesControl};
use crate::error::{Error, Result};
use crate::C64;

/// If `a = q^{-N}` for a nonnegative integer `N`, returns `N`.
pub fn terminating_order(a: C64, q: f64) -> Option<u32> {
    if a.im.abs() > 1e-14 * a.norm() || a.re < 1.0 - 1e-14 {
        return None;
    }
    let n = (-a.re.ln() / q.ln()).round();
    if !(0.0..=f64::from(u32::MAX)).contains(&n) {
        return None;
    }
    let n = n as u32;
    let exact = q.powi(-(n as i32));
    ((exact - a.re).abs() <= 1e-12 * a.re).then_some(n)
}

/// The basic hypergeometric series `mφs(a_1..a_m; b_1..b_s | q; ξ)`:
///
/// `Σ_k (a;q)_k / (b;q)_k · ((-1)^k q^C(k,2))^(1+s-m) · ξ^k / (q;q)_k`.
///
/// If any numerator parameter is `q^{-N}` the series is summed to exactly
/// `N + 1` terms; otherwise it is truncated by `ctrl`.
pub fn basic_hypergeometric(
    a: &[C64],
    b: &[C64],
    q: f64,
    xi: C64,
    ctrl: &SeriesControl,
) -> Result<C64> {
    let excess = 1 + b.len() as i32 - a.len() as i32;
    let terms = a
        .iter()
        .filter_map(|&ai| terminating_order(ai, q))
        .min()
        .map(|n| n as usize + 1);
    let what = || format!("{}phi{} at xi = {xi}", a.len(), b.len());
    sum_ratio_series(C64::new(1.0, 0.0), ctrl, terms, what, |k| {
        let qk = q.powi(k as i32);
        let mut num = xi;
        for &ai in a {
            num *= C64::new(1.0, 0.0) - ai * qk;
        }
        let mut den = C64::new(1.0 - qk * q, 0.0);
        for &bj in b {
            let f = C64::new(1.0, 0.0) - bj * qk;
            if f.norm() <= 1e-14 * (1.0 + (bj * qk).norm()) {
                return Err(Error::Pole(format!(
                    "denominator parameter {bj} equals q^-{k}"
                )));
            }
            den *= f;
        }
        if excess != 0 {
            num *= (-qk).powi(excess);
        }
        Ok(num / den)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{q_exp, q_pochhammer};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn detects_terminating_parameter() {
        assert_eq!(terminating_order(c(4.0, 0.0), 0.5), Some(2));
        assert_eq!(terminating_order(c(1.0, 0.0), 0.5), Some(0));
        assert_eq!(terminating_order(c(3.0, 0.0), 0.5), None);
        assert_eq!(terminating_order(c(4.0, 0.1), 0.5), None);
        assert_eq!(terminating_order(c(0.25, 0.0), 0.5), None);
    }

    #[test]
    fn two_phi_one_at_zero() {
        let ctrl = SeriesControl::default();
        let v = basic_hypergeometric(&[c(0.0, 0.0); 2], &[c(0.25, 0.0)], 0.5, c(0.0, 0.0), &ctrl)
            .unwrap();
        assert_eq!(v, c(1.0, 0.0));
    }

    #[test]
    fn zero_phi_zero_matches_q_exp() {
        // 1φ0(0; - | q; ξ(1-q)) = e_q(ξ)
        let ctrl = SeriesControl::default();
        let q = 0.6;
        let xi = c(0.3, -0.2);
        let lhs = basic_hypergeometric(&[c(0.0, 0.0)], &[], q, xi * (1.0 - q), &ctrl).unwrap();
        let rhs = q_exp(xi, q, &ctrl).unwrap();
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
        // 0φ0(-; - | q; x) = (x; q)_∞
        let x = c(0.4, 0.1);
        let lhs = basic_hypergeometric(&[], &[], q, x, &ctrl).unwrap();
        let rhs = crate::qcore::q_pochhammer_inf(x, q, &ctrl).unwrap();
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
    }

    #[test]
    fn terminating_matches_explicit_sum() {
        let q: f64 = 0.5;
        let n: i32 = 4;
        let a = [c(q.powi(-n), 0.0), c(0.3, 0.2), c(-0.4, 0.1)];
        let b = [c(0.2, 0.0), c(0.0, 0.0)];
        let xi = c(q, 0.0);
        let ctrl = SeriesControl::default();
        let got = basic_hypergeometric(&a, &b, q, xi, &ctrl).unwrap();
        let mut want = c(0.0, 0.0);
        for k in 0..=n as u32 {
            let num: C64 = a.iter().map(|&x| q_pochhammer(x, q, k)).product();
            let den: C64 = b.iter().map(|&x| q_pochhammer(x, q, k)).product();
            want += num / den * xi.powu(k) / q_pochhammer(c(q, 0.0), q, k);
        }
        assert!((got - want).norm() <= 1e-13 * want.norm().max(1.0));
    }

    #[test]
    fn pole_is_reported() {
        let ctrl = SeriesControl::default();
        let r = basic_hypergeometric(&[c(0.1, 0.0)], &[c(4.0, 0.0)], 0.5, c(0.3, 0.0), &ctrl);
        assert!(matches!(r, Err(Error::Pole(_))));
    }

    #[test]
    fn divergent_argument_is_reported() {
        let ctrl = SeriesControl::default().with_max_terms(1000);
        let r = basic_hypergeometric(&[c(0.0, 0.0); 2], &[c(0.1, 0.0)], 0.5, c(1.5, 0.0), &ctrl);
        assert!(matches!(r, Err(Error::NonConvergent { .. })));
    }
}
