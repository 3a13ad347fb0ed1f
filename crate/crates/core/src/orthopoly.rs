//! Polynomial families on the interval `I_q` and their classical limits.
//!
//! All evaluators run the three-term recurrence forward from degree 0. The
//! terminating `3φ2` form of the Al-Salam-Chihara polynomials is kept as an
//! independent validation route.

use std::ops::Index;

use num_bigint::BigInt;
use num_traits::{Float, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcore::{
    basic_hypergeometric, q_pochhammer, q_pochhammer_real, x_seq, QParams, SeriesControl,
};
use crate::C64;

/// A point of `I_q` carried together with its angle, `x √(1-q) = 2 cos θ`.
///
/// Construct from `θ` whenever possible: near the endpoints the angle keeps
/// `sin θ` accurate where `4 - (1-q) x²` would cancel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaPoint {
    theta: f64,
    x: f64,
    q: f64,
}

impl ThetaPoint {
    pub fn from_theta(theta: f64, q: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::domain(format!("theta = {theta} outside [0, pi]")));
        }
        Ok(ThetaPoint {
            theta,
            x: 2.0 * theta.cos() / (1.0 - q).sqrt(),
            q,
        })
    }

    pub fn from_x(x: f64, q: f64) -> Result<Self> {
        let c = x * (1.0 - q).sqrt() / 2.0;
        if !(-1.0..=1.0).contains(&c) {
            return Err(Error::domain(format!(
                "x = {x} outside the closed interval |x| <= {}",
                2.0 / (1.0 - q).sqrt()
            )));
        }
        Ok(ThetaPoint {
            theta: c.acos(),
            x,
            q,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `cos θ = x √(1-q) / 2`, the Al-Salam-Chihara variable.
    pub fn cos_theta(&self) -> f64 {
        self.theta.cos()
    }

    pub fn sin_theta(&self) -> f64 {
        self.theta.sin()
    }

    /// True when strictly inside `I_q`.
    pub fn is_interior(&self) -> bool {
        self.theta > 0.0 && self.theta < std::f64::consts::PI
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum PolyFamily {
    /// `Q_n(ξ; √α, -√α | q)`.
    AlSalamChihara {
        q: f64,
        alpha: f64,
    },
    /// The orthonormal basis `φ_n`.
    OrthonormalBasis {
        q: f64,
        alpha: f64,
    },
    /// Monic `P_n = √(x_n!) φ_n`.
    Monic {
        q: f64,
        alpha: f64,
    },
    ContinuousQHermite {
        q: f64,
    },
    /// Normalized Meixner-Pollaczek at `φ = π/2`.
    MeixnerPollaczek {
        nu: f64,
    },
}

/// Values `p_0(x), …, p_{n_max}(x)` of one family at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolySequence {
    pub family: PolyFamily,
    pub values: Vec<f64>,
}

impl PolySequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }
}

impl Index<usize> for PolySequence {
    type Output = f64;

    fn index(&self, n: usize) -> &f64 {
        &self.values[n]
    }
}

/// Symmetric Al-Salam-Chihara recurrence in the variable `ξ`:
/// `2ξ Q_n = Q_{n+1} + (1 - q^n)(1 + α q^{n-1}) Q_{n-1}`.
/// Only `α = a²` enters, so this is real for either sign of `α`.
fn asc_sym_recurrence(n_max: usize, xi: f64, alpha: f64, q: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(n_max + 1);
    v.push(1.0);
    if n_max == 0 {
        return v;
    }
    v.push(2.0 * xi);
    let mut qn = q;
    for n in 1..n_max {
        let coupling = (1.0 - qn) * (1.0 + alpha * qn / q);
        let next = 2.0 * xi * v[n] - coupling * v[n - 1];
        v.push(next);
        qn *= q;
    }
    v
}

/// `Q_n(x √(1-q) / 2; √α, -√α | q)` for `n = 0..=n_max`.
pub fn asc_eval_sym(n_max: usize, x: f64, p: &QParams) -> PolySequence {
    asc_eval_sym_xi(n_max, x * p.sqrt_one_minus_q() / 2.0, p)
}

/// Same as [`asc_eval_sym`] with the Al-Salam-Chihara variable `ξ` given directly.
pub fn asc_eval_sym_xi(n_max: usize, xi: f64, p: &QParams) -> PolySequence {
    PolySequence {
        family: PolyFamily::AlSalamChihara {
            q: p.q(),
            alpha: p.alpha(),
        },
        values: asc_sym_recurrence(n_max, xi, p.alpha(), p.q()),
    }
}

/// `Q_n(cos θ; a, b | q) = (ab;q)_n a^{-n} 3φ2(q^{-n}, a e^{iθ}, a e^{-iθ}; ab, 0 | q; q)`.
///
/// Real `a, b` go through [`asc_eval_3phi2_xi`]; complex parameters are
/// summed in floating point, which is only reliable for moderate `q^{-n}`.
pub fn asc_eval_3phi2(n: u32, theta: f64, a: C64, b: C64, q: f64) -> Result<C64> {
    if a.norm() == 0.0 {
        return Err(Error::domain("Al-Salam-Chihara 3phi2 form needs a != 0"));
    }
    if a.im == 0.0 && b.im == 0.0 {
        return asc_eval_3phi2_xi(n, theta.cos(), a.re, b.re, q).map(|v| C64::new(v, 0.0));
    }
    let e = C64::from_polar(1.0, theta);
    let top = [C64::new(q.powi(-(n as i32)), 0.0), a * e, a * e.conj()];
    let bottom = [a * b, C64::new(0.0, 0.0)];
    let ctrl = SeriesControl::default();
    let series = basic_hypergeometric(&top, &bottom, q, C64::new(q, 0.0), &ctrl)?;
    Ok(q_pochhammer(a * b, q, n) / a.powu(n) * series)
}

/// Terminating `3φ2` form for real `a, b` at `ξ = cos θ`, summed exactly.
///
/// The terms carry `q^{-nk}` and cancel down to `O(a^n)`, far beyond what
/// double precision survives for small `q`. The numerator pair is real,
/// `(a e^{iθ}, a e^{-iθ}; q)_k = ∏_{j<k} (1 - 2aξ q^j + a² q^{2j})`, and every
/// `f64` is a dyadic rational. Clearing denominators gives
/// `Q_n = Σ_k N_k ∏_{j=k}^{n-1} (1 - ab q^j)(1 - q^{j+1}) / ((q;q)_n a^n)` with
/// `N_k = (q^{-n}, a e^{iθ}, a e^{-iθ}; q)_k q^k`; the numerator is summed
/// exactly in big integers and rounded once.
pub fn asc_eval_3phi2_xi(n: u32, xi: f64, a: f64, b: f64, q: f64) -> Result<f64> {
    if a == 0.0 {
        return Err(Error::domain("Al-Salam-Chihara 3phi2 form needs a != 0"));
    }
    if ![xi, a, b, q].iter().all(|v| v.is_finite()) {
        return Err(Error::domain("non-finite 3phi2 input"));
    }
    let n = n as usize;
    let one = Dyadic::from(1.0);
    let (dxi, da, dq) = (Dyadic::from(xi), Dyadic::from(a), Dyadic::from(q));
    let dab = da.mul(&Dyadic::from(b));
    let two_a_xi = Dyadic::from(2.0).mul(&da).mul(&dxi);
    let a2 = da.mul(&da);

    // q^j for j = 0..=n
    let mut qpow = vec![one.clone()];
    for j in 0..n {
        qpow.push(qpow[j].mul(&dq));
    }
    // (1 - ab q^j)(1 - q^{j+1}), the factors cleared from the denominators
    let mut cleared = Vec::with_capacity(n);
    for j in 0..n {
        let lower = one.sub(&dab.mul(&qpow[j]));
        if lower.is_zero() {
            return Err(Error::Pole(format!("(ab;q)_k vanishes at k = {j}")));
        }
        cleared.push(lower.mul(&one.sub(&qpow[j + 1])));
    }
    // suffix products ∏_{j=k}^{n-1} cleared_j
    let mut suffix = vec![one.clone(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = suffix[k + 1].mul(&cleared[k]);
    }

    // (1 - q^{-n} q^j) q = q - q^{j+1-n} is scaled by q^n to stay dyadic:
    // N_k q^{nk} = ∏_{j<k} (q^n - q^j) q (pair_j)
    let mut numer = Dyadic::zero();
    let mut nk = one.clone();
    for k in 0..=n {
        numer = numer.add(&nk.mul(&suffix[k]).mul(&qpow[n].powu(n - k)));
        if k < n {
            let pair = one
                .sub(&two_a_xi.mul(&qpow[k]))
                .add(&a2.mul(&qpow[k]).mul(&qpow[k]));
            nk = nk.mul(&qpow[n].sub(&qpow[k])).mul(&dq).mul(&pair);
        }
    }
    // every term was scaled by q^{nk} q^{n(n-k)} = q^{n²}
    let mut denom = qpow[n].powu(n).mul(&da.powu(n));
    for qj in &qpow[1..=n] {
        denom = denom.mul(&one.sub(qj));
    }
    Ok(numer.ratio_f64(&denom))
}

/// Exact `m · 2^e`.
#[derive(Debug, Clone)]
struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    fn zero() -> Self {
        Dyadic {
            m: BigInt::zero(),
            e: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    fn mul(&self, o: &Dyadic) -> Dyadic {
        Dyadic {
            m: &self.m * &o.m,
            e: self.e + o.e,
        }
    }

    fn add(&self, o: &Dyadic) -> Dyadic {
        let e = self.e.min(o.e);
        Dyadic {
            m: (&self.m << (self.e - e) as usize) + (&o.m << (o.e - e) as usize),
            e,
        }
    }

    fn sub(&self, o: &Dyadic) -> Dyadic {
        self.add(&Dyadic { m: -&o.m, e: o.e })
    }

    fn powu(&self, k: usize) -> Dyadic {
        (0..k).fold(Dyadic::from(1.0), |acc, _| acc.mul(self))
    }

    /// Top 64 bits of the mantissa and the matching exponent.
    fn split(&self) -> (f64, i64) {
        let bits = self.m.bits() as i64;
        let shift = (bits - 64).max(0);
        let top = &self.m >> shift as usize;
        (top.to_f64().unwrap_or(0.0), self.e + shift)
    }

    fn ratio_f64(&self, o: &Dyadic) -> f64 {
        let (a, ea) = self.split();
        let (b, eb) = o.split();
        (a / b) * 2f64.powi((ea - eb) as i32)
    }
}

impl From<f64> for Dyadic {
    fn from(v: f64) -> Self {
        let (mant, exp, sign) = v.integer_decode();
        Dyadic {
            m: BigInt::from(mant) * i64::from(sign),
            e: i64::from(exp),
        }
    }
}

fn phi_from_asc(q_values: Vec<f64>, p: &QParams) -> PolySequence {
    let mut values = q_values;
    let mut norm2 = 1.0;
    let mut qk = 1.0;
    for (n, v) in values.iter_mut().enumerate() {
        if n > 0 {
            // (-α, q; q)_n built one factor at a time
            norm2 *= (1.0 + p.alpha() * qk) * (1.0 - qk * p.q());
            qk *= p.q();
        }
        *v /= norm2.sqrt();
    }
    PolySequence {
        family: PolyFamily::OrthonormalBasis {
            q: p.q(),
            alpha: p.alpha(),
        },
        values,
    }
}

/// Orthonormal basis `φ_n(x) = ((-α, q; q)_n)^{-1/2} Q_n(x √(1-q)/2; √α, -√α | q)`.
pub fn basis_phi(n_max: usize, x: f64, p: &QParams) -> Result<PolySequence> {
    ThetaPoint::from_x(x, p.q())?;
    Ok(phi_from_asc(
        asc_sym_recurrence(n_max, x * p.sqrt_one_minus_q() / 2.0, p.alpha(), p.q()),
        p,
    ))
}

/// [`basis_phi`] at an angle; preferred near the endpoints of `I_q`.
pub fn basis_phi_theta(n_max: usize, pt: &ThetaPoint, p: &QParams) -> PolySequence {
    phi_from_asc(
        asc_sym_recurrence(n_max, pt.cos_theta(), p.alpha(), p.q()),
        p,
    )
}

/// Monic polynomials from `x P_n = P_{n+1} + x_n P_{n-1}`.
pub fn p_monic_eval(n_max: usize, x: f64, p: &QParams) -> PolySequence {
    let mut v = Vec::with_capacity(n_max + 1);
    v.push(1.0);
    if n_max > 0 {
        v.push(x);
    }
    for n in 1..n_max {
        let next = x * v[n] - x_seq(n as u32, p) * v[n - 1];
        v.push(next);
    }
    PolySequence {
        family: PolyFamily::Monic {
            q: p.q(),
            alpha: p.alpha(),
        },
        values: v,
    }
}

/// Continuous q-Hermite `H_n(cos θ | q)`:
/// `2 cos θ H_n = H_{n+1} + (1 - q^n) H_{n-1}`.
pub fn q_hermite_cont(n_max: usize, theta: f64, q: f64) -> PolySequence {
    let c = 2.0 * theta.cos();
    let mut v = Vec::with_capacity(n_max + 1);
    v.push(1.0);
    if n_max > 0 {
        v.push(c);
    }
    let mut qn = q;
    for n in 1..n_max {
        let next = c * v[n] - (1.0 - qn) * v[n - 1];
        v.push(next);
        qn *= q;
    }
    PolySequence {
        family: PolyFamily::ContinuousQHermite { q },
        values: v,
    }
}

/// `H_n(cos θ | q) / √((q;q)_n)`, the orthonormal q-Hermite family.
pub fn q_hermite_normalized(n_max: usize, theta: f64, q: f64) -> PolySequence {
    let mut s = q_hermite_cont(n_max, theta, q);
    for (n, v) in s.values.iter_mut().enumerate() {
        *v /= q_pochhammer_real(q, q, n as u32).sqrt();
    }
    s
}

/// Rogers-Szegő polynomial `h_n(z | q) = Σ_k [n choose k]_q z^k`.
pub fn rogers_szego(n: u32, z: f64, q: f64) -> f64 {
    let mut binom = 1.0;
    let mut power = 1.0;
    let mut acc = crate::qcore::sum::CompensatedSum::new();
    for k in 0..=n {
        acc.add(binom * power);
        // [n choose k+1] = [n choose k] (1 - q^{n-k}) / (1 - q^{k+1})
        binom *= (1.0 - q.powi((n - k) as i32)) / (1.0 - q.powi(k as i32 + 1));
        power *= z;
    }
    acc.value()
}

/// Normalized Meixner-Pollaczek `P_n^ν(x; π/2) √(n! / (2ν)_n)`.
///
/// Uses the symmetric Jacobi form `x φ_n = b_{n+1} φ_{n+1} + b_n φ_{n-1}`
/// with `b_n = √(n (n + 2ν - 1)) / 2`.
pub fn meixner_pollaczek_norm(n_max: usize, x: f64, nu: f64) -> Result<PolySequence> {
    if !(nu.is_finite() && nu > 0.0) {
        return Err(Error::domain(format!(
            "Meixner-Pollaczek needs nu > 0, got {nu}"
        )));
    }
    let b = |n: usize| (n as f64 * (n as f64 + 2.0 * nu - 1.0)).sqrt() / 2.0;
    let mut v = Vec::with_capacity(n_max + 1);
    v.push(1.0);
    if n_max > 0 {
        v.push(x / b(1));
    }
    for n in 1..n_max {
        let next = (x * v[n] - b(n) * v[n - 1]) / b(n + 1);
        v.push(next);
    }
    Ok(PolySequence {
        family: PolyFamily::MeixnerPollaczek { nu },
        values: v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn params(q: f64, a: f64) -> QParams {
        QParams::new(q, a).unwrap()
    }

    #[test]
    fn theta_point_round_trip() {
        let q = 0.5;
        for i in 0..=20 {
            let theta = PI * i as f64 / 20.0;
            let pt = ThetaPoint::from_theta(theta, q).unwrap();
            let back = ThetaPoint::from_x(pt.x(), q).unwrap();
            assert!((back.theta() - theta).abs() < 1e-7 || i == 0 || i == 20);
            if i != 0 && i != 20 {
                assert!((back.theta() - theta).abs() < 1e-12);
                assert!(pt.is_interior());
            }
        }
        assert!(ThetaPoint::from_x(3.0, 0.5).is_err());
        assert!(ThetaPoint::from_theta(-0.1, 0.5).is_err());
    }

    #[test]
    fn asc_base_cases() {
        let p = params(0.5, 0.3);
        let s = asc_eval_sym_xi(3, 0.37, &p);
        assert_eq!(s[0], 1.0);
        assert_relative_eq!(s[1], 0.74, max_relative = 1e-15);
    }

    #[test]
    fn asc_routes_agree_at_sample() {
        let p = params(0.5, 0.3);
        let x = 0.7;
        let xi = x * p.sqrt_one_minus_q() / 2.0;
        let rec = asc_eval_sym(5, x, &p);
        let a = p.sqrt_alpha();
        let via = asc_eval_3phi2(5, xi.acos(), a, -a, 0.5).unwrap();
        assert!((via.re - rec[5]).abs() < 1e-11 * rec[5].abs().max(1.0));
        assert!(via.im.abs() < 1e-10);

        let via2 =
            asc_eval_3phi2(2, PI / 3.0, C64::new(0.5, 0.0), C64::new(-0.5, 0.0), 0.5).unwrap();
        let rec2 = asc_eval_sym_xi(2, (PI / 3.0).cos(), &params(0.5, 0.25));
        assert!((via2.re - rec2[2]).abs() < 1e-13);
    }

    #[test]
    fn asc_3phi2_degree_one() {
        let (a, b) = (C64::new(0.4, 0.1), C64::new(-0.2, 0.3));
        let theta = 1.1;
        let got = asc_eval_3phi2(1, theta, a, b, 0.6).unwrap();
        let want = 2.0 * theta.cos() - (a + b);
        assert!((got - want).norm() < 1e-14);
        assert_eq!(
            asc_eval_3phi2(0, theta, a, b, 0.6).unwrap(),
            C64::new(1.0, 0.0)
        );
    }

    #[test]
    fn asc_3phi2_rejects_zero_a() {
        assert!(matches!(
            asc_eval_3phi2(2, 0.5, C64::new(0.0, 0.0), C64::new(0.1, 0.0), 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn phi_zero_and_domain() {
        let p = params(0.5, 0.3);
        assert_eq!(basis_phi(4, 0.1, &p).unwrap()[0], 1.0);
        assert!(basis_phi(4, 3.0, &p).is_err());
        // closed endpoint is allowed
        assert!(basis_phi(4, p.interval_halfwidth(), &p).is_ok());
    }

    #[test]
    fn phi_two_term_recurrence() {
        for &(q, a) in &[(0.3, -0.5), (0.5, 0.25), (0.8, 0.0)] {
            let p = params(q, a);
            for i in 1..20 {
                let x = p.interval_halfwidth() * (-1.0 + i as f64 / 10.0);
                let phi = basis_phi(21, x, &p).unwrap();
                for n in 1..20 {
                    let rhs = x_seq(n as u32, &p).sqrt() * phi[n - 1]
                        + x_seq(n as u32 + 1, &p).sqrt() * phi[n + 1];
                    assert!((x * phi[n] - rhs).abs() < 1e-11, "q={q} a={a} x={x} n={n}");
                }
            }
        }
    }

    #[test]
    fn phi_at_alpha_zero_is_normalized_hermite() {
        let p = params(0.6, 0.0);
        for i in 1..10 {
            let theta = PI * i as f64 / 10.0;
            let pt = ThetaPoint::from_theta(theta, 0.6).unwrap();
            let phi = basis_phi_theta(15, &pt, &p);
            let h = q_hermite_normalized(15, theta, 0.6);
            for n in 0..=15 {
                assert!((phi[n] - h[n]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hermite_is_asc_at_alpha_zero() {
        let p = params(0.45, 0.0);
        let theta = 0.83;
        let h = q_hermite_cont(12, theta, 0.45);
        let asc = asc_eval_sym_xi(12, theta.cos(), &p);
        assert_eq!(h[0], 1.0);
        assert_relative_eq!(h[1], 2.0 * theta.cos(), max_relative = 1e-15);
        for n in 0..=12 {
            assert!((h[n] - asc[n]).abs() < 1e-13);
        }
    }

    #[test]
    fn monic_recurrence_and_scaling() {
        let p = params(0.5, 0.3);
        let x = 0.9;
        let m = p_monic_eval(8, x, &p);
        assert_eq!(m[0], 1.0);
        assert_eq!(m[1], x);
        assert_relative_eq!(m[2], x * x - x_seq(1, &p), max_relative = 1e-15);
        let phi = basis_phi(8, x, &p).unwrap();
        for n in 0..=8 {
            let scaled = crate::qcore::x_factorial(n as u32, &p).sqrt() * phi[n];
            assert!((scaled - m[n]).abs() < 1e-12 * m[n].abs().max(1.0));
        }
    }

    #[test]
    fn rogers_szego_values() {
        let q = 0.5;
        assert_eq!(rogers_szego(0, 0.3, q), 1.0);
        let z = 0.7;
        assert_relative_eq!(
            rogers_szego(2, z, q),
            1.0 + (1.0 + q) * z + z * z,
            max_relative = 1e-15
        );
        // oracle: 50-digit direct summation
        assert_relative_eq!(
            rogers_szego(6, 1.0, 0.5),
            13.748046875,
            max_relative = 1e-14
        );
    }

    #[test]
    fn rogers_szego_recurrence_oracle() {
        // h_{n+1} = (1+z) h_n - z (1 - q^n) h_{n-1}
        let (z, q): (f64, f64) = (-0.8, 0.35);
        let mut h = vec![1.0, 1.0 + z];
        for n in 1..30 {
            let next = (1.0 + z) * h[n] - z * (1.0 - q.powi(n as i32)) * h[n - 1];
            h.push(next);
        }
        for (n, want) in h.iter().enumerate() {
            assert!((rogers_szego(n as u32, z, q) - want).abs() < 1e-13);
        }
    }

    #[test]
    fn rogers_szego_reciprocal_symmetry() {
        for &z in &[0.3f64, -0.6, 1.7, -2.2] {
            for n in 0..15u32 {
                let lhs = z.powi(n as i32) * rogers_szego(n, 1.0 / z, 0.55);
                let rhs = rogers_szego(n, z, 0.55);
                assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn meixner_pollaczek_values() {
        let s = meixner_pollaczek_norm(3, 0.5, 1.0).unwrap();
        assert_eq!(s[0], 1.0);
        // oracle: explicit 2F1 form at 50 digits
        assert_relative_eq!(s[3], -0.58333333333333333333, max_relative = 1e-14);
        let minus = meixner_pollaczek_norm(10, -0.5, 1.7).unwrap();
        let plus = meixner_pollaczek_norm(10, 0.5, 1.7).unwrap();
        for n in 0..=10 {
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((minus[n] - sign * plus[n]).abs() < 1e-14);
        }
        assert!(meixner_pollaczek_norm(3, 0.5, 0.0).is_err());
    }

    #[test]
    fn exact_3phi2_survives_small_q() {
        // the float sum cancels terms of size q^{-n(n-1)/2} ~ 1e34 here
        let (q, alpha) = (0.3, 0.1);
        let p = params(q, alpha);
        let a = alpha.sqrt();
        for &xi in &[-0.9, -0.31, 0.0, 0.47, 1.0] {
            let rec = asc_eval_sym_xi(12, xi, &p);
            for n in 0..=12u32 {
                let v = asc_eval_3phi2_xi(n, xi, a, -a, q).unwrap();
                let r = rec[n as usize];
                assert!(
                    (v - r).abs() <= 1e-12 * r.abs(),
                    "n={n} xi={xi}: {v} vs {r}"
                );
            }
        }
        // odd degrees vanish exactly at the centre
        assert_eq!(asc_eval_3phi2_xi(7, 0.0, a, -a, q).unwrap(), 0.0);
    }

    #[test]
    fn exact_3phi2_general_real_pair() {
        // Q_1 = 2ξ - (a + b) and the complex entry point agrees for real a, b
        let v = asc_eval_3phi2_xi(1, 0.3, 0.4, 0.2, 0.5).unwrap();
        assert!((v - 0.0).abs() < 1e-15);
        let c = asc_eval_3phi2(3, 1.1, C64::new(0.4, 0.0), C64::new(0.2, 0.0), 0.5).unwrap();
        let d = asc_eval_3phi2_xi(3, 1.1f64.cos(), 0.4, 0.2, 0.5).unwrap();
        assert_eq!(c, C64::new(d, 0.0));
        assert!(matches!(
            asc_eval_3phi2_xi(3, 0.1, 2.0, 1.0, 0.5),
            Err(Error::Pole(_))
        ));
    }
}
