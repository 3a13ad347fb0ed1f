//! Measures: the atomic radial measure resolving the identity, the
//! orthogonality weight on `I_q`, and quadrature against that weight.

mod quadrature;
mod weight;

pub use quadrature::{gauss_legendre, make_quadrature, Quadrature};
pub use weight::{
    g_product, weight_density_theta, weight_omega, weight_omega_qgauss, weight_omega_x,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orthopoly::rogers_szego;
use crate::qcore::{
    q_pochhammer_inf_real, sum::CompensatedSum, x_factorial, QParams, SeriesControl,
};
use crate::table::Table;

const MAX_ATOMS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Atom {
    pub radius: f64,
    pub weight: f64,
}

/// Truncation of
/// `ρ = (-α, q; q)_∞ Σ_k q^k / (q;q)_k · h_k(-α/q | q) δ_{r_k}`,
/// `r_k = (1-q)^{-1/2} q^{k/2}`.
///
/// `tail_bound` bounds the total weight of the discarded atoms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscreteRadialMeasure {
    params: QParams,
    atoms: Vec<Atom>,
    tail_bound: f64,
    tol: f64,
}

/// Builds the radial measure with discarded mass below `tol`.
pub fn radial_measure(p: &QParams, tol: f64) -> Result<DiscreteRadialMeasure> {
    radial_measure_for_order(p, tol, 0)
}

/// As [`radial_measure`], additionally keeping enough atoms that moments up to
/// `r^{2 n_max}` lose at most relative `tol` to the tail.
pub fn radial_measure_for_order(
    p: &QParams,
    tol: f64,
    n_max: u32,
) -> Result<DiscreteRadialMeasure> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParams(format!(
            "atom tolerance must be > 0, got {tol}"
        )));
    }
    let q = p.q();
    let alpha = p.alpha();
    let ctrl = SeriesControl::default().with_rel_tol(1e-17);
    let prefactor = q_pochhammer_inf_real(-alpha, q, &ctrl)? * q_pochhammer_inf_real(q, q, &ctrl)?;
    let z = -alpha / q;
    // asymptotic ratio w_{k+1}/w_k: h_k(z) tends to a constant for |z| < 1
    // and grows like z^k for z > 1
    let limit_ratio = q.max(-alpha);
    let r0 = p.disk_radius();
    let target_moment = x_factorial(n_max, p);

    let mut atoms: Vec<Atom> = Vec::new();
    // q^k / (q;q)_k
    let mut scale = 1.0;
    for k in 0..MAX_ATOMS {
        let weight = prefactor * scale * rogers_szego(k as u32, z, q);
        if weight < -tol {
            return Err(Error::PositivityViolation { index: k, weight });
        }
        let radius = r0 * q.powf(k as f64 / 2.0);
        atoms.push(Atom { radius, weight });
        scale *= q / (1.0 - q.powi(k as i32 + 1));

        if k >= 2 {
            let prev = atoms[k - 1].weight;
            let observed = if prev > 0.0 {
                weight / prev
            } else {
                limit_ratio
            };
            let ratio = observed.max(limit_ratio);
            if ratio < 1.0 {
                let tail = 2.0 * weight.abs() * ratio / (1.0 - ratio);
                let next_r2n = (radius * radius * q).powi(n_max as i32);
                if tail < tol && tail * next_r2n < tol * target_moment {
                    return Ok(DiscreteRadialMeasure {
                        params: *p,
                        atoms,
                        tail_bound: tail,
                        tol,
                    });
                }
            }
        }
    }
    Err(Error::non_convergent("radial measure atom tail", MAX_ATOMS))
}

impl DiscreteRadialMeasure {
    pub fn params(&self) -> &QParams {
        &self.params
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms
            .iter()
            .map(|a| a.weight)
            .collect::<CompensatedSum>()
            .value()
    }

    /// Upper bound on the contribution of discarded atoms to `∫ r^{2n} dρ`.
    pub fn moment_tail(&self, n: u32) -> f64 {
        let last = self.atoms.last().map_or(0.0, |a| a.radius);
        let next_r2 = last * last * self.params.q();
        self.tail_bound * next_r2.powi(n as i32)
    }

    /// `∫ r^{2n} ρ(dr)` over the retained atoms; should equal `x_n!`.
    pub fn radial_moment(&self, n: u32) -> Result<f64> {
        let value = self
            .atoms
            .iter()
            .map(|a| a.weight * (a.radius * a.radius).powi(n as i32))
            .collect::<CompensatedSum>()
            .value();
        let rel_tail = self.moment_tail(n) / value.abs();
        if rel_tail > self.tol {
            return Err(Error::AccuracyLoss(format!(
                "moment {n}: relative tail {rel_tail:e} exceeds {:e}",
                self.tol
            )));
        }
        Ok(value)
    }

    /// Atoms as a table with columns `index, radius, weight` and the total
    /// mass in the footer.
    pub fn to_table(&self) -> Table {
        let mut t = Table::new(["index", "radius", "weight"]);
        for (k, a) in self.atoms.iter().enumerate() {
            t.push_row(vec![k as f64, a.radius, a.weight]);
        }
        t.footer("sum_weight", self.total_mass());
        t.footer("tail_bound", self.tail_bound);
        t
    }
}

/// Free-function form of [`DiscreteRadialMeasure::radial_moment`].
pub fn radial_moment(m: &DiscreteRadialMeasure, n: u32) -> Result<f64> {
    m.radial_moment(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::q_pochhammer_real;

    fn params(q: f64, a: f64) -> QParams {
        QParams::new(q, a).unwrap()
    }

    #[test]
    fn arik_coon_weights() {
        let p = params(0.5, 0.0);
        let m = radial_measure(&p, 1e-15).unwrap();
        let ctrl = SeriesControl::default();
        let qq = q_pochhammer_inf_real(0.5, 0.5, &ctrl).unwrap();
        for (k, a) in m.atoms().iter().enumerate() {
            let want = qq * 0.5f64.powi(k as i32) / q_pochhammer_real(0.5, 0.5, k as u32);
            assert!((a.weight - want).abs() < 1e-14);
        }
    }

    #[test]
    fn radii_decrease_geometrically() {
        let p = params(0.3, -0.5);
        let m = radial_measure(&p, 1e-14).unwrap();
        for w in m.atoms().windows(2) {
            assert!(w[1].radius < w[0].radius);
            assert!((w[1].radius / w[0].radius - 0.3f64.sqrt()).abs() < 1e-14);
        }
        assert!((m.atoms()[0].radius - p.disk_radius()).abs() < 1e-15);
    }

    #[test]
    fn mass_and_moments() {
        let p = params(0.5, 0.25);
        let m = radial_measure(&p, 1e-15).unwrap();
        assert!((m.total_mass() - 1.0).abs() < 1e-10);
        assert!((m.radial_moment(0).unwrap() - 1.0).abs() < 1e-10);
        assert!((m.radial_moment(1).unwrap() - 1.25).abs() < 1e-10);
        let x3 = x_factorial(3, &p);
        assert!((m.radial_moment(3).unwrap() - x3).abs() < 1e-10 * x3);

        let p = params(0.8, -0.5);
        let m = radial_measure(&p, 1e-15).unwrap();
        // oracle: 50-digit product (-α;q)_5 [5]_q!
        let x5 = 5.2602234620532542669;
        assert!((x_factorial(5, &p) - x5).abs() < 1e-13 * x5);
        assert!((m.radial_moment(5).unwrap() - x5).abs() < 1e-8 * x5);
    }

    #[test]
    fn loose_tolerance_flags_accuracy_loss() {
        let p = params(0.5, 0.25);
        let m = radial_measure(&p, 1e-3).unwrap();
        assert!(m.tail_bound() < 1e-3);
        // tail of mass is within the loose tolerance, so moment 0 is accepted
        assert!(m.radial_moment(0).is_ok());
        let tight = DiscreteRadialMeasure { tol: 1e-30, ..m };
        assert!(matches!(
            tight.radial_moment(0),
            Err(Error::AccuracyLoss(_))
        ));
    }

    #[test]
    fn order_aware_truncation_keeps_more_atoms() {
        let p = params(0.8, 0.25);
        let a = radial_measure(&p, 1e-6).unwrap();
        let b = radial_measure_for_order(&p, 1e-6, 12).unwrap();
        assert!(b.len() >= a.len());
        assert!(b.moment_tail(12) < 1e-6 * x_factorial(12, &p));
        assert!(radial_measure(&p, 0.0).is_err());
    }

    #[test]
    fn table_footer_has_mass() {
        let p = params(0.5, 0.25);
        let t = radial_measure(&p, 1e-12).unwrap().to_table();
        let csv = t.to_csv();
        assert!(csv.starts_with("index,radius,weight\n"));
        assert!(csv.contains("# sum_weight="));
    }
}
