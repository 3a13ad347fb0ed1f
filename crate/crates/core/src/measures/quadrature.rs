use std::f64::consts::PI;

use serde::Serialize;

use super::weight::weight_density_theta;
use crate::error::{Error, Result};
use crate::orthopoly::ThetaPoint;
use crate::qcore::{
    sum::{CompensatedSum, ComplexSum},
    QParams, SeriesControl,
};
use crate::table::Table;
use crate::C64;

/// Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 0 { 1.0 } else { p1 };
            let pn1 = if n <= 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Quadrature rule for `∫_{I_q} f(x) ω(x) dx`, built on Gauss-Legendre in `θ`.
///
/// Nodes never hit `θ ∈ {0, π}`; each weight already contains `ω` and the
/// Jacobian `|dx/dθ|`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quadrature {
    #[serde(skip)]
    params: QParams,
    order: usize,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

pub fn make_quadrature(p: &QParams, order: usize) -> Result<Quadrature> {
    if order < 2 {
        return Err(Error::InvalidParams(format!(
            "quadrature order must be >= 2, got {order}"
        )));
    }
    let ctrl = SeriesControl::default().with_rel_tol(1e-16);
    let (t, w) = gauss_legendre(order);
    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    for (ti, wi) in t.iter().zip(&w) {
        let theta = (ti + 1.0) * PI / 2.0;
        let pt = ThetaPoint::from_theta(theta, p.q())?;
        nodes.push(theta);
        weights.push(wi * PI / 2.0 * weight_density_theta(&pt, p, &ctrl)?);
    }
    Ok(Quadrature {
        params: *p,
        order,
        nodes,
        weights,
    })
}

impl Quadrature {
    pub fn params(&self) -> &QParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Angles `θ_i`.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn points(&self) -> impl Iterator<Item = ThetaPoint> + '_ {
        let q = self.params.q();
        self.nodes
            .iter()
            .map(move |&t| ThetaPoint::from_theta(t, q).expect("node inside [0, pi]"))
    }

    pub fn integrate<F: FnMut(&ThetaPoint) -> f64>(&self, mut f: F) -> f64 {
        self.points()
            .zip(&self.weights)
            .map(|(pt, w)| w * f(&pt))
            .collect::<CompensatedSum>()
            .value()
    }

    pub fn integrate_complex<F: FnMut(&ThetaPoint) -> C64>(&self, mut f: F) -> C64 {
        self.points()
            .zip(&self.weights)
            .map(|(pt, w)| f(&pt) * *w)
            .collect::<ComplexSum>()
            .value()
    }

    /// Columns `index, node, weight` (node is the angle θ).
    pub fn to_table(&self) -> Table {
        let mut t = Table::new(["index", "node", "weight"]);
        for (i, (n, w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            t.push_row(vec![i as f64, *n, *w]);
        }
        t.footer("order", self.order);
        t.footer(
            "sum_weight",
            self.weights
                .iter()
                .copied()
                .collect::<CompensatedSum>()
                .value(),
        );
        t
    }
}
