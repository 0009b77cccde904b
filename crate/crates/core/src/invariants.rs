//! Degree-based graph invariants.
//!
//! The Randic index is the one quantity here that needs certified rounding:
//! it is a sum of surds, so it is computed in interval arithmetic. Neighbor
//! degree averages are exact rationals.

use num_rational::Ratio;
use serde::Serialize;

use crate::bounds::{self, BoundValue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{CertInterval, Interval};
use crate::spectral;

pub type Rat64 = Ratio<i64>;

/// R(G) = sum over edges uv of 1/sqrt(d(u) d(v)), as a certified enclosure.
///
/// Every vertex must have a neighbor; an isolated vertex has no defined
/// contribution and the index downstream divides by degrees anyway.
pub fn randic_index(g: &Graph) -> Result<Interval> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let one = Interval::from_int(1);
    let mut sum = Interval::point(0.0);
    for (u, v) in g.edges() {
        let prod = (g.degree(u) * g.degree(v)) as i64;
        sum = sum + one / Interval::from_int(prod).sqrt();
    }
    Ok(sum)
}

/// Average degree over the neighbors of `v`, exactly.
pub fn avg_neighbor_degree(g: &Graph, v: usize) -> Result<Rat64> {
    let d = g.degree(v);
    if d == 0 {
        return Err(Error::IsolatedVertex(v));
    }
    let total: i64 = g.neighbors(v).map(|u| g.degree(u) as i64).sum();
    Ok(Rat64::new(total, d as i64))
}

/// t(v) = d(v) + m(v): vertex degree plus average neighbor degree.
pub fn t_value(g: &Graph, v: usize) -> Result<Rat64> {
    Ok(Rat64::from_integer(g.degree(v) as i64) + avg_neighbor_degree(g, v)?)
}

/// Largest possible number of degree-one neighbors of a maximum-degree
/// vertex, over all connected graphs with the given order, size, and
/// maximum degree.
///
/// If a maximum-degree vertex h has s pendant neighbors, every one of the
/// m - delta edges missing h also misses the pendants, so those edges must
/// fit among the remaining n - 1 - s vertices: m - delta <= C(n-1-s, 2) is
/// necessary. The capacity below adds one slack slot per vertex outside
/// N(h) (capped at s), which keeps the estimate conservative when
/// delta < n - 1; for delta = n - 1 the slack vanishes and the bound is
/// exact. Soundness (never below the true maximum) is checked against
/// exhaustive search over all connected graphs on n <= 7 in the tests.
pub fn max_pendant_neighbors(n: usize, m: usize, delta: usize) -> Result<usize> {
    if n < 2 || delta == 0 || delta > n - 1 {
        return Err(Error::Infeasible(format!(
            "no connected graph with n = {n} and maximum degree {delta}"
        )));
    }
    if m < n - 1 || m > n * (n - 1) / 2 || m < delta || 2 * m > n * delta {
        return Err(Error::Infeasible(format!(
            "no connected graph with n = {n}, m = {m}, maximum degree {delta}"
        )));
    }
    let choose2 = |k: usize| k * k.saturating_sub(1) / 2;
    for s in (0..=delta).rev() {
        let capacity = choose2(n - 1 - s) + (n - 1 - delta).min(s);
        if m - delta <= capacity {
            return Ok(s);
        }
    }
    Ok(0)
}

/// Everything the verifier wants to know about one graph, in one pass.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub randic: Interval,
    pub q_radius: Interval,
    pub lambda1: Interval,
    /// q(G) / R(G)
    pub ratio: Interval,
    pub bounds: Vec<BoundValue>,
}

pub fn full_report(g: &Graph, eigen_tol: f64) -> Result<InvariantReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::IsolatedVertex(0));
    }
    let randic = randic_index(g)?;
    assert!(randic.lo() > 0.0, "Randic index of a connected graph is positive");
    let q_radius = spectral::q_radius(g, eigen_tol)?;
    let lambda1 = spectral::lambda1(g, eigen_tol)?;
    let ratio = q_radius / randic;
    let bounds = bounds::standard_bounds(g, randic)?;
    Ok(InvariantReport {
        schema_version: crate::certifier::SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        randic,
        q_radius,
        lambda1,
        ratio,
        bounds,
    })
}
