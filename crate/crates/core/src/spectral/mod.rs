//! Spectral radius by power iteration, the two-walk identity, exact quotient
//! polynomials, closed-form radii and edge rotations.

mod poly;
mod quotient;

pub use poly::{compare_largest_roots, largest_real_root, IntPolynomial};
pub use quotient::{char_poly, coarsest_equitable_partition, quotient_matrix, QuotientMatrix};

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_COMPARE_TOL: f64 = 1e-8;
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Absolute slack added to every separation threshold so that two radii
/// agreeing to the last few ulps are never called distinct.
const FLOOR: f64 = 64.0 * f64::EPSILON;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit positive eigenvector; only for connected graphs.
    pub perron: Option<Vec<f64>>,
    pub iterations: usize,
    /// `‖A·x − ρ·x‖∞`, the maximum over components when disconnected.
    pub residual: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Largest adjacency eigenvalue, by power iteration on `A + I` from the
/// all-ones vector until the Rayleigh-quotient residual is at most `tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    check_tol(tol)?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_connected() {
        let (rho, x, iterations, residual) = power_iteration(g, tol)?;
        return Ok(SpectralResult { rho, perron: Some(x), iterations, residual });
    }
    let mut out = SpectralResult { rho: 0.0, perron: None, iterations: 0, residual: 0.0 };
    for comp in g.components() {
        let (rho, _, iterations, residual) = power_iteration(&g.induced(comp), tol)?;
        out.rho = out.rho.max(rho);
        out.iterations += iterations;
        out.residual = out.residual.max(residual);
    }
    Ok(out)
}

fn multiply(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (v, yv) in y.iter_mut().enumerate() {
        *yv = g.neighbors(v).iter().map(|w| x[w]).sum();
    }
}

fn power_iteration(g: &Graph, tol: f64) -> Result<(f64, Vec<f64>, usize, f64)> {
    let n = g.n();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 0..MAX_ITERATIONS {
        multiply(g, &x, &mut ax);
        let rho: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = x.iter().zip(&ax).map(|(xi, yi)| (yi - rho * xi).abs()).fold(0.0, f64::max);
        if residual <= tol {
            return Ok((rho, x, it, residual));
        }
        let norm = x.iter().zip(&ax).map(|(xi, yi)| (xi + yi) * (xi + yi)).sum::<f64>().sqrt();
        for (xi, yi) in x.iter_mut().zip(&ax) {
            *xi = (*xi + yi) / norm;
        }
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

/// Outcome of comparing two numerically computed radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    Greater,
    Less,
    Indistinguishable,
}

impl Separation {
    pub fn from_ordering(o: Ordering) -> Separation {
        match o {
            Ordering::Greater => Separation::Greater,
            Ordering::Less => Separation::Less,
            Ordering::Equal => Separation::Indistinguishable,
        }
    }
}

/// `10·(r_a + r_b)` plus a relative floor at machine precision.
pub fn separation_threshold(a: &SpectralResult, b: &SpectralResult) -> f64 {
    10.0 * (a.residual + b.residual) + FLOOR * a.rho.abs().max(b.rho.abs()).max(1.0)
}

pub fn compare_radii(a: &SpectralResult, b: &SpectralResult) -> Separation {
    let d = a.rho - b.rho;
    let t = separation_threshold(a, b);
    if d > t {
        Separation::Greater
    } else if d < -t {
        Separation::Less
    } else {
        Separation::Indistinguishable
    }
}

/// `|ρ² x_u − (d(u) x_u + Σ_{v∈N(u)} d_{N(u)}(v) x_v + Σ_{v∉N[u]} d_{N(u)}(v) x_v)|`.
pub fn verify_two_walk_identity(g: &Graph, res: &SpectralResult, u: usize) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    let x = res.perron.as_deref().ok_or(Error::Disconnected)?;
    let nu = g.neighbors(u);
    let inside: f64 = nu.iter().map(|v| g.neighbors(v).intersection(nu).len() as f64 * x[v]).sum();
    let outside: f64 = g
        .vertices()
        .difference(nu.with(u))
        .iter()
        .map(|v| g.neighbors(v).intersection(nu).len() as f64 * x[v])
        .sum();
    let rhs = g.degree(u) as f64 * x[u] + inside + outside;
    Ok((res.rho * res.rho * x[u] - rhs).abs())
}

/// Admissible two-walk residual: the eigen-residual propagates through one
/// more multiplication as `(ρ + Δ)·r`.
pub fn two_walk_tolerance(g: &Graph, res: &SpectralResult) -> f64 {
    let delta = g.max_degree() as f64;
    (res.rho + delta) * res.residual + FLOOR * (res.rho * res.rho + delta * delta + 1.0)
}

/// The two families with recorded closed-form radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosedForm {
    /// `K_{1,1,n-2}`: `1/2 + √(2n − 15/4)`, `n >= 3`.
    K11m,
    /// `K_{3,n-3}`: `√(3(n − 3))`, `n >= 4`.
    K3m,
}

pub fn closed_form_radius(family: ClosedForm, n: usize) -> Result<f64> {
    let x = n as f64;
    match family {
        ClosedForm::K11m if n >= 3 => Ok(0.5 + (2.0 * x - 3.75).sqrt()),
        ClosedForm::K3m if n >= 4 => Ok((3.0 * (x - 3.0)).sqrt()),
        ClosedForm::K11m => Err(Error::OrderOutOfRange { n, min: 3, max: usize::MAX }),
        ClosedForm::K3m => Err(Error::OrderOutOfRange { n, min: 4, max: usize::MAX }),
    }
}

/// Replaces the edges `vw` by `uw` for every `w` in `moved`.
pub fn kelmans_rotation(g: &Graph, u: usize, v: usize, moved: VertexSet) -> Result<Graph> {
    for w in [u, v] {
        if w >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
        }
    }
    if u == v {
        return Err(Error::InvalidRotation("u and v coincide".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let allowed = g.neighbors(v).difference(g.neighbors(u).with(u));
    if moved.is_empty() {
        return Err(Error::InvalidRotation("no edges to move".into()));
    }
    if !moved.is_subset(allowed) {
        return Err(Error::InvalidRotation(format!(
            "{:?} is not contained in N(v) \\ N[u] = {:?}",
            moved, allowed
        )));
    }
    let mut out = g.clone();
    for w in moved {
        out.delete_edge(v, w);
        out.insert_edge(u, w).expect("w is not yet a neighbour of u");
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoalescenceVariant {
    /// One graph `H` glued at two of its vertices: `ρ(H−v) < ρ(H−w)` implies
    /// `ρ(G u v H) > ρ(G u w H)`.
    SameGraph,
    /// Two graphs of equal order: `ρ(H₁) > ρ(H₂)` and `ρ(H₁−v₁) <= ρ(H₂−v₂)`
    /// imply `ρ(G u v₁ H₁) > ρ(G u v₂ H₂)`.
    SameOrder,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoalescenceReport {
    pub variant: CoalescenceVariant,
    /// `ρ(H₁ − v₁)`, `ρ(H₂ − v₂)`.
    pub deleted: [f64; 2],
    /// `ρ(H₁)`, `ρ(H₂)`; only for the same-order variant.
    pub whole: Option<[f64; 2]>,
    /// Radii of the two coalescences.
    pub coalesced: [f64; 2],
    pub hypothesis: bool,
    /// Some hypothesis comparison fell inside the separation threshold.
    pub hypothesis_indistinguishable: bool,
    pub conclusion: Separation,
    /// The hypothesis fails or the conclusion is a strict increase.
    pub consistent: bool,
}

/// Computes every radius the two coalescence comparisons mention and checks
/// the implication. The same-graph variant applies when `h1 == h2`.
pub fn compare_coalescences(g1: &Graph, u: usize, h1: &Graph, v1: usize, h2: &Graph, v2: usize) -> Result<CoalescenceReport> {
    let tol = DEFAULT_TOL;
    let variant = if h1 == h2 { CoalescenceVariant::SameGraph } else { CoalescenceVariant::SameOrder };
    match variant {
        CoalescenceVariant::SameGraph if !h1.is_connected() => return Err(Error::Disconnected),
        CoalescenceVariant::SameOrder if !g1.is_connected() => return Err(Error::Disconnected),
        CoalescenceVariant::SameOrder if h1.n() != h2.n() => {
            return Err(Error::InvalidConstruction("the two glued graphs differ in order".into()))
        }
        _ => {}
    }
    let radius = |g: &Graph| -> Result<SpectralResult> {
        if g.n() == 0 {
            Ok(SpectralResult { rho: 0.0, perron: None, iterations: 0, residual: 0.0 })
        } else {
            spectral_radius(g, tol)
        }
    };
    let d1 = radius(&h1.remove_vertex(v1)?)?;
    let d2 = radius(&h2.remove_vertex(v2)?)?;
    let c1 = radius(&Graph::coalesce(g1, u, h1, v1)?)?;
    let c2 = radius(&Graph::coalesce(g1, u, h2, v2)?)?;
    let deleted = compare_radii(&d1, &d2);
    let (whole, hypothesis, indistinct) = match variant {
        CoalescenceVariant::SameGraph => {
            (None, deleted == Separation::Less, deleted == Separation::Indistinguishable)
        }
        CoalescenceVariant::SameOrder => {
            let w1 = radius(h1)?;
            let w2 = radius(h2)?;
            let top = compare_radii(&w1, &w2);
            let hyp = top == Separation::Greater && deleted != Separation::Greater;
            let indistinct = top == Separation::Indistinguishable || deleted == Separation::Indistinguishable;
            (Some([w1.rho, w2.rho]), hyp, indistinct)
        }
    };
    let conclusion = compare_radii(&c1, &c2);
    Ok(CoalescenceReport {
        variant,
        deleted: [d1.rho, d2.rho],
        whole,
        coalesced: [c1.rho, c2.rho],
        hypothesis,
        hypothesis_indistinguishable: indistinct,
        conclusion,
        consistent: !hypothesis || conclusion == Separation::Greater,
    })
}
