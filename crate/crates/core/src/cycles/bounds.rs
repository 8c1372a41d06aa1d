//! Longest cycles and the cycle-based edge bounds.

use serde::{Deserialize, Serialize};

use super::{contains_dcc1, find_chorded_cycle, find_dcc};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Length of a longest cycle, or 0 for a forest.
pub fn longest_cycle(g: &Graph) -> usize {
    longest_cycle_witness(g).map_or(0, |c| c.len())
}

/// A longest cycle; among those, the one found first from the smallest root.
pub fn longest_cycle_witness(g: &Graph) -> Option<Vec<usize>> {
    let core = g.two_core_vertices().bits();
    let mut best: Vec<usize> = Vec::new();
    let mut path = Vec::with_capacity(g.n());
    for root in VertexSet::from_bits(core) {
        let allowed = core & super::above_mask(root) | 1u64 << root;
        if (allowed.count_ones() as usize) <= best.len() {
            break;
        }
        path.clear();
        path.push(root);
        grow(g, root, allowed, &mut path, 1u64 << root, &mut best);
        if best.len() == core.count_ones() as usize {
            break;
        }
    }
    (!best.is_empty()).then_some(best)
}

fn grow(g: &Graph, root: usize, allowed: u64, path: &mut Vec<usize>, mask: u64, best: &mut Vec<usize>) {
    let last = *path.last().expect("path starts at the root");
    if path.len() >= 3 && path.len() > best.len() && g.row(last) >> root & 1 == 1 {
        best.clone_from(path);
    }
    let free = VertexSet::from_bits(allowed & !mask);
    let room = (g.reach(last, free).bits() & !(1u64 << last)).count_ones() as usize;
    if path.len() + room <= best.len() {
        return;
    }
    let mut next = g.row(last) & free.bits();
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        path.push(w);
        grow(g, root, allowed, path, mask | 1u64 << w, best);
        path.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BondyReport {
    /// Length of the longest cycle used.
    pub c: usize,
    /// Edges with at most one end on that cycle.
    pub off_cycle_edges: usize,
    /// `floor(c(n-c)/2)`.
    pub bound: usize,
    pub holds: bool,
}

/// Counts the edges with at most one end on a longest cycle and compares with
/// `floor(c(n-c)/2)`.
pub fn bondy_bound_holds(g: &Graph) -> Result<BondyReport> {
    let cycle = longest_cycle_witness(g).ok_or(Error::Acyclic)?;
    let on: VertexSet = cycle.iter().copied().collect();
    let c = cycle.len();
    let off_cycle_edges = g.edge_count() - g.edges_within(on);
    let bound = c * (g.n() - c) / 2;
    Ok(BondyReport { c, off_cycle_edges, bound, holds: off_cycle_edges <= bound })
}

/// `DCC-free => e(G) <= 2n - 3`, vacuous below three vertices.
pub fn check_edge_bound_dcc(g: &Graph) -> bool {
    g.n() < 3 || find_dcc(g).is_some() || g.edge_count() + 3 <= 2 * g.n()
}

/// `DCC₁-free => e(G) <= 3n - 9`; only defined for `n >= 6`.
pub fn check_edge_bound_dcc1(g: &Graph) -> Result<bool> {
    if g.n() < 6 {
        return Err(Error::OrderOutOfRange { n: g.n(), min: 6, max: crate::graph::MAX_VERTICES });
    }
    Ok(contains_dcc1(g) || g.edge_count() + 9 <= 3 * g.n())
}

/// `δ >= 3 => chorded cycle` and `δ >= 4 => DCC₁`.
pub fn czipszer_mindegree_check(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let delta = g.min_degree();
    (delta < 3 || find_chorded_cycle(g).is_some()) && (delta < 4 || contains_dcc1(g))
}
