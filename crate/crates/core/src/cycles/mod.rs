//! Exact detection of chorded cycles, doubly chorded cycles (DCC), DCCs with
//! two chords at a common vertex (DCC₁) and copies of `K_1∨P_4`.
//!
//! Every detector is exhaustive. Cycles are enumerated once each on the
//! two-core: the smallest vertex comes first and the second vertex is smaller
//! than the last. The depth-first search visits candidate sequences in
//! lexicographic order and checks closure before extending, so the first
//! accepted cycle is the lexicographically least witness.

mod bounds;

pub use bounds::{
    bondy_bound_holds, check_edge_bound_dcc, check_edge_bound_dcc1, czipszer_mindegree_check,
    longest_cycle, longest_cycle_witness, BondyReport,
};

use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

/// A cycle of a host graph together with all of its chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    /// Chords as `(min, max)` pairs in ascending order.
    pub chords: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessDefect {
    #[error("cycle has fewer than 3 vertices")]
    TooShort,
    #[error("vertex {0} is out of range or repeated")]
    BadVertex(usize),
    #[error("{0}-{1} is a cycle step but not an edge")]
    MissingCycleEdge(usize, usize),
    #[error("chord {0}-{1} is not an edge")]
    MissingChord(usize, usize),
    #[error("chord {0}-{1} has an endpoint off the cycle")]
    ChordOffCycle(usize, usize),
    #[error("chord {0}-{1} joins consecutive cycle vertices")]
    ChordIsCycleEdge(usize, usize),
    #[error("chord {0}-{1} listed twice")]
    RepeatedChord(usize, usize),
}

impl CycleWitness {
    /// Builds the witness for `cycle`, listing every chord of it in `g`.
    pub fn from_cycle(g: &Graph, cycle: &[usize]) -> CycleWitness {
        let on: VertexSet = cycle.iter().copied().collect();
        let len = cycle.len();
        let mut chords = Vec::new();
        for (i, &a) in cycle.iter().enumerate() {
            let prev = cycle[(i + len - 1) % len];
            let next = cycle[(i + 1) % len];
            for b in g.neighbors(a).intersection(on) {
                if a < b && b != prev && b != next {
                    chords.push((a, b));
                }
            }
        }
        chords.sort_unstable();
        CycleWitness { cycle: cycle.to_vec(), chords }
    }

    /// Checks the witness against `g` without trusting how it was produced.
    pub fn validate(&self, g: &Graph) -> Result<(), WitnessDefect> {
        let len = self.cycle.len();
        if len < 3 {
            return Err(WitnessDefect::TooShort);
        }
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in self.cycle.iter().enumerate() {
            if v >= g.n() || pos[v] != usize::MAX {
                return Err(WitnessDefect::BadVertex(v));
            }
            pos[v] = i;
        }
        for i in 0..len {
            let (a, b) = (self.cycle[i], self.cycle[(i + 1) % len]);
            if !g.has_edge(a, b) {
                return Err(WitnessDefect::MissingCycleEdge(a, b));
            }
        }
        let mut seen = Vec::new();
        for &(a, b) in &self.chords {
            if !g.has_edge(a, b) {
                return Err(WitnessDefect::MissingChord(a, b));
            }
            if pos.get(a).is_none_or(|&p| p == usize::MAX) || pos.get(b).is_none_or(|&p| p == usize::MAX) {
                return Err(WitnessDefect::ChordOffCycle(a, b));
            }
            let gap = pos[a].abs_diff(pos[b]);
            if gap == 1 || gap == len - 1 {
                return Err(WitnessDefect::ChordIsCycleEdge(a, b));
            }
            let key = (a.min(b), a.max(b));
            if seen.contains(&key) {
                return Err(WitnessDefect::RepeatedChord(a, b));
            }
            seen.push(key);
        }
        Ok(())
    }

    pub fn is_chorded(&self) -> bool {
        !self.chords.is_empty()
    }

    pub fn is_dcc(&self) -> bool {
        self.chords.len() >= 2
    }

    /// At least two listed chords share an endpoint.
    pub fn is_dcc1(&self) -> bool {
        self.chords.iter().enumerate().any(|(i, &(a, b))| {
            self.chords[i + 1..].iter().any(|&(c, d)| a == c || a == d || b == c || b == d)
        })
    }
}

/// The forbidden structures the detectors know about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Chorded,
    Dcc,
    Dcc1,
    K1p4,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Chorded, Target::Dcc, Target::Dcc1, Target::K1p4];

    pub fn name(self) -> &'static str {
        match self {
            Target::Chorded => "chorded",
            Target::Dcc => "dcc",
            Target::Dcc1 => "dcc1",
            Target::K1p4 => "k1p4",
        }
    }

    /// Whether `g` contains the structure.
    pub fn occurs_in(self, g: &Graph) -> bool {
        match self {
            Target::Chorded => find_chorded_cycle(g).is_some(),
            Target::Dcc => find_dcc(g).is_some(),
            Target::Dcc1 => contains_dcc1(g),
            Target::K1p4 => find_k1_join_p4(g).is_some(),
        }
    }
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown target `{s}` (expected chorded, dcc, dcc1 or k1p4)"))
    }
}

/// Visits every cycle of `g` once, in lexicographic order. `visit` receives
/// the vertex sequence and its vertex mask.
pub(crate) fn visit_cycles(
    g: &Graph,
    mut visit: impl FnMut(&[usize], u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if g.n() < 3 {
        return ControlFlow::Continue(());
    }
    let core = g.two_core_vertices().bits();
    let mut path = Vec::with_capacity(g.n());
    for root in VertexSet::from_bits(core) {
        let above = core & above_mask(root);
        path.clear();
        path.push(root);
        extend(g, root, above, &mut path, 1u64 << root, &mut visit)?;
    }
    ControlFlow::Continue(())
}

fn extend(
    g: &Graph,
    root: usize,
    allowed: u64,
    path: &mut Vec<usize>,
    mask: u64,
    visit: &mut impl FnMut(&[usize], u64) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let last = *path.last().expect("path starts at the root");
    if path.len() >= 3 && g.row(last) >> root & 1 == 1 && path[1] < last {
        visit(path, mask)?;
    }
    let mut next = g.row(last) & allowed & !mask;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        // the path can only close if w still reaches a neighbour of the root
        let free = VertexSet::from_bits(allowed & !mask);
        if g.reach(w, free).bits() & g.row(root) == 0 {
            continue;
        }
        path.push(w);
        let flow = extend(g, root, allowed, path, mask | 1u64 << w, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Vertices with labels strictly greater than `v`.
pub(crate) fn above_mask(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

fn chord_count(g: &Graph, mask: u64, len: usize) -> usize {
    g.edges_within(VertexSet::from_bits(mask)) - len
}

fn has_vertex_with_two_chords(g: &Graph, mask: u64) -> bool {
    VertexSet::from_bits(mask).iter().any(|v| (g.row(v) & mask).count_ones() >= 4)
}

fn first_cycle(g: &Graph, accept: impl Fn(&[usize], u64) -> bool) -> Option<CycleWitness> {
    let mut found = None;
    let _ = visit_cycles(g, |cycle, mask| {
        if accept(cycle, mask) {
            found = Some(cycle.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found.map(|c| CycleWitness::from_cycle(g, &c))
}

/// The lexicographically least cycle with at least one chord.
pub fn find_chorded_cycle(g: &Graph) -> Option<CycleWitness> {
    first_cycle(g, |c, mask| chord_count(g, mask, c.len()) >= 1)
}

/// The lexicographically least cycle with at least two chords.
pub fn find_dcc(g: &Graph) -> Option<CycleWitness> {
    first_cycle(g, |c, mask| chord_count(g, mask, c.len()) >= 2)
}

/// The lexicographically least cycle carrying two chords at a common vertex.
pub fn find_dcc1(g: &Graph) -> Option<CycleWitness> {
    if !contains_dcc1(g) {
        return None;
    }
    first_cycle(g, |_, mask| has_vertex_with_two_chords(g, mask))
}

/// DCC₁ existence, searched hub by hub: a cycle through `hub` with two chords
/// at `hub` is a path in `G - hub` between two neighbours of `hub` that passes
/// through at least two further neighbours.
pub fn contains_dcc1(g: &Graph) -> bool {
    let core = g.two_core_vertices().bits();
    VertexSet::from_bits(core).iter().any(|hub| {
        let nbrs = g.row(hub) & core;
        if nbrs.count_ones() < 4 {
            return false;
        }
        let rest = core & !(1u64 << hub);
        VertexSet::from_bits(nbrs).iter().any(|a| hub_path(g, nbrs, rest, a, 1u64 << a, a))
    })
}

fn hub_path(g: &Graph, nbrs: u64, rest: u64, start: usize, mask: u64, at: usize) -> bool {
    if at != start && nbrs >> at & 1 == 1 && at > start && (mask & nbrs).count_ones() >= 4 {
        return true;
    }
    let mut next = g.row(at) & rest & !mask;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if hub_path(g, nbrs, rest, start, mask | 1u64 << w, w) {
            return true;
        }
    }
    false
}

/// A hub `h` and a path `a-b-c-d` inside `N(h)` with `a < d`; the
/// lexicographically least such 5-tuple `[h, a, b, c, d]`.
pub fn find_k1_join_p4(g: &Graph) -> Option<[usize; 5]> {
    for h in 0..g.n() {
        let nb = g.row(h);
        if nb.count_ones() < 4 {
            continue;
        }
        for a in VertexSet::from_bits(nb) {
            for b in VertexSet::from_bits(g.row(a) & nb) {
                for c in VertexSet::from_bits(g.row(b) & nb & !(1u64 << a)) {
                    let ds = g.row(c) & nb & !(1u64 << a | 1u64 << b) & above_mask(a);
                    if let Some(d) = VertexSet::from_bits(ds).first() {
                        return Some([h, a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn f1() -> Graph {
        Graph::coalesce(&k(2), 1, &k(4), 0).unwrap()
    }

    fn fan() -> Graph {
        k(1).join(&Graph::path(4).unwrap()).unwrap()
    }

    #[test]
    fn chorded_cycle_examples() {
        let w = find_chorded_cycle(&k(4)).unwrap();
        assert_eq!(w.cycle, vec![0, 1, 2, 3]);
        assert_eq!(w.chords, vec![(0, 2), (1, 3)]);
        assert!(find_chorded_cycle(&Graph::cycle(6).unwrap()).is_none());
        assert!(find_chorded_cycle(&Graph::complete_multipartite(&[2, 4]).unwrap()).is_none());
    }

    #[test]
    fn dcc_examples() {
        assert!(find_dcc(&Graph::complete_multipartite(&[1, 1, 4]).unwrap()).is_none());
        let w = find_dcc(&k(4)).unwrap();
        assert_eq!(w.chords.len(), 2);
        let k33 = Graph::complete_multipartite(&[3, 3]).unwrap();
        let w = find_dcc(&k33).unwrap();
        assert_eq!(w.cycle.len(), 6);
        assert_eq!(w.chords.len(), 3);
        w.validate(&k33).unwrap();
    }

    #[test]
    fn dcc1_examples() {
        assert!(find_dcc1(&k(4)).is_none());
        assert!(find_dcc1(&f1()).is_none());
        let w = find_dcc1(&fan()).unwrap();
        assert_eq!(w.cycle, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.chords, vec![(0, 2), (0, 3)]);
        assert!(w.is_dcc1());
        assert!(contains_dcc1(&k(5)));
    }

    #[test]
    fn k1p4_examples() {
        assert_eq!(find_k1_join_p4(&fan()), Some([0, 1, 2, 3, 4]));
        assert!(find_k1_join_p4(&k(4)).is_none());
        let h6 = Graph::empty(3).unwrap().join(&Graph::disjoint_union(&[k(2), k(1)]).unwrap()).unwrap();
        assert!(find_k1_join_p4(&h6).is_none());
        let w5 = k(1).join(&Graph::cycle(5).unwrap()).unwrap();
        assert!(find_k1_join_p4(&w5).is_some());
    }

    #[test]
    fn small_and_acyclic_inputs_have_no_witness() {
        for g in [Graph::empty(0).unwrap(), k(1), k(2), Graph::path(7).unwrap()] {
            for t in Target::ALL {
                assert!(!t.occurs_in(&g), "{t:?} in {g:?}");
            }
        }
        assert!(find_chorded_cycle(&k(3)).is_none());
    }

    #[test]
    fn witness_validation_catches_defects() {
        let g = k(4);
        let good = CycleWitness { cycle: vec![0, 1, 2, 3], chords: vec![(0, 2)] };
        assert_eq!(good.validate(&g), Ok(()));
        let p = Graph::path(4).unwrap();
        assert_eq!(good.validate(&p), Err(WitnessDefect::MissingCycleEdge(3, 0)));
        let bad = CycleWitness { cycle: vec![0, 1, 2, 3], chords: vec![(0, 1)] };
        assert_eq!(bad.validate(&g), Err(WitnessDefect::ChordIsCycleEdge(0, 1)));
        let bad = CycleWitness { cycle: vec![0, 1, 2], chords: vec![(0, 3)] };
        assert_eq!(bad.validate(&g), Err(WitnessDefect::ChordOffCycle(0, 3)));
        let bad = CycleWitness { cycle: vec![0, 1, 1], chords: vec![] };
        assert_eq!(bad.validate(&g), Err(WitnessDefect::BadVertex(1)));
        let bad = CycleWitness { cycle: vec![0, 1], chords: vec![] };
        assert_eq!(bad.validate(&g), Err(WitnessDefect::TooShort));
    }

    #[test]
    fn witness_json_shape() {
        let w = find_dcc(&k(4)).unwrap();
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"cycle":[0,1,2,3],"chords":[[0,2],[1,3]]}"#);
    }

    #[test]
    fn target_parsing() {
        assert_eq!("dcc1".parse::<Target>(), Ok(Target::Dcc1));
        assert!("dcc2".parse::<Target>().is_err());
    }
}
