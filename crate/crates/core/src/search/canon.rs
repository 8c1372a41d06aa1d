//! Canonical labelling by partition refinement and individualisation, with
//! pruning by automorphisms discovered at equal leaves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{graph6_encode, Graph};

/// graph6 string of the canonical relabelling; equal exactly for isomorphic
/// graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6_encode(&canonical_graph(g).0))
}

/// The canonical relabelling of `g` and the permutation producing it
/// (`perm[old] = new`).
pub fn canonical_graph(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (g.clone(), Vec::new());
    }
    let mut s = Search { g, best: None, first: None, autos: Vec::new() };
    let mut path = Vec::new();
    s.visit(vec![g.vertices().bits()], &mut path);
    let (_, perm) = s.best.expect("the search reaches at least one leaf");
    (g.relabel_unchecked(&perm), perm)
}

/// Splits cells until every vertex of a cell has the same number of
/// neighbours in every cell. Pieces appear in ascending neighbour count.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i < cells.len() {
            let splitter = cells[i];
            let mut j = 0;
            while j < cells.len() {
                let cell = cells[j];
                if cell.count_ones() > 1 {
                    let mut by_count = [0u64; 65];
                    let mut c = cell;
                    while c != 0 {
                        let v = c.trailing_zeros() as usize;
                        c &= c - 1;
                        by_count[(g.row(v) & splitter).count_ones() as usize] |= 1u64 << v;
                    }
                    let pieces: Vec<u64> = by_count.iter().copied().filter(|&p| p != 0).collect();
                    if pieces.len() > 1 {
                        let k = pieces.len();
                        cells.splice(j..=j, pieces);
                        changed = true;
                        j += k;
                        continue;
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, perm: &[usize]) -> Vec<u64> {
        let mut rows = vec![0u64; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            let mut r = self.g.row(v);
            let mut out = 0u64;
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                r &= r - 1;
                out |= 1u64 << perm[w];
            }
            rows[p] = out;
        }
        rows
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut perm = vec![0usize; self.g.n()];
        for (i, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = i;
        }
        let cert = self.certificate(&perm);
        let Some((first_cert, first_perm)) = &self.first else {
            self.first = Some((cert.clone(), perm.clone()));
            self.best = Some((cert, perm));
            return;
        };
        if *first_cert == cert {
            self.autos.push(automorphism(first_perm, &perm));
            return;
        }
        let (best_cert, best_perm) = self.best.as_ref().expect("set with first");
        match cert.cmp(best_cert) {
            std::cmp::Ordering::Greater => self.best = Some((cert, perm)),
            std::cmp::Ordering::Equal => {
                let a = automorphism(best_perm, &perm);
                self.autos.push(a);
            }
            std::cmp::Ordering::Less => {}
        }
    }

    fn visit(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        let mut rest = target;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if !explored.is_empty() && self.same_orbit_as_any(v, &explored, path) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(1u64 << v);
            next.push(target & !(1u64 << v));
            next.extend_from_slice(&cells[t + 1..]);
            path.push(v);
            self.visit(next, path);
            path.pop();
            explored.push(v);
        }
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// `path` pointwise.
    fn same_orbit_as_any(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in self.autos.iter().filter(|a| path.iter().all(|&p| a[p] == p)) {
            any = true;
            for (x, &y) in a.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// `γ` with `g^a = g^b`: `γ(v) = a⁻¹(b(v))`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; a.len()];
    for (v, &p) in a.iter().enumerate() {
        inv[p] = v;
    }
    b.iter().map(|&p| inv[p]).collect()
}
