//! Connected graphs up to isomorphism by canonical augmentation.
//!
//! Every canonical parent on `k` vertices is extended by a vertex joined to
//! each nonempty subset. A child is kept when deleting its canonical vertex
//! `m(G)` gives back the parent; `m(G)` is, among the non-cut vertices of
//! largest `(degree, sum of neighbour degrees)`, the one with the highest
//! canonical label. Isomorphic children of one parent are merged by
//! canonical form, so each class appears exactly once.
//!
//! With a filter, only graphs free of the target are kept. Every target is
//! closed under taking subgraphs and `G − m(G)` is a subgraph of `G`, so
//! dropping parents that contain it loses nothing.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::canonical_graph;
use crate::cycles::Target;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Enumerator {
    n: usize,
    filter: Option<Target>,
    jobs: Option<usize>,
}

/// Parents handled per parallel batch on the final level.
const BATCH: usize = 512;

impl Enumerator {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ORDER });
        }
        Ok(Enumerator { n, filter: None, jobs: None })
    }

    /// Keep only graphs that do not contain `target`.
    pub fn free_of(mut self, target: Option<Target>) -> Self {
        self.filter = target;
        self
    }

    /// Worker threads; `None` uses the global pool.
    pub fn jobs(mut self, jobs: Option<usize>) -> Self {
        self.jobs = jobs.map(|j| j.max(1));
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn filter(&self) -> Option<Target> {
        self.filter
    }

    /// Calls `f` with consecutive batches of canonical graphs. The order is
    /// fixed: by parent, then by canonical form, whatever the job count.
    pub fn for_each_batch(&self, mut f: impl FnMut(Vec<Graph>)) -> Result<()> {
        let pool = match self.jobs {
            Some(j) => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| Error::InvalidConstruction(format!("thread pool: {e}")))?,
            ),
            None => None,
        };
        let expand = |parents: &[Graph]| -> Vec<Graph> {
            let work = || parents.par_iter().flat_map_iter(|p| children(p, self.filter)).collect();
            match &pool {
                Some(pool) => pool.install(work),
                None => work(),
            }
        };
        let mut level = vec![Graph::empty(1).expect("one vertex")];
        if self.n == 1 {
            f(level);
            return Ok(());
        }
        for _ in 2..self.n {
            level = expand(&level);
        }
        for parents in level.chunks(BATCH) {
            f(expand(parents));
        }
        Ok(())
    }

    pub fn for_each(&self, mut f: impl FnMut(&Graph)) -> Result<()> {
        self.for_each_batch(|batch| batch.iter().for_each(&mut f))
    }

    pub fn collect(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        self.for_each_batch(|batch| out.extend(batch))?;
        Ok(out)
    }

    pub fn count(&self) -> Result<usize> {
        let mut c = 0;
        self.for_each_batch(|batch| c += batch.len())?;
        Ok(c)
    }
}

fn invariant(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), g.neighbors(v).iter().map(|w| g.degree(w)).sum())
}

/// Accepted children of a canonical parent, as canonical graphs sorted by
/// their graph6 form.
fn children(parent: &Graph, filter: Option<Target>) -> Vec<Graph> {
    let k = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for bits in 1..(1u64 << k) {
        let g = parent.add_vertex(VertexSet::from_bits(bits)).expect("order stays within range");
        let top = invariant(&g, k);
        let higher: Vec<usize> = (0..k).filter(|&v| invariant(&g, v) > top).collect();
        if !higher.is_empty() {
            let cuts = g.cut_vertices();
            if higher.iter().any(|&v| !cuts.contains(v)) {
                continue;
            }
        }
        if filter.is_some_and(|t| t.occurs_in(&g)) {
            continue;
        }
        let (canon, perm) = canonical_graph(&g);
        let cuts = g.cut_vertices();
        let m = (0..=k)
            .filter(|&v| !cuts.contains(v) && invariant(&g, v) == top)
            .max_by_key(|&v| perm[v])
            .expect("the new vertex qualifies");
        if m != k {
            let (reduced, _) = canonical_graph(&g.remove_vertex(m).expect("m is a vertex"));
            if reduced != *parent {
                continue;
            }
        }
        if seen.insert(canon.rows().to_vec()) {
            out.push(canon);
        }
    }
    let mut keyed: Vec<(String, Graph)> = out.into_iter().map(|g| (g.to_string(), g)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| Enumerator::new(n).unwrap().count().unwrap()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn range_is_checked() {
        assert!(Enumerator::new(0).is_err());
        assert!(Enumerator::new(11).is_err());
    }

    #[test]
    fn filtered_counts_are_subsets() {
        let all = Enumerator::new(6).unwrap().collect().unwrap();
        for t in Target::ALL {
            let free = Enumerator::new(6).unwrap().free_of(Some(t)).collect().unwrap();
            let brute = all.iter().filter(|g| !t.occurs_in(g)).count();
            assert_eq!(free.len(), brute, "{t:?}");
        }
    }

    #[test]
    fn job_count_does_not_change_order() {
        let a = Enumerator::new(6).unwrap().jobs(Some(1)).collect().unwrap();
        let b = Enumerator::new(6).unwrap().jobs(Some(3)).collect().unwrap();
        assert_eq!(a, b);
    }
}
