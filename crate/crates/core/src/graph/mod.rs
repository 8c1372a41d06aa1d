//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitrows.
//!
//! Constructed families use a fixed labelling so their graph6 strings are
//! stable: parts and components are laid out in argument order with
//! consecutive labels.

mod graph6;
mod vertex_set;

pub use graph6::{graph6_decode, graph6_encode};
pub use vertex_set::{Iter as VertexIter, VertexSet};

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count (one `u64` per adjacency row).
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

/// Shapes accepted by [`Graph::build_basic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicKind {
    Complete,
    Path,
    Cycle,
    CompleteMultipartite,
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n], edge_count: 0 })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, adj: Vec<u64>) -> Graph {
        let edge_count = adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, adj, edge_count }
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = VertexSet::range(n).bits();
        let adj = (0..n).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidConstruction(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// `K_{s_1,…,s_k}` with parts laid out consecutively in argument order.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
        if sizes.len() < 2 {
            return Err(Error::InvalidConstruction(
                "complete multipartite graph needs at least 2 parts".into(),
            ));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidConstruction("part sizes must be positive".into()));
        }
        let n: usize = sizes.iter().sum();
        check_order(n)?;
        let all = VertexSet::range(n).bits();
        let mut adj = vec![0u64; n];
        let mut start = 0;
        for &s in sizes {
            let part = VertexSet::range(start + s).bits() & !VertexSet::range(start).bits();
            for row in &mut adj[start..start + s] {
                *row = all & !part;
            }
            start += s;
        }
        Ok(Graph::from_rows_unchecked(n, adj))
    }

    /// Named basic graphs: `K_s`, `P_s`, `C_s` and complete multipartite graphs.
    pub fn build_basic(kind: BasicKind, sizes: &[usize]) -> Result<Graph> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::InvalidConstruction("sizes must be nonempty and positive".into()));
        }
        let single = || {
            if sizes.len() == 1 {
                Ok(sizes[0])
            } else {
                Err(Error::InvalidConstruction(format!("{kind:?} takes exactly one size")))
            }
        };
        match kind {
            BasicKind::Complete => Graph::complete(single()?),
            BasicKind::Path => Graph::path(single()?),
            BasicKind::Cycle => Graph::cycle(single()?),
            BasicKind::CompleteMultipartite => Graph::complete_multipartite(sizes),
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        self.edge_count += 1;
        Ok(())
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.adj[u] &= !(1u64 << v);
            self.adj[v] &= !(1u64 << u);
            self.edge_count -= 1;
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet::from_bits(self.adj[u] & !VertexSet::range(u + 1).bits()).iter().map(move |v| (u, v))
        })
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mask = VertexSet::range(self.n).bits() & !VertexSet::range(u + 1).bits();
            VertexSet::from_bits(mask & !self.adj[u]).iter().map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s.bits()).count_ones() as usize).sum::<usize>() / 2
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let allowed = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & allowed & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        VertexSet::from_bits(seen)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }

    /// True for connected graphs; the graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()).len() == self.n
    }

    /// Vertices whose removal disconnects their component.
    pub fn cut_vertices(&self) -> VertexSet {
        let mut cuts = VertexSet::EMPTY;
        for comp in self.components() {
            if comp.len() < 3 {
                continue;
            }
            for v in comp {
                let rest = comp.without(v);
                let start = rest.first().expect("component has at least 3 vertices");
                if self.reach(start, rest) != rest {
                    cuts.insert(v);
                }
            }
        }
        cuts
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Vertices left after repeatedly deleting vertices of degree at most one.
    pub fn two_core_vertices(&self) -> VertexSet {
        let mut alive = self.vertices().bits();
        loop {
            let peel: u64 = (0..self.n)
                .filter(|&v| alive >> v & 1 == 1 && (self.adj[v] & alive).count_ones() <= 1)
                .fold(0, |acc, v| acc | 1u64 << v);
            if peel == 0 {
                return VertexSet::from_bits(alive);
            }
            alive &= !peel;
        }
    }

    /// The two-core as a graph, relabelled in ascending vertex order.
    pub fn two_core(&self) -> Graph {
        self.induced(self.two_core_vertices())
    }

    /// Induced subgraph on `s`, relabelled in ascending vertex order.
    pub fn induced(&self, s: VertexSet) -> Graph {
        let s = s.intersection(self.vertices());
        let members: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| {
                VertexSet::from_bits(self.adj[v] & s.bits()).iter().fold(0u64, |acc, w| acc | 1u64 << pos[w])
            })
            .collect();
        Graph::from_rows_unchecked(members.len(), adj)
    }

    /// `G - v`, with later labels shifted down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().without(v)))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::InvalidConstruction(format!("{u}-{v} is not an edge")));
        }
        let mut g = self.clone();
        g.delete_edge(u, v);
        Ok(g)
    }

    /// Adds a vertex with label `n` adjacent to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        check_order(self.n + 1)?;
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::VertexOutOfRange { vertex: nbrs.last().unwrap_or(0), n: self.n });
        }
        let t = self.n;
        let mut adj = self.adj.clone();
        for w in nbrs {
            adj[w] |= 1u64 << t;
        }
        adj.push(nbrs.bits());
        Ok(Graph { n: t + 1, adj, edge_count: self.edge_count + nbrs.len() })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidConstruction("permutation length mismatch".into()));
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            if p >= self.n || seen.contains(p) {
                return Err(Error::InvalidConstruction("not a permutation".into()));
            }
            seen.insert(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.neighbors(v).iter().fold(0u64, |acc, w| acc | 1u64 << perm[w]);
        }
        Graph { n: self.n, adj, edge_count: self.edge_count }
    }

    /// `G ∨ H`: `G`'s vertices first, then `H`'s, plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::disjoint_union(&[self.clone(), other.clone()])?;
        let left = VertexSet::range(self.n).bits();
        let right = VertexSet::range(g.n).bits() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        g.edge_count += self.n * other.n;
        Ok(g)
    }

    /// Disjoint union with labels shifted in argument order; `[]` gives the null graph.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
        let n: usize = gs.iter().map(|g| g.n).sum();
        check_order(n)?;
        let mut adj = Vec::with_capacity(n);
        let mut offset = 0;
        let mut edge_count = 0;
        for g in gs {
            adj.extend(g.adj.iter().map(|r| r << offset));
            offset += g.n;
            edge_count += g.edge_count;
        }
        Ok(Graph { n, adj, edge_count })
    }

    /// `k` disjoint copies of `self`.
    pub fn copies(&self, k: usize) -> Result<Graph> {
        Graph::disjoint_union(&vec![self.clone(); k])
    }

    /// Coalescence `G₁uvG₂`: identify `u ∈ G₁` with `v ∈ G₂`.
    ///
    /// `G₁` keeps its labels (the merged vertex is `u`); the remaining vertices
    /// of `G₂` follow in ascending order.
    pub fn coalesce(g1: &Graph, u: usize, g2: &Graph, v: usize) -> Result<Graph> {
        g1.check_vertex(u)?;
        g2.check_vertex(v)?;
        let n = g1.n + g2.n - 1;
        check_order(n)?;
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                std::cmp::Ordering::Less => g1.n + w,
                std::cmp::Ordering::Equal => u,
                std::cmp::Ordering::Greater => g1.n + w - 1,
            }
        };
        let mut g = Graph::empty(n)?;
        g.adj[..g1.n].copy_from_slice(&g1.adj);
        g.edge_count = g1.edge_count;
        for (a, b) in g2.edges() {
            g.insert_edge(map(a), map(b))?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", graph6_encode(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}
