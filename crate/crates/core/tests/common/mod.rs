#![allow(dead_code)]

use std::collections::BTreeSet;

use dcc_spectral::search::Enumerator;
use dcc_spectral::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type CycleWithChords = (Vec<usize>, Vec<(usize, usize)>);

/// Every cycle as `(vertex sequence, chords)`, found by trying each vertex
/// subset in every order. The sequence starts at its least vertex and its
/// second vertex is below its last.
pub fn all_cycles(g: &Graph) -> Vec<CycleWithChords> {
    let n = g.n();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let first = verts[0];
        let rest: Vec<usize> = verts[1..].to_vec();
        for perm in permutations(&rest) {
            if perm[0] > *perm.last().unwrap() {
                continue;
            }
            let mut cyc = vec![first];
            cyc.extend(perm);
            let k = cyc.len();
            if !(0..k).all(|i| g.has_edge(cyc[i], cyc[(i + 1) % k])) {
                continue;
            }
            let mut chords = Vec::new();
            for i in 0..k {
                for j in i + 1..k {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    if !consecutive && g.has_edge(cyc[i], cyc[j]) {
                        let (a, b) = (cyc[i].min(cyc[j]), cyc[i].max(cyc[j]));
                        chords.push((a, b));
                    }
                }
            }
            chords.sort();
            out.push((cyc, chords));
        }
    }
    out.sort();
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

pub fn chords_share_vertex(chords: &[(usize, usize)]) -> bool {
    chords.iter().enumerate().any(|(i, a)| chords[i + 1..].iter().any(|b| a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1))
}

/// Naive presence of the three cycle structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Naive {
    pub chorded: bool,
    pub dcc: bool,
    pub dcc1: bool,
}

pub fn naive(g: &Graph) -> Naive {
    let cycles = all_cycles(g);
    Naive {
        chorded: cycles.iter().any(|(_, c)| !c.is_empty()),
        dcc: cycles.iter().any(|(_, c)| c.len() >= 2),
        dcc1: cycles.iter().any(|(_, c)| chords_share_vertex(c)),
    }
}

/// Least cycle sequence satisfying `pred`.
pub fn least_cycle(g: &Graph, pred: impl Fn(&[(usize, usize)]) -> bool) -> Option<Vec<usize>> {
    all_cycles(g).into_iter().filter(|(_, c)| pred(c)).map(|(s, _)| s).min()
}

/// `K_1 ∨ P_4` by trying every ordered 5-tuple.
pub fn naive_k1p4(g: &Graph) -> bool {
    let n = g.n();
    for h in 0..n {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let vs = [h, a, b, c, d];
                        let distinct: BTreeSet<usize> = vs.into_iter().collect();
                        if distinct.len() == 5
                            && [a, b, c, d].iter().all(|&x| g.has_edge(h, x))
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Connected graphs on 1..=max_n vertices.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| Enumerator::new(n).unwrap().collect().unwrap()).collect()
}

/// Labelled graphs on `n` vertices, one per edge subset.
pub fn labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Smallest adjacency bit string over all vertex orders.
pub fn brute_canon(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let order: Vec<usize> = (0..n).collect();
    permutations(&order)
        .into_iter()
        .map(|p| (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.has_edge(p[i], p[j])).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected G(n, p) sample with `p` itself random.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    loop {
        let p: f64 = rng.random_range(0.15..0.85);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// The fixed random sample used by the property checks.
pub fn random_sample(count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let n = r.random_range(8..=12);
            random_connected(&mut r, n)
        })
        .collect()
}

/// Largest adjacency eigenvalue from a dense symmetric solver.
pub fn dense_radius(g: &Graph) -> f64 {
    let n = g.n();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    m.symmetric_eigen().eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}
