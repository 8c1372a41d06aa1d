//! Quotient matrices of vertex partitions and their exact characteristic
//! polynomials.

use num_bigint::BigInt;
use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use super::poly::IntPolynomial;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    pub partition: Vec<VertexSet>,
    /// `entries[i][j]` is the average number of neighbours in block `j` of a
    /// vertex in block `i`.
    pub entries: Vec<Vec<Rational64>>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Integer entries, or the first non-integral position.
    pub fn integer_entries(&self) -> Result<Vec<Vec<i64>>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(row, r)| {
                r.iter()
                    .enumerate()
                    .map(|(col, e)| if e.is_integer() { Ok(e.to_integer()) } else { Err(Error::NonIntegralQuotient { row, col }) })
                    .collect()
            })
            .collect()
    }
}

#[derive(Serialize)]
struct QuotientView {
    partition: Vec<Vec<usize>>,
    entries: Vec<Vec<String>>,
    equitable: bool,
}

impl Serialize for QuotientMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuotientView {
            partition: self.partition.iter().map(|b| b.iter().collect()).collect(),
            entries: self.entries.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect(),
            equitable: self.equitable,
        }
        .serialize(s)
    }
}

/// Builds the quotient matrix of `g` for `partition`, which must consist of
/// nonempty, pairwise disjoint blocks covering every vertex.
pub fn quotient_matrix(g: &Graph, partition: &[VertexSet]) -> Result<QuotientMatrix> {
    let mut seen = VertexSet::EMPTY;
    for (i, b) in partition.iter().enumerate() {
        if b.is_empty() {
            return Err(Error::InvalidPartition(format!("block {i} is empty")));
        }
        if !b.is_subset(g.vertices()) {
            return Err(Error::InvalidPartition(format!("block {i} has a vertex outside the graph")));
        }
        if !b.is_disjoint(seen) {
            return Err(Error::InvalidPartition(format!("block {i} overlaps an earlier block")));
        }
        seen = seen.union(*b);
    }
    if seen != g.vertices() {
        return Err(Error::InvalidPartition(format!("vertices {:?} are not covered", g.vertices().difference(seen))));
    }
    let mut equitable = true;
    let entries = partition
        .iter()
        .map(|bi| {
            partition
                .iter()
                .map(|bj| {
                    let counts: Vec<usize> = bi.iter().map(|u| g.neighbors(u).intersection(*bj).len()).collect();
                    if counts.iter().any(|&c| c != counts[0]) {
                        equitable = false;
                    }
                    Rational64::new(counts.iter().sum::<usize>() as i64, bi.len() as i64)
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { partition: partition.to_vec(), entries, equitable })
}

/// `det(xI - B)` for an integral quotient matrix, by Faddeev–LeVerrier with
/// exact integer division.
pub fn char_poly(q: &QuotientMatrix) -> Result<IntPolynomial> {
    let b: Vec<Vec<BigInt>> =
        q.integer_entries()?.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let m = b.len();
    // coefficient of x^(m-k) is c[k]
    let mut c = vec![BigInt::from(1)];
    let mut mk = vec![vec![BigInt::zero(); m]; m];
    for k in 1..=m {
        // M_k = B M_{k-1} + c_{k-1} I
        let mut next = mat_mul(&b, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        mk = next;
        let bm = mat_mul(&b, &mk);
        let trace: BigInt = (0..m).map(|i| &bm[i][i]).sum();
        c.push(-trace / BigInt::from(k));
    }
    Ok(IntPolynomial::from_ascending(c.into_iter().rev().collect()))
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = a.len();
    (0..m)
        .map(|i| {
            (0..m).map(|j| (0..m).filter(|&k| !a[i][k].is_zero()).map(|k| &a[i][k] * &b[k][j]).sum()).collect()
        })
        .collect()
}

/// The coarsest equitable partition, by colour refinement from the trivial
/// partition. Blocks are ordered by their smallest vertex.
pub fn coarsest_equitable_partition(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s = vec![0usize; classes];
                for w in g.neighbors(v) {
                    s[colour[w]] += 1;
                }
                (colour[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
        for (v, sig) in sigs.drain(..).enumerate() {
            colour[v] = distinct.binary_search(&sig).expect("signature is listed");
        }
    }
    let mut blocks = vec![VertexSet::EMPTY; classes];
    for (v, &c) in colour.iter().enumerate() {
        blocks[c].insert(v);
    }
    blocks.retain(|b| !b.is_empty());
    blocks.sort_by_key(|b| b.first());
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64) -> Rational64 {
        Rational64::from_integer(a)
    }

    #[test]
    fn k114_quotient() {
        let g = Graph::complete_multipartite(&[1, 1, 4]).unwrap();
        let parts = [VertexSet::singleton(0), VertexSet::singleton(1), VertexSet::from_bits(0b111100)];
        let q = quotient_matrix(&g, &parts).unwrap();
        assert!(q.equitable);
        assert_eq!(q.entries, vec![vec![r(0), r(1), r(4)], vec![r(1), r(0), r(4)], vec![r(1), r(1), r(0)]]);
        // x^3 - 9x - 8 = (x + 1)(x^2 - x - 8)
        assert_eq!(char_poly(&q).unwrap(), IntPolynomial::from_descending(&[1, 0, -9, -8]));
    }

    #[test]
    fn non_equitable_path_partition() {
        let p4 = Graph::path(4).unwrap();
        let q = quotient_matrix(&p4, &[VertexSet::from_bits(0b0011), VertexSet::from_bits(0b1100)]).unwrap();
        assert!(!q.equitable);
        assert_eq!(q.entries[0][0], r(1));
        assert_eq!(q.entries[0][1], Rational64::new(1, 2));
        assert_eq!(char_poly(&q), Err(Error::NonIntegralQuotient { row: 0, col: 1 }));
    }

    #[test]
    fn malformed_partitions() {
        let g = Graph::path(3).unwrap();
        let a = VertexSet::from_bits(0b011);
        assert!(matches!(quotient_matrix(&g, &[a, VertexSet::from_bits(0b110)]), Err(Error::InvalidPartition(_))));
        assert!(matches!(quotient_matrix(&g, &[a]), Err(Error::InvalidPartition(_))));
        assert!(matches!(quotient_matrix(&g, &[a, VertexSet::EMPTY]), Err(Error::InvalidPartition(_))));
        assert!(matches!(quotient_matrix(&g, &[a, VertexSet::from_bits(0b1100)]), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn discrete_partition_gives_adjacency_char_poly() {
        let c4 = Graph::cycle(4).unwrap();
        let parts: Vec<_> = (0..4).map(VertexSet::singleton).collect();
        // x^4 - 4x^2
        assert_eq!(char_poly(&quotient_matrix(&c4, &parts).unwrap()).unwrap(), IntPolynomial::from_descending(&[1, 0, -4, 0, 0]));
    }

    #[test]
    fn colour_refinement() {
        let g = Graph::complete_multipartite(&[1, 1, 4]).unwrap();
        let p = coarsest_equitable_partition(&g);
        assert_eq!(p, vec![VertexSet::from_bits(0b11), VertexSet::from_bits(0b111100)]);
        assert!(quotient_matrix(&g, &p).unwrap().equitable);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(coarsest_equitable_partition(&c5).len(), 1);
    }

    #[test]
    fn json_entries_are_strings() {
        let p4 = Graph::path(4).unwrap();
        let q = quotient_matrix(&p4, &[VertexSet::from_bits(0b0011), VertexSet::from_bits(0b1100)]).unwrap();
        let v = serde_json::to_value(&q).unwrap();
        assert_eq!(v["entries"][0][1], "1/2");
        assert_eq!(v["partition"][1], serde_json::json!([2, 3]));
    }
}
