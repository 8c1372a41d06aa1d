//! Named extremal and comparison families, each with its reference radius and
//! the forbidden structure it avoids.
//!
//! Fixed labellings (all built from the graph-core constructors):
//!
//! * `K11m`: `K_{1,1,n-2}`, the two universal vertices are 0 and 1.
//! * `K3m`: `K_{3,n-3}`, the small side is `{0,1,2}`.
//! * `F1`: `K_2` and `K_4` sharing vertex 1; 0 is the pendant vertex.
//! * `Hnr` / `HnrPrime`: `K_1 ∨ rK_3` (hub 0) glued to `K_{3,m}`,
//!   `m = n − 3r − 3`, at a vertex of the three-side (`Hnr`) or of the
//!   `m`-side (`HnrPrime`).
//! * `K1_*`: `K_1 ∨ (…)` with the hub at 0 and components in the order named.
//! * `Wheel`: hub 0, rim `1..=r` in cyclic order.
//! * `Hn`: the independent set first, then the edges (and the lone vertex).
//! * `F0` (`k = 1, 2`): `K_{2,2+k}` on `{0,1} ∪ {2,…,3+k}`, the edge 2–3 and a
//!   pendant vertex `4+k` at 2.
//! * `F2` (`k = 1, 2, 3`): `K_{2,k+2}` on `{0,1} ∪ {2,…,k+3}` plus the edge 2–3.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cycles::{self, CycleWitness, Target};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::{largest_real_root, IntPolynomial};

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyName {
    K11m,
    K3m,
    F1,
    Hnr,
    HnrPrime,
    K1_rK3,
    K1_K2_kK3,
    K1_K1_kK3,
    K1_K1t_kK3,
    Wheel,
    Hn,
    F0,
    F2,
}

impl FamilyName {
    pub const ALL: [FamilyName; 13] = [
        FamilyName::K11m,
        FamilyName::K3m,
        FamilyName::F1,
        FamilyName::Hnr,
        FamilyName::HnrPrime,
        FamilyName::K1_rK3,
        FamilyName::K1_K2_kK3,
        FamilyName::K1_K1_kK3,
        FamilyName::K1_K1t_kK3,
        FamilyName::Wheel,
        FamilyName::Hn,
        FamilyName::F0,
        FamilyName::F2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::K11m => "K11m",
            FamilyName::K3m => "K3m",
            FamilyName::F1 => "F1",
            FamilyName::Hnr => "Hnr",
            FamilyName::HnrPrime => "HnrPrime",
            FamilyName::K1_rK3 => "K1_rK3",
            FamilyName::K1_K2_kK3 => "K1_K2_kK3",
            FamilyName::K1_K1_kK3 => "K1_K1_kK3",
            FamilyName::K1_K1t_kK3 => "K1_K1t_kK3",
            FamilyName::Wheel => "Wheel",
            FamilyName::Hn => "Hn",
            FamilyName::F0 => "F0",
            FamilyName::F2 => "F2",
        }
    }

    /// Parameters the family reads, as a usage hint.
    pub fn parameters(self) -> &'static str {
        match self {
            FamilyName::K11m => "n >= 3",
            FamilyName::K3m => "n >= 4",
            FamilyName::F1 => "none (n = 5)",
            FamilyName::Hnr | FamilyName::HnrPrime => "r >= 1, n >= 3r + 4",
            FamilyName::K1_rK3 => "r >= 1 or n = 3r + 1",
            FamilyName::K1_K2_kK3 => "k >= 1 or n = 3k + 3",
            FamilyName::K1_K1_kK3 => "k >= 1 or n = 3k + 2",
            FamilyName::K1_K1t_kK3 => "t >= 2, n >= t + 5, n - t = 2 mod 3",
            FamilyName::Wheel => "r >= 3 (n = r + 1)",
            FamilyName::Hn => "n >= 6",
            FamilyName::F0 => "k in {1, 2} (n = 5 + k)",
            FamilyName::F2 => "k in {1, 2, 3} (n = 4 + k)",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Hn_thm5" {
            return Ok(FamilyName::Hn);
        }
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::FamilyParameter(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

/// Fully determined parameters of a valid spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Params {
    n: usize,
    r: usize,
    t: usize,
    k: usize,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::FamilyParameter(msg.into())
}

fn need(v: Option<usize>, what: &str, family: FamilyName) -> Result<usize> {
    v.ok_or_else(|| bad(format!("{family} needs {what}")))
}

/// `n = a·x + b`; derives whichever of `n`, `x` is missing and checks both.
fn linear(n: Option<usize>, x: Option<usize>, a: usize, b: usize, what: &str, fam: FamilyName) -> Result<(usize, usize)> {
    let x = match (n, x) {
        (_, Some(x)) => x,
        (Some(n), None) if n >= b + a && (n - b).is_multiple_of(a) => (n - b) / a,
        (Some(n), None) => return Err(bad(format!("{fam} is undefined at n = {n}"))),
        (None, None) => return Err(bad(format!("{fam} needs n or {what}"))),
    };
    if x < 1 {
        return Err(bad(format!("{fam} needs {what} >= 1")));
    }
    let expect = a * x + b;
    if n.is_some_and(|n| n != expect) {
        return Err(bad(format!("{fam} with {what} = {x} has n = {expect}")));
    }
    Ok((expect, x))
}

impl FamilySpec {
    pub fn new(name: FamilyName) -> Self {
        FamilySpec { name, n: None, r: None, t: None, k: None }
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    fn params(&self) -> Result<Params> {
        use FamilyName::*;
        let f = self.name;
        let mut p = Params { n: 0, r: 0, t: 0, k: 0 };
        match f {
            K11m | K3m | Hn => {
                let n = need(self.n, "n", f)?;
                let min = match f {
                    K11m => 3,
                    K3m => 4,
                    _ => 6,
                };
                if n < min {
                    return Err(bad(format!("{f} needs n >= {min}, got {n}")));
                }
                p.n = n;
            }
            F1 => {
                if self.n.is_some_and(|n| n != 5) {
                    return Err(bad("F1 has exactly 5 vertices"));
                }
                p.n = 5;
            }
            Hnr | HnrPrime => {
                let (n, r) = (need(self.n, "n", f)?, need(self.r, "r", f)?);
                if r < 1 || n < 3 * r + 4 {
                    return Err(bad(format!("{f} needs r >= 1 and n >= 3r + 4, got n = {n}, r = {r}")));
                }
                (p.n, p.r) = (n, r);
            }
            K1_rK3 => (p.n, p.r) = linear(self.n, self.r.or(self.k), 3, 1, "r", f)?,
            K1_K2_kK3 => (p.n, p.k) = linear(self.n, self.k, 3, 3, "k", f)?,
            K1_K1_kK3 => (p.n, p.k) = linear(self.n, self.k, 3, 2, "k", f)?,
            K1_K1t_kK3 => {
                let t = need(self.t, "t", f)?;
                if t < 2 {
                    return Err(bad(format!("{f} needs t >= 2, got {t}")));
                }
                let (n, k) = linear(self.n, self.k, 3, t + 2, "k", f)?;
                (p.n, p.t, p.k) = (n, t, k);
            }
            Wheel => {
                let r = match (self.r, self.n) {
                    (Some(r), _) => r,
                    (None, Some(n)) => n.saturating_sub(1),
                    (None, None) => return Err(bad("Wheel needs r or n")),
                };
                if r < 3 || self.n.is_some_and(|n| n != r + 1) {
                    return Err(bad(format!("Wheel needs r >= 3 and n = r + 1, got r = {r}")));
                }
                (p.n, p.r) = (r + 1, r);
            }
            F0 | F2 => {
                let (base, max) = if f == F0 { (5, 2) } else { (4, 3) };
                let k = match (self.k, self.n) {
                    (Some(k), _) => k,
                    (None, Some(n)) => n.saturating_sub(base),
                    (None, None) => return Err(bad(format!("{f} needs k or n"))),
                };
                if !(1..=max).contains(&k) || self.n.is_some_and(|n| n != base + k) {
                    return Err(bad(format!("{f} needs 1 <= k <= {max} and n = {base} + k")));
                }
                (p.n, p.k) = (base + k, k);
            }
        }
        Ok(p)
    }

    /// Order of the built graph.
    pub fn order(&self) -> Result<usize> {
        Ok(self.params()?.n)
    }

    /// Edge count predicted by the family's formula.
    pub fn edge_formula(&self) -> Result<usize> {
        use FamilyName::*;
        let Params { n, r, t: _, k } = self.params()?;
        Ok(match self.name {
            K1_rK3 => 6 * r,
            K11m | K1_K2_kK3 | K1_K1_kK3 | K1_K1t_kK3 => 2 * n - 3,
            K3m => 3 * (n - 3),
            F1 => 7,
            Hnr | HnrPrime => 3 * n - 3 * r - 9,
            Wheel => 2 * r,
            Hn => {
                let (s, pairs) = hn_shape(n);
                s * (n - s) + pairs
            }
            F0 => 2 * k + 6,
            F2 => 2 * k + 5,
        })
    }
}

/// `(size of the independent side, number of K_2 components)` of `H_n`.
fn hn_shape(n: usize) -> (usize, usize) {
    match n % 4 {
        1 => (n.div_ceil(2), (n - 1) / 4),
        3 => ((n - 1) / 2, (n + 1) / 4),
        0 => (n / 2, n / 4),
        _ => (n / 2, (n - 2) / 4),
    }
}

fn k(n: usize) -> Graph {
    Graph::complete(n).expect("small complete graph")
}

fn hub_join(parts: &[Graph]) -> Result<Graph> {
    k(1).join(&Graph::disjoint_union(parts)?)
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    use FamilyName::*;
    let Params { n, r, t, k: kk } = spec.params()?;
    match spec.name {
        K11m => Graph::complete_multipartite(&[1, 1, n - 2]),
        K3m => Graph::complete_multipartite(&[3, n - 3]),
        F1 => Graph::coalesce(&k(2), 1, &k(4), 0),
        Hnr | HnrPrime => {
            let m = n - 3 * r - 3;
            let left = hub_join(&[k(3).copies(r)?])?;
            let right = Graph::complete_multipartite(&[3, m])?;
            Graph::coalesce(&left, 0, &right, if spec.name == Hnr { 0 } else { 3 })
        }
        K1_rK3 => hub_join(&[k(3).copies(r)?]),
        K1_K2_kK3 => hub_join(&[k(2), k(3).copies(kk)?]),
        K1_K1_kK3 => hub_join(&[k(1), k(3).copies(kk)?]),
        K1_K1t_kK3 => hub_join(&[Graph::complete_multipartite(&[1, t])?, k(3).copies(kk)?]),
        Wheel => hub_join(&[Graph::cycle(r)?]),
        Hn => {
            let (s, pairs) = hn_shape(n);
            let mut right = vec![k(2).copies(pairs)?];
            if n % 4 == 2 {
                right.push(k(1));
            }
            Graph::empty(s)?.join(&Graph::disjoint_union(&right)?)
        }
        F0 => Graph::complete_multipartite(&[2, 2 + kk])?.with_edge(2, 3)?.add_vertex(VertexSet::singleton(2)),
        F2 => Graph::complete_multipartite(&[2, kk + 2])?.with_edge(2, 3),
    }
}

/// Reference value recorded for a family.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    ClosedForm(f64),
    /// The radius is the largest real root.
    Polynomial(IntPolynomial),
    /// A four-significant-figure tabulated value.
    Table(f64),
}

impl Expectation {
    /// Numeric value; polynomial roots are refined to `tol`.
    pub fn value(&self, tol: f64) -> Result<f64> {
        match self {
            Expectation::ClosedForm(v) | Expectation::Table(v) => Ok(*v),
            Expectation::Polynomial(p) => largest_real_root(p, tol),
        }
    }

    /// Agreement tolerance: tables carry four figures, the rest is exact.
    pub fn tolerance(&self) -> f64 {
        match self {
            Expectation::Table(_) => 1e-3,
            _ => 1e-8,
        }
    }
}

fn int(v: usize) -> i64 {
    i64::try_from(v).expect("small parameter")
}

pub fn expected_radius(spec: &FamilySpec) -> Result<Expectation> {
    use FamilyName::*;
    let Params { n, r, t: _, k } = spec.params()?;
    let (ni, ri) = (int(n), int(r));
    let nf = n as f64;
    let none = || Error::NoExpectation(spec.name.to_string());
    Ok(match spec.name {
        K11m => Expectation::ClosedForm(0.5 + (2.0 * nf - 3.75).sqrt()),
        K3m => Expectation::ClosedForm((3.0 * (nf - 3.0)).sqrt()),
        F1 => Expectation::Table(3.0861),
        Hnr => Expectation::Polynomial(hnr_quartic(ni, ri)),
        HnrPrime if n == 3 * r + 6 => Expectation::Polynomial(hnr_quartic(ni, ri)),
        HnrPrime => return Err(none()),
        K1_rK3 => Expectation::ClosedForm(1.0 + nf.sqrt()),
        K1_K2_kK3 => Expectation::Polynomial(IntPolynomial::from_descending(&[1, -3, -(ni - 3), ni + 1])),
        K1_K1_kK3 => Expectation::Polynomial(IntPolynomial::from_descending(&[1, -2, -(ni - 1), 2])),
        K1_K1t_kK3 | Wheel => return Err(none()),
        Hn => match n % 4 {
            1 | 3 => Expectation::ClosedForm((nf + 1.0) / 2.0),
            0 => Expectation::ClosedForm((1.0 + (nf * nf + 1.0).sqrt()) / 2.0),
            _ => Expectation::Polynomial(IntPolynomial::from_descending(&[1, -1, -(ni * ni / 4), ni / 2])),
        },
        F0 => Expectation::Table([2.9439, 3.2054][k - 1]),
        F2 => Expectation::Table([2.8858, 3.1413, 3.4142][k - 1]),
    })
}

/// `x⁴ − 2x³ + (6r − 3n + 9)x² + (6n − 18r − 18)x + 6nr − 18r − 18r²`.
pub fn hnr_quartic(n: i64, r: i64) -> IntPolynomial {
    IntPolynomial::from_descending(&[1, -2, 6 * r - 3 * n + 9, 6 * n - 18 * r - 18, 6 * n * r - 18 * r - 18 * r * r])
}

/// What a family is known to avoid (or, for large wheels, to contain).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessClaim {
    DccFree,
    Dcc1Free,
    K1p4Free,
    ContainsK1p4,
}

impl FreenessClaim {
    pub fn target(self) -> Target {
        match self {
            FreenessClaim::DccFree => Target::Dcc,
            FreenessClaim::Dcc1Free => Target::Dcc1,
            FreenessClaim::K1p4Free | FreenessClaim::ContainsK1p4 => Target::K1p4,
        }
    }
}

pub fn freeness_claim(spec: &FamilySpec) -> Result<FreenessClaim> {
    use FamilyName::*;
    let p = spec.params()?;
    Ok(match spec.name {
        K11m => FreenessClaim::DccFree,
        K3m | F1 | Hnr | HnrPrime | K1_rK3 | K1_K2_kK3 | K1_K1_kK3 | K1_K1t_kK3 | F0 | F2 => FreenessClaim::Dcc1Free,
        Hn => FreenessClaim::K1p4Free,
        Wheel if p.r >= 4 => FreenessClaim::ContainsK1p4,
        Wheel => return Err(Error::NoClaim(spec.name.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FreenessReport {
    pub family: FamilySpec,
    pub graph6: String,
    pub claim: FreenessClaim,
    /// Whether the detector found the structure.
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CycleWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1p4: Option<[usize; 5]>,
    pub pass: bool,
}

pub fn verify_family_freeness(spec: &FamilySpec) -> Result<FreenessReport> {
    let claim = freeness_claim(spec)?;
    let g = build_family(spec)?;
    let (witness, k1p4) = match claim.target() {
        Target::Dcc => (cycles::find_dcc(&g), None),
        Target::Dcc1 => (cycles::find_dcc1(&g), None),
        _ => (None, cycles::find_k1_join_p4(&g)),
    };
    let found = witness.is_some() || k1p4.is_some();
    let pass = found == (claim == FreenessClaim::ContainsK1p4);
    Ok(FreenessReport { family: *spec, graph6: g.to_string(), claim, found, witness, k1p4, pass })
}

/// Every in-domain spec of every family up to order `max_n` (wheels from
/// `r = 3`).
pub fn specs_up_to(max_n: usize) -> Vec<FamilySpec> {
    use FamilyName::*;
    let mut out = Vec::new();
    for name in FamilyName::ALL {
        let base = FamilySpec::new(name);
        let candidates: Vec<FamilySpec> = match name {
            Hnr | HnrPrime => (1..=max_n)
                .flat_map(|r| (3 * r + 4..=max_n).map(move |n| base.with_n(n).with_r(r)))
                .collect(),
            K1_K1t_kK3 => (2..=max_n)
                .flat_map(|t| (t + 5..=max_n).map(move |n| base.with_n(n).with_t(t)))
                .collect(),
            Wheel => (3..max_n).map(|r| base.with_r(r)).collect(),
            F0 | F2 => (1..=3).map(|k| base.with_k(k)).collect(),
            F1 => vec![base],
            _ => (1..=max_n).map(|n| base.with_n(n)).collect(),
        };
        out.extend(candidates.into_iter().filter(|s| s.params().is_ok_and(|p| p.n <= max_n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{spectral_radius, DEFAULT_TOL};

    fn build(s: FamilySpec) -> Graph {
        build_family(&s).unwrap()
    }

    fn rho(g: &Graph) -> f64 {
        spectral_radius(g, DEFAULT_TOL).unwrap().rho
    }

    #[test]
    fn named_examples() {
        let f1 = build(FamilySpec::new(FamilyName::F1));
        assert_eq!((f1.n(), f1.edge_count()), (5, 7));
        let h9 = build(FamilySpec::new(FamilyName::Hn).with_n(9));
        assert_eq!(h9.n(), 9);
        assert_eq!(h9, Graph::empty(5).unwrap().join(&k(2).copies(2).unwrap()).unwrap());
        let h6 = build(FamilySpec::new(FamilyName::Hn).with_n(6));
        assert_eq!(h6.edge_count(), 3 * 3 + 1);
        let f2 = build(FamilySpec::new(FamilyName::F2).with_k(1));
        assert_eq!((f2.n(), f2.edge_count()), (5, 7));
        assert!(f2.has_edge(2, 3));
    }

    #[test]
    fn edge_formulas_match() {
        for s in specs_up_to(14) {
            let g = build_family(&s).unwrap();
            assert_eq!(g.n(), s.order().unwrap(), "{s:?}");
            assert_eq!(g.edge_count(), s.edge_formula().unwrap(), "{s:?}");
        }
    }

    #[test]
    fn domains() {
        let hnr = FamilySpec::new(FamilyName::Hnr);
        assert!(build_family(&hnr.with_n(6).with_r(1)).is_err());
        assert!(build_family(&hnr.with_n(7).with_r(1)).is_ok());
        assert!(build_family(&FamilySpec::new(FamilyName::K1_K1t_kK3).with_n(8).with_t(2)).is_err());
        assert!(build_family(&FamilySpec::new(FamilyName::K1_K1t_kK3).with_n(7).with_t(2)).is_ok());
        assert!(build_family(&FamilySpec::new(FamilyName::F0).with_k(3)).is_err());
        assert!(build_family(&FamilySpec::new(FamilyName::Wheel).with_r(2)).is_err());
        assert_eq!(build(FamilySpec::new(FamilyName::Wheel).with_r(3)), k(4));
        assert!(build_family(&FamilySpec::new(FamilyName::K1_rK3).with_n(13).with_r(3)).is_err());
        assert_eq!("Hn_thm5".parse::<FamilyName>().unwrap(), FamilyName::Hn);
        assert!("K5".parse::<FamilyName>().is_err());
    }

    #[test]
    fn expectations() {
        let f0 = FamilySpec::new(FamilyName::F0).with_k(2);
        assert_eq!(expected_radius(&f0).unwrap(), Expectation::Table(3.2054));
        let k1 = FamilySpec::new(FamilyName::K1_rK3).with_n(13).with_r(4);
        assert_eq!(expected_radius(&k1).unwrap(), Expectation::ClosedForm(1.0 + 13f64.sqrt()));
        let q = expected_radius(&FamilySpec::new(FamilyName::Hnr).with_n(8).with_r(1)).unwrap();
        assert_eq!(q, Expectation::Polynomial(IntPolynomial::from_descending(&[1, -2, -9, 12, 12])));
        let hp = FamilySpec::new(FamilyName::HnrPrime).with_r(1);
        assert_eq!(
            expected_radius(&hp.with_n(9)).unwrap(),
            expected_radius(&FamilySpec::new(FamilyName::Hnr).with_n(9).with_r(1)).unwrap()
        );
        assert!(matches!(expected_radius(&hp.with_n(10)), Err(Error::NoExpectation(_))));
        assert!(matches!(expected_radius(&FamilySpec::new(FamilyName::Wheel).with_r(5)), Err(Error::NoExpectation(_))));
    }

    #[test]
    fn closed_forms_and_polynomials_agree_with_power_iteration() {
        for s in specs_up_to(14) {
            let Ok(e) = expected_radius(&s) else { continue };
            if matches!(e, Expectation::Table(_)) {
                continue;
            }
            let g = build_family(&s).unwrap();
            assert!((e.value(1e-12).unwrap() - rho(&g)).abs() < 1e-8, "{s:?}");
        }
    }

    #[test]
    fn freeness_examples() {
        let r = verify_family_freeness(&FamilySpec::new(FamilyName::K11m).with_n(9)).unwrap();
        assert!(r.pass && !r.found);
        let r = verify_family_freeness(&FamilySpec::new(FamilyName::Hnr).with_n(10).with_r(2)).unwrap();
        assert!(r.pass);
        let r = verify_family_freeness(&FamilySpec::new(FamilyName::Wheel).with_r(5)).unwrap();
        assert!(r.pass && r.found);
        assert!(matches!(verify_family_freeness(&FamilySpec::new(FamilyName::Wheel).with_r(3)), Err(Error::NoClaim(_))));
    }
}
