//! Matchings of the complete bipartite graph `K_{n,n}` and the action of the
//! flip group on them.
//!
//! A `k`-edge matching `τ` is a bijection `I → J` between `k`-subsets of
//! `{1..n}`; `sign(τ) · weight_X(τ)` is the corresponding term in the
//! expansion of the minor `|X_{IJ}|`. Adding an auxiliary edge `r → r` for
//! every `r ∈ I ∩ J` turns `τ` into a disjoint union of paths and cycles;
//! the edges of `τ` in each component form a *cluster*, which is *open* when
//! the component is a path and *closed* when it is a cycle.
//!
//! The generator `f_{ij}` (`i < j`) reverses every edge of the open cluster
//! containing `i → j` or `j → i`, and does nothing if there is none.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, IndexSet, Rational};
use crate::minor_sums::{interlacing_sum, is_interlacing};

/// Edge `left → right`, both labels 1-based.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Matching {
    n: usize,
    /// Sorted by left endpoint.
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        for &(i, j) in &edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidMatching(format!(
                    "edge {i}→{j} outside 1..={n}"
                )));
            }
        }
        if edges.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidMatching("two edges share a left node".into()));
        }
        if !edges.iter().map(|e| e.1).all_unique() {
            return Err(Error::InvalidMatching(
                "two edges share a right node".into(),
            ));
        }
        Ok(Matching { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted left endpoints `I`.
    pub fn domain(&self) -> IndexSet {
        IndexSet::from_unsorted(self.n, self.edges.iter().map(|e| e.0)).expect("valid matching")
    }

    /// Sorted right endpoints `J`.
    pub fn codomain(&self) -> IndexSet {
        IndexSet::from_unsorted(self.n, self.edges.iter().map(|e| e.1)).expect("valid matching")
    }

    pub fn contains_edge(&self, edge: Edge) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    pub fn is_interlacing(&self) -> bool {
        is_interlacing(&self.domain(), &self.codomain()).expect("equal sizes")
    }

    /// Sorted concatenation of `I` and `J`, with labels in `I ∩ J` listed twice.
    pub fn label_multiset(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.edges.iter().flat_map(|&(i, j)| [i, j]).collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.edges
                .iter()
                .map(|(i, j)| format!("{i}→{j}"))
                .join(", ")
        )
    }
}

/// Every `k`-edge matching of `K_{n,n}`: `I` and `J` in lexicographic
/// order, then bijections in lexicographic order of the image sequence.
pub fn enumerate_matchings(n: usize, k: usize) -> impl Iterator<Item = Matching> {
    IndexSet::subsets(n, k).flat_map(move |i| {
        IndexSet::subsets(n, k).flat_map(move |j| {
            let left = i.elems().to_vec();
            j.elems()
                .to_vec()
                .into_iter()
                .permutations(k)
                .map(move |image| Matching {
                    n,
                    edges: left.iter().copied().zip(image).collect(),
                })
        })
    })
}

/// Pairs of edges `(i → j)`, `(i' → j')` with `(i − i')(j − j') < 0`.
pub fn crossings(tau: &Matching) -> usize {
    tau.edges
        .iter()
        .tuple_combinations()
        .filter(|(&(a, b), &(c, d))| (a < c) != (b < d))
        .count()
}

/// `(−1)^crossings`, which is the sign of the underlying permutation.
pub fn sign(tau: &Matching) -> i32 {
    if crossings(tau).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Π x_{i τ(i)}` over the edges of `τ`.
pub fn weight(tau: &Matching, x: &ExactMatrix) -> Result<Rational> {
    if x.rows() != tau.n || x.cols() != tau.n {
        return Err(Error::Dimension(format!(
            "matching on n = {} needs a {0}×{0} matrix, got {}×{}",
            tau.n,
            x.rows(),
            x.cols()
        )));
    }
    let mut acc = Rational::one();
    for &(i, j) in &tau.edges {
        acc *= x.entry(i, j)?;
    }
    Ok(acc)
}

/// `Σ_{τ: I → J} sign(τ) weight_X(τ)`.
pub fn minor_via_matchings(x: &ExactMatrix, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
    if rows.len() != cols.len() {
        return Err(Error::Dimension(format!(
            "{rows} and {cols} have different sizes"
        )));
    }
    let n = x.rows();
    let mut acc = Rational::zero();
    for image in cols.elems().iter().copied().permutations(cols.len()) {
        let tau = Matching::new(n, rows.elems().iter().copied().zip(image))?;
        let term = weight(&tau, x)?;
        if sign(&tau) > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClusterKind {
    /// Endpoints `left ∈ I ∖ J` and `right ∈ J ∖ I`.
    Open {
        left: usize,
        right: usize,
    },
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cluster {
    /// Sorted by left endpoint.
    pub edges: Vec<Edge>,
    #[serde(flatten)]
    pub kind: ClusterKind,
    pub separation: usize,
}

impl Cluster {
    pub fn is_open(&self) -> bool {
        matches!(self.kind, ClusterKind::Open { .. })
    }

    /// Every node label touched by the cluster on either side, sorted.
    pub fn labels(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterDecomposition {
    /// Ordered by smallest left endpoint.
    pub clusters: Vec<Cluster>,
}

impl ClusterDecomposition {
    pub fn open(&self) -> impl Iterator<Item = &Cluster> {
        self.clusters.iter().filter(|c| c.is_open())
    }

    pub fn open_count(&self) -> usize {
        self.open().count()
    }

    /// Every cluster has even endpoint separation.
    pub fn all_separations_even(&self) -> bool {
        self.clusters.iter().all(|c| c.separation % 2 == 0)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(size: usize) -> Self {
        UnionFind((0..size).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn separation_in(labels: &[usize], a: usize, b: usize) -> usize {
    let (lo, hi) = (a.min(b), a.max(b));
    labels.iter().filter(|&&x| lo < x && x < hi).count()
}

/// Splits `τ` into open and closed clusters.
pub fn decompose_clusters(tau: &Matching) -> ClusterDecomposition {
    let n = tau.n;
    let dom = tau.domain();
    let cod = tau.codomain();
    // left node i ↦ i, right node j ↦ n + j
    let mut uf = UnionFind::new(2 * n + 1);
    for &(i, j) in &tau.edges {
        uf.union(i, n + j);
    }
    for r in dom.intersection(&cod) {
        uf.union(r, n + r);
    }

    let labels = tau.label_multiset();
    let mut groups: Vec<(usize, Vec<Edge>)> = Vec::new();
    for &(i, j) in &tau.edges {
        let root = uf.find(i);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, edges)) => edges.push((i, j)),
            None => groups.push((root, vec![(i, j)])),
        }
    }

    let clusters = groups
        .into_iter()
        .map(|(_, edges)| {
            // Degree-one nodes of the augmented graph are the path ends.
            let left = edges.iter().map(|e| e.0).find(|&i| !cod.contains(i));
            let right = edges.iter().map(|e| e.1).find(|&j| !dom.contains(j));
            match (left, right) {
                (Some(a), Some(b)) => Cluster {
                    separation: separation_in(&labels, a, b),
                    edges,
                    kind: ClusterKind::Open { left: a, right: b },
                },
                (None, None) => Cluster {
                    edges,
                    kind: ClusterKind::Closed,
                    separation: 0,
                },
                _ => unreachable!("a path component has one end on each side"),
            }
        })
        .collect();
    ClusterDecomposition { clusters }
}

/// Endpoint separation of `cluster` within `τ`.
pub fn endpoint_separation(tau: &Matching, cluster: &Cluster) -> Result<usize> {
    let decomposition = decompose_clusters(tau);
    let own = decomposition
        .clusters
        .iter()
        .find(|c| c.edges == cluster.edges)
        .ok_or_else(|| Error::InvalidArgument("cluster does not belong to the matching".into()))?;
    Ok(match own.kind {
        ClusterKind::Open { left, right } => separation_in(&tau.label_multiset(), left, right),
        ClusterKind::Closed => 0,
    })
}

/// Reverses every edge of `cluster`, leaving the rest of `τ` alone.
pub fn flip_cluster(tau: &Matching, cluster: &Cluster) -> Matching {
    flip_clusters(tau, std::iter::once(cluster))
}

fn flip_clusters<'a>(tau: &Matching, clusters: impl IntoIterator<Item = &'a Cluster>) -> Matching {
    let flipped: HashSet<Edge> = clusters
        .into_iter()
        .flat_map(|c| c.edges.iter().copied())
        .collect();
    let mut edges: Vec<Edge> = tau
        .edges
        .iter()
        .map(|&(a, b)| {
            if flipped.contains(&(a, b)) {
                (b, a)
            } else {
                (a, b)
            }
        })
        .collect();
    edges.sort_unstable();
    Matching { n: tau.n, edges }
}

/// The open cluster that `f_{ij}` acts on, if any.
pub fn cluster_for_generator(tau: &Matching, i: usize, j: usize) -> Result<Option<Cluster>> {
    if i == 0 || i >= j || j > tau.n {
        return Err(Error::InvalidArgument(format!(
            "generator f_{{{i},{j}}} needs 1 <= i < j <= {}",
            tau.n
        )));
    }
    Ok(decompose_clusters(tau)
        .clusters
        .into_iter()
        .find(|c| c.is_open() && c.edges.iter().any(|&e| e == (i, j) || e == (j, i))))
}

/// The action of the generator `f_{ij}` on `τ`.
pub fn flip(tau: &Matching, i: usize, j: usize) -> Result<Matching> {
    Ok(match cluster_for_generator(tau, i, j)? {
        Some(c) => flip_cluster(tau, &c),
        None => tau.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitClass {
    Interlacing,
    NonInterlacing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// Sorted.
    pub members: Vec<Matching>,
    pub classification: OrbitClass,
    /// The interlacing member, for interlacing orbits.
    pub representative: Option<Matching>,
}

/// The flip-group orbit of `τ`: all `2^p` ways of flipping a subset of its
/// open clusters.
pub fn orbit(tau: &Matching) -> Orbit {
    let decomposition = decompose_clusters(tau);
    let open: Vec<&Cluster> = decomposition.open().collect();
    let mut members: Vec<Matching> = (0..1usize << open.len())
        .map(|mask| {
            flip_clusters(
                tau,
                open.iter()
                    .enumerate()
                    .filter(|(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, c)| *c),
            )
        })
        .collect();
    members.sort();
    let representative = members.iter().find(|m| m.is_interlacing()).cloned();
    let classification = if representative.is_some() {
        OrbitClass::Interlacing
    } else {
        OrbitClass::NonInterlacing
    };
    Orbit {
        members,
        classification,
        representative,
    }
}

/// An orbit is interlacing iff one of its members has `I ≤ J`.
pub fn classify_orbit(o: &Orbit) -> OrbitClass {
    if o.members.iter().any(Matching::is_interlacing) {
        OrbitClass::Interlacing
    } else {
        OrbitClass::NonInterlacing
    }
}

/// Classification predicted from `τ` alone: interlacing iff every cluster
/// has even endpoint separation.
pub fn classify_by_separation(tau: &Matching) -> OrbitClass {
    if decompose_clusters(tau).all_separations_even() {
        OrbitClass::Interlacing
    } else {
        OrbitClass::NonInterlacing
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SignLawCheck {
    pub holds: bool,
    /// The generator did not move `τ`; `holds` is then trivially true.
    pub vacuous: bool,
    pub separation: Option<usize>,
}

/// Checks `sign(f_{ij} τ) = (−1)^{sep(C)} sign(τ)` for the flipped cluster `C`.
pub fn sign_flip_law_check(tau: &Matching, i: usize, j: usize) -> Result<SignLawCheck> {
    sign_flip_law_check_with(tau, i, j, sign)
}

pub(crate) fn sign_flip_law_check_with(
    tau: &Matching,
    i: usize,
    j: usize,
    sign_of: impl Fn(&Matching) -> i32,
) -> Result<SignLawCheck> {
    let Some(cluster) = cluster_for_generator(tau, i, j)? else {
        return Ok(SignLawCheck {
            holds: true,
            vacuous: true,
            separation: None,
        });
    };
    let flipped = flip_cluster(tau, &cluster);
    let factor = if cluster.separation % 2 == 0 { 1 } else { -1 };
    Ok(SignLawCheck {
        holds: sign_of(&flipped) == factor * sign_of(tau),
        vacuous: false,
        separation: Some(cluster.separation),
    })
}

/// Flips the odd-separation open cluster whose sorted node labels (both
/// sides together) are lexicographically smallest.
///
/// Distinct clusters never share a label: a label present on both sides
/// lies in `I ∩ J` and its two nodes are joined by an auxiliary edge. So the
/// choice is decided by the minimum label alone, and that minimum survives
/// the flip, which makes the map an involution.
pub fn canonical_involution(tau: &Matching) -> Result<Matching> {
    let decomposition = decompose_clusters(tau);
    let chosen = decomposition
        .open()
        .filter(|c| c.separation % 2 == 1)
        .min_by_key(|c| c.labels())
        .ok_or_else(|| {
            Error::InvalidArgument(format!("{tau} has no open cluster with odd separation"))
        })?;
    Ok(flip_cluster(tau, chosen))
}

/// Every orbit of `M_{n,k}`, in order of first appearance in the canonical
/// enumeration.
pub fn partition_orbits(n: usize, k: usize) -> Vec<Orbit> {
    let mut seen: HashSet<Matching> = HashSet::new();
    let mut orbits = Vec::new();
    for tau in enumerate_matchings(n, k) {
        if seen.contains(&tau) {
            continue;
        }
        let o = orbit(&tau);
        seen.extend(o.members.iter().cloned());
        orbits.push(o);
    }
    orbits
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSumReport {
    pub n: usize,
    pub k: usize,
    pub matchings: usize,
    pub orbits: usize,
    pub interlacing_orbits: usize,
    /// Weight is constant on every orbit.
    pub weight_constant: bool,
    /// Sign is constant on every interlacing orbit.
    pub interlacing_sign_uniform: bool,
    /// Every non-interlacing orbit has as many `+1` as `−1` members.
    pub non_interlacing_balanced: bool,
    /// `matching_sum == interlacing_sum`.
    pub sums_agree: bool,
    #[serde(with = "crate::serde_rational")]
    pub matching_sum: Rational,
    #[serde(with = "crate::serde_rational")]
    pub interlacing_sum: Rational,
}

impl OrbitSumReport {
    pub fn all_hold(&self) -> bool {
        self.weight_constant
            && self.interlacing_sign_uniform
            && self.non_interlacing_balanced
            && self.sums_agree
    }
}

/// Runs the orbit-by-orbit evaluation of `Σ_{τ ∈ M_{n,k}} sign(τ) weight_X(τ)`
/// and compares it with the interlacing sum computed from determinants.
pub fn orbit_sum_identity(x: &ExactMatrix, k: usize) -> Result<OrbitSumReport> {
    if !x.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = x.rows();
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }

    let mut report = OrbitSumReport {
        n,
        k,
        matchings: 0,
        orbits: 0,
        interlacing_orbits: 0,
        weight_constant: true,
        interlacing_sign_uniform: true,
        non_interlacing_balanced: true,
        sums_agree: false,
        matching_sum: Rational::zero(),
        interlacing_sum: Rational::zero(),
    };

    for o in partition_orbits(n, k) {
        report.orbits += 1;
        report.matchings += o.members.len();
        let weights = o
            .members
            .iter()
            .map(|m| weight(m, x))
            .collect::<Result<Vec<_>>>()?;
        let signs: Vec<i32> = o.members.iter().map(sign).collect();
        if !weights.iter().all_equal() {
            report.weight_constant = false;
        }
        match o.classification {
            OrbitClass::Interlacing => {
                report.interlacing_orbits += 1;
                if !signs.iter().all_equal() {
                    report.interlacing_sign_uniform = false;
                }
            }
            OrbitClass::NonInterlacing => {
                if signs.iter().sum::<i32>() != 0 {
                    report.non_interlacing_balanced = false;
                }
            }
        }
        for (w, s) in weights.into_iter().zip(signs) {
            if s > 0 {
                report.matching_sum += w;
            } else {
                report.matching_sum -= w;
            }
        }
    }

    // The only 0×0 minor is the empty determinant.
    report.interlacing_sum = if k == 0 {
        Rational::one()
    } else {
        interlacing_sum(x, k)?
    };
    report.sums_agree = report.matching_sum == report.interlacing_sum;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{minor, random_matrix, random_symmetric, rational, t_matrix};
    use crate::minor_sums::{p_value, sum_all_minors};

    /// The 7-edge matching on n = 8 used throughout the cluster examples.
    fn example_tau() -> Matching {
        Matching::new(8, [(1, 6), (2, 8), (3, 4), (4, 2), (5, 5), (6, 1), (8, 7)]).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(3, [(1, 2), (1, 3)]).is_err());
        assert!(Matching::new(3, [(1, 2), (3, 2)]).is_err());
        assert!(Matching::new(3, [(4, 1)]).is_err());
        let tau = example_tau();
        assert_eq!(tau.domain().elems(), &[1, 2, 3, 4, 5, 6, 8]);
        assert_eq!(tau.codomain().elems(), &[1, 2, 4, 5, 6, 7, 8]);
        assert_eq!(p_value(&tau.domain(), &tau.codomain()).unwrap(), 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(2, 1).count(), 4);
        assert_eq!(enumerate_matchings(3, 3).count(), 6);
        assert_eq!(enumerate_matchings(5, 3).count(), 600);
        assert_eq!(
            enumerate_matchings(3, 0).collect::<Vec<_>>(),
            vec![Matching::new(3, []).unwrap()]
        );
        for n in 0..=5 {
            for k in 0..=n {
                let all: Vec<_> = enumerate_matchings(n, k).collect();
                let fact: usize = (1..=k).product();
                assert_eq!(all.len(), binom(n, k).pow(2) * fact);
                assert!(all.iter().all_unique());
            }
        }
    }

    #[test]
    fn sign_examples() {
        let tau = Matching::new(5, [(2, 3), (3, 5), (4, 1)]).unwrap();
        assert_eq!(crossings(&tau), 2);
        assert_eq!(sign(&tau), 1);
        assert_eq!(sign(&Matching::new(5, [(4, 2)]).unwrap()), 1);
        assert_eq!(
            sign(&Matching::new(3, [(1, 1), (2, 2), (3, 3)]).unwrap()),
            1
        );
        assert_eq!(sign(&Matching::new(2, [(1, 2), (2, 1)]).unwrap()), -1);
    }

    #[test]
    fn weight_examples() {
        // x_ij = 10 i + j makes every entry distinct and readable
        let mut x = ExactMatrix::zeros(8, 8);
        for i in 1..=8 {
            for j in 1..=8 {
                x.set(i, j, rational((10 * i + j) as i64)).unwrap();
            }
        }
        let expected = [16, 28, 34, 42, 55, 61, 87]
            .iter()
            .fold(rational(1), |acc, &v| acc * rational(v));
        assert_eq!(weight(&example_tau(), &x).unwrap(), expected);
        assert_eq!(
            weight(&Matching::new(8, []).unwrap(), &x).unwrap(),
            rational(1)
        );
        assert_eq!(
            weight(&Matching::new(8, [(3, 7)]).unwrap(), &x).unwrap(),
            rational(37)
        );
        assert!(weight(&example_tau(), &ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn minor_via_matchings_examples() {
        let t = t_matrix(3);
        let s12 = IndexSet::new(3, vec![1, 2]).unwrap();
        assert_eq!(minor_via_matchings(&t, &s12, &s12).unwrap(), rational(1));
        for seed in 0..3 {
            let x = random_matrix(4, seed, 9);
            for k in 1..=4 {
                for i in IndexSet::subsets(4, k) {
                    for j in IndexSet::subsets(4, k) {
                        assert_eq!(
                            minor_via_matchings(&x, &i, &j).unwrap(),
                            minor(&x, &i, &j).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn example_clusters() {
        let d = decompose_clusters(&example_tau());
        assert_eq!(d.clusters.len(), 3);
        let c1 = d
            .clusters
            .iter()
            .find(|c| c.edges.contains(&(2, 8)))
            .unwrap();
        assert_eq!(c1.edges, vec![(2, 8), (3, 4), (4, 2), (8, 7)]);
        assert_eq!(c1.kind, ClusterKind::Open { left: 3, right: 7 });
        assert_eq!(c1.separation, 6);
        let c2 = d
            .clusters
            .iter()
            .find(|c| c.edges.contains(&(1, 6)))
            .unwrap();
        assert_eq!(c2.edges, vec![(1, 6), (6, 1)]);
        assert_eq!(c2.kind, ClusterKind::Closed);
        let c3 = d
            .clusters
            .iter()
            .find(|c| c.edges.contains(&(5, 5)))
            .unwrap();
        assert_eq!(c3.edges, vec![(5, 5)]);
        assert_eq!(c3.kind, ClusterKind::Closed);
        assert_eq!(
            example_tau().label_multiset(),
            vec![1, 1, 2, 2, 3, 4, 4, 5, 5, 6, 6, 7, 8, 8]
        );
    }

    #[test]
    fn cluster_edge_cases() {
        let id = Matching::new(4, [(1, 1), (3, 3), (4, 4)]).unwrap();
        let d = decompose_clusters(&id);
        assert_eq!(d.clusters.len(), 3);
        assert!(d
            .clusters
            .iter()
            .all(|c| c.kind == ClusterKind::Closed && c.edges.len() == 1));

        let single = Matching::new(5, [(4, 2)]).unwrap();
        let d = decompose_clusters(&single);
        assert_eq!(d.clusters.len(), 1);
        assert_eq!(d.clusters[0].kind, ClusterKind::Open { left: 4, right: 2 });
    }

    #[test]
    fn separation_examples() {
        let tau = example_tau();
        let d = decompose_clusters(&tau);
        for c in &d.clusters {
            let expected = if c.is_open() { 6 } else { 0 };
            assert_eq!(endpoint_separation(&tau, c).unwrap(), expected);
        }
        let single = Matching::new(3, [(1, 2)]).unwrap();
        let c = &decompose_clusters(&single).clusters[0];
        assert_eq!(endpoint_separation(&single, c).unwrap(), 0);
        // cluster from a different matching
        assert!(endpoint_separation(&single, &d.clusters[0]).is_err());
    }

    #[test]
    fn flip_examples() {
        let tau = example_tau();
        let flipped = flip(&tau, 2, 8).unwrap();
        assert_eq!(
            flipped,
            Matching::new(8, [(1, 6), (8, 2), (4, 3), (2, 4), (5, 5), (6, 1), (7, 8)]).unwrap()
        );
        assert_eq!(flip(&flipped, 2, 8).unwrap(), tau);
        // 1↔6 lives in a closed cluster
        assert_eq!(flip(&tau, 1, 6).unwrap(), tau);
        // no edge between 1 and 2
        assert_eq!(flip(&tau, 1, 2).unwrap(), tau);
        assert!(flip(&tau, 8, 2).is_err());
        assert!(flip(&tau, 3, 3).is_err());
        assert!(flip(&tau, 3, 9).is_err());
    }

    #[test]
    fn flipped_weight_swaps_indices() {
        let mut x = ExactMatrix::zeros(8, 8);
        for i in 1..=8 {
            for j in 1..=8 {
                x.set(i, j, rational((10 * i + j) as i64)).unwrap();
            }
        }
        let expected = [16, 82, 43, 24, 55, 61, 78]
            .iter()
            .fold(rational(1), |acc, &v| acc * rational(v));
        assert_eq!(
            weight(&flip(&example_tau(), 2, 8).unwrap(), &x).unwrap(),
            expected
        );
    }

    #[test]
    fn orbit_examples() {
        let o = orbit(&example_tau());
        assert_eq!(o.members.len(), 2);
        assert_eq!(o.classification, OrbitClass::Interlacing);
        assert_eq!(classify_orbit(&o), OrbitClass::Interlacing);
        assert_eq!(o.representative, Some(example_tau()));

        let id = Matching::new(3, [(1, 1), (2, 2)]).unwrap();
        assert_eq!(orbit(&id).members, vec![id.clone()]);

        let single = Matching::new(3, [(1, 3)]).unwrap();
        let o = orbit(&single);
        assert_eq!(
            o.members,
            vec![single.clone(), Matching::new(3, [(3, 1)]).unwrap()]
        );
        assert_eq!(o.classification, OrbitClass::Interlacing);
        assert_eq!(classify_by_separation(&single), OrbitClass::Interlacing);

        let swap = Matching::new(2, [(1, 2), (2, 1)]).unwrap();
        let o = orbit(&swap);
        assert_eq!(o.members, vec![swap.clone()]);
        assert_eq!(o.classification, OrbitClass::Interlacing);
    }

    #[test]
    fn sign_law_examples() {
        let check = sign_flip_law_check(&example_tau(), 2, 8).unwrap();
        assert_eq!(
            check,
            SignLawCheck {
                holds: true,
                vacuous: false,
                separation: Some(6)
            }
        );
        assert_eq!(
            sign(&example_tau()),
            sign(&flip(&example_tau(), 2, 8).unwrap())
        );

        let single = Matching::new(2, [(1, 2)]).unwrap();
        let check = sign_flip_law_check(&single, 1, 2).unwrap();
        assert!(check.holds && !check.vacuous);
        assert_eq!(check.separation, Some(0));

        let tau = Matching::new(3, [(1, 2), (3, 1)]).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 3)] {
            assert!(sign_flip_law_check(&tau, i, j).unwrap().holds);
        }
        let vac = sign_flip_law_check(&example_tau(), 1, 6).unwrap();
        assert!(vac.holds && vac.vacuous);
    }

    #[test]
    fn canonical_involution_pairs_non_interlacing_orbits() {
        for n in 1..=4 {
            for k in 0..=n {
                for o in partition_orbits(n, k) {
                    if o.classification == OrbitClass::Interlacing {
                        for m in &o.members {
                            assert!(canonical_involution(m).is_err());
                        }
                        continue;
                    }
                    let mut paired = HashSet::new();
                    for m in &o.members {
                        let partner = canonical_involution(m).unwrap();
                        assert_ne!(&partner, m);
                        assert_eq!(sign(&partner), -sign(m));
                        assert_eq!(&canonical_involution(&partner).unwrap(), m);
                        assert!(o.members.contains(&partner));
                        paired.insert(m.clone());
                    }
                    assert_eq!(paired.len(), o.members.len());
                }
            }
        }
    }

    #[test]
    fn orbit_sum_examples() {
        for (n, seed) in [(3, 1), (4, 2)] {
            let x = random_symmetric(n, seed, 9);
            let r = orbit_sum_identity(&x, 2).unwrap();
            assert!(r.all_hold(), "{r:?}");
            assert_eq!(r.matchings, if n == 3 { 18 } else { 72 });
        }
        let x = ExactMatrix::from_ints(&[[2, 3], [3, 5]]);
        let r = orbit_sum_identity(&x, 2).unwrap();
        assert_eq!(r.matching_sum, rational(1));
        assert_eq!(r.matching_sum, sum_all_minors(&x, 2).unwrap());
        assert!(r.all_hold());

        let r = orbit_sum_identity(&x, 0).unwrap();
        assert_eq!((r.matchings, r.orbits), (1, 1));
        assert!(r.all_hold());

        let nonsym = ExactMatrix::from_ints(&[[2, 3], [4, 5]]);
        assert_eq!(orbit_sum_identity(&nonsym, 1), Err(Error::NotSymmetric));
    }
}
