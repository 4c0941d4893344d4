//! A planar layered network whose path matrix is `T`, and brute-force
//! counting of vertex-disjoint path families on it.
//!
//! `T` factors as a lower bidiagonal matrix of ones times the lower
//! triangular matrix of ones, and the latter is a product of elementary
//! matrices `I + e_{r+1,r}`. Each factor becomes one layer of edges between
//! two columns of `n` vertices. A vertex is a pair `(boundary, row)`, where
//! boundary `0` holds the sources and boundary `layers.len()` the sinks.
//!
//! The disjoint-family counter never touches a determinant: it enumerates
//! paths and backtracks over vertex occupancy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rational, ExactMatrix, IndexSet};

/// Directed edge `from → to` between consecutive boundaries (1-based rows).
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayeredNetwork {
    n: usize,
    layers: Vec<Vec<Edge>>,
}

/// One path, listed as the row it occupies at each boundary.
pub type Path = Vec<usize>;

impl LayeredNetwork {
    pub fn new(n: usize, layers: Vec<Vec<Edge>>) -> Result<Self> {
        for layer in &layers {
            if let Some(&(a, b)) = layer
                .iter()
                .find(|&&(a, b)| a == 0 || b == 0 || a > n || b > n)
            {
                let index = if a == 0 || a > n { a } else { b };
                return Err(Error::OutOfBounds { index, bound: n });
            }
        }
        let net = LayeredNetwork { n, layers };
        if !net.is_planar() {
            return Err(Error::InvalidArgument(
                "layer edges cross transversally".into(),
            ));
        }
        Ok(net)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layers(&self) -> &[Vec<Edge>] {
        &self.layers
    }

    /// No layer contains edges `a → b`, `c → d` with `a < c` and `b > d`.
    pub fn is_planar(&self) -> bool {
        self.layers.iter().all(|layer| {
            layer
                .iter()
                .all(|&(a, b)| layer.iter().all(|&(c, d)| !(a < c && b > d)))
        })
    }

    fn successors(&self) -> Vec<Vec<Vec<usize>>> {
        self.layers
            .iter()
            .map(|layer| {
                let mut out = vec![Vec::new(); self.n + 1];
                for &(a, b) in layer {
                    out[a].push(b);
                }
                for succ in &mut out {
                    succ.sort_unstable();
                }
                out
            })
            .collect()
    }
}

/// Network realizing `T` for the given `n`: a bidiagonal layer followed by
/// `n - 1` elementary layers.
pub fn build_network(n: usize) -> LayeredNetwork {
    let straight = || (1..=n).map(|i| (i, i));
    let mut layers = Vec::with_capacity(n);
    layers.push(straight().chain((2..=n).map(|i| (i, i - 1))).collect());
    for t in 1..n {
        let row = n - t + 1;
        layers.push(straight().chain(std::iter::once((row, row - 1))).collect());
    }
    let net = LayeredNetwork { n, layers };
    debug_assert!(net.is_planar());
    net
}

/// Entry `(a, b)` counts directed paths from source `a` to sink `b`.
pub fn path_matrix(net: &LayeredNetwork) -> ExactMatrix {
    let n = net.n;
    let mut acc = ExactMatrix::identity(n);
    for layer in &net.layers {
        let mut adj = ExactMatrix::zeros(n, n);
        for &(a, b) in layer {
            let cur = adj.entry(a, b).expect("edges validated").clone();
            adj.set(a, b, cur + rational(1)).expect("edges validated");
        }
        acc = acc.mul(&adj).expect("square factors");
    }
    acc
}

/// Every family of pairwise vertex-disjoint paths joining `sources` to
/// `sinks`. Each family lists one path per source, in source order.
pub fn disjoint_families(
    net: &LayeredNetwork,
    sources: &IndexSet,
    sinks: &IndexSet,
) -> Result<Vec<Vec<Path>>> {
    if sources.len() != sinks.len() {
        return Err(Error::Dimension(format!(
            "{} sources but {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    for set in [sources, sinks] {
        if let Some(&e) = set.elems().iter().find(|&&e| e > net.n) {
            return Err(Error::OutOfBounds {
                index: e,
                bound: net.n,
            });
        }
    }
    let mut search = FamilySearch {
        succ: net.successors(),
        n: net.n,
        depth: net.layers.len(),
        occupied: vec![false; (net.layers.len() + 1) * (net.n + 1)],
        sinks: sinks.elems().to_vec(),
        sources: sources.elems().to_vec(),
        current: Vec::new(),
        found: Vec::new(),
    };
    search.place_source(0);
    Ok(search.found)
}

/// Number of vertex-disjoint path families from `sources` to `sinks`.
pub fn count_disjoint_families(
    net: &LayeredNetwork,
    sources: &IndexSet,
    sinks: &IndexSet,
) -> Result<u64> {
    Ok(disjoint_families(net, sources, sinks)?.len() as u64)
}

struct FamilySearch {
    succ: Vec<Vec<Vec<usize>>>,
    n: usize,
    depth: usize,
    occupied: Vec<bool>,
    sources: Vec<usize>,
    sinks: Vec<usize>,
    current: Vec<Path>,
    found: Vec<Vec<Path>>,
}

impl FamilySearch {
    fn slot(&self, boundary: usize, row: usize) -> usize {
        boundary * (self.n + 1) + row
    }

    fn place_source(&mut self, idx: usize) {
        if idx == self.sources.len() {
            self.found.push(self.current.clone());
            return;
        }
        let start = self.sources[idx];
        let mut path = Vec::with_capacity(self.depth + 1);
        self.extend(idx, start, 0, &mut path);
    }

    fn extend(&mut self, idx: usize, row: usize, boundary: usize, path: &mut Path) {
        let slot = self.slot(boundary, row);
        if self.occupied[slot] {
            return;
        }
        self.occupied[slot] = true;
        path.push(row);

        if boundary == self.depth {
            if self.sinks.binary_search(&row).is_ok() {
                self.current.push(path.clone());
                self.place_source(idx + 1);
                self.current.pop();
            }
        } else {
            let next: Vec<usize> = self.succ[boundary][row].clone();
            for to in next {
                self.extend(idx, to, boundary + 1, path);
            }
        }

        path.pop();
        self.occupied[slot] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::t_matrix;

    fn set(n: usize, e: &[usize]) -> IndexSet {
        IndexSet::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn network_shape() {
        let net = build_network(1);
        assert_eq!(net.layers(), &[vec![(1, 1)]]);
        let net = build_network(4);
        assert_eq!(net.layers().len(), 4);
        assert_eq!(net.layers()[1].last(), Some(&(4, 3)));
        assert_eq!(net.layers()[3].last(), Some(&(2, 1)));
        assert!(net.is_planar());
    }

    #[test]
    fn path_matrix_reproduces_t() {
        assert_eq!(
            path_matrix(&build_network(1)),
            ExactMatrix::from_ints(&[[1]])
        );
        assert_eq!(
            path_matrix(&build_network(3)),
            ExactMatrix::from_ints(&[[1, 0, 0], [2, 1, 0], [2, 2, 1]])
        );
        for n in 1..=10 {
            assert_eq!(path_matrix(&build_network(n)), t_matrix(n), "n={n}");
        }
    }

    #[test]
    fn path_matrix_simple_layers() {
        let ident = LayeredNetwork::new(3, vec![vec![(1, 1), (2, 2), (3, 3)]; 2]).unwrap();
        assert_eq!(path_matrix(&ident), ExactMatrix::identity(3));
        let one = LayeredNetwork::new(2, vec![vec![(1, 1), (2, 2), (2, 1)]]).unwrap();
        assert_eq!(path_matrix(&one), ExactMatrix::from_ints(&[[1, 0], [1, 1]]));
    }

    #[test]
    fn rejects_crossing_layer() {
        let err = LayeredNetwork::new(2, vec![vec![(1, 2), (2, 1)]]);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
        assert!(LayeredNetwork::new(2, vec![vec![(1, 3)]]).is_err());
    }

    #[test]
    fn disjoint_family_examples() {
        let net = build_network(4);
        assert_eq!(
            count_disjoint_families(&net, &set(4, &[2, 4]), &set(4, &[1, 3])).unwrap(),
            4
        );
        assert_eq!(
            count_disjoint_families(&net, &set(4, &[1]), &set(4, &[2])).unwrap(),
            0
        );
        let full = IndexSet::full(4);
        let families = disjoint_families(&net, &full, &full).unwrap();
        assert_eq!(families.len(), 1);
        assert!(families[0]
            .iter()
            .enumerate()
            .all(|(r, p)| p.iter().all(|&row| row == r + 1)));
        assert!(count_disjoint_families(&net, &set(4, &[1]), &full).is_err());
    }

    #[test]
    fn families_preserve_order() {
        let net = build_network(5);
        for k in 1..=5 {
            for j in IndexSet::subsets(5, k) {
                for i in IndexSet::subsets(5, k) {
                    for fam in disjoint_families(&net, &j, &i).unwrap() {
                        let ends: Vec<usize> = fam.iter().map(|p| *p.last().unwrap()).collect();
                        assert_eq!(ends, i.elems());
                    }
                }
            }
        }
    }
}
