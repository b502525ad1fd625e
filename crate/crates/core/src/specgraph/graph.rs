use crate::error::{invalid, Result};
use crate::exactla::{IntMatrix, RationalMatrix};

/// Undirected multigraph on vertices 0..n. Loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Endpoints stored as (min, max), in insertion order.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return invalid(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
        }
        let edges = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        Ok(Graph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let edges = match n {
            0 | 1 => Vec::new(),
            2 => vec![(0, 1)],
            _ => (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect(),
        };
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        Graph { n, edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    /// K_{1,k}: centre 0, leaves 1..=k.
    pub fn star(k: usize) -> Self {
        Graph { n: k + 1, edges: (1..=k).map(|i| (0, i)).collect() }
    }

    /// Circulant graph on Z_n joining i and i ± s for each s in `steps`.
    pub fn circulant(n: usize, steps: &[usize]) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for &s in steps {
                let j = (i + s) % n;
                edges.push((i.min(j), i.max(j)));
            }
        }
        Graph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut e = self.edges.clone();
        e.sort_unstable();
        !self.has_loops() && e.windows(2).all(|w| w[0] != w[1])
    }

    /// Degrees; a loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&d0) => d.iter().all(|&x| x == d0).then_some(d0),
        }
    }

    /// Simple-graph view as neighbourhood bitsets (loops and multiplicity dropped).
    pub fn neighbour_sets(&self) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u][v / 64] |= 1 << (v % 64);
                adj[v][u / 64] |= 1 << (u % 64);
            }
        }
        adj
    }

    /// Neighbourhoods as single words; only for n ≤ 64.
    pub fn neighbour_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n ≤ 64");
        self.neighbour_sets().into_iter().map(|w| w[0]).collect()
    }

    /// a_ij = number of edges between i and j (a loop counts once on the diagonal).
    pub fn adjacency(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a.set(u, v, a.get(u, v) + 1);
            if u != v {
                a.set(v, u, a.get(v, u) + 1);
            }
        }
        a
    }

    pub fn adjacency_rational(&self) -> RationalMatrix {
        RationalMatrix::from_i64_rows(&self.adjacency().to_rows())
            .unwrap_or_else(|_| RationalMatrix::zeros(self.n, self.n))
    }

    /// |V| × |E| vertex–edge incidence matrix.
    pub fn incidence(&self) -> IntMatrix {
        let mut b = IntMatrix::zeros(self.n, self.m());
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            b.set(u, e, 1);
            b.set(v, e, 1);
        }
        b
    }

    pub fn complement(&self) -> Self {
        let adj = self.neighbour_sets();
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if adj[u][v / 64] >> (v % 64) & 1 == 0 {
                    edges.push((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Vertices are the edges of `self`; two are adjacent when they share an endpoint.
    pub fn line_graph(&self) -> Self {
        let m = self.m();
        let mut edges = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                let (x, y) = (self.edges[a], self.edges[b]);
                if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                    edges.push((a, b));
                }
            }
        }
        Graph { n: m, edges }
    }

    /// Induced subgraph on `keep`, relabelled 0..keep.len() in the given order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
            .collect();
        Graph { n: keep.len(), edges }
    }

    /// Same graph with one more edge appended.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut e = self.edges.clone();
        e.push((u, v));
        Graph::new(self.n, e)
    }
}
