use super::Graph;
use crate::error::{invalid, Result};
use crate::guard::Guards;
use serde::Serialize;
use std::collections::HashMap;

/// Integer polynomial in one variable, coefficients ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticPolynomial {
    pub coefficients: Vec<i64>,
}

impl ChromaticPolynomial {
    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    pub fn eval(&self, k: i64) -> i128 {
        self.coefficients.iter().rev().fold(0i128, |acc, &c| acc * k as i128 + c as i128)
    }

    fn add_assign(&mut self, other: &Self, sign: i64) {
        if self.coefficients.len() < other.coefficients.len() {
            self.coefficients.resize(other.coefficients.len(), 0);
        }
        for (a, b) in self.coefficients.iter_mut().zip(&other.coefficients) {
            *a += sign * b;
        }
        while self.coefficients.len() > 1 && self.coefficients.last() == Some(&0) {
            self.coefficients.pop();
        }
    }
}

impl std::fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            let mag = c.unsigned_abs();
            let body = match (mag, i) {
                (1, 0) => "1".to_string(),
                (1, _) => mono,
                (_, 0) => mag.to_string(),
                _ => format!("{mag}{mono}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            parts.push((sign, body));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        for (k, (sign, body)) in parts.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                _ => write!(f, " {sign} {body}")?,
            }
        }
        Ok(())
    }
}

/// Simple-graph adjacency masks with vertex `v` deleted and higher labels shifted down.
fn remove_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(u, _)| u != v)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

struct Dc {
    memo: HashMap<Vec<u64>, ChromaticPolynomial>,
}

impl Dc {
    fn solve(&mut self, adj: Vec<u64>) -> ChromaticPolynomial {
        let n = adj.len();
        // An edge whose endpoint has the largest degree tends to shrink the graph fastest.
        let pick = (0..n)
            .filter(|&u| adj[u] != 0)
            .max_by_key(|&u| (adj[u].count_ones(), std::cmp::Reverse(u)));
        let Some(u) = pick else {
            let mut c = vec![0; n + 1];
            c[n] = 1;
            return ChromaticPolynomial { coefficients: c };
        };
        if let Some(p) = self.memo.get(&adj) {
            return p.clone();
        }
        let v = adj[u].trailing_zeros() as usize;
        let mut deleted = adj.clone();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        // Contract: merge v into u; parallels collapse in the mask, and the
        // contracted edge itself disappears.
        let mut merged = deleted.clone();
        let nv = merged[v];
        merged[u] |= nv;
        for w in 0..n {
            if nv >> w & 1 == 1 {
                merged[w] |= 1 << u;
            }
        }
        let contracted = remove_vertex(&merged, v);
        let mut out = self.solve(deleted);
        out.add_assign(&self.solve(contracted), -1);
        self.memo.insert(adj, out.clone());
        out
    }
}

/// Deletion–contraction with memoisation; loops give the zero polynomial and
/// parallel edges count once.
pub fn chromatic_polynomial(g: &Graph, guards: &Guards) -> Result<ChromaticPolynomial> {
    guards.check("chromatic_size", guards.chromatic_size, (g.n() + g.m()) as u128)?;
    if g.n() > 64 {
        return invalid("chromatic polynomial limited to 64 vertices");
    }
    if g.has_loops() {
        return Ok(ChromaticPolynomial { coefficients: vec![0] });
    }
    let mut dc = Dc { memo: HashMap::new() };
    Ok(dc.solve(g.neighbour_masks()))
}

/// Smallest k ≥ 0 with χ_G(k) ≠ 0; `None` for graphs with loops.
pub fn chromatic_number(g: &Graph, guards: &Guards) -> Result<Option<usize>> {
    let p = chromatic_polynomial(g, guards)?;
    if p.is_zero() {
        return Ok(None);
    }
    Ok((0..=g.n()).find(|&k| p.eval(k as i64) != 0))
}

/// Count proper colourings [n] → [k] by enumerating all k^n maps.
pub fn count_colourings_brute(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    if g.has_loops() {
        return 0;
    }
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut c = vec![0usize; n];
    let mut count = 0;
    loop {
        if g.edges().iter().all(|&(u, v)| c[u] != c[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            c[i] += 1;
            if c[i] < k {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GreedyReport {
    pub colouring: Vec<usize>,
    pub colours_used: usize,
    pub max_degree: usize,
    pub holds: bool,
}

/// First-fit colouring in vertex order; uses at most Δ + 1 colours.
pub fn greedy_coloring_bound(g: &Graph) -> Result<GreedyReport> {
    if !g.is_simple() {
        return invalid("greedy colouring needs a simple graph");
    }
    let adj = g.neighbour_sets();
    let mut colour: Vec<usize> = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let used: Vec<usize> = (0..v).filter(|&u| adj[v][u / 64] >> (u % 64) & 1 == 1).map(|u| colour[u]).collect();
        colour.push((0..).find(|c| !used.contains(c)).expect("unbounded"));
    }
    let colours_used = colour.iter().max().map_or(0, |&c| c + 1);
    let max_degree = g.max_degree();
    Ok(GreedyReport { colouring: colour, colours_used, max_degree, holds: colours_used <= max_degree + 1 })
}
