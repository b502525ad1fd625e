//! 3-regular subgraphs of 4-regular graphs with one extra edge, via the
//! F_3 system Σ_{e ∋ v} x_e² = 0.

use crate::error::{precondition, Result};
use crate::guard::{sat_pow, Guards};
use crate::specgraph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct BergeSauer {
    /// Positions into `G.edges()`.
    pub edges: Vec<usize>,
    /// Vertices touched by the edge set; each has degree exactly 3 in it.
    pub vertices: Vec<usize>,
    /// "f3_scan" or "dfs".
    pub route: &'static str,
    /// Common zeros of the F_3 system (scan route only); divisible by 3.
    pub common_zeros: Option<u64>,
}

/// Loopless, |E| = 2|V| + 1, all degrees 4 except two of degree 5.
pub fn check_berge_precondition(g: &Graph) -> Result<()> {
    if g.has_loops() {
        return precondition("graph has a loop");
    }
    if g.m() != 2 * g.n() + 1 {
        return precondition(format!("|E| = {} but a 4-regular graph plus one edge has {}", g.m(), 2 * g.n() + 1));
    }
    let d = g.degrees();
    let fives = d.iter().filter(|&&x| x == 5).count();
    if fives != 2 || d.iter().any(|&x| x != 4 && x != 5) {
        return precondition(format!("degree sequence {d:?} is not 4-regular plus one edge"));
    }
    Ok(())
}

fn validate(g: &Graph, w: &[usize]) -> Option<Vec<usize>> {
    if w.is_empty() {
        return None;
    }
    let mut deg = vec![0usize; g.n()];
    for &e in w {
        let (u, v) = g.edges()[e];
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.iter().all(|&d| d == 0 || d == 3).then(|| (0..g.n()).filter(|&v| deg[v] == 3).collect())
}

pub fn berge_sauer_find(g: &Graph, guards: &Guards) -> Result<BergeSauer> {
    check_berge_precondition(g)?;
    let m = g.m() as u32;
    let (edges, route, common_zeros) = if sat_pow(3, m) <= guards.berge_f3_scan {
        let (w, zeros) = f3_scan(g);
        if zeros % 3 != 0 {
            return Err(crate::Error::TheoremViolation(format!("{zeros} common zeros, not divisible by 3")));
        }
        (w, "f3_scan", Some(zeros))
    } else {
        guards.check("berge_edges", guards.berge_edges, m as u128)?;
        (dfs(g), "dfs", None)
    };
    let edges = edges.ok_or_else(|| crate::Error::TheoremViolation("no 3-regular subgraph found".into()))?;
    let vertices = validate(g, &edges)
        .ok_or_else(|| crate::Error::TheoremViolation(format!("edge set {edges:?} is not 3-regular")))?;
    Ok(BergeSauer { edges, vertices, route, common_zeros })
}

/// Odometer over F_3^|E| (last edge fastest), tracking Σ x_e² per vertex.
/// Returns the support of the first nonzero common zero and the zero count.
fn f3_scan(g: &Graph) -> (Option<Vec<usize>>, u64) {
    let (n, m) = (g.n(), g.m());
    let ends = g.edges();
    let mut x = vec![0u8; m];
    let mut load = vec![0u8; n];
    let mut bad = 0usize; // vertices with nonzero load mod 3
    let mut zeros = 1u64; // the all-zero point
    let mut first = None;
    let bump = |load: &mut [u8], bad: &mut usize, v: usize, delta: u8| {
        let before = load[v] != 0;
        load[v] = (load[v] + delta) % 3;
        match (before, load[v] != 0) {
            (false, true) => *bad += 1,
            (true, false) => *bad -= 1,
            _ => {}
        }
    };
    loop {
        let mut i = m;
        loop {
            if i == 0 {
                return (first, zeros);
            }
            i -= 1;
            let (u, v) = ends[i];
            // x² changes 0→1 on 0→1, stays 1 on 1→2, and 1→0 on the 2→0 wrap.
            match x[i] {
                0 => {
                    x[i] = 1;
                    bump(&mut load, &mut bad, u, 1);
                    bump(&mut load, &mut bad, v, 1);
                    break;
                }
                1 => {
                    x[i] = 2;
                    break;
                }
                _ => {
                    x[i] = 0;
                    bump(&mut load, &mut bad, u, 2);
                    bump(&mut load, &mut bad, v, 2);
                }
            }
        }
        if bad == 0 {
            zeros += 1;
            if first.is_none() {
                first = Some((0..m).filter(|&e| x[e] != 0).collect());
            }
        }
    }
}

/// Include/exclude DFS in edge order; degrees capped at 3 and a vertex with
/// degree 1 or 2 must still be completable by later edges.
fn dfs(g: &Graph) -> Option<Vec<usize>> {
    let (n, m) = (g.n(), g.m());
    let ends = g.edges();
    // remaining[v][i] = edges at v among positions ≥ i
    let mut remaining = vec![vec![0usize; m + 1]; n];
    for i in (0..m).rev() {
        for v in 0..n {
            remaining[v][i] = remaining[v][i + 1];
        }
        let (u, v) = ends[i];
        remaining[u][i] += 1;
        remaining[v][i] += 1;
    }
    fn go(i: usize, ends: &[(usize, usize)], rem: &[Vec<usize>], deg: &mut [usize], w: &mut Vec<usize>) -> bool {
        if deg.iter().enumerate().any(|(v, &d)| (d == 1 || d == 2) && d + rem[v][i] < 3) {
            return false;
        }
        if i == ends.len() {
            return !w.is_empty() && deg.iter().all(|&d| d == 0 || d == 3);
        }
        let (u, v) = ends[i];
        if deg[u] < 3 && deg[v] < 3 {
            deg[u] += 1;
            deg[v] += 1;
            w.push(i);
            if go(i + 1, ends, rem, deg, w) {
                return true;
            }
            w.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        go(i + 1, ends, rem, deg, w)
    }
    let mut deg = vec![0; n];
    let mut w = Vec::new();
    go(0, ends, &remaining, &mut deg, &mut w).then_some(w)
}

/// Random loopless 4-regular multigraph on n ≥ 3 vertices (stub matching with
/// rejection) plus one extra edge between distinct vertices.
pub fn random_four_regular_plus_edge<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3, "need at least three vertices");
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v; 4]).collect();
        stubs.shuffle(rng);
        let mut edges: Vec<(usize, usize)> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let u = rng.gen_range(0..n);
        let v = (u + rng.gen_range(1..n)) % n;
        edges.push((u, v));
        return Graph::new(n, edges).expect("endpoints in range");
    }
}
