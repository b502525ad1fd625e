use super::Graph;
use crate::error::{invalid, Result};
use itertools::Itertools;

const CANONICAL_MAX: usize = 8;

/// Minimum upper-triangle adjacency bitstring (pairs row-major, first pair
/// most significant) over all relabellings. Simple graphs with n ≤ 8 only.
pub fn canonical_form(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return invalid(format!("canonical forms are computed for n ≤ {CANONICAL_MAX}"));
    }
    if !g.is_simple() {
        return invalid("canonical forms are defined for simple graphs");
    }
    let adj = g.neighbour_masks();
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut best = u64::MAX;
    for perm in (0..n).permutations(n) {
        let mut code = 0u64;
        for &(i, j) in &pairs {
            code = code << 1 | (adj[perm[i]] >> perm[j] & 1);
        }
        best = best.min(code);
    }
    Ok(if n == 0 { 0 } else { best })
}

/// A bijection φ with u ~ v in `g` iff φ(u) ~ φ(v) in `h` (simple graphs).
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() || !g.is_simple() || !h.is_simple() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    let (deg_g, deg_h) = (dg.clone(), dh.clone());
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let (ag, ah) = (g.neighbour_sets(), h.neighbour_sets());
    let adj = |a: &[Vec<u64>], u: usize, v: usize| a[u][v / 64] >> (v % 64) & 1 == 1;
    let n = g.n();
    // Highest degree first so adjacency constraints bite early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg_g[v]));
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        k: usize,
        order: &[usize],
        phi: &mut [usize],
        used: &mut [bool],
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let u = order[k];
        for w in 0..phi.len() {
            if !used[w] && ok(u, w, phi) {
                phi[u] = w;
                used[w] = true;
                if go(k + 1, order, phi, used, ok) {
                    return true;
                }
                used[w] = false;
                phi[u] = usize::MAX;
            }
        }
        false
    }
    let ok = |u: usize, w: usize, phi: &[usize]| {
        deg_g[u] == deg_h[w]
            && (0..n).all(|x| phi[x] == usize::MAX || adj(&ag, u, x) == adj(&ah, w, phi[x]))
    };
    go(0, &order, &mut phi, &mut used, &ok).then_some(phi)
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
