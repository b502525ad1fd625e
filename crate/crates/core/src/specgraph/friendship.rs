use super::{canonical_form, Graph};
use crate::error::Result;
use crate::guard::Guards;
use serde::Serialize;
use std::collections::BTreeMap;

/// Every pair of distinct vertices has exactly one common neighbour.
pub fn friendship_check(g: &Graph) -> bool {
    if !g.is_simple() {
        return false;
    }
    let adj = g.neighbour_sets();
    let n = g.n();
    (0..n).all(|u| {
        (u + 1..n).all(|v| adj[u].iter().zip(&adj[v]).map(|(a, b)| (a & b).count_ones()).sum::<u32>() == 1)
    })
}

/// k triangles sharing the hub 0; blade i is {0, 2i−1, 2i}.
pub fn windmill(k: usize) -> Graph {
    let mut e = Vec::new();
    for i in 1..=k {
        e.extend([(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    }
    Graph::new(2 * k + 1, e).expect("valid endpoints")
}

/// n = 2k + 1, a vertex adjacent to all others, and the rest a perfect matching.
pub fn is_windmill(g: &Graph) -> bool {
    let n = g.n();
    if n % 2 == 0 || !g.is_simple() || g.m() != 3 * (n - 1) / 2 {
        return false;
    }
    let d = g.degrees();
    let Some(hub) = (0..n).find(|&v| d[v] == n - 1) else { return false };
    (0..n).all(|v| v == hub || d[v] == 2)
}

#[derive(Debug, Clone, Serialize)]
pub struct FriendshipScan {
    pub nmax: usize,
    /// (n, labelled friendship graphs on [n]).
    pub labelled_counts: Vec<(usize, u64)>,
    /// One representative edge list per isomorphism class (n ≤ 8).
    pub classes: Vec<(usize, Vec<(usize, usize)>)>,
    pub non_windmills: u64,
    pub all_windmills: bool,
}

/// All labelled graphs on n ≤ nmax vertices.
pub fn friendship_brute_scan(nmax: usize, guards: &Guards) -> Result<FriendshipScan> {
    guards.check("friendship_n", guards.friendship_n.min(8), nmax as u128)?;
    let mut labelled_counts = Vec::new();
    let mut classes: BTreeMap<(usize, u64), Vec<(usize, usize)>> = BTreeMap::new();
    let mut non_windmills = 0;
    for n in 1..=nmax {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut count = 0;
        for code in 0u64..1 << pairs.len() {
            let mut adj = vec![0u64; n];
            for (b, &(u, v)) in pairs.iter().enumerate() {
                if code >> b & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let friendly = (0..n).all(|u| (u + 1..n).all(|v| (adj[u] & adj[v]).count_ones() == 1));
            if !friendly {
                continue;
            }
            count += 1;
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|&(b, _)| code >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::new(n, edges.clone())?;
            if !is_windmill(&g) {
                non_windmills += 1;
            }
            classes.entry((n, canonical_form(&g)?)).or_insert(edges);
        }
        labelled_counts.push((n, count));
    }
    Ok(FriendshipScan {
        nmax,
        labelled_counts,
        classes: classes.into_iter().map(|((n, _), e)| (n, e)).collect(),
        non_windmills,
        all_windmills: non_windmills == 0,
    })
}
