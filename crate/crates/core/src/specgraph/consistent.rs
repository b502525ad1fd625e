use crate::error::{invalid, Result};
use crate::guard::Guards;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Edge colouring of K_n; `colours` lists pairs (i < j) in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistentColoring {
    pub n: usize,
    pub colours: Vec<u32>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl ConsistentColoring {
    pub fn new(n: usize, colours: Vec<u32>) -> Result<Self> {
        if colours.len() != n * n.saturating_sub(1) / 2 {
            return invalid(format!("K_{n} has {} edges, got {} colours", n * n.saturating_sub(1) / 2, colours.len()));
        }
        Ok(ConsistentColoring { n, colours })
    }

    pub fn colour(&self, i: usize, j: usize) -> u32 {
        self.colours[pair_index(self.n, i, j)]
    }

    pub fn colour_count(&self) -> usize {
        self.colours.iter().unique().count()
    }
}

fn proper(c: &ConsistentColoring) -> bool {
    (0..c.n).all(|v| (0..c.n).filter(|&u| u != v).map(|u| c.colour(v, u)).all_unique())
}

/// Six distinct colours, or three colours each on a perfect matching of the K_4.
fn quad_ok(col: impl Fn(usize, usize) -> u32, q: [usize; 4]) -> bool {
    let [a, b, c, d] = q;
    let six = [col(a, b), col(c, d), col(a, c), col(b, d), col(a, d), col(b, c)];
    if six.iter().all_unique() {
        return true;
    }
    six[0] == six[1] && six[2] == six[3] && six[4] == six[5] && [six[0], six[2], six[4]].iter().all_unique()
}

pub fn is_consistent(c: &ConsistentColoring) -> bool {
    proper(c)
        && (0..c.n).combinations(4).all(|q| quad_ok(|i, j| c.colour(i, j), [q[0], q[1], q[2], q[3]]))
}

/// K_{2^t} on F_2^t with v — w coloured v + w (2^t − 1 colours).
pub fn consistent_coloring(t: u32, guards: &Guards) -> Result<ConsistentColoring> {
    guards.check("consistent_t", guards.consistent_t.min(12), t as u128)?;
    let n = 1usize << t;
    let colours = (0..n).tuple_combinations().map(|(i, j)| (i ^ j) as u32).collect();
    ConsistentColoring::new(n, colours)
}

/// Exhaustive search for a consistent colouring of K_n with at most k colours (n ≤ 8).
pub fn consistent_coloring_search(n: usize, k: u32) -> Result<Option<ConsistentColoring>> {
    if n > 8 {
        return invalid("consistent colouring search is limited to n ≤ 8");
    }
    if n < 2 {
        return Ok(Some(ConsistentColoring { n, colours: Vec::new() }));
    }
    if (k as usize) < n - 1 {
        // vertex 0 alone needs n − 1 colours
        return Ok(None);
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut col = vec![u32::MAX; pairs.len()];
    // Rename colours so the edges at vertex 0 get 0, 1, …, n − 2.
    for j in 1..n {
        col[pair_index(n, 0, j)] = j as u32 - 1;
    }
    fn go(idx: usize, n: usize, k: u32, pairs: &[(usize, usize)], col: &mut [u32]) -> bool {
        if idx == pairs.len() {
            return true;
        }
        let (c, d) = pairs[idx];
        if c == 0 {
            return go(idx + 1, n, k, pairs, col);
        }
        for x in 0..k {
            let clash = (0..n).any(|u| {
                (u != c && u != d)
                    && ((col[pair_index(n, c, u)] == x) || (col[pair_index(n, d, u)] == x))
            });
            if clash {
                continue;
            }
            col[idx] = x;
            let ok = (0..c).tuple_combinations().all(|(a, b)| {
                quad_ok(|i, j| col[pair_index(n, i, j)], [a, b, c, d])
            });
            if ok && go(idx + 1, n, k, pairs, col) {
                return true;
            }
            col[idx] = u32::MAX;
        }
        false
    }
    Ok(go(0, n, k, &pairs, &mut col).then(|| ConsistentColoring { n, colours: col }))
}
