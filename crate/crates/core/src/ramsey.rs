//! Two-colourings of complete graphs: Ramsey checks, explicit constructions,
//! the R(3,3) exhaustion and the random-colouring sampler.
//!
//! Convention: an (m, n)-Ramsey colouring has no red K_m and no blue K_n.
//! Bit 1 means blue; pairs (i < j) are stored in row-major order.

use crate::error::{invalid, Error, Result};
use crate::exactla::{binomial, binomial_u128, is_prime};
use crate::guard::Guards;
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoColoring {
    n: usize,
    blue: Vec<bool>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl TwoColoring {
    pub fn new(n: usize, blue: Vec<bool>) -> Result<Self> {
        let pairs = n * n.saturating_sub(1) / 2;
        if blue.len() != pairs {
            return invalid(format!("K_{n} has {pairs} edges, got {}", blue.len()));
        }
        Ok(TwoColoring { n, blue })
    }

    /// Colour each pair by `f(i, j)` (i < j); `true` = blue.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        TwoColoring { n, blue: (0..n).tuple_combinations().map(|(i, j)| f(i, j)).collect() }
    }

    /// Parse the `0`/`1` pair string (1 = blue).
    pub fn from_bitstring(n: usize, bits: &str) -> Result<Self> {
        let blue = bits
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => invalid(format!("unexpected character {c:?} in colouring bitstring")),
            })
            .collect::<Result<_>>()?;
        Self::new(n, blue)
    }

    pub fn to_bitstring(&self) -> String {
        self.blue.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colour(&self, i: usize, j: usize) -> Colour {
        if self.blue[pair_index(self.n, i, j)] {
            Colour::Blue
        } else {
            Colour::Red
        }
    }

    pub fn swapped(&self) -> Self {
        TwoColoring { n: self.n, blue: self.blue.iter().map(|b| !b).collect() }
    }

    /// Adjacency bitsets of the colour class.
    fn class_graph(&self, c: Colour) -> Vec<Vec<u64>> {
        let words = self.n.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; words]; self.n];
        for (k, (i, j)) in (0..self.n).tuple_combinations().enumerate() {
            if self.blue[k] == (c == Colour::Blue) {
                adj[i][j / 64] |= 1 << (j % 64);
                adj[j][i / 64] |= 1 << (i % 64);
            }
        }
        adj
    }
}

impl Serialize for TwoColoring {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("TwoColoring", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("bits", &self.to_bitstring())?;
        st.end()
    }
}

/// First k-clique (lexicographically smallest) in the graph with bitset adjacency `adj`.
fn find_clique(adj: &[Vec<u64>], k: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let words = n.div_ceil(64).max(1);
    let mut all = vec![0u64; words];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    fn count(s: &[u64]) -> usize {
        s.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn go(cand: &[u64], cur: &mut Vec<usize>, k: usize, adj: &[Vec<u64>]) -> bool {
        if cur.len() == k {
            return true;
        }
        if cur.len() + count(cand) < k {
            return false;
        }
        let mut rest = cand.to_vec();
        for (w, &word) in cand.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let v = w * 64 + b;
                rest[w] &= !(1 << b);
                if cur.len() + 1 + count(&rest) < k {
                    return false;
                }
                let next: Vec<u64> = rest.iter().zip(&adj[v]).map(|(a, b)| a & b).collect();
                cur.push(v);
                if go(&next, cur, k, adj) {
                    return true;
                }
                cur.pop();
            }
        }
        false
    }
    let mut cur = Vec::with_capacity(k);
    go(&all, &mut cur, k, adj).then_some(cur)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonoClique {
    pub colour: Colour,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RamseyCheck {
    pub n: usize,
    pub red_clique: usize,
    pub blue_clique: usize,
    pub valid: bool,
    pub witness: Option<MonoClique>,
}

fn ramsey_unguarded(c: &TwoColoring, m: usize, n: usize) -> Option<MonoClique> {
    if let Some(v) = find_clique(&c.class_graph(Colour::Red), m) {
        return Some(MonoClique { colour: Colour::Red, vertices: v });
    }
    find_clique(&c.class_graph(Colour::Blue), n).map(|v| MonoClique { colour: Colour::Blue, vertices: v })
}

/// No red K_m and no blue K_n; otherwise a monochromatic clique (red searched first).
pub fn is_ramsey_coloring(c: &TwoColoring, m: usize, n: usize, guards: &Guards) -> Result<RamseyCheck> {
    let k = m.max(n) as u64;
    guards.check("clique_subsets", guards.clique_subsets, binomial_u128(c.n as u64, k))?;
    let witness = ramsey_unguarded(c, m, n);
    Ok(RamseyCheck { n: c.n, red_clique: m, blue_clique: n, valid: witness.is_none(), witness })
}

/// K_5 with a red pentagon and a blue pentagram.
pub fn pentagon_colouring() -> TwoColoring {
    TwoColoring::from_fn(5, |i, j| !matches!((j - i) % 5, 1 | 4))
}

#[derive(Debug, Clone, Serialize)]
pub struct R33Report {
    pub k5_witness: TwoColoring,
    pub k5_valid: bool,
    pub k6_colourings: u64,
    pub k6_ramsey: u64,
    pub k6_all_fail: bool,
    pub r33: Option<u64>,
}

/// A (3,3)-Ramsey K_5 and the exhaustion of all 2^15 colourings of K_6.
pub fn verify_r33() -> R33Report {
    let k5 = pentagon_colouring();
    let k5_valid = ramsey_unguarded(&k5, 3, 3).is_none();
    let triangles: Vec<[usize; 3]> = (0..6)
        .tuple_combinations()
        .map(|(a, b, c)| [pair_index(6, a, b), pair_index(6, a, c), pair_index(6, b, c)])
        .collect();
    let k6_ramsey = (0u64..1 << 15)
        .filter(|&code| {
            triangles.iter().all(|t| {
                let s = t.iter().map(|&e| code >> e & 1).sum::<u64>();
                s != 0 && s != 3
            })
        })
        .count() as u64;
    let k6_all_fail = k6_ramsey == 0;
    R33Report {
        k5_witness: k5,
        k5_valid,
        k6_colourings: 1 << 15,
        k6_ramsey,
        k6_all_fail,
        r33: (k5_valid && k6_all_fail).then_some(6),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// n − 1 red K_{n−1} blocks joined by blue edges.
    Naive { n: usize },
    /// 3-subsets of [n−1]; blue when the intersection is odd.
    Nagy { n: usize },
    /// (p²−1)-subsets of [n]; blue when |X ∩ Y| ≢ −1 (mod p).
    FranklWilson { p: u64, n: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct BuiltColoring {
    pub construction: Construction,
    pub coloring: TwoColoring,
    /// The construction has no monochromatic clique of this size.
    pub avoids: usize,
    /// Vertex labels (1-indexed subsets) for the set-system constructions.
    pub labels: Option<Vec<Vec<usize>>>,
}

/// k-subsets of [m] in colex order.
fn colex_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut s: Vec<Vec<usize>> = (1..=m).combinations(k).collect();
    s.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    s
}

fn set_system(subsets: Vec<Vec<usize>>, blue: impl Fn(usize) -> bool) -> (TwoColoring, Vec<Vec<usize>>) {
    let masks: Vec<u64> = subsets.iter().map(|s| s.iter().fold(0, |a, &x| a | 1 << x)).collect();
    let c = TwoColoring::from_fn(masks.len(), |i, j| blue((masks[i] & masks[j]).count_ones() as usize));
    (c, subsets)
}

pub fn construct(kind: Construction, guards: &Guards) -> Result<BuiltColoring> {
    let size = |n: u128| guards.check("ramsey_vertices", guards.ramsey_vertices, n);
    let (coloring, avoids, labels) = match kind {
        Construction::Naive { n } => {
            if n < 2 {
                return invalid("naive construction needs n ≥ 2");
            }
            let b = n - 1;
            size((b * b) as u128)?;
            (TwoColoring::from_fn(b * b, |i, j| i / b != j / b), n, None)
        }
        Construction::Nagy { n } => {
            if n < 4 || n > 63 {
                return invalid("Nagy construction needs 4 ≤ n ≤ 63");
            }
            size(binomial_u128(n as u64 - 1, 3))?;
            let (c, l) = set_system(colex_subsets(n - 1, 3), |k| k % 2 == 1);
            (c, n, Some(l))
        }
        Construction::FranklWilson { p, n } => {
            if !is_prime(p) {
                return Err(Error::NonPrime(p));
            }
            let k = (p * p - 1) as usize;
            if n < k || n > 63 {
                return invalid(format!("Frankl–Wilson construction needs p² − 1 ≤ n ≤ 63, got n = {n}"));
            }
            size(binomial_u128(n as u64, k as u64))?;
            let (c, l) = set_system(colex_subsets(n, k), |s| s as u64 % p != p - 1);
            (c, binomial_u128(n as u64, p - 1) as usize + 1, Some(l))
        }
    };
    Ok(BuiltColoring { construction: kind, coloring, avoids, labels })
}

#[derive(Debug, Clone, Serialize)]
pub struct SamplerReport {
    pub n: usize,
    /// ⌊2^(n/2)⌋ vertices.
    pub vertices: usize,
    pub trials: u64,
    pub seed: u64,
    pub ramsey: u64,
    pub fraction: f64,
    /// 1 − 2·C(N, n)·2^(−C(n,2)), exact.
    pub bound: String,
    pub bound_f64: f64,
}

/// 1 − 2·C(N, n)·2^(−C(n,2)) as an exact rational.
pub fn sampler_bound(big_n: u64, n: u64) -> BigRational {
    let num = BigInt::from(binomial(big_n, n)) * 2;
    let den = BigInt::one() << (n * n.saturating_sub(1) / 2);
    BigRational::one() - BigRational::new(num, den)
}

/// Colour K_N uniformly at random `trials` times and count (n, n)-Ramsey colourings.
pub fn probabilistic_lower_sample(n: usize, trials: u64, seed: u64, guards: &Guards) -> Result<SamplerReport> {
    guards.check("sampler_n", guards.sampler_n, n as u128)?;
    if n < 1 {
        return invalid("clique size must be positive");
    }
    let vertices = (2f64.powf(n as f64 / 2.0) + 1e-9).floor() as usize;
    let mut rng = crate::rng(seed);
    let pairs = vertices * vertices.saturating_sub(1) / 2;
    let mut ramsey = 0;
    for _ in 0..trials {
        let c = TwoColoring { n: vertices, blue: (0..pairs).map(|_| rng.gen::<bool>()).collect() };
        if ramsey_unguarded(&c, n, n).is_none() {
            ramsey += 1;
        }
    }
    let b = sampler_bound(vertices as u64, n as u64);
    Ok(SamplerReport {
        n,
        vertices,
        trials,
        seed,
        ramsey,
        fraction: if trials == 0 { 0.0 } else { ramsey as f64 / trials as f64 },
        bound: b.to_string(),
        bound_f64: b.to_f64().unwrap_or(f64::NAN),
    })
}

/// Upper bound on R(m, n) from R(m, n) ≤ R(m, n−1) + R(m−1, n) with
/// R(1, k) = 1 and R(2, k) = k.
pub fn ramsey_recurrence_bound(m: u32, n: u32) -> Result<u128> {
    if m == 0 || n == 0 {
        return invalid("Ramsey arguments must be positive");
    }
    if m + n > 120 {
        return invalid("arguments too large for a 128-bit bound");
    }
    fn rec(m: u32, n: u32, memo: &mut HashMap<(u32, u32), u128>) -> u128 {
        let (a, b) = (m.min(n), m.max(n));
        if a == 1 {
            return 1;
        }
        if a == 2 {
            return b as u128;
        }
        if let Some(&v) = memo.get(&(a, b)) {
            return v;
        }
        let v = rec(a, b - 1, memo) + rec(a - 1, b, memo);
        memo.insert((a, b), v);
        v
    }
    let v = rec(m, n, &mut HashMap::new());
    if v > 1u128 << (m + n) {
        return Err(Error::TheoremViolation(format!("recurrence bound {v} exceeds 2^{}", m + n)));
    }
    Ok(v)
}

/// Known values R(m, n) for 1 ≤ m, n ≤ 6, used as reference data.
pub const KNOWN_RAMSEY: &[(u32, u32, u128)] = &[
    (1, 1, 1),
    (1, 2, 1),
    (1, 3, 1),
    (1, 4, 1),
    (1, 5, 1),
    (1, 6, 1),
    (2, 2, 2),
    (2, 3, 3),
    (2, 4, 4),
    (2, 5, 5),
    (2, 6, 6),
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (4, 4, 18),
    (4, 5, 25),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_is_valid_and_k6_fails() {
        let r = verify_r33();
        assert!(r.k5_valid && r.k6_all_fail);
        assert_eq!(r.k6_colourings, 32768);
        assert_eq!(r.r33, Some(6));
        // pairs 01 02 03 04 12 13 14 23 24 34; pentagon edges are red
        assert_eq!(r.k5_witness.to_bitstring(), "0110011010");
    }

    #[test]
    fn checker_examples() {
        let g = Guards::default();
        let red = TwoColoring::from_fn(3, |_, _| false);
        let r = is_ramsey_coloring(&red, 3, 3, &g).unwrap();
        assert!(!r.valid);
        assert_eq!(r.witness.unwrap(), MonoClique { colour: Colour::Red, vertices: vec![0, 1, 2] });
        let k2 = TwoColoring::from_fn(2, |_, _| true);
        assert!(is_ramsey_coloring(&k2, 3, 3, &g).unwrap().valid);
        assert!(TwoColoring::from_bitstring(3, "01").is_err());
        assert_eq!(TwoColoring::from_bitstring(3, "011").unwrap().colour(1, 2), Colour::Blue);
    }

    #[test]
    fn constructions() {
        let g = Guards::default();
        let b = construct(Construction::Naive { n: 3 }, &g).unwrap();
        assert_eq!(b.coloring.to_bitstring(), "011110");
        let b = construct(Construction::Nagy { n: 6 }, &g).unwrap();
        assert_eq!(b.coloring.n(), 10);
        assert!(is_ramsey_coloring(&b.coloring, 6, 6, &g).unwrap().valid);
        let b = construct(Construction::FranklWilson { p: 2, n: 5 }, &g).unwrap();
        assert_eq!((b.coloring.n(), b.avoids), (10, 6));
        assert!(is_ramsey_coloring(&b.coloring, 6, 6, &g).unwrap().valid);
        assert!(construct(Construction::FranklWilson { p: 4, n: 20 }, &g).is_err());
    }

    #[test]
    fn colex_order() {
        assert_eq!(colex_subsets(4, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]);
    }

    #[test]
    fn sampler_examples() {
        let g = Guards::default();
        let r = probabilistic_lower_sample(4, 1000, 0, &g).unwrap();
        // 1 − 2·C(4,4)·2^(−6) = 1 − 1/32
        assert_eq!((r.vertices, r.bound.as_str()), (4, "31/32"));
        assert_eq!(probabilistic_lower_sample(2, 50, 3, &g).unwrap().ramsey, 0);
        assert_eq!(probabilistic_lower_sample(6, 200, 0, &g).unwrap().vertices, 8);
    }

    #[test]
    fn recurrence_against_known_values() {
        assert_eq!(ramsey_recurrence_bound(3, 3).unwrap(), 6);
        assert_eq!(ramsey_recurrence_bound(3, 4).unwrap(), 10);
        assert_eq!(ramsey_recurrence_bound(2, 9).unwrap(), 9);
        for &(m, n, r) in KNOWN_RAMSEY {
            assert!(ramsey_recurrence_bound(m, n).unwrap() >= r);
        }
    }
}
