//! Independent oracles shared by the integration tests. Nothing here calls
//! into the algorithm it is used to check.
#![allow(dead_code)]

use algcomb::geomx::{ConvexCertificate, PointConfig};
use algcomb::setfam::FamilyKind;
use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::collections::BTreeMap;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn qs(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

// ------------------------------------------------------------------ graphs

/// Any monochromatic triangle in a 2-colouring of K_n.
pub fn has_mono_triangle(n: usize, blue: impl Fn(usize, usize) -> bool) -> bool {
    (0..n).tuple_combinations().any(|(a, b, c)| blue(a, b) == blue(a, c) && blue(a, c) == blue(b, c))
}

pub fn adjacency_masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

pub fn independence_number(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency_masks(n, edges);
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn max_cut(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u64..1 << n.saturating_sub(1))
        .map(|s| edges.iter().filter(|&&(u, v)| (s >> u & 1) != (s >> v & 1)).count())
        .max()
        .unwrap_or(0)
}

/// Proper colourings with colours 0..k for every k ≤ kmax, by backtracking.
pub fn colouring_counts(n: usize, edges: &[(usize, usize)], kmax: usize) -> Vec<u64> {
    let adj = adjacency_masks(n, edges);
    let looped = edges.iter().any(|&(u, v)| u == v);
    let mut counts = vec![0u64; kmax + 1];
    if looped {
        return counts;
    }
    let mut col = vec![0usize; n];
    fn go(v: usize, n: usize, kmax: usize, adj: &[u64], col: &mut [usize], top: usize, counts: &mut [u64]) {
        if v == n {
            for c in counts.iter_mut().skip(top) {
                *c += 1;
            }
            return;
        }
        for c in 0..kmax {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || col[u] != c) {
                col[v] = c;
                go(v + 1, n, kmax, adj, col, top.max(c + 1), counts);
            }
        }
    }
    go(0, n, kmax, &adj, &mut col, 0, &mut counts);
    counts
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

// ------------------------------------------------------------- polynomials

pub type Terms = BTreeMap<Vec<u32>, u64>;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn eval_terms(t: &Terms, x: &[u64], p: u64) -> u64 {
    t.iter().fold(0, |acc, (e, &c)| {
        (acc + e.iter().zip(x).fold(c % p, |m, (&k, &xi)| m * pow_mod(xi, k as u64, p) % p)) % p
    })
}

pub fn add_terms(a: &Terms, b: &Terms, p: u64) -> Terms {
    let mut out = a.clone();
    for (e, &c) in b {
        let v = (out.get(e).copied().unwrap_or(0) + c) % p;
        if v == 0 {
            out.remove(e);
        } else {
            out.insert(e.clone(), v);
        }
    }
    out
}

pub fn mul_terms(a: &Terms, b: &Terms, p: u64) -> Terms {
    let mut out = Terms::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = (out.get(&e).copied().unwrap_or(0) + ca * cb) % p;
            if v == 0 {
                out.remove(&e);
            } else {
                out.insert(e, v);
            }
        }
    }
    out
}

pub fn degree(t: &Terms) -> Option<u32> {
    t.keys().map(|e| e.iter().sum()).max()
}

/// Π_{s ∈ S}(x_var − s) in n variables.
pub fn grid_factor(p: u64, n: usize, var: usize, s: &[u64]) -> Terms {
    let mut acc: Terms = [(vec![0; n], 1)].into_iter().collect();
    for &a in s {
        let mut e = vec![0; n];
        e[var] = 1;
        let mut lin: Terms = [(e, 1)].into_iter().collect();
        if a % p != 0 {
            lin.insert(vec![0; n], (p - a % p) % p);
        }
        acc = mul_terms(&acc, &lin, p);
    }
    acc
}

pub fn random_terms(p: u64, n: usize, max_deg: u32, count: usize, rng: &mut impl Rng) -> Terms {
    let mut t = Terms::new();
    for _ in 0..count {
        let d = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        t = add_terms(&t, &[(e, rng.gen_range(1..p))].into_iter().collect(), p);
    }
    t
}

pub fn all_points(p: u64, n: usize) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n).map(|_| 0..p).multi_cartesian_product().collect()
}

// ---------------------------------------------------------------- geometry

pub fn random_config(rng: &mut impl Rng, d: usize, n: usize) -> PointConfig {
    let pts: Vec<Vec<BigRational>> =
        (0..n).map(|_| (0..d).map(|_| qs(rng.gen_range(-20..=20), rng.gen_range(1..=4))).collect()).collect();
    PointConfig::new(d, pts).unwrap()
}

/// Nonnegative weights summing to one whose combination is `target`.
pub fn certificate_ok(c: &ConvexCertificate, p: &PointConfig, target: &[BigRational]) -> bool {
    if c.indices.len() != c.weights.len() || c.indices.iter().any(|&i| i >= p.len()) {
        return false;
    }
    if c.weights.iter().any(|w| w.is_negative()) || c.weights.iter().sum::<BigRational>() != BigRational::one() {
        return false;
    }
    (0..p.dim()).all(|k| {
        c.indices.iter().zip(&c.weights).map(|(&i, w)| w * &p.point(i)[k]).sum::<BigRational>() == target[k]
    })
}

/// Rank by fraction-free elimination over the integers after clearing denominators.
pub fn rank_q(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |l, x| num_integer::lcm(l, x.denom().clone()));
            r.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let (a, b) = (m[rank][c].clone(), m[r][c].clone());
                for k in 0..cols {
                    let v = &m[r][k] * &a - &m[rank][k] * &b;
                    m[r][k] = v;
                }
                let g = m[r].iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
                if g > BigInt::one() {
                    m[r].iter_mut().for_each(|x| *x = &*x / &g);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Minimum over closed halfspaces with y on the boundary of the number of
/// points captured, for planar sets. The count only drops strictly inside the
/// arcs between critical normals, and a positive combination of two adjacent
/// critical normals lies strictly inside their arc.
pub fn planar_depth(y: &[BigRational], x: &PointConfig) -> usize {
    let diffs: Vec<[BigRational; 2]> =
        x.points().iter().map(|p| [&p[0] - &y[0], &p[1] - &y[1]]).collect();
    let mut dirs: Vec<[BigRational; 2]> = Vec::new();
    for d in &diffs {
        if d[0].is_zero() && d[1].is_zero() {
            continue;
        }
        dirs.push([-d[1].clone(), d[0].clone()]);
        dirs.push([d[1].clone(), -d[0].clone()]);
    }
    let count = |u: &[BigRational; 2]| diffs.iter().filter(|d| !(&u[0] * &d[0] + &u[1] * &d[1]).is_negative()).count();
    if dirs.is_empty() {
        return x.len();
    }
    let half = |u: &[BigRational; 2]| u[1].is_negative() || (u[1].is_zero() && u[0].is_negative());
    let cross = |a: &[BigRational; 2], b: &[BigRational; 2]| &a[0] * &b[1] - &a[1] * &b[0];
    dirs.sort_by(|a, b| half(a).cmp(&half(b)).then_with(|| cross(b, a).cmp(&BigRational::zero())));
    dirs.dedup_by(|a, b| half(a) == half(b) && cross(a, b).is_zero());
    let mut best = usize::MAX;
    for i in 0..dirs.len() {
        let (a, b) = (&dirs[i], &dirs[(i + 1) % dirs.len()]);
        let c = cross(a, b);
        let mid = if c.is_positive() {
            [&a[0] + &b[0], &a[1] + &b[1]]
        } else {
            // adjacent normals are opposite (or the only one): turn a by 90°
            [-a[1].clone(), a[0].clone()]
        };
        best = best.min(count(&mid));
    }
    best
}

// -------------------------------------------------------------- set families

/// Definition-literal validity check.
pub fn family_valid(sets: &[u64], kind: &FamilyKind) -> bool {
    let size = |s: u64| s.count_ones() as u64;
    let pairs = || sets.iter().tuple_combinations::<(_, _)>();
    let subfamilies = |weak: bool| {
        let k = sets.len();
        let fold = |mask: usize| {
            let chosen = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| sets[i]);
            (chosen.clone().fold(0, |a, s| a | s), chosen.fold(u64::MAX, |a, s| a & s))
        };
        for i in 1..1usize << k {
            for j in 1..1usize << k {
                if i & j == 0 && i < j {
                    let (ui, ii) = fold(i);
                    let (uj, ij) = fold(j);
                    if ui == uj && (!weak || ii == ij) {
                        return false;
                    }
                }
            }
        }
        true
    };
    match kind {
        FamilyKind::Oddtown => {
            sets.iter().all(|&s| size(s) % 2 == 1) && pairs().all(|(&a, &b)| size(a & b) % 2 == 0)
        }
        FamilyKind::Separated => sets.iter().all(|&s| s != 0) && subfamilies(false),
        FamilyKind::WeaklySeparated => subfamilies(true),
        FamilyKind::LambdaFischer { lambda } => pairs().all(|(&a, &b)| size(a & b) == *lambda),
        FamilyKind::LFischerModp { l, p } => {
            sets.iter().all(|&s| !l.contains(&(size(s) % p))) && pairs().all(|(&a, &b)| l.contains(&(size(a & b) % p)))
        }
        FamilyKind::LFischerInt { l } => pairs().all(|(&a, &b)| l.contains(&size(a & b))),
        FamilyKind::UniformIntersecting { lambda } => {
            sets.iter().all(|&s| size(s) == *lambda) && pairs().all(|(&a, &b)| a & b != 0)
        }
        FamilyKind::UniformLFischerInt { l, size: k } => {
            sets.iter().all(|&s| size(s) == *k) && pairs().all(|(&a, &b)| l.contains(&size(a & b)))
        }
        FamilyKind::UniformLFischerModp { l, p, size: k } => {
            sets.iter().all(|&s| size(s) == *k) && pairs().all(|(&a, &b)| l.contains(&(size(a & b) % p)))
        }
    }
}

pub fn all_kinds() -> Vec<FamilyKind> {
    vec![
        FamilyKind::Oddtown,
        FamilyKind::Separated,
        FamilyKind::WeaklySeparated,
        FamilyKind::LambdaFischer { lambda: 1 },
        FamilyKind::LambdaFischer { lambda: 2 },
        FamilyKind::LFischerModp { l: vec![0], p: 2 },
        FamilyKind::LFischerModp { l: vec![0, 1], p: 3 },
        FamilyKind::LFischerInt { l: vec![0, 1] },
        FamilyKind::LFischerInt { l: vec![1] },
        FamilyKind::UniformIntersecting { lambda: 2 },
        FamilyKind::UniformIntersecting { lambda: 3 },
        FamilyKind::UniformLFischerInt { l: vec![1], size: 2 },
        FamilyKind::UniformLFischerInt { l: vec![0, 1], size: 3 },
        FamilyKind::UniformLFischerModp { l: vec![0, 1], p: 3, size: 2 },
        FamilyKind::UniformLFischerModp { l: vec![0], p: 2, size: 3 },
    ]
}
