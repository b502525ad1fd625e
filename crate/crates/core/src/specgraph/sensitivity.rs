use super::Graph;
use crate::error::{invalid, Error, Result};
use crate::exactla::{sym_eigenvalues_f64, SPECTRUM_TOL};
use crate::guard::Guards;
use itertools::Itertools;
use serde::Serialize;

/// Q_n on {0,1}^n (vertices as bitmasks), v ~ v ⊕ e_i.
pub fn hypercube(n: u32) -> Graph {
    let size = 1usize << n;
    let mut e = Vec::new();
    for v in 0..size {
        for i in 0..n {
            let w = v ^ (1 << i);
            if v < w {
                e.push((v, w));
            }
        }
    }
    Graph::new(size, e).expect("valid endpoints")
}

/// Symmetric {−1, 0, 1} matrix with zero diagonal, stored sparsely by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedAdjacency {
    n: usize,
    rows: Vec<Vec<(usize, i8)>>,
}

impl SignedAdjacency {
    pub fn from_dense(n: usize, a: &[i8]) -> Result<Self> {
        if a.len() != n * n {
            return Err(Error::DimensionMismatch(format!("{} entries for an {n}x{n} matrix", a.len())));
        }
        let mut rows = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let x = a[i * n + j];
                if !(-1..=1).contains(&x) {
                    return invalid(format!("entry {x} at ({i},{j}) is not in {{-1, 0, 1}}"));
                }
                if x != a[j * n + i] {
                    return invalid(format!("not symmetric at ({i},{j})"));
                }
                if i == j && x != 0 {
                    return invalid(format!("nonzero diagonal at {i}"));
                }
                if x != 0 {
                    rows[i].push((j, x));
                }
            }
        }
        Ok(SignedAdjacency { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i].iter().find(|&&(c, _)| c == j).map_or(0, |&(_, x)| x)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, x) in r {
                a[i * self.n + j] = x as f64;
            }
        }
        a
    }

    /// The simple graph on the nonzero pattern.
    pub fn support(&self) -> Graph {
        let e = (0..self.n).flat_map(|i| self.rows[i].iter().filter(move |&&(j, _)| i < j).map(move |&(j, _)| (i, j)));
        Graph::new(self.n, e.collect()).expect("valid endpoints")
    }

    /// Principal submatrix on `keep` (in the given order), as dense f64.
    fn principal_f64(&self, keep: &[usize]) -> Vec<f64> {
        let k = keep.len();
        let mut b = vec![0.0; k * k];
        for (a, &i) in keep.iter().enumerate() {
            for (c, &j) in keep.iter().enumerate() {
                b[a * k + c] = self.get(i, j) as f64;
            }
        }
        b
    }

    /// B² == c·Id, in exact integer arithmetic.
    pub fn square_is_scalar(&self, c: i64) -> bool {
        (0..self.n).all(|i| {
            let mut row = vec![0i64; self.n];
            for &(k, x) in &self.rows[i] {
                for &(j, y) in &self.rows[k] {
                    row[j] += x as i64 * y as i64;
                }
            }
            row.iter().enumerate().all(|(j, &v)| v == if i == j { c } else { 0 })
        })
    }
}

/// B_1 = [[0,1],[1,0]], B_n = [[B_{n−1}, I], [I, −B_{n−1}]]; the top bit is the
/// block index, so the edge v — v ⊕ e_i has sign (−1)^(popcount of v above bit i).
pub fn signed_hypercube(n: u32) -> SignedAdjacency {
    let size = 1usize << n;
    let rows = (0..size)
        .map(|v| {
            let mut r: Vec<(usize, i8)> = (0..n)
                .map(|i| {
                    let sign = if (v >> (i + 1)).count_ones() % 2 == 0 { 1 } else { -1 };
                    (v ^ (1 << i), sign)
                })
                .collect();
            r.sort_unstable();
            r
        })
        .collect();
    SignedAdjacency { n: size, rows }
}

#[derive(Debug, Clone, Serialize)]
pub struct SignedBound {
    pub lambda_max: f64,
    pub max_degree: usize,
    pub holds: bool,
}

/// Δ(support) ≥ λ_max(B).
pub fn signed_maxdeg_bound(b: &SignedAdjacency, guards: &Guards) -> Result<SignedBound> {
    guards.check("eigen_order", guards.eigen_order, b.n as u128)?;
    let lambda_max = sym_eigenvalues_f64(b.n, &b.to_f64(), 0.0)?.max().unwrap_or(0.0);
    let max_degree = b.support().max_degree();
    let holds = max_degree as f64 >= lambda_max - SPECTRUM_TOL;
    if !holds {
        return Err(Error::TheoremViolation(format!("Δ = {max_degree} < λ_max = {lambda_max}")));
    }
    Ok(SignedBound { lambda_max, max_degree, holds })
}

#[derive(Debug, Clone, Serialize)]
pub struct SensitivityReport {
    pub n: u32,
    /// B_n² = n·Id exactly.
    pub square_identity: bool,
    /// Even-weight vertices: 2^(n−1) of them, pairwise non-adjacent.
    pub even_weight_independent: bool,
    /// Subsets W with |W| = 2^(n−1) + 1 scanned (0 when the scan is skipped).
    pub subsets_scanned: u64,
    /// min over scanned W of Δ(Q_n[W]).
    pub min_max_degree: Option<usize>,
    /// min over scanned W of λ_max(B_n restricted to W).
    pub min_lambda: Option<f64>,
    pub sqrt_n: f64,
    pub holds: bool,
}

pub fn sensitivity_check(n: u32, guards: &Guards) -> Result<SensitivityReport> {
    if n == 0 {
        return invalid("hypercube dimension must be positive");
    }
    guards.check("sensitivity_matrix", guards.sensitivity_matrix.min(20), n as u128)?;
    let b = signed_hypercube(n);
    let square_identity = b.square_is_scalar(n as i64);
    let size = 1usize << n;
    let even: Vec<usize> = (0..size).filter(|v| v.count_ones() % 2 == 0).collect();
    let even_weight_independent =
        even.len() == size / 2 && even.iter().all(|&v| b.rows[v].iter().all(|&(w, _)| w.count_ones() % 2 == 1));
    let sqrt_n = (n as f64).sqrt();

    let (mut subsets_scanned, mut min_max_degree, mut min_lambda) = (0u64, None, None);
    if n as u128 <= guards.sensitivity_scan {
        let cube = hypercube(n).neighbour_sets();
        let (mut best_deg, mut best_lambda) = (usize::MAX, f64::INFINITY);
        for w in (0..size).combinations(size / 2 + 1) {
            subsets_scanned += 1;
            let mut mask = vec![0u64; cube[0].len()];
            for &v in &w {
                mask[v / 64] |= 1 << (v % 64);
            }
            let deg = w
                .iter()
                .map(|&v| cube[v].iter().zip(&mask).map(|(a, m)| (a & m).count_ones() as usize).sum::<usize>())
                .max()
                .unwrap_or(0);
            best_deg = best_deg.min(deg);
            let lam = sym_eigenvalues_f64(w.len(), &b.principal_f64(&w), 0.0)?.max().unwrap_or(0.0);
            if lam > deg as f64 + SPECTRUM_TOL {
                return Err(Error::TheoremViolation(format!("Δ(W) = {deg} < λ_max = {lam} for W = {w:?}")));
            }
            best_lambda = best_lambda.min(lam);
        }
        min_max_degree = Some(best_deg);
        min_lambda = Some(best_lambda);
    }
    let holds = square_identity
        && even_weight_independent
        && min_max_degree.map_or(true, |d| d as f64 >= sqrt_n)
        && min_lambda.map_or(true, |l| l >= sqrt_n - SPECTRUM_TOL);
    Ok(SensitivityReport {
        n,
        square_identity,
        even_weight_independent,
        subsets_scanned,
        min_max_degree,
        min_lambda,
        sqrt_n,
        holds,
    })
}
