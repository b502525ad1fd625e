use super::RationalMatrix;
use crate::error::{invalid, Error, Result};
use rand::Rng;
use serde::Serialize;

/// Absolute tolerance for comparing spectra and grouping multiplicities.
pub const SPECTRUM_TOL: f64 = 1e-6;

const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymSpectrum {
    pub n: usize,
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
}

impl SymSpectrum {
    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Distinct values (within `tol`, chained) with their multiplicities, descending.
    pub fn multiplicities(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize, f64)> = Vec::new();
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((_, k, last)) if (*last - x).abs() <= tol => {
                    *k += 1;
                    *last = x;
                }
                _ => out.push((x, 1, x)),
            }
        }
        out.into_iter().map(|(v, k, _)| (v, k)).collect()
    }

    /// Multiset equality with `other` within `tol` after sorting both.
    pub fn matches(&self, other: &[f64], tol: f64) -> bool {
        let mut b = other.to_vec();
        b.sort_by(|x, y| y.total_cmp(x));
        b.len() == self.eigenvalues.len()
            && self.eigenvalues.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
    }

    /// Smallest |λ − x| over the spectrum.
    pub fn distance_to(&self, x: f64) -> f64 {
        self.eigenvalues.iter().map(|l| (l - x).abs()).fold(f64::INFINITY, f64::min)
    }

    pub fn multiplicity_of(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|l| (*l - x).abs() <= tol).count()
    }
}

#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    /// `vectors[i]` is a unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
    /// max_i ‖A v_i − λ_i v_i‖.
    pub residual: f64,
}

fn check_square(n: usize, a: &[f64]) -> Result<()> {
    if a.len() != n * n {
        return Err(Error::DimensionMismatch(format!("{} entries for an {n}x{n} matrix", a.len())));
    }
    Ok(())
}

/// Cyclic Jacobi on a dense symmetric matrix.
pub fn sym_eigen_f64(n: usize, a: &[f64], tol: f64) -> Result<SymEigen> {
    check_square(n, a)?;
    for i in 0..n {
        for j in 0..i {
            if (a[i * n + j] - a[j * n + i]).abs() > tol {
                return invalid(format!("matrix is not symmetric at ({i},{j})"));
            }
        }
    }
    let mut m: Vec<f64> = a.to_vec();
    // symmetrise away sub-tolerance asymmetry
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (m[i * n + j] + m[j * n + i]);
            m[i * n + j] = v;
            m[j * n + i] = v;
        }
    }
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i * n + j] * m[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q * n + q] - m[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k * n + p], m[k * n + q]);
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p * n + k], m[q * n + k]);
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| m[y * n + y].total_cmp(&m[x * n + x]));
    let values: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors: Vec<Vec<f64>> =
        order.iter().map(|&c| (0..n).map(|r| v[r * n + c]).collect()).collect();
    let residual = values
        .iter()
        .zip(&vectors)
        .map(|(&l, x)| {
            (0..n)
                .map(|i| {
                    let ax: f64 = (0..n).map(|j| a[i * n + j] * x[j]).sum();
                    (ax - l * x[i]).powi(2)
                })
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    Ok(SymEigen { values, vectors, sweeps, residual })
}

pub fn sym_eigenvalues_f64(n: usize, a: &[f64], tol: f64) -> Result<SymSpectrum> {
    let e = sym_eigen_f64(n, a, tol)?;
    Ok(SymSpectrum { n, eigenvalues: e.values })
}

pub fn sym_eigenvalues(m: &RationalMatrix, tol: f64) -> Result<SymSpectrum> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch("eigenvalues of a non-square matrix".into()));
    }
    if !m.is_symmetric() {
        return invalid("matrix is not symmetric");
    }
    sym_eigenvalues_f64(m.rows(), &m.to_f64(), tol)
}

fn principal(n: usize, a: &[f64], keep: &[usize]) -> Vec<f64> {
    let k = keep.len();
    let mut b = vec![0.0; k * k];
    for (i, &r) in keep.iter().enumerate() {
        for (j, &c) in keep.iter().enumerate() {
            b[i * k + j] = a[r * n + c];
        }
    }
    b
}

/// λ_j ≥ μ_j ≥ λ_{j+r} for the principal submatrix on `keep`.
pub fn interlacing_check(n: usize, a: &[f64], keep: &[usize]) -> Result<bool> {
    check_square(n, a)?;
    if keep.is_empty() {
        return invalid("interlacing needs a nonempty index set");
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != keep.len() || sorted.last().is_some_and(|&i| i >= n) {
        return invalid("index set must be distinct indices below n");
    }
    let lam = sym_eigenvalues_f64(n, a, SPECTRUM_TOL)?.eigenvalues;
    let k = sorted.len();
    let mu = sym_eigenvalues_f64(k, &principal(n, a, &sorted), SPECTRUM_TOL)?.eigenvalues;
    let r = n - k;
    Ok((0..k).all(|j| lam[j] >= mu[j] - SPECTRUM_TOL && mu[j] >= lam[j + r] - SPECTRUM_TOL))
}

#[derive(Debug, Clone, Serialize)]
pub struct RayleighReport {
    pub j: usize,
    pub samples: usize,
    pub lambda_j: f64,
    /// Largest min-Rayleigh-quotient seen over random j-dimensional subspaces.
    pub best_random: f64,
    /// Min Rayleigh quotient over the span of the top-j eigenvectors.
    pub eigen_span: f64,
    pub holds: bool,
}

fn orthonormalize(mut vs: Vec<Vec<f64>>) -> Option<Vec<Vec<f64>>> {
    for i in 0..vs.len() {
        for k in 0..i {
            let d: f64 = vs[i].iter().zip(&vs[k]).map(|(x, y)| x * y).sum();
            let prev = vs[k].clone();
            vs[i].iter_mut().zip(&prev).for_each(|(x, y)| *x -= d * y);
        }
        let norm = vs[i].iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-9 {
            return None;
        }
        vs[i].iter_mut().for_each(|x| *x /= norm);
    }
    Some(vs)
}

/// Smallest eigenvalue of Qᵀ A Q, i.e. the minimum Rayleigh quotient on span(Q).
fn min_rayleigh(n: usize, a: &[f64], basis: &[Vec<f64>]) -> Result<f64> {
    let j = basis.len();
    let av: Vec<Vec<f64>> = basis
        .iter()
        .map(|x| (0..n).map(|r| (0..n).map(|c| a[r * n + c] * x[c]).sum()).collect())
        .collect();
    let mut g = vec![0.0; j * j];
    for s in 0..j {
        for t in 0..j {
            g[s * j + t] = basis[s].iter().zip(&av[t]).map(|(x, y)| x * y).sum();
        }
    }
    Ok(sym_eigenvalues_f64(j, &g, 1e-6)?.min().unwrap_or(f64::NAN))
}

/// Spot-check of the min-max characterisation: on every j-dimensional
/// subspace the minimum Rayleigh quotient is at most λ_j, with equality on
/// the span of the top-j eigenvectors.
pub fn rayleigh_minmax_check<R: Rng>(
    n: usize,
    a: &[f64],
    j: usize,
    samples: usize,
    rng: &mut R,
) -> Result<RayleighReport> {
    if j == 0 || j > n {
        return invalid(format!("subspace dimension {j} outside 1..={n}"));
    }
    let eig = sym_eigen_f64(n, a, SPECTRUM_TOL)?;
    let lambda_j = eig.values[j - 1];
    let eigen_span = min_rayleigh(n, a, &eig.vectors[..j])?;
    let mut best_random = f64::NEG_INFINITY;
    let mut taken = 0;
    while taken < samples {
        let raw: Vec<Vec<f64>> =
            (0..j).map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
        let Some(basis) = orthonormalize(raw) else { continue };
        best_random = best_random.max(min_rayleigh(n, a, &basis)?);
        taken += 1;
    }
    Ok(RayleighReport {
        j,
        samples,
        lambda_j,
        best_random,
        eigen_span,
        holds: best_random <= lambda_j + SPECTRUM_TOL && (eigen_span - lambda_j).abs() <= SPECTRUM_TOL,
    })
}
