use crate::error::{invalid, Error, Result};
use crate::exactla::{binomial, rank_trace_bound, rational_to_string, RationalMatrix};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct JlProjection {
    pub d: usize,
    pub k: usize,
    pub seed: u64,
    pub projected: Vec<Vec<f64>>,
    /// max / min over pairs of ‖f(x) − f(y)‖ / ‖x − y‖ (pairs at distance 0 skipped).
    pub max_distortion: f64,
    pub min_distortion: f64,
}

/// x ↦ R x with R a k × d matrix of standard normal entries scaled by 1/√k;
/// k = d uses the identity.
pub fn jl_project(points: &[Vec<f64>], k: usize, seed: u64) -> Result<JlProjection> {
    let d = points.first().map_or(0, Vec::len);
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch("points have different dimensions".into()));
    }
    if k == 0 || k > d {
        return invalid(format!("target dimension k = {k} must lie in 1..={d}"));
    }
    let projected: Vec<Vec<f64>> = if k == d {
        points.to_vec()
    } else {
        let mut rng = crate::rng(seed);
        let scale = 1.0 / (k as f64).sqrt();
        let r: Vec<Vec<f64>> = (0..k).map(|_| (0..d).map(|_| rng.sample::<f64, _>(StandardNormal) * scale).collect()).collect();
        points.iter().map(|p| r.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect()).collect()
    };
    let dist = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
    let (mut max_distortion, mut min_distortion) = (f64::NEG_INFINITY, f64::INFINITY);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let before = dist(&points[i], &points[j]);
            if before == 0.0 {
                continue;
            }
            let ratio = dist(&projected[i], &projected[j]) / before;
            max_distortion = max_distortion.max(ratio);
            min_distortion = min_distortion.min(ratio);
        }
    }
    if max_distortion == f64::NEG_INFINITY {
        (max_distortion, min_distortion) = (1.0, 1.0);
    }
    Ok(JlProjection { d, k, seed, projected, max_distortion, min_distortion })
}

#[derive(Debug, Clone, Serialize)]
pub struct Jl1Case {
    pub rank: usize,
    /// n / (1 + (n−1)ε²), exact.
    pub bound: String,
    /// tr(A)² / tr(A²) ≤ rank as well.
    pub trace_bound_holds: bool,
    pub holds: bool,
}

/// rk A ≥ n / (1 + (n−1)ε²) for symmetric A, unit diagonal, |a_ij| ≤ ε.
pub fn jl1_check(a: &RationalMatrix, eps: &BigRational) -> Result<Jl1Case> {
    let n = a.rows();
    if !a.is_symmetric() {
        return invalid("JL_1 needs a symmetric matrix");
    }
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if (i == j && !x.is_one()) || (i != j && x.abs() > *eps) {
                return Err(Error::Precondition(format!("entry ({i},{j}) = {} breaks the JL_1 hypothesis", rational_to_string(x))));
            }
        }
    }
    let nq = BigRational::from_integer(n.into());
    let bound = &nq / (BigRational::one() + (&nq - BigRational::one()) * eps * eps);
    let rt = rank_trace_bound(a)?;
    let holds = BigRational::from_integer(rt.rank.into()) >= bound;
    Ok(Jl1Case { rank: rt.rank, bound: rational_to_string(&bound), trace_bound_holds: rt.holds, holds })
}

#[derive(Debug, Clone, Serialize)]
pub struct Jl2Case {
    pub k: u32,
    pub rank_a: usize,
    pub rank_b: usize,
    /// C(k + rk A − 1, k).
    pub bound: String,
    pub holds: bool,
}

/// rk(A^{∘k}) ≤ C(k + rk A − 1, k) for the entrywise k-th power.
pub fn jl2_check(a: &RationalMatrix, k: u32) -> Result<Jl2Case> {
    if k == 0 {
        return invalid("Hadamard power k must be positive");
    }
    let mut b = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            b.set(i, j, num_traits::pow(a.get(i, j).clone(), k as usize));
        }
    }
    let rank_a = a.rank();
    let rank_b = b.rank();
    let bound = if rank_a == 0 { BigUint::from(0u8) } else { binomial(k as u64 + rank_a as u64 - 1, k as u64) };
    let holds = BigUint::from(rank_b) <= bound;
    Ok(Jl2Case { k, rank_a, rank_b, bound: bound.to_string(), holds })
}

#[derive(Debug, Clone, Serialize)]
pub struct JlRankReport {
    pub n: usize,
    pub eps: String,
    pub seed: u64,
    pub trials: usize,
    pub jl1_bound: String,
    pub jl1_bound_f64: f64,
    pub jl1_min_rank: usize,
    pub jl1_holds: bool,
    /// (k, rk A, rk A^{∘k}, bound) for each JL_2 instance.
    pub jl2_cases: Vec<Jl2Case>,
    pub jl2_holds: bool,
}

/// Random instances with exact rational entries:
/// JL_1 — off-diagonal entries ε·j/8 with |j| < 8;
/// JL_2 — A = U Uᵀ with U an n × s integer matrix (s ∈ 1..=3), k ∈ {2, 3}.
pub fn jl_rank_checks(n: usize, eps: &BigRational, seed: u64, trials: usize) -> Result<JlRankReport> {
    if n == 0 || !eps.is_positive() || *eps >= BigRational::one() {
        return invalid("need n ≥ 1 and 0 < ε < 1");
    }
    let mut rng = crate::rng(seed);
    let eighth = BigRational::new(1.into(), 8.into());
    let mut jl1_min_rank = usize::MAX;
    let mut jl1_holds = true;
    let mut jl1_bound = String::new();
    for _ in 0..trials {
        let mut a = RationalMatrix::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                let x = eps * &eighth * BigRational::from_integer(rng.gen_range(-7i64..=7).into());
                a.set(i, j, x.clone());
                a.set(j, i, x);
            }
        }
        let case = jl1_check(&a, eps)?;
        jl1_min_rank = jl1_min_rank.min(case.rank);
        jl1_holds &= case.holds && case.trace_bound_holds;
        jl1_bound = case.bound;
    }
    let mut jl2_cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let s = rng.gen_range(1..=3usize);
        let u: Vec<Vec<i64>> = (0..n).map(|_| (0..s).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| (0..s).map(|t| u[i][t] * u[j][t]).sum()).collect()).collect();
        let k = rng.gen_range(2..=3u32);
        jl2_cases.push(jl2_check(&RationalMatrix::from_i64_rows(&rows)?, k)?);
    }
    let jl2_holds = jl2_cases.iter().all(|c| c.holds);
    let nq = BigRational::from_integer(n.into());
    let bound = &nq / (BigRational::one() + (&nq - BigRational::one()) * eps * eps);
    Ok(JlRankReport {
        n,
        eps: rational_to_string(eps),
        seed,
        trials,
        jl1_bound: if jl1_bound.is_empty() { rational_to_string(&bound) } else { jl1_bound },
        jl1_bound_f64: bound.to_f64().unwrap_or(f64::NAN),
        jl1_min_rank: if trials == 0 { n } else { jl1_min_rank },
        jl1_holds,
        jl2_cases,
        jl2_holds,
    })
}
