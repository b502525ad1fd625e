use super::{grlex, Exponents, MultiPoly};
use crate::error::{Error, Result};
use crate::exactla::{binomial, mul_mod, require_prime, FpMatrix};
use crate::guard::{sat_pow, Guards};
use num_bigint::BigUint;
use serde::Serialize;

/// Precomputed power tables for evaluating one polynomial at many points.
pub struct Evaluator {
    p: u64,
    terms: Vec<(Exponents, u64)>,
    /// `pows[i][x * stride_i + e]` = x^e mod p.
    pows: Vec<Vec<u64>>,
    strides: Vec<usize>,
}

impl Evaluator {
    pub fn new(f: &MultiPoly) -> Self {
        let (p, n) = (f.modulus(), f.nvars());
        let mut pows = Vec::with_capacity(n);
        let mut strides = Vec::with_capacity(n);
        for i in 0..n {
            let top = f.degree_in(i).unwrap_or(0) as usize;
            let stride = top + 1;
            let mut t = vec![0u64; p as usize * stride];
            for x in 0..p as usize {
                let mut acc = 1 % p;
                for e in 0..stride {
                    t[x * stride + e] = acc;
                    acc = mul_mod(acc, x as u64, p);
                }
            }
            pows.push(t);
            strides.push(stride);
        }
        let terms = f.terms_iter().map(|(e, &c)| (e.clone(), c)).collect();
        Evaluator { p, terms, pows, strides }
    }

    pub fn eval(&self, x: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut m = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = mul_mod(m, self.pows[i][x[i] as usize * self.strides[i] + k as usize], p);
                }
            }
            acc = (acc + m) % p;
        }
        acc
    }
}

/// Visit every point of F_p^n in lexicographic order (last coordinate fastest).
pub fn for_each_point(p: u64, n: usize, mut visit: impl FnMut(&[u64])) {
    let mut x = vec![0u64; n];
    loop {
        visit(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < p {
                break;
            }
            x[i] = 0;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootCount {
    pub count: u128,
    pub points: u128,
    pub degree: Option<u32>,
    /// d·p^(n−1) for nonzero f.
    pub bound: Option<u128>,
    /// Nonzero polynomial that vanishes at every point of F_p^n.
    pub vanishes_identically: bool,
}

/// Number of zeros of f in F_p^n; a nonzero f of degree d has at most d·p^(n−1).
pub fn count_roots_brute(f: &MultiPoly, guards: &Guards) -> Result<RootCount> {
    let (p, n) = (f.modulus(), f.nvars());
    let points = sat_pow(p as u128, n as u32);
    guards.check("field_points", guards.field_points, points)?;
    let ev = Evaluator::new(f);
    let mut count = 0u128;
    for_each_point(p, n, |x| {
        if ev.eval(x) == 0 {
            count += 1;
        }
    });
    let degree = f.degree();
    let bound = if f.is_zero() || n == 0 {
        None
    } else {
        degree.map(|d| d as u128 * sat_pow(p as u128, n as u32 - 1))
    };
    if let Some(b) = bound {
        if count > b {
            return Err(Error::TheoremViolation(format!(
                "{count} zeros exceed d·p^(n-1) = {b} for {f}"
            )));
        }
    }
    Ok(RootCount { count, points, degree, bound, vanishes_identically: !f.is_zero() && count == points })
}

/// Number of monomials in n variables of total degree ≤ d: C(d+n, n).
pub fn monomial_count(d: u64, n: u64) -> BigUint {
    binomial(d + n, n)
}

/// Exponent vectors of total degree ≤ d in ascending graded-lex order.
pub fn enumerate_monomials(d: u32, n: usize) -> Vec<Exponents> {
    fn rec(i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; n], &mut out);
    out.sort_by(|a, b| grlex(a, b));
    out
}

/// A nonzero polynomial of degree ≤ `max_degree` vanishing on every point,
/// or `None` when the evaluation map on that space is injective.
pub fn vanishing_poly(points: &super::PointSetFq, max_degree: u32) -> Result<Option<MultiPoly>> {
    let (p, n) = (points.modulus(), points.dim());
    let monos = enumerate_monomials(max_degree, n);
    let rows: Vec<Vec<i64>> = points
        .points()
        .iter()
        .map(|x| {
            monos
                .iter()
                .map(|e| MultiPoly::monomial(p, n, e.clone(), 1).and_then(|m| m.eval(x)).map(|v| v as i64))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<_>>()?;
    let kernel = if rows.is_empty() {
        // no constraints: every coefficient vector works; take the constant 1
        let mut v = vec![0u64; monos.len()];
        v[0] = 1;
        vec![v]
    } else {
        FpMatrix::from_i64_rows(p, &rows)?.nullspace()
    };
    let Some(v) = kernel.into_iter().next() else {
        return Ok(None);
    };
    let terms = monos.into_iter().zip(v).map(|(e, c)| (e, c as i64)).collect();
    MultiPoly::from_terms(p, n, terms).map(Some)
}

#[derive(Debug, Clone, Serialize)]
pub struct CwReport {
    pub p: u64,
    pub n: usize,
    pub count: u128,
    pub degree_sum: u64,
    /// Σ deg f_i < n, under which the count must be divisible by p.
    pub degree_condition: bool,
    pub divisible: bool,
}

/// Common zeros of a polynomial system over F_p^n.
pub fn chevalley_warning_count(polys: &[MultiPoly], p: u64, n: usize, guards: &Guards) -> Result<CwReport> {
    require_prime(p)?;
    if let Some(bad) = polys.iter().position(|f| f.modulus() != p || f.nvars() != n) {
        return Err(Error::DimensionMismatch(format!(
            "polynomial {bad} lives over F_{} in {} variables, expected F_{p} in {n}",
            polys[bad].modulus(),
            polys[bad].nvars()
        )));
    }
    let points = sat_pow(p as u128, n as u32);
    guards.check("field_points", guards.field_points, points)?;
    let evs: Vec<Evaluator> = polys.iter().map(Evaluator::new).collect();
    let mut count = 0u128;
    for_each_point(p, n, |x| {
        if evs.iter().all(|e| e.eval(x) == 0) {
            count += 1;
        }
    });
    // the zero polynomial imposes nothing; count it as degree 0
    let degree_sum: u64 = polys.iter().map(|f| f.degree().unwrap_or(0) as u64).sum();
    let degree_condition = degree_sum < n as u64;
    let divisible = count % p as u128 == 0;
    if degree_condition && !divisible {
        return Err(Error::TheoremViolation(format!(
            "{count} common zeros is not a multiple of {p} although Σdeg = {degree_sum} < {n}"
        )));
    }
    Ok(CwReport { p, n, count, degree_sum, degree_condition, divisible })
}
