//! Sparse multivariate polynomials over a prime field F_p and the
//! polynomial-method lemmas built on them.

mod kakeya;
mod numtheory;
mod roots;

pub use kakeya::{is_kakeya, kakeya_min_brute, projective_directions, KakeyaCheck, KakeyaMin, PointSetFq};
pub use numtheory::{fermat_check, lucas_binom, power_sum, FermatCheck};
pub use roots::{
    chevalley_warning_count, count_roots_brute, enumerate_monomials, for_each_point, monomial_count,
    vanishing_poly, CwReport, Evaluator, RootCount,
};

use crate::error::{Error, Result};
use crate::exactla::{mul_mod, pow_mod, require_prime};
use rand::Rng;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub type Exponents = Vec<u32>;

/// Polynomial in n variables over F_p. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    p: u64,
    n: usize,
    terms: BTreeMap<Exponents, u64>,
}

/// Graded lexicographic comparison: total degree first, then lex.
pub fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl MultiPoly {
    pub fn zero(p: u64, n: usize) -> Result<Self> {
        require_prime(p)?;
        Ok(MultiPoly { p, n, terms: BTreeMap::new() })
    }

    pub fn constant(p: u64, n: usize, c: i64) -> Result<Self> {
        Self::monomial(p, n, vec![0; n], c)
    }

    /// The variable x_{i+1} (0-indexed `i`).
    pub fn var(p: u64, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidInput(format!("variable index {i} with only {n} variables")));
        }
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(p, n, e, 1)
    }

    pub fn monomial(p: u64, n: usize, exps: Exponents, c: i64) -> Result<Self> {
        Self::from_terms(p, n, vec![(exps, c)])
    }

    /// Sum the given terms, reducing coefficients mod p.
    pub fn from_terms(p: u64, n: usize, terms: Vec<(Exponents, i64)>) -> Result<Self> {
        let mut f = Self::zero(p, n)?;
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} in {n} variables",
                    e.len()
                )));
            }
            f.add_term(e, c.rem_euclid(p as i64) as u64);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: u64) {
        if c % self.p == 0 {
            return;
        }
        let p = self.p;
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Terms in descending graded-lex order (leading term first).
    pub fn terms(&self) -> Vec<(Exponents, u64)> {
        let mut t: Vec<(Exponents, u64)> = self.terms.iter().map(|(e, &c)| (e.clone(), c)).collect();
        t.sort_by(|a, b| grlex(&b.0, &a.0));
        t
    }

    pub fn terms_iter(&self) -> impl Iterator<Item = (&Exponents, &u64)> {
        self.terms.iter()
    }

    /// Total degree; `None` stands for −∞ (the zero polynomial).
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    fn same_ring(&self, other: &Self) {
        assert_eq!((self.p, self.n), (other.p, other.n), "polynomials over different rings");
    }

    pub fn compatible(&self, other: &Self) -> bool {
        (self.p, self.n) == (other.p, other.n)
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = MultiPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        for (e, &v) in &self.terms {
            out.add_term(e.clone(), mul_mod(v, c % self.p, self.p));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        acc.add_term(vec![0; self.n], 1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[u64]) -> Result<u64> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "point with {} coordinates for a polynomial in {} variables",
                x.len(),
                self.n
            )));
        }
        let p = self.p;
        Ok(self.terms.iter().fold(0, |acc, (e, &c)| {
            let m = e.iter().zip(x).fold(c, |m, (&k, &xi)| mul_mod(m, pow_mod(xi, k as u64, p), p));
            (acc + m) % p
        }))
    }

    /// Clamp every exponent to at most 1; agrees with `self` on {0,1}^n.
    pub fn multilinear_reduce(&self) -> Self {
        let mut out = MultiPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        for (e, &c) in &self.terms {
            out.add_term(e.iter().map(|&k| k.min(1)).collect(), c);
        }
        out
    }

    /// Univariate Π_{s ∈ S}(x_i − s) embedded in n variables.
    pub fn grid_factor(p: u64, n: usize, var: usize, s: &[u64]) -> Result<Self> {
        let mut g = Self::constant(p, n, 1)?;
        for &v in s {
            let lin = &Self::var(p, n, var)? - &Self::constant(p, n, (v % p) as i64)?;
            g = &g * &lin;
        }
        Ok(g)
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.p - 1)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.same_ring(rhs);
        let mut out = MultiPoly { p: self.p, n: self.n, terms: BTreeMap::new() };
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, mul_mod(ca, cb, self.p));
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                match (c, vars.is_empty()) {
                    (_, true) => c.to_string(),
                    (1, false) => vars.join("*"),
                    _ => format!("{c}*{}", vars.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Random polynomial with up to `terms` monomials of total degree ≤ `max_deg`.
pub fn random_poly<R: Rng>(p: u64, n: usize, max_deg: u32, terms: usize, rng: &mut R) -> MultiPoly {
    let mut f = MultiPoly { p, n, terms: BTreeMap::new() };
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            if n > 0 {
                e[rng.gen_range(0..n)] += 1;
            }
        }
        f.add_term(e, rng.gen_range(1..p));
    }
    f
}
