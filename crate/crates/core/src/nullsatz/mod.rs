//! Combinatorial Nullstellensatz certificates and witnesses, together with
//! the sumset, zero-sum and regular-subgraph applications.

mod berge;
mod sumset;
mod zerosum;

pub use berge::{berge_sauer_find, check_berge_precondition, random_four_regular_plus_edge, BergeSauer};
pub use sumset::{sumset, sumset_bound_check, SumsetReport};
pub use zerosum::{
    davenport_g, egz_find, f_const_brute, kemnitz_congruences, kemnitz_counts, olsen_lower_example,
    zero_sum_subset, DavenportReport, EgzConstReport, EgzWitness, Group, KemnitzClause, KemnitzReport,
    ZeroSumInstance,
};

use crate::error::{invalid, precondition, Error, Result};
use crate::exactla::require_prime;
use crate::ffpoly::{grlex, Evaluator, Exponents, MultiPoly};
use crate::guard::Guards;
use serde::Serialize;

/// Finite grid S_1 × … × S_n inside F_p^n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSets {
    p: u64,
    sets: Vec<Vec<u64>>,
}

impl GridSets {
    pub fn new(p: u64, sets: Vec<Vec<u64>>) -> Result<Self> {
        require_prime(p)?;
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return invalid(format!("S_{} is empty", i + 1));
            }
            if let Some(&x) = s.iter().find(|&&x| x >= p) {
                return invalid(format!("S_{} contains {x}, not an element of F_{p}", i + 1));
            }
            let mut t = s.clone();
            t.sort_unstable();
            t.dedup();
            if t.len() != s.len() {
                return invalid(format!("S_{} has repeated elements", i + 1));
            }
        }
        Ok(GridSets { p, sets })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<u64>] {
        &self.sets
    }

    pub fn size(&self) -> u128 {
        self.sets.iter().fold(1u128, |a, s| a.saturating_mul(s.len() as u128))
    }

    /// Visit grid points in lexicographic order of the sorted sets; stop when `visit` returns true.
    fn find_point(&self, mut visit: impl FnMut(&[u64]) -> bool) -> Option<Vec<u64>> {
        let sorted: Vec<Vec<u64>> = self
            .sets
            .iter()
            .map(|s| {
                let mut t = s.clone();
                t.sort_unstable();
                t
            })
            .collect();
        let n = sorted.len();
        let mut idx = vec![0usize; n];
        let mut x: Vec<u64> = sorted.iter().map(|s| s[0]).collect();
        loop {
            if visit(&x) {
                return Some(x);
            }
            let mut i = n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < sorted[i].len() {
                    x[i] = sorted[i][idx[i]];
                    break;
                }
                idx[i] = 0;
                x[i] = sorted[i][0];
            }
        }
    }

    fn check_against(&self, f: &MultiPoly, guards: &Guards) -> Result<()> {
        if f.modulus() != self.p || f.nvars() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "polynomial over F_{} in {} variables vs grid over F_{} in {} dimensions",
                f.modulus(),
                f.nvars(),
                self.p,
                self.dim()
            )));
        }
        guards.check("grid_points", guards.grid_points, self.size())
    }
}

/// f = Σ h_i g_i with g_i = Π_{s ∈ S_i}(x_i − s).
#[derive(Debug, Clone, Serialize)]
pub struct CnCertificate {
    pub quotients: Vec<MultiPoly>,
    pub divisors: Vec<MultiPoly>,
    /// Always zero for a returned certificate; kept so the report shows it.
    pub residual: MultiPoly,
}

impl CnCertificate {
    /// Recompute f − Σ h_i g_i.
    pub fn remainder(&self, f: &MultiPoly) -> MultiPoly {
        self.quotients
            .iter()
            .zip(&self.divisors)
            .fold(f.clone(), |acc, (h, g)| &acc - &(h * g))
    }

    /// deg h_i ≤ deg f − deg g_i for every nonzero h_i.
    pub fn degrees_ok(&self, f: &MultiPoly) -> bool {
        let df = f.degree().map_or(-1, |d| d as i64);
        self.quotients.iter().zip(&self.divisors).all(|(h, g)| match (h.degree(), g.degree()) {
            (None, _) => true,
            (Some(dh), Some(dg)) => dh as i64 <= df - dg as i64,
            (Some(_), None) => false,
        })
    }
}

/// Divide f by g_1, …, g_n in turn. Requires f to vanish on the grid.
pub fn cn_certificate(f: &MultiPoly, grid: &GridSets, guards: &Guards) -> Result<CnCertificate> {
    grid.check_against(f, guards)?;
    let (p, n) = (f.modulus(), f.nvars());
    let ev = Evaluator::new(f);
    if let Some(y) = grid.find_point(|x| ev.eval(x) != 0) {
        return precondition(format!("f does not vanish on the grid: f({y:?}) = {}", ev.eval(&y)));
    }

    let divisors: Vec<MultiPoly> = (0..n)
        .map(|i| MultiPoly::grid_factor(p, n, i, &grid.sets[i]))
        .collect::<Result<_>>()?;
    let mut rest = f.clone();
    let mut quotients = Vec::with_capacity(n);
    for (i, g) in divisors.iter().enumerate() {
        let t = grid.sets[i].len() as u32;
        let mut h = MultiPoly::zero(p, n)?;
        // g is monic in x_i of degree t, so each step strictly lowers the
        // greatest term with e_i ≥ t.
        loop {
            let top = rest
                .terms_iter()
                .filter(|(e, _)| e[i] >= t)
                .max_by(|a, b| grlex(a.0, b.0))
                .map(|(e, &c)| (e.clone(), c));
            let Some((mut e, c)) = top else { break };
            e[i] -= t;
            let mut m = MultiPoly::zero(p, n)?;
            m.add_term(e, c);
            rest = &rest - &(&m * g);
            h = &h + &m;
        }
        quotients.push(h);
    }

    // Every exponent of x_i in `rest` is now below |S_i|; a polynomial of that
    // shape vanishing on the grid must be zero.
    let rev = Evaluator::new(&rest);
    if let Some(y) = grid.find_point(|x| rev.eval(x) != 0) {
        return Err(Error::TheoremViolation(format!("division residual is nonzero at {y:?}")));
    }
    if !rest.is_zero() {
        return Err(Error::TheoremViolation(format!(
            "residual {rest} vanishes on the grid but is not the zero polynomial"
        )));
    }
    let cert = CnCertificate { quotients, divisors, residual: rest };
    if !cert.degrees_ok(f) {
        return Err(Error::TheoremViolation("quotient degree exceeds deg f − deg g_i".into()));
    }
    Ok(cert)
}

/// First grid point (lexicographic over sorted S_i) with f ≠ 0, given a
/// nonzero top-degree coefficient at x^t with |S_i| > t_i.
pub fn cn_witness(f: &MultiPoly, grid: &GridSets, t: &[u32], guards: &Guards) -> Result<Vec<u64>> {
    grid.check_against(f, guards)?;
    if t.len() != f.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "exponent vector of length {} for {} variables",
            t.len(),
            f.nvars()
        )));
    }
    let total: u32 = t.iter().sum();
    if f.degree() != Some(total) {
        return precondition(format!("deg f = {:?} but Σ t_i = {total}", f.degree()));
    }
    if let Some(i) = (0..t.len()).find(|&i| grid.sets[i].len() as u32 <= t[i]) {
        return precondition(format!("|S_{}| = {} is not greater than t_{} = {}", i + 1, grid.sets[i].len(), i + 1, t[i]));
    }
    let e: Exponents = t.to_vec();
    if f.coeff(&e) == 0 {
        return precondition(format!("coefficient of x^{t:?} in f is zero"));
    }
    let ev = Evaluator::new(f);
    grid.find_point(|x| ev.eval(x) != 0)
        .ok_or_else(|| Error::TheoremViolation("no grid point with f ≠ 0 despite a nonzero top coefficient".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, n: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(p, n, terms.iter().map(|(e, c)| (e.to_vec(), *c)).collect()).unwrap()
    }

    #[test]
    fn certificate_examples() {
        let g = Guards::default();
        let f = poly(3, 1, &[(&[2], 1), (&[1], -1)]);
        let grid = GridSets::new(3, vec![vec![0, 1]]).unwrap();
        let c = cn_certificate(&f, &grid, &g).unwrap();
        assert_eq!(c.quotients[0], MultiPoly::constant(3, 1, 1).unwrap());
        assert_eq!(c.divisors[0], f);

        let z = MultiPoly::zero(5, 2).unwrap();
        let grid = GridSets::new(5, vec![vec![0, 1], vec![2]]).unwrap();
        let c = cn_certificate(&z, &grid, &g).unwrap();
        assert!(c.quotients.iter().all(MultiPoly::is_zero));
    }

    #[test]
    fn non_vanishing_is_rejected() {
        // (x1 + x2)(x1 − 1) = −4 at (0, 4), the first grid point where it is nonzero.
        let f = &poly(5, 2, &[(&[1, 0], 1), (&[0, 1], 1)]) * &poly(5, 2, &[(&[1, 0], 1), (&[0, 0], -1)]);
        let grid = GridSets::new(5, vec![vec![0, 1], vec![0, 4]]).unwrap();
        let err = cn_certificate(&f, &grid, &Guards::default()).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("[0, 4]")), "{err}");
    }

    #[test]
    fn product_of_factors_round_trips() {
        let g1 = MultiPoly::grid_factor(5, 2, 0, &[0, 1]).unwrap();
        let g2 = MultiPoly::grid_factor(5, 2, 1, &[0, 4]).unwrap();
        let a = poly(5, 2, &[(&[1, 1], 2), (&[0, 0], 3)]);
        let b = poly(5, 2, &[(&[2, 0], 1)]);
        let f = &(&a * &g1) + &(&b * &g2);
        let grid = GridSets::new(5, vec![vec![0, 1], vec![0, 4]]).unwrap();
        let c = cn_certificate(&f, &grid, &Guards::default()).unwrap();
        assert!(c.remainder(&f).is_zero());
        assert!(c.degrees_ok(&f));
    }

    #[test]
    fn witness_examples() {
        let g = Guards::default();
        let f = poly(5, 2, &[(&[1, 1], 1)]);
        let grid = GridSets::new(5, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(cn_witness(&f, &grid, &[1, 1], &g).unwrap(), vec![1, 1]);

        let f = poly(3, 2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let grid = GridSets::new(3, vec![vec![0, 1], vec![0]]).unwrap();
        assert_eq!(cn_witness(&f, &grid, &[1, 0], &g).unwrap(), vec![1, 0]);
    }

    #[test]
    fn witness_preconditions_are_named() {
        let g = Guards::default();
        let f = poly(5, 2, &[(&[1, 1], 1)]);
        let small = GridSets::new(5, vec![vec![0], vec![0, 1]]).unwrap();
        let e = cn_witness(&f, &small, &[1, 1], &g).unwrap_err();
        assert!(e.to_string().contains("|S_1|"), "{e}");
        let grid = GridSets::new(5, vec![vec![0, 1, 2], vec![0, 1, 2]]).unwrap();
        let e = cn_witness(&f, &grid, &[2, 0], &g).unwrap_err();
        assert!(e.to_string().contains("coefficient"), "{e}");
        let e = cn_witness(&f, &grid, &[1, 0], &g).unwrap_err();
        assert!(e.to_string().contains("deg f"), "{e}");
    }

    #[test]
    fn grid_validation() {
        assert!(GridSets::new(4, vec![vec![0]]).is_err());
        assert!(GridSets::new(5, vec![vec![]]).is_err());
        assert!(GridSets::new(5, vec![vec![1, 1]]).is_err());
        assert!(GridSets::new(5, vec![vec![5]]).is_err());
    }
}
