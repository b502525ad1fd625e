use super::roots::for_each_point;
use crate::error::{invalid, Error, Result};
use crate::exactla::{binomial, mul_mod, require_prime};
use crate::guard::{sat_pow, Guards};
use serde::Serialize;
use std::collections::HashSet;

/// A set of distinct points of F_p^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSetFq {
    p: u64,
    n: usize,
    points: Vec<Vec<u64>>,
}

impl PointSetFq {
    pub fn new(p: u64, n: usize, points: Vec<Vec<u64>>) -> Result<Self> {
        require_prime(p)?;
        let mut seen = HashSet::new();
        for x in &points {
            if x.len() != n {
                return Err(Error::DimensionMismatch(format!("point {x:?} is not in F_{p}^{n}")));
            }
            if x.iter().any(|&c| c >= p) {
                return invalid(format!("point {x:?} has a coordinate outside [0, {p})"));
            }
            if !seen.insert(x.clone()) {
                return invalid(format!("duplicate point {x:?}"));
            }
        }
        Ok(PointSetFq { p, n, points })
    }

    /// All of F_p^n.
    pub fn full(p: u64, n: usize) -> Result<Self> {
        let mut pts = Vec::new();
        for_each_point(p, n, |x| pts.push(x.to_vec()));
        Self::new(p, n, pts)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<u64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Lexicographic rank of a point (first coordinate most significant).
fn index(p: u64, x: &[u64]) -> usize {
    x.iter().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

/// One representative per line direction: first nonzero coordinate equal to 1,
/// in lexicographic order.
pub fn projective_directions(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for_each_point(p, n, |v| {
        if v.iter().find(|&&c| c != 0) == Some(&1) {
            out.push(v.to_vec());
        }
    });
    out
}

fn line_point(p: u64, w: &[u64], v: &[u64], t: u64) -> Vec<u64> {
    w.iter().zip(v).map(|(&a, &b)| (a + mul_mod(t, b, p)) % p).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct KakeyaCheck {
    pub is_kakeya: bool,
    /// First direction (in lexicographic order) with no full line inside A.
    pub missing_direction: Option<Vec<u64>>,
    pub directions: usize,
}

pub fn is_kakeya(a: &PointSetFq, guards: &Guards) -> Result<KakeyaCheck> {
    let (p, n) = (a.p, a.n);
    guards.check("field_points", guards.field_points, sat_pow(p as u128, n as u32))?;
    let mut member = vec![false; sat_pow(p as u128, n as u32) as usize];
    for x in &a.points {
        member[index(p, x)] = true;
    }
    let dirs = projective_directions(p, n);
    let directions = dirs.len();
    for v in dirs {
        // a full line through w ∈ A; any line inside A passes through one of its points
        let found = a
            .points
            .iter()
            .any(|w| (1..p).all(|t| member[index(p, &line_point(p, w, &v, t))]));
        if !found {
            return Ok(KakeyaCheck { is_kakeya: false, missing_direction: Some(v), directions });
        }
    }
    Ok(KakeyaCheck { is_kakeya: true, missing_direction: None, directions })
}

#[derive(Debug, Clone, Serialize)]
pub struct KakeyaMin {
    pub p: u64,
    pub n: usize,
    pub minimum: usize,
    /// C(n+p−1, n).
    pub lower_bound: String,
    /// Number of Kakeya sets of minimum size.
    pub minimum_sets: u64,
    /// The lexicographically first one.
    pub example: Vec<Vec<u64>>,
    pub subsets_scanned: u64,
}

/// Smallest Kakeya set in F_p^n by scanning all 2^(p^n) subsets.
pub fn kakeya_min_brute(p: u64, n: usize, guards: &Guards) -> Result<KakeyaMin> {
    require_prime(p)?;
    let size = sat_pow(p as u128, n as u32);
    guards.check("kakeya_points", guards.kakeya_points, size)?;
    if size > 40 {
        return invalid("exhaustive Kakeya search is limited to 40 points");
    }
    let size = size as usize;
    let mut pts = Vec::with_capacity(size);
    for_each_point(p, n, |x| pts.push(x.to_vec()));
    // line masks grouped by direction
    let lines: Vec<Vec<u64>> = projective_directions(p, n)
        .iter()
        .map(|v| {
            let mut masks: Vec<u64> = pts
                .iter()
                .map(|w| (0..p).fold(0u64, |m, t| m | 1 << index(p, &line_point(p, w, v, t))))
                .collect();
            masks.sort_unstable();
            masks.dedup();
            masks
        })
        .collect();
    let mut best = usize::MAX;
    let mut count = 0u64;
    let mut example = 0u64;
    let total = 1u64 << size;
    for s in 0..total {
        let k = s.count_ones() as usize;
        if k > best {
            continue;
        }
        if lines.iter().all(|dir| dir.iter().any(|&l| l & s == l)) {
            if k < best {
                best = k;
                count = 0;
                example = s;
            }
            count += 1;
        }
    }
    let lower = binomial(n as u64 + p - 1, n as u64);
    if num_bigint::BigUint::from(best) < lower {
        return Err(Error::TheoremViolation(format!(
            "Kakeya set of size {best} in F_{p}^{n} is below C(n+p-1, n) = {lower}"
        )));
    }
    Ok(KakeyaMin {
        p,
        n,
        minimum: best,
        lower_bound: lower.to_string(),
        minimum_sets: count,
        example: (0..size).filter(|&i| example >> i & 1 == 1).map(|i| pts[i].clone()).collect(),
        subsets_scanned: total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kakeya_examples() {
        let g = Guards::default();
        assert!(is_kakeya(&PointSetFq::full(3, 2).unwrap(), &g).unwrap().is_kakeya);
        let line = PointSetFq::new(3, 2, (0..3).map(|t| vec![0, t]).collect()).unwrap();
        let c = is_kakeya(&line, &g).unwrap();
        assert_eq!(c.missing_direction, Some(vec![1, 0]));
        let mut punctured = PointSetFq::full(3, 2).unwrap().points().to_vec();
        punctured.retain(|x| x != &vec![0, 0]);
        let punctured = PointSetFq::new(3, 2, punctured).unwrap();
        assert!(is_kakeya(&punctured, &g).unwrap().is_kakeya);
    }

    #[test]
    fn directions() {
        assert_eq!(projective_directions(3, 2), vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(projective_directions(5, 3).len(), 31);
    }

    #[test]
    fn minimum_sizes() {
        let g = Guards::default();
        assert_eq!(kakeya_min_brute(2, 1, &g).unwrap().minimum, 2);
        let m = kakeya_min_brute(2, 2, &g).unwrap();
        assert_eq!(m.minimum, 3);
        // q(q+1)/2 + (q−1)/2 for odd q in the plane
        let m = kakeya_min_brute(3, 2, &g).unwrap();
        assert_eq!(m.minimum, 7);
        assert_eq!(m.lower_bound, "6");
        assert!(kakeya_min_brute(2, 4, &g).is_err());
    }
}
