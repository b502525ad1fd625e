use crate::error::{invalid, Result};
use crate::exactla::require_prime;
use crate::guard::Guards;
use serde::Serialize;

fn to_mask(a: &[u64], p: u64) -> Result<u64> {
    let mut m = 0u64;
    for &x in a {
        if x >= p {
            return invalid(format!("{x} is not a residue mod {p}"));
        }
        m |= 1 << x;
    }
    Ok(m)
}

fn from_mask(m: u64) -> Vec<u64> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

/// {a + x : a ∈ A} for A given as a mask over Z_p.
fn rotate(a: u64, x: u64, p: u64) -> u64 {
    let full = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
    if x == 0 {
        a
    } else {
        ((a << x) | (a >> (p - x))) & full
    }
}

fn sum_mask(a: u64, b: u64, p: u64) -> u64 {
    from_mask(b).into_iter().fold(0, |acc, x| acc | rotate(a, x, p))
}

fn restricted_mask(a: u64, p: u64) -> u64 {
    from_mask(a).into_iter().fold(0, |acc, x| acc | rotate(a & !(1 << x), x, p))
}

/// A + B in Z_p, or A +̂ B (a ≠ b) when `restricted`.
pub fn sumset(a: &[u64], b: &[u64], p: u64, restricted: bool) -> Result<Vec<u64>> {
    require_prime(p)?;
    if p > 64 {
        return invalid(format!("sumsets are computed for p ≤ 64, got {p}"));
    }
    if a.is_empty() || b.is_empty() {
        return invalid("sumset of an empty set");
    }
    let (ma, mb) = (to_mask(a, p)?, to_mask(b, p)?);
    let mask = if restricted {
        from_mask(mb).into_iter().fold(0, |acc, x| acc | rotate(ma & !(1 << x), x, p))
    } else {
        sum_mask(ma, mb, p)
    };
    Ok(from_mask(mask))
}

#[derive(Debug, Clone, Serialize)]
pub struct SumsetReport {
    pub p: u64,
    /// Ordered pairs (A, B) of nonempty subsets tested against |A+B| ≥ min(p, |A|+|B|−1).
    pub cd_pairs: u64,
    pub cd_violations: u64,
    pub cd_tight: u64,
    /// Nonempty A tested against |A+̂A| ≥ min(p, 2|A|−3).
    pub sh_sets: u64,
    pub sh_violations: u64,
    pub sh_tight: u64,
    /// A few tight Cauchy–Davenport pairs, smallest masks first.
    pub cd_tight_examples: Vec<(Vec<u64>, Vec<u64>)>,
    pub sh_tight_examples: Vec<Vec<u64>>,
    pub first_violation: Option<String>,
}

impl SumsetReport {
    pub fn holds(&self) -> bool {
        self.cd_violations == 0 && self.sh_violations == 0
    }
}

const EXAMPLES: usize = 5;

/// Exhaustive Cauchy–Davenport and Silva–Hamidoune check over Z_p.
pub fn sumset_bound_check(p: u64, guards: &Guards) -> Result<SumsetReport> {
    require_prime(p)?;
    guards.check("sumset_prime", guards.sumset_prime.min(31), p as u128)?;
    let full = (1u64 << p) - 1;
    let mut r = SumsetReport {
        p,
        cd_pairs: 0,
        cd_violations: 0,
        cd_tight: 0,
        sh_sets: 0,
        sh_violations: 0,
        sh_tight: 0,
        cd_tight_examples: Vec::new(),
        sh_tight_examples: Vec::new(),
        first_violation: None,
    };
    for a in 1..=full {
        let na = a.count_ones() as i64;
        for b in 1..=full {
            let s = sum_mask(a, b, p).count_ones() as i64;
            let bound = (p as i64).min(na + b.count_ones() as i64 - 1);
            r.cd_pairs += 1;
            if s < bound {
                r.cd_violations += 1;
                r.first_violation.get_or_insert_with(|| {
                    format!("|A+B| = {s} < {bound} for A = {:?}, B = {:?}", from_mask(a), from_mask(b))
                });
            } else if s == bound {
                r.cd_tight += 1;
                if r.cd_tight_examples.len() < EXAMPLES {
                    r.cd_tight_examples.push((from_mask(a), from_mask(b)));
                }
            }
        }
        let s = restricted_mask(a, p).count_ones() as i64;
        let bound = (p as i64).min(2 * na - 3);
        r.sh_sets += 1;
        if s < bound {
            r.sh_violations += 1;
            r.first_violation
                .get_or_insert_with(|| format!("|A+̂A| = {s} < {bound} for A = {:?}", from_mask(a)));
        } else if s == bound {
            r.sh_tight += 1;
            if r.sh_tight_examples.len() < EXAMPLES {
                r.sh_tight_examples.push(from_mask(a));
            }
        }
    }
    Ok(r)
}
