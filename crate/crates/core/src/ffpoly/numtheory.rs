use crate::error::{invalid, Result};
use crate::exactla::{binomial, pow_mod, require_prime};
use num_traits::ToPrimitive;
use serde::Serialize;

/// Σ_{x ∈ F_p} x^r mod p.
pub fn power_sum(p: u64, r: u64) -> Result<u64> {
    require_prime(p)?;
    if r == 0 {
        return invalid("power sums are taken for r ≥ 1");
    }
    Ok((0..p).fold(0, |acc, x| (acc + pow_mod(x, r, p)) % p))
}

/// C(a, b) mod p as the product of digit binomials in base p.
pub fn lucas_binom(a: u64, b: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    let (mut a, mut b) = (a, b);
    let mut acc = 1u64;
    while b > 0 || a > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return Ok(0);
        }
        let digit = binomial(ad, bd) % p;
        acc = acc * digit.to_u64().expect("reduced mod p") % p;
        a /= p;
        b /= p;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Serialize)]
pub struct FermatCheck {
    pub a: u64,
    pub p: u64,
    /// a^p mod p.
    pub a_pow_p: u64,
    /// a^(p−1) mod p, present for a ≢ 0.
    pub a_pow_p_minus_1: Option<u64>,
    pub holds: bool,
}

pub fn fermat_check(a: u64, p: u64) -> Result<FermatCheck> {
    require_prime(p)?;
    let a_pow_p = pow_mod(a, p, p);
    let a_pow_p_minus_1 = (a % p != 0).then(|| pow_mod(a, p - 1, p));
    let holds = a_pow_p == a % p && a_pow_p_minus_1.is_none_or(|v| v == 1);
    Ok(FermatCheck { a, p, a_pow_p, a_pow_p_minus_1, holds })
}
