use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// C(n, k) exactly; zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// C(n, k) as u128, saturating on overflow. For guard arithmetic and small bounds.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    binomial(n, k).to_u128().unwrap_or(u128::MAX)
}

#[derive(Debug, Clone, Serialize)]
pub struct BinomBound {
    pub n: u64,
    pub k: u64,
    pub binomial: String,
    pub bound: f64,
    pub holds: bool,
}

/// e^k (n/k)^k next to the exact binomial. k = 0 uses the limit value 1.
pub fn binom_upper_bound(n: u64, k: u64) -> BinomBound {
    let exact = binomial(n, k);
    let bound = if k == 0 {
        1.0
    } else {
        let k_f = k as f64;
        (k_f * (1.0 + (n as f64 / k_f).ln())).exp()
    };
    let holds = exact.to_f64().is_some_and(|b| b <= bound * (1.0 + 1e-12));
    BinomBound { n, k, binomial: exact.to_string(), bound, holds }
}
