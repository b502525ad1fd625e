//! Exact checkers, constructions and brute-force oracles for algebraic
//! methods in combinatorics.
//!
//! Every module is pure: functions take immutable inputs (plus an explicit
//! [`Guards`] budget for anything exponential) and return owned reports.

pub mod error;
pub mod exactla;
pub mod ffpoly;
pub mod geomx;
pub mod guard;
pub mod io;
pub mod nullsatz;
pub mod ramsey;
pub mod setfam;
pub mod specgraph;

pub use error::{Error, Result};
pub use guard::Guards;

/// Seeded generator used everywhere randomness appears.
pub type Rng = rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    use rand::SeedableRng;
    Rng::seed_from_u64(seed)
}
