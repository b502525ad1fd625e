//! Exact linear algebra over ℚ and F_p, plus a dense symmetric eigensolver.

mod binom;
mod eigen;
pub(crate) mod fp;
mod intmat;
mod rational;

pub use binom::{binom_upper_bound, binomial, binomial_u128, BinomBound};
pub use eigen::{
    interlacing_check, rayleigh_minmax_check, sym_eigen_f64, sym_eigenvalues, sym_eigenvalues_f64,
    RayleighReport, SymEigen, SymSpectrum, SPECTRUM_TOL,
};
pub use fp::{inv_mod, is_prime, mul_mod, nullspace_fp, pow_mod, require_prime, FpMatrix};
pub use intmat::IntMatrix;
pub use rational::{
    parse_rational, rank_rational, rank_trace_bound, rational_to_string, RankTrace, RationalMatrix,
};

use crate::error::{Error, Result};
use num_rational::BigRational;

/// Field selector for [`linear_independent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

/// True iff the integer vectors are linearly independent over `field`.
pub fn linear_independent(vectors: &[Vec<i64>], field: Field) -> Result<bool> {
    let Some(first) = vectors.first() else {
        return Ok(true);
    };
    let len = first.len();
    if let Some(bad) = vectors.iter().position(|v| v.len() != len) {
        return Err(Error::DimensionMismatch(format!(
            "vector {bad} has length {} but vector 0 has length {len}",
            vectors[bad].len()
        )));
    }
    let rank = match field {
        Field::Rational => RationalMatrix::from_i64_rows(vectors)?.rank(),
        Field::Prime(p) => FpMatrix::from_i64_rows(p, vectors)?.rank(),
    };
    Ok(rank == vectors.len())
}

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_examples() {
        assert!(linear_independent(&[vec![1, 0], vec![0, 1]], Field::Prime(2)).unwrap());
        assert!(!linear_independent(&[vec![1, 1], vec![1, 1]], Field::Rational).unwrap());
        // incidence vectors of {1,2,3} and {1,4,5} on [5]
        let a = vec![1, 1, 1, 0, 0];
        let b = vec![1, 0, 0, 1, 1];
        assert!(linear_independent(&[a, b], Field::Prime(2)).unwrap());
        assert!(linear_independent(&[vec![1], vec![1, 2]], Field::Rational).is_err());
    }

    #[test]
    fn odd_rows_dependent_mod_two_only() {
        let v = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert!(linear_independent(&v, Field::Rational).unwrap());
        assert!(!linear_independent(&v, Field::Prime(2)).unwrap());
    }
}
