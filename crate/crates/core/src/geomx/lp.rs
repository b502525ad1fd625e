//! Exact feasibility for {x ≥ 0 : A x = b}: phase-1 simplex with Bland's rule.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A basic feasible solution of `A x = b, x ≥ 0`, or `None` when the system is
/// infeasible. Bland's rule rules out cycling, so this always terminates.
pub fn feasible_point(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!("{m} rows but {} right-hand sides", b.len())));
    }
    let n = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("ragged constraint matrix".into()));
    }
    if m == 0 {
        return Ok(Some(vec![BigRational::zero(); n]));
    }

    // Columns: n structural, m artificial, then the right-hand side.
    let w = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = Vec::with_capacity(w);
        row.extend(a[i].iter().map(|x| if flip { -x } else { x.clone() }));
        row.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    // Reduced costs of "minimise Σ artificials" with the artificials basic.
    let mut cost = vec![BigRational::zero(); w];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[w - 1] -= &row[w - 1];
    }
    t.push(cost);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let Some(enter) = (0..n + m).find(|&j| t[m][j].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][w - 1] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((l, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase 1 is bounded below by 0, so an entering column always has a positive entry.
        let (r, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut t, r, enter);
        basis[r] = enter;
    }

    if !t[m][w - 1].is_zero() {
        return Ok(None);
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = t[i][w - 1].clone();
        }
    }
    Ok(Some(x))
}

fn pivot(t: &mut [Vec<BigRational>], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigRational>> {
        r.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn small_systems() {
        // x + y = 1, x − y = 0
        let x = feasible_point(&rows(&[&[1, 1], &[1, -1]]), &[q(1), q(0)]).unwrap().unwrap();
        assert_eq!(x, vec![BigRational::new(1.into(), 2.into()); 2]);
        // x + y = −1 has no nonnegative solution
        assert!(feasible_point(&rows(&[&[1, 1]]), &[q(-1)]).unwrap().is_none());
        // −x = −3
        assert_eq!(feasible_point(&rows(&[&[-1, 0]]), &[q(-3)]).unwrap().unwrap(), vec![q(3), q(0)]);
        // redundant rows
        let x = feasible_point(&rows(&[&[1, 2, 3], &[2, 4, 6]]), &[q(6), q(12)]).unwrap().unwrap();
        assert_eq!(x[0].clone() + q(2) * &x[1] + q(3) * &x[2], q(6));
        assert!(feasible_point(&rows(&[&[1, 1]]), &[q(1), q(2)]).is_err());
    }
}
