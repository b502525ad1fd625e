use super::convex::common_point;
use super::{check_dim, require_nonempty, ser_point, sub, Point, PointConfig};
use crate::error::{Error, Result};
use crate::exactla::RationalMatrix;
use crate::guard::Guards;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Serialize)]
pub struct DepthReport {
    /// min over closed halfspaces H ∋ y of |H ∩ X|.
    pub depth: usize,
    /// Indices of X in a minimising halfspace.
    pub halfspace: Vec<usize>,
}

type IVec = Vec<BigInt>;

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[BigInt], b: &[BigInt]) -> IVec {
    vec![&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

fn neg(v: &[BigInt]) -> IVec {
    v.iter().map(|x| -x).collect()
}

/// Primitive representative of the line through v (sign fixed by the first nonzero entry).
fn primitive_line(v: &[BigInt]) -> IVec {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let sign = if v.iter().find(|x| !x.is_zero()).map_or(false, Signed::is_negative) { -1 } else { 1 };
    v.iter().map(|x| x / &g * sign).collect()
}

/// Scale a rational vector to a parallel integer vector.
fn integral(v: &[BigRational]) -> IVec {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// Sign of a·v for a = levels[0] + ε levels[1] + ε² levels[2] + …, ε → 0⁺.
fn lex_sign(levels: &[IVec], v: &[BigInt]) -> Ordering {
    levels.iter().map(|l| idot(l, v).sign()).find(|s| *s != num_bigint::Sign::NoSign).map_or(Ordering::Equal, |s| {
        if s == num_bigint::Sign::Plus {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    })
}

/// One generic direction in every open cell of the arrangement {a : a·v = 0}.
/// Every cell has a vertex (or is a half-line/half-plane in rank ≤ 2), so
/// perturbing each vertex along each incident edge and then off that edge's
/// plane reaches them all.
fn cell_directions(vs: &[IVec], rank: usize) -> Vec<Vec<IVec>> {
    let nonzero: BTreeSet<IVec> = vs.iter().filter(|v| v.iter().any(|x| !x.is_zero())).map(|v| primitive_line(v)).collect();
    let mut out = Vec::new();
    match rank {
        1 => {
            out.push(vec![vec![BigInt::one()]]);
            out.push(vec![vec![-BigInt::one()]]);
        }
        2 => {
            for v in &nonzero {
                let w = vec![-v[1].clone(), v[0].clone()];
                for w in [w.clone(), neg(&w)] {
                    for z in [v.clone(), neg(v)] {
                        out.push(vec![w.clone(), z]);
                    }
                }
            }
        }
        3 => {
            let planes: Vec<&IVec> = nonzero.iter().collect();
            let mut vertices = BTreeSet::new();
            for (i, a) in planes.iter().enumerate() {
                for b in &planes[i + 1..] {
                    let c = cross(a, b);
                    if c.iter().any(|x| !x.is_zero()) {
                        vertices.insert(primitive_line(&c));
                    }
                }
            }
            for w in &vertices {
                for m in planes.iter().filter(|m| idot(m, w).is_zero()) {
                    let u = cross(m, w);
                    for w in [w.clone(), neg(w)] {
                        for u in [u.clone(), neg(&u)] {
                            for z in [(*m).clone(), neg(m)] {
                                out.push(vec![w.clone(), u.clone(), z]);
                            }
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

/// Exact Tukey depth of y: the least number of points of X in a closed
/// halfspace containing y. Shrinking a halfspace until its boundary passes
/// through y never adds points, and a direction a can be nudged into an open
/// cell of the arrangement {a·(x − y) = 0} without adding points either, so
/// the minimum is taken over one generic direction per cell.
pub fn halfspace_depth(y: &[BigRational], x: &PointConfig) -> Result<DepthReport> {
    check_dim(x, y)?;
    let n = x.len();
    let diffs: Vec<Point> = x.points().iter().map(|p| sub(p, y)).collect();
    let pivots = if diffs.is_empty() { Vec::new() } else { RationalMatrix::from_rows(diffs.clone())?.rref().1 };
    let rank = pivots.len();
    if rank > 3 {
        return Err(Error::InvalidInput("halfspace depth is computed in dimension ≤ 3".into()));
    }
    // Coordinates in the basis of RREF rows are the pivot entries.
    let coords: Vec<IVec> = diffs.iter().map(|v| integral(&pivots.iter().map(|&p| v[p].clone()).collect::<Vec<_>>())).collect();
    if rank == 0 {
        return Ok(DepthReport { depth: n, halfspace: (0..n).collect() });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for levels in cell_directions(&coords, rank) {
        let inside: Vec<usize> = (0..n).filter(|&i| lex_sign(&levels, &coords[i]) != Ordering::Less).collect();
        if best.as_ref().map_or(true, |b| inside.len() < b.0) {
            best = Some((inside.len(), inside));
        }
    }
    let (depth, halfspace) = best.expect("rank ≥ 1 gives at least two cells");
    Ok(DepthReport { depth, halfspace })
}

#[derive(Debug, Clone, Serialize)]
pub struct CenterpointReport {
    pub n: usize,
    pub d: usize,
    #[serde(serialize_with = "ser_point")]
    pub point: Point,
    pub depth: usize,
    /// ⌈n / (d+1)⌉.
    pub required: usize,
    /// Hull constraints added before the depth test passed.
    pub cuts: usize,
    pub holds: bool,
}

/// Cutting planes over the hull constraints: whenever the candidate y has a
/// closed halfspace H with |H ∩ X| < k, every point of depth ≥ k lies in
/// conv(X \ H) while y does not. Each cut is a new subset of X, so the loop
/// ends; the theorem keeps the intersection of the cuts nonempty.
pub fn centerpoint(x: &PointConfig, guards: &Guards) -> Result<CenterpointReport> {
    require_nonempty(x)?;
    guards.check("centerpoint_dim", guards.centerpoint_dim, x.dim() as u128)?;
    guards.check("centerpoint_points", guards.centerpoint_points, x.len() as u128)?;
    let (n, d) = (x.len(), x.dim());
    let required = n.div_ceil(d + 1);
    let mut y: Point = vec![BigRational::zero(); d];
    for p in x.points() {
        for (a, b) in y.iter_mut().zip(p) {
            *a += b;
        }
    }
    let nn = BigRational::from_integer(n.into());
    y.iter_mut().for_each(|a| *a /= &nn);

    let mut cuts: Vec<PointConfig> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    loop {
        let dep = halfspace_depth(&y, x)?;
        if dep.depth >= required {
            return Ok(CenterpointReport { n, d, point: y, depth: dep.depth, required, cuts: cuts.len(), holds: true });
        }
        let keep: Vec<usize> = (0..n).filter(|i| !dep.halfspace.contains(i)).collect();
        if !seen.insert(keep.clone()) {
            return Err(Error::TheoremViolation("centerpoint cut repeated".into()));
        }
        cuts.push(x.subset(&keep));
        let refs: Vec<&PointConfig> = cuts.iter().collect();
        let Some((p, _)) = common_point(&refs)? else {
            return Err(Error::TheoremViolation("hull constraints have empty intersection".into()));
        };
        y = p;
    }
}
