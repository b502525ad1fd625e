use super::{dot, point_strings, sub, Point, PointConfig};
use crate::error::{invalid, Error, Result};
use crate::exactla::{parse_rational, rational_to_string, RationalMatrix};
use crate::guard::{sat_pow, Guards};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};

fn require_distinct(x: &PointConfig) -> Result<()> {
    if x.points().iter().collect::<BTreeSet<_>>().len() != x.len() {
        return invalid("points must be distinct");
    }
    Ok(())
}

/// Dimension of the affine hull.
fn affine_dim(x: &PointConfig) -> usize {
    match x.points().split_first() {
        None => 0,
        Some((p0, rest)) if !rest.is_empty() => {
            RationalMatrix::from_rows(rest.iter().map(|p| sub(p, p0)).collect()).expect("equal lengths").rank()
        }
        _ => 0,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoDistanceReport {
    pub points: usize,
    /// Dimension n of the affine hull of S.
    pub affine_dim: usize,
    /// Squared distances with multiplicities.
    pub squared_distances: Vec<(String, usize)>,
    pub is_two_distance: bool,
    /// (n+1)(n+4)/2.
    pub bound: u64,
    pub within_bound: bool,
}

pub fn two_distance_check(s: &PointConfig) -> Result<TwoDistanceReport> {
    require_distinct(s)?;
    let mut dist: BTreeMap<BigRational, usize> = BTreeMap::new();
    let pts = s.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let v = sub(&pts[i], &pts[j]);
            *dist.entry(dot(&v, &v)).or_default() += 1;
        }
    }
    let n = affine_dim(s) as u64;
    let bound = (n + 1) * (n + 4) / 2;
    let is_two_distance = dist.len() <= 2;
    let within_bound = s.len() as u64 <= bound;
    if is_two_distance && !within_bound {
        return Err(Error::TheoremViolation(format!("two-distance set of size {} exceeds {bound}", s.len())));
    }
    Ok(TwoDistanceReport {
        points: s.len(),
        affine_dim: n as usize,
        squared_distances: dist.iter().map(|(d, c)| (rational_to_string(d), *c)).collect(),
        is_two_distance,
        bound,
        within_bound,
    })
}

/// The 0/1 vectors of length n+1 with exactly two ones (pairs in lex order).
/// They span an n-dimensional affine hyperplane; squared distances are 2 and 4.
pub fn two_distance_example(n: usize) -> PointConfig {
    let mut pts = Vec::new();
    for i in 0..=n {
        for j in i + 1..=n {
            let mut v = vec![BigRational::zero(); n + 1];
            v[i] = BigRational::one();
            v[j] = BigRational::one();
            pts.push(v);
        }
    }
    PointConfig::new(n + 1, pts).expect("uniform length")
}

#[derive(Debug, Clone, Serialize)]
pub struct NearlyOrthogonalReport {
    pub vectors: usize,
    pub d: usize,
    /// Every three distinct vectors contain an orthogonal pair.
    pub nearly_orthogonal: bool,
    /// A triple with no orthogonal pair.
    pub witness: Option<[usize; 3]>,
    /// 2d.
    pub bound: usize,
    pub within_bound: bool,
}

/// Unit vectors only (‖x‖² = 1 exactly).
pub fn nearly_orthogonal_check(x: &PointConfig, guards: &Guards) -> Result<NearlyOrthogonalReport> {
    guards.check("nearly_orthogonal", guards.nearly_orthogonal, x.len() as u128)?;
    require_distinct(x)?;
    if let Some(i) = x.points().iter().position(|p| !dot(p, p).is_one()) {
        return invalid(format!("vector {i} does not have unit length"));
    }
    let n = x.len();
    let pts = x.points();
    let orth: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| dot(&pts[i], &pts[j]).is_zero()).collect()).collect();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if orth[i][j] {
                continue;
            }
            for k in j + 1..n {
                if !orth[i][k] && !orth[j][k] {
                    witness = Some([i, j, k]);
                    break 'outer;
                }
            }
        }
    }
    let nearly_orthogonal = witness.is_none();
    let bound = 2 * x.dim();
    let within_bound = n <= bound;
    if nearly_orthogonal && !within_bound {
        return Err(Error::TheoremViolation(format!("{n} nearly orthogonal unit vectors in dimension {}", x.dim())));
    }
    Ok(NearlyOrthogonalReport { vectors: n, d: x.dim(), nearly_orthogonal, witness, bound, within_bound })
}

#[derive(Debug, Clone, Serialize)]
pub struct ParsevalReport {
    /// Σ ⟨v, y⟩² over Y.
    pub lhs: String,
    /// ‖v‖².
    pub rhs: String,
    pub holds: bool,
}

/// Σ_{y∈Y} ⟨v, y⟩² ≤ ‖v‖² for an orthonormal Y.
pub fn parseval_check(v: &[BigRational], y: &PointConfig) -> Result<ParsevalReport> {
    if v.len() != y.dim() {
        return Err(Error::DimensionMismatch("vector and family dimensions differ".into()));
    }
    let pts = y.points();
    for i in 0..pts.len() {
        for j in i..pts.len() {
            let ip = dot(&pts[i], &pts[j]);
            if (i == j && !ip.is_one()) || (i != j && !ip.is_zero()) {
                return Err(Error::Precondition(format!("family is not orthonormal at ({i}, {j})")));
            }
        }
    }
    let lhs: BigRational = pts.iter().map(|p| dot(v, p)).map(|c| &c * &c).sum();
    let rhs = dot(v, v);
    let holds = lhs <= rhs;
    if !holds {
        return Err(Error::TheoremViolation("Parseval inequality fails".into()));
    }
    Ok(ParsevalReport { lhs: rational_to_string(&lhs), rhs: rational_to_string(&rhs), holds })
}

/// {x : normal · x = offset}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Point,
    pub offset: BigRational,
}

impl Hyperplane {
    pub fn new(normal: Point, offset: BigRational) -> Result<Self> {
        if normal.iter().all(Zero::is_zero) {
            return invalid("hyperplane normal is zero");
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Result<Self> {
        Self::new(normal.iter().map(|&x| BigRational::from_integer(x.into())).collect(), BigRational::from_integer(offset.into()))
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        dot(&self.normal, x) == self.offset
    }
}

#[derive(Serialize, Deserialize)]
struct HyperplaneJson {
    #[serde(deserialize_with = "crate::io::de_rationals")]
    normal: Vec<String>,
    #[serde(deserialize_with = "crate::io::de_rational")]
    offset: String,
}

impl Serialize for Hyperplane {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HyperplaneJson { normal: point_strings(&self.normal), offset: rational_to_string(&self.offset) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Hyperplane {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = HyperplaneJson::deserialize(de)?;
        let build = || -> Result<Hyperplane> {
            let normal = j.normal.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
            Hyperplane::new(normal, parse_rational(&j.offset)?)
        };
        build().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverReport {
    pub n: usize,
    pub m: usize,
    /// Hyperplanes through the origin.
    pub through_origin: Vec<usize>,
    pub misses_origin: bool,
    /// A nonzero cube vertex on none of the hyperplanes.
    #[serde(serialize_with = "ser_opt_bits")]
    pub uncovered: Option<Vec<bool>>,
    pub covers: bool,
    /// Covers {0,1}^n \ {0} and misses 0.
    pub valid: bool,
    /// m ≥ n for valid families.
    pub holds: bool,
}

fn ser_opt_bits<S: Serializer>(b: &Option<Vec<bool>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    b.as_ref().map(|v| v.iter().map(|&x| if x { '1' } else { '0' }).collect::<String>()).serialize(s)
}

pub fn hyperplane_cover_check(h: &[Hyperplane], n: usize, guards: &Guards) -> Result<CoverReport> {
    guards.check("grid_points", guards.grid_points, sat_pow(2, n as u32))?;
    if let Some(i) = h.iter().position(|p| p.normal.len() != n) {
        return Err(Error::DimensionMismatch(format!("hyperplane {i} is not in dimension {n}")));
    }
    let through_origin: Vec<usize> = (0..h.len()).filter(|&i| h[i].offset.is_zero()).collect();
    let misses_origin = through_origin.is_empty();
    let mut uncovered = None;
    for mask in 1u64..1 << n {
        let x: Point = (0..n).map(|i| if mask >> i & 1 == 1 { BigRational::one() } else { BigRational::zero() }).collect();
        if !h.iter().any(|p| p.contains(&x)) {
            uncovered = Some((0..n).map(|i| mask >> i & 1 == 1).collect());
            break;
        }
    }
    let covers = uncovered.is_none();
    let valid = covers && misses_origin;
    let holds = !valid || h.len() >= n;
    if !holds {
        return Err(Error::TheoremViolation(format!("{} hyperplanes cover the punctured {n}-cube", h.len())));
    }
    Ok(CoverReport { n, m: h.len(), through_origin, misses_origin, uncovered, covers, valid, holds })
}
