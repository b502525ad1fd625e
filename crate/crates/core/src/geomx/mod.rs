//! Discrete and convex geometry with exact rational certificates.

mod center;
mod convex;
mod distance;
mod incidence;
mod jl;
mod lp;

pub use center::{centerpoint, halfspace_depth, CenterpointReport, DepthReport};
pub use convex::{
    caratheodory_reduce, colorful_caratheodory, helly_verify, hull_membership, radon_partition,
    tverberg_brute, tverberg_partition, ColorfulReport, HellyReport, RadonPartition, TverbergReport,
};
pub use distance::{
    hyperplane_cover_check, nearly_orthogonal_check, parseval_check, two_distance_check, two_distance_example,
    CoverReport, Hyperplane, NearlyOrthogonalReport, ParsevalReport, TwoDistanceReport,
};
pub use incidence::{joints, joints_grid, sylvester_count, JointsReport, LineR3, SylvesterReport};
pub use jl::{jl1_check, jl2_check, jl_project, jl_rank_checks, Jl1Case, Jl2Case, JlProjection, JlRankReport};
pub use lp::feasible_point;

use crate::error::{invalid, Error, Result};
use crate::exactla::{parse_rational, rational_to_string};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

pub type Point = Vec<BigRational>;

/// Finite point set in ℚ^d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig {
    d: usize,
    points: Vec<Point>,
}

impl PointConfig {
    pub fn new(d: usize, points: Vec<Point>) -> Result<Self> {
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(Error::DimensionMismatch(format!("point {i} has {} coordinates, expected {d}", p.len())));
        }
        Ok(PointConfig { d, points })
    }

    pub fn from_i64(d: usize, points: &[Vec<i64>]) -> Result<Self> {
        Self::new(d, points.iter().map(|p| p.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
    }

    pub fn from_strings(d: usize, points: &[Vec<String>]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, pts)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn subset(&self, idx: &[usize]) -> PointConfig {
        PointConfig { d: self.d, points: idx.iter().map(|&i| self.points[i].clone()).collect() }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.points.iter().map(|p| point_strings(p)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PointConfigJson {
    d: usize,
    #[serde(deserialize_with = "crate::io::de_rational_rows")]
    points: Vec<Vec<String>>,
}

impl Serialize for PointConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointConfigJson { d: self.d, points: self.to_strings() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointConfig {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = PointConfigJson::deserialize(de)?;
        PointConfig::from_strings(j.d, &j.points).map_err(serde::de::Error::custom)
    }
}

/// target = Σ weights[k] · P[indices[k]], weights ≥ 0 summing to 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvexCertificate {
    pub indices: Vec<usize>,
    #[serde(serialize_with = "ser_point")]
    pub weights: Vec<BigRational>,
}

impl ConvexCertificate {
    pub fn support(&self) -> usize {
        self.indices.len()
    }

    /// Exact re-summation; no tolerance.
    pub fn verify(&self, p: &PointConfig, target: &[BigRational]) -> bool {
        if self.indices.len() != self.weights.len()
            || target.len() != p.d
            || self.indices.iter().any(|&i| i >= p.len())
            || self.weights.iter().any(Signed::is_negative)
        {
            return false;
        }
        let total: BigRational = self.weights.iter().sum();
        if !total.is_one() {
            return false;
        }
        self.combination(p) == target
    }

    pub fn combination(&self, p: &PointConfig) -> Point {
        let mut acc = vec![BigRational::zero(); p.d];
        for (&i, w) in self.indices.iter().zip(&self.weights) {
            axpy(&mut acc, w, &p.points[i]);
        }
        acc
    }

    /// Drop zero weights.
    fn pruned(self) -> Self {
        let (indices, weights) =
            self.indices.into_iter().zip(self.weights).filter(|(_, w)| !w.is_zero()).unzip();
        ConvexCertificate { indices, weights }
    }
}

pub(crate) fn point_strings(p: &[BigRational]) -> Vec<String> {
    p.iter().map(rational_to_string).collect()
}

pub(crate) fn ser_point<S: Serializer>(p: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    point_strings(p).serialize(s)
}

pub(crate) fn ser_opt_point<S: Serializer>(p: &Option<Point>, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.as_ref().map(|p| point_strings(p)).serialize(s)
}

pub(crate) fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// acc += w·x
pub(crate) fn axpy(acc: &mut [BigRational], w: &BigRational, x: &[BigRational]) {
    for (a, b) in acc.iter_mut().zip(x) {
        *a += w * b;
    }
}

/// (p, 1) for each point, as the columns of a (d+1) × m matrix given row by row.
pub(crate) fn lifted_rows(pts: &[&Point], d: usize) -> Vec<Vec<BigRational>> {
    let mut rows: Vec<Vec<BigRational>> = (0..d).map(|k| pts.iter().map(|p| p[k].clone()).collect()).collect();
    rows.push(vec![BigRational::one(); pts.len()]);
    rows
}

fn check_dim(p: &PointConfig, target: &[BigRational]) -> Result<()> {
    if target.len() != p.d {
        return Err(Error::DimensionMismatch(format!("target has {} coordinates, expected {}", target.len(), p.d)));
    }
    Ok(())
}

fn require_nonempty(p: &PointConfig) -> Result<()> {
    if p.is_empty() {
        return invalid("empty point configuration");
    }
    Ok(())
}
