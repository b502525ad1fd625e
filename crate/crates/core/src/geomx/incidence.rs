use super::{point_strings, require_nonempty, sub, Point, PointConfig};
use crate::error::{invalid, Error, Result};
use crate::exactla::{parse_rational, RationalMatrix};
use crate::guard::Guards;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};

/// A line in ℚ³ in canonical form: the direction's first nonzero coordinate
/// is 1 and the base has a 0 in that coordinate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LineR3 {
    base: Point,
    dir: Point,
}

impl LineR3 {
    pub fn new(base: Point, dir: Point) -> Result<Self> {
        if base.len() != 3 || dir.len() != 3 {
            return Err(Error::DimensionMismatch("lines live in R^3".into()));
        }
        let Some(k) = dir.iter().position(|x| !x.is_zero()) else {
            return invalid("line direction is zero");
        };
        let lead = dir[k].clone();
        let dir: Point = dir.iter().map(|x| x / &lead).collect();
        let t = base[k].clone();
        let base = base.iter().zip(&dir).map(|(b, v)| b - &t * v).collect();
        Ok(LineR3 { base, dir })
    }

    pub fn from_i64(base: [i64; 3], dir: [i64; 3]) -> Result<Self> {
        let r = |v: [i64; 3]| v.iter().map(|&x| BigRational::from_integer(x.into())).collect();
        Self::new(r(base), r(dir))
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn dir(&self) -> &Point {
        &self.dir
    }

    pub fn contains(&self, p: &[BigRational]) -> bool {
        let k = self.dir.iter().position(|x| !x.is_zero()).expect("nonzero direction");
        let off = sub(p, &self.base);
        let t = &off[k];
        off.iter().zip(&self.dir).all(|(o, v)| *o == t * v)
    }

    /// The unique common point of two non-parallel lines, if they meet.
    pub fn intersect(&self, other: &LineR3) -> Option<Point> {
        if self.dir == other.dir {
            return None;
        }
        let m = RationalMatrix::from_rows((0..3).map(|i| vec![self.dir[i].clone(), -other.dir[i].clone()]).collect())
            .expect("3x2");
        let st = m.solve(&sub(&other.base, &self.base)).expect("shapes agree")?;
        Some(self.base.iter().zip(&self.dir).map(|(b, v)| b + &st[0] * v).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct LineJson {
    #[serde(deserialize_with = "crate::io::de_rationals")]
    base: Vec<String>,
    #[serde(deserialize_with = "crate::io::de_rationals")]
    dir: Vec<String>,
}

impl Serialize for LineR3 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LineJson { base: point_strings(&self.base), dir: point_strings(&self.dir) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineR3 {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let j = LineJson::deserialize(de)?;
        let parse = |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>();
        let (base, dir) = (parse(&j.base), parse(&j.dir));
        base.and_then(|b| dir.and_then(|d| LineR3::new(b, d))).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JointsReport {
    /// Distinct lines N.
    pub lines: usize,
    pub joints: usize,
    /// Points on ≥ 2 lines, joints or not.
    pub intersection_points: usize,
    /// N^(3/2).
    pub n_three_halves: f64,
    /// J / N^(3/2).
    pub ratio: f64,
}

/// Points lying on three lines with linearly independent directions.
pub fn joints(lines: &[LineR3], guards: &Guards) -> Result<JointsReport> {
    guards.check("joints_lines", guards.joints_lines, lines.len() as u128)?;
    let distinct: Vec<&LineR3> = lines.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut through: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..distinct.len() {
        for j in i + 1..distinct.len() {
            if let Some(p) = distinct[i].intersect(distinct[j]) {
                through.entry(p).or_default().extend([i, j]);
            }
        }
    }
    let joints = through
        .values()
        .filter(|ls| {
            ls.len() >= 3
                && RationalMatrix::from_rows(ls.iter().map(|&l| distinct[l].dir.clone()).collect())
                    .expect("rows of length 3")
                    .rank()
                    == 3
        })
        .count();
    let n = distinct.len();
    let n_three_halves = (n as f64).powf(1.5);
    Ok(JointsReport {
        lines: n,
        joints,
        intersection_points: through.len(),
        n_three_halves,
        ratio: if n == 0 { 0.0 } else { joints as f64 / n_three_halves },
    })
}

/// The 3n² axis-parallel lines through {1..n}³, with n³ joints.
pub fn joints_grid(n: u32) -> (Vec<LineR3>, u64) {
    let mut lines = Vec::new();
    for axis in 0..3 {
        for a in 1..=n as i64 {
            for b in 1..=n as i64 {
                let mut base = [0i64; 3];
                let others: Vec<usize> = (0..3).filter(|&k| k != axis).collect();
                base[others[0]] = a;
                base[others[1]] = b;
                let mut dir = [0i64; 3];
                dir[axis] = 1;
                lines.push(LineR3::from_i64(base, dir).expect("nonzero direction"));
            }
        }
    }
    (lines, (n as u64).pow(3))
}

#[derive(Debug, Clone, Serialize)]
pub struct SylvesterReport {
    pub points: usize,
    /// Distinct lines through at least two of the points.
    pub lines: usize,
    pub collinear: bool,
    /// lines ≥ points, or the set is collinear.
    pub holds: bool,
}

/// a x + b y = c with coprime integers, (a, b) lexicographically positive.
fn line_key(p: &[BigRational], q: &[BigRational]) -> [BigInt; 3] {
    let a = &q[1] - &p[1];
    let b = &p[0] - &q[0];
    let c = &a * &p[0] + &b * &p[1];
    let l = [&a, &b, &c].iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let lr = BigRational::from_integer(l);
    let mut v = [a, b, c].map(|x| (x * &lr).to_integer());
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    let flip = v[0].is_negative() || (v[0].is_zero() && v[1].is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if flip {
            *x = -&*x;
        }
    }
    v
}

pub fn sylvester_count(x: &PointConfig, guards: &Guards) -> Result<SylvesterReport> {
    if x.dim() != 2 {
        return Err(Error::DimensionMismatch(format!("line counting is planar, got dimension {}", x.dim())));
    }
    require_nonempty(x)?;
    guards.check("sylvester_points", guards.sylvester_points, x.len() as u128)?;
    let pts = x.points();
    if pts.iter().collect::<BTreeSet<_>>().len() != pts.len() {
        return invalid("points must be distinct");
    }
    let mut keys = BTreeSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            keys.insert(line_key(&pts[i], &pts[j]));
        }
    }
    let m = pts.len();
    let lines = keys.len();
    let collinear = lines <= 1;
    let holds = collinear || lines >= m;
    if !holds {
        return Err(Error::TheoremViolation(format!("{m} non-collinear points span only {lines} lines")));
    }
    Ok(SylvesterReport { points: m, lines, collinear, holds })
}
