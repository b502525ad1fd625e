use super::lp::feasible_point;
use super::{
    axpy, check_dim, dot, lifted_rows, require_nonempty, ser_opt_point, ser_point, sub, ConvexCertificate, Point,
    PointConfig,
};
use crate::error::{invalid, Error, Result};
use crate::exactla::RationalMatrix;
use crate::guard::{sat_pow, Guards};
use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A convex combination of `P` equal to `target`, found by exact LP on
/// λ ≥ 0, Σλ = 1, Σλ_i p_i = target.
pub fn hull_membership(target: &[BigRational], p: &PointConfig) -> Result<Option<ConvexCertificate>> {
    check_dim(p, target)?;
    if p.is_empty() {
        return Ok(None);
    }
    let pts: Vec<&Point> = p.points().iter().collect();
    let a = lifted_rows(&pts, p.dim());
    let mut b = target.to_vec();
    b.push(BigRational::one());
    Ok(feasible_point(&a, &b)?.map(|x| {
        ConvexCertificate { indices: (0..x.len()).collect(), weights: x }.pruned()
    }))
}

/// Eliminate points while the lifted support vectors (p, 1) are dependent:
/// with β in the kernel, step to α − t₀β, t₀ = min over β_i > 0 of α_i/β_i.
pub fn caratheodory_reduce(cert: &ConvexCertificate, p: &PointConfig) -> Result<ConvexCertificate> {
    let target = cert.combination(p);
    if !cert.verify(p, &target) {
        return invalid("not a valid convex certificate for this configuration");
    }
    let mut cur = cert.clone().pruned();
    loop {
        let pts: Vec<&Point> = cur.indices.iter().map(|&i| p.point(i)).collect();
        let m = RationalMatrix::from_rows(lifted_rows(&pts, p.dim()))?;
        let Some(mut beta) = m.nullspace().into_iter().next() else { break };
        if !beta.iter().any(Signed::is_positive) {
            beta.iter_mut().for_each(|b| *b = -b.clone());
        }
        let (drop, t0) = beta
            .iter()
            .enumerate()
            .filter(|(_, b)| b.is_positive())
            .map(|(i, b)| (i, &cur.weights[i] / b))
            .min_by(|x, y| x.1.cmp(&y.1))
            .expect("β has a positive entry");
        for (w, b) in cur.weights.iter_mut().zip(&beta) {
            *w -= &t0 * b;
        }
        cur.weights[drop] = BigRational::zero();
        cur = cur.pruned();
    }
    debug_assert!(cur.verify(p, &target));
    Ok(cur)
}

#[derive(Debug, Clone, Serialize)]
pub struct RadonPartition {
    /// Indices with positive coefficient in the dependence.
    pub left: Vec<usize>,
    /// Indices with negative coefficient.
    pub right: Vec<usize>,
    /// Indices outside the support (free to join either side).
    pub rest: Vec<usize>,
    #[serde(serialize_with = "ser_point")]
    pub witness: Point,
    pub left_certificate: ConvexCertificate,
    pub right_certificate: ConvexCertificate,
}

/// Split the support of a kernel vector of the lifted (d+1) × m matrix by sign.
pub fn radon_partition(p: &PointConfig) -> Result<RadonPartition> {
    let d = p.dim();
    if p.len() < d + 2 {
        return invalid(format!("Radon partitions need at least d + 2 = {} points, got {}", d + 2, p.len()));
    }
    let pts: Vec<&Point> = p.points().iter().collect();
    let beta = RationalMatrix::from_rows(lifted_rows(&pts, d))?
        .nullspace()
        .into_iter()
        .next()
        .expect("more columns than rows");
    let left: Vec<usize> = (0..p.len()).filter(|&i| beta[i].is_positive()).collect();
    let right: Vec<usize> = (0..p.len()).filter(|&i| beta[i].is_negative()).collect();
    let rest: Vec<usize> = (0..p.len()).filter(|&i| beta[i].is_zero()).collect();
    let total: BigRational = left.iter().map(|&i| &beta[i]).sum();
    let left_certificate =
        ConvexCertificate { indices: left.clone(), weights: left.iter().map(|&i| &beta[i] / &total).collect() };
    let right_certificate =
        ConvexCertificate { indices: right.clone(), weights: right.iter().map(|&i| -&beta[i] / &total).collect() };
    let witness = left_certificate.combination(p);
    if !left_certificate.verify(p, &witness) || !right_certificate.verify(p, &witness) {
        return Err(Error::TheoremViolation("Radon certificates do not re-verify".into()));
    }
    Ok(RadonPartition { left, right, rest, witness, left_certificate, right_certificate })
}

/// A point in every hull, with one certificate per set.
pub(super) fn common_point(sets: &[&PointConfig]) -> Result<Option<(Point, Vec<ConvexCertificate>)>> {
    let d = sets[0].dim();
    let offsets: Vec<usize> = sets
        .iter()
        .scan(0, |acc, s| {
            let o = *acc;
            *acc += s.len();
            Some(o)
        })
        .collect();
    let n: usize = sets.iter().map(|s| s.len()).sum();
    let zero = BigRational::zero;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (j, s) in sets.iter().enumerate() {
        let mut row = vec![zero(); n];
        row[offsets[j]..offsets[j] + s.len()].iter_mut().for_each(|x| *x = BigRational::one());
        a.push(row);
        b.push(BigRational::one());
    }
    for j in 1..sets.len() {
        for k in 0..d {
            let mut row = vec![zero(); n];
            for (i, pt) in sets[j].points().iter().enumerate() {
                row[offsets[j] + i] = pt[k].clone();
            }
            for (i, pt) in sets[0].points().iter().enumerate() {
                row[offsets[0] + i] = -pt[k].clone();
            }
            a.push(row);
            b.push(zero());
        }
    }
    let Some(x) = feasible_point(&a, &b)? else { return Ok(None) };
    let certs: Vec<ConvexCertificate> = sets
        .iter()
        .enumerate()
        .map(|(j, s)| {
            ConvexCertificate { indices: (0..s.len()).collect(), weights: x[offsets[j]..offsets[j] + s.len()].to_vec() }
                .pruned()
        })
        .collect();
    let point = certs[0].combination(sets[0]);
    Ok(Some((point, certs)))
}

#[derive(Debug, Clone, Serialize)]
pub struct HellyReport {
    pub d: usize,
    pub sets: usize,
    pub subsets_checked: u64,
    /// Every min(d+1, #sets) of the hulls intersect.
    pub small_intersections: bool,
    pub failing_subset: Option<Vec<usize>>,
    #[serde(serialize_with = "ser_opt_point")]
    pub common_point: Option<Point>,
    pub certificates: Vec<ConvexCertificate>,
}

/// Hulls of finite point lists: test every (d+1)-subfamily, then the whole family.
pub fn helly_verify(sets: &[PointConfig], d: usize, guards: &Guards) -> Result<HellyReport> {
    guards.check("helly_sets", guards.helly_sets, sets.len() as u128)?;
    if sets.is_empty() {
        return invalid("no sets given");
    }
    for (i, s) in sets.iter().enumerate() {
        if s.dim() != d {
            return Err(Error::DimensionMismatch(format!("set {i} lives in dimension {}, expected {d}", s.dim())));
        }
        require_nonempty(s)?;
    }
    let k = (d + 1).min(sets.len());
    let mut report = HellyReport {
        d,
        sets: sets.len(),
        subsets_checked: 0,
        small_intersections: true,
        failing_subset: None,
        common_point: None,
        certificates: Vec::new(),
    };
    for idx in (0..sets.len()).combinations(k) {
        report.subsets_checked += 1;
        let family: Vec<&PointConfig> = idx.iter().map(|&i| &sets[i]).collect();
        if common_point(&family)?.is_none() {
            report.small_intersections = false;
            report.failing_subset = Some(idx);
            return Ok(report);
        }
    }
    let family: Vec<&PointConfig> = sets.iter().collect();
    let Some((point, certs)) = common_point(&family)? else {
        return Err(Error::TheoremViolation("every d+1 hulls meet but the whole family does not".into()));
    };
    report.common_point = Some(point);
    report.certificates = certs;
    Ok(report)
}

/// Nearest point of conv(pts) to `a`: the best of the projections onto the
/// affine hulls of the affinely independent faces that land inside the face.
/// Returns the point, its weights over `pts`, and the face used.
fn nearest_point(pts: &[&Point], a: &[BigRational]) -> Result<(Point, Vec<BigRational>, Vec<usize>)> {
    let k = pts.len();
    let mut best: Option<(BigRational, Point, Vec<BigRational>, Vec<usize>)> = None;
    for mask in 1u32..1 << k {
        let face: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).collect();
        let f0 = pts[face[0]];
        let diffs: Vec<Point> = face[1..].iter().map(|&i| sub(pts[i], f0)).collect();
        let mu = if diffs.is_empty() {
            Vec::new()
        } else {
            let g = RationalMatrix::from_rows(diffs.iter().map(|u| diffs.iter().map(|v| dot(u, v)).collect()).collect())?;
            if g.determinant()?.is_zero() {
                continue;
            }
            let r: Vec<BigRational> = diffs.iter().map(|u| dot(&sub(a, f0), u)).collect();
            g.solve(&r)?.expect("nonsingular system")
        };
        let lambda0 = BigRational::one() - mu.iter().sum::<BigRational>();
        if lambda0.is_negative() || mu.iter().any(Signed::is_negative) {
            continue;
        }
        let mut q = f0.clone();
        for (m, u) in mu.iter().zip(&diffs) {
            axpy(&mut q, m, u);
        }
        let gap = sub(&q, a);
        let dist = dot(&gap, &gap);
        if best.as_ref().map_or(true, |b| dist < b.0) {
            let mut w = vec![BigRational::zero(); k];
            w[face[0]] = lambda0;
            for (m, &i) in mu.into_iter().zip(&face[1..]) {
                w[i] = m;
            }
            best = Some((dist, q, w, face));
        }
    }
    let (_, q, w, face) = best.expect("single vertices are always candidate faces");
    Ok((q, w, face))
}

#[derive(Debug, Clone, Serialize)]
pub struct ColorfulReport {
    /// Chosen point index within each colour class.
    pub transversal: Vec<usize>,
    /// Convex weights on the transversal, one per colour.
    #[serde(serialize_with = "ser_point")]
    pub weights: Vec<BigRational>,
    pub swaps: u64,
    /// "swap" (local search) or "exhaustive".
    pub route: &'static str,
}

impl ColorfulReport {
    pub fn verify(&self, classes: &[PointConfig], a: &[BigRational]) -> bool {
        let cfg = match PointConfig::new(
            a.len(),
            self.transversal.iter().zip(classes).map(|(&t, c)| c.point(t).clone()).collect(),
        ) {
            Ok(c) => c,
            Err(_) => return false,
        };
        ConvexCertificate { indices: (0..cfg.len()).collect(), weights: self.weights.clone() }.verify(&cfg, a)
    }
}

/// Given a ∈ conv(M_i) for each of the d+1 classes, find a transversal whose
/// hull contains a.
pub fn colorful_caratheodory(classes: &[PointConfig], a: &[BigRational], guards: &Guards) -> Result<ColorfulReport> {
    let d = a.len();
    if classes.len() != d + 1 {
        return invalid(format!("need d + 1 = {} colour classes, got {}", d + 1, classes.len()));
    }
    for (i, c) in classes.iter().enumerate() {
        if c.dim() != d {
            return Err(Error::DimensionMismatch(format!("class {i} lives in dimension {}, expected {d}", c.dim())));
        }
        guards.check("colour_class", guards.colour_class, c.len() as u128)?;
        if hull_membership(a, c)?.is_none() {
            return Err(Error::Precondition(format!("the target is not in the hull of colour class {i}")));
        }
    }
    colorful_search(classes, a)
}

fn colorful_search(classes: &[PointConfig], a: &[BigRational]) -> Result<ColorfulReport> {
    let k = classes.len();
    let stall_limit = classes.iter().fold(1u64, |acc, c| acc.saturating_mul(c.len() as u64));
    let mut t = vec![0usize; k];
    let mut swaps = 0u64;
    'search: while swaps <= stall_limit {
        let pts: Vec<&Point> = t.iter().zip(classes).map(|(&j, c)| c.point(j)).collect();
        let (q, weights, face) = nearest_point(&pts, a)?;
        if q == a {
            return Ok(ColorfulReport { transversal: t, weights, swaps, route: "swap" });
        }
        // Everything in conv(face) lies on the near side of the hyperplane
        // through q normal to a − q; a colour outside the face has a point on
        // the far side because a is in its hull.
        let w = sub(a, &q);
        for i in (0..k).filter(|i| !face.contains(i)) {
            if let Some(j) = (0..classes[i].len()).find(|&j| dot(&w, &sub(classes[i].point(j), &q)).is_positive()) {
                t[i] = j;
                swaps += 1;
                continue 'search;
            }
        }
        break;
    }
    // Stalled: scan every transversal.
    for choice in classes.iter().map(|c| 0..c.len()).multi_cartesian_product() {
        let cfg = PointConfig::new(a.len(), choice.iter().zip(classes).map(|(&j, c)| c.point(j).clone()).collect())?;
        if let Some(cert) = hull_membership(a, &cfg)? {
            let mut weights = vec![BigRational::zero(); k];
            for (i, w) in cert.indices.into_iter().zip(cert.weights) {
                weights[i] = w;
            }
            return Ok(ColorfulReport { transversal: choice, weights, swaps, route: "exhaustive" });
        }
    }
    Err(Error::TheoremViolation("no colourful transversal contains the target".into()))
}

#[derive(Debug, Clone, Serialize)]
pub struct TverbergReport {
    pub r: usize,
    pub parts: Vec<Vec<usize>>,
    #[serde(serialize_with = "ser_point")]
    pub point: Point,
    /// One certificate per part; indices refer to the input configuration.
    pub certificates: Vec<ConvexCertificate>,
    /// "radon", "colorful" or "exhaustive".
    pub route: &'static str,
}

impl TverbergReport {
    pub fn verify(&self, s: &PointConfig) -> bool {
        let mut seen = vec![false; s.len()];
        for part in &self.parts {
            for &i in part {
                if i >= s.len() || seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        self.parts.len() == self.r
            && seen.iter().all(|&x| x)
            && self.parts.iter().zip(&self.certificates).all(|(part, c)| {
                c.indices.iter().all(|i| part.contains(i)) && c.verify(s, &self.point)
            })
    }
}

fn tverberg_need(s: &PointConfig, r: usize) -> Result<usize> {
    if r == 0 {
        return invalid("r must be positive");
    }
    let need = (r - 1) * (s.dim() + 1) + 1;
    if s.len() < need {
        return invalid(format!("{} points are too few for r = {r} in dimension {}: need {need}", s.len(), s.dim()));
    }
    Ok(need)
}

/// Partition into r parts with a common hull point. r = 2 is Radon; r ≥ 3
/// lifts (p, 1) ⊗ y_j into dimension (r−1)(d+1), with y_1..y_{r−1} the unit
/// vectors and y_r = −Σ y_j, and runs the colourful search around 0.
pub fn tverberg_partition(s: &PointConfig, r: usize, guards: &Guards) -> Result<TverbergReport> {
    let need = tverberg_need(s, r)?;
    let d = s.dim();
    let n = s.len();
    let report = if r == 1 {
        TverbergReport {
            r,
            parts: vec![(0..n).collect()],
            point: s.point(0).clone(),
            certificates: vec![ConvexCertificate { indices: vec![0], weights: vec![BigRational::one()] }],
            route: "trivial",
        }
    } else if r == 2 {
        let rp = radon_partition(&s.subset(&(0..need).collect::<Vec<_>>()))?;
        let mut left = rp.left.clone();
        left.extend(rp.rest.iter().copied().chain(need..n));
        left.sort_unstable();
        TverbergReport {
            r,
            parts: vec![left, rp.right.clone()],
            point: rp.witness,
            certificates: vec![rp.left_certificate, rp.right_certificate],
            route: "radon",
        }
    } else {
        guards.check("colour_class", guards.colour_class, r as u128)?;
        let dim = (r - 1) * (d + 1);
        let y = |j: usize, l: usize| -> i64 {
            if j == r - 1 {
                -1
            } else {
                (j == l) as i64
            }
        };
        let classes: Vec<PointConfig> = (0..need)
            .map(|i| {
                let mut lift = s.point(i).clone();
                lift.push(BigRational::one());
                let pts = (0..r)
                    .map(|j| {
                        let mut v = Vec::with_capacity(dim);
                        for c in &lift {
                            for l in 0..r - 1 {
                                v.push(c * BigRational::from_integer(y(j, l).into()));
                            }
                        }
                        v
                    })
                    .collect();
                PointConfig::new(dim, pts)
            })
            .collect::<Result<_>>()?;
        let found = colorful_search(&classes, &vec![BigRational::zero(); dim])?;
        let mut parts = vec![Vec::new(); r];
        for (i, &j) in found.transversal.iter().enumerate() {
            parts[j].push(i);
        }
        parts[0].extend(need..n);
        // Each part carries total weight 1/r; renormalise within parts.
        let certificates: Vec<ConvexCertificate> = parts
            .iter()
            .map(|part| {
                let idx: Vec<usize> = part.iter().copied().filter(|&i| i < need && found.weights[i].is_positive()).collect();
                let total: BigRational = idx.iter().map(|&i| &found.weights[i]).sum();
                let weights = idx.iter().map(|&i| &found.weights[i] / &total).collect();
                ConvexCertificate { indices: idx, weights }
            })
            .collect();
        if certificates.iter().any(|c| c.indices.is_empty()) {
            return Err(Error::TheoremViolation("colourful transversal left a part without weight".into()));
        }
        let point = certificates[0].combination(s);
        TverbergReport { r, parts, point, certificates, route: "colorful" }
    };
    if !report.verify(s) {
        return Err(Error::TheoremViolation("Tverberg certificates do not re-verify".into()));
    }
    Ok(report)
}

/// Exhaustive scan over assignments to r labelled-by-first-use parts.
pub fn tverberg_brute(s: &PointConfig, r: usize, guards: &Guards) -> Result<Option<TverbergReport>> {
    tverberg_need(s, r)?;
    let n = s.len();
    guards.check("tverberg_partitions", guards.tverberg_partitions, sat_pow(r as u128, n as u32))?;
    let mut label = vec![0usize; n];
    loop {
        // Restricted growth: label[i] ≤ 1 + max(label[..i]).
        let used = label.iter().max().map_or(0, |&m| m + 1);
        if used == r {
            let parts: Vec<Vec<usize>> = (0..r).map(|j| (0..n).filter(|&i| label[i] == j).collect()).collect();
            let hulls: Vec<PointConfig> = parts.iter().map(|p| s.subset(p)).collect();
            let refs: Vec<&PointConfig> = hulls.iter().collect();
            if let Some((point, certs)) = common_point(&refs)? {
                let certificates = certs
                    .into_iter()
                    .zip(&parts)
                    .map(|(c, p)| ConvexCertificate { indices: c.indices.iter().map(|&k| p[k]).collect(), weights: c.weights })
                    .collect();
                return Ok(Some(TverbergReport { r, parts, point, certificates, route: "exhaustive" }));
            }
        }
        // Next restricted-growth string with at most r labels.
        let mut i = n;
        loop {
            if i == 1 {
                return Ok(None);
            }
            i -= 1;
            let cap = label[..i].iter().max().map_or(0, |&m| m + 1).min(r - 1);
            if label[i] < cap {
                label[i] += 1;
                label[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::parse_rational;
    use rand::Rng;

    fn pc(d: usize, pts: &[Vec<i64>]) -> PointConfig {
        PointConfig::from_i64(d, pts).unwrap()
    }

    fn pt(s: &[&str]) -> Point {
        s.iter().map(|x| parse_rational(x).unwrap()).collect()
    }

    fn square() -> PointConfig {
        pc(2, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])
    }

    pub(crate) fn random_config(rng: &mut impl Rng, d: usize, n: usize) -> PointConfig {
        let pts = (0..n)
            .map(|_| (0..d).map(|_| BigRational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=4).into())).collect())
            .collect();
        PointConfig::new(d, pts).unwrap()
    }

    #[test]
    fn hull_examples() {
        let sq = square();
        let c = hull_membership(&pt(&["1/2", "1/2"]), &sq).unwrap().unwrap();
        assert!(c.verify(&sq, &pt(&["1/2", "1/2"])));
        assert!(hull_membership(&pt(&["2", "0"]), &sq).unwrap().is_none());
        let c = hull_membership(&pt(&["1/4", "1/4"]), &sq).unwrap().unwrap();
        assert!(c.verify(&sq, &pt(&["1/4", "1/4"])));
        assert!(hull_membership(&pt(&["1"]), &sq).is_err());
    }

    #[test]
    fn caratheodory_examples() {
        let sq = square();
        let centre = pt(&["1/2", "1/2"]);
        let full = ConvexCertificate { indices: vec![0, 1, 2, 3], weights: vec![BigRational::new(1.into(), 4.into()); 4] };
        assert!(full.verify(&sq, &centre));
        let red = caratheodory_reduce(&full, &sq).unwrap();
        assert!(red.support() <= 3 && red.verify(&sq, &centre));

        let tri = ConvexCertificate { indices: vec![0, 1, 2], weights: vec![BigRational::new(1.into(), 3.into()); 3] };
        assert_eq!(caratheodory_reduce(&tri, &sq).unwrap(), tri);

        let line = pc(2, &[vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 3], vec![4, 4]]);
        let mid = ConvexCertificate { indices: (0..5).collect(), weights: vec![BigRational::new(1.into(), 5.into()); 5] };
        let red = caratheodory_reduce(&mid, &line).unwrap();
        assert!(red.support() <= 2 && red.verify(&line, &pt(&["2", "2"])));

        let bad = ConvexCertificate { indices: vec![0], weights: vec![BigRational::new(1.into(), 2.into())] };
        assert!(caratheodory_reduce(&bad, &sq).is_err());
    }

    #[test]
    fn radon_examples() {
        let r = radon_partition(&square()).unwrap();
        let mut sides = [r.left.clone(), r.right.clone()];
        sides.sort();
        assert_eq!(sides, [vec![0, 3], vec![1, 2]]);
        assert_eq!(r.witness, pt(&["1/2", "1/2"]));

        let r = radon_partition(&pc(1, &[vec![0], vec![1], vec![2]])).unwrap();
        let mut sides = [r.left.clone(), r.right.clone()];
        sides.sort();
        assert_eq!(sides, [vec![0, 2], vec![1]]);
        assert_eq!(r.witness, pt(&["1"]));

        let p = pc(2, &[vec![0, 0], vec![1, 1], vec![2, 2], vec![5, -3]]);
        let r = radon_partition(&p).unwrap();
        assert!(r.left_certificate.verify(&p, &r.witness) && r.right_certificate.verify(&p, &r.witness));
        assert!(radon_partition(&pc(2, &[vec![0, 0], vec![1, 0], vec![0, 1]])).is_err());
    }

    #[test]
    fn radon_random() {
        let mut rng = crate::rng(11);
        for trial in 0..100 {
            let d = 1 + trial % 4;
            let p = random_config(&mut rng, d, d + 2 + trial % 3);
            let r = radon_partition(&p).unwrap();
            assert!(!r.left.is_empty() && !r.right.is_empty());
        }
    }

    #[test]
    fn helly_examples() {
        let g = Guards::default();
        let iv = |a: i64, b: i64| pc(1, &[vec![a], vec![b]]);
        let r = helly_verify(&[iv(0, 4), iv(2, 6), iv(3, 8)], 1, &g).unwrap();
        let x = r.common_point.unwrap();
        assert!(x[0] >= BigRational::from_integer(3.into()) && x[0] <= BigRational::from_integer(4.into()));

        // four triangles around (0, 0)
        let tris: Vec<PointConfig> = (0..4)
            .map(|k| pc(2, &[vec![-1 - k, -1], vec![3 + k, -1 - k], vec![0, 2 + k]]))
            .collect();
        let r = helly_verify(&tris, 2, &g).unwrap();
        let x = r.common_point.clone().unwrap();
        for (t, c) in tris.iter().zip(&r.certificates) {
            assert!(c.verify(t, &x));
        }

        let r = helly_verify(&[iv(0, 1), iv(2, 3), iv(0, 3)], 1, &g).unwrap();
        assert!(!r.small_intersections && r.common_point.is_none());
        assert_eq!(r.failing_subset, Some(vec![0, 1]));
    }

    #[test]
    fn colorful_examples() {
        let g = Guards::default();
        let r = colorful_caratheodory(&[pc(1, &[vec![-1], vec![5]]), pc(1, &[vec![1], vec![-2]])], &pt(&["0"]), &g).unwrap();
        assert_eq!(r.transversal, vec![0, 0]);
        assert_eq!(r.weights, vec![BigRational::new(1.into(), 2.into()); 2]);

        let a = pt(&["1", "2"]);
        let classes: Vec<PointConfig> = (0..3).map(|k| pc(2, &[vec![k, 7], vec![1, 2]])).collect();
        let r = colorful_caratheodory(&classes, &a, &g).unwrap();
        assert!(r.verify(&classes, &a));

        let err = colorful_caratheodory(&[pc(1, &[vec![1]]), pc(1, &[vec![-1], vec![1]])], &pt(&["0"]), &g);
        assert!(matches!(err, Err(Error::Precondition(m)) if m.contains("class 0")));
    }

    #[test]
    fn colorful_random_agrees_with_exhaustive() {
        let g = Guards::default();
        let mut rng = crate::rng(5);
        let origin = vec![BigRational::zero(); 2];
        let mut done = 0;
        while done < 30 {
            let classes: Vec<PointConfig> = (0..3).map(|_| random_config(&mut rng, 2, 3)).collect();
            if classes.iter().any(|c| hull_membership(&origin, c).unwrap().is_none()) {
                continue;
            }
            done += 1;
            let r = colorful_caratheodory(&classes, &origin, &g).unwrap();
            assert!(r.verify(&classes, &origin));
            let any = classes.iter().map(|c| 0..c.len()).multi_cartesian_product().any(|t| {
                let cfg = PointConfig::new(2, t.iter().zip(&classes).map(|(&j, c)| c.point(j).clone()).collect()).unwrap();
                hull_membership(&origin, &cfg).unwrap().is_some()
            });
            assert!(any);
        }
    }

    #[test]
    fn tverberg_examples() {
        let g = Guards::default();
        let line = pc(1, &[vec![1], vec![2], vec![3], vec![4], vec![5]]);
        let r = tverberg_partition(&line, 3, &g).unwrap();
        assert!(r.verify(&line));
        assert_eq!(r.point, pt(&["3"]));
        let b = tverberg_brute(&line, 3, &g).unwrap().unwrap();
        assert!(b.verify(&line) && b.point == pt(&["3"]));

        let r = tverberg_partition(&square(), 2, &g).unwrap();
        assert_eq!(r.route, "radon");
        assert!(r.verify(&square()));
        assert!(tverberg_partition(&square(), 3, &g).is_err());
    }

    #[test]
    fn tverberg_random_planar() {
        let g = Guards::default();
        let mut rng = crate::rng(3);
        for _ in 0..5 {
            let s = random_config(&mut rng, 2, 7);
            let r = tverberg_partition(&s, 3, &g).unwrap();
            assert!(r.verify(&s));
            for (part, c) in r.parts.iter().zip(&r.certificates) {
                let hull = s.subset(part);
                assert!(hull_membership(&r.point, &hull).unwrap().is_some());
                assert!(c.verify(&s, &r.point));
            }
            assert!(tverberg_brute(&s, 3, &g).unwrap().unwrap().verify(&s));
        }
    }
}
