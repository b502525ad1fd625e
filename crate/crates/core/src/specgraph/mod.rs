//! Graphs, adjacency spectra and the spectral bounds built on them.

mod chromatic;
mod consistent;
mod friendship;
mod graph;
mod iso;
mod sensitivity;

pub use chromatic::{
    chromatic_number, chromatic_polynomial, count_colourings_brute, greedy_coloring_bound, ChromaticPolynomial,
    GreedyReport,
};
pub use consistent::{consistent_coloring, consistent_coloring_search, is_consistent, ConsistentColoring};
pub use friendship::{friendship_brute_scan, friendship_check, is_windmill, windmill, FriendshipScan};
pub use graph::Graph;
pub use iso::{canonical_form, find_isomorphism, isomorphic};
pub use sensitivity::{
    hypercube, sensitivity_check, signed_hypercube, signed_maxdeg_bound, SensitivityReport, SignedAdjacency,
    SignedBound,
};

use crate::error::{invalid, Error, Result};
use crate::exactla::{binomial_u128, sym_eigenvalues_f64, IntMatrix, RationalMatrix, SymSpectrum, SPECTRUM_TOL};
use crate::guard::Guards;
use itertools::Itertools;
use serde::Serialize;

/// Outer 5-cycle 0..5, spokes i — i+5, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, e).expect("valid endpoints")
}

/// r-subsets of [m] in lexicographic order (1-indexed elements).
pub fn kneser_vertices(m: usize, r: usize) -> Vec<Vec<usize>> {
    (1..=m).combinations(r).collect()
}

/// K(m, r): r-subsets of [m], adjacent when disjoint.
pub fn kneser(m: usize, r: usize) -> Result<Graph> {
    if r == 0 || r > m {
        return invalid(format!("kneser({m}, {r}) needs m ≥ r ≥ 1"));
    }
    if binomial_u128(m as u64, r as u64) > 1 << 16 {
        return invalid(format!("kneser({m}, {r}) has too many vertices"));
    }
    let masks: Vec<u64> = kneser_vertices(m, r).iter().map(|s| s.iter().fold(0, |a, &x| a | 1 << x)).collect();
    let mut e = Vec::new();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] == 0 {
                e.push((i, j));
            }
        }
    }
    Graph::new(masks.len(), e)
}

/// Adjacency spectrum, descending.
pub fn spectrum(g: &Graph, guards: &Guards) -> Result<SymSpectrum> {
    guards.check("eigen_order", guards.eigen_order, g.n() as u128)?;
    sym_eigenvalues_f64(g.n(), &g.adjacency().to_f64(), 0.0)
}

/// Kneser eigenvalues (−1)^i C(m−r−i, r−i) with multiplicity C(m,i) − C(m,i−1), i = 0..=r.
pub fn kneser_spectrum_formula(m: usize, r: usize) -> Result<Vec<(i64, u64)>> {
    if r == 0 || m < 2 * r {
        return invalid(format!("Kneser spectrum formula needs m ≥ 2r ≥ 2, got ({m}, {r})"));
    }
    let (m, r) = (m as u64, r as u64);
    Ok((0..=r)
        .map(|i| {
            let mag = binomial_u128(m - r - i, r - i) as i64;
            let mult = binomial_u128(m, i) - if i == 0 { 0 } else { binomial_u128(m, i - 1) };
            (if i % 2 == 0 { mag } else { -mag }, mult as u64)
        })
        .collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct KneserSpectrumCheck {
    pub m: usize,
    pub r: usize,
    pub formula: Vec<(i64, u64)>,
    pub numeric: Vec<f64>,
    pub matches: bool,
}

/// Compare the formula with the numeric spectrum of kneser(m, r).
pub fn kneser_spectrum_check(m: usize, r: usize, guards: &Guards) -> Result<KneserSpectrumCheck> {
    let formula = kneser_spectrum_formula(m, r)?;
    let spec = spectrum(&kneser(m, r)?, guards)?;
    let expanded: Vec<f64> =
        formula.iter().flat_map(|&(v, k)| std::iter::repeat(v as f64).take(k as usize)).collect();
    let matches = spec.matches(&expanded, SPECTRUM_TOL);
    Ok(KneserSpectrumCheck { m, r, formula, numeric: spec.eigenvalues, matches })
}

#[derive(Debug, Clone, Serialize)]
pub struct HoffmanBound {
    pub n: usize,
    pub d: usize,
    pub lambda_min: f64,
    pub bound: f64,
}

/// n(−λ_min)/(d − λ_min) for a d-regular graph.
pub fn hoffman_bound(g: &Graph, guards: &Guards) -> Result<HoffmanBound> {
    let d = g.regular_degree().ok_or_else(|| Error::InvalidInput("Hoffman bound needs a regular graph".into()))?;
    let lambda_min = spectrum(g, guards)?.min().unwrap_or(0.0);
    let n = g.n();
    let bound = if d == 0 { n as f64 } else { n as f64 * -lambda_min / (d as f64 - lambda_min) };
    Ok(HoffmanBound { n, d, lambda_min, bound })
}

/// Exact independence number with a maximum independent set (lowest vertices preferred).
pub fn independence_brute(g: &Graph, guards: &Guards) -> Result<(usize, Vec<usize>)> {
    guards.check("independence_vertices", guards.independence_vertices.min(64), g.n() as u128)?;
    let adj = g.neighbour_masks();
    let loops: u64 = g.edges().iter().filter(|&&(u, v)| u == v).fold(0, |a, &(u, _)| a | 1 << u);
    fn go(cand: u64, cur: u64, adj: &[u64], best: &mut u64) {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        go(cand & !(1 << v) & !adj[v], cur | 1 << v, adj, best);
        go(cand & !(1 << v), cur, adj, best);
    }
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0u64;
    go(all & !loops, 0, &adj, &mut best);
    Ok((best.count_ones() as usize, (0..g.n()).filter(|&v| best >> v & 1 == 1).collect()))
}

#[derive(Debug, Clone, Serialize)]
pub struct EkrReport {
    pub m: usize,
    pub r: usize,
    pub n: u128,
    pub d: u128,
    pub lambda_min: i128,
    /// n(−λ)/(d − λ) reduced to lowest terms.
    pub bound: String,
    pub expected: u128,
    /// Hoffman bound computed from the numeric spectrum when the graph is small enough.
    pub numeric_bound: Option<f64>,
    pub holds: bool,
}

/// Hoffman bound of K(m, r) from its exact spectrum, compared with C(m−1, r−1).
pub fn ekr_via_kneser(m: usize, r: usize, guards: &Guards) -> Result<EkrReport> {
    let formula = kneser_spectrum_formula(m, r)?;
    let (mu, ru) = (m as u64, r as u64);
    let n = binomial_u128(mu, ru);
    let d = formula[0].0 as u128;
    let lambda_min = formula.iter().map(|&(v, _)| v).min().expect("r + 1 eigenvalues") as i128;
    let (num, den) = (n * lambda_min.unsigned_abs(), d + lambda_min.unsigned_abs());
    let g = gcd(num, den);
    let bound = if den / g == 1 { format!("{}", num / g) } else { format!("{}/{}", num / g, den / g) };
    let expected = binomial_u128(mu - 1, ru - 1);
    let numeric_bound = if n <= guards.eigen_order {
        Some(hoffman_bound(&kneser(m, r)?, guards)?.bound)
    } else {
        None
    };
    let holds = num == expected * den && numeric_bound.map_or(true, |b| (b - expected as f64).abs() < 1e-6);
    if !holds {
        return Err(Error::TheoremViolation(format!("Hoffman bound {bound} on K({m},{r}) is not C({},{})", m - 1, r - 1)));
    }
    Ok(EkrReport { m, r, n, d, lambda_min, bound, expected, numeric_bound, holds })
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxCut {
    pub maxcut: usize,
    /// Vertices on the side not containing vertex 0.
    pub side: Vec<usize>,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub lambda_min: f64,
    pub holds: bool,
}

/// Exact max cut over the 2^(n−1) bipartitions (Gray code), with |E|/2 and
/// |E|/2 − nλ_min/4 as the lower and upper bounds.
pub fn maxcut_brute(g: &Graph, guards: &Guards) -> Result<MaxCut> {
    let n = g.n();
    guards.check("maxcut_vertices", guards.maxcut_vertices.min(40), n as u128)?;
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if u != v {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
    }
    let mut side = vec![false; n];
    let (mut cut, mut best, mut best_mask) = (0i64, 0i64, 0u64);
    if n > 1 {
        for k in 1u64..1 << (n - 1) {
            // flip vertex 1 + (index of the lowest set bit) so vertex 0 stays put
            let v = 1 + k.trailing_zeros() as usize;
            let same = nbrs[v].iter().filter(|&&u| side[u] == side[v]).count() as i64;
            cut += 2 * same - nbrs[v].len() as i64;
            side[v] = !side[v];
            if cut > best {
                best = cut;
                best_mask = (0..n).filter(|&u| side[u]).fold(0, |a, u| a | 1 << u);
            }
        }
    }
    let lambda_min = spectrum(g, guards)?.min().unwrap_or(0.0);
    let m = g.edges().iter().filter(|&&(u, v)| u != v).count() as f64;
    let (lower_bound, upper_bound) = (m / 2.0, m / 2.0 - n as f64 * lambda_min / 4.0);
    let maxcut = best as usize;
    let holds = maxcut as f64 >= lower_bound && maxcut as f64 <= upper_bound + 1e-9;
    if !holds {
        return Err(Error::TheoremViolation(format!(
            "max cut {maxcut} outside [{lower_bound}, {upper_bound}]"
        )));
    }
    Ok(MaxCut {
        maxcut,
        side: (0..n).filter(|&u| best_mask >> u & 1 == 1).collect(),
        lower_bound,
        upper_bound,
        lambda_min,
        holds,
    })
}

/// |E|/2 − nλ_min/4; equals n(d − λ_min)/4 on d-regular graphs.
pub fn maxcut_spectral_bound(g: &Graph, guards: &Guards) -> Result<f64> {
    let lambda_min = spectrum(g, guards)?.min().unwrap_or(0.0);
    let m = g.edges().iter().filter(|&&(u, v)| u != v).count() as f64;
    Ok(m / 2.0 - g.n() as f64 * lambda_min / 4.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct IncidenceIdentities {
    /// Bᵀ B = A_{L(G)} + 2·Id over edges.
    pub edge_side: bool,
    /// B Bᵀ = A_G + Deg(G) over vertices.
    pub vertex_side: bool,
    pub regular_degree: Option<usize>,
}

pub fn incidence_identities_check(g: &Graph) -> Result<IncidenceIdentities> {
    if !g.is_simple() {
        return invalid("incidence identities are checked on simple graphs");
    }
    let b = g.incidence();
    let bt = b.transpose();
    let lhs_e = bt.mul(&b)?;
    let rhs_e = g.line_graph().adjacency().add(&IntMatrix::identity(g.m()).scale(2))?;
    let lhs_v = b.mul(&bt)?;
    let mut deg = IntMatrix::zeros(g.n(), g.n());
    for (v, d) in g.degrees().into_iter().enumerate() {
        deg.set(v, v, d as i64);
    }
    let rhs_v = g.adjacency().add(&deg)?;
    Ok(IncidenceIdentities {
        edge_side: lhs_e == rhs_e,
        vertex_side: lhs_v == rhs_v,
        regular_degree: g.regular_degree(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementSpectrum {
    pub spectrum: Vec<f64>,
    pub complement: Vec<f64>,
    /// {n − d − 1} ∪ {−1 − λ_i : i ≥ 2}.
    pub predicted: Vec<f64>,
    pub holds: bool,
}

/// Spectrum of the complement of a regular graph from the spectrum of the graph.
pub fn complement_spectrum_check(g: &Graph, guards: &Guards) -> Result<ComplementSpectrum> {
    if !g.is_simple() {
        return invalid("complement spectra are checked on simple graphs");
    }
    let d = g.regular_degree().ok_or_else(|| Error::InvalidInput("graph is not regular".into()))?;
    let spec = spectrum(g, guards)?;
    let comp = spectrum(&g.complement(), guards)?;
    let n = g.n();
    let mut predicted = Vec::with_capacity(n);
    if n > 0 {
        predicted.push(n as f64 - d as f64 - 1.0);
        predicted.extend(spec.eigenvalues[1..].iter().map(|l| -1.0 - l));
    }
    let holds = comp.matches(&predicted, SPECTRUM_TOL);
    predicted.sort_by(|a, b| b.total_cmp(a));
    Ok(ComplementSpectrum { spectrum: spec.eigenvalues, complement: comp.eigenvalues, predicted, holds })
}

#[derive(Debug, Clone, Serialize)]
pub struct SchwenkReport {
    /// min |λ + 3| over spec(P).
    pub distance_to_minus_three: f64,
    /// dim ker(A_P − Id), computed exactly.
    pub eigenspace_dim_one: usize,
    /// 5 + 5 − 9: two 5-dim subspaces of 1^⊥ ⊂ ℝ¹⁰ meet in at least this dimension.
    pub intersection_lower_bound: i64,
    pub holds: bool,
}

/// The three facts behind "K_10 is not a union of three Petersen graphs".
pub fn schwenk_obstruction_check(guards: &Guards) -> Result<SchwenkReport> {
    let p = petersen();
    let spec = spectrum(&p, guards)?;
    let distance_to_minus_three = spec.distance_to(-3.0);
    let shifted = p.adjacency().add(&IntMatrix::identity(10).scale(-1))?;
    let eigenspace_dim_one = 10 - RationalMatrix::from_i64_rows(&shifted.to_rows())?.rank();
    // The all-ones vector spans the λ = 3 eigenspace, so the λ = 1 eigenspace
    // of each copy sits in the 9-dimensional complement 1^⊥.
    let intersection_lower_bound = 2 * eigenspace_dim_one as i64 - 9;
    let holds = distance_to_minus_three > SPECTRUM_TOL && eigenspace_dim_one == 5 && intersection_lower_bound > 0;
    Ok(SchwenkReport { distance_to_minus_three, eigenspace_dim_one, intersection_lower_bound, holds })
}
