//! Set families over a small ground set [m] and the linear-algebra bounds on
//! their size.
//!
//! Sets are `u64` bitmasks: bit `i` stands for element `i + 1`.

use crate::error::{invalid, Error, Result};
use crate::exactla::{binomial_u128, is_prime, Field, RationalMatrix};
use crate::guard::Guards;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    sets: Vec<u64>,
}

fn ground_mask(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub fn mask_to_list(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

impl SetFamily {
    pub fn new(ground: usize, sets: Vec<u64>) -> Result<Self> {
        if ground > 64 {
            return invalid(format!("ground set [{ground}] exceeds 64 elements"));
        }
        let full = ground_mask(ground);
        if let Some(s) = sets.iter().find(|&&s| s & !full != 0) {
            return invalid(format!("set {:?} is not contained in [{ground}]", mask_to_list(*s)));
        }
        let mut seen = sets.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return invalid("family members must be distinct");
        }
        Ok(SetFamily { ground, sets })
    }

    /// Build from 1-indexed element lists.
    pub fn from_lists(ground: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for l in lists {
            let mut mask = 0u64;
            for &e in l {
                if e == 0 || e > ground {
                    return invalid(format!("element {e} outside [{ground}]"));
                }
                mask |= 1 << (e - 1);
            }
            sets.push(mask);
        }
        Self::new(ground, sets)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| mask_to_list(s)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// Odd members, even pairwise intersections.
    Oddtown,
    /// Disjoint nonempty subfamilies never have equal unions.
    Separated,
    /// Disjoint nonempty subfamilies differ in union or in intersection.
    WeaklySeparated,
    /// All pairwise intersections have size exactly λ.
    LambdaFischer { lambda: u64 },
    /// Pairwise intersections mod p in L, member sizes mod p outside L.
    #[serde(rename = "l_fischer_modp")]
    LFischerModp { l: Vec<u64>, p: u64 },
    /// Pairwise intersection sizes in L.
    #[serde(rename = "l_fischer_int")]
    LFischerInt { l: Vec<u64> },
    /// λ-sets, pairwise intersecting.
    UniformIntersecting { lambda: u64 },
    /// `size`-sets with pairwise intersection sizes in L (every element below `size`).
    #[serde(rename = "uniform_l_fischer_int")]
    UniformLFischerInt { l: Vec<u64>, size: u64 },
    /// `size`-sets with pairwise intersections mod p in L, `size` mod p outside L.
    #[serde(rename = "uniform_l_fischer_modp")]
    UniformLFischerModp { l: Vec<u64>, p: u64, size: u64 },
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Oddtown => "oddtown",
            FamilyKind::Separated => "separated",
            FamilyKind::WeaklySeparated => "weakly_separated",
            FamilyKind::LambdaFischer { .. } => "lambda_fischer",
            FamilyKind::LFischerModp { .. } => "l_fischer_modp",
            FamilyKind::LFischerInt { .. } => "l_fischer_int",
            FamilyKind::UniformIntersecting { .. } => "uniform_intersecting",
            FamilyKind::UniformLFischerInt { .. } => "uniform_l_fischer_int",
            FamilyKind::UniformLFischerModp { .. } => "uniform_l_fischer_modp",
        }
    }

    /// Validate parameters and normalise L to a sorted, duplicate-free list.
    pub fn normalized(&self) -> Result<FamilyKind> {
        fn norm_l(l: &[u64]) -> Result<Vec<u64>> {
            if l.is_empty() {
                return invalid("L must be nonempty");
            }
            let mut l = l.to_vec();
            l.sort_unstable();
            l.dedup();
            Ok(l)
        }
        fn modp(l: &[u64], p: u64) -> Result<Vec<u64>> {
            if !is_prime(p) {
                return Err(Error::NonPrime(p));
            }
            let l = norm_l(l)?;
            if let Some(x) = l.iter().find(|&&x| x >= p) {
                return invalid(format!("L element {x} is not a residue mod {p}"));
            }
            Ok(l)
        }
        Ok(match self {
            FamilyKind::LFischerModp { l, p } => FamilyKind::LFischerModp { l: modp(l, *p)?, p: *p },
            FamilyKind::LFischerInt { l } => FamilyKind::LFischerInt { l: norm_l(l)? },
            FamilyKind::UniformLFischerInt { l, size } => {
                let l = norm_l(l)?;
                if l.iter().any(|&x| x >= *size) {
                    return invalid("every element of L must be smaller than the member size");
                }
                FamilyKind::UniformLFischerInt { l, size: *size }
            }
            FamilyKind::UniformLFischerModp { l, p, size } => {
                let l = modp(l, *p)?;
                if l.contains(&(size % p)) {
                    return invalid(format!("member size {size} is in L mod {p}"));
                }
                FamilyKind::UniformLFischerModp { l, p: *p, size: *size }
            }
            other => other.clone(),
        })
    }

    fn is_subfamily_kind(&self) -> bool {
        matches!(self, FamilyKind::Separated | FamilyKind::WeaklySeparated)
    }

    /// Why a single member is forbidden, if it is.
    fn member_violation(&self, s: u64) -> Option<&'static str> {
        let size = s.count_ones() as u64;
        match self {
            FamilyKind::Oddtown if size % 2 == 0 => Some("member has even size"),
            FamilyKind::Separated if s == 0 => Some("empty member"),
            FamilyKind::LFischerModp { l, p } if l.contains(&(size % p)) => {
                Some("member size mod p lies in L")
            }
            FamilyKind::UniformIntersecting { lambda } if size != *lambda => Some("member has the wrong size"),
            FamilyKind::UniformLFischerInt { size: k, .. } | FamilyKind::UniformLFischerModp { size: k, .. }
                if size != *k =>
            {
                Some("member has the wrong size")
            }
            _ => None,
        }
    }

    /// Why two distinct members may not coexist, if so.
    fn pair_violation(&self, a: u64, b: u64) -> Option<&'static str> {
        let inter = (a & b).count_ones() as u64;
        match self {
            FamilyKind::Oddtown if inter % 2 == 1 => Some("odd intersection"),
            FamilyKind::LambdaFischer { lambda } if inter != *lambda => Some("intersection size differs from λ"),
            FamilyKind::LFischerModp { l, p } | FamilyKind::UniformLFischerModp { l, p, .. }
                if !l.contains(&(inter % p)) =>
            {
                Some("intersection size mod p outside L")
            }
            FamilyKind::LFischerInt { l } | FamilyKind::UniformLFischerInt { l, .. } if !l.contains(&inter) => {
                Some("intersection size outside L")
            }
            FamilyKind::UniformIntersecting { .. } if inter == 0 => Some("disjoint members"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Member { index: usize, set: Vec<usize>, reason: String },
    Pair { first: usize, second: usize, sets: [Vec<usize>; 2], reason: String },
    /// Indices of two disjoint subfamilies.
    Subfamilies { left: Vec<usize>, right: Vec<usize>, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub valid: bool,
    pub witness: Option<Witness>,
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// First disjoint pair (I, J) of nonempty subfamilies violating the kind,
/// preferring fewer members, then lower masks.
fn subfamily_violation(sets: &[u64], weak: bool) -> Option<(u32, u32)> {
    let k = sets.len();
    let n_masks = 1usize << k;
    let mut union = vec![0u64; n_masks];
    let mut inter = vec![u64::MAX; n_masks];
    for mask in 1..n_masks {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        union[mask] = union[rest] | sets[low];
        inter[mask] = inter[rest] & sets[low];
    }
    let full = (n_masks - 1) as u32;
    let mut best: Option<(u32, u32, u32)> = None;
    for i in 1..=full {
        let i_low = i & i.wrapping_neg();
        let comp = full & !i & !(i_low - 1) & !i_low;
        let mut j = comp;
        while j > 0 {
            let (iu, ju) = (i as usize, j as usize);
            let bad = union[iu] == union[ju] && (!weak || inter[iu] == inter[ju]);
            if bad {
                let key = (i | j).count_ones();
                if best.is_none_or(|(b, _, _)| key < b) {
                    best = Some((key, i, j));
                }
            }
            j = (j - 1) & comp;
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn check_sets(sets: &[u64], kind: &FamilyKind) -> Option<Witness> {
    for (index, &s) in sets.iter().enumerate() {
        if let Some(reason) = kind.member_violation(s) {
            return Some(Witness::Member { index, set: mask_to_list(s), reason: reason.into() });
        }
    }
    if kind.is_subfamily_kind() {
        let weak = matches!(kind, FamilyKind::WeaklySeparated);
        return subfamily_violation(sets, weak).map(|(i, j)| Witness::Subfamilies {
            left: mask_indices(i),
            right: mask_indices(j),
            reason: if weak { "equal unions and equal intersections" } else { "equal unions" }.into(),
        });
    }
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            if let Some(reason) = kind.pair_violation(sets[a], sets[b]) {
                return Some(Witness::Pair {
                    first: a,
                    second: b,
                    sets: [mask_to_list(sets[a]), mask_to_list(sets[b])],
                    reason: reason.into(),
                });
            }
        }
    }
    None
}

/// Test the kind's defining property; on failure report the first violation.
pub fn check_family(f: &SetFamily, kind: &FamilyKind, guards: &Guards) -> Result<FamilyCheck> {
    let kind = kind.normalized()?;
    if kind.is_subfamily_kind() {
        guards.check("family_members", guards.family_members, f.len() as u128)?;
    }
    let witness = check_sets(&f.sets, &kind);
    Ok(FamilyCheck { valid: witness.is_none(), witness })
}

/// The size bound proved for families of this kind on an m-element ground set.
pub fn theorem_bound(kind: &FamilyKind, m: usize) -> Result<u128> {
    let m64 = m as u64;
    let sum_binom = |top: u64| (0..=top).map(|i| binomial_u128(m64, i)).sum::<u128>();
    Ok(match kind.normalized()? {
        FamilyKind::Oddtown | FamilyKind::Separated => m as u128,
        FamilyKind::WeaklySeparated => m as u128 + 1,
        FamilyKind::LambdaFischer { lambda: 0 } => {
            return Err(Error::Precondition("no bound for λ-Fischer families with λ = 0".into()))
        }
        FamilyKind::LambdaFischer { .. } => m as u128,
        FamilyKind::LFischerModp { l, .. } | FamilyKind::LFischerInt { l } => sum_binom(l.len() as u64),
        FamilyKind::UniformIntersecting { lambda } => {
            if lambda == 0 || 2 * lambda > m64 {
                return Err(Error::Precondition(format!(
                    "intersecting bound needs 1 ≤ λ and 2λ ≤ m (λ = {lambda}, m = {m})"
                )));
            }
            binomial_u128(m64 - 1, lambda - 1)
        }
        FamilyKind::UniformLFischerInt { l, .. } => binomial_u128(m64, l.len() as u64),
        FamilyKind::UniformLFischerModp { l, p, size } => {
            let s = l.len() as u64;
            binomial_u128(m64, s)
                + (0..s).filter(|i| i % p == size % p).map(|i| binomial_u128(m64, i)).sum::<u128>()
        }
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Extremal {
    pub max_size: usize,
    pub family: Vec<Vec<usize>>,
    /// Families of maximum size are searched exhaustively; this counts the nodes visited.
    pub nodes: u64,
}

struct Search<'a> {
    kind: &'a FamilyKind,
    cand: Vec<u64>,
    /// Pairwise compatibility bitsets over candidate indices (pairwise kinds).
    compat: Vec<Vec<u64>>,
    best: Vec<u64>,
    nodes: u64,
}

impl Search<'_> {
    fn can_add(&self, current: &[u64], idx: usize, chosen: &[usize]) -> bool {
        if self.kind.is_subfamily_kind() {
            let mut trial = current.to_vec();
            trial.push(self.cand[idx]);
            subfamily_violation(&trial, matches!(self.kind, FamilyKind::WeaklySeparated)).is_none()
        } else {
            chosen.iter().all(|&c| self.compat[c][idx / 64] >> (idx % 64) & 1 == 1)
        }
    }

    fn dfs(&mut self, current: &mut Vec<u64>, chosen: &mut Vec<usize>, next: usize) {
        self.nodes += 1;
        if current.len() > self.best.len() {
            self.best = current.clone();
        }
        for idx in next..self.cand.len() {
            // even taking every remaining candidate cannot beat the incumbent
            if current.len() + (self.cand.len() - idx) <= self.best.len() {
                return;
            }
            if self.can_add(current, idx, chosen) {
                current.push(self.cand[idx]);
                chosen.push(idx);
                self.dfs(current, chosen, idx + 1);
                current.pop();
                chosen.pop();
            }
        }
    }
}

/// Largest family of the given kind on [m], by exhaustive branch and bound.
pub fn max_family_brute(m: usize, kind: &FamilyKind, guards: &Guards) -> Result<Extremal> {
    guards.check("family_ground", guards.family_ground, m as u128)?;
    let kind = kind.normalized()?;
    let cand: Vec<u64> = (0..1u64 << m).filter(|&s| kind.member_violation(s).is_none()).collect();
    let words = cand.len().div_ceil(64);
    let mut compat = vec![vec![0u64; words]; cand.len()];
    if !kind.is_subfamily_kind() {
        for a in 0..cand.len() {
            for b in 0..cand.len() {
                if a != b && kind.pair_violation(cand[a], cand[b]).is_none() {
                    compat[a][b / 64] |= 1 << (b % 64);
                }
            }
        }
    }
    let mut s = Search { kind: &kind, cand, compat, best: Vec::new(), nodes: 0 };
    s.dfs(&mut Vec::new(), &mut Vec::new(), 0);
    Ok(Extremal {
        max_size: s.best.len(),
        family: s.best.iter().map(|&x| mask_to_list(x)).collect(),
        nodes: s.nodes,
    })
}

/// Incidence columns v_C (one per member) as integer vectors of length m.
pub fn incidence_columns(f: &SetFamily) -> Vec<Vec<i64>> {
    f.sets.iter().map(|&s| (0..f.ground).map(|i| (s >> i & 1) as i64).collect()).collect()
}

/// |E| × |F| 0/1 matrix with one column per member.
pub fn incidence_matrix(f: &SetFamily) -> RationalMatrix {
    let cols = incidence_columns(f);
    let rows: Vec<Vec<i64>> =
        (0..f.ground).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    if f.is_empty() {
        return RationalMatrix::zeros(f.ground, 0);
    }
    RationalMatrix::from_i64_rows(&rows).expect("rectangular by construction")
}

/// The linear-algebra fact each bound rests on, when there is one to check:
/// F_2 independence for oddtown, ℚ independence for separated families, and
/// ℚ independence of the vectors extended by a constant 1 for weakly
/// separated ones.
pub fn proof_vectors_independent(f: &SetFamily, kind: &FamilyKind) -> Result<Option<bool>> {
    let cols = incidence_columns(f);
    match kind {
        FamilyKind::Oddtown => crate::exactla::linear_independent(&cols, Field::Prime(2)).map(Some),
        FamilyKind::Separated => crate::exactla::linear_independent(&cols, Field::Rational).map(Some),
        FamilyKind::WeaklySeparated => {
            let lifted: Vec<Vec<i64>> = cols.into_iter().map(|mut c| {
                c.push(1);
                c
            }).collect();
            crate::exactla::linear_independent(&lifted, Field::Rational).map(Some)
        }
        _ => Ok(None),
    }
}

/// Random valid family: shuffle the admissible sets and add greedily while
/// the family stays valid, stopping at a random target size.
pub fn random_valid_family<R: Rng>(kind: &FamilyKind, m: usize, rng: &mut R, guards: &Guards) -> Result<SetFamily> {
    let kind = kind.normalized()?;
    if m > 20 {
        return invalid("random families are generated on ground sets of at most 20 elements");
    }
    let mut cand: Vec<u64> = (0..1u64 << m).filter(|&s| kind.member_violation(s).is_none()).collect();
    cand.shuffle(rng);
    let cap = if kind.is_subfamily_kind() { guards.family_members as usize } else { usize::MAX };
    let target = rng.gen_range(0..=cand.len().min(2 * m + 2).min(cap));
    let mut sets: Vec<u64> = Vec::new();
    for s in cand {
        if sets.len() >= target {
            break;
        }
        sets.push(s);
        if check_sets(&sets, &kind).is_some() {
            sets.pop();
        }
    }
    SetFamily::new(m, sets)
}
