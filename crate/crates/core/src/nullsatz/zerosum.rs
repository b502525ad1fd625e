//! Zero-sum problems over finite abelian groups Z_{m_1} × … × Z_{m_k}.

use crate::error::{invalid, Error, Result};
use crate::exactla::is_prime;
use crate::guard::Guards;
use num_integer::Integer;
use serde::Serialize;

/// Largest group order handled by the bitmask searches.
const MASK_ORDER: u64 = 64;
/// Largest order for which an addition table is built.
const TABLE_ORDER: u64 = 4096;

/// Z_{m_1} × … × Z_{m_k}; elements are encoded as mixed-radix indices, first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    moduli: Vec<u64>,
    order: u64,
    table: Option<Vec<u32>>,
}

impl Group {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() || moduli.iter().any(|&m| m == 0) {
            return invalid("group moduli must be a nonempty list of positive integers");
        }
        let order = moduli.iter().try_fold(1u64, |a, &m| a.checked_mul(m));
        let Some(order) = order.filter(|&o| o <= 1 << 20) else {
            return invalid("group order above 2^20");
        };
        let mut g = Group { moduli, order, table: None };
        if order <= TABLE_ORDER {
            let o = order as usize;
            let mut t = vec![0u32; o * o];
            for a in 0..o {
                for b in 0..o {
                    t[a * o + b] = g.add_slow(a, b) as u32;
                }
            }
            g.table = Some(t);
        }
        Ok(g)
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Z_p^k.
    pub fn elementary(p: u64, k: usize) -> Result<Self> {
        Self::new(vec![p; k])
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Exponent: lcm of the moduli.
    pub fn exponent(&self) -> u64 {
        self.moduli.iter().fold(1, |a, &m| a.lcm(&m))
    }

    /// p when the group is Z_p^k for a prime p.
    pub fn elementary_prime(&self) -> Option<u64> {
        let p = self.moduli[0];
        (is_prime(p) && self.moduli.iter().all(|&m| m == p)).then_some(p)
    }

    pub fn encode(&self, x: &[u64]) -> Result<usize> {
        if x.len() != self.moduli.len() {
            return Err(Error::DimensionMismatch(format!(
                "element with {} coordinates in a group of rank {}",
                x.len(),
                self.moduli.len()
            )));
        }
        Ok(x.iter().zip(&self.moduli).fold(0u64, |a, (&v, &m)| a * m + v % m) as usize)
    }

    pub fn decode(&self, mut i: usize) -> Vec<u64> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = i as u64 % m;
            i /= m as usize;
        }
        out
    }

    fn add_slow(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).zip(&self.moduli).map(|((u, v), m)| (u + v) % m).collect();
        self.encode(&s).expect("same rank")
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order as usize + b] as usize,
            None => self.add_slow(a, b),
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.decode(a);
        let y: Vec<u64> = x.iter().zip(&self.moduli).map(|(&u, &m)| (m - u) % m).collect();
        self.encode(&y).expect("same rank")
    }

    /// {s + x : s ∈ mask}.
    fn shift(&self, mask: u64, x: usize) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << self.add(s, x);
        }
        out
    }

    fn require_mask_order(&self) -> Result<()> {
        if self.order > MASK_ORDER {
            return invalid(format!("group order {} above the search limit {MASK_ORDER}", self.order));
        }
        Ok(())
    }
}

/// A multiset of group elements, each reduced modulo the group moduli.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSumInstance {
    pub moduli: Vec<u64>,
    pub elements: Vec<Vec<u64>>,
}

impl ZeroSumInstance {
    pub fn new(moduli: Vec<u64>, elements: Vec<Vec<u64>>) -> Result<Self> {
        let g = Group::new(moduli.clone())?;
        let elements = elements
            .iter()
            .map(|x| g.encode(x).map(|i| g.decode(i)))
            .collect::<Result<_>>()?;
        Ok(ZeroSumInstance { moduli, elements })
    }

    pub fn group(&self) -> Result<Group> {
        Group::new(self.moduli.clone())
    }

    pub fn encoded(&self) -> Result<(Group, Vec<usize>)> {
        let g = self.group()?;
        let e = self.elements.iter().map(|x| g.encode(x)).collect::<Result<_>>()?;
        Ok((g, e))
    }
}

/// Positions of the first nonempty zero-sum sub-multiset found by a
/// subset-sum sweep, or `None` when the multiset is zero-sum free.
pub fn zero_sum_subset(group: &Group, elems: &[usize]) -> Option<Vec<usize>> {
    let o = group.order as usize;
    // reach[s] = positions of some nonempty sub-multiset summing to s
    let mut reach: Vec<Option<Vec<usize>>> = vec![None; o];
    for (i, &x) in elems.iter().enumerate() {
        let snapshot: Vec<(usize, Vec<usize>)> =
            reach.iter().enumerate().filter_map(|(s, r)| r.clone().map(|r| (s, r))).collect();
        let mut cands = vec![(x, vec![i])];
        for (s, mut r) in snapshot {
            r.push(i);
            cands.push((group.add(s, x), r));
        }
        for (s, r) in cands {
            if s == 0 {
                return Some(r);
            }
            reach[s].get_or_insert(r);
        }
    }
    None
}

#[derive(Debug, Clone, Serialize)]
pub struct DavenportReport {
    pub moduli: Vec<u64>,
    pub g: u64,
    /// k(p − 1) + 1 for Z_p^k, n for Z_n.
    pub expected: Option<u64>,
    /// A longest zero-sum-free multiset.
    pub extremal: Vec<Vec<u64>>,
    pub nodes: u64,
}

/// Davenport constant by exhaustive search over zero-sum-free multisets.
pub fn davenport_g(group: &Group, guards: &Guards) -> Result<DavenportReport> {
    guards.check("davenport_order", guards.davenport_order, group.order as u128)?;
    group.require_mask_order()?;

    struct Search<'a> {
        g: &'a Group,
        stack: Vec<usize>,
        best: Vec<usize>,
        nodes: u64,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, sums: u64) {
            self.nodes += 1;
            if self.stack.len() > self.best.len() {
                self.best = self.stack.clone();
            }
            for x in start.max(1)..self.g.order as usize {
                if sums >> self.g.neg(x) & 1 == 1 {
                    continue;
                }
                let next = sums | self.g.shift(sums, x) | 1 << x;
                self.stack.push(x);
                self.go(x, next);
                self.stack.pop();
            }
        }
    }

    let mut s = Search { g: group, stack: Vec::new(), best: Vec::new(), nodes: 0 };
    s.go(1, 0);
    let g = s.best.len() as u64 + 1;
    let expected = match (group.elementary_prime(), group.moduli.len()) {
        (Some(p), k) => Some(k as u64 * (p - 1) + 1),
        (None, 1) => Some(group.moduli[0]),
        _ => None,
    };
    if let Some(e) = expected.filter(|&e| e != g) {
        return Err(Error::TheoremViolation(format!("g({:?}) = {g}, expected {e}", group.moduli)));
    }
    Ok(DavenportReport {
        moduli: group.moduli.clone(),
        g,
        expected,
        extremal: s.best.iter().map(|&x| group.decode(x)).collect(),
        nodes: s.nodes,
    })
}

/// p − 1 copies of each basis vector of Z_p^k: zero-sum free of length k(p − 1).
pub fn olsen_lower_example(p: u64, k: usize) -> Result<ZeroSumInstance> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    let mut elements = Vec::new();
    for j in 0..k {
        let mut e = vec![0; k];
        e[j] = 1;
        for _ in 0..p - 1 {
            elements.push(e.clone());
        }
    }
    ZeroSumInstance::new(vec![p; k], elements)
}

#[derive(Debug, Clone, Serialize)]
pub struct EgzConstReport {
    pub moduli: Vec<u64>,
    pub n: u64,
    pub f: u64,
    /// 2n − 1 for (Z_n, n); 4n − 3 for (Z_n², n).
    pub expected: Option<u64>,
    /// A longest multiset with no zero-sum sub-multiset of size exactly n.
    pub extremal: Vec<Vec<u64>>,
    pub nodes: u64,
}

/// f(G, n) by exhaustive search over multisets avoiding an n-term zero sum.
pub fn f_const_brute(group: &Group, n: u64, guards: &Guards) -> Result<EgzConstReport> {
    if n == 0 || n % group.exponent() != 0 {
        return invalid(format!("n = {n} must be a positive multiple of the exponent {}", group.exponent()));
    }
    group.require_mask_order()?;
    let n = n as usize;

    struct Search<'a> {
        g: &'a Group,
        n: usize,
        stack: Vec<usize>,
        best: Vec<usize>,
        nodes: u128,
        limit: u128,
    }
    impl Search<'_> {
        fn go(&mut self, start: usize, reach: &[u64]) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::GuardExceeded { guard: "multisets", limit: self.limit, requested: self.nodes });
            }
            if self.stack.len() > self.best.len() {
                self.best = self.stack.clone();
            }
            for x in start..self.g.order as usize {
                let mut next = reach.to_vec();
                for k in (0..self.n).rev() {
                    next[k + 1] |= self.g.shift(reach[k], x);
                }
                if next[self.n] & 1 == 1 {
                    continue;
                }
                self.stack.push(x);
                self.go(x, &next)?;
                self.stack.pop();
            }
            Ok(())
        }
    }

    let mut reach = vec![0u64; n + 1];
    reach[0] = 1;
    let mut s = Search { g: group, n, stack: Vec::new(), best: Vec::new(), nodes: 0, limit: guards.multisets };
    s.go(0, &reach)?;
    let f = s.best.len() as u64 + 1;
    let m = &group.moduli;
    let expected = match m.as_slice() {
        [a] if *a as usize == n => Some(2 * n as u64 - 1),
        [a, b] if a == b && *a as usize == n => Some(4 * n as u64 - 3),
        _ => None,
    };
    if let Some(e) = expected.filter(|&e| e != f) {
        return Err(Error::TheoremViolation(format!("f({m:?}, {n}) = {f}, expected {e}")));
    }
    Ok(EgzConstReport {
        moduli: m.clone(),
        n: n as u64,
        f,
        expected,
        extremal: s.best.iter().map(|&x| group.decode(x)).collect(),
        nodes: s.nodes as u64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EgzWitness {
    pub n: u64,
    /// Sorted positions into the input sequence.
    pub indices: Vec<usize>,
    pub sum: u64,
}

/// n of the 2n − 1 given residues summing to 0 mod n.
pub fn egz_find(values: &[u64], n: u64) -> Result<EgzWitness> {
    if n == 0 {
        return invalid("n must be positive");
    }
    if values.len() as u64 != 2 * n - 1 {
        return invalid(format!("expected 2n − 1 = {} elements, got {}", 2 * n - 1, values.len()));
    }
    let reduced: Vec<u64> = values.iter().map(|v| v % n).collect();
    let mut indices = egz_rec(&reduced, n)?;
    indices.sort_unstable();
    let sum: u64 = indices.iter().map(|&i| reduced[i]).sum();
    if indices.len() as u64 != n || sum % n != 0 {
        return Err(Error::TheoremViolation(format!("EGZ output {indices:?} does not sum to 0 mod {n}")));
    }
    Ok(EgzWitness { n, indices, sum })
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..).find(|d| n % d == 0 || d * d > n).map(|d| if n % d == 0 { d } else { n }).unwrap_or(n)
}

/// n positions whose values sum to 0 mod n, by a (prefix, count, residue)
/// reachability table; polynomial where enumerating n-subsets is not.
fn prime_zero_sum(vals: &[u64], n: u64) -> Option<Vec<usize>> {
    let (len, k, n) = (vals.len(), n as usize, n as usize);
    let at = |i: usize, c: usize, r: usize| (i * (k + 1) + c) * n + r;
    // reach[i][c][r]: some c of the first i values sum to r
    let mut reach = vec![false; (len + 1) * (k + 1) * n];
    reach[at(0, 0, 0)] = true;
    for i in 0..len {
        let v = vals[i] as usize % n;
        for c in 0..=k {
            for r in 0..n {
                if reach[at(i, c, r)] {
                    reach[at(i + 1, c, r)] = true;
                    if c < k {
                        reach[at(i + 1, c + 1, (r + v) % n)] = true;
                    }
                }
            }
        }
    }
    if !reach[at(len, k, 0)] {
        return None;
    }
    let (mut c, mut r, mut out) = (k, 0, Vec::with_capacity(k));
    for i in (0..len).rev() {
        if reach[at(i, c, r)] {
            continue;
        }
        out.push(i);
        c -= 1;
        r = (r + n - vals[i] as usize % n) % n;
    }
    out.reverse();
    Some(out)
}

/// `vals` are residues mod n, |vals| = 2n − 1; returns positions.
fn egz_rec(vals: &[u64], n: u64) -> Result<Vec<usize>> {
    if n == 1 {
        return Ok(vec![0]);
    }
    let m = smallest_prime_factor(n);
    if m == n {
        return prime_zero_sum(vals, n)
            .ok_or_else(|| Error::TheoremViolation(format!("no {n}-term zero sum among {vals:?}")));
    }
    // n = m·t: peel 2t − 1 blocks of m elements with sums divisible by m, then
    // solve the problem for the block sums in Z_t.
    let t = n / m;
    let mut pool: Vec<usize> = (0..vals.len()).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(2 * t as usize - 1);
    for _ in 0..2 * t - 1 {
        let window: Vec<usize> = pool[..2 * m as usize - 1].to_vec();
        let sub: Vec<u64> = window.iter().map(|&i| vals[i] % m).collect();
        let pick: Vec<usize> = egz_rec(&sub, m)?.into_iter().map(|j| window[j]).collect();
        pool.retain(|i| !pick.contains(i));
        blocks.push(pick);
    }
    let sums: Vec<u64> = blocks.iter().map(|b| (b.iter().map(|&i| vals[i]).sum::<u64>() / m) % t).collect();
    Ok(egz_rec(&sums, t)?.into_iter().flat_map(|j| blocks[j].clone()).collect())
}

/// (x|J) for x = 0..=|J|: the number of sub-multisets (chosen by position) of
/// size x with zero sum.
pub fn kemnitz_counts(inst: &ZeroSumInstance, guards: &Guards) -> Result<Vec<u64>> {
    guards.check("kemnitz_len", guards.kemnitz_len.min(60), inst.elements.len() as u128)?;
    let (g, elems) = inst.encoded()?;
    let (len, o) = (elems.len(), g.order as usize);
    let mut dp = vec![vec![0u64; o]; len + 1];
    dp[0][0] = 1;
    for (i, &x) in elems.iter().enumerate() {
        for k in (0..=i).rev() {
            for s in 0..o {
                let c = dp[k][s];
                if c != 0 {
                    dp[k + 1][g.add(s, x)] += c;
                }
            }
        }
    }
    Ok(dp.iter().map(|row| row[0]).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct KemnitzClause {
    pub clause: u8,
    /// Whether |J| (and any extra hypothesis) matches this clause.
    pub applies: bool,
    /// Value of the clause's expression mod p; `None` when it does not apply.
    pub residue: Option<u64>,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KemnitzReport {
    pub p: u64,
    pub size: usize,
    pub counts: Vec<u64>,
    pub clauses: Vec<KemnitzClause>,
}

impl KemnitzReport {
    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.holds != Some(false))
    }

    pub fn applicable(&self) -> usize {
        self.clauses.iter().filter(|c| c.applies).count()
    }
}

/// Evaluate the six counting congruences used in the Kemnitz argument.
///
/// Clause 6 asks for (p|J) = 0 as an integer; at |J| = 4p − 3 that never
/// happens in Z_p², so it is reported but cannot apply there.
pub fn kemnitz_congruences(inst: &ZeroSumInstance, guards: &Guards) -> Result<KemnitzReport> {
    let g = inst.group()?;
    let p = g.elementary_prime().ok_or_else(|| {
        Error::InvalidInput(format!("congruences need Z_p^k, got moduli {:?}", inst.moduli))
    })?;
    let counts = kemnitz_counts(inst, guards)?;
    let s = counts.len() - 1;
    let c = |x: u64| -> i128 { counts.get(x as usize).copied().unwrap_or(0) as i128 };
    let (p1, p2, p3, p4) = (3 * p - 3, 3 * p - 2, 3 * p - 1, 4 * p - 3);
    let size = s as u64;
    let exprs: [(bool, i128); 6] = [
        (size == p1, 1 - c(p - 1) - c(p) + c(2 * p - 1) + c(2 * p)),
        (size == p2 || size == p3, 1 - c(p) + c(2 * p)),
        (size == p4, 1 - c(p) + c(2 * p) - c(3 * p)),
        (size == p4, c(p - 1) - c(2 * p - 1) + c(3 * p - 1)),
        (size == p4, 3 - 2 * c(p - 1) - 2 * c(p) + c(2 * p - 1) + c(2 * p)),
        (size == p4 && c(p) == 0, c(p - 1) - c(3 * p - 1)),
    ];
    let clauses = exprs
        .iter()
        .enumerate()
        .map(|(i, &(applies, v))| {
            let r = v.rem_euclid(p as i128) as u64;
            KemnitzClause {
                clause: i as u8 + 1,
                applies,
                residue: applies.then_some(r),
                holds: applies.then_some(r == 0),
            }
        })
        .collect();
    Ok(KemnitzReport { p, size: s, counts, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_encoding() {
        let g = Group::new(vec![3, 4]).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.exponent(), 12);
        for i in 0..12 {
            assert_eq!(g.encode(&g.decode(i)).unwrap(), i);
            assert_eq!(g.add(i, g.neg(i)), 0);
        }
        assert_eq!(g.decode(g.add(g.encode(&[2, 3]).unwrap(), g.encode(&[2, 2]).unwrap())), vec![1, 1]);
        assert_eq!(ZeroSumInstance::new(vec![3], vec![vec![7]]).unwrap().elements, vec![vec![1]]);
    }

    #[test]
    fn davenport_examples() {
        let g = Guards::default();
        assert_eq!(davenport_g(&Group::cyclic(3).unwrap(), &g).unwrap().g, 3);
        assert_eq!(davenport_g(&Group::elementary(2, 2).unwrap(), &g).unwrap().g, 3);
        assert_eq!(davenport_g(&Group::elementary(3, 2).unwrap(), &g).unwrap().g, 5);
        assert!(davenport_g(&Group::elementary(2, 4).unwrap(), &g).is_err());
    }

    #[test]
    fn olsen_example_is_zero_sum_free() {
        for (p, k) in [(2, 1), (2, 3), (3, 2), (5, 2)] {
            let inst = olsen_lower_example(p, k).unwrap();
            assert_eq!(inst.elements.len() as u64, k as u64 * (p - 1));
            let (g, e) = inst.encoded().unwrap();
            assert_eq!(zero_sum_subset(&g, &e), None);
            let mut longer = e.clone();
            longer.push(g.encode(&vec![1; k]).unwrap());
            let z = zero_sum_subset(&g, &longer).unwrap();
            assert_eq!(z.iter().fold(0, |a, &i| g.add(a, longer[i])), 0);
        }
    }

    #[test]
    fn egz_constants() {
        let g = Guards::default();
        assert_eq!(f_const_brute(&Group::cyclic(2).unwrap(), 2, &g).unwrap().f, 3);
        assert_eq!(f_const_brute(&Group::elementary(2, 2).unwrap(), 2, &g).unwrap().f, 5);
        assert_eq!(f_const_brute(&Group::cyclic(3).unwrap(), 3, &g).unwrap().f, 5);
        assert_eq!(f_const_brute(&Group::cyclic(4).unwrap(), 4, &g).unwrap().f, 7);
        assert!(f_const_brute(&Group::cyclic(4).unwrap(), 2, &g).is_err());
        // Z_6 with n = 6 is still fine; Z_2 with n = 4 asks for 4-term zero sums.
        assert_eq!(f_const_brute(&Group::cyclic(2).unwrap(), 4, &g).unwrap().f, 5);
    }

    #[test]
    fn egz_examples() {
        assert_eq!(egz_find(&[1, 1, 0], 2).unwrap().indices, vec![0, 1]);
        assert_eq!(egz_find(&[1, 1, 1, 2, 2], 3).unwrap().indices, vec![0, 1, 2]);
        let w = egz_find(&[5, 1, 2, 3, 4, 5, 1, 1, 1, 2, 3], 6).unwrap();
        assert_eq!(w.indices.len(), 6);
        assert_eq!(w.sum % 6, 0);
        assert!(egz_find(&[1, 2], 2).is_err());
    }

    #[test]
    fn kemnitz_examples() {
        let g = Guards::default();
        let inst = ZeroSumInstance::new(vec![2], vec![vec![0], vec![0]]).unwrap();
        assert_eq!(kemnitz_counts(&inst, &g).unwrap(), vec![1, 2, 1]);
        // Five elements of Z_2²: at p = 2, |J| = 5 is both 3p − 1 and 4p − 3.
        let inst = ZeroSumInstance::new(vec![2, 2], vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 1], vec![0, 1]])
            .unwrap();
        let r = kemnitz_congruences(&inst, &g).unwrap();
        assert_eq!(r.applicable(), 4);
        assert!(r.holds());
        assert!(!r.clauses[5].applies);
    }

    #[test]
    fn prime_factors() {
        assert_eq!(smallest_prime_factor(91), 7);
        assert_eq!(smallest_prime_factor(13), 13);
    }
}
