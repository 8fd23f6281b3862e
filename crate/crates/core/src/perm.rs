//! Permutations in one-line notation and small permutation groups.
//!
//! A permutation `p` maps `i` to `p[i]`. Products are read left to right:
//! `compose(a, b)` applies `a` first, then `b`.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigUint;
use thiserror::Error;

pub type Perm = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("group has more than {0} elements")]
    TooLarge(usize),
    #[error("degree {0} is too large for exhaustive enumeration")]
    DegreeTooLarge(usize),
    #[error("not a permutation of degree {0}")]
    NotAPermutation(usize),
}

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// `a` then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    a.iter().map(|&x| b[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Transposition of `i` and `j` on `n` points.
pub fn transposition(n: usize, i: usize, j: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i, j);
    p
}

/// Cycle lengths in decreasing order.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// Order of the centralizer in `Sym(n)` of a permutation with the given
/// cycle type: `prod i^(m_i) * m_i!`.
pub fn centralizer_order(cycle_type: &[usize]) -> BigUint {
    let mut out = BigUint::from(1u32);
    let mut i = 0;
    while i < cycle_type.len() {
        let len = cycle_type[i];
        let mult = cycle_type[i..].iter().take_while(|&&c| c == len).count();
        out *= BigUint::from(len).pow(mult as u32) * factorial(mult);
        i += mult;
    }
    out
}

/// Lexicographic rank of a permutation among all permutations of its degree.
pub fn rank(p: &[usize]) -> u64 {
    let n = p.len();
    let mut used = 0u64;
    let mut r = 0u64;
    for (i, &x) in p.iter().enumerate() {
        let smaller = (0..x).filter(|&y| used >> y & 1 == 0).count() as u64;
        r = r * (n - i) as u64 + smaller;
        used |= 1 << x;
    }
    r
}

pub fn unrank(mut r: u64, n: usize) -> Perm {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u64;
        digits[i] = (r % base) as usize;
        r /= base;
    }
    let mut avail: Vec<usize> = (0..n).collect();
    digits.iter().map(|&d| avail.remove(d)).collect()
}

/// A permutation group given by generators and, for small groups, the full
/// element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Closes `generators` under composition by breadth-first search,
    /// failing once more than `cap` elements appear.
    pub fn from_generators(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<PermGroup, PermError> {
        if generators.iter().any(|g| g.len() != degree || !is_permutation(g)) {
            return Err(PermError::NotAPermutation(degree));
        }
        let id = identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = compose(&x, g);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(PermError::TooLarge(cap));
                    }
                    elements.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup { degree, generators, elements })
    }

    pub fn symmetric(n: usize) -> Result<PermGroup, PermError> {
        if n > 9 {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(transposition(n, 0, 1));
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        PermGroup::from_generators(n, gens, usize::MAX)
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup { degree: n, generators: Vec::new(), elements: vec![identity(n)] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.elements.iter().any(|e| e == p)
    }
}

/// Number of `(G, G)`-double cosets in `Sym(n)`:
/// `sum_c |G ∩ c|^2 * z_c / |G|^2` over cycle types `c`, with `z_c` the
/// centralizer order.
pub fn count_double_cosets(group: &PermGroup) -> BigUint {
    use std::collections::BTreeMap;
    let mut classes: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for g in group.elements() {
        *classes.entry(cycle_type(g)).or_default() += 1;
    }
    let total: BigUint = classes
        .iter()
        .map(|(c, &k)| BigUint::from(k) * BigUint::from(k) * centralizer_order(c))
        .sum();
    let g2 = BigUint::from(group.order()) * BigUint::from(group.order());
    debug_assert!((&total % &g2) == BigUint::from(0u32));
    total / g2
}

/// Lexicographically least representative of every `(G, G)`-double coset
/// in `Sym(n)`, in increasing order. Only for `n <= 10`.
pub fn enumerate_double_coset_reps(group: &PermGroup) -> Result<Vec<Perm>, PermError> {
    let n = group.degree();
    if n > 10 {
        return Err(PermError::DegreeTooLarge(n));
    }
    let total = (1..=n as u64).product::<u64>();
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    let gens = group.generators();
    for r in 0..total {
        if seen[r as usize] {
            continue;
        }
        let rep = unrank(r, n);
        seen[r as usize] = true;
        let mut stack = vec![rep.clone()];
        while let Some(x) = stack.pop() {
            for g in gens {
                for y in [compose(g, &x), compose(&x, g)] {
                    let ry = rank(&y) as usize;
                    if !seen[ry] {
                        seen[ry] = true;
                        stack.push(y);
                    }
                }
            }
        }
        reps.push(rep);
    }
    Ok(reps)
}

/// Base and strong generating set built by the deterministic Schreier-Sims
/// algorithm.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[x]` maps `point` to `x`, for `x` in the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        transversal[point] = Some(identity(degree));
        Level { point, gens: Vec::new(), transversal, orbit: vec![point] }
    }

    fn rebuild_orbit(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(identity(degree));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            for g in &self.gens {
                let y = g[x];
                if self.transversal[y].is_none() {
                    let u = compose(self.transversal[x].as_ref().unwrap(), g);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
            i += 1;
        }
    }
}

impl StabChain {
    /// Builds a stabilizer chain whose base starts with `base_prefix`.
    pub fn new(degree: usize, generators: &[Perm], base_prefix: &[usize]) -> StabChain {
        let gens: Vec<Perm> = generators.iter().filter(|g| !is_identity(g)).cloned().collect();
        let mut chain = StabChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(b, degree));
        }
        for g in gens {
            chain.insert(g, 0);
        }
        chain.levels.retain(|l| l.orbit.len() > 1);
        chain
    }

    /// Sifts `g` from level `start`; returns the residue and the level at
    /// which it stopped.
    fn strip(&self, g: &[usize], start: usize) -> (Perm, usize) {
        let mut h = g.to_vec();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h[level.point];
            match &level.transversal[x] {
                Some(u) => h = compose(&h, &inverse(u)),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Adds `g` as a strong generator at level `start` and restores the
    /// Schreier condition below it.
    fn insert(&mut self, g: Perm, start: usize) {
        let (h, j) = self.strip(&g, start);
        if is_identity(&h) {
            return;
        }
        if j == self.levels.len() {
            let moved = (0..self.degree).find(|&x| h[x] != x).unwrap();
            self.levels.push(Level::new(moved, self.degree));
        }
        for level in &mut self.levels[start..=j] {
            level.gens.push(h.clone());
            level.rebuild_orbit();
        }
        // Schreier generators of every touched level must sift through
        for i in (start..=j).rev() {
            let mut k = 0;
            while k < self.levels[i].orbit.len() {
                let x = self.levels[i].orbit[k];
                let ngens = self.levels[i].gens.len();
                for gi in 0..ngens {
                    let level = &self.levels[i];
                    let gen = &level.gens[gi];
                    let ux = level.transversal[x].as_ref().unwrap();
                    let uy = level.transversal[gen[x]].as_ref().unwrap();
                    let s = compose(&compose(ux, gen), &inverse(uy));
                    if is_identity(&s) {
                        continue;
                    }
                    let (res, _) = self.strip(&s, i + 1);
                    if !is_identity(&res) {
                        self.insert(res, i + 1);
                    }
                }
                k += 1;
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    /// Strong generators fixing the first `depth` base points; they generate
    /// that pointwise stabilizer.
    pub fn stabilizer_generators(&self, depth: usize) -> &[Perm] {
        self.levels.get(depth).map_or(&[], |l| &l.gens)
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn contains(&self, g: &[usize]) -> bool {
        g.len() == self.degree && is_identity(&self.strip(g, 0).0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip() {
        for r in 0..120 {
            assert_eq!(rank(&unrank(r, 5)), r);
        }
        assert_eq!(unrank(0, 4), vec![0, 1, 2, 3]);
        assert_eq!(unrank(23, 4), vec![3, 2, 1, 0]);
    }

    #[test]
    fn composition_order() {
        let a = vec![1, 2, 0];
        let b = vec![0, 2, 1];
        // 0 -a-> 1 -b-> 2
        assert_eq!(compose(&a, &b)[0], 2);
        assert!(is_identity(&compose(&a, &inverse(&a))));
    }

    #[test]
    fn double_cosets_trivial_and_full() {
        for n in 1..=6 {
            let t = PermGroup::trivial(n);
            assert_eq!(count_double_cosets(&t), factorial(n));
            assert_eq!(enumerate_double_coset_reps(&t).unwrap().len() as u64, (1..=n as u64).product::<u64>());
            let s = PermGroup::symmetric(n).unwrap();
            assert_eq!(count_double_cosets(&s), BigUint::from(1u32));
            assert_eq!(enumerate_double_coset_reps(&s).unwrap(), vec![identity(n)]);
        }
    }

    #[test]
    fn centralizers() {
        // (12)(34) in Sym(4): 2^2 * 2! = 8
        assert_eq!(centralizer_order(&[2, 2]), BigUint::from(8u32));
        assert_eq!(centralizer_order(&[1, 1, 1]), BigUint::from(6u32));
    }

    #[test]
    fn schreier_sims_symmetric() {
        let s = PermGroup::symmetric(6).unwrap();
        let chain = StabChain::new(6, s.generators(), &[]);
        assert_eq!(chain.order(), BigUint::from(720u32));
        let cyc: Perm = (0..7).map(|i| (i + 1) % 7).collect();
        let chain = StabChain::new(7, std::slice::from_ref(&cyc), &[3]);
        assert_eq!(chain.order(), BigUint::from(7u32));
        assert_eq!(chain.base(), vec![3]);
        assert!(chain.contains(&compose(&cyc, &cyc)));
        assert!(!chain.contains(&transposition(7, 0, 1)));
    }

    #[test]
    fn closure_cap() {
        let s = PermGroup::symmetric(5).unwrap();
        assert!(PermGroup::from_generators(5, s.generators().to_vec(), 100).is_err());
    }
}
