//! Automorphism groups and canonical forms by individualization and
//! refinement.
//!
//! Partitions are ordered; each node of the search tree refines its
//! partition to an equitable one and the target cell is the first smallest
//! non-singleton cell. Every refinement leaves a trace hash, and the
//! canonical leaf is the largest by (trace sequence, relabelled adjacency).
//! Automorphisms found at leaves prune siblings in the same orbit of the
//! pointwise stabilizer of the current path.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{popcount_and, words_for, Graph};
use crate::graph6;
use crate::perm::{self, Perm, StabChain};

pub const MAX_VERTICES: usize = 1500;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    #[error("graph has {0} vertices; the limit is {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("colouring has {found} entries for {expected} vertices")]
    Colouring { expected: usize, found: usize },
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = (h ^ x).wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
struct Partition {
    lab: Vec<usize>,
    /// Start of the cell containing each position.
    cell_of: Vec<usize>,
    /// Cell length, valid at cell starts.
    len: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn from_colours(colours: &[usize]) -> (Partition, Vec<usize>) {
        let n = colours.len();
        let mut lab: Vec<usize> = (0..n).collect();
        lab.sort_by_key(|&v| colours[v]);
        let mut cell_of = vec![0; n];
        let mut len = vec![0; n];
        let mut starts = Vec::new();
        let mut start = 0;
        for p in 0..n {
            if p > 0 && colours[lab[p]] != colours[lab[p - 1]] {
                start = p;
            }
            if start == p {
                starts.push(p);
            }
            cell_of[p] = start;
            len[start] += 1;
        }
        let cells = starts.len();
        (Partition { lab, cell_of, len, cells }, starts)
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut p = 0;
        while p < self.lab.len() {
            let l = self.len[p];
            if l > 1 && best.is_none_or(|b| l < self.len[b]) {
                best = Some(p);
            }
            p += l;
        }
        best
    }

    /// Splits `v` off the front of its cell; returns the position of the
    /// new singleton.
    fn individualize(&mut self, v: usize) -> usize {
        let p = self.lab.iter().position(|&x| x == v).unwrap();
        let c = self.cell_of[p];
        self.lab.swap(c, p);
        let l = self.len[c];
        self.len[c] = 1;
        self.len[c + 1] = l - 1;
        for q in c + 1..c + l {
            self.cell_of[q] = c + 1;
        }
        self.cells += 1;
        c
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the splitter cells in `queue`. Returns the trace hash.
    fn refine(&mut self, g: &Graph, mut queue: BTreeSet<usize>, mut trace: u64, counts: &mut [u32]) -> u64 {
        let n = self.lab.len();
        let mut mask = vec![0u64; words_for(n)];
        while let Some(w) = queue.pop_first() {
            if self.is_discrete() {
                break;
            }
            let wl = self.len[w];
            let singleton = (wl == 1).then(|| self.lab[w]);
            if singleton.is_none() {
                mask.iter_mut().for_each(|m| *m = 0);
                for &x in &self.lab[w..w + wl] {
                    mask[x / 64] |= 1 << (x % 64);
                }
            }
            trace = mix(trace, w as u64);
            let mut c = 0;
            while c < n {
                let l = self.len[c];
                if l == 1 {
                    c += 1;
                    continue;
                }
                for p in c..c + l {
                    let x = self.lab[p];
                    counts[x] = match singleton {
                        Some(u) => g.has_edge(u, x) as u32,
                        None => popcount_and(g.row(x), &mask),
                    };
                }
                let first = counts[self.lab[c]];
                if self.lab[c + 1..c + l].iter().all(|&x| counts[x] == first) {
                    trace = mix(trace, (c as u64) << 32 | first as u64);
                    c += l;
                    continue;
                }
                self.lab[c..c + l].sort_unstable_by_key(|&x| (counts[x], x));
                let was_queued = queue.contains(&c);
                let mut frags = Vec::new();
                let mut s = c;
                for p in c + 1..=c + l {
                    if p == c + l || counts[self.lab[p]] != counts[self.lab[s]] {
                        frags.push((s, p - s));
                        trace = mix(trace, (p - s) as u64 ^ (counts[self.lab[s]] as u64) << 32);
                        s = p;
                    }
                }
                for &(s, fl) in &frags {
                    self.len[s] = fl;
                    for q in s..s + fl {
                        self.cell_of[q] = s;
                    }
                }
                self.cells += frags.len() - 1;
                if was_queued {
                    queue.extend(frags.iter().map(|f| f.0));
                } else {
                    let big = frags.iter().enumerate().max_by_key(|(i, f)| (f.1, usize::MAX - i)).unwrap().0;
                    queue.extend(frags.iter().enumerate().filter(|&(i, _)| i != big).map(|(_, f)| f.0));
                }
                c += l;
            }
        }
        mix(trace, self.cells as u64)
    }
}

#[derive(Debug, Clone)]
struct Leaf {
    path: Vec<usize>,
    trace: Vec<u64>,
    lab: Vec<usize>,
    rows: Vec<u64>,
}

fn relabelled_rows(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let w = words_for(n);
    let mut rows = vec![0u64; n * w];
    for i in 0..n {
        let r = &mut rows[i * w..(i + 1) * w];
        for j in 0..n {
            if g.has_edge(lab[i], lab[j]) {
                r[j / 64] |= 1 << (j % 64);
            }
        }
    }
    rows
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Union-find orbits of the group generated by `gens`; returns the
/// smallest point of each point's orbit.
fn orbit_roots(n: usize, gens: &[&Perm]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

struct Search<'a> {
    g: &'a Graph,
    gens: Vec<Perm>,
    first: Option<Leaf>,
    best: Option<Leaf>,
    counts: Vec<u32>,
    nodes: u64,
}

impl Search<'_> {
    fn add_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        debug_assert!(self.g.is_automorphism(&gamma));
        if !perm::is_identity(&gamma) && !self.gens.contains(&gamma) {
            self.gens.push(gamma);
        }
    }

    /// Explores the subtree at `part`. A return value `Some(l)` asks every
    /// node deeper than `l` to stop.
    fn explore(&mut self, part: &Partition, path: &mut Vec<usize>, trace: &mut Vec<u64>, eq_first: bool) -> Option<usize> {
        self.nodes += 1;
        let depth = path.len();
        if part.is_discrete() {
            return self.leaf(part, path, trace, eq_first);
        }
        let t = part.target_cell().expect("non-discrete partition has a target");
        let mut children: Vec<usize> = part.lab[t..t + part.len[t]].to_vec();
        children.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        let mut roots_for = usize::MAX;
        let mut roots: Vec<usize> = Vec::new();
        for v in children {
            if !explored.is_empty() {
                if roots_for != self.gens.len() {
                    let fixing: Vec<&Perm> = self.gens.iter().filter(|g| path.iter().all(|&x| g[x] == x)).collect();
                    roots = orbit_roots(part.lab.len(), &fixing);
                    roots_for = self.gens.len();
                }
                if explored.iter().any(|&u| roots[u] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = part.clone();
            let pos = child.individualize(v);
            let h = child.refine(self.g, BTreeSet::from([pos]), mix(trace[depth], pos as u64), &mut self.counts);
            let child_eq_first = eq_first && self.first.as_ref().is_none_or(|f| f.trace.get(depth + 1) == Some(&h));
            path.push(v);
            trace.push(h);
            if !child_eq_first && self.cmp_best(trace) == Ordering::Less {
                path.pop();
                trace.pop();
                continue;
            }
            let jump = self.explore(&child, path, trace, child_eq_first);
            path.pop();
            trace.pop();
            if let Some(l) = jump {
                if l < depth {
                    return Some(l);
                }
            }
        }
        None
    }

    /// Compares a trace prefix with the same prefix of the best leaf.
    fn cmp_best(&self, trace: &[u64]) -> Ordering {
        let Some(best) = &self.best else { return Ordering::Equal };
        let k = trace.len().min(best.trace.len());
        trace[..k].cmp(&best.trace[..k])
    }

    fn leaf(&mut self, part: &Partition, path: &[usize], trace: &[u64], eq_first: bool) -> Option<usize> {
        let rows = relabelled_rows(self.g, &part.lab);
        let leaf = Leaf { path: path.to_vec(), trace: trace.to_vec(), lab: part.lab.clone(), rows };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if eq_first && leaf.rows == first.rows {
            let (lab, level) = (first.lab.clone(), common_prefix(path, &first.path));
            self.add_automorphism(&leaf.lab, &lab);
            return Some(level);
        }
        let best = self.best.as_ref().unwrap();
        let cmp = leaf.trace.cmp(&best.trace).then_with(|| leaf.rows.cmp(&best.rows));
        match cmp {
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Equal => {
                let (lab, level) = (best.lab.clone(), common_prefix(path, &best.path));
                self.add_automorphism(&leaf.lab, &lab);
                return Some(level);
            }
            Ordering::Less => {}
        }
        None
    }
}

/// Raw output of one search.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub generators: Vec<Perm>,
    /// Canonical labelling: position `i` of the canonical graph is vertex
    /// `labelling[i]`.
    pub labelling: Vec<usize>,
    /// Individualized vertices along the first path.
    pub first_path: Vec<usize>,
    pub nodes: u64,
}

pub fn search(g: &Graph, colours: Option<&[usize]>) -> Result<SearchResult, SymmetryError> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(SymmetryError::TooLarge(n));
    }
    let unit = vec![0; n];
    let colours = colours.unwrap_or(&unit);
    if colours.len() != n {
        return Err(SymmetryError::Colouring { expected: n, found: colours.len() });
    }
    let (mut part, starts) = Partition::from_colours(colours);
    let mut s = Search { g, gens: Vec::new(), first: None, best: None, counts: vec![0; n], nodes: 0 };
    let h = part.refine(g, starts.into_iter().collect(), 0, &mut s.counts);
    s.explore(&part, &mut Vec::new(), &mut vec![h], true);
    let first = s.first.expect("the first path reaches a leaf");
    let best = s.best.expect("the first path reaches a leaf");
    Ok(SearchResult { generators: s.gens, labelling: best.lab, first_path: first.path, nodes: s.nodes })
}

/// Canonical relabelling of a graph, optionally respecting a vertex
/// colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub labelling: Vec<usize>,
    pub graph: Graph,
    /// graph6 of the canonical graph, preceded by the colour class sizes
    /// when a colouring was given.
    pub certificate: Vec<u8>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SymmetryError> {
    canonical_form_coloured(g, None)
}

pub fn canonical_form_coloured(g: &Graph, colours: Option<&[usize]>) -> Result<CanonicalForm, SymmetryError> {
    let r = search(g, colours)?;
    Ok(canonical_from_labelling(g, colours, r.labelling))
}

fn canonical_from_labelling(g: &Graph, colours: Option<&[usize]>, labelling: Vec<usize>) -> CanonicalForm {
    let mut inv = vec![0; labelling.len()];
    for (i, &v) in labelling.iter().enumerate() {
        inv[v] = i;
    }
    let graph = g.relabel(&inv);
    let mut certificate = Vec::new();
    if let Some(c) = colours {
        let mut sorted: Vec<usize> = labelling.iter().map(|&v| c[v]).collect();
        sorted.dedup();
        for colour in sorted {
            let size = c.iter().filter(|&&x| x == colour).count();
            certificate.extend(format!("{colour}:{size};").bytes());
        }
    }
    certificate.extend(graph6::encode(&graph).bytes());
    CanonicalForm { labelling, graph, certificate }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, SymmetryError> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)?.certificate == canonical_form(h)?.certificate)
}

fn order_as_string<S: Serializer>(order: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&order.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDescription {
    pub generators: Vec<Perm>,
    #[serde(serialize_with = "order_as_string")]
    pub order: BigUint,
    /// Orbits sorted by their least vertex; each orbit sorted.
    pub vertex_orbits: Vec<Vec<usize>>,
    /// Number of orbits on ordered pairs, diagonal included.
    pub pair_orbit_count: usize,
    pub base: Vec<usize>,
}

impl GroupDescription {
    pub fn from_generators(n: usize, generators: Vec<Perm>, base_prefix: &[usize]) -> GroupDescription {
        let chain = StabChain::new(n, &generators, base_prefix);
        let refs: Vec<&Perm> = generators.iter().collect();
        let roots = orbit_roots(n, &refs);
        let mut vertex_orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if roots[x] == x {
                vertex_orbits.push(Vec::new());
            }
        }
        let mut slot = vec![usize::MAX; n];
        let mut k = 0;
        for x in 0..n {
            if roots[x] == x {
                slot[x] = k;
                k += 1;
            }
            vertex_orbits[slot[roots[x]]].push(x);
        }
        let pair_orbit_count = vertex_orbits
            .iter()
            .map(|o| {
                let x = o[0];
                let local = StabChain::new(n, &generators, &[x]);
                let stab: Vec<&Perm> = if local.base().first() == Some(&x) {
                    local.stabilizer_generators(1).iter().collect()
                } else {
                    refs.clone()
                };
                let r = orbit_roots(n, &stab);
                (0..n).filter(|&y| r[y] == y).count()
            })
            .sum();
        GroupDescription { generators, order: chain.order(), vertex_orbits, pair_orbit_count, base: chain.base() }
    }

    pub fn is_transitive(&self) -> bool {
        self.vertex_orbits.len() <= 1
    }

    /// Rank of a vertex-transitive group; `None` otherwise.
    pub fn rank(&self) -> Option<usize> {
        self.is_transitive().then_some(self.pair_orbit_count)
    }

    /// Sorted vertex-orbit sizes.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        let mut l: Vec<usize> = self.vertex_orbits.iter().map(Vec::len).collect();
        l.sort_unstable();
        l
    }
}

/// Automorphism group together with the canonical form from the same
/// search.
#[derive(Debug, Clone)]
pub struct Symmetry {
    pub group: GroupDescription,
    pub canonical: CanonicalForm,
    pub nodes: u64,
}

pub fn analyse(g: &Graph, colours: Option<&[usize]>) -> Result<Symmetry, SymmetryError> {
    let r = search(g, colours)?;
    let group = GroupDescription::from_generators(g.order(), r.generators, &r.first_path);
    let canonical = canonical_from_labelling(g, colours, r.labelling);
    Ok(Symmetry { group, canonical, nodes: r.nodes })
}

pub fn automorphism_group(g: &Graph) -> Result<GroupDescription, SymmetryError> {
    automorphism_group_coloured(g, None)
}

pub fn automorphism_group_coloured(g: &Graph, colours: Option<&[usize]>) -> Result<GroupDescription, SymmetryError> {
    Ok(analyse(g, colours)?.group)
}

pub fn rank_of(g: &Graph) -> Result<Option<usize>, SymmetryError> {
    Ok(automorphism_group(g)?.rank())
}

pub fn orbit_lengths(g: &Graph) -> Result<Vec<usize>, SymmetryError> {
    Ok(automorphism_group(g)?.orbit_lengths())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::polar_graph;
    use crate::field::Field;
    use crate::space::FormedSpace;
    use std::sync::Arc;

    fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        Graph::from_fn(10, |i, j| {
            let (a, b) = (pairs[i], pairs[j]);
            a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
        })
    }

    #[test]
    fn small_groups() {
        let c5 = automorphism_group(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.order, BigUint::from(10u32));
        assert_eq!(c5.rank(), Some(3));
        assert_eq!(rank_of(&Graph::complete(4)).unwrap(), Some(2));
        let p = automorphism_group(&petersen()).unwrap();
        assert_eq!(p.order, BigUint::from(120u32));
        assert_eq!(p.rank(), Some(3));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let a = automorphism_group(&path).unwrap();
        assert_eq!(a.order, BigUint::from(2u32));
        assert_eq!(a.orbit_lengths(), vec![2, 2]);
        assert_eq!(a.rank(), None);
        assert_eq!(automorphism_group(&Graph::empty(0)).unwrap().order, BigUint::from(1u32));
    }

    #[test]
    fn sp6_2_is_rank_three() {
        let f = Arc::new(Field::of_order(2).unwrap());
        let g = polar_graph(&FormedSpace::symplectic(f, 6).unwrap()).unwrap().graph;
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order, BigUint::from(1_451_520u32));
        assert_eq!(a.rank(), Some(3));
        assert!(a.generators.iter().all(|p| g.is_automorphism(p)));
    }

    #[test]
    fn relabelling_invariance() {
        let g = petersen();
        let c = canonical_form(&g).unwrap();
        let mut p: Perm = (0..10).collect();
        for k in 0..10 {
            p.rotate_left(3);
            p.swap(0, k);
            assert_eq!(canonical_form(&g.relabel(&p)).unwrap().certificate, c.certificate);
        }
        assert!(!is_isomorphic(&g, &Graph::cycle(10)).unwrap());
    }

    #[test]
    fn colours_restrict_the_group() {
        let c4 = Graph::cycle(4);
        let a = automorphism_group_coloured(&c4, Some(&[0, 1, 0, 1])).unwrap();
        assert_eq!(a.order, BigUint::from(4u32));
        assert_eq!(a.orbit_lengths(), vec![2, 2]);
        assert!(matches!(search(&c4, Some(&[0])), Err(SymmetryError::Colouring { .. })));
    }
}
