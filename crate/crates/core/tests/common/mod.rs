//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use srgkit::graph::Graph;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// `(v, k, lambda, mu)` by counting, or `None`. Complete and edgeless graphs
/// are excluded.
pub fn naive_srg(g: &Graph) -> Option<(u64, u64, u64, u64)> {
    let n = g.order();
    let deg = |x: usize| (0..n).filter(|&y| y != x && g.has_edge(x, y)).count();
    let k = deg(0);
    if n < 2 || (0..n).any(|x| deg(x) != k) || k == 0 || k == n - 1 {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let c = (0..n).filter(|&z| z != x && z != y && g.has_edge(x, z) && g.has_edge(y, z)).count();
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            if *slot.get_or_insert(c) != c {
                return None;
            }
        }
    }
    Some((n as u64, k as u64, lambda? as u64, mu? as u64))
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    let mut out = vec![a.clone()];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn brute_aut_order(g: &Graph) -> u64 {
    let n = g.order();
    all_permutations(n)
        .iter()
        .filter(|p| (0..n).all(|i| (0..n).all(|j| i == j || g.has_edge(i, j) == g.has_edge(p[i], p[j]))))
        .count() as u64
}

/// graph6 decoder for `n < 63`, written against the format description.
pub fn naive_graph6_decode(s: &str) -> Graph {
    let b = s.as_bytes();
    let n = (b[0] - 63) as usize;
    assert!(n < 63);
    let mut bits = b[1..].iter().flat_map(|&c| (0..6).rev().map(move |i| ((c - 63) >> i) & 1 == 1));
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if bits.next().unwrap() {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Edge count of the common neighbourhood of every pair, split by
/// adjacency; `Some((alpha, beta))` when each class takes one value.
pub fn naive_four_vc(g: &Graph) -> Option<(u64, u64)> {
    let n = g.order();
    let (mut a, mut b) = (None, None);
    for x in 0..n {
        for y in x + 1..n {
            let c: Vec<usize> = (0..n).filter(|&z| z != x && z != y && g.has_edge(x, z) && g.has_edge(y, z)).collect();
            let mut e = 0u64;
            for (i, &u) in c.iter().enumerate() {
                e += c[i + 1..].iter().filter(|&&w| g.has_edge(u, w)).count() as u64;
            }
            let slot = if g.has_edge(x, y) { &mut a } else { &mut b };
            if *slot.get_or_insert(e) != e {
                return None;
            }
        }
    }
    Some((a?, b?))
}

/// Schoolbook arithmetic on base-`p` digit vectors modulo a monic
/// polynomial, lowest coefficient first.
pub struct PolyField {
    pub p: u32,
    pub modulus: Vec<u32>,
}

impl PolyField {
    fn k(&self) -> usize {
        self.modulus.len() - 1
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        (0..self.k())
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn value(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        self.value(&x.iter().zip(&y).map(|(s, t)| (s + t) % self.p).collect::<Vec<_>>())
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let k = self.k();
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * k];
        for (i, &s) in x.iter().enumerate() {
            for (j, &t) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + s as u64 * t as u64) % p;
            }
        }
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                prod[d - k + i] = (prod[d - k + i] + (p - c) * m as u64) % p;
            }
        }
        self.value(&prod[..k].iter().map(|&c| c as u32).collect::<Vec<_>>())
    }
}
