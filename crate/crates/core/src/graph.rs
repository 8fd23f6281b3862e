//! Simple undirected graphs stored as bitset adjacency rows.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("adjacency is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

#[inline]
pub fn popcount(a: &[u64]) -> u32 {
    a.iter().map(|x| x.count_ones()).sum()
}

/// Iterates the set bits of a bitset in increasing order.
pub fn bits(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(w, &word)| {
        let mut x = word;
        std::iter::from_fn(move || {
            if x == 0 {
                None
            } else {
                let t = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + t)
            }
        })
    })
}

/// Mutable adjacency used while constructing a [`Graph`].
#[derive(Clone)]
pub struct GraphBuilder {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> GraphBuilder {
        let words = words_for(n);
        GraphBuilder { n, words, adj: vec![0; n * words] }
    }

    #[inline]
    pub fn add_edge(&mut self, i: usize, j: usize) {
        debug_assert!(i != j);
        self.adj[i * self.words + j / 64] |= 1 << (j % 64);
        self.adj[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove_edge(&mut self, i: usize, j: usize) {
        self.adj[i * self.words + j / 64] &= !(1 << (j % 64));
        self.adj[j * self.words + i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn set_edge(&mut self, i: usize, j: usize, on: bool) {
        if on {
            self.add_edge(i, j)
        } else {
            self.remove_edge(i, j)
        }
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn build(self) -> Graph {
        Graph { n: self.n, words: self.words, adj: self.adj }
    }
}

/// An immutable simple graph. Symmetric and irreflexive by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(v={}, e={})", self.n, self.edge_count())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn from_fn(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Graph {
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    b.add_edge(i, j);
                }
            }
        }
        b.build()
    }

    /// Like [`Graph::from_fn`] but fills rows in parallel; `adjacent` must be
    /// symmetric and is evaluated on every ordered pair.
    pub fn from_fn_par(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Graph {
        let words = words_for(n);
        let mut adj = vec![0u64; n * words];
        if words > 0 {
            adj.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
                for j in (0..n).filter(|&j| j != i) {
                    if adjacent(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
            });
        }
        let g = Graph { n, words, adj };
        debug_assert!((0..n).all(|i| g.neighbors(i).all(|j| g.has_edge(j, i))));
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n);
        for &(i, j) in edges {
            if i >= n {
                return Err(GraphError::VertexOutOfRange(i));
            }
            if j >= n {
                return Err(GraphError::VertexOutOfRange(j));
            }
            if i == j {
                return Err(GraphError::Loop(i));
            }
            b.add_edge(i, j);
        }
        Ok(b.build())
    }

    /// Wraps raw bit rows after checking symmetry and irreflexivity.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Graph, GraphError> {
        let words = words_for(n);
        assert_eq!(rows.len(), n * words, "row buffer has the wrong length");
        let g = Graph { n, words, adj: rows };
        for i in 0..n {
            if g.has_edge(i, i) {
                return Err(GraphError::Loop(i));
            }
            for j in g.neighbors(i) {
                if j >= n {
                    return Err(GraphError::VertexOutOfRange(j));
                }
                if !g.has_edge(j, i) {
                    return Err(GraphError::NotSymmetric(i, j));
                }
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |i, j| (j - i) == 1 || (i == 0 && j == n - 1))
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        popcount(self.row(i)) as usize
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(i))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    #[inline]
    pub fn common_neighbor_count(&self, i: usize, j: usize) -> usize {
        popcount_and(self.row(i), self.row(j)) as usize
    }

    /// Bitset of the common neighbours of `i` and `j`.
    pub fn common_neighbors(&self, i: usize, j: usize) -> Vec<u64> {
        self.row(i).iter().zip(self.row(j)).map(|(a, b)| a & b).collect()
    }

    /// Number of edges inside the vertex set `mask`.
    pub fn edges_within(&self, mask: &[u64]) -> usize {
        bits(mask).map(|z| popcount_and(self.row(z), mask) as usize).sum::<usize>() / 2
    }

    /// Induced subgraph on `vertices`, keeping their order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let m = vertices.len();
        let mut b = GraphBuilder::new(m);
        for (a, &x) in vertices.iter().enumerate() {
            for (c, &y) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(x, y) {
                    b.add_edge(a, c);
                }
            }
        }
        b.build()
    }

    pub fn induced_mask(&self, mask: &[u64]) -> Graph {
        let vs: Vec<usize> = bits(mask).collect();
        self.induced(&vs)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = self.adj.clone();
        let tail = self.n % 64;
        for i in 0..self.n {
            let row = &mut adj[i * self.words..(i + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[i / 64] &= !(1 << (i % 64));
        }
        Graph { n: self.n, words: self.words, adj }
    }

    /// The graph with vertex `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for i in 0..self.n {
            for j in self.neighbors(i) {
                if i < j {
                    b.add_edge(perm[i], perm[j]);
                }
            }
        }
        b.build()
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder { n: self.n, words: self.words, adj: self.adj.clone() }
    }

    pub fn is_regular(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|i| self.degree(i) == k).then_some(k)
    }

    /// Bitset with every vertex set.
    pub fn full_mask(&self) -> Vec<u64> {
        let mut m = vec![u64::MAX; self.words];
        let tail = self.n % 64;
        if tail != 0 {
            m[self.words - 1] = (1u64 << tail) - 1;
        }
        m
    }

    /// Maps each vertex `i` to `perm[i]` and checks every adjacency survives.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        (0..self.n).all(|i| self.neighbors(i).all(|j| self.has_edge(perm[i], perm[j])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_basics() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.is_regular(), Some(2));
        let comp = c5.complement();
        assert_eq!(comp.is_regular(), Some(2));
        assert_eq!(comp.complement(), c5);
        assert_eq!(c5.common_neighbor_count(0, 2), 1);
    }

    #[test]
    fn validation() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange(3)));
        let rows = vec![0b10, 0b00];
        assert_eq!(Graph::from_rows(2, rows), Err(GraphError::NotSymmetric(0, 1)));
    }

    #[test]
    fn complement_across_word_boundary() {
        let g = Graph::cycle(130);
        let c = g.complement();
        assert_eq!(c.degree(0), 127);
        assert!(!c.has_edge(5, 5));
        assert_eq!(c.complement(), g);
    }
}
