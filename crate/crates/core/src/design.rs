//! Symmetric 2-designs, stored as sorted blocks over points `0..v`.
//!
//! Text format: a header line `v k lambda`, then one block per line as
//! sorted space-separated point indices. Blank lines and lines starting
//! with `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected {expected} blocks, found {found}")]
    BlockCount { expected: usize, found: usize },
    #[error("block {block} has {found} points, expected {expected}")]
    BlockSize { block: usize, expected: usize, found: usize },
    #[error("block {block} contains point {point} outside 0..{v}")]
    PointOutOfRange { block: usize, point: u32, v: usize },
    #[error("block {0} repeats a point or is not sorted")]
    UnsortedBlock(usize),
    #[error("blocks {0} and {1} coincide")]
    DuplicateBlock(usize, usize),
    #[error("points {a} and {b} lie in {found} blocks, expected {expected}")]
    PairCoverage { a: u32, b: u32, expected: usize, found: usize },
    #[error("parameters 2-({v}, {k}, {lambda}) are not those of a symmetric design")]
    BadParameters { v: usize, k: usize, lambda: usize },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricDesign {
    v: usize,
    k: usize,
    lambda: usize,
    blocks: Vec<Vec<u32>>,
}

impl SymmetricDesign {
    /// Validates the 2-design axioms. Blocks must be sorted.
    pub fn new(v: usize, k: usize, lambda: usize, blocks: Vec<Vec<u32>>) -> Result<SymmetricDesign, DesignError> {
        if v < 2 || k >= v || k * (k - 1) != lambda * (v - 1) {
            return Err(DesignError::BadParameters { v, k, lambda });
        }
        if blocks.len() != v {
            return Err(DesignError::BlockCount { expected: v, found: blocks.len() });
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != k {
                return Err(DesignError::BlockSize { block: i, expected: k, found: b.len() });
            }
            if let Some(&p) = b.iter().find(|&&p| p as usize >= v) {
                return Err(DesignError::PointOutOfRange { block: i, point: p, v });
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(DesignError::UnsortedBlock(i));
            }
        }
        for i in 0..v {
            if let Some(j) = (i + 1..v).find(|&j| blocks[i] == blocks[j]) {
                return Err(DesignError::DuplicateBlock(i, j));
            }
        }
        let mut pairs = vec![0usize; v * v];
        for b in &blocks {
            for (x, &a) in b.iter().enumerate() {
                for &c in &b[x + 1..] {
                    pairs[a as usize * v + c as usize] += 1;
                }
            }
        }
        for a in 0..v {
            for b in a + 1..v {
                let found = pairs[a * v + b];
                if found != lambda {
                    return Err(DesignError::PairCoverage { a: a as u32, b: b as u32, expected: lambda, found });
                }
            }
        }
        Ok(SymmetricDesign { v, k, lambda, blocks })
    }

    pub fn parse(text: &str) -> Result<SymmetricDesign, DesignError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let nums = |line: usize, l: &str| -> Result<Vec<u64>, DesignError> {
            l.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|e| DesignError::Parse { line, msg: format!("{t:?}: {e}") }))
                .collect()
        };
        let (hl, header) = lines.next().ok_or(DesignError::Parse { line: 1, msg: "missing header".into() })?;
        let h = nums(hl, header)?;
        let [v, k, lambda] = h[..] else {
            return Err(DesignError::Parse { line: hl, msg: "header must be `v k lambda`".into() });
        };
        let mut blocks = Vec::new();
        for (line, l) in lines {
            blocks.push(nums(line, l)?.into_iter().map(|x| x as u32).collect());
        }
        SymmetricDesign::new(v as usize, k as usize, lambda as usize, blocks)
    }

    /// Reads and validates a design file.
    pub fn from_file(path: &Path) -> Result<SymmetricDesign, DesignError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| DesignError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        SymmetricDesign::parse(&text)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n", self.v, self.k, self.lambda);
        for b in &self.blocks {
            let line: Vec<String> = b.iter().map(|p| p.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn block_size(&self) -> usize {
        self.k
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Bipartite point-block incidence graph (points first) with the
    /// colouring that separates points from blocks.
    pub fn incidence_graph(&self) -> (Graph, Vec<usize>) {
        let mut b = GraphBuilder::new(2 * self.v);
        for (i, block) in self.blocks.iter().enumerate() {
            for &p in block {
                b.add_edge(p as usize, self.v + i);
            }
        }
        let colours = (0..2 * self.v).map(|x| usize::from(x >= self.v)).collect();
        (b.build(), colours)
    }
}

/// The 2-(15, 7, 3) designs other than the hyperplanes of PG(3, 2), named
/// by the order of their automorphism group.
pub const NON_GEOMETRIC_15_7_3: [(&str, &str); 4] = [
    ("aut576", include_str!("../data/designs/aut576.txt")),
    ("aut168a", include_str!("../data/designs/aut168a.txt")),
    ("aut168b", include_str!("../data/designs/aut168b.txt")),
    ("aut96", include_str!("../data/designs/aut96.txt")),
];

pub fn non_geometric_15_7_3() -> Vec<(&'static str, SymmetricDesign)> {
    NON_GEOMETRIC_15_7_3
        .iter()
        .map(|(name, text)| (*name, SymmetricDesign::parse(text).expect("bundled design is valid")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FANO: &str = "7 3 1\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";

    #[test]
    fn fano_round_trip() {
        let d = SymmetricDesign::parse(FANO).unwrap();
        assert_eq!(d.points(), 7);
        assert_eq!(SymmetricDesign::parse(&d.to_text()).unwrap(), d);
        let (g, colours) = d.incidence_graph();
        assert_eq!(g.edge_count(), 21);
        assert_eq!(colours.iter().filter(|&&c| c == 1).count(), 7);
    }

    #[test]
    fn bundled_designs_parse() {
        let all = non_geometric_15_7_3();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|(_, d)| d.points() == 15 && d.block_size() == 7 && d.lambda() == 3));
    }

    #[test]
    fn rejects_bad_designs() {
        let dup = FANO.replace("2 4 5", "0 1 2");
        assert!(matches!(SymmetricDesign::parse(&dup), Err(DesignError::DuplicateBlock(0, 6))));
        let cover = FANO.replace("2 4 5", "2 4 6");
        assert!(matches!(SymmetricDesign::parse(&cover), Err(DesignError::PairCoverage { .. })));
        assert!(matches!(SymmetricDesign::parse("7 3 2\n"), Err(DesignError::BadParameters { .. })));
        assert!(matches!(SymmetricDesign::parse("7 3 1\n0 1 x\n"), Err(DesignError::Parse { line: 2, .. })));
        let unsorted = FANO.replace("0 1 2", "1 0 2");
        assert!(matches!(SymmetricDesign::parse(&unsorted), Err(DesignError::UnsortedBlock(0))));
    }
}
