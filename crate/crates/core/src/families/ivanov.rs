//! Cayley graphs on `GF(2)^(2m)` defined by a set of points at infinity.
//! Vector `x` is stored as the integer whose big-endian bits are its
//! coordinates, so coordinate `i` (0-based) is bit `2m-1-i`.

use crate::graph::Graph;

use super::{expect_srg, invalid, FamilyError};

const MAX_M: u32 = 6;

#[inline]
fn coord(x: u32, n: u32, i: u32) -> u32 {
    (x >> (n - 1 - i)) & 1
}

/// Graph on `0..2^bits`, `x ~ y` iff `member[x ^ y]`. `member[0]` is ignored.
pub fn binary_cayley_graph(bits: u32, member: &[bool]) -> Graph {
    let v = 1usize << bits;
    assert_eq!(member.len(), v, "membership table must cover every vector");
    Graph::from_fn_par(v, |a, b| member[a ^ b])
}

fn check_m(m: u32, min: u32) -> Result<(), FamilyError> {
    if m < min || m > MAX_M {
        return Err(invalid(format!("m = {m} must lie in {min}..={MAX_M}")));
    }
    Ok(())
}

fn a_minus(t: u64) -> (u64, u64, u64, u64) {
    (4 * t * t, 2 * t * t + t, t * t + t, t * t + t)
}

fn b_minus(t: u64) -> (u64, u64, u64, u64) {
    (2 * t * t + t, t * t + t, t * (t + 1) / 2, t * (t + 2) / 2)
}

fn c_minus(t: u64) -> (u64, u64, u64, u64) {
    (2 * t * t - t - 1, t * t, t * (t + 1) / 2, t * t / 2)
}

/// Vectors adjacent when their difference lies on the hyperbolic quadric
/// `sum x_(2i) x_(2i+1)` but outside the maximal singular subspace spanned
/// by the even-indexed basis vectors.
pub fn ivanov_gamma(m: u32) -> Result<Graph, FamilyError> {
    check_m(m, 2)?;
    let n = 2 * m;
    let member: Vec<bool> = (0..1u32 << n)
        .map(|x| {
            let q = (0..m).fold(0, |acc, i| acc ^ (coord(x, n, 2 * i) & coord(x, n, 2 * i + 1)));
            let in_s = (0..m).all(|i| coord(x, n, 2 * i + 1) == 0);
            x != 0 && q == 0 && !in_s
        })
        .collect();
    let g = binary_cayley_graph(n, &member);
    let t = 1u64 << (m - 1);
    expect_srg("ivanov-gamma", &g, (4 * t * t, 2 * t * t - t, t * t - t, t * t - t))?;
    Ok(g)
}

/// The elliptic form `x0^2 + x1^2 + x0 x1 + x2 x3 + ... ` on `GF(2)^(2m)`
/// with `S = { x : x0 = x1 = 0, x2 = x4 = ... = 0 }` and
/// `S^perp = { x : x2 = x4 = ... = 0 }`.
#[derive(Debug, Clone, Copy)]
pub struct SigmaCoordinates {
    pub m: u32,
}

impl SigmaCoordinates {
    fn n(&self) -> u32 {
        2 * self.m
    }

    pub fn quad(&self, x: u32) -> u32 {
        let n = self.n();
        let (a, b) = (coord(x, n, 0), coord(x, n, 1));
        (1..self.m).fold(a ^ b ^ (a & b), |acc, i| acc ^ (coord(x, n, 2 * i) & coord(x, n, 2 * i + 1)))
    }

    pub fn bilinear(&self, x: u32, y: u32) -> u32 {
        (self.quad(x ^ y) ^ self.quad(x) ^ self.quad(y)) & 1
    }

    pub fn in_s_perp(&self, x: u32) -> bool {
        let n = self.n();
        (1..self.m).all(|i| coord(x, n, 2 * i) == 0)
    }

    pub fn in_s(&self, x: u32) -> bool {
        let n = self.n();
        self.in_s_perp(x) && coord(x, n, 0) == 0 && coord(x, n, 1) == 0
    }

    /// `x` is a nonzero vector of `(Q u S^perp) \ S`.
    pub fn in_x(&self, x: u32) -> bool {
        x != 0 && (self.quad(x) == 0 || self.in_s_perp(x)) && !self.in_s(x)
    }

    /// Nonzero vectors of `S`, increasing.
    pub fn s_vectors(&self) -> Vec<u32> {
        (1..1u32 << self.n()).filter(|&x| self.in_s(x)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct IvanovSigma {
    pub coords: SigmaCoordinates,
    pub sigma: Graph,
    /// First subconstituent at 0; vertex `i` is the vector `tee_vectors[i]`.
    pub tee: Graph,
    pub tee_vectors: Vec<u32>,
    /// Second subconstituent at 0.
    pub upsilon: Graph,
    pub upsilon_vectors: Vec<u32>,
}

impl IvanovSigma {
    pub fn upsilon_vertex(&self, x: u32) -> Option<usize> {
        self.upsilon_vectors.binary_search(&x).ok()
    }

    pub fn tee_vertex(&self, x: u32) -> Option<usize> {
        self.tee_vectors.binary_search(&x).ok()
    }
}

/// `Sigma^(m)` with both subconstituents at the zero vector. The second
/// subconstituent is complete for `m = 2` and is only validated for `m >= 3`.
pub fn ivanov_sigma(m: u32) -> Result<IvanovSigma, FamilyError> {
    check_m(m, 2)?;
    let coords = SigmaCoordinates { m };
    let n = 2 * m;
    let member: Vec<bool> = (0..1u32 << n).map(|x| coords.in_x(x)).collect();
    let sigma = binary_cayley_graph(n, &member);
    let t = 1u64 << (m - 1);
    expect_srg("ivanov-sigma", &sigma, a_minus(t))?;
    let tee_vectors: Vec<u32> = (1..1u32 << n).filter(|&x| member[x as usize]).collect();
    let upsilon_vectors: Vec<u32> = (1..1u32 << n).filter(|&x| !member[x as usize]).collect();
    let idx = |v: &[u32]| v.iter().map(|&x| x as usize).collect::<Vec<_>>();
    let tee = sigma.induced(&idx(&tee_vectors));
    let upsilon = sigma.induced(&idx(&upsilon_vectors));
    expect_srg("tee", &tee, b_minus(t))?;
    if m >= 3 {
        expect_srg("upsilon", &upsilon, c_minus(t))?;
    }
    Ok(IvanovSigma { coords, sigma, tee, tee_vectors, upsilon, upsilon_vectors })
}

pub fn tee(m: u32) -> Result<Graph, FamilyError> {
    ivanov_sigma(m).map(|s| s.tee)
}

pub fn upsilon(m: u32) -> Result<Graph, FamilyError> {
    check_m(m, 3)?;
    ivanov_sigma(m).map(|s| s.upsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::srg::abc_params;

    #[test]
    fn gamma_small() {
        assert_eq!(ivanov_gamma(2).unwrap().order(), 16);
        assert_eq!(ivanov_gamma(3).unwrap().order(), 64);
        assert!(ivanov_gamma(1).is_err());
    }

    #[test]
    fn sigma_matches_abc() {
        let s = ivanov_sigma(3).unwrap();
        let [a, b, c] = abc_params(-1, 4).unwrap();
        assert_eq!(a.tuple(), a_minus(4));
        assert_eq!(b.tuple(), b_minus(4));
        assert_eq!(c.tuple(), c_minus(4));
        assert_eq!(s.sigma.order(), 64);
        assert_eq!(s.tee.order(), 36);
        assert_eq!(s.upsilon.order(), 27);
    }

    #[test]
    fn coordinates() {
        let c = SigmaCoordinates { m: 3 };
        // S has 2^(m-1) - 1 nonzero vectors, S^perp has 2^(m+1) - 1
        assert_eq!(c.s_vectors().len(), 3);
        assert_eq!((1..64).filter(|&x| c.in_s_perp(x)).count(), 15);
        for s in c.s_vectors() {
            assert_eq!(c.quad(s), 0);
            for x in (1..64).filter(|&x| c.in_s_perp(x)) {
                assert_eq!(c.bilinear(s, x), 0);
            }
        }
        // elliptic: 2^(2m-1) - 2^(m-1) - 1 nonzero singular vectors
        assert_eq!((1..64).filter(|&x| c.quad(x) == 0).count(), 27);
        let m2 = ivanov_sigma(2).unwrap();
        assert_eq!(m2.upsilon.edge_count(), 10);
        assert!(upsilon(2).is_err());
    }
}
