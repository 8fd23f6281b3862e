use std::sync::Arc;

use crate::field::Field;
use crate::graph::{words_for, Graph};
use crate::space::{FormedSpace, Subspace};
use crate::srg::{subconstituent, Subconstituent};

use super::{expect_srg, FamilyError};

#[derive(Debug, Clone)]
pub struct PlanesGraph {
    pub graph: Graph,
    /// Vertex `i` is the plane `planes[i]`.
    pub planes: Vec<Subspace>,
}

pub fn disjoint_planes_parameters(q: u64) -> (u64, u64, u64, u64) {
    (
        (q.pow(3) + 1) * (q * q + 1) * (q + 1),
        q.pow(6),
        q * q * (q.pow(3) - 1) * (q - 1),
        (q - 1) * q.pow(5),
    )
}

fn local_parameters(q: u64) -> (u64, u64, u64, u64) {
    let mu = q * q * (q - 1) * (q.pow(3) - q * q - 1);
    let lambda = mu + 2 * q * q - q.pow(3);
    (q.pow(6), q * q * (q.pow(3) - 1) * (q - 1), lambda, mu)
}

/// Totally isotropic planes of the symplectic 6-space, adjacent when they
/// meet trivially.
pub fn sp6_disjoint_planes_graph(q: u32) -> Result<PlanesGraph, FamilyError> {
    let field = Arc::new(Field::of_order(q)?);
    let space = FormedSpace::symplectic(field, 6)?;
    let planes = space.totally_isotropic_subspaces(3)?;
    let proj = space.projective();
    let words = words_for(proj.point_count());
    let sets: Vec<Vec<u64>> = planes
        .iter()
        .map(|s| {
            let mut bits = vec![0u64; words];
            for p in proj.subspace_points(s) {
                bits[p as usize / 64] |= 1 << (p % 64);
            }
            bits
        })
        .collect();
    let graph = Graph::from_fn_par(planes.len(), |i, j| {
        sets[i].iter().zip(&sets[j]).all(|(a, b)| a & b == 0)
    });
    expect_srg("disjoint-planes", &graph, disjoint_planes_parameters(q as u64))?;
    Ok(PlanesGraph { graph, planes })
}

/// First subconstituent of the disjoint-planes graph.
pub fn local_delta(q: u32) -> Result<Graph, FamilyError> {
    let g = sp6_disjoint_planes_graph(q)?.graph;
    let delta = subconstituent(&g, 0, Subconstituent::First);
    expect_srg("local-delta", &delta, local_parameters(q as u64))?;
    Ok(delta)
}

/// Complement of [`local_delta`]: planes disjoint from a fixed one, adjacent
/// when they meet.
pub fn delta_bar(q: u32) -> Result<Graph, FamilyError> {
    let bar = local_delta(q)?.complement();
    let q = q as u64;
    let expected = (q.pow(6), (q * q + 1) * (q.pow(3) - 1), q.pow(4) + q.pow(3) - q * q - 2, q.pow(4) + q * q);
    expect_srg("delta-bar", &bar, expected)?;
    Ok(bar)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2() {
        let g = sp6_disjoint_planes_graph(2).unwrap();
        assert_eq!(g.graph.order(), 135);
        assert_eq!(disjoint_planes_parameters(2), (135, 64, 28, 32));
        assert_eq!(delta_bar(2).unwrap().order(), 64);
        assert_eq!(local_parameters(3), (729, 468, 297, 306));
    }
}
