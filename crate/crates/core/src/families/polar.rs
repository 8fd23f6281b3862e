use crate::graph::Graph;
use crate::linalg;
use crate::space::{FormKind, FormedSpace};

use super::{expect_srg, invalid, FamilyError};

/// Collinearity graph together with the projective index of each vertex.
#[derive(Debug, Clone)]
pub struct PolarGraph {
    pub graph: Graph,
    /// `points[i]` is the projective point index of vertex `i`, increasing.
    pub points: Vec<u32>,
}

impl PolarGraph {
    /// Vertex of a projective point, if the point is singular.
    pub fn vertex_of(&self, point: u32) -> Option<usize> {
        self.points.binary_search(&point).ok()
    }
}

/// `(v, k, lambda, mu)` of the collinearity graph of a polar space of rank
/// `d` over `GF(q)`.
pub fn polar_parameters(kind: FormKind, n: usize, q: u64) -> Option<(u64, u64, u64, u64)> {
    let (d, e) = match kind {
        FormKind::Symplectic | FormKind::Hyperbolic if n % 2 == 0 => {
            (n / 2, if kind == FormKind::Symplectic { 1 } else { 0 })
        }
        FormKind::Parabolic if n % 2 == 1 => ((n - 1) / 2, 1),
        FormKind::Elliptic if n % 2 == 0 && n >= 2 => (n / 2 - 1, 2),
        _ => return None,
    };
    if d < 2 {
        return None;
    }
    let (d, e) = (d as u32, e as u32);
    let m = |i: u32| (q.pow(i) - 1) / (q - 1);
    let v = m(d) * (q.pow(d - 1 + e) + 1);
    let k = q * m(d - 1) * (q.pow(d - 2 + e) + 1);
    let lambda = if d == 2 { q - 1 } else { q - 1 + q * q * m(d - 2) * (q.pow(d - 3 + e) + 1) };
    let mu = m(d - 1) * (q.pow(d - 2 + e) + 1);
    Some((v, k, lambda, mu))
}

/// Singular points, adjacent when distinct and orthogonal.
pub fn polar_graph(space: &FormedSpace) -> Result<PolarGraph, FamilyError> {
    if space.witt_index() < 2 {
        return Err(invalid(format!("polar space {space:?} has rank {} < 2", space.witt_index())));
    }
    let f = space.field();
    let points = space.singular_points();
    let proj = space.projective();
    // x^T G for every vertex, so B(x, y) is a single dot product
    let functionals: Vec<Vec<u32>> =
        points.iter().map(|&p| linalg::vec_mat(f, proj.point(p), space.gram())).collect();
    let graph = Graph::from_fn_par(points.len(), |i, j| {
        linalg::dot(f, &functionals[i], proj.point(points[j])) == 0
    });
    let expected = polar_parameters(space.kind(), space.dim(), f.order() as u64)
        .expect("rank >= 2 spaces have known parameters");
    expect_srg("polar", &graph, expected)?;
    Ok(PolarGraph { graph, points })
}

pub fn polar_collinearity_graph(space: &FormedSpace) -> Result<Graph, FamilyError> {
    polar_graph(space).map(|p| p.graph)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::Field;

    fn gf(q: u32) -> Arc<Field> {
        Arc::new(Field::of_order(q).unwrap())
    }

    #[test]
    fn sp6_2() {
        let s = FormedSpace::symplectic(gf(2), 6).unwrap();
        let g = polar_collinearity_graph(&s).unwrap();
        assert_eq!(g.order(), 63);
        assert_eq!(polar_parameters(FormKind::Symplectic, 6, 2), Some((63, 30, 13, 15)));
    }

    #[test]
    fn small_quadrics() {
        for (kind, n, q) in [
            (FormKind::Parabolic, 5, 3),
            (FormKind::Hyperbolic, 6, 2),
            (FormKind::Elliptic, 6, 2),
            (FormKind::Parabolic, 7, 2),
            (FormKind::Hyperbolic, 4, 3),
        ] {
            let s = FormedSpace::standard(gf(q), kind, n).unwrap();
            polar_collinearity_graph(&s).unwrap();
        }
    }

    #[test]
    fn rank_one_rejected() {
        let s = FormedSpace::elliptic(gf(3), 4).unwrap();
        assert!(matches!(polar_collinearity_graph(&s), Err(FamilyError::InvalidParameter(_))));
    }
}
