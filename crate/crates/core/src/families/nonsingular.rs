use std::sync::Arc;

use crate::field::Field;
use crate::graph::Graph;
use crate::space::FormedSpace;

use super::{expect_srg, invalid, FamilyError};

#[derive(Debug, Clone)]
pub struct NoGraph {
    pub graph: Graph,
    pub space: Arc<FormedSpace>,
    /// Projective index of each vertex, increasing.
    pub points: Vec<u32>,
}

/// Parameters of `NO^eps_{2m+1}(q)`.
pub fn no_parameters(m: u32, q: u64, eps: i8) -> (u64, u64, u64, u64) {
    let e = eps as i64;
    let q = q as i64;
    let qm = q.pow(m);
    let qm1 = q.pow(m - 1);
    let v = qm * (qm + e) / 2;
    let k = (qm1 + e) * (qm - e);
    let lambda = 2 * (q.pow(2 * m - 2) - 1) + e * qm1 * (q - 1);
    let mu = 2 * qm1 * (qm1 + e);
    (v as u64, k as u64, lambda as u64, mu as u64)
}

/// Common valency of the mu-graphs of `NO^eps_{2m+1}(q)`.
pub fn no_mu_valency(m: u32, q: u64, eps: i8) -> u64 {
    let e = eps as i64;
    let q = q as i64;
    let v = 4 * q.pow(2 * m - 3) + 3 * e * q.pow(m - 1) - 4 * e * q.pow(m - 2) - 1;
    v as u64
}

/// Nonsingular points of type `eps` in the parabolic space of dimension
/// `2m+1`, adjacent when the joining line is a tangent.
pub fn no_graph(m: u32, q: u32, eps: i8) -> Result<NoGraph, FamilyError> {
    if m < 2 {
        return Err(invalid(format!("m = {m} must be at least 2")));
    }
    if eps != 1 && eps != -1 {
        return Err(invalid(format!("eps = {eps} must be +1 or -1")));
    }
    let field = Arc::new(Field::of_order(q)?);
    if field.characteristic() == 2 {
        return Err(invalid(format!("q = {q} must be odd")));
    }
    let space = Arc::new(FormedSpace::parabolic(field.clone(), 2 * m as usize + 1)?);
    let proj = space.projective();
    let mut points = Vec::new();
    for p in 0..proj.point_count() as u32 {
        if !space.is_singular(proj.point(p)) && space.point_type(p)? == eps {
            points.push(p);
        }
    }
    let f = &*field;
    let qv: Vec<u32> = points.iter().map(|&p| space.quad_value(proj.point(p))).collect();
    let four = f.from_int(4);
    // the line x + ty is tangent iff its quadratic in t has a double root
    let graph = Graph::from_fn_par(points.len(), |i, j| {
        let b = space.bilinear(proj.point(points[i]), proj.point(points[j]));
        f.mul(b, b) == f.mul(four, f.mul(qv[i], qv[j]))
    });
    expect_srg("no", &graph, no_parameters(m, q as u64, eps))?;
    Ok(NoGraph { graph, space, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::LineMeet;

    #[test]
    fn o5_3_both_types() {
        assert_eq!(no_parameters(2, 3, 1), (45, 32, 22, 24));
        let g = no_graph(2, 3, 1).unwrap();
        assert_eq!(g.graph.order(), 45);
        let g = no_graph(2, 3, -1).unwrap();
        assert_eq!(g.graph.order(), 36);
    }

    #[test]
    fn adjacency_matches_tangent_lines() {
        let g = no_graph(2, 3, -1).unwrap();
        for i in 0..g.points.len() {
            for j in i + 1..g.points.len() {
                let meet = g.space.line_quadric_meet(g.points[i], g.points[j]).unwrap();
                assert_eq!(g.graph.has_edge(i, j), meet == LineMeet::Tangent);
            }
        }
    }

    #[test]
    fn rejects_even_q() {
        assert!(matches!(no_graph(2, 4, 1), Err(FamilyError::InvalidParameter(_))));
        assert!(no_graph(1, 3, 1).is_err());
    }

    #[test]
    fn mu_valency_formula() {
        assert_eq!(no_mu_valency(2, 5, -1), 8);
        assert_eq!(no_mu_valency(2, 5, 1), 30);
    }
}
