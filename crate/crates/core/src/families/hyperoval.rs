use crate::field::Field;
use crate::graph::Graph;
use crate::linalg;

use super::{expect_srg, invalid, FamilyError};

pub fn hyperoval_parameters(q: u64) -> (u64, u64, u64, u64) {
    (q.pow(3), q * (q - 1) * (q - 1) / 2, q * (q - 2) * (q - 3) / 4, q * (q - 1) * (q - 2) / 4)
}

/// Parameters of the local graphs of [`hyperoval_graph`].
pub fn hyperoval_local_parameters(q: u64) -> (u64, u64, u64, u64) {
    (
        q * (q - 1) * (q - 1) / 2,
        q * (q - 2) * (q - 3) / 4,
        q * (q * q + 22 - 9 * q) / 8,
        q * (q - 3) * (q - 4) / 8,
    )
}

/// Membership table over all vectors of `GF(q)^3` (by code): true for
/// nonzero vectors whose point lies on no line of the dual hyperoval. The
/// dual hyperoval consists of the lines whose coordinates are the points
/// of the conic `y^2 = xz` together with its nucleus.
pub fn exterior_directions(f: &Field) -> Vec<bool> {
    let q = f.order();
    let mut lines: Vec<[u32; 3]> = f.elements().map(|t| [1, t, f.mul(t, t)]).collect();
    lines.push([0, 0, 1]);
    lines.push([0, 1, 0]);
    linalg::all_vectors(q, 3)
        .map(|p| !linalg::is_zero(&p) && lines.iter().all(|h| linalg::dot(f, h, &p) != 0))
        .collect()
}

/// Vectors of `GF(q)^3`, adjacent when the joining line meets the plane at
/// infinity in an exterior point of the dual hyperoval. Vertex `i` is the
/// vector with big-endian base-`q` code `i`.
pub fn hyperoval_graph(q: u32) -> Result<Graph, FamilyError> {
    if q < 4 || !q.is_power_of_two() {
        return Err(invalid(format!("q = {q} must be a power of 2, at least 4")));
    }
    let f = Field::of_order(q)?;
    let ext = exterior_directions(&f);
    let v = (q as usize).pow(3);
    let vecs: Vec<Vec<u32>> = linalg::all_vectors(q, 3).collect();
    let graph = Graph::from_fn_par(v, |i, j| {
        let d: Vec<u32> = vecs[i].iter().zip(&vecs[j]).map(|(&a, &b)| f.sub(a, b)).collect();
        ext[linalg::encode(&d, q) as usize]
    });
    expect_srg("hyperoval", &graph, hyperoval_parameters(q as u64))?;
    Ok(graph)
}
