//! Maximal totally isotropic planes of Sp(6,q), adjacent when disjoint.
use srgkit::families::{delta_bar, disjoint_planes_parameters, local_delta, sp6_disjoint_planes_graph};
use srgkit::srg::{check_srg, four_vertex_check};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(2);
    let g = sp6_disjoint_planes_graph(q)?.graph;
    let fv = four_vertex_check(&g)?;
    println!("q={q}: {:?} (formula {:?})", fv.params.tuple(), disjoint_planes_parameters(q as u64));
    println!("4VC {} alpha={:?} beta={:?}", fv.satisfied, fv.alpha, fv.beta);
    println!("local graph {:?}", check_srg(&local_delta(q)?)?.map(|p| p.tuple()));
    println!("second subconstituent {:?}", check_srg(&delta_bar(q)?)?.map(|p| p.tuple()));
    Ok(())
}
