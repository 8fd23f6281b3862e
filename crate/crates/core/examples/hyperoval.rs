//! Dual hyperoval graph for q = 8 and its local graphs.
use srgkit::families::{hyperoval_graph, hyperoval_local_parameters, hyperoval_parameters};
use srgkit::srg::{check_srg, four_vertex_check, subconstituent, Subconstituent};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for q in [4u32, 8] {
        let g = hyperoval_graph(q)?;
        let fv = four_vertex_check(&g)?;
        let local = check_srg(&subconstituent(&g, 0, Subconstituent::First))?;
        println!(
            "q={q}: {:?} (formula {:?}) alpha={:?} beta={:?}; local {:?} (formula {:?})",
            fv.params.tuple(),
            hyperoval_parameters(q as u64),
            fv.alpha,
            fv.beta,
            local.map(|p| p.tuple()),
            hyperoval_local_parameters(q as u64)
        );
    }
    Ok(())
}
