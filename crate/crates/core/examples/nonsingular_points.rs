//! NO graphs on nonsingular points and the valency of their mu-graphs.
use srgkit::families::{no_graph, no_mu_valency, no_parameters};
use srgkit::srg::{four_vertex_check, local_params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, q) in [(2u32, 3u32), (2, 5), (3, 3)] {
        for eps in [-1i8, 1] {
            let g = no_graph(m, q, eps)?.graph;
            let fv = four_vertex_check(&g)?;
            let l = local_params(&g);
            println!(
                "NO{}{}({q}): {:?} (formula {:?}), 4VC {} alpha={:?} beta={:?}, mu' = {:?} (formula {})",
                2 * m + 1,
                if eps < 0 { "-" } else { "+" },
                fv.params.tuple(),
                no_parameters(m, q as u64, eps),
                fv.satisfied,
                fv.alpha,
                fv.beta,
                l.mu_prime,
                no_mu_valency(m, q as u64, eps)
            );
        }
    }
    Ok(())
}
