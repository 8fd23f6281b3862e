//! A machine-readable report for a graph given in graph6. Without an
//! argument the Clebsch graph is used: GF(2)^4 with the unit vectors and
//! the all-ones vector as connection set.
use srgkit::families::binary_cayley_graph;
use srgkit::graph6;
use srgkit::report::{AnalysisOptions, Report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(text) => graph6::decode(&text)?,
        None => {
            let member: Vec<bool> = (0..16u32).map(|x| x.count_ones() == 1 || x == 15).collect();
            binary_cayley_graph(4, &member)
        }
    };
    let r = Report::analyse("example", &g, &AnalysisOptions { local: true, automorphisms: true })?;
    println!("{}", graph6::encode(&g));
    println!("{}", r.summary());
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
