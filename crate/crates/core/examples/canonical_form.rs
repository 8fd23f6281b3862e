//! Canonical labelling and automorphism groups by individualisation and
//! refinement.
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srgkit::graph::Graph;
use srgkit::graph6;
use srgkit::symmetry::{analyse, canonical_form};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let petersen = graph6::decode("IheA@GUAo")?;
    let s = analyse(&petersen, None)?;
    println!("Petersen: |Aut|={} orbits {:?} rank {:?}, {} search nodes", s.group.order, s.group.orbit_lengths(), s.group.rank(), s.nodes);
    println!("canonical graph6: {}", graph6::encode(&s.canonical.graph));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut p: Vec<usize> = (0..10).collect();
    p.shuffle(&mut rng);
    let relabelled = petersen.relabel(&p);
    println!("relabelled: {}", graph6::encode(&relabelled));
    println!("same certificate: {}", canonical_form(&relabelled)?.certificate == s.canonical.certificate);

    let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])?;
    let coloured = analyse(&prism, Some(&[0, 0, 0, 1, 1, 1]))?;
    println!("prism: |Aut|={}, with the triangles coloured apart: {}", analyse(&prism, None)?.group.order, coloured.group.order);
    Ok(())
}
