//! The binary Cayley graphs Gamma^(m), Sigma^(m) and the subconstituents
//! T^(m), Upsilon^(m) of Sigma^(m), with their symmetry.
use srgkit::families::{ivanov_gamma, ivanov_sigma};
use srgkit::srg::{four_vertex_check, subconstituent, Subconstituent};
use srgkit::symmetry::{automorphism_group, is_isomorphic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gamma = ivanov_gamma(4)?;
    let a = automorphism_group(&gamma)?;
    let fv = four_vertex_check(&gamma)?;
    println!("Gamma^(4): {:?} alpha={:?} beta={:?} |Aut|={} rank {:?}", fv.params.tuple(), fv.alpha, fv.beta, a.order, a.rank());
    for m in 3..=5 {
        let s = ivanov_sigma(m)?;
        for (name, g) in [("T", &s.tee), ("Upsilon", &s.upsilon)] {
            let fv = four_vertex_check(g)?;
            let a = automorphism_group(g)?;
            println!(
                "{name}^({m}): {:?} 4VC {} alpha={:?} beta={:?} |Aut|={} orbits {:?}",
                fv.params.tuple(),
                fv.satisfied,
                fv.alpha,
                fv.beta,
                a.order,
                a.orbit_lengths()
            );
        }
        let s0 = s.coords.s_vectors()[0];
        let local = subconstituent(&s.upsilon, s.upsilon_vertex(s0).unwrap(), Subconstituent::First);
        println!("  local graph of Upsilon^({m}) at {s0:#b} is Sigma^({}): {}", m - 1, is_isomorphic(&local, &ivanov_sigma(m - 1)?.sigma)?);
    }
    Ok(())
}
