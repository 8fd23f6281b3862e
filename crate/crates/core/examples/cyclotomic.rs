//! Cyclotomic graphs: the dense 4-vertex check against the per-class counts
//! that use the affine automorphisms.
use std::time::Instant;

use srgkit::catalog::field_for;
use srgkit::families::{cyclotomic_class_counts, cyclotomic_four_vc, cyclotomic_graph};
use srgkit::srg::four_vertex_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = field_for(121, None, None)?;
    for c in cyclotomic_class_counts(&f, 6, &[0, 1, 2])? {
        println!("class {}: adjacent={} common={} edges={} degrees {:?}", c.class, c.adjacent, c.common, c.edges, c.degree_range);
    }
    for (q, e, j, modulus, eta) in [(121, 6, vec![0, 1, 2], None, None), (529, 8, vec![0, 1, 2, 3], Some(vec![19, 22, 1]), Some(23))] {
        let f = field_for(q, modulus, eta)?;
        let t = Instant::now();
        let dense = four_vertex_check(&cyclotomic_graph(&f, e, &j)?)?;
        let dense_time = t.elapsed();
        let t = Instant::now();
        let fast = cyclotomic_four_vc(&f, e, &j)?;
        println!(
            "q={q}: {:?} alpha={:?} beta={:?} ({dense_time:?}); per class alpha={:?} beta={:?} ({:?})",
            dense.params.tuple(),
            dense.alpha,
            dense.beta,
            fast.alpha,
            fast.beta,
            t.elapsed()
        );
    }
    Ok(())
}
