//! Double cosets of PGammaL(d,q) in the symmetric group on hyperplanes,
//! counted by the class formula.
use srgkit::perm::{count_double_cosets, enumerate_double_coset_reps};
use srgkit::switching::pgl_on_hyperplanes;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (d, q) in [(3, 2), (3, 3), (4, 2)] {
        let g = pgl_on_hyperplanes(d, q)?;
        println!("(d,q)=({d},{q}): |G|={} on {} hyperplanes, {} double cosets", g.order(), g.degree(), count_double_cosets(&g));
    }
    for rep in enumerate_double_coset_reps(&pgl_on_hyperplanes(3, 2)?)? {
        println!("  representative {rep:?}");
    }
    Ok(())
}
