//! The four non-geometric 2-(15,7,3) designs used in place of the
//! hyperplanes of PG(3,2) when switching Sp(8,2).
use std::sync::Arc;

use srgkit::design::non_geometric_15_7_3;
use srgkit::field::Field;
use srgkit::perm::identity;
use srgkit::space::FormedSpace;
use srgkit::srg::four_vertex_check;
use srgkit::switching::SwitchingContext;
use srgkit::symmetry::automorphism_group_coloured;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = SwitchingContext::standard(FormedSpace::symplectic(Arc::new(Field::of_order(2)?), 8)?)?;
    for (name, design) in non_geometric_15_7_3() {
        let (inc, colours) = design.incidence_graph();
        let aut = automorphism_group_coloured(&inc, Some(&colours))?;
        let g = ctx.build(&design, &identity(15))?;
        let fv = four_vertex_check(&g)?;
        println!("{name}: |Aut(D)|={}, Gamma: {:?} 4VC {} alpha={:?} beta={:?}", aut.order, fv.params.tuple(), fv.satisfied, fv.alpha, fv.beta);
    }
    Ok(())
}
