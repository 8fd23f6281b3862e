//! Collinearity graphs of the small polar spaces, with parameters from the
//! closed formulas alongside the measured ones.
use std::sync::Arc;

use srgkit::families::{polar_graph, polar_parameters};
use srgkit::field::Field;
use srgkit::space::{FormKind, FormedSpace};
use srgkit::srg::check_srg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, n, q) in [
        (FormKind::Symplectic, 6, 2),
        (FormKind::Symplectic, 6, 3),
        (FormKind::Parabolic, 7, 2),
        (FormKind::Parabolic, 7, 3),
        (FormKind::Hyperbolic, 8, 2),
        (FormKind::Elliptic, 6, 3),
    ] {
        let space = FormedSpace::standard(Arc::new(Field::of_order(q)?), kind, n)?;
        let pg = polar_graph(&space)?;
        let measured = check_srg(&pg.graph)?.map(|p| p.tuple());
        println!(
            "{kind:?} n={n} q={q}: witt index {}, formula {:?}, measured {:?}",
            space.witt_index(),
            polar_parameters(kind, n, q as u64),
            measured
        );
    }
    Ok(())
}
