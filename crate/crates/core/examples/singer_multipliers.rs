//! Permutations of the 13 hyperplanes of a plane over GF(3) that act as
//! multipliers on a Singer cycle, applied in O(7,3) and Sp(6,3).
use std::sync::Arc;

use srgkit::field::Field;
use srgkit::space::{FormKind, FormedSpace};
use srgkit::srg::four_vertex_check;
use srgkit::switching::SwitchingContext;
use srgkit::symmetry::automorphism_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Arc::new(Field::of_order(3)?);
    let ext = Field::of_order(27)?;
    let c = ext.modulus();
    let neg = |a: u32| (3 - a) % 3;
    let singer = vec![vec![0, 1, 0], vec![0, 0, 1], vec![neg(c[0]), neg(c[1]), neg(c[2])]];
    for (name, kind, n) in [("O(7,3)", FormKind::Parabolic, 7), ("Sp(6,3)", FormKind::Symplectic, 6)] {
        let ctx = SwitchingContext::standard(FormedSpace::standard(f.clone(), kind, n)?)?;
        let s = ctx.frame().hyperplane_action(&singer, 0);
        let mut h = vec![0];
        while h.len() < s.len() {
            h.push(s[*h.last().unwrap()]);
        }
        for t in 1..13 {
            let mut phi = vec![0; 13];
            for i in 0..13 {
                phi[h[i]] = h[t * i % 13];
            }
            let g = ctx.build_permutation(&phi)?;
            let fv = four_vertex_check(&g)?;
            let a = automorphism_group(&g)?;
            println!("{name} t={t:>2}: 4VC {} |Aut|={} orbits {:?}", fv.satisfied, a.order, a.orbit_lengths());
        }
    }
    Ok(())
}
