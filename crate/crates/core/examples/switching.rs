//! Switching a maximal totally isotropic subspace of Sp(6,2): random
//! permutations of its hyperplanes, a single swap, and the emptying test.
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use srgkit::field::Field;
use srgkit::space::FormedSpace;
use srgkit::srg::four_vertex_check;
use srgkit::switching::{random_phi, SwitchingContext};
use srgkit::symmetry::automorphism_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = SwitchingContext::standard(FormedSpace::symplectic(Arc::new(Field::of_order(2)?), 6)?)?;
    println!("U = {:?}, {} hyperplanes", ctx.u_vertices(), ctx.hyperplane_count());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let phi = random_phi(&mut rng, ctx.hyperplane_count());
        let g = ctx.build_permutation(&phi)?;
        let fv = four_vertex_check(&g)?;
        let a = automorphism_group(&g)?;
        let e = ctx.emptying_analysis(&ctx.hyperplane_design(), &phi)?;
        println!(
            "phi={phi:?}: {:?} alpha={:?} beta={:?} |Aut|={} orbits {:?} emptying={} dually={}",
            fv.params.tuple(),
            fv.alpha,
            fv.beta,
            a.order,
            a.orbit_lengths(),
            e.is_emptying,
            e.is_dually_emptying
        );
    }
    let swapped = ctx.wqh_swap(ctx.gamma0(), 0, 1)?;
    println!("swap of hyperplanes 0 and 1: |Aut| = {}", automorphism_group(&swapped)?.order);
    println!("swapping back gives Gamma0: {}", ctx.wqh_swap(&swapped, 0, 1)? == *ctx.gamma0());
    Ok(())
}
