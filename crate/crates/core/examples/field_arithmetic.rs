//! Arithmetic in GF(529) with an explicit modulus, and the primitive
//! element check.
use srgkit::field::{Field, FieldParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // eta^2 = eta + 4 over GF(23), eta stored as index 23
    let f = Field::from_params(&FieldParams { p: 23, k: 2, modulus: Some(vec![19, 22, 1]), eta: Some(23) })?;
    let eta = f.eta();
    println!("GF({}) = GF({}^{}), modulus {:?}", f.order(), f.characteristic(), f.degree(), f.modulus());
    println!("eta^2 = {}, eta + 4 = {}", f.mul(eta, eta), f.add(eta, 4));
    println!("order of eta: {:?}", f.mult_order(eta));
    let x = f.eta_pow(100);
    println!("eta^100 = {x}, log = {:?}, inverse = {}, square = {}", f.log(x), f.inv(x)?, f.is_square(x)?);
    println!("frobenius(eta) = {} = eta^23 = {}", f.frobenius(eta), f.eta_pow(23));
    Ok(())
}
