// The necklace bracket: antisymmetry, Jacobi and the linear tensors.

use std::sync::Arc;

use double_poisson::bracket::kontsevich_bracket;
use double_poisson::coeff::int;
use double_poisson::{PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    let q = Arc::new(Quiver::plane());
    let f = |w: &[&str]| PolyField::from_names(&q, w);

    let p0 = f(&["x", "*x", "*x"])?;
    let xy = f(&["x", "y"])?;
    println!("{{{p0}, {xy}}} = {}", kontsevich_bracket(&p0, &xy)?);

    // degree-shifted antisymmetry: {a, b} = −(−1)^{(|a|−1)(|b|−1)} {b, a}
    let a = f(&["x", "*y"])?;
    let b = f(&["y", "x", "*x"])?;
    let ab = kontsevich_bracket(&a, &b)?;
    let ba = kontsevich_bracket(&b, &a)?;
    assert_eq!(ab, ba.scale(&int(-1)));
    println!("{{{a}, {b}}} = {ab}");

    // Jacobi for three odd elements (star-degree 2)
    let c = f(&["x", "*x", "x", "*y"])?;
    let d = f(&["y", "*x", "*y"])?;
    let jac = kontsevich_bracket(&p0, &kontsevich_bracket(&c, &d)?)?
        .sub(&kontsevich_bracket(&kontsevich_bracket(&p0, &c)?, &d)?)?
        .add(&kontsevich_bracket(&c, &kontsevich_bracket(&p0, &d)?)?)?;
    assert!(jac.is_zero());
    println!("Jacobi holds for {p0}, {c}, {d}");
    Ok(())
}
