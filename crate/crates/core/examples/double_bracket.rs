// The double bracket on generators and the action of vector fields.

use std::sync::Arc;

use double_poisson::bracket::{TensorP, apply_vector_field, double_bracket_of_pair};
use double_poisson::ncalg::{double_deriv, euler_apply, gauge_apply};
use double_poisson::{NCPoly, PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    let q = Arc::new(Quiver::plane());
    let p = TensorP::new(PolyField::from_names(&q, &["x", "*x", "x", "*y"])?)?;
    let gens = [NCPoly::parse(&q, "x")?, NCPoly::parse(&q, "y")?];
    for a in &gens {
        for b in &gens {
            println!("⟨⟨{a}, {b}⟩⟩ = {}", double_bracket_of_pair(&p, a, b)?);
        }
    }

    let f = NCPoly::parse(&q, "x*y*x - 2*y^2")?;
    let x = q.parse_bead("x")?;
    println!("\n∂f/∂x for f = {f}: {}", double_deriv(x, &f)?);
    println!("E_x(f) = {}", euler_apply(x, &f)?);
    println!("gauge(f) = {}", gauge_apply(&f)?);
    let v = PolyField::from_names(&q, &["y", "x", "*y"])?;
    println!("{v} applied to f: {}", apply_vector_field(&v, &f)?);
    Ok(())
}
