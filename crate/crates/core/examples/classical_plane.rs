// Poisson cohomology of ψ ∂x∧∂y and the trace of the quadratic tensor.

use std::sync::Arc;

use double_poisson::bracket::TensorP;
use double_poisson::classical::{CommPoly, PlaneField, classical_cohomology, in_span_modulo_coboundaries, trace_map};
use double_poisson::cohomology::{Caps, cohomology_summary};
use double_poisson::{PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    let caps = Caps::default();
    for psi in ["x^2", "y", "x*y", "0"] {
        let dims = classical_cohomology(&CommPoly::parse(psi)?, 6, &caps)?;
        let col = |f: fn(&double_poisson::classical::ClassicalDegree) -> usize| dims.iter().map(f).collect::<Vec<_>>();
        println!("ψ = {psi:<4} H0 {:?}  H1 {:?}  H2 {:?}", col(|d| d.h0), col(|d| d.h1), col(|d| d.h2));
    }

    let q = Arc::new(Quiver::plane());
    let p = TensorP::new(PolyField::from_names(&q, &["x", "*x", "x", "*y"])?)?;
    let psi = trace_map(p.field())?.bivector;
    println!("\ntr({}) = ({psi})∂x∧∂y", p.field());

    let traced: Vec<PlaneField> = cohomology_summary(&p, 1..=1, 0..=4, &caps, true)?
        .iter()
        .flat_map(|b| b.representatives.iter().map(trace_map))
        .collect::<Result<_, _>>()?;
    for t in &traced {
        println!("  traced class {t}");
    }
    for k in 3..=5u32 {
        let class = PlaneField::vector(CommPoly::parse(&format!("{k}*x*y^{}", k - 1))?, CommPoly::parse(&format!("y^{k}"))?);
        let hit = in_span_modulo_coboundaries(&psi, &class, &traced)?;
        println!("  {class} in the traced image: {hit}");
    }
    Ok(())
}
