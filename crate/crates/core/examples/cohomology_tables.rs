// Dimensions of d_P-cohomology by star degree and weight for the small tensors.

use std::sync::Arc;

use double_poisson::bracket::TensorP;
use double_poisson::cohomology::{Caps, cohomology_summary};
use double_poisson::{PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    let q = Arc::new(Quiver::plane());
    let tensor = |terms: &[&[&str]]| -> double_poisson::Result<TensorP> {
        let mut f = PolyField::zero(&q);
        for w in terms {
            f = f.add(&PolyField::from_names(&q, w)?)?;
        }
        TensorP::new(f)
    };
    let tensors = [
        ("x∂x∂x", tensor(&[&["x", "*x", "*x"]])?),
        ("x∂x∂x + y∂y∂y", tensor(&[&["x", "*x", "*x"], &["y", "*y", "*y"]])?),
        ("x∂x∂x + y∂x∂y", tensor(&[&["x", "*x", "*x"], &["y", "*x", "*y"]])?),
        ("x∂x∂y + y∂y∂y", tensor(&[&["x", "*x", "*y"], &["y", "*y", "*y"]])?),
        ("x∂x x∂y", tensor(&[&["x", "*x", "x", "*y"]])?),
    ];
    let caps = Caps::default();
    for (name, p) in &tensors {
        let rows = cohomology_summary(p, 0..=1, 0..=5, &caps, false)?;
        let dims = |k: usize| rows.iter().filter(|b| b.k == k).map(|b| b.dim_h).collect::<Vec<_>>();
        println!("{name:<16} H0 {:?}  H1 {:?}", dims(0), dims(1));
    }

    let (_, quad) = &tensors[4];
    println!("\nH1 representatives for x∂x x∂y:");
    for b in cohomology_summary(quad, 1..=1, 0..=3, &caps, true)? {
        for r in &b.representatives {
            println!("  weight {}: {r}", b.w);
        }
    }
    Ok(())
}
