// Fields over a quiver with two vertices.

use std::sync::Arc;

use double_poisson::bracket::kontsevich_bracket;
use double_poisson::necklace::{PolyFieldDoc, enumerate_basis};
use double_poisson::{PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    let q = Arc::new(Quiver::new(&["u", "v"], &[("a", "u", "v"), ("b", "v", "u")])?);
    println!("{q}");
    for k in 0..=2 {
        let dims: Vec<usize> = (0..=4).map(|w| enumerate_basis(&q, k, w, 10_000).map(|b| b.len())).collect::<Result<_, _>>()?;
        println!("stars {k}: {dims:?}");
    }
    let f = PolyField::from_names(&q, &["*a", "a"])?;
    let g = PolyField::from_names(&q, &["a", "b"])?;
    println!("{{{f}, {g}}} = {}", kontsevich_bracket(&f, &g)?);

    let doc: PolyFieldDoc = serde_json::from_str(include_str!("data/two_vertex.json"))?;
    let h = PolyField::from_doc(&doc)?;
    println!("from json: {h}");
    println!("{{h, h}} = {}", kontsevich_bracket(&h, &h)?);
    Ok(())
}
