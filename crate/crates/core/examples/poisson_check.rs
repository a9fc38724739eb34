// Which star-degree-2 fields are double Poisson tensors.

use std::sync::Arc;

use double_poisson::bracket::{TensorP, is_poisson_tensor};
use double_poisson::finalg::{StructureConstants, catalogue_2dim, is_associative, tensor_of};
use double_poisson::{PolyField, Quiver};

fn main() -> double_poisson::Result<()> {
    for e in catalogue_2dim() {
        let check = is_poisson_tensor(&e.tensor())?;
        println!("{:<10} {:<40} poisson: {}", e.name, e.tensor().field().to_string(), check.is_poisson);
    }

    // x·y = x alone is not associative, and its tensor is not Poisson
    let broken = StructureConstants::from_entries(2, &[(0, 1, 0, 1)]);
    let (assoc, witness) = is_associative(&broken);
    let check = is_poisson_tensor(&tensor_of(&broken))?;
    println!("\nx·y = x: associative {assoc} (witness {witness:?}), poisson {}", check.is_poisson);
    println!("obstruction {{P, P}} = {}", check.obstruction);

    let q = Arc::new(Quiver::plane());
    let quad = TensorP::new(PolyField::from_names(&q, &["x", "*x", "x", "*y"])?)?;
    println!("{} poisson: {}", quad.field(), is_poisson_tensor(&quad)?.is_poisson);
    Ok(())
}
