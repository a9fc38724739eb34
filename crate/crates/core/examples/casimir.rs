// Function necklaces of a linear tensor as cyclic tensors in A^{⊗k}.

use double_poisson::cohomology::Caps;
use double_poisson::finalg::{casimir_embedding_check, catalogue_2dim};

fn main() -> double_poisson::Result<()> {
    let caps = Caps::default();
    for e in catalogue_2dim() {
        let checks = (1..=4).map(|k| casimir_embedding_check(&e.constants, k, 0, &caps)).collect::<Result<Vec<_>, _>>()?;
        let ok = checks.iter().all(|c| c.square_commutes && c.phi0_injective);
        println!("{:<10} weights 1..4, {} necklaces: square and injectivity {}", e.name, checks.iter().map(|c| c.checked).sum::<usize>(), ok);
    }
    Ok(())
}
