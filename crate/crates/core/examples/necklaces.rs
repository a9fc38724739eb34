// Canonical forms of cyclic words and the size of each chain group.

use std::sync::Arc;

use double_poisson::necklace::{Reduced, enumerate_basis};
use double_poisson::{Necklace, Quiver};

fn main() -> double_poisson::Result<()> {
    let q = Arc::new(Quiver::plane());

    for word in [["y", "x", "*x"], ["*x", "x", "y"], ["*x", "*y", "x"]] {
        let beads = word.iter().map(|s| q.parse_bead(s)).collect::<Result<Vec<_>, _>>()?;
        match Necklace::canonicalize(&q, &beads, None)? {
            Reduced::Zero => println!("{word:?} -> 0"),
            Reduced::Signed(n, s) => println!("{word:?} -> {}{}", if s < 0 { "-" } else { "" }, n.render(&q)),
        }
    }

    // [∂x ∂x] is its own rotation with sign −1, so it vanishes
    let xx = [q.parse_bead("*x")?, q.parse_bead("*x")?];
    assert!(matches!(Necklace::canonicalize(&q, &xx, None)?, Reduced::Zero));

    println!("\nchain dimensions over the plane (rows: stars, columns: weight 0..6)");
    for k in 0..=2 {
        let dims: Vec<usize> = (0..=6).map(|w| enumerate_basis(&q, k, w, 100_000).map(|b| b.len())).collect::<Result<_, _>>()?;
        println!("k={k}: {dims:?}");
    }
    Ok(())
}
