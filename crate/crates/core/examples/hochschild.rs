// Weight-1 d_P-cohomology of a linear tensor against Hochschild cohomology.

use double_poisson::cohomology::Caps;
use double_poisson::finalg::{catalogue_2dim, compare_weight1};

fn main() -> double_poisson::Result<()> {
    let caps = Caps::default();
    println!("{:<10} {:>24} {:>24}", "algebra", "HH^0..3", "H_P^0..3 (weight 1)");
    for e in catalogue_2dim() {
        let rows = compare_weight1(&e.constants, 3, &caps)?;
        assert!(rows.iter().all(|r| r.dims_match && r.intertwines));
        let hh: Vec<_> = rows.iter().map(|r| r.dim_hh).collect();
        let hp: Vec<_> = rows.iter().map(|r| r.dim_hp).collect();
        println!("{:<10} {:>24} {:>24}", e.name, format!("{hh:?}"), format!("{hp:?}"));
    }
    Ok(())
}
