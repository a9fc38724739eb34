mod common;

use common::*;
use double_poisson::bracket::{differential_dp, kontsevich_bracket};
use double_poisson::classical::{CommPoly, d0_pi, d1_pi};
use double_poisson::coeff::int;
use double_poisson::finalg::{
    Cochain, StructureConstants, constants_from_tensor, hochschild_d, random_associative_constants, tensor_of,
};
use double_poisson::linalg::{RatMatrix, nullspace_basis, rank};
use double_poisson::necklace::{PolyFieldDoc, Reduced};
use double_poisson::{Bead, Coeff, Necklace, PolyField};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn bead(code: u8) -> Bead {
    [x(), y(), dx(), dy()][code as usize % 4]
}

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn single_degree(r: &mut ChaCha8Rng, max_stars: usize, max_weight: usize) -> (usize, PolyField) {
    let q = plane();
    let k = r.gen_range(0..=max_stars);
    let terms = r.gen_range(1..=3);
    (k, random_field(r, &q, k, max_weight, terms))
}

proptest! {
    #[test]
    fn rotation_changes_only_the_koszul_sign(codes in prop::collection::vec(0u8..4, 1..8), turn in 0usize..8) {
        let q = plane();
        let w: Vec<Bead> = codes.iter().map(|&c| bead(c)).collect();
        let t = turn % w.len();
        let rotated: Vec<Bead> = w[t..].iter().chain(&w[..t]).copied().collect();
        let moved = w[..t].iter().filter(|b| b.is_star()).count();
        let rest_stars = w[t..].iter().filter(|b| b.is_star()).count();
        let koszul: i8 = if (moved * rest_stars) % 2 == 1 { -1 } else { 1 };
        let a = Necklace::canonicalize(&q, &w, None).unwrap();
        let b = Necklace::canonicalize(&q, &rotated, None).unwrap();
        match (a, b) {
            (Reduced::Zero, Reduced::Zero) => {}
            (Reduced::Signed(na, sa), Reduced::Signed(nb, sb)) => {
                prop_assert_eq!(na, nb);
                prop_assert_eq!(sa, sb * koszul);
            }
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn field_doc_round_trip(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let (_, f) = single_degree(&mut r, 3, 4);
        let text = serde_json::to_string(&f.to_doc()).unwrap();
        let doc: PolyFieldDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(PolyField::from_doc(&doc).unwrap(), f);
    }

    #[test]
    fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, seed in any::<u64>()) {
        let mut r = seeded(seed);
        let dense: Vec<Vec<Coeff>> = (0..rows)
            .map(|_| (0..cols).map(|_| if r.gen_bool(0.4) { Coeff::zero() } else { small_coeff(&mut r) }).collect())
            .collect();
        let m = RatMatrix::from_dense(&dense).unwrap();
        let kernel = nullspace_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_empty());
        }
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn classical_euler(terms in prop::collection::vec((0u32..5, -4i64..5), 1..5), d in 0u32..6) {
        let mut p = CommPoly::zero();
        for (a, c) in terms {
            let a = a.min(d);
            p.add_term(a, d - a, int(c));
        }
        let x = CommPoly::parse("x").unwrap();
        let y = CommPoly::parse("y").unwrap();
        let euler = x.mul(&p.dx()).add(&y.mul(&p.dy()));
        prop_assert_eq!(euler, p.scale(&int(d as i64)));
    }

    #[test]
    fn classical_d1_after_d0_vanishes(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let random = |r: &mut ChaCha8Rng| {
            let mut p = CommPoly::zero();
            for _ in 0..3 {
                p.add_term(r.gen_range(0..4), r.gen_range(0..4), small_coeff(r));
            }
            p
        };
        let psi = random(&mut r);
        let h = random(&mut r);
        let v = d0_pi(&psi, &h);
        prop_assert!(d1_pi(&psi, &v.vector.0, &v.vector.1).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_antisymmetry(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let (ka, a) = single_degree(&mut r, 2, 4);
        let (kb, b) = single_degree(&mut r, 2, 4);
        let ab = kontsevich_bracket(&a, &b).unwrap();
        let ba = kontsevich_bracket(&b, &a).unwrap();
        prop_assert_eq!(ab, ba.scale(&antisymmetry_sign(ka, kb)));
    }

    #[test]
    fn graded_jacobi(seed in any::<u64>()) {
        let mut r = seeded(seed);
        let (ka, a) = single_degree(&mut r, 2, 3);
        let (kb, b) = single_degree(&mut r, 2, 3);
        let (_, c) = single_degree(&mut r, 2, 3);
        let br = |u: &PolyField, v: &PolyField| kontsevich_bracket(u, v).unwrap();
        let lhs = br(&a, &br(&b, &c));
        let sign = -antisymmetry_sign(ka, kb);
        let rhs = br(&br(&a, &b), &c).add(&br(&b, &br(&a, &c)).scale(&sign)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dp_squares_to_zero(seed in any::<u64>(), pick in 0usize..5) {
        let mut r = seeded(seed);
        let q = plane();
        let (name, p) = small_tensors(&q).swap_remove(pick);
        let terms = r.gen_range(1..=3);
        let k = r.gen_range(0..=1);
        let v = random_field(&mut r, &q, k, 4, terms);
        let twice = differential_dp(&p, &differential_dp(&p, &v).unwrap()).unwrap();
        prop_assert!(twice.is_zero(), "{} on {}", name, v);
    }

    #[test]
    fn hochschild_d_squares_to_zero(seed in any::<u64>(), n in 2usize..4, degree in 0usize..3) {
        let mut r = seeded(seed);
        let c = random_associative_constants(n, &mut r);
        let mut x = Cochain::new();
        for _ in 0..3 {
            let key: Vec<usize> = (0..=degree).map(|_| r.gen_range(0..n)).collect();
            x.insert(key, small_coeff(&mut r));
        }
        let dd = hochschild_d(&c, &hochschild_d(&c, &x).unwrap()).unwrap();
        prop_assert!(dd.values().all(Zero::is_zero));
    }

    #[test]
    fn constants_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let mut r = seeded(seed);
        let c = random_associative_constants(n, &mut r);
        prop_assert_eq!(&constants_from_tensor(&tensor_of(&c)).unwrap(), &c);
        let text = serde_json::to_string(&c.to_doc()).unwrap();
        let back = StructureConstants::from_doc(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, c);
    }
}
