//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use common::*;
use double_poisson::bracket::{TensorP, differential_dp, is_poisson_tensor, kontsevich_bracket};
use double_poisson::classical::{
    CommPoly, PlaneField, classical_cohomology, d1_pi, in_span_modulo_coboundaries, schouten_bracket, trace_map,
};
use double_poisson::coeff::int;
use double_poisson::cohomology::{Caps, boundary_matrix, chain_basis, cohomology_summary, composite_vanishes};
use double_poisson::finalg::{
    StructureConstants, catalogue_2dim, compare_weight1, hochschild_dims, is_associative, random_associative_constants,
    random_sparse_constants, tensor_from_constants,
};
use double_poisson::linalg::{RatVec, SpanBasis};
use double_poisson::ncalg::{NCPoly, TensorElem, euler_apply, gauge_apply};
use double_poisson::{Coeff, Path, PolyField, Quiver};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok { Ok(()) } else { Err(msg()) }
}

fn lib<T>(r: double_poisson::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn wide() -> Caps {
    Caps { max_stars: 4, max_weight: 10, ..Caps::default() }
}

fn h_dims(p: &TensorP, k: usize, ws: std::ops::RangeInclusive<usize>) -> Result<Vec<usize>, String> {
    Ok(lib(cohomology_summary(p, k..=k, ws, &Caps::default(), false))?.iter().map(|b| b.dim_h).collect())
}

fn dims_are(p: &TensorP, k: usize, expect: &[usize]) -> Outcome {
    let got = h_dims(p, k, 0..=expect.len() - 1)?;
    ensure(got == expect, || format!("H^{k}: got {got:?}, want {expect:?}"))
}

/// Coordinates of `f` in the necklace basis of bidegree `(k, w)`.
fn coords(q: &Quiver, f: &PolyField, k: usize, w: usize) -> Result<RatVec, String> {
    let basis = lib(chain_basis(q, k, w, &wide()))?;
    let mut v = RatVec::new();
    for (n, c) in f.iter() {
        let i = basis.iter().position(|b| b == n).ok_or_else(|| format!("{} outside ({k}, {w})", n.render(q)))?;
        v.insert(i, c.clone());
    }
    Ok(v)
}

fn c1_catalogue() -> Outcome {
    let q = plane();
    for e in catalogue_2dim() {
        let check = lib(is_poisson_tensor(&e.tensor()))?;
        ensure(check.is_poisson, || format!("{} is not Poisson", e.name))?;
    }
    let broken = lib(is_poisson_tensor(&tensor(&q, &[&["x", "*x", "*y"]])))?;
    ensure(!broken.is_poisson && !broken.obstruction.is_zero(), || "x∂x∂y passes".into())
}

fn c2_associativity() -> Outcome {
    let mut r = ChaCha8Rng::seed_from_u64(2);
    for (n, trials) in [(2, 50), (3, 20)] {
        let mut assoc = 0;
        for t in 0..trials {
            let c: StructureConstants = if t % 2 == 0 {
                random_associative_constants(n, &mut r)
            } else {
                random_sparse_constants(n, 2.0 / (n * n) as f64, &mut r)
            };
            let (a, _) = is_associative(&c);
            let p = lib(tensor_from_constants(&c, &c.free_quiver()))?;
            let poisson = lib(is_poisson_tensor(&p))?.is_poisson;
            ensure(a == poisson, || format!("n = {n}, trial {t}: associative {a}, Poisson {poisson}"))?;
            assoc += usize::from(a);
        }
        ensure(assoc > 0 && assoc < trials, || format!("n = {n}: degenerate sample, {assoc} associative"))?;
    }
    Ok(())
}

fn c3_p0_functions() -> Outcome {
    let q = plane();
    let p = tensor(&q, &[&["x", "*x", "*x"]]);
    dims_are(&p, 0, &[1, 2, 2, 2, 2, 2, 2])?;
    let reports = lib(cohomology_summary(&p, 0..=0, 1..=6, &Caps::default(), true))?;
    for b in reports {
        let mut reps = SpanBasis::new();
        for f in &b.representatives {
            reps.insert(&coords(&q, f, 0, b.w)?);
        }
        for letter in ["x", "y"] {
            let power = PolyField::from_names(&q, &vec![letter; b.w]).unwrap();
            ensure(reps.contains(&coords(&q, &power, 0, b.w)?), || format!("{letter}^{} not a class", b.w))?;
        }
        ensure(reps.rank() == 2, || format!("weight {}: {} representatives", b.w, reps.rank()))?;
    }
    Ok(())
}

fn c4_p0_fields() -> Outcome {
    dims_are(&tensor(&plane(), &[&["x", "*x", "*x"]]), 1, &[2, 1, 1, 1, 1, 1])
}

fn c5_p0_tilde() -> Outcome {
    let p = tensor(&plane(), &[&["x", "*x", "*x"], &["y", "*y", "*y"]]);
    dims_are(&p, 0, &[1, 2, 2, 2, 2, 2, 2])?;
    dims_are(&p, 1, &[2, 0, 0, 0, 0, 0])
}

fn c6_p1() -> Outcome {
    let q = plane();
    let p1 = tensor(&q, &[&["x", "*x", "*x"], &["y", "*x", "*y"]]);
    let p1t = tensor(&q, &[&["x", "*x", "*y"], &["y", "*y", "*y"]]);
    for (name, p, star) in [("P1", p1, "*x"), ("P1~", p1t, "*y")] {
        dims_are(&p, 0, &[1, 0, 0, 0, 0, 0, 0]).map_err(|e| format!("{name}: {e}"))?;
        dims_are(&p, 1, &[1, 0, 0, 0, 0, 0]).map_err(|e| format!("{name}: {e}"))?;
        let rep = &lib(cohomology_summary(&p, 1..=1, 0..=0, &Caps::default(), true))?[0].representatives[0];
        let want = PolyField::from_names(&q, &[star]).unwrap();
        ensure(coords(&q, rep, 1, 0)?.len() == 1 && !rep.coeff(want.iter().next().unwrap().0).is_zero(), || {
            format!("{name}: H¹ representative {rep}")
        })?;
    }
    Ok(())
}

fn c7_quadratic() -> Outcome {
    let q = plane();
    let p = tensor(&q, &[&["x", "*x", "x", "*y"]]);
    dims_are(&p, 0, &[1, 0, 0, 0, 0, 0, 0])?;
    dims_are(&p, 1, &[1, 2, 1, 0, 0, 0])?;
    let displayed: [(usize, PolyField); 4] = [
        (0, field(&q, &[&["*y"]])),
        (1, field(&q, &[&["x", "*y"]])),
        (1, field(&q, &[&["x", "*x"], &["y", "*y"]])),
        (2, field(&q, &[&["x", "y", "*x"], &["y", "x", "*x"], &["y", "y", "*y"]])),
    ];
    let reports = lib(cohomology_summary(&p, 1..=1, 0..=2, &Caps::default(), true))?;
    for b in &reports {
        // classes agree when both sets span the same space over the coboundaries
        let mut image = SpanBasis::new();
        if b.w >= 1 {
            for col in lib(boundary_matrix(&p, 0, b.w - 1, &Caps::default()))?.columns() {
                image.insert(col);
            }
        }
        let shown: Vec<&PolyField> = displayed.iter().filter(|(w, _)| *w == b.w).map(|(_, f)| f).collect();
        let mut from_reps = image.clone();
        for f in &b.representatives {
            from_reps.insert(&coords(&q, f, 1, b.w)?);
        }
        let mut from_shown = image.clone();
        for f in &shown {
            let v = coords(&q, f, 1, b.w)?;
            ensure(lib(boundary_matrix(&p, 1, b.w, &Caps::default()))?.mul_vec(&v).unwrap().is_empty(), || {
                format!("{f} is not a cocycle")
            })?;
            from_shown.insert(&v);
        }
        ensure(from_reps.rank() == from_shown.rank() && shown.len() == b.representatives.len(), || {
            format!("weight {}: ranks {} vs {}", b.w, from_reps.rank(), from_shown.rank())
        })?;
        for f in &shown {
            ensure(from_reps.contains(&coords(&q, f, 1, b.w)?), || format!("{f} outside the computed classes"))?;
        }
    }
    Ok(())
}

fn c8_hochschild() -> Outcome {
    let caps = wide();
    for e in catalogue_2dim() {
        let hh: Vec<usize> = lib(hochschild_dims(&e.constants, 3, &caps))?.iter().map(|d| d.dim_hh).collect();
        let p = e.tensor();
        let hp: Vec<usize> =
            (0..=3).map(|i| Ok(lib(cohomology_summary(&p, i..=i, 1..=1, &caps, false))?[0].dim_h)).collect::<Result<_, String>>()?;
        ensure(hh == hp, || format!("{}: HH {hh:?}, weight-1 H_P {hp:?}", e.name))?;
        for row in lib(compare_weight1(&e.constants, 3, &caps))? {
            ensure(row.intertwines, || format!("{}: φ_{} does not intertwine", e.name, row.degree))?;
        }
    }
    Ok(())
}

fn c9_classical() -> Outcome {
    let caps = Caps::default();
    let x2 = lib(classical_cohomology(&CommPoly::parse("x^2").unwrap(), 6, &caps))?;
    let h0: usize = x2.iter().map(|d| d.h0).sum();
    let h1: Vec<usize> = x2.iter().map(|d| d.h1).collect();
    ensure(h0 == 1 && h1 == [1, 2, 1, 1, 1, 1, 1], || format!("ψ = x²: H⁰ {h0}, H¹ {h1:?}"))?;
    let lin = lib(classical_cohomology(&CommPoly::parse("y").unwrap(), 6, &caps))?;
    let totals = |f: fn(&double_poisson::classical::ClassicalDegree) -> usize| lin.iter().map(f).sum::<usize>();
    let (a, b, c) = (totals(|d| d.h0), totals(|d| d.h1), totals(|d| d.h2));
    ensure((a, b, c) == (1, 1, 0), || format!("ψ = y: totals {a}, {b}, {c}"))
}

fn vf(f: &str, g: &str) -> PlaneField {
    PlaneField::vector(CommPoly::parse(f).unwrap(), CommPoly::parse(g).unwrap())
}

fn c10_trace() -> Outcome {
    let q = plane();
    let p = tensor(&q, &[&["x", "*x", "x", "*y"]]);
    let psi = CommPoly::parse("x^2").unwrap();
    ensure(trace_map(p.field()).map_err(|e| e.to_string())? == PlaneField::bivector(psi.clone()), || "tr P ≠ x²".into())?;
    let mut traced = Vec::new();
    for b in lib(cohomology_summary(&p, 1..=1, 0..=5, &Caps::default(), true))? {
        for f in &b.representatives {
            traced.push(lib(trace_map(f))?);
        }
    }
    let classes = [vf("2*x*y", "y^2"), vf("x", "y"), vf("0", "x"), vf("0", "1")];
    for c in &classes {
        ensure(d1_pi(&psi, &c.vector.0, &c.vector.1).is_zero(), || format!("{c} is not a cocycle"))?;
        ensure(lib(in_span_modulo_coboundaries(&psi, c, &traced))?, || format!("{c} not in the traced image"))?;
    }
    for t in &traced {
        ensure(lib(in_span_modulo_coboundaries(&psi, t, &classes))?, || format!("traced {t} outside the listed classes"))?;
    }
    let missing = vf("3*x*y^2", "y^3");
    ensure(d1_pi(&psi, &missing.vector.0, &missing.vector.1).is_zero(), || "(3xy², y³) is not a cocycle".into())?;
    ensure(!lib(in_span_modulo_coboundaries(&psi, &missing, &[]))?, || "(3xy², y³) is a coboundary".into())?;
    ensure(!lib(in_span_modulo_coboundaries(&psi, &missing, &traced))?, || "(3xy², y³) lies in the traced image".into())
}

fn accepted_tensors(q: &Arc<Quiver>) -> Vec<(String, TensorP)> {
    let mut all: Vec<(String, TensorP)> = small_tensors(q).into_iter().map(|(n, p)| (n.to_string(), p)).collect();
    all.extend(catalogue_2dim().into_iter().map(|e| (e.name.to_string(), e.tensor())));
    all
}

fn all_paths(q: &Arc<Quiver>, max_len: usize) -> Vec<NCPoly> {
    let mut out = vec![NCPoly::one(q)];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<_>| [x(), y()].map(|b| w.iter().copied().chain([b]).collect::<Vec<_>>()))
            .collect();
        out.extend(layer.iter().map(|w| NCPoly::monomial(q, Path::new(q, w.clone()).unwrap(), Coeff::one())));
    }
    out
}

fn c11_properties() -> Outcome {
    let q = plane();
    let mut r = ChaCha8Rng::seed_from_u64(11);

    // graded antisymmetry and Jacobi, star ≤ 2, weight ≤ 4
    for _ in 0..200 {
        let ks: Vec<usize> = (0..3).map(|_| r.gen_range(0..=2)).collect();
        let a = random_field(&mut r, &q, ks[0], 4, 2);
        let b = random_field(&mut r, &q, ks[1], 4, 2);
        let c = random_field(&mut r, &q, ks[2], 3, 2);
        let br = |u: &PolyField, v: &PolyField| lib(kontsevich_bracket(u, v));
        ensure(br(&a, &b)? == br(&b, &a)?.scale(&antisymmetry_sign(ks[0], ks[1])), || format!("antisymmetry: {a} / {b}"))?;
        let rhs = lib(br(&br(&a, &b)?, &c)?.add(&br(&b, &br(&a, &c)?)?.scale(&-antisymmetry_sign(ks[0], ks[1]))))?;
        ensure(br(&a, &br(&b, &c)?)? == rhs, || format!("Jacobi: {a} / {b} / {c}"))?;
    }

    // d_P² = 0 as matrices; k = 2 reaches four stars at length up to 12
    let caps = Caps { max_chain_dim: 1 << 22, max_weight: 12, ..wide() };
    for (name, p) in accepted_tensors(&q) {
        for k in 0..=2 {
            for w in 0..=6 {
                ensure(lib(composite_vanishes(&p, k, w, &caps))?, || format!("d_P² ≠ 0 for {name} at ({k}, {w})"))?;
            }
        }
    }

    // NC Euler on every path of length ≤ 8
    for path in all_paths(&q, 8) {
        let len = path.homogeneous_length().unwrap_or(0);
        let total = lib(lib(euler_apply(x(), &path))?.add(&lib(euler_apply(y(), &path))?))?;
        ensure(total == path.scale(&int(len as i64)), || format!("Euler on {path:?}"))?;
    }

    // gauge identity on random polynomials of degree ≤ 6
    let one = NCPoly::one(&q);
    for _ in 0..100 {
        let h = random_poly(&mut r, &q, 6, 4);
        let expect = lib(lib(TensorElem::pure(&h, &one))?.sub(&lib(TensorElem::pure(&one, &h))?))?;
        ensure(lib(gauge_apply(&h))? == expect, || format!("gauge on {h}"))?;
    }

    // block-cyclic d_P0
    let p0 = tensor(&q, &[&["x", "*x", "*x"]]);
    for _ in 0..30 {
        let s = r.gen_range(1..=3);
        let blocks: Vec<usize> = (0..2 * s).map(|_| r.gen_range(1..=3)).collect();
        let m = block_monomial(&blocks, true);
        let mut expect = PolyField::zero(&q);
        let mut at = 0;
        for (i, b) in blocks.iter().enumerate() {
            let mut w: Vec<_> = m[at..].iter().chain(&m[..at]).copied().collect();
            w.push(dx());
            lib(expect.add_word(&w, if i % 2 == 0 { -Coeff::one() } else { Coeff::one() }))?;
            at += b;
        }
        let got = lib(differential_dp(&p0, &lib(PolyField::from_word(&q, &m))?))?;
        ensure(got == expect, || format!("block-cyclic on {blocks:?}"))?;
    }

    // trace squares on weight ≤ 5
    for (name, p) in accepted_tensors(&q) {
        let pi = lib(trace_map(p.field()))?;
        for k in 0..=2 {
            for w in 0..=5 {
                for n in lib(chain_basis(&q, k, w, &caps))? {
                    let v = PolyField::from_necklace(&q, n, Coeff::one());
                    let lhs = lib(trace_map(&lib(differential_dp(&p, &v))?))?;
                    let rhs = schouten_bracket(&pi, &lib(trace_map(&v))?);
                    ensure(lhs == rhs, || format!("trace square for {name} on {v}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("catalogue validity", c1_catalogue),
        ("associativity equivalence", c2_associativity),
        ("H0 of P0", c3_p0_functions),
        ("H1 of P0", c4_p0_fields),
        ("cohomology of P0~", c5_p0_tilde),
        ("cohomology of P1 and P1~", c6_p1),
        ("quadratic tensor", c7_quadratic),
        ("Hochschild comparison", c8_hochschild),
        ("classical plane", c9_classical),
        ("trace image", c10_trace),
        ("property suites", c11_properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
