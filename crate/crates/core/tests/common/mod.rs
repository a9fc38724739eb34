//! Fixtures and independent reference computations shared by the test targets.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use double_poisson::bracket::TensorP;
use double_poisson::coeff::int;
use double_poisson::ncalg::{NCPoly, TensorElem};
use double_poisson::quiver::{ArrowId, VertexId};
use double_poisson::{Bead, Coeff, Necklace, Path, PolyField, Quiver};
use num_traits::{One, Zero};
use rand::Rng;

const V0: VertexId = VertexId(0);

pub fn plane() -> Arc<Quiver> {
    Arc::new(Quiver::plane())
}

pub fn field(q: &Arc<Quiver>, words: &[&[&str]]) -> PolyField {
    let mut f = PolyField::zero(q);
    for w in words {
        f = f.add(&PolyField::from_names(q, w).unwrap()).unwrap();
    }
    f
}

pub fn tensor(q: &Arc<Quiver>, words: &[&[&str]]) -> TensorP {
    TensorP::new(field(q, words)).unwrap()
}

/// The named tensors over the plane, in a fixed order.
pub fn small_tensors(q: &Arc<Quiver>) -> Vec<(&'static str, TensorP)> {
    vec![
        ("P0", tensor(q, &[&["x", "*x", "*x"]])),
        ("P0~", tensor(q, &[&["x", "*x", "*x"], &["y", "*y", "*y"]])),
        ("P1", tensor(q, &[&["x", "*x", "*x"], &["y", "*x", "*y"]])),
        ("P1~", tensor(q, &[&["x", "*x", "*y"], &["y", "*y", "*y"]])),
        ("xdx xdy", tensor(q, &[&["x", "*x", "x", "*y"]])),
    ]
}

pub fn x() -> Bead {
    Bead::plain(ArrowId(0))
}

pub fn y() -> Bead {
    Bead::plain(ArrowId(1))
}

pub fn dx() -> Bead {
    Bead::star(ArrowId(0))
}

pub fn dy() -> Bead {
    Bead::star(ArrowId(1))
}

pub fn small_coeff<R: Rng>(rng: &mut R) -> Coeff {
    loop {
        let c: i64 = rng.gen_range(-3..=3);
        if c != 0 {
            return int(c);
        }
    }
}

/// A random word over the plane with exactly `stars` starred beads.
pub fn random_word<R: Rng>(rng: &mut R, stars: usize, weight: usize) -> Vec<Bead> {
    let mut w: Vec<Bead> = (0..weight).map(|_| if rng.gen_bool(0.5) { x() } else { y() }).collect();
    for _ in 0..stars {
        let b = if rng.gen_bool(0.5) { dx() } else { dy() };
        let at = rng.gen_range(0..=w.len());
        w.insert(at, b);
    }
    w
}

pub fn random_field<R: Rng>(rng: &mut R, q: &Arc<Quiver>, stars: usize, max_weight: usize, terms: usize) -> PolyField {
    let mut f = PolyField::zero(q);
    for _ in 0..terms {
        let weight = rng.gen_range(0..=max_weight);
        let w = random_word(rng, stars, weight);
        if w.is_empty() {
            f.add_necklace(Necklace::unit(V0), small_coeff(rng));
        } else {
            f.add_word(&w, small_coeff(rng)).unwrap();
        }
    }
    f
}

pub fn random_poly<R: Rng>(rng: &mut R, q: &Arc<Quiver>, max_len: usize, terms: usize) -> NCPoly {
    let mut f = NCPoly::zero(q);
    for _ in 0..terms {
        let len = rng.gen_range(0..=max_len);
        let w = random_word(rng, 0, len);
        let p = if w.is_empty() { Path::unit(V0) } else { Path::new(q, w).unwrap() };
        f.add_term(p, small_coeff(rng));
    }
    f
}

/// `Σ c [p · tail]` for a polynomial `Σ c p`.
pub fn poly_then(q: &Arc<Quiver>, f: &NCPoly, tail: &[Bead]) -> PolyField {
    let mut out = PolyField::zero(q);
    for (p, c) in f.terms() {
        let mut w = p.beads().to_vec();
        w.extend_from_slice(tail);
        if w.is_empty() {
            out.add_necklace(Necklace::unit(V0), c.clone());
        } else {
            out.add_word(&w, c.clone()).unwrap();
        }
    }
    out
}

/// `Σ c [a · s1 · b · s2]` over the Sweedler terms `a ⊗ b` of `t`.
pub fn sweedler_necklace(q: &Arc<Quiver>, t: &TensorElem, s1: Bead, s2: Bead) -> PolyField {
    let mut out = PolyField::zero(q);
    for ((a, b), c) in t.terms() {
        let mut w = a.beads().to_vec();
        w.push(s1);
        w.extend_from_slice(b.beads());
        w.push(s2);
        out.add_word(&w, c.clone()).unwrap();
    }
    out
}

pub fn poly(q: &Arc<Quiver>, s: &str) -> NCPoly {
    NCPoly::parse(q, s).unwrap()
}

/// `Σ (la · t' · ra) ⊗ (lb · t'' · rb)`.
pub fn reshape(t: &TensorElem, la: &NCPoly, ra: &NCPoly, lb: &NCPoly, rb: &NCPoly) -> TensorElem {
    let q = t.quiver();
    let mut out = TensorElem::zero(q);
    for ((a, b), c) in t.terms() {
        let a = la.mul(&NCPoly::monomial(q, a.clone(), c.clone())).unwrap().mul(ra).unwrap();
        let b = lb.mul(&NCPoly::monomial(q, b.clone(), Coeff::one())).unwrap().mul(rb).unwrap();
        out = out.add(&TensorElem::pure(&a, &b).unwrap()).unwrap();
    }
    out
}

/// The Sweedler expansion of `∂f/∂a` computed from scratch: every occurrence
/// of `a` in a monomial splits it into `prefix ⊗ suffix`.
pub fn deriv_oracle(q: &Arc<Quiver>, a: Bead, f: &NCPoly) -> TensorElem {
    let mut out = TensorElem::zero(q);
    for (p, c) in f.terms() {
        let w = p.beads();
        for i in (0..w.len()).filter(|&i| w[i] == a) {
            let left = if i == 0 { Path::unit(V0) } else { Path::new(q, w[..i].to_vec()).unwrap() };
            let right = if i + 1 == w.len() {
                Path::unit(V0)
            } else {
                Path::new(q, w[i + 1..].to_vec()).unwrap()
            };
            out.add_term(left, right, c.clone());
        }
    }
    out
}

/// `Σ t'' t'`.
pub fn swap_mu(t: &TensorElem) -> NCPoly {
    t.flip().mu()
}

// Reference cyclic-word arithmetic, one bead at a time.

fn degree(w: &[Bead]) -> usize {
    w.iter().filter(|b| b.is_star()).count()
}

/// Moves the first bead to the back, returning the Koszul sign of the move.
fn rotate_once(w: &mut Vec<Bead>) -> i8 {
    let b = w.remove(0);
    let rest = degree(w);
    w.push(b);
    if b.is_star() && rest % 2 == 1 { -1 } else { 1 }
}

/// Brute-force canonical form: try every rotation, keep the least word, and
/// detect a vanishing necklace when the least word is reached with both signs.
pub fn canonical_oracle(word: &[Bead]) -> Option<(Vec<Bead>, i8)> {
    let mut w = word.to_vec();
    let mut sign = 1i8;
    let mut best: Option<(Vec<Bead>, i8)> = None;
    let mut seen = BTreeMap::new();
    for _ in 0..w.len() {
        seen.entry(w.clone()).or_insert_with(Vec::new).push(sign);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w.clone(), sign));
        }
        sign *= rotate_once(&mut w);
    }
    let (b, s) = best?;
    let signs = &seen[&b];
    // the least word reached with the two signs means the class is zero
    if signs.iter().any(|&t| t != s) {
        return None;
    }
    Some((b, s))
}

fn rotate_to(word: &[Bead], steps: usize) -> (Vec<Bead>, i8) {
    let mut w = word.to_vec();
    let mut s = 1i8;
    for _ in 0..steps {
        s *= rotate_once(&mut w);
    }
    (w, s)
}

/// Reference bracket of two single necklaces over the plane.
pub fn bracket_oracle(q: &Arc<Quiver>, u: &[Bead], v: &[Bead]) -> PolyField {
    let mut out: BTreeMap<Vec<Bead>, Coeff> = BTreeMap::new();
    let mut unit = Coeff::zero();
    for i in 0..u.len() {
        for j in 0..v.len() {
            let (bi, bj) = (u[i], v[j]);
            if bi.arrow != bj.arrow || bi.is_star() == bj.is_star() {
                continue;
            }
            // u with bead i last, v with bead j first
            let (ur, su) = rotate_to(u, i + 1);
            let (vr, sv) = rotate_to(v, j);
            let mut w = ur[..ur.len() - 1].to_vec();
            w.extend_from_slice(&vr[1..]);
            let mut sign = su * sv;
            if !bi.is_star() {
                sign = -sign;
            }
            if w.is_empty() {
                unit += int(sign as i64);
                continue;
            }
            if let Some((c, s)) = canonical_oracle(&w) {
                *out.entry(c).or_insert_with(Coeff::zero) += int((sign * s) as i64);
            }
        }
    }
    let mut f = PolyField::zero(q);
    for (w, c) in out {
        f.add_word(&w, c).unwrap();
    }
    if !unit.is_zero() {
        f.add_necklace(Necklace::unit(V0), unit);
    }
    f
}

pub fn bracket_oracle_fields(a: &PolyField, b: &PolyField) -> PolyField {
    let q = a.quiver();
    let mut out = PolyField::zero(q);
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out = out.add(&bracket_oracle(q, u.word(), v.word()).scale(&(cu * cv))).unwrap();
        }
    }
    out
}

/// Sign of the shifted-degree antisymmetry `{a, b} = −(−1)^{(|a|−1)(|b|−1)} {b, a}`.
pub fn antisymmetry_sign(ka: usize, kb: usize) -> Coeff {
    let e = (ka as i64 - 1) * (kb as i64 - 1);
    if e.rem_euclid(2) == 0 { -Coeff::one() } else { Coeff::one() }
}

/// `x^{k1} y^{k2} x^{k3} …` with `2s` blocks, starting with `x` when `x_first`.
pub fn block_monomial(blocks: &[usize], x_first: bool) -> Vec<Bead> {
    let mut w = Vec::new();
    for (i, &k) in blocks.iter().enumerate() {
        let b = if (i % 2 == 0) == x_first { x() } else { y() };
        w.extend(std::iter::repeat_n(b, k));
    }
    w
}
