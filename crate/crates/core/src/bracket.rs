//! The necklace bracket and double Poisson tensors.
//!
//! `{w1, w2}` contracts each starred bead of one necklace with a plain copy
//! of the same arrow in the other. Rotating the contracted beads to the seam
//! gives `w1 ≡ ε1 (R1 · b)` and `w2 ≡ ε2 (b' · R2)`; the term is
//! `± ε1 ε2 [R1 R2]`, with `+` when `b` is the starred one. With degrees
//! shifted down by one this is a graded Lie bracket.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Path, TensorElem, accumulate, double_deriv, same_quiver};
use crate::necklace::{Necklace, PolyField, reduce_word};
use crate::quiver::{Bead, Quiver};

fn prefix_stars(word: &[Bead]) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len() + 1);
    out.push(0);
    for b in word {
        out.push(out[out.len() - 1] + b.degree());
    }
    out
}

fn rot_sign(prefix: &[usize], r: usize) -> i8 {
    let total = prefix[prefix.len() - 1];
    let d = prefix[r];
    if (d * (total - d)) % 2 == 1 { -1 } else { 1 }
}

fn bracket_necklaces(q: &Quiver, u: &Necklace, v: &Necklace, c: &Coeff, out: &mut BTreeMap<Necklace, Coeff>) {
    let (uw, vw) = (u.word(), v.word());
    let (pu, pv) = (prefix_stars(uw), prefix_stars(vw));
    let mut word = Vec::with_capacity(uw.len() + vw.len());
    for (i, &bi) in uw.iter().enumerate() {
        for (j, &bj) in vw.iter().enumerate() {
            if bi.arrow != bj.arrow || bi.kind == bj.kind {
                continue;
            }
            let mut sign = rot_sign(&pu, i + 1) * rot_sign(&pv, j);
            if !bi.is_star() {
                sign = -sign;
            }
            word.clear();
            word.extend_from_slice(&uw[i + 1..]);
            word.extend_from_slice(&uw[..i]);
            word.extend_from_slice(&vw[j + 1..]);
            word.extend_from_slice(&vw[..j]);
            let (necklace, s) = if word.is_empty() {
                // both remainders empty: the idempotent where the contraction closes
                let here = q.head(bi).expect("bead over q");
                (Necklace::unit(here), 1)
            } else {
                match reduce_word(&word) {
                    Some((w, s)) => (Necklace::from_canonical(w), s),
                    None => continue,
                }
            };
            let term = if sign * s < 0 { -c.clone() } else { c.clone() };
            accumulate(out, necklace, term);
        }
    }
}

/// `{a, b}` extended bilinearly.
pub fn kontsevich_bracket(a: &PolyField, b: &PolyField) -> Result<PolyField> {
    same_quiver(a.quiver(), b.quiver())?;
    let q = a.quiver();
    let mut out = BTreeMap::new();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            bracket_necklaces(q, u, v, &(cu * cv), &mut out);
        }
    }
    let mut f = PolyField::zero(q);
    for (n, c) in out {
        f.add_necklace(n, c);
    }
    Ok(f)
}

/// A field of star-degree 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorP {
    field: PolyField,
    weights: BTreeSet<usize>,
}

impl TensorP {
    pub fn new(field: PolyField) -> Result<TensorP> {
        if let Some(n) = field.terms().keys().find(|n| n.stars() != 2) {
            return Err(Error::WrongStarDegree { expected: 2, found: n.stars() });
        }
        let weights = field.terms().keys().map(Necklace::weight).collect();
        Ok(TensorP { field, weights })
    }

    pub fn field(&self) -> &PolyField {
        &self.field
    }

    pub fn quiver(&self) -> &std::sync::Arc<Quiver> {
        self.field.quiver()
    }

    /// The common weight of all terms; `None` for the zero tensor.
    pub fn homogeneous_weight(&self) -> Result<Option<usize>> {
        match self.weights.len() {
            0 => Ok(None),
            1 => Ok(self.weights.first().copied()),
            _ => Err(Error::NotHomogeneous),
        }
    }
}

/// `d_P = {P, -}`.
pub fn differential_dp(p: &TensorP, v: &PolyField) -> Result<PolyField> {
    kontsevich_bracket(&p.field, v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonCheck {
    pub is_poisson: bool,
    /// `{P, P}`; zero exactly when the tensor is Poisson.
    pub obstruction: PolyField,
}

pub fn is_poisson_tensor(p: &TensorP) -> Result<PoissonCheck> {
    let obstruction = kontsevich_bracket(&p.field, &p.field)?;
    Ok(PoissonCheck { is_poisson: obstruction.is_zero(), obstruction })
}

/// `Σ (t2' t1'') ⊗ (t1' t2'')`.
fn interleave(t1: &TensorElem, t2: &TensorElem) -> TensorElem {
    let q = t1.quiver();
    let mut out = TensorElem::zero(q);
    for ((l1, r1), c1) in t1.terms() {
        for ((l2, r2), c2) in t2.terms() {
            if let (Some(l), Some(r)) = (l2.concat(q, r1), l1.concat(q, r2)) {
                out.add_term(l, r, c1 * c2);
            }
        }
    }
    out
}

/// The double bracket `⟨⟨a, b⟩⟩_P` of two base elements.
///
/// Each necklace of `P` is read from its first starred bead as
/// `[a* u b* v]` and factored as `δΔ` with `δ = ∂_a u`, `Δ = ∂_b v`; then
/// `⟨⟨a, b⟩⟩ = δ(a)'Δδ(a)''(b) − Δ(a)'δΔ(a)''(b)` with inner actions.
pub fn double_bracket_of_pair(p: &TensorP, a: &NCPoly, b: &NCPoly) -> Result<TensorElem> {
    same_quiver(p.quiver(), a.quiver())?;
    same_quiver(p.quiver(), b.quiver())?;
    let q = p.quiver();
    let mut out = TensorElem::zero(q);
    for (n, c) in p.field.iter() {
        let w = n.word();
        let s = w.iter().position(|x| x.is_star()).expect("two stars");
        let r: Vec<Bead> = w[s..].iter().chain(&w[..s]).copied().collect();
        let t = 1 + r[1..].iter().position(|x| x.is_star()).expect("two stars");
        let segment = |from: usize, to: usize, start: Bead| -> NCPoly {
            let path = if from == to {
                Path::unit(q.head(start).expect("bead over q"))
            } else {
                Path::new(q, r[from..to].to_vec()).expect("subword of a closed word")
            };
            NCPoly::monomial(q, path, Coeff::from_integer(1.into()))
        };
        let u = segment(1, t, r[0]);
        let v = segment(t + 1, r.len(), r[t]);
        let delta = |f: &NCPoly| -> Result<TensorElem> { double_deriv(r[0].dual(), f)?.inner_right(&u) };
        let big = |f: &NCPoly| -> Result<TensorElem> { double_deriv(r[t].dual(), f)?.inner_right(&v) };
        let term = interleave(&delta(a)?, &big(b)?).sub(&interleave(&big(a)?, &delta(b)?))?;
        out = out.add(&term.scale(c))?;
    }
    Ok(out)
}

/// Evaluates a star-degree-1 field `[∂_a w]` on `f` as `Σ f' w f''`.
pub fn apply_vector_field(v: &PolyField, f: &NCPoly) -> Result<NCPoly> {
    same_quiver(v.quiver(), f.quiver())?;
    let q = v.quiver();
    let mut out = NCPoly::zero(q);
    for (n, c) in v.iter() {
        if n.stars() != 1 {
            return Err(Error::WrongStarDegree { expected: 1, found: n.stars() });
        }
        let w = n.word();
        let s = w.iter().position(|x| x.is_star()).expect("one star");
        let rest: Vec<Bead> = w[s + 1..].iter().chain(&w[..s]).copied().collect();
        let rest = if rest.is_empty() {
            Path::unit(q.head(w[s])?)
        } else {
            Path::new(q, rest)?
        };
        let d = double_deriv(w[s].dual(), f)?;
        let inserted = d.inner_right(&NCPoly::monomial(q, rest, c.clone()))?;
        out = out.add(&inserted.mu())?;
    }
    Ok(out)
}
