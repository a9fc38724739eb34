//! Finite-dimensional algebras and linear double Poisson tensors.
//!
//! A linear tensor `Σ c_ij^k x_k ∂_i ∂_j` on the free algebra in `n` letters
//! carries the same data as the product `x_i x_j = Σ_k c_ij^k x_k`, and it is
//! Poisson exactly when that product is associative. This module converts
//! between the two, lists the two-dimensional algebras, and compares the
//! weight-1 part of `d_P`-cohomology with Hochschild cohomology.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{TensorP, differential_dp};
use crate::coeff::{Coeff, format_coeff, int, parse_coeff};
use crate::cohomology::{Caps, chain_basis, cohomology_summary};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, RatVec, column_span, rank};
use crate::necklace::{Necklace, PolyField};
use crate::quiver::{ArrowId, Bead, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    n: usize,
    names: Vec<String>,
    c: Vec<Coeff>,
}

/// The basis names used when a description does not give any.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

impl StructureConstants {
    pub fn zero(n: usize) -> StructureConstants {
        StructureConstants::with_names(default_names(n))
    }

    pub fn with_names(names: Vec<String>) -> StructureConstants {
        let n = names.len();
        StructureConstants { n, names, c: vec![Coeff::zero(); n * n * n] }
    }

    /// Builds constants from `(i, j, k, c)` entries meaning `x_i x_j ∋ c x_k`.
    pub fn from_entries(n: usize, entries: &[(usize, usize, usize, i64)]) -> StructureConstants {
        let mut s = StructureConstants::zero(n);
        for &(i, j, k, c) in entries {
            s.set(i, j, k, int(c));
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Coeff {
        &self.c[self.at(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Coeff) {
        let at = self.at(i, j, k);
        self.c[at] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Coeff], b: &[Coeff]) -> Vec<Coeff> {
        let n = self.n;
        let mut out = vec![Coeff::zero(); n];
        for i in (0..n).filter(|&i| !a[i].is_zero()) {
            for j in (0..n).filter(|&j| !b[j].is_zero()) {
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    fn unit_vector(&self, i: usize) -> Vec<Coeff> {
        let mut v = vec![Coeff::zero(); self.n];
        v[i] = Coeff::one();
        v
    }

    /// Constants in the basis `e'_a = Σ_i g[i][a] e_i`; `None` if `g` is singular.
    pub fn change_basis(&self, g: &[Vec<Coeff>]) -> Option<StructureConstants> {
        let inv = invert(g)?;
        let n = self.n;
        let col = |a: usize| (0..n).map(|i| g[i][a].clone()).collect::<Vec<_>>();
        let mut out = StructureConstants::with_names(self.names.clone());
        for a in 0..n {
            for b in 0..n {
                let prod = self.multiply(&col(a), &col(b));
                for (c, row) in inv.iter().enumerate() {
                    let v: Coeff = row.iter().zip(&prod).map(|(i, p)| i * p).sum();
                    out.set(a, b, c, v);
                }
            }
        }
        Some(out)
    }

    /// Block sum: the two algebras multiply to zero against each other.
    pub fn direct_sum(&self, other: &StructureConstants) -> StructureConstants {
        let n = self.n + other.n;
        let mut out = StructureConstants::zero(n);
        for (src, off) in [(self, 0), (other, self.n)] {
            for i in 0..src.n {
                for j in 0..src.n {
                    for k in 0..src.n {
                        out.set(i + off, j + off, k + off, src.get(i, j, k).clone());
                    }
                }
            }
        }
        out
    }

    pub fn to_doc(&self) -> AlgebraDoc {
        let mut products = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                let out: BTreeMap<String, String> = (0..self.n)
                    .filter(|&k| !self.get(i, j, k).is_zero())
                    .map(|k| (self.names[k].clone(), format_coeff(self.get(i, j, k))))
                    .collect();
                if !out.is_empty() {
                    products.push(ProductDoc { i: self.names[i].clone(), j: self.names[j].clone(), out });
                }
            }
        }
        AlgebraDoc { n: self.n, basis: Some(self.names.clone()), products }
    }

    pub fn from_doc(doc: &AlgebraDoc) -> Result<StructureConstants> {
        let names = match &doc.basis {
            Some(b) if b.len() != doc.n => {
                return Err(Error::DimensionMismatch(format!("{} basis names for n = {}", b.len(), doc.n)));
            }
            Some(b) => b.clone(),
            None => default_names(doc.n),
        };
        let index = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UnknownArrow(s.to_string()))
        };
        let mut c = StructureConstants::with_names(names.clone());
        for p in &doc.products {
            let (i, j) = (index(&p.i)?, index(&p.j)?);
            for (k, v) in &p.out {
                let k = index(k)?;
                let v = c.get(i, j, k) + parse_coeff(v)?;
                c.set(i, j, k, v);
            }
        }
        Ok(c)
    }

    /// The one-vertex quiver whose loops are the basis names.
    pub fn free_quiver(&self) -> Arc<Quiver> {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        Arc::new(Quiver::one_vertex(&names).expect("distinct basis names"))
    }
}

/// Gauss–Jordan inverse of a small dense matrix.
fn invert(g: &[Vec<Coeff>]) -> Option<Vec<Vec<Coeff>>> {
    let n = g.len();
    let mut a: Vec<Vec<Coeff>> = g
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub i: String,
    pub j: String,
    pub out: BTreeMap<String, String>,
}

/// Serialized algebra: `{"n":2,"products":[{"i":"x","j":"y","out":{"y":"1"}}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub products: Vec<ProductDoc>,
}

/// `Σ c_ij^k [x_k ∂_i ∂_j]` over a one-vertex quiver with `n` loops.
pub fn tensor_from_constants(c: &StructureConstants, q: &Arc<Quiver>) -> Result<TensorP> {
    if !q.is_one_vertex() {
        return Err(Error::MultiVertex);
    }
    if q.arrow_count() != c.n {
        return Err(Error::DimensionMismatch(format!("{} loops for n = {}", q.arrow_count(), c.n)));
    }
    let x = |i: usize| ArrowId(i as u32);
    let mut f = PolyField::zero(q);
    for i in 0..c.n {
        for j in 0..c.n {
            for k in 0..c.n {
                let v = c.get(i, j, k);
                if !v.is_zero() {
                    f.add_word(&[Bead::plain(x(k)), Bead::star(x(i)), Bead::star(x(j))], v.clone())?;
                }
            }
        }
    }
    TensorP::new(f)
}

pub fn tensor_of(c: &StructureConstants) -> TensorP {
    tensor_from_constants(c, &c.free_quiver()).expect("matching quiver")
}

pub fn constants_from_tensor(p: &TensorP) -> Result<StructureConstants> {
    let q = p.quiver();
    if !q.is_one_vertex() {
        return Err(Error::MultiVertex);
    }
    let names = q.arrow_ids().map(|a| q.bead_name(Bead::plain(a))).collect();
    let mut c = StructureConstants::with_names(names);
    for (n, v) in p.field().iter() {
        // the one plain bead sorts first, so the canonical word is [x_k ∂_i ∂_j]
        match n.word() {
            [k, i, j] if !k.is_star() => c.set(i.arrow.0 as usize, j.arrow.0 as usize, k.arrow.0 as usize, v.clone()),
            _ => return Err(Error::NotLinear(n.render(q))),
        }
    }
    Ok(c)
}

/// A triple `(q, r, s)` with `((q r) s)_p ≠ (q (r s))_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AssocWitness {
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub p: usize,
}

pub fn is_associative(c: &StructureConstants) -> (bool, Option<AssocWitness>) {
    let n = c.n;
    for q in 0..n {
        for r in 0..n {
            let qr = c.multiply(&c.unit_vector(q), &c.unit_vector(r));
            for s in 0..n {
                let left = c.multiply(&qr, &c.unit_vector(s));
                let rs = c.multiply(&c.unit_vector(r), &c.unit_vector(s));
                let right = c.multiply(&c.unit_vector(q), &rs);
                if let Some(p) = (0..n).find(|&p| left[p] != right[p]) {
                    return (false, Some(AssocWitness { q, r, s, p }));
                }
            }
        }
    }
    (true, None)
}

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub name: &'static str,
    /// ASCII handle for command lines.
    pub slug: &'static str,
    pub constants: StructureConstants,
}

impl CatalogueEntry {
    pub fn tensor(&self) -> TensorP {
        tensor_of(&self.constants)
    }
}

/// The seven linear double Poisson tensors on the free algebra in `x, y`.
pub fn catalogue_2dim() -> Vec<CatalogueEntry> {
    let (x, y) = (0, 1);
    let entry = |name, slug, e: &[(usize, usize, usize, i64)]| CatalogueEntry {
        name,
        slug,
        constants: StructureConstants::from_entries(2, e),
    };
    vec![
        entry("ℂ×ℂ", "CxC", &[(x, x, x, 1), (y, y, y, 1)]),
        entry("ℂ×ℂε²", "CxCe2", &[(x, x, x, 1)]),
        entry("ℂ⊕ℂε²", "C+Ce2", &[(x, x, x, 1), (x, y, y, 1), (y, x, y, 1)]),
        entry("ℂε⊕ℂε²", "Ce+Ce2", &[(x, x, y, 1)]),
        entry("B₂¹", "B21", &[(x, x, x, 1), (x, y, y, 1)]),
        entry("B₂²", "B22", &[(x, y, x, 1), (y, y, y, 1)]),
        entry("ℂε²⊕ℂε²", "Ce2+Ce2", &[]),
    ]
}

pub fn catalogue_entry(key: &str) -> Option<CatalogueEntry> {
    catalogue_2dim().into_iter().find(|e| e.name == key || e.slug == key)
}

/// Basis cochains `x*_{k1} ⊗ … ⊗ x*_{ki} ⊗ x_ℓ`, keyed by `[k1, …, ki, ℓ]`.
pub type Cochain = BTreeMap<Vec<usize>, Coeff>;

fn add_to(out: &mut Cochain, key: Vec<usize>, c: Coeff) {
    crate::ncalg::accumulate(out, key, c);
}

/// The bar-type Hochschild differential on one basis cochain.
fn hochschild_d_basis(c: &StructureConstants, key: &[usize], coeff: &Coeff, out: &mut Cochain) {
    let n = c.n;
    let i = key.len() - 1;
    let (ks, l) = (&key[..i], key[i]);
    for s in 0..n {
        for t in 0..n {
            let a = c.get(s, l, t);
            if !a.is_zero() {
                let mut k = vec![s];
                k.extend_from_slice(ks);
                k.push(t);
                add_to(out, k, a * coeff);
            }
            let b = c.get(l, s, t);
            if !b.is_zero() {
                let mut k = ks.to_vec();
                k.extend([s, t]);
                let sign = if i.is_multiple_of(2) { -Coeff::one() } else { Coeff::one() };
                add_to(out, k, b * coeff * sign);
            }
            for (r, &kr) in ks.iter().enumerate() {
                let e = c.get(s, t, kr);
                if e.is_zero() {
                    continue;
                }
                let mut k = ks[..r].to_vec();
                k.extend([s, t]);
                k.extend_from_slice(&ks[r + 1..]);
                k.push(l);
                // the r-th factor (1-based) carries (-1)^r
                let sign = if r % 2 == 0 { -Coeff::one() } else { Coeff::one() };
                add_to(out, k, e * coeff * sign);
            }
        }
    }
}

/// `d` on `(A*)^{⊗i} ⊗ A`. Every key must have the same length `i + 1`.
pub fn hochschild_d(c: &StructureConstants, x: &Cochain) -> Result<Cochain> {
    let mut lens = x.keys().map(Vec::len);
    if let Some(first) = lens.next() {
        if first == 0 || lens.any(|l| l != first) {
            return Err(Error::DimensionMismatch("cochain keys of different degrees".into()));
        }
    }
    if let Some(bad) = x.keys().flatten().find(|&&k| k >= c.n) {
        return Err(Error::DimensionMismatch(format!("basis index {bad} for n = {}", c.n)));
    }
    let mut out = Cochain::new();
    for (k, v) in x {
        hochschild_d_basis(c, k, v, &mut out);
    }
    Ok(out)
}

fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |a| {
                    let mut u = t.clone();
                    u.push(a);
                    u
                })
            })
            .collect();
    }
    out
}

fn tuple_index(n: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &a| acc * n + a)
}

/// Matrix of `d : C^i → C^{i+1}` in the lexicographic tuple bases.
pub fn hochschild_matrix(c: &StructureConstants, i: usize) -> RatMatrix {
    let n = c.n;
    let cols = tuples(n, i + 1)
        .into_iter()
        .map(|t| {
            let mut out = Cochain::new();
            hochschild_d_basis(c, &t, &Coeff::one(), &mut out);
            out.into_iter().map(|(k, v)| (tuple_index(n, &k), v)).collect::<RatVec>()
        })
        .collect();
    RatMatrix::from_columns(n.pow(i as u32 + 2), cols).expect("indices in range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HochschildDegree {
    pub degree: usize,
    pub dim_chain: usize,
    pub rank_d: usize,
    pub dim_hh: usize,
}

pub fn hochschild_dims(c: &StructureConstants, max_degree: usize, caps: &Caps) -> Result<Vec<HochschildDegree>> {
    let n = c.n;
    let top = n.checked_pow(max_degree as u32 + 2).filter(|&d| d <= caps.max_chain_dim);
    if top.is_none() && n > 1 {
        return Err(Error::CapExceeded(format!(
            "Hochschild chains of degree {} exceed {}",
            max_degree + 1,
            caps.max_chain_dim
        )));
    }
    let ranks: Vec<usize> = (0..=max_degree).into_par_iter().map(|i| rank(&hochschild_matrix(c, i))).collect();
    Ok((0..=max_degree)
        .map(|i| {
            let dim_chain = n.pow(i as u32 + 1);
            let incoming = if i == 0 { 0 } else { ranks[i - 1] };
            HochschildDegree { degree: i, dim_chain, rank_d: ranks[i], dim_hh: dim_chain - ranks[i] - incoming }
        })
        .collect())
}

/// `φ_i(x*_{k1} ⊗ … ⊗ x*_{ki} ⊗ x_ℓ) = [∂_{k1} … ∂_{ki} x_ℓ]`.
pub fn phi(q: &Arc<Quiver>, key: &[usize]) -> Result<PolyField> {
    let i = key.len() - 1;
    let mut word: Vec<Bead> = key[..i].iter().map(|&k| Bead::star(ArrowId(k as u32))).collect();
    word.push(Bead::plain(ArrowId(key[i] as u32)));
    PolyField::from_word(q, &word)
}

pub fn phi_cochain(q: &Arc<Quiver>, x: &Cochain) -> Result<PolyField> {
    let mut out = PolyField::zero(q);
    for (k, v) in x {
        out = out.add(&phi(q, k)?.scale(v))?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Weight1Row {
    pub degree: usize,
    pub dim_hh: usize,
    pub dim_hp: usize,
    pub dims_match: bool,
    pub intertwines: bool,
}

/// Compares `HH^i(A)` with weight-1 `d_P`-cohomology for `i ≤ max_degree`.
pub fn compare_weight1(c: &StructureConstants, max_degree: usize, caps: &Caps) -> Result<Vec<Weight1Row>> {
    let p = tensor_of(c);
    let q = p.quiver().clone();
    let hh = hochschild_dims(c, max_degree, caps)?;
    // weight-1 chains with k stars number at most n^(k+1), already bounded by
    // the Hochschild check above, so the star cap is lifted to what is needed
    let caps = Caps { max_stars: caps.max_stars.max(max_degree + 1), ..*caps };
    let hp = cohomology_summary(&p, 0..=max_degree, 1..=1, &caps, false)?;
    (0..=max_degree)
        .map(|i| {
            let intertwines = tuples(c.n, i + 1)
                .into_par_iter()
                .map(|t| -> Result<bool> {
                    let left = differential_dp(&p, &phi(&q, &t)?)?;
                    let key = BTreeMap::from([(t, Coeff::one())]);
                    let right = phi_cochain(&q, &hochschild_d(c, &key)?)?;
                    Ok(left == right)
                })
                .try_reduce(|| true, |a, b| Ok(a && b))?;
            let dim_hp = hp[i].dim_h;
            Ok(Weight1Row { degree: i, dim_hh: hh[i].dim_hh, dim_hp, dims_match: hh[i].dim_hh == dim_hp, intertwines })
        })
        .collect()
}

/// Elements of `A^{⊗k}` keyed by index tuples.
pub type TensorPower = BTreeMap<Vec<usize>, Coeff>;

fn letters(n: &Necklace) -> Vec<usize> {
    n.word().iter().map(|b| b.arrow.0 as usize).collect()
}

/// Cyclic symmetrization of a weight-k function necklace.
pub fn phi0(n: &Necklace) -> TensorPower {
    let w = letters(n);
    let mut out = TensorPower::new();
    for l in 0..w.len() {
        let rot: Vec<usize> = w[l..].iter().chain(&w[..l]).copied().collect();
        add_to(&mut out, rot, Coeff::one());
    }
    out
}

/// `[∂_i x_{j1} … x_{jk}] ↦ x_i* ⊗ x_{j1} ⊗ … ⊗ x_{jk}`, keyed `[i, j1, …, jk]`.
pub fn phi1(v: &PolyField) -> Result<TensorPower> {
    let mut out = TensorPower::new();
    for (n, c) in v.iter() {
        if n.stars() != 1 {
            return Err(Error::WrongStarDegree { expected: 1, found: n.stars() });
        }
        let w = n.word();
        let s = w.iter().position(|b| b.is_star()).expect("one star");
        // only plain beads precede the star, so this rotation has sign +
        let key: Vec<usize> = w[s..].iter().chain(&w[..s]).map(|b| b.arrow.0 as usize).collect();
        add_to(&mut out, key, c.clone());
    }
    Ok(out)
}

/// `m ↦ Σ_p x_p* ⊗ (x_p · m − m · x_p)` for the inner action on the two
/// outermost factors: `x_p` multiplies the last factor on the left and the
/// first factor on the right.
pub fn hh0_d(c: &StructureConstants, m: &TensorPower) -> TensorPower {
    let n = c.n;
    let mut out = TensorPower::new();
    for (t, v) in m {
        let k = t.len();
        for p in 0..n {
            for r in 0..n {
                let left = c.get(p, t[k - 1], r);
                if !left.is_zero() {
                    let mut key = vec![p];
                    key.extend_from_slice(&t[..k - 1]);
                    key.push(r);
                    add_to(&mut out, key, left * v);
                }
                let right = c.get(t[0], p, r);
                if !right.is_zero() {
                    let mut key = vec![p, r];
                    key.extend_from_slice(&t[1..]);
                    add_to(&mut out, key, -(right * v));
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CasimirCheck {
    pub weight: usize,
    pub checked: usize,
    pub square_commutes: bool,
    pub phi0_injective: bool,
}

/// Checks `d ∘ φ₀ = φ₁ ∘ d_P` on weight-`k` function necklaces (every
/// `stride`-th basis element when `samples` is smaller than the basis), and
/// that `φ₀` is injective on the whole weight-`k` chain group.
pub fn casimir_embedding_check(c: &StructureConstants, k: usize, samples: usize, caps: &Caps) -> Result<CasimirCheck> {
    if k == 0 {
        return Err(Error::DimensionMismatch("weight must be at least 1".into()));
    }
    let p = tensor_of(c);
    let q = p.quiver().clone();
    let basis = chain_basis(&q, 0, k, caps)?;
    let stride = if samples == 0 || samples >= basis.len() { 1 } else { basis.len().div_ceil(samples) };
    let picked: Vec<&Necklace> = basis.iter().step_by(stride).collect();
    let square_commutes = picked
        .par_iter()
        .map(|n| -> Result<bool> {
            let f = PolyField::from_necklace(&q, (*n).clone(), Coeff::one());
            Ok(hh0_d(c, &phi0(n)) == phi1(&differential_dp(&p, &f)?)?)
        })
        .try_reduce(|| true, |a, b| Ok(a && b))?;
    let nn = c.n;
    let cols: Vec<RatVec> = basis
        .iter()
        .map(|b| phi0(b).into_iter().map(|(t, v)| (tuple_index(nn, &t), v)).collect())
        .collect();
    let images = RatMatrix::from_columns(nn.pow(k as u32), cols)?;
    Ok(CasimirCheck {
        weight: k,
        checked: picked.len(),
        square_commutes,
        phi0_injective: column_span(&images).rank() == basis.len(),
    })
}

/// Sparse constants with entries in `-2..=2`, each nonzero with probability `density`.
pub fn random_sparse_constants<R: Rng>(n: usize, density: f64, rng: &mut R) -> StructureConstants {
    let mut c = StructureConstants::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rng.gen_bool(density) {
                    let v = rng.gen_range(-2..=2);
                    c.set(i, j, k, int(v));
                }
            }
        }
    }
    c
}

fn associative_pool(n: usize) -> Vec<StructureConstants> {
    let two: Vec<StructureConstants> = catalogue_2dim().into_iter().map(|e| e.constants).collect();
    match n {
        1 => vec![StructureConstants::from_entries(1, &[(0, 0, 0, 1)]), StructureConstants::zero(1)],
        2 => two,
        3 => {
            let one = associative_pool(1);
            let mut pool = Vec::new();
            for a in &one {
                for b in &two {
                    pool.push(a.direct_sum(b));
                }
            }
            // upper triangular 2x2 matrices on e11, e12, e22
            pool.push(StructureConstants::from_entries(
                3,
                &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
            ));
            // t, t^2, t^3 in C[t]/(t^4)
            pool.push(StructureConstants::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1), (1, 0, 2, 1)]));
            // 1, t, t^2 in C[t]/(t^3)
            pool.push(StructureConstants::from_entries(
                3,
                &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (0, 2, 2, 1), (2, 0, 2, 1), (1, 1, 2, 1)],
            ));
            pool
        }
        _ => vec![StructureConstants::zero(n)],
    }
}

/// An associative algebra from a fixed pool, in a random integer basis.
pub fn random_associative_constants<R: Rng>(n: usize, rng: &mut R) -> StructureConstants {
    let pool = associative_pool(n);
    let base = &pool[rng.gen_range(0..pool.len())];
    loop {
        let g: Vec<Vec<Coeff>> = (0..n).map(|_| (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()).collect();
        if let Some(c) = base.change_basis(&g) {
            return c;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialReport {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    /// How many of the sampled algebras were associative.
    pub associative: usize,
    pub equivalence_holds: bool,
    /// Constants where the two tests disagreed.
    pub counterexamples: Vec<AlgebraDoc>,
}

/// Compares associativity with the Poisson property on random constants.
/// Even trials draw a disguised associative algebra, odd ones sparse noise.
pub fn equivalence_trials(n: usize, trials: usize, seed: u64) -> Result<TrialReport> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let density = 2.0 / (n * n) as f64;
    let samples: Vec<StructureConstants> = (0..trials)
        .map(|t| {
            if t % 2 == 0 {
                random_associative_constants(n, &mut rng)
            } else {
                random_sparse_constants(n, density.min(1.0), &mut rng)
            }
        })
        .collect();
    let verdicts = samples
        .par_iter()
        .map(|c| -> Result<(bool, bool)> {
            Ok((is_associative(c).0, crate::bracket::is_poisson_tensor(&tensor_of(c))?.is_poisson))
        })
        .collect::<Result<Vec<_>>>()?;
    let counterexamples: Vec<AlgebraDoc> =
        samples.iter().zip(&verdicts).filter(|(_, (a, p))| a != p).map(|(c, _)| c.to_doc()).collect();
    Ok(TrialReport {
        dim: n,
        trials,
        seed,
        associative: verdicts.iter().filter(|v| v.0).count(),
        equivalence_holds: counterexamples.is_empty(),
        counterexamples,
    })
}
