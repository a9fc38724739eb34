//! Cohomology of `d_P` on the bigraded necklace complex.
//!
//! Necklaces with `k` stars and weight `w` span the chain group `C(k, w)`.
//! For `P` homogeneous of weight `m`, `d_P` maps `C(k, w)` to
//! `C(k + 1, w + m − 1)`, so each bidegree is a finite-dimensional problem.

use std::collections::{BTreeSet, HashMap};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{TensorP, differential_dp};
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, RatVec, SpanBasis, column_span, nullspace_basis};
use crate::necklace::{Necklace, PolyField, enumerate_basis};
use crate::quiver::Quiver;

/// Resource guards for anything that enumerates necklaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub max_stars: usize,
    pub max_weight: usize,
    pub max_chain_dim: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps { max_stars: 3, max_weight: 8, max_chain_dim: 20_000 }
    }
}

impl Caps {
    pub fn check(&self, k: usize, w: usize) -> Result<()> {
        if k > self.max_stars || w > self.max_weight {
            return Err(Error::CapExceeded(format!(
                "bidegree ({k}, {w}) beyond stars <= {}, weight <= {}",
                self.max_stars, self.max_weight
            )));
        }
        Ok(())
    }
}

pub fn chain_basis(q: &Quiver, k: usize, w: usize, caps: &Caps) -> Result<Vec<Necklace>> {
    caps.check(k, w)?;
    enumerate_basis(q, k, w, caps.max_chain_dim)
}

pub fn chain_dim(q: &Quiver, k: usize, w: usize, caps: &Caps) -> Result<usize> {
    Ok(chain_basis(q, k, w, caps)?.len())
}

/// Weight shift `m − 1` of `d_P`. The zero tensor has no weight; any
/// shift describes its (zero) differential, and 0 is used.
fn weight_shift(p: &TensorP) -> Result<isize> {
    Ok(p.homogeneous_weight()?.map_or(0, |m| m as isize - 1))
}

fn shifted(w: usize, by: isize) -> Option<usize> {
    usize::try_from(w as isize + by).ok()
}

fn matrix_between(p: &TensorP, source: &[Necklace], target: &[Necklace]) -> Result<RatMatrix> {
    let q = p.quiver();
    let index: HashMap<&Necklace, usize> = target.iter().enumerate().map(|(i, n)| (n, i)).collect();
    let cols = source
        .par_iter()
        .map(|b| {
            let image = differential_dp(p, &PolyField::from_necklace(q, b.clone(), crate::coeff::one()))?;
            let mut col = RatVec::new();
            for (n, c) in image.iter() {
                let i = index.get(n).ok_or_else(|| {
                    Error::DimensionMismatch(format!("image necklace {} outside the target basis", n.render(q)))
                })?;
                col.insert(*i, c.clone());
            }
            Ok(col)
        })
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_columns(target.len(), cols)
}

/// Matrix of `d_P : C(k, w) → C(k + 1, w + m − 1)` in the sorted necklace bases.
pub fn boundary_matrix(p: &TensorP, k: usize, w: usize, caps: &Caps) -> Result<RatMatrix> {
    let q = p.quiver();
    let source = chain_basis(q, k, w, caps)?;
    let target = match shifted(w, weight_shift(p)?) {
        Some(tw) => chain_basis(q, k + 1, tw, caps)?,
        None => Vec::new(),
    };
    matrix_between(p, &source, &target)
}

/// Whether `d_P ∘ d_P` vanishes as a product of matrices starting at `(k, w)`.
pub fn composite_vanishes(p: &TensorP, k: usize, w: usize, caps: &Caps) -> Result<bool> {
    let first = boundary_matrix(p, k, w, caps)?;
    let Some(mid) = shifted(w, weight_shift(p)?) else {
        return Ok(true);
    };
    let second = boundary_matrix(p, k + 1, mid, caps)?;
    Ok(second.mul(&first)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BidegreeReport {
    pub k: usize,
    pub w: usize,
    pub dim_chain: usize,
    pub dim_kernel: usize,
    pub dim_image_in: usize,
    pub dim_h: usize,
    /// Cocycles whose classes form a basis of the cohomology, when requested.
    pub representatives: Vec<PolyField>,
    /// Set for star-degrees where no reference values exist to compare with.
    pub unverified: bool,
}

fn to_field(q: &std::sync::Arc<Quiver>, basis: &[Necklace], v: &RatVec) -> PolyField {
    let mut f = PolyField::zero(q);
    for (&i, c) in v {
        f.add_necklace(basis[i].clone(), c.clone());
    }
    f
}

/// Cohomology dimensions (and optionally representatives) on a grid of bidegrees.
pub fn cohomology_summary(
    p: &TensorP,
    ks: RangeInclusive<usize>,
    ws: RangeInclusive<usize>,
    caps: &Caps,
    with_representatives: bool,
) -> Result<Vec<BidegreeReport>> {
    let q = p.quiver();
    let shift = weight_shift(p)?;
    let grid: Vec<(usize, usize)> = ks.flat_map(|k| ws.clone().map(move |w| (k, w))).collect();

    let mut needed = BTreeSet::new();
    for &(k, w) in &grid {
        needed.insert((k, w));
        if let Some(tw) = shifted(w, shift) {
            needed.insert((k + 1, tw));
        }
        if let (Some(sk), Some(sw)) = (k.checked_sub(1), shifted(w, -shift)) {
            needed.insert((sk, sw));
        }
    }
    let bases: HashMap<(usize, usize), Vec<Necklace>> = needed
        .into_par_iter()
        .map(|(k, w)| Ok(((k, w), chain_basis(q, k, w, caps)?)))
        .collect::<Result<_>>()?;
    let empty = Vec::new();
    let basis = |k: usize, w: Option<usize>| w.and_then(|w| bases.get(&(k, w))).unwrap_or(&empty);

    grid.par_iter()
        .map(|&(k, w)| {
            let chain = basis(k, Some(w));
            let outgoing = matrix_between(p, chain, basis(k + 1, shifted(w, shift)))?;
            let incoming_span: SpanBasis = match k.checked_sub(1) {
                Some(sk) => column_span(&matrix_between(p, basis(sk, shifted(w, -shift)), chain)?),
                None => SpanBasis::new(),
            };
            let kernel = nullspace_basis(&outgoing);
            let dim_image_in = incoming_span.rank();
            let mut representatives = Vec::new();
            if with_representatives {
                let mut span = incoming_span;
                for v in &kernel {
                    if let Some(r) = span.insert(v) {
                        representatives.push(to_field(q, chain, &r));
                    }
                }
            }
            Ok(BidegreeReport {
                k,
                w,
                dim_chain: chain.len(),
                dim_kernel: kernel.len(),
                dim_image_in,
                dim_h: kernel.len() - dim_image_in,
                representatives,
                unverified: k >= 2,
            })
        })
        .collect()
}

/// Kernel of `d_P` on `C(k, w)` as fields: the cocycles `Z(k, w)`.
pub fn cocycles(p: &TensorP, k: usize, w: usize, caps: &Caps) -> Result<Vec<PolyField>> {
    let q = p.quiver();
    let chain = chain_basis(q, k, w, caps)?;
    let target = match shifted(w, weight_shift(p)?) {
        Some(tw) => chain_basis(q, k + 1, tw, caps)?,
        None => Vec::new(),
    };
    let m = matrix_between(p, &chain, &target)?;
    Ok(nullspace_basis(&m).iter().map(|v| to_field(q, &chain, v)).collect())
}
