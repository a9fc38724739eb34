//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are cleared of denominators on entry and kept primitive (content
//! divided out, leading entry positive), and elimination is fraction-free:
//! `v ← (a/g)·v − (b/g)·p` with `g = gcd(a, b)`. Pivots are the leading
//! entries of vectors in insertion order, which keeps every computation
//! deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// Sparse rational vector: index → nonzero entry.
pub type RatVec = BTreeMap<usize, Coeff>;
type IntVec = BTreeMap<usize, BigInt>;

/// Column-major sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    nrows: usize,
    cols: Vec<RatVec>,
}

impl RatMatrix {
    pub fn new(nrows: usize, ncols: usize) -> RatMatrix {
        RatMatrix { nrows, cols: vec![RatVec::new(); ncols] }
    }

    pub fn from_columns(nrows: usize, cols: Vec<RatVec>) -> Result<RatMatrix> {
        for c in &cols {
            if let Some((&r, _)) = c.last_key_value() {
                if r >= nrows {
                    return Err(Error::DimensionMismatch(format!("row {r} in a matrix with {nrows} rows")));
                }
            }
            if c.values().any(Zero::is_zero) {
                return Err(Error::DimensionMismatch("stored zero entry".into()));
            }
        }
        Ok(RatMatrix { nrows, cols })
    }

    pub fn from_dense(rows: &[Vec<Coeff>]) -> Result<RatMatrix> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = RatMatrix::new(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for (j, c) in row.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &RatVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[RatVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Coeff {
        self.cols[j].get(&i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coeff) {
        assert!(i < self.nrows && j < self.cols.len(), "index out of range");
        if c.is_zero() {
            self.cols[j].remove(&i);
        } else {
            self.cols[j].insert(i, c);
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BTreeMap::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<Coeff>> {
        let mut rows = vec![vec![Coeff::zero(); self.ncols()]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, c) in col {
                rows[i][j] = c.clone();
            }
        }
        rows
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::new(self.ncols(), self.nrows);
        for (j, col) in self.cols.iter().enumerate() {
            for (&i, c) in col {
                t.cols[i].insert(j, c.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &RatVec) -> Result<RatVec> {
        let mut out = RatVec::new();
        for (&k, c) in v {
            let col = self
                .cols
                .get(k)
                .ok_or_else(|| Error::DimensionMismatch(format!("index {k} beyond {} columns", self.ncols())))?;
            for (&i, a) in col {
                crate::ncalg::accumulate(&mut out, i, a * c);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.ncols() != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let cols = other.cols.iter().map(|c| self.mul_vec(c)).collect::<Result<_>>()?;
        Ok(RatMatrix { nrows: self.nrows, cols })
    }
}

fn primitive(v: &mut IntVec) {
    let mut g = BigInt::zero();
    for c in v.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    let flip = v.values().next().is_some_and(Signed::is_negative);
    if g.is_zero() {
        return;
    }
    if flip {
        g = -g;
    }
    if !g.is_one() {
        for c in v.values_mut() {
            *c = &*c / &g;
        }
    }
}

fn to_int(v: &RatVec) -> IntVec {
    let mut l = BigInt::one();
    for c in v.values() {
        l = l.lcm(c.denom());
    }
    let mut out: IntVec = v
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&i, c)| (i, c.numer() * (&l / c.denom())))
        .collect();
    primitive(&mut out);
    out
}

fn to_rat(v: &IntVec) -> RatVec {
    v.iter().map(|(&i, c)| (i, Coeff::from_integer(c.clone()))).collect()
}

/// Removes `v[key]` using `pivot`, whose leading index is `key`.
fn eliminate(v: &mut IntVec, key: usize, pivot: &IntVec) {
    let a = &pivot[&key];
    let b = v[&key].clone();
    let g = a.gcd(&b);
    let (sa, sb) = (a / &g, &b / &g);
    if !sa.is_one() {
        for c in v.values_mut() {
            *c *= &sa;
        }
    }
    for (&i, p) in pivot {
        let term = p * &sb;
        let entry = v.entry(i).or_default();
        *entry -= term;
        if entry.is_zero() {
            v.remove(&i);
        }
    }
    primitive(v);
}

/// An echelon basis of a growing subspace.
#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    pivots: BTreeMap<usize, IntVec>,
}

impl SpanBasis {
    pub fn new() -> SpanBasis {
        SpanBasis::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce_int(&self, mut v: IntVec) -> IntVec {
        let mut cursor = 0;
        loop {
            let Some(key) = v.range(cursor..).map(|(&k, _)| k).find(|k| self.pivots.contains_key(k)) else {
                return v;
            };
            eliminate(&mut v, key, &self.pivots[&key]);
            cursor = key + 1;
        }
    }

    /// A nonzero multiple of `v` minus an element of the span, with no
    /// entries on pivot indices. Zero exactly when `v` lies in the span.
    pub fn reduce(&self, v: &RatVec) -> RatVec {
        to_rat(&self.reduce_int(to_int(v)))
    }

    pub fn contains(&self, v: &RatVec) -> bool {
        self.reduce_int(to_int(v)).is_empty()
    }

    /// Adds `v`; returns its reduced form when it enlarged the span.
    pub fn insert(&mut self, v: &RatVec) -> Option<RatVec> {
        let r = self.reduce_int(to_int(v));
        let (&lead, _) = r.first_key_value()?;
        let out = to_rat(&r);
        self.pivots.insert(lead, r);
        Some(out)
    }

    fn insert_int(&mut self, v: IntVec, limit: usize) -> Option<IntVec> {
        let r = self.reduce_int(v);
        match r.first_key_value() {
            Some((&lead, _)) if lead < limit => {
                self.pivots.insert(lead, r);
                None
            }
            _ => Some(r),
        }
    }
}

pub fn column_span(m: &RatMatrix) -> SpanBasis {
    let mut s = SpanBasis::new();
    for c in &m.cols {
        s.insert(c);
    }
    s
}

pub fn rank(m: &RatMatrix) -> usize {
    column_span(m).rank()
}

/// A basis of `{v : m v = 0}`, with integer entries.
pub fn nullspace_basis(m: &RatMatrix) -> Vec<RatVec> {
    let n = m.nrows;
    let mut span = SpanBasis::new();
    let mut kernel = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        let mut l = BigInt::one();
        for c in col.values() {
            l = l.lcm(c.denom());
        }
        let mut tagged: IntVec = col.iter().map(|(&i, c)| (i, c.numer() * (&l / c.denom()))).collect();
        tagged.insert(n + j, l);
        primitive(&mut tagged);
        if let Some(rest) = span.insert_int(tagged, n) {
            let mut relation: IntVec = rest.into_iter().map(|(i, c)| (i - n, c)).collect();
            primitive(&mut relation);
            kernel.push(to_rat(&relation));
        }
    }
    kernel
}

pub fn in_span(v: &RatVec, m: &RatMatrix) -> Result<bool> {
    if let Some((&i, _)) = v.last_key_value() {
        if i >= m.nrows {
            return Err(Error::DimensionMismatch(format!("vector index {i} beyond {} rows", m.nrows)));
        }
    }
    Ok(column_span(m).contains(v))
}
