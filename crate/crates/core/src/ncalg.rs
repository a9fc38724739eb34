//! Path algebras, their tensor squares, and double derivations.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeff::{Coeff, format_coeff};
use crate::error::{Error, Result};
use crate::quiver::{Bead, Quiver, VertexId};
use crate::syntax::parse_polynomial;

/// Adds `c` to `map[key]`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Coeff>, key: K, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn same_quiver(a: &Arc<Quiver>, b: &Arc<Quiver>) -> Result<()> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(Error::MixedQuivers)
    }
}

/// A path in the double quiver. Length-0 paths are the idempotents `e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    start: VertexId,
    beads: Vec<Bead>,
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.beads.len(), &self.beads, self.start).cmp(&(other.beads.len(), &other.beads, other.start))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Path {
    pub fn unit(v: VertexId) -> Path {
        Path { start: v, beads: Vec::new() }
    }

    pub fn new(q: &Quiver, beads: Vec<Bead>) -> Result<Path> {
        match q.path_ends(&beads)? {
            Some((start, _)) => Ok(Path { start, beads }),
            None => Err(Error::NotClosed("empty word needs a vertex".into())),
        }
    }

    pub(crate) fn from_parts(start: VertexId, beads: Vec<Bead>) -> Path {
        Path { start, beads }
    }

    pub fn beads(&self) -> &[Bead] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn tail(&self) -> VertexId {
        self.start
    }

    pub fn head(&self, q: &Quiver) -> VertexId {
        match self.beads.last() {
            Some(b) => q.head(*b).expect("path over q"),
            None => self.start,
        }
    }

    pub fn star_count(&self) -> usize {
        self.beads.iter().filter(|b| b.is_star()).count()
    }

    /// `self · other`, or `None` when the endpoints do not meet.
    pub fn concat(&self, q: &Quiver, other: &Path) -> Option<Path> {
        if self.head(q) != other.start {
            return None;
        }
        let mut beads = self.beads.clone();
        beads.extend_from_slice(&other.beads);
        Some(Path { start: self.start, beads })
    }

    pub fn slice(&self, q: &Quiver, from: usize, to: usize) -> Path {
        if from >= to {
            let v = if from == 0 {
                self.start
            } else {
                q.head(self.beads[from - 1]).expect("path over q")
            };
            return Path::unit(v);
        }
        Path {
            start: q.tail(self.beads[from]).expect("path over q"),
            beads: self.beads[from..to].to_vec(),
        }
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.beads.is_empty() {
            return if q.is_one_vertex() {
                "1".into()
            } else {
                format!("e_{}", q.vertex_name(self.start))
            };
        }
        render_word(q, &self.beads)
    }
}

/// `x^2*y*∂x`-style rendering of a word.
pub fn render_word(q: &Quiver, beads: &[Bead]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < beads.len() {
        let b = beads[i];
        let mut run = 1;
        while !b.is_star() && i + run < beads.len() && beads[i + run] == b {
            run += 1;
        }
        let name = q.arrow(b.arrow).expect("bead over q").name.clone();
        let token = if b.is_star() { format!("\u{2202}{name}") } else { name };
        parts.push(if run > 1 { format!("{token}^{run}") } else { token });
        i += run;
    }
    parts.join("*")
}

fn render_sum<'a>(items: impl Iterator<Item = (String, &'a Coeff)>, is_unit: impl Fn(&str) -> bool) -> String {
    let mut out = String::new();
    for (k, (body, c)) in items.enumerate() {
        let neg = c < &Coeff::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag.is_one() {
            out.push_str(&body);
        } else if is_unit(&body) {
            out.push_str(&format_coeff(&mag));
        } else {
            out.push_str(&format!("{}*{}", format_coeff(&mag), body));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    quiver: Arc<Quiver>,
    terms: BTreeMap<Path, Coeff>,
}

impl NCPoly {
    pub fn zero(q: &Arc<Quiver>) -> NCPoly {
        NCPoly { quiver: q.clone(), terms: BTreeMap::new() }
    }

    /// `Σ_v e_v`.
    pub fn one(q: &Arc<Quiver>) -> NCPoly {
        let mut p = NCPoly::zero(q);
        for v in q.vertices() {
            p.add_term(Path::unit(v), Coeff::one());
        }
        p
    }

    pub fn monomial(q: &Arc<Quiver>, path: Path, c: Coeff) -> NCPoly {
        let mut p = NCPoly::zero(q);
        p.add_term(path, c);
        p
    }

    pub fn from_word(q: &Arc<Quiver>, beads: Vec<Bead>) -> Result<NCPoly> {
        Ok(NCPoly::monomial(q, Path::new(q, beads)?, Coeff::one()))
    }

    /// Parses `x^2*y - 1/2*y*x` over a one-vertex quiver.
    pub fn parse(q: &Arc<Quiver>, src: &str) -> Result<NCPoly> {
        if !q.is_one_vertex() {
            return Err(Error::MultiVertex);
        }
        let mut p = NCPoly::zero(q);
        for (c, factors) in parse_polynomial(src)? {
            let mut beads = Vec::new();
            for (name, power) in factors {
                let b = Bead::plain(q.arrow_named(&name)?);
                beads.extend(std::iter::repeat_n(b, power as usize));
            }
            p.add_term(Path::from_parts(VertexId(0), beads), c);
        }
        Ok(p)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn terms(&self) -> &BTreeMap<Path, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, path: Path, c: Coeff) {
        accumulate(&mut self.terms, path, c);
    }

    pub fn add(&self, other: &NCPoly) -> Result<NCPoly> {
        same_quiver(&self.quiver, &other.quiver)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> NCPoly {
        let mut out = NCPoly::zero(&self.quiver);
        for (p, d) in &self.terms {
            out.add_term(p.clone(), d * c);
        }
        out
    }

    /// Concatenation product; noncomposable pairs contribute zero.
    pub fn mul(&self, other: &NCPoly) -> Result<NCPoly> {
        same_quiver(&self.quiver, &other.quiver)?;
        let mut out = NCPoly::zero(&self.quiver);
        for (p, c) in &self.terms {
            for (r, d) in &other.terms {
                if let Some(pr) = p.concat(&self.quiver, r) {
                    out.add_term(pr, c * d);
                }
            }
        }
        Ok(out)
    }

    /// Total length of every term, if they agree.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Path::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quiver;
        let unit = |s: &str| s == "1";
        let s = render_sum(self.terms.iter().map(|(p, c)| (p.render(q), c)), unit);
        f.write_str(&s)
    }
}

/// Elements of `A ⊗ A`, stored on pairs of paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    quiver: Arc<Quiver>,
    terms: BTreeMap<(Path, Path), Coeff>,
}

impl TensorElem {
    pub fn zero(q: &Arc<Quiver>) -> TensorElem {
        TensorElem { quiver: q.clone(), terms: BTreeMap::new() }
    }

    /// `a ⊗ b` for polynomials.
    pub fn pure(a: &NCPoly, b: &NCPoly) -> Result<TensorElem> {
        same_quiver(&a.quiver, &b.quiver)?;
        let mut t = TensorElem::zero(&a.quiver);
        for (p, c) in &a.terms {
            for (r, d) in &b.terms {
                t.add_term(p.clone(), r.clone(), c * d);
            }
        }
        Ok(t)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn terms(&self) -> &BTreeMap<(Path, Path), Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: Path, right: Path, c: Coeff) {
        accumulate(&mut self.terms, (left, right), c);
    }

    pub fn add(&self, other: &TensorElem) -> Result<TensorElem> {
        same_quiver(&self.quiver, &other.quiver)?;
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElem) -> Result<TensorElem> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> TensorElem {
        let mut out = TensorElem::zero(&self.quiver);
        for ((l, r), d) in &self.terms {
            out.add_term(l.clone(), r.clone(), d * c);
        }
        out
    }

    /// `a ⊗ b ↦ b ⊗ a`.
    pub fn flip(&self) -> TensorElem {
        let mut out = TensorElem::zero(&self.quiver);
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }

    /// Multiplication `a ⊗ b ↦ ab`.
    pub fn mu(&self) -> NCPoly {
        let mut out = NCPoly::zero(&self.quiver);
        for ((l, r), c) in &self.terms {
            if let Some(p) = l.concat(&self.quiver, r) {
                out.add_term(p, c.clone());
            }
        }
        out
    }

    fn map_pairs(&self, p: &NCPoly, f: impl Fn(&Quiver, &Path, &Path, &Path) -> Option<(Path, Path)>) -> Result<TensorElem> {
        same_quiver(&self.quiver, &p.quiver)?;
        let mut out = TensorElem::zero(&self.quiver);
        for ((l, r), c) in &self.terms {
            for (m, d) in &p.terms {
                if let Some((l2, r2)) = f(&self.quiver, l, r, m) {
                    out.add_term(l2, r2, c * d);
                }
            }
        }
        Ok(out)
    }

    /// Outer left action `p · (u ⊗ v) = pu ⊗ v`.
    pub fn outer_left(&self, p: &NCPoly) -> Result<TensorElem> {
        self.map_pairs(p, |q, l, r, m| Some((m.concat(q, l)?, r.clone())))
    }

    /// Outer right action `(u ⊗ v) · p = u ⊗ vp`.
    pub fn outer_right(&self, p: &NCPoly) -> Result<TensorElem> {
        self.map_pairs(p, |q, l, r, m| Some((l.clone(), r.concat(q, m)?)))
    }

    /// Inner left action `p * (u ⊗ v) = u ⊗ pv`.
    pub fn inner_left(&self, p: &NCPoly) -> Result<TensorElem> {
        self.map_pairs(p, |q, l, r, m| Some((l.clone(), m.concat(q, r)?)))
    }

    /// Inner right action `(u ⊗ v) * p = up ⊗ v`.
    pub fn inner_right(&self, p: &NCPoly) -> Result<TensorElem> {
        self.map_pairs(p, |q, l, r, m| Some((l.concat(q, m)?, r.clone())))
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quiver;
        let items = self
            .terms
            .iter()
            .map(|((l, r), c)| (format!("{} \u{2297} {}", l.render(q), r.render(q)), c));
        f.write_str(&render_sum(items, |_| false))
    }
}

fn require_plain(q: &Quiver, a: Bead) -> Result<()> {
    q.arrow(a.arrow)?;
    if a.is_star() {
        return Err(Error::StarredArrow(q.bead_name(a)));
    }
    Ok(())
}

fn require_base(f: &NCPoly) -> Result<()> {
    for p in f.terms.keys() {
        if let Some(b) = p.beads().iter().find(|b| b.is_star()) {
            return Err(Error::StarredArrow(f.quiver.bead_name(*b)));
        }
    }
    Ok(())
}

/// `∂f/∂a`: every occurrence of `a` in a path splits it into
/// `prefix ⊗ suffix`.
pub fn double_deriv(a: Bead, f: &NCPoly) -> Result<TensorElem> {
    let q = f.quiver.clone();
    require_plain(&q, a)?;
    require_base(f)?;
    let mut out = TensorElem::zero(&q);
    for (p, c) in &f.terms {
        for (i, b) in p.beads().iter().enumerate() {
            if *b == a {
                out.add_term(p.slice(&q, 0, i), p.slice(&q, i + 1, p.len()), c.clone());
            }
        }
    }
    Ok(out)
}

/// `μ ∘ (a ∂/∂a)(f)`, using the inner left action by `a`.
pub fn euler_apply(a: Bead, f: &NCPoly) -> Result<NCPoly> {
    let d = double_deriv(a, f)?;
    let a_poly = NCPoly::from_word(&f.quiver, vec![a])?;
    Ok(d.inner_left(&a_poly)?.mu())
}

/// `Σ_i (f_i' x_i ⊗ f_i'' − f_i' ⊗ x_i f_i'')` on a one-vertex quiver.
pub fn gauge_apply(f: &NCPoly) -> Result<TensorElem> {
    let q = f.quiver.clone();
    if !q.is_one_vertex() {
        return Err(Error::MultiVertex);
    }
    let mut out = TensorElem::zero(&q);
    for arrow in q.arrow_ids() {
        let x = Bead::plain(arrow);
        let xp = NCPoly::from_word(&q, vec![x])?;
        let d = double_deriv(x, f)?;
        out = out.add(&d.inner_right(&xp)?)?.sub(&d.inner_left(&xp)?)?;
    }
    Ok(out)
}
