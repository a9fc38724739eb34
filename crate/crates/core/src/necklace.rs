//! Cyclic words with Koszul signs, and linear combinations of them.
//!
//! Rotating `[u1..ui | ui+1..un]` to `[ui+1..un u1..ui]` costs the sign
//! `(-1)^{|u1..ui| |ui+1..un|}` where starred beads have degree 1. The
//! canonical representative of a class is its lexicographically least
//! rotation; a word that some rotation maps to minus itself is zero.

use std::collections::BTreeMap;
use std::collections::btree_map;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, format_coeff, parse_coeff};
use crate::error::{Error, Result};
use crate::ncalg::{accumulate, render_word, same_quiver};
use crate::quiver::{Bead, Quiver, QuiverDoc, VertexId};

/// A canonical cyclic word. Length-0 necklaces remember their vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Necklace {
    word: Vec<Bead>,
    vertex: Option<VertexId>,
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word, self.vertex).cmp(&(other.word.len(), &other.word, other.vertex))
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of reducing a word: `word = sign · necklace`, or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduced {
    Zero,
    Signed(Necklace, i8),
}

fn star_prefix_counts(word: &[Bead]) -> Vec<usize> {
    let mut counts = Vec::with_capacity(word.len() + 1);
    let mut c = 0;
    counts.push(0);
    for b in word {
        c += b.degree();
        counts.push(c);
    }
    counts
}

/// Sign of `w ≡ sign · rot_r(w)` where `rot_r` moves the first `r` beads to the end.
fn rotation_sign(prefix: &[usize], r: usize) -> i8 {
    let total = prefix[prefix.len() - 1];
    let d = prefix[r];
    if (d * (total - d)) % 2 == 1 { -1 } else { 1 }
}

fn compare_rotation(word: &[Bead], r: usize, s: usize) -> std::cmp::Ordering {
    let n = word.len();
    for i in 0..n {
        let ord = word[(r + i) % n].cmp(&word[(s + i) % n]);
        if ord.is_ne() {
            return ord;
        }
    }
    std::cmp::Ordering::Equal
}

fn smallest_period(word: &[Bead]) -> usize {
    let n = word.len();
    (1..n)
        .filter(|p| n.is_multiple_of(*p))
        .find(|&p| (0..n).all(|i| word[i] == word[(i + p) % n]))
        .unwrap_or(n)
}

/// Canonical form of a nonempty closed word; no quiver checks.
pub(crate) fn reduce_word(word: &[Bead]) -> Option<(Vec<Bead>, i8)> {
    let n = word.len();
    debug_assert!(n > 0);
    let prefix = star_prefix_counts(word);
    let p = smallest_period(word);
    if p < n && rotation_sign(&prefix, p) < 0 {
        return None;
    }
    let mut best = 0;
    for r in 1..p {
        if compare_rotation(word, r, best).is_lt() {
            best = r;
        }
    }
    let mut canon = word[best..].to_vec();
    canon.extend_from_slice(&word[..best]);
    Some((canon, rotation_sign(&prefix, best)))
}

/// Whether `word` is already canonical and nonzero.
pub(crate) fn is_canonical_word(word: &[Bead]) -> bool {
    let n = word.len();
    let mut periodic = None;
    for r in 1..n {
        match compare_rotation(word, r, 0) {
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal if periodic.is_none() => periodic = Some(r),
            _ => {}
        }
    }
    match periodic {
        Some(p) => rotation_sign(&star_prefix_counts(word), p) > 0,
        None => true,
    }
}

impl Necklace {
    pub fn unit(v: VertexId) -> Necklace {
        Necklace { word: Vec::new(), vertex: Some(v) }
    }

    pub(crate) fn from_canonical(word: Vec<Bead>) -> Necklace {
        Necklace { word, vertex: None }
    }

    /// Reduces a closed word. `vertex` is used only for the empty word.
    pub fn canonicalize(q: &Quiver, word: &[Bead], vertex: Option<VertexId>) -> Result<Reduced> {
        match q.path_ends(word)? {
            None => {
                let v = vertex.ok_or_else(|| Error::NotClosed("empty word needs a vertex".into()))?;
                if v.0 as usize >= q.vertex_count() {
                    return Err(Error::UnknownVertex(format!("#{}", v.0)));
                }
                Ok(Reduced::Signed(Necklace::unit(v), 1))
            }
            Some((s, t)) if s != t => Err(Error::NotClosed(format!(
                "path runs from `{}` to `{}`",
                q.vertex_name(s),
                q.vertex_name(t)
            ))),
            Some(_) => Ok(match reduce_word(word) {
                None => Reduced::Zero,
                Some((w, sign)) => Reduced::Signed(Necklace::from_canonical(w), sign),
            }),
        }
    }

    pub fn word(&self) -> &[Bead] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Vertex of a length-0 necklace.
    pub fn unit_vertex(&self) -> Option<VertexId> {
        self.vertex
    }

    /// Number of starred beads.
    pub fn stars(&self) -> usize {
        self.word.iter().filter(|b| b.is_star()).count()
    }

    /// Number of plain beads.
    pub fn weight(&self) -> usize {
        self.word.len() - self.stars()
    }

    pub fn render(&self, q: &Quiver) -> String {
        match self.vertex {
            Some(_) if q.is_one_vertex() => "1".to_string(),
            Some(v) => format!("e_{}", q.vertex_name(v)),
            None => render_word(q, &self.word),
        }
    }
}

/// Every canonical nonzero necklace with `k` stars and weight `w`, sorted.
///
/// Stops with [`Error::CapExceeded`] once more than `max_count` are found.
pub fn enumerate_basis(q: &Quiver, k: usize, w: usize, max_count: usize) -> Result<Vec<Necklace>> {
    let n = k + w;
    if n == 0 {
        return Ok(q.vertices().map(Necklace::unit).collect());
    }
    let beads = q.beads();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut search = Search { q, beads: &beads, n, k, max_count, out: &mut out };
    for &first in &beads {
        let stars = first.degree();
        if stars > k || 1 - stars > w {
            continue;
        }
        word.push(first);
        search.extend(&mut word, stars)?;
        word.pop();
    }
    Ok(out)
}

struct Search<'a> {
    q: &'a Quiver,
    beads: &'a [Bead],
    n: usize,
    k: usize,
    max_count: usize,
    out: &'a mut Vec<Necklace>,
}

impl Search<'_> {
    fn extend(&mut self, word: &mut Vec<Bead>, stars: usize) -> Result<()> {
        let last = *word.last().expect("nonempty");
        if word.len() == self.n {
            let closes = self.q.head(last)? == self.q.tail(word[0])?;
            if closes && is_canonical_word(word) {
                if self.out.len() == self.max_count {
                    return Err(Error::CapExceeded(format!(
                        "more than {} necklaces of length {}",
                        self.max_count, self.n
                    )));
                }
                self.out.push(Necklace::from_canonical(word.clone()));
            }
            return Ok(());
        }
        let remaining = self.n - word.len();
        let plains = word.len() - stars;
        let first = word[0];
        let head = self.q.head(last)?;
        for &b in self.beads {
            // the least rotation starts with a least bead
            if b < first || self.q.tail(b)? != head {
                continue;
            }
            let s = stars + b.degree();
            let p = plains + 1 - b.degree();
            if s > self.k || p > self.n - self.k || remaining - 1 < (self.k - s) {
                continue;
            }
            word.push(b);
            self.extend(word, s)?;
            word.pop();
        }
        Ok(())
    }
}

/// A finite linear combination of necklaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyField {
    quiver: Arc<Quiver>,
    terms: BTreeMap<Necklace, Coeff>,
}

impl PolyField {
    pub fn zero(q: &Arc<Quiver>) -> PolyField {
        PolyField { quiver: q.clone(), terms: BTreeMap::new() }
    }

    pub fn from_necklace(q: &Arc<Quiver>, n: Necklace, c: Coeff) -> PolyField {
        let mut f = PolyField::zero(q);
        f.add_necklace(n, c);
        f
    }

    /// The class of a closed word, with its rotation sign applied.
    pub fn from_word(q: &Arc<Quiver>, word: &[Bead]) -> Result<PolyField> {
        let mut f = PolyField::zero(q);
        f.add_word(word, Coeff::one())?;
        Ok(f)
    }

    /// Parses bead names, e.g. `["x", "*x", "x", "*y"]`.
    pub fn from_names(q: &Arc<Quiver>, names: &[&str]) -> Result<PolyField> {
        let word = names.iter().map(|s| q.parse_bead(s)).collect::<Result<Vec<_>>>()?;
        PolyField::from_word(q, &word)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn terms(&self) -> &BTreeMap<Necklace, Coeff> {
        &self.terms
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Necklace, Coeff> {
        self.terms.iter()
    }

    pub fn coeff(&self, n: &Necklace) -> Coeff {
        self.terms.get(n).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_necklace(&mut self, n: Necklace, c: Coeff) {
        accumulate(&mut self.terms, n, c);
    }

    pub fn add_word(&mut self, word: &[Bead], c: Coeff) -> Result<()> {
        self.add_word_at(word, None, c)
    }

    pub fn add_word_at(&mut self, word: &[Bead], vertex: Option<VertexId>, c: Coeff) -> Result<()> {
        if let Reduced::Signed(n, sign) = Necklace::canonicalize(&self.quiver, word, vertex)? {
            self.add_necklace(n, if sign < 0 { -c } else { c });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyField) -> Result<PolyField> {
        same_quiver(&self.quiver, &other.quiver)?;
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.add_necklace(n.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyField) -> Result<PolyField> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> PolyField {
        let mut out = PolyField::zero(&self.quiver);
        for (n, d) in &self.terms {
            out.add_necklace(n.clone(), d * c);
        }
        out
    }

    /// Star-degree shared by all terms; `None` for zero or mixed fields.
    pub fn homogeneous_stars(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Necklace::stars);
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    /// Weight shared by all terms; `None` for zero or mixed fields.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Necklace::weight);
        let first = it.next()?;
        it.all(|s| s == first).then_some(first)
    }

    pub fn to_doc(&self) -> PolyFieldDoc {
        let q = &self.quiver;
        PolyFieldDoc {
            quiver: Some(q.to_doc()),
            terms: self
                .terms
                .iter()
                .map(|(n, c)| TermDoc {
                    coeff: format_coeff(c),
                    word: n.word.iter().map(|b| q.bead_name(*b)).collect(),
                    vertex: match n.vertex {
                        Some(v) if !q.is_one_vertex() => Some(q.vertex_name(v).to_string()),
                        _ => None,
                    },
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &PolyFieldDoc) -> Result<PolyField> {
        let quiver = match &doc.quiver {
            Some(qd) => Quiver::from_doc(qd)?,
            None => {
                let mut loops: Vec<&str> = doc
                    .terms
                    .iter()
                    .flat_map(|t| t.word.iter())
                    .map(|s| s.strip_prefix(crate::quiver::STAR_PREFIX).unwrap_or(s))
                    .collect();
                loops.sort_unstable();
                loops.dedup();
                Quiver::one_vertex(&loops)?
            }
        };
        let q = Arc::new(quiver);
        let mut f = PolyField::zero(&q);
        for t in &doc.terms {
            let word = t.word.iter().map(|s| q.parse_bead(s)).collect::<Result<Vec<_>>>()?;
            let vertex = match &t.vertex {
                Some(name) => Some(q.vertex_named(name)?),
                None if q.is_one_vertex() => Some(VertexId(0)),
                None => None,
            };
            f.add_word_at(&word, vertex, parse_coeff(&t.coeff)?)?;
        }
        Ok(f)
    }
}

impl fmt::Display for PolyField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (n, c)) in self.terms.iter().enumerate() {
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            let sep = match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = format!("[{}]", n.render(&self.quiver));
            if mag.is_one() {
                write!(f, "{sep}{body}")?;
            } else {
                write!(f, "{sep}{}{body}", format_coeff(&mag))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: String,
    pub word: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<String>,
}

/// Serialized polyvector field. Without `quiver`, the words are read over
/// one vertex whose loops are the names used, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyFieldDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverDoc>,
    pub terms: Vec<TermDoc>,
}
