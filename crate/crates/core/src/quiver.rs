//! Finite quivers and the beads of their doubles.
//!
//! Starred arrows are never stored as separate arrows of the base quiver: a
//! [`Bead`] pairs a base arrow with a [`BeadKind`], and the star reverses the
//! endpoints. Paths are read left to right, so `b1 b2` is composable when
//! `head(b1) == tail(b2)`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prefix marking a starred arrow in names and serialized words.
pub const STAR_PREFIX: &str = "*";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub tail: VertexId,
    pub head: VertexId,
}

/// `Plain < Star`, so the derived order on [`Bead`] lists every plain arrow
/// (in declaration order) before every starred one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BeadKind {
    Plain,
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bead {
    pub kind: BeadKind,
    pub arrow: ArrowId,
}

impl Bead {
    pub fn plain(arrow: ArrowId) -> Bead {
        Bead { kind: BeadKind::Plain, arrow }
    }

    pub fn star(arrow: ArrowId) -> Bead {
        Bead { kind: BeadKind::Star, arrow }
    }

    pub fn is_star(self) -> bool {
        self.kind == BeadKind::Star
    }

    /// Koszul degree: 0 for plain, 1 for starred.
    pub fn degree(self) -> usize {
        self.is_star() as usize
    }

    /// The same arrow with the other kind.
    pub fn dual(self) -> Bead {
        Bead {
            kind: match self.kind {
                BeadKind::Plain => BeadKind::Star,
                BeadKind::Star => BeadKind::Plain,
            },
            arrow: self.arrow,
        }
    }
}

/// Serialized quiver description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Every violation found in a description, empty when it is well formed.
pub fn validate(doc: &QuiverDoc) -> Vec<String> {
    let mut problems = Vec::new();
    let mut seen = HashSet::new();
    for v in &doc.vertices {
        if v.is_empty() {
            problems.push("empty vertex name".to_string());
        }
        if !seen.insert(v.as_str()) {
            problems.push(format!("duplicate vertex `{v}`"));
        }
    }
    let mut names = HashSet::new();
    for a in &doc.arrows {
        if a.name.is_empty() {
            problems.push("empty arrow name".to_string());
        }
        if a.name.starts_with(STAR_PREFIX) {
            problems.push(format!("arrow `{}` uses the reserved prefix `{STAR_PREFIX}`", a.name));
        }
        if !names.insert(a.name.as_str()) {
            problems.push(format!("duplicate arrow `{}`", a.name));
        }
        for end in [&a.tail, &a.head] {
            if !seen.contains(end.as_str()) {
                problems.push(format!("arrow `{}` uses undeclared vertex `{end}`", a.name));
            }
        }
    }
    problems
}

impl Quiver {
    pub fn from_doc(doc: &QuiverDoc) -> Result<Quiver> {
        let problems = validate(doc);
        if !problems.is_empty() {
            return Err(Error::InvalidQuiver(problems));
        }
        let index = |name: &str| {
            VertexId(doc.vertices.iter().position(|v| v == name).expect("validated") as u32)
        };
        let arrows = doc
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                tail: index(&a.tail),
                head: index(&a.head),
            })
            .collect();
        Ok(Quiver {
            vertices: doc.vertices.clone(),
            arrows,
        })
    }

    /// `arrows` are `(name, tail, head)` triples.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        Quiver::from_doc(&QuiverDoc {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: arrows
                .iter()
                .map(|(n, t, h)| ArrowDoc {
                    name: n.to_string(),
                    tail: t.to_string(),
                    head: h.to_string(),
                })
                .collect(),
        })
    }

    /// One vertex `v` carrying the given loops: the free algebra on them.
    pub fn one_vertex(loops: &[&str]) -> Result<Quiver> {
        let arrows: Vec<_> = loops.iter().map(|n| (*n, "v", "v")).collect();
        Quiver::new(&["v"], &arrows)
    }

    /// The free algebra on `x, y`.
    pub fn plane() -> Quiver {
        Quiver::one_vertex(&["x", "y"]).expect("static quiver")
    }

    pub fn to_doc(&self) -> QuiverDoc {
        QuiverDoc {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    name: a.name.clone(),
                    tail: self.vertex_name(a.tail).to_string(),
                    head: self.vertex_name(a.head).to_string(),
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_one_vertex(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len() as u32).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len() as u32).map(ArrowId)
    }

    pub fn arrow(&self, a: ArrowId) -> Result<&Arrow> {
        self.arrows
            .get(a.0 as usize)
            .ok_or_else(|| Error::UnknownArrow(format!("#{}", a.0)))
    }

    pub fn arrow_named(&self, name: &str) -> Result<ArrowId> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .map(|i| ArrowId(i as u32))
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertex_named(&self, name: &str) -> Result<VertexId> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .map(|i| VertexId(i as u32))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0 as usize]
    }

    /// All beads of the double quiver in their total order.
    pub fn beads(&self) -> Vec<Bead> {
        let plain = self.arrow_ids().map(Bead::plain);
        let star = self.arrow_ids().map(Bead::star);
        plain.chain(star).collect()
    }

    pub fn tail(&self, b: Bead) -> Result<VertexId> {
        let a = self.arrow(b.arrow)?;
        Ok(if b.is_star() { a.head } else { a.tail })
    }

    pub fn head(&self, b: Bead) -> Result<VertexId> {
        let a = self.arrow(b.arrow)?;
        Ok(if b.is_star() { a.tail } else { a.head })
    }

    pub fn composable(&self, b1: Bead, b2: Bead) -> Result<bool> {
        Ok(self.head(b1)? == self.tail(b2)?)
    }

    /// `x` or `*x`.
    pub fn bead_name(&self, b: Bead) -> String {
        let name = &self.arrows[b.arrow.0 as usize].name;
        if b.is_star() {
            format!("{STAR_PREFIX}{name}")
        } else {
            name.clone()
        }
    }

    pub fn parse_bead(&self, s: &str) -> Result<Bead> {
        match s.strip_prefix(STAR_PREFIX) {
            Some(base) => Ok(Bead::star(self.arrow_named(base)?)),
            None => Ok(Bead::plain(self.arrow_named(s)?)),
        }
    }

    /// Checks that `word` is a composable path and returns its endpoints.
    pub fn path_ends(&self, word: &[Bead]) -> Result<Option<(VertexId, VertexId)>> {
        let Some(first) = word.first() else {
            return Ok(None);
        };
        for pair in word.windows(2) {
            if !self.composable(pair[0], pair[1])? {
                return Err(Error::NotClosed(format!(
                    "`{}` cannot be followed by `{}`",
                    self.bead_name(pair[0]),
                    self.bead_name(pair[1])
                )));
            }
        }
        let last = *word.last().expect("nonempty");
        Ok(Some((self.tail(*first)?, self.head(last)?)))
    }

    /// The double as an ordinary quiver, starred arrows named `*a`.
    ///
    /// Fails on a quiver that already contains starred names, since the
    /// star of a star is not a name this crate hands out.
    pub fn double_quiver(&self) -> Result<Quiver> {
        if let Some(a) = self.arrows.iter().find(|a| a.name.starts_with(STAR_PREFIX)) {
            return Err(Error::ReservedName(a.name.clone()));
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(self.arrows.iter().map(|a| Arrow {
            name: format!("{STAR_PREFIX}{}", a.name),
            tail: a.head,
            head: a.tail,
        }));
        Ok(Quiver {
            vertices: self.vertices.clone(),
            arrows,
        })
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {{{}}}", self.vertices.join(", "))?;
        for a in &self.arrows {
            write!(f, ", {}: {} -> {}", a.name, self.vertex_name(a.tail), self.vertex_name(a.head))?;
        }
        Ok(())
    }
}
