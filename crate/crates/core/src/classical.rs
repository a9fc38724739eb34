//! Poisson cohomology of the polynomial plane and the trace from necklaces.
//!
//! Polyvector fields on `ℂ[x, y]` are stored by grade: a function, a vector
//! field `f∂x + g∂y`, and a bivector `h ∂x∧∂y`. The bivector `π = ψ ∂x∧∂y`
//! is Poisson for every `ψ`, and the cohomology of `[π, -]` splits by
//! polynomial degree when `ψ` is homogeneous.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, format_coeff, int};
use crate::cohomology::Caps;
use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, RatVec, SpanBasis, rank};
use crate::ncalg::accumulate;
use crate::necklace::PolyField;
use crate::syntax::parse_polynomial;

/// A polynomial in commuting `x, y`, keyed by exponents `(a, b)` of `x^a y^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommPoly {
    terms: BTreeMap<(u32, u32), Coeff>,
}

impl CommPoly {
    pub fn zero() -> CommPoly {
        CommPoly::default()
    }

    pub fn constant(c: Coeff) -> CommPoly {
        CommPoly::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: Coeff) -> CommPoly {
        let mut p = CommPoly::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn parse(src: &str) -> Result<CommPoly> {
        let mut p = CommPoly::zero();
        for (c, factors) in parse_polynomial(src)? {
            let (mut a, mut b) = (0, 0);
            for (name, e) in factors {
                match name.as_str() {
                    "x" => a += e,
                    "y" => b += e,
                    _ => return Err(Error::Parse(format!("unknown variable `{name}`; use x and y"))),
                }
            }
            p.add_term(a, b, c);
        }
        Ok(p)
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Coeff> {
        &self.terms
    }

    pub fn coeff(&self, a: u32, b: u32) -> Coeff {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Coeff) {
        accumulate(&mut self.terms, (a, b), c);
    }

    pub fn add(&self, other: &CommPoly) -> CommPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CommPoly) -> CommPoly {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> CommPoly {
        if c.is_zero() {
            return CommPoly::zero();
        }
        CommPoly { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    pub fn mul(&self, other: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn dx(&self) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(a, b), c) in self.terms.iter().filter(|((a, _), _)| *a > 0) {
            out.add_term(a - 1, b, c * int(a.into()));
        }
        out
    }

    pub fn dy(&self) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(a, b), c) in self.terms.iter().filter(|((_, b), _)| *b > 0) {
            out.add_term(a, b - 1, c * int(b.into()));
        }
        out
    }

    /// The common total degree; `None` for zero.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut degs = self.terms.keys().map(|&(a, b)| a + b);
        let Some(d) = degs.next() else { return Ok(None) };
        if degs.any(|e| e != d) {
            return Err(Error::NotHomogeneousPoly);
        }
        Ok(Some(d))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, a: u32, b: u32) -> fmt::Result {
    let mut parts = Vec::new();
    for (name, e) in [("x", a), ("y", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest degree first, x before y within a degree
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (std::cmp::Reverse(a + b), std::cmp::Reverse(a)));
        for (k, (a, b)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let neg = c < &Coeff::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            f.write_str(match (k, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            })?;
            if a + b == 0 {
                write!(f, "{}", format_coeff(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_coeff(&mag))?;
                }
                write_monomial(f, a, b)?;
            }
        }
        Ok(())
    }
}

/// A polyvector field on the plane, all grades at once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaneField {
    pub function: CommPoly,
    /// `(f, g)` for `f∂x + g∂y`.
    pub vector: (CommPoly, CommPoly),
    /// Coefficient of `∂x∧∂y`.
    pub bivector: CommPoly,
}

impl PlaneField {
    pub fn zero() -> PlaneField {
        PlaneField::default()
    }

    pub fn function(h: CommPoly) -> PlaneField {
        PlaneField { function: h, ..PlaneField::default() }
    }

    pub fn vector(f: CommPoly, g: CommPoly) -> PlaneField {
        PlaneField { vector: (f, g), ..PlaneField::default() }
    }

    pub fn bivector(h: CommPoly) -> PlaneField {
        PlaneField { bivector: h, ..PlaneField::default() }
    }

    pub fn is_zero(&self) -> bool {
        self.function.is_zero() && self.vector.0.is_zero() && self.vector.1.is_zero() && self.bivector.is_zero()
    }

    pub fn add(&self, o: &PlaneField) -> PlaneField {
        PlaneField {
            function: self.function.add(&o.function),
            vector: (self.vector.0.add(&o.vector.0), self.vector.1.add(&o.vector.1)),
            bivector: self.bivector.add(&o.bivector),
        }
    }

    pub fn scale(&self, c: &Coeff) -> PlaneField {
        PlaneField {
            function: self.function.scale(c),
            vector: (self.vector.0.scale(c), self.vector.1.scale(c)),
            bivector: self.bivector.scale(c),
        }
    }

    pub fn to_doc(&self) -> PlaneFieldDoc {
        PlaneFieldDoc {
            function: self.function.to_string(),
            vector: [self.vector.0.to_string(), self.vector.1.to_string()],
            bivector: self.bivector.to_string(),
        }
    }

    fn to_super(&self) -> Super {
        let mut s = Super::new();
        for (poly, mask) in [(&self.function, 0), (&self.vector.0, XI_X), (&self.vector.1, XI_Y), (&self.bivector, XI_X | XI_Y)]
        {
            for (&(a, b), c) in &poly.terms {
                accumulate(&mut s, (a, b, mask), c.clone());
            }
        }
        s
    }

    fn from_super(s: &Super) -> PlaneField {
        let mut out = PlaneField::zero();
        for (&(a, b, mask), c) in s {
            let slot = match mask {
                0 => &mut out.function,
                XI_X => &mut out.vector.0,
                XI_Y => &mut out.vector.1,
                _ => &mut out.bivector,
            };
            slot.add_term(a, b, c.clone());
        }
        out
    }
}

impl fmt::Display for PlaneField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.function.is_zero() {
            parts.push(format!("{}", self.function));
        }
        if !self.vector.0.is_zero() || !self.vector.1.is_zero() {
            parts.push(format!("({}, {})", self.vector.0, self.vector.1));
        }
        if !self.bivector.is_zero() {
            parts.push(format!("({})∂x∧∂y", self.bivector));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneFieldDoc {
    pub function: String,
    pub vector: [String; 2],
    pub bivector: String,
}

const XI_X: u8 = 1;
const XI_Y: u8 = 2;

/// Polynomials in `x, y` and odd `ξx, ξy`; the mask lists the odd factors,
/// always written in the order `ξx ξy`.
type Super = BTreeMap<(u32, u32, u8), Coeff>;

fn super_mul(a: &Super, b: &Super) -> Super {
    let mut out = Super::new();
    for (&(a1, b1, m1), c1) in a {
        for (&(a2, b2, m2), c2) in b {
            if m1 & m2 != 0 {
                continue;
            }
            // ξy ξx = −ξx ξy
            let sign = if m1 & XI_Y != 0 && m2 & XI_X != 0 { -Coeff::one() } else { Coeff::one() };
            accumulate(&mut out, (a1 + a2, b1 + b2, m1 | m2), c1 * c2 * sign);
        }
    }
    out
}

fn super_d(s: &Super, var: usize) -> Super {
    let mut out = Super::new();
    for (&(a, b, m), c) in s {
        let e = if var == 0 { a } else { b };
        if e > 0 {
            let key = if var == 0 { (a - 1, b, m) } else { (a, b - 1, m) };
            accumulate(&mut out, key, c * int(e.into()));
        }
    }
    out
}

/// Derivative in `ξ` taken from the right (`right`) or the left.
fn super_dxi(s: &Super, xi: u8, right: bool) -> Super {
    let mut out = Super::new();
    for (&(a, b, m), c) in s {
        if m & xi == 0 {
            continue;
        }
        // the only reordering is across the other variable in ξx ξy
        let other = m & !xi;
        let crosses = other != 0 && ((xi == XI_X) == right);
        let c = if crosses { -c.clone() } else { c.clone() };
        accumulate(&mut out, (a, b, other), c);
    }
    out
}

fn super_sub(a: &Super, b: &Super) -> Super {
    let mut out = a.clone();
    for (k, c) in b {
        accumulate(&mut out, *k, -c.clone());
    }
    out
}

/// Schouten bracket `[A, B] = Σ (A ∂⃖ξᵢ)(∂ᵢ B) − (∂ᵢ A)(∂⃗ξᵢ B)`.
pub fn schouten_bracket(a: &PlaneField, b: &PlaneField) -> PlaneField {
    let (sa, sb) = (a.to_super(), b.to_super());
    let mut out = Super::new();
    for (var, xi) in [(0, XI_X), (1, XI_Y)] {
        let first = super_mul(&super_dxi(&sa, xi, true), &super_d(&sb, var));
        let second = super_mul(&super_d(&sa, var), &super_dxi(&sb, xi, false));
        for (k, c) in super_sub(&first, &second) {
            accumulate(&mut out, k, c);
        }
    }
    PlaneField::from_super(&out)
}

/// `d⁰(h) = ψ(−h_y ∂x + h_x ∂y)`.
pub fn d0_pi(psi: &CommPoly, h: &CommPoly) -> PlaneField {
    PlaneField::vector(psi.mul(&h.dy()).scale(&-Coeff::one()), psi.mul(&h.dx()))
}

/// `d¹(f∂x + g∂y) = ψ(f_x + g_y) − f ψ_x − g ψ_y`, as a bivector.
pub fn d1_pi(psi: &CommPoly, f: &CommPoly, g: &CommPoly) -> PlaneField {
    let div = psi.mul(&f.dx().add(&g.dy()));
    PlaneField::bivector(div.sub(&f.mul(&psi.dx())).sub(&g.mul(&psi.dy())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalDegree {
    pub degree: u32,
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

fn monomials(d: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=d).rev().map(move |a| (a, d - a))
}

fn poly_vec(p: &CommPoly, d: u32, offset: usize, v: &mut RatVec) {
    for (&(a, b), c) in &p.terms {
        debug_assert_eq!(a + b, d);
        v.insert(offset + (d - a) as usize, c.clone());
    }
}

/// Rank of `d⁰` from degree `d`, or of `d¹` from degree `d` when `grade == 1`.
fn differential_rank(psi: &CommPoly, shift: i64, grade: usize, d: i64) -> usize {
    let (Ok(d), Ok(t)) = (u32::try_from(d), u32::try_from(d + shift)) else {
        return 0;
    };
    let width = t as usize + 1;
    let cols: Vec<RatVec> = if grade == 0 {
        monomials(d)
            .map(|(a, b)| {
                let img = d0_pi(psi, &CommPoly::monomial(a, b, Coeff::one()));
                let mut v = RatVec::new();
                poly_vec(&img.vector.0, t, 0, &mut v);
                poly_vec(&img.vector.1, t, width, &mut v);
                v
            })
            .collect()
    } else {
        let one = |a, b| CommPoly::monomial(a, b, Coeff::one());
        monomials(d)
            .flat_map(|(a, b)| [(one(a, b), CommPoly::zero()), (CommPoly::zero(), one(a, b))])
            .map(|(f, g)| {
                let mut v = RatVec::new();
                poly_vec(&d1_pi(psi, &f, &g).bivector, t, 0, &mut v);
                v
            })
            .collect()
    };
    let rows = if grade == 0 { 2 * width } else { width };
    rank(&RatMatrix::from_columns(rows, cols).expect("indices in range"))
}

fn psi_shift(psi: &CommPoly) -> Result<i64> {
    Ok(psi.homogeneous_degree()?.map_or(0, |m| i64::from(m) - 1))
}

/// Dimensions of `H⁰, H¹, H²` in each coefficient degree `0..=max_degree`.
pub fn classical_cohomology(psi: &CommPoly, max_degree: u32, caps: &Caps) -> Result<Vec<ClassicalDegree>> {
    let shift = psi_shift(psi)?;
    if 2 * (max_degree as usize + 1) > caps.max_chain_dim {
        return Err(Error::CapExceeded(format!("degree {max_degree} beyond chain cap {}", caps.max_chain_dim)));
    }
    Ok((0..=max_degree)
        .map(|d| {
            let n = d as usize + 1;
            let di = i64::from(d);
            let r0 = differential_rank(psi, shift, 0, di);
            let r1 = differential_rank(psi, shift, 1, di);
            let in1 = differential_rank(psi, shift, 0, di - shift);
            let in2 = differential_rank(psi, shift, 1, di - shift);
            ClassicalDegree { degree: d, h0: n - r0, h1: 2 * n - r1 - in1, h2: n - in2 }
        })
        .collect())
}

/// Whether the vector part of `target` lies in the span of the vector parts
/// of `generators` plus the coboundaries `d⁰(h)`.
pub fn in_span_modulo_coboundaries(psi: &CommPoly, target: &PlaneField, generators: &[PlaneField]) -> Result<bool> {
    let shift = psi_shift(psi)?;
    let top = std::iter::once(target)
        .chain(generators)
        .flat_map(|v| [v.vector.0.max_degree(), v.vector.1.max_degree()])
        .flatten()
        .max();
    let Some(top) = top else { return Ok(true) };
    let mut index: HashMap<(usize, u32, u32), usize> = HashMap::new();
    let mut vectorize = |v: &PlaneField| -> RatVec {
        let mut out = RatVec::new();
        for (comp, p) in [(0, &v.vector.0), (1, &v.vector.1)] {
            for (&(a, b), c) in &p.terms {
                let next = index.len();
                let i = *index.entry((comp, a, b)).or_insert(next);
                out.insert(i, c.clone());
            }
        }
        out
    };
    let mut span = SpanBasis::new();
    for g in generators {
        span.insert(&vectorize(g));
    }
    for d in 0..=(i64::from(top) - shift).max(0) {
        for (a, b) in monomials(d as u32) {
            span.insert(&vectorize(&d0_pi(psi, &CommPoly::monomial(a, b, Coeff::one()))));
        }
    }
    Ok(span.contains(&vectorize(target)))
}

/// Trace to the one-dimensional representation space `ℂ[x, y]`.
///
/// Plain beads commute to `x^a y^b` and the starred beads, read in the order
/// of the canonical word, wedge to `∂x`, `∂y` or `±∂x∧∂y`.
pub fn trace_map(v: &PolyField) -> Result<PlaneField> {
    let q = v.quiver();
    if !q.is_one_vertex() || q.arrow_count() != 2 {
        return Err(Error::NotPlane);
    }
    let mut out = PlaneField::zero();
    for (n, c) in v.iter() {
        let (mut a, mut b) = (0, 0);
        let mut stars = Vec::new();
        for bead in n.word() {
            match (bead.is_star(), bead.arrow.0) {
                (true, s) => stars.push(s),
                (false, 0) => a += 1,
                (false, _) => b += 1,
            }
        }
        match stars[..] {
            [] => out.function.add_term(a, b, c.clone()),
            [0] => out.vector.0.add_term(a, b, c.clone()),
            [_] => out.vector.1.add_term(a, b, c.clone()),
            [0, 1] => out.bivector.add_term(a, b, c.clone()),
            [1, 0] => out.bivector.add_term(a, b, -c.clone()),
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::quiver::Quiver;

    fn p(s: &str) -> CommPoly {
        CommPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("x*y + 2*y^3 - x*y").to_string(), "2*y^3");
        assert_eq!(p("y*x^2 - 3").to_string(), "x^2*y - 3");
        assert!(CommPoly::parse("z").is_err());
        assert_eq!(p("x^3*y").dx(), p("3*x^2*y"));
        assert!(p("x + y^2").homogeneous_degree().is_err());
    }

    #[test]
    fn displayed_differentials() {
        assert_eq!(d0_pi(&p("x^2"), &p("y")), PlaneField::vector(p("-x^2"), CommPoly::zero()));
        assert!(d0_pi(&p("x^2 + y"), &p("1")).is_zero());
        assert_eq!(d0_pi(&p("y"), &p("x")), PlaneField::vector(CommPoly::zero(), p("y")));
        assert_eq!(d1_pi(&p("x^2"), &p("x"), &CommPoly::zero()), PlaneField::bivector(p("-x^2")));
        for k in 1..=4u32 {
            let f = CommPoly::monomial(1, k - 1, int(k.into()));
            assert!(d1_pi(&p("x^2"), &f, &CommPoly::monomial(0, k, Coeff::one())).is_zero());
        }
    }

    #[test]
    fn schouten_against_displayed_formulas() {
        let psi = p("x^2*y + 3*y^2");
        let pi = PlaneField::bivector(psi.clone());
        let h = p("x^3 - x*y^2");
        assert_eq!(schouten_bracket(&pi, &PlaneField::function(h.clone())), d0_pi(&psi, &h).scale(&int(-1)));
        let (f, g) = (p("x*y"), p("y^2 + x"));
        let v = PlaneField::vector(f.clone(), g.clone());
        assert_eq!(schouten_bracket(&pi, &v), d1_pi(&psi, &f, &g));
        assert!(schouten_bracket(&pi, &pi).is_zero());
    }

    #[test]
    fn quadratic_psi_dims() {
        let dims = classical_cohomology(&p("x^2"), 6, &Caps::default()).unwrap();
        assert_eq!(dims.iter().map(|d| d.h1).collect::<Vec<_>>(), [1, 2, 1, 1, 1, 1, 1]);
        assert_eq!(dims.iter().map(|d| d.h0).sum::<usize>(), 1);
        let zero = classical_cohomology(&CommPoly::zero(), 3, &Caps::default()).unwrap();
        assert_eq!(zero.iter().map(|d| d.h1).collect::<Vec<_>>(), [2, 4, 6, 8]);
    }

    #[test]
    fn trace_examples() {
        let q = Arc::new(Quiver::plane());
        let nk = |w: &[&str]| PolyField::from_names(&q, w).unwrap();
        assert_eq!(trace_map(&nk(&["x", "*x", "x", "*y"])).unwrap(), PlaneField::bivector(p("x^2")));
        let p1 = nk(&["x", "*x", "*x"]).add(&nk(&["y", "*x", "*y"])).unwrap();
        assert_eq!(trace_map(&p1).unwrap(), PlaneField::bivector(p("y")));
        assert!(trace_map(&nk(&["x", "*x", "*x"])).unwrap().is_zero());
        let q3 = Arc::new(Quiver::one_vertex(&["x", "y", "z"]).unwrap());
        assert!(matches!(trace_map(&PolyField::zero(&q3)), Err(Error::NotPlane)));
    }

    #[test]
    fn coboundary_membership() {
        let psi = p("x^2");
        // d⁰(y) = (−x², 0)
        assert!(in_span_modulo_coboundaries(&psi, &PlaneField::vector(p("x^2"), CommPoly::zero()), &[]).unwrap());
        assert!(!in_span_modulo_coboundaries(&psi, &PlaneField::vector(CommPoly::zero(), p("x")), &[]).unwrap());
        let g = PlaneField::vector(CommPoly::zero(), p("x"));
        let t = PlaneField::vector(p("x^2"), p("2*x"));
        assert!(in_span_modulo_coboundaries(&psi, &t, &[g]).unwrap());
    }
}
