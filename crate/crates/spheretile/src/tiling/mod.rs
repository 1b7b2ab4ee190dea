//! Tiling complexes with segment-level gluings, so that a corner may sit in
//! the interior of a neighbour's side.

mod build;
mod format;
mod generate;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::angles::lp::{Constraint, Rel, System};
use crate::angles::{int, AngleExpr, AngleTriple, IntervalBound, Ordered, Rational};
use crate::edges::{Corner, LengthRelationSet, Side};
use crate::vertices::{Avc, AvcEntry, Count, FCond, Kind, VertexVector};

pub use build::{ComplexBuilder, Piece};
pub use format::{parse_base, parse_relation};
pub use generate::{
    generate_f16_sporadic, generate_f36_rational, generate_f8_sporadic, generate_one_layer, generate_subdivided_quad, generate_two_layer,
    generate_two_layer_rotation, Offset, QuadVariant,
};
pub use verify::{discipline_of, extended_edges, side_coverage, verify, AadWord, CheckGroup, ExtendedEdge, VerifyItem, VerifyReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid modification: {0}")]
    InvalidModification(String),
    #[error("too few tiles: {0}")]
    TooFew(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent complex: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chirality {
    Direct,
    Mirrored,
}

impl Chirality {
    pub fn flipped(self) -> Self {
        match self {
            Chirality::Direct => Chirality::Mirrored,
            Chirality::Mirrored => Chirality::Direct,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Chirality::Direct => "direct",
            Chirality::Mirrored => "mirrored",
        }
    }

    /// Corners at the start and end of `side`, walking the boundary
    /// counterclockwise as seen from outside the sphere. A direct tile reads
    /// α→β→γ, a mirrored one α→γ→β.
    pub fn side_ends(self, side: Side) -> (Corner, Corner) {
        use Corner::*;
        match (self, side) {
            (Chirality::Direct, Side::C) => (Alpha, Beta),
            (Chirality::Direct, Side::A) => (Beta, Gamma),
            (Chirality::Direct, Side::B) => (Gamma, Alpha),
            (Chirality::Mirrored, Side::B) => (Alpha, Gamma),
            (Chirality::Mirrored, Side::A) => (Gamma, Beta),
            (Chirality::Mirrored, Side::C) => (Beta, Alpha),
        }
    }

    /// The side leaving `x` counterclockwise; it bounds the corner on its
    /// clockwise flank.
    pub fn outgoing(self, x: Corner) -> Side {
        *Side::ALL.iter().find(|&&s| self.side_ends(s).0 == x).unwrap()
    }

    /// The side arriving at `x`; it bounds the corner on its counterclockwise flank.
    pub fn incoming(self, x: Corner) -> Side {
        *Side::ALL.iter().find(|&&s| self.side_ends(s).1 == x).unwrap()
    }
}

impl FromStr for Chirality {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "direct" => Ok(Chirality::Direct),
            "mirrored" => Ok(Chirality::Mirrored),
            _ => Err(format!("bad chirality {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tile {
    pub id: u32,
    pub chirality: Chirality,
}

/// `x·(a, b, c) + k` with `k` in units of π.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthExpr {
    pub coeffs: [Rational; 3],
    pub constant: Rational,
}

impl LengthExpr {
    pub fn zero() -> Self {
        LengthExpr { coeffs: [int(0), int(0), int(0)], constant: int(0) }
    }

    pub fn side(s: Side) -> Self {
        let mut e = Self::zero();
        e.coeffs[s.index()] = int(1);
        e
    }

    pub fn constant(k: Rational) -> Self {
        LengthExpr { constant: k, ..Self::zero() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        LengthExpr { coeffs: self.coeffs.clone().map(|c| c * k), constant: &self.constant * k }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact value at side lengths given in units of π.
    pub fn at(&self, sides: &[Rational; 3]) -> Rational {
        self.coeffs.iter().zip(sides).fold(self.constant.clone(), |acc, (c, s)| acc + c * s)
    }

    /// Radians, for side lengths in radians.
    pub fn eval(&self, sides: [f64; 3]) -> f64 {
        let f = crate::angles::to_f64;
        f(&self.constant) * std::f64::consts::PI + (0..3).map(|i| f(&self.coeffs[i]) * sides[i]).sum::<f64>()
    }

    pub fn constraint(&self, rel: Rel) -> Constraint {
        Constraint::new(self.coeffs.to_vec(), self.constant.clone(), rel)
    }

    /// Whether `self = 0` throughout `relations`.
    pub fn vanishes_under(&self, relations: &LengthRelationSet) -> bool {
        let feasible = |e: &LengthExpr| {
            let mut s: System = relations.system();
            s.constraints.push(e.constraint(Rel::Gt));
            s.is_feasible()
        };
        !feasible(self) && !feasible(&-self)
    }

    pub fn is_positive_under(&self, relations: &LengthRelationSet) -> bool {
        let mut s = relations.system();
        s.constraints.push((-self).constraint(Rel::Ge));
        !s.is_feasible()
    }
}

impl Add for &LengthExpr {
    type Output = LengthExpr;
    fn add(self, o: &LengthExpr) -> LengthExpr {
        LengthExpr { coeffs: std::array::from_fn(|i| &self.coeffs[i] + &o.coeffs[i]), constant: &self.constant + &o.constant }
    }
}

impl Sub for &LengthExpr {
    type Output = LengthExpr;
    fn sub(self, o: &LengthExpr) -> LengthExpr {
        self + &-o
    }
}

impl Neg for &LengthExpr {
    type Output = LengthExpr;
    fn neg(self) -> LengthExpr {
        self.scale(&int(-1))
    }
}

impl fmt::Display for LengthExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let terms = self.coeffs.iter().zip(["a", "b", "c"]).chain([(&self.constant, "")]);
        for (k, sym) in terms {
            if k.is_zero() {
                continue;
            }
            if k.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let m = k.abs();
            if !(m.is_one() && !sym.is_empty()) {
                out.push_str(&m.to_string());
            }
            out.push_str(sym);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl FromStr for LengthExpr {
    type Err = String;

    /// Accepts `a`, `b+c`, `2b-a`, `1/2b`, `c+1/3` (constants in units of π).
    fn from_str(s: &str) -> Result<Self, String> {
        let err = || format!("bad length {s:?}");
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let mut acc = LengthExpr::zero();
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                let term = &t[start..i];
                let (sign, body) = match term.as_bytes()[0] {
                    b'-' => (-1, &term[1..]),
                    b'+' => (1, &term[1..]),
                    _ => (1, term),
                };
                if body.is_empty() {
                    return Err(err());
                }
                let (num, sym) = match body.chars().last().and_then(Side::from_char) {
                    Some(side) => (&body[..body.len() - 1], Some(side)),
                    None => (body, None),
                };
                let k = if num.is_empty() { int(1) } else { num.parse::<Rational>().map_err(|_| err())? };
                let k = k * int(sign);
                match sym {
                    Some(side) => acc.coeffs[side.index()] += k,
                    None => acc.constant += k,
                }
                start = i;
            }
        }
        Ok(acc)
    }
}

/// `tile.corner`, written `3.B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CornerRef {
    pub tile: u32,
    pub corner: Corner,
}

/// `tile.side`, written `3.a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SideRef {
    pub tile: u32,
    pub side: Side,
}

/// `tile.side.index`, written `3.a.1`; segments are numbered along the
/// tile's counterclockwise boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegRef {
    pub tile: u32,
    pub side: Side,
    pub index: u32,
}

impl SegRef {
    pub fn new(tile: u32, side: Side, index: u32) -> Self {
        SegRef { tile, side, index }
    }

    pub fn owner(&self) -> SideRef {
        SideRef { tile: self.tile, side: self.side }
    }
}

impl fmt::Display for CornerRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tile, self.corner.ascii())
    }
}

impl fmt::Display for SideRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.tile, self.side.symbol())
    }
}

impl fmt::Display for SegRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.tile, self.side.symbol(), self.index)
    }
}

/// A vertex: incident corners counterclockwise as seen from outside. A half
/// vertex lists its corners starting next to the host side.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub kind: Kind,
    pub corners: Vec<CornerRef>,
    pub host: Option<SideRef>,
}

impl Vertex {
    pub fn vector(&self) -> VertexVector {
        let mut n = [0u32; 3];
        for c in &self.corners {
            n[c.corner.index()] += 1;
        }
        VertexVector { n, kind: self.kind }
    }

    /// Full vertices rotate to start at their smallest corner.
    pub fn canonical(&self) -> Vertex {
        let mut v = self.clone();
        if v.kind == Kind::Full {
            if let Some(i) = (0..v.corners.len()).min_by_key(|&i| v.corners[i]) {
                v.corners.rotate_left(i);
            }
        }
        v
    }
}

/// Length data carried by a complex: the base set plus extra relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthBase {
    /// Positive sides at most π; no triangle inequality (lunes).
    Free,
    Unordered,
    Scalene,
}

impl LengthBase {
    pub fn as_str(self) -> &'static str {
        match self {
            LengthBase::Free => "free",
            LengthBase::Unordered => "unordered",
            LengthBase::Scalene => "scalene",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingComplex {
    /// Sorted by id.
    pub tiles: Vec<Tile>,
    /// Sides split into more than one segment, lengths in boundary order.
    pub segments: BTreeMap<SideRef, Vec<LengthExpr>>,
    /// Symmetric: every pair is stored both ways.
    pub gluing: BTreeMap<SegRef, SegRef>,
    pub vertices: Vec<Vertex>,
    /// Corner angles `α, β, γ` in units of π, as text (`t` allowed).
    pub angles: Option<[String; 3]>,
    pub length_base: LengthBase,
    pub relations: Vec<Constraint>,
}

impl TilingComplex {
    pub fn f(&self) -> u64 {
        self.tiles.len() as u64
    }

    pub fn tile(&self, id: u32) -> Option<&Tile> {
        self.tiles.binary_search_by_key(&id, |t| t.id).ok().map(|i| &self.tiles[i])
    }

    pub fn chirality(&self, id: u32) -> Chirality {
        self.tile(id).map(|t| t.chirality).unwrap_or(Chirality::Direct)
    }

    pub fn side_segments(&self, s: SideRef) -> Vec<LengthExpr> {
        self.segments.get(&s).cloned().unwrap_or_else(|| vec![LengthExpr::side(s.side)])
    }

    pub fn segment_count(&self, s: SideRef) -> u32 {
        self.segments.get(&s).map_or(1, |v| v.len() as u32)
    }

    pub fn segment_length(&self, s: SegRef) -> Option<LengthExpr> {
        self.side_segments(s.owner()).get(s.index as usize).cloned()
    }

    pub fn all_segments(&self) -> Vec<SegRef> {
        let mut out = Vec::new();
        for t in &self.tiles {
            for side in Side::ALL {
                for i in 0..self.segment_count(SideRef { tile: t.id, side }) {
                    out.push(SegRef::new(t.id, side, i));
                }
            }
        }
        out
    }

    pub fn length_relations(&self) -> LengthRelationSet {
        let mut set = match self.length_base {
            LengthBase::Free => LengthRelationSet::free(),
            LengthBase::Unordered => LengthRelationSet::unordered(),
            LengthBase::Scalene => LengthRelationSet::scalene(),
        };
        for c in &self.relations {
            set = set.with(c.clone());
        }
        set
    }

    /// The declared angle triple, unordered, for `t` in `(0, 1)`.
    pub fn angle_triple(&self) -> Result<AngleTriple, TilingError> {
        let Some(list) = &self.angles else {
            return Err(TilingError::Inconsistent("no angles declared".into()));
        };
        let mut parsed = Vec::new();
        for a in list {
            parsed.push(a.parse::<AngleExpr>().map_err(|e| TilingError::Inconsistent(e.to_string()))?);
        }
        let [alpha, beta, gamma]: [AngleExpr; 3] = parsed.try_into().expect("three angles");
        AngleTriple::new(alpha, beta, gamma, self.f(), Ordered::Unordered, &IntervalBound::unit())
            .map_err(|e| TilingError::Inconsistent(e.to_string()))
    }

    /// Vertex multiset with exact counts.
    pub fn avc(&self) -> Avc {
        let mut counts: BTreeMap<VertexVector, u64> = BTreeMap::new();
        for v in &self.vertices {
            *counts.entry(v.vector()).or_default() += 1;
        }
        let entries = counts.into_iter().map(|(vertex, k)| AvcEntry { vertex, count: Count::Exact(k) }).collect();
        Avc::new(FCond::Exact(self.f()), entries)
    }

    pub fn normalize(&mut self) {
        self.tiles.sort();
        self.vertices = self.vertices.iter().map(Vertex::canonical).collect();
        self.vertices.sort_by(|x, y| x.corners.iter().min().cmp(&y.corners.iter().min()));
        self.segments.retain(|_, v| v.len() > 1);
    }

    /// Trace the vertices implied by the gluing.
    pub fn derive_vertices(&self) -> Result<Vec<Vertex>, String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let limit = 3 * self.tiles.len() + 3;
        for t in &self.tiles {
            for x in Corner::ALL {
                let start = CornerRef { tile: t.id, corner: x };
                if seen.contains(&start) {
                    continue;
                }
                let mut ring = Vec::new();
                let mut hosts: Vec<(usize, SideRef)> = Vec::new();
                let mut cur = start;
                loop {
                    if ring.len() > limit {
                        return Err(format!("vertex at {start} does not close"));
                    }
                    if !seen.insert(cur) {
                        return Err(format!("corner {cur} reached twice"));
                    }
                    ring.push(cur);
                    let ch = self.chirality(cur.tile);
                    let inc = SideRef { tile: cur.tile, side: ch.incoming(cur.corner) };
                    let last = SegRef::new(cur.tile, inc.side, self.segment_count(inc) - 1);
                    let p = *self.gluing.get(&last).ok_or_else(|| format!("segment {last} is not glued"))?;
                    let next_seg = if p.index == 0 {
                        p
                    } else {
                        hosts.push((ring.len(), p.owner()));
                        let prev = SegRef::new(p.tile, p.side, p.index - 1);
                        let q = *self.gluing.get(&prev).ok_or_else(|| format!("segment {prev} is not glued"))?;
                        if q.index != 0 {
                            return Err(format!("segments {p} and {q} both break at one point"));
                        }
                        q
                    };
                    let nc = self.chirality(next_seg.tile).side_ends(next_seg.side).0;
                    let next = CornerRef { tile: next_seg.tile, corner: nc };
                    if next == start {
                        break;
                    }
                    cur = next;
                }
                match hosts.as_slice() {
                    [] => out.push(Vertex { kind: Kind::Full, corners: ring, host: None }),
                    [(at, host)] => {
                        let shift = *at % ring.len();
                        ring.rotate_left(shift);
                        out.push(Vertex { kind: Kind::Half, corners: ring, host: Some(*host) });
                    }
                    _ => return Err(format!("vertex at {start} lies inside {} sides", hosts.len())),
                }
            }
        }
        Ok(out)
    }

    /// Replace the declared vertices by the traced ones.
    pub fn with_derived_vertices(mut self) -> Result<Self, String> {
        self.vertices = self.derive_vertices()?;
        self.normalize();
        Ok(self)
    }

    /// Renumber tiles by `map` (old id → new id).
    pub fn relabeled(&self, map: &BTreeMap<u32, u32>) -> TilingComplex {
        let m = |id: u32| map.get(&id).copied().unwrap_or(id);
        let seg = |s: &SegRef| SegRef::new(m(s.tile), s.side, s.index);
        let mut out = TilingComplex {
            tiles: self.tiles.iter().map(|t| Tile { id: m(t.id), chirality: t.chirality }).collect(),
            segments: self.segments.iter().map(|(k, v)| (SideRef { tile: m(k.tile), side: k.side }, v.clone())).collect(),
            gluing: self.gluing.iter().map(|(x, y)| (seg(x), seg(y))).collect(),
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex {
                    kind: v.kind,
                    corners: v.corners.iter().map(|c| CornerRef { tile: m(c.tile), corner: c.corner }).collect(),
                    host: v.host.map(|h| SideRef { tile: m(h.tile), side: h.side }),
                })
                .collect(),
            angles: self.angles.clone(),
            length_base: self.length_base,
            relations: self.relations.clone(),
        };
        out.normalize();
        out
    }

    /// The reflected tiling: chiralities swap, sides run the other way and
    /// vertex orders reverse.
    pub fn mirrored(&self) -> TilingComplex {
        let flip = |s: &SegRef| SegRef::new(s.tile, s.side, self.segment_count(s.owner()) - 1 - s.index);
        let mut out = TilingComplex {
            tiles: self.tiles.iter().map(|t| Tile { id: t.id, chirality: t.chirality.flipped() }).collect(),
            segments: self.segments.iter().map(|(k, v)| (*k, v.iter().rev().cloned().collect())).collect(),
            gluing: self.gluing.iter().map(|(x, y)| (flip(x), flip(y))).collect(),
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex { kind: v.kind, corners: v.corners.iter().rev().copied().collect(), host: v.host })
                .collect(),
            angles: self.angles.clone(),
            length_base: self.length_base,
            relations: self.relations.clone(),
        };
        out.normalize();
        out
    }

    /// Drop one tile and everything attached to it (a deliberately broken complex).
    pub fn without_tile(&self, id: u32) -> TilingComplex {
        let mut out = self.clone();
        out.tiles.retain(|t| t.id != id);
        out.segments.retain(|k, _| k.tile != id);
        out.gluing.retain(|x, y| x.tile != id && y.tile != id);
        for v in &mut out.vertices {
            v.corners.retain(|c| c.tile != id);
        }
        out.vertices.retain(|v| !v.corners.is_empty());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chirality_cycles() {
        let d = Chirality::Direct;
        assert_eq!(d.outgoing(Corner::Alpha), Side::C);
        assert_eq!(d.incoming(Corner::Alpha), Side::B);
        let m = Chirality::Mirrored;
        assert_eq!(m.outgoing(Corner::Alpha), Side::B);
        assert_eq!(m.incoming(Corner::Beta), Side::A);
        for ch in [d, m] {
            for s in Side::ALL {
                let (x, y) = ch.side_ends(s);
                assert_eq!(ch.outgoing(x), s);
                assert_eq!(ch.incoming(y), s);
                assert!(s.end_corners().contains(&x) && s.end_corners().contains(&y));
            }
        }
    }

    #[test]
    fn length_expr_text() {
        for s in ["a", "b+c", "-a+2b", "1/2b", "c+1/3", "-a+1", "0"] {
            let e: LengthExpr = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        let e: LengthExpr = "a - b + a".parse().unwrap();
        assert_eq!(e.to_string(), "2a-b");
        assert!("a+".parse::<LengthExpr>().is_err());
        assert!("x".parse::<LengthExpr>().is_err());
    }

    #[test]
    fn length_expr_relations() {
        let rel = LengthRelationSet::unordered().with(length_rel("a+b=1"));
        let e: LengthExpr = "a+b-1".parse().unwrap();
        assert!(e.vanishes_under(&rel));
        let d: LengthExpr = "a-b".parse().unwrap();
        assert!(!d.vanishes_under(&rel));
        assert!(!d.is_positive_under(&rel));
        assert!(d.is_positive_under(&LengthRelationSet::scalene()));
    }

    fn length_rel(s: &str) -> Constraint {
        format::parse_relation(s).unwrap()
    }
}
