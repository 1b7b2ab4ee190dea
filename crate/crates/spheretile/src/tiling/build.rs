//! Assemble a complex from extended edges: each line lists the sides running
//! along it on both banks, and the builder cuts them into glued segments.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::angles::lp::Constraint;
use crate::angles::{int, Rational};
use crate::edges::Side;

use super::{Chirality, LengthBase, LengthExpr, SegRef, SideRef, Tile, TilingComplex, TilingError};

/// One tile side lying on a line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub tile: u32,
    pub side: Side,
}

impl Piece {
    pub fn new(tile: u32, side: Side) -> Self {
        Piece { tile, side }
    }
}

/// Collects tiles and lines. A sample of exact side lengths (units of π)
/// orders the breakpoints along each line.
#[derive(Clone, Debug)]
pub struct ComplexBuilder {
    tiles: BTreeMap<u32, Chirality>,
    sample: [Rational; 3],
    segments: BTreeMap<SideRef, Vec<LengthExpr>>,
    gluing: BTreeMap<SegRef, SegRef>,
}

struct Cut {
    piece: Piece,
    /// positions of the segment ends along the line, in line order
    points: Vec<LengthExpr>,
    /// true when the side runs with the line
    forward: bool,
}

impl ComplexBuilder {
    pub fn new(sample: [Rational; 3]) -> Self {
        ComplexBuilder { tiles: BTreeMap::new(), sample, segments: BTreeMap::new(), gluing: BTreeMap::new() }
    }

    pub fn tile(&mut self, id: u32, chirality: Chirality) -> &mut Self {
        self.tiles.insert(id, chirality);
        self
    }

    fn value(&self, e: &LengthExpr) -> Rational {
        e.at(&self.sample)
    }

    /// Glue `top` (sides running along the line, starting at 0) against
    /// `bottom` (sides running against it, listed in line order, starting at
    /// `offset`). A cyclic line is a great circle of length 2.
    pub fn line(&mut self, top: &[Piece], bottom: &[Piece], offset: &LengthExpr, cyclic: bool) -> Result<&mut Self, TilingError> {
        let bad = |m: String| TilingError::Inconsistent(m);
        let chain = |pieces: &[Piece], start: &LengthExpr| {
            let mut pos = vec![start.clone()];
            for p in pieces {
                let next = pos.last().unwrap() + &LengthExpr::side(p.side);
                pos.push(next);
            }
            pos
        };
        let tp = chain(top, &LengthExpr::zero());
        let bp = chain(bottom, offset);
        let (t_len, b_len) = (self.value(&(&tp[tp.len() - 1] - &tp[0])), self.value(&(&bp[bp.len() - 1] - &bp[0])));
        if t_len != b_len {
            return Err(bad(format!("line words have lengths {t_len} and {b_len}")));
        }
        if cyclic && t_len != int(2) {
            return Err(bad(format!("great circle has length {t_len}")));
        }
        if !cyclic && !self.value(offset).is_zero() {
            return Err(bad("an open line must start at a common stop".into()));
        }
        let period = LengthExpr::constant(int(2));
        // breakpoints each bank contributes to the other, unrolled over two turns
        let spread = |pos: &[LengthExpr]| {
            let mut v = pos.to_vec();
            if cyclic {
                v.extend(pos.iter().map(|p| p + &period));
                v.extend(pos.iter().map(|p| p - &period));
            }
            v
        };
        let (t_all, b_all) = (spread(&tp), spread(&bp));
        let mut cuts = Vec::new();
        for (pieces, pos, other, forward) in [(top, &tp, &b_all, true), (bottom, &bp, &t_all, false)] {
            for (i, piece) in pieces.iter().enumerate() {
                let (lo, hi) = (&pos[i], &pos[i + 1]);
                let (lv, hv) = (self.value(lo), self.value(hi));
                let mut inner: Vec<LengthExpr> = other
                    .iter()
                    .filter(|p| {
                        let v = self.value(p);
                        v > lv && v < hv
                    })
                    .cloned()
                    .collect();
                inner.sort_by_key(|p| self.value(p));
                inner.dedup_by_key(|p| self.value(p));
                let mut points = vec![lo.clone()];
                points.extend(inner);
                points.push(hi.clone());
                cuts.push(Cut { piece: *piece, points, forward });
            }
        }
        // elementary intervals keyed by start position (mod 2 on a circle)
        let sample = self.sample.clone();
        let key = |e: &LengthExpr| {
            let v = e.at(&sample);
            if cyclic {
                let two = int(2);
                let r = &v % &two;
                if r.is_negative() {
                    r + two
                } else {
                    r
                }
            } else {
                v
            }
        };
        let mut top_at: BTreeMap<Rational, SegRef> = BTreeMap::new();
        let mut bottom_at: BTreeMap<Rational, SegRef> = BTreeMap::new();
        for cut in &cuts {
            let owner = SideRef { tile: cut.piece.tile, side: cut.piece.side };
            let n = cut.points.len() - 1;
            let mut lens: Vec<LengthExpr> = cut.points.windows(2).map(|w| &w[1] - &w[0]).collect();
            if !cut.forward {
                lens.reverse();
            }
            for (k, w) in cut.points.windows(2).enumerate() {
                let index = if cut.forward { k } else { n - 1 - k } as u32;
                let seg = SegRef::new(owner.tile, owner.side, index);
                let map = if cut.forward { &mut top_at } else { &mut bottom_at };
                if map.insert(key(&w[0]), seg).is_some() {
                    return Err(bad(format!("overlapping sides at {seg}")));
                }
            }
            if self.segments.insert(owner, lens).is_some() {
                return Err(bad(format!("side {owner} placed on two lines")));
            }
        }
        if top_at.len() != bottom_at.len() {
            return Err(bad("banks cut into different numbers of segments".into()));
        }
        for (k, s) in &top_at {
            let t = bottom_at.get(k).ok_or_else(|| bad(format!("no partner for {s}")))?;
            self.gluing.insert(*s, *t);
            self.gluing.insert(*t, *s);
        }
        Ok(self)
    }

    pub fn finish(
        &self,
        angles: Option<[String; 3]>,
        length_base: LengthBase,
        relations: Vec<Constraint>,
    ) -> Result<TilingComplex, TilingError> {
        let tiles = self.tiles.iter().map(|(&id, &chirality)| Tile { id, chirality }).collect();
        let c = TilingComplex {
            tiles,
            segments: self.segments.clone(),
            gluing: self.gluing.clone(),
            vertices: Vec::new(),
            angles,
            length_base,
            relations,
        };
        c.with_derived_vertices().map_err(TilingError::Inconsistent)
    }
}
