//! Embedding a complex on the unit sphere by breadth-first placement.

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;

use crate::edges::Side;
use crate::tiling::{Chirality, CornerRef, SegRef, SideRef, TilingComplex};

use super::{cross, dot, lin, GeometryError, SpherePoint, TriangleGeometry};

/// Start point and unit tangent of a side, in the tile's boundary direction.
#[derive(Clone, Copy, Debug)]
struct Frame {
    start: [f64; 3],
    tangent: [f64; 3],
}

impl Frame {
    fn point(&self, s: f64) -> [f64; 3] {
        lin(s.cos(), &self.start, s.sin(), &self.tangent)
    }

    fn tangent_at(&self, s: f64) -> [f64; 3] {
        lin(-s.sin(), &self.start, s.cos(), &self.tangent)
    }

    /// Turn the tangent left (counterclockwise from outside) by `theta`.
    fn turned(&self, theta: f64) -> [f64; 3] {
        let left = cross(&self.start, &self.tangent);
        lin(theta.cos(), &self.tangent, theta.sin(), &left)
    }
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub corners: BTreeMap<CornerRef, SpherePoint>,
    /// Largest disagreement between two derivations of one point, radians.
    pub closure_residual: f64,
    /// Where `closure_residual` is attained.
    pub worst: String,
    /// Largest deviation of a measured vertex angle sum from 2π or π.
    pub angle_residual: f64,
    frames: BTreeMap<SideRef, ([f64; 3], [f64; 3])>,
}

impl Realization {
    pub fn point(&self, c: CornerRef) -> Option<SpherePoint> {
        self.corners.get(&c).copied()
    }

    /// Point at arc length `s` along a side from its start.
    pub fn side_point(&self, side: SideRef, s: f64) -> Option<SpherePoint> {
        let &(start, tangent) = self.frames.get(&side)?;
        let p = Frame { start, tangent }.point(s);
        Some(SpherePoint(p))
    }

    pub fn check(&self, tol: f64) -> Result<(), GeometryError> {
        let r = self.closure_residual.max(self.angle_residual);
        if r < tol {
            Ok(())
        } else {
            Err(GeometryError::RealizationFailure { at: self.worst.clone(), residual: r })
        }
    }
}

/// The three side frames of a tile whose side `side` starts at `start`
/// heading along `tangent`.
fn place(g: &TriangleGeometry, ch: Chirality, side: Side, start: [f64; 3], tangent: [f64; 3]) -> BTreeMap<Side, Frame> {
    let mut frames = BTreeMap::new();
    let mut f = Frame { start, tangent };
    let mut s = side;
    for _ in 0..3 {
        frames.insert(s, f);
        let len = g.side(s);
        let end_corner = ch.side_ends(s).1;
        let next = ch.outgoing(end_corner);
        let at = f.point(len);
        let travel = f.tangent_at(len);
        // exterior turn π − corner, to the left
        let turn = PI - g.angle(end_corner);
        f = Frame { start: at, tangent: Frame { start: at, tangent: travel }.turned(turn) };
        s = next;
    }
    frames
}

fn offsets(c: &TilingComplex, g: &TriangleGeometry, side: SideRef) -> Vec<f64> {
    let sides = [g.a, g.b, g.c];
    let mut out = vec![0.0];
    for l in c.side_segments(side) {
        let last = *out.last().unwrap();
        out.push(last + l.eval(sides));
    }
    out
}

/// Signed angle at `v` from direction `p` to direction `q`, in `[0, 2π)`.
fn angle_at(v: &[f64; 3], p: &[f64; 3], q: &[f64; 3]) -> f64 {
    let proj = |x: &[f64; 3]| lin(1.0, x, -dot(x, v), v);
    let (u, w) = (proj(p), proj(q));
    let th = dot(&cross(&u, &w), v).atan2(dot(&u, &w));
    if th < -1e-12 {
        th + 2.0 * PI
    } else {
        th.max(0.0)
    }
}

pub fn realize_tiling(c: &TilingComplex, g: &TriangleGeometry) -> Result<Realization, GeometryError> {
    let Some(first) = c.tiles.first() else {
        return Err(GeometryError::Disconnected(0));
    };
    let mut frames: BTreeMap<u32, BTreeMap<Side, Frame>> = BTreeMap::new();
    let seed_side = Side::C;
    let start = [0.0, 0.0, 1.0];
    frames.insert(first.id, place(g, first.chirality, seed_side, start, [1.0, 0.0, 0.0]));
    let mut queue = VecDeque::from([first.id]);
    while let Some(t) = queue.pop_front() {
        for side in Side::ALL {
            let owner = SideRef { tile: t, side };
            let offs = offsets(c, g, owner);
            let fr = frames[&t][&side];
            for k in 0..offs.len() - 1 {
                let seg = SegRef::new(t, side, k as u32);
                let Some(&p) = c.gluing.get(&seg) else { continue };
                if frames.contains_key(&p.tile) {
                    continue;
                }
                // the partner starts where this segment ends, running back
                let end = fr.point(offs[k + 1]);
                let back = fr.tangent_at(offs[k + 1]).map(|x| -x);
                let o2 = offsets(c, g, p.owner())[p.index as usize];
                let s0 = lin(o2.cos(), &end, -o2.sin(), &back);
                let t0 = lin(o2.sin(), &end, o2.cos(), &back);
                frames.insert(p.tile, place(g, c.chirality(p.tile), p.side, s0, t0));
                queue.push_back(p.tile);
            }
        }
    }
    if let Some(t) = c.tiles.iter().find(|t| !frames.contains_key(&t.id)) {
        return Err(GeometryError::Disconnected(t.id));
    }

    let mut corners = BTreeMap::new();
    let mut side_frames = BTreeMap::new();
    for t in &c.tiles {
        for (&side, f) in &frames[&t.id] {
            let start_corner = t.chirality.side_ends(side).0;
            corners.insert(CornerRef { tile: t.id, corner: start_corner }, SpherePoint(f.start));
            side_frames.insert(SideRef { tile: t.id, side }, (f.start, f.tangent));
        }
    }

    let mut worst = (0.0f64, String::from("none"));
    let mut note = |d: f64, at: String| {
        if d > worst.0 || worst.1 == "none" && d >= worst.0 {
            worst = (d, at);
        }
    };
    let seg_ends = |s: SegRef| {
        let f = frames[&s.tile][&s.side];
        let offs = offsets(c, g, s.owner());
        (f.point(offs[s.index as usize]), f.point(offs[s.index as usize + 1]))
    };
    for (&s, &p) in &c.gluing {
        if s > p || !frames.contains_key(&s.tile) || !frames.contains_key(&p.tile) {
            continue;
        }
        let (s0, s1) = seg_ends(s);
        let (p0, p1) = seg_ends(p);
        let d = SpherePoint(s0).distance(&SpherePoint(p1)).max(SpherePoint(s1).distance(&SpherePoint(p0)));
        note(d, format!("glue {s} {p}"));
    }
    let mut angle_residual = 0.0f64;
    for v in &c.vertices {
        let Some(p0) = v.corners.first().and_then(|x| corners.get(x)) else { continue };
        for x in &v.corners {
            if let Some(p) = corners.get(x) {
                note(p0.distance(p), format!("vertex at {x}"));
            }
        }
        if let Some(h) = v.host {
            // the host breakpoint must be the vertex itself
            let offs = offsets(c, g, h);
            let f = Frame { start: side_frames[&h].0, tangent: side_frames[&h].1 };
            let d = offs[1..offs.len() - 1].iter().map(|&o| SpherePoint(f.point(o)).distance(p0)).fold(f64::INFINITY, f64::min);
            note(d, format!("host {h} of vertex at {}", v.corners[0]));
        }
        let mut sum = 0.0;
        for x in &v.corners {
            let ch = c.chirality(x.tile);
            let out = frames[&x.tile][&ch.outgoing(x.corner)];
            let inc_side = ch.incoming(x.corner);
            let inc = frames[&x.tile][&inc_side];
            let l = g.side(inc_side);
            let here = corners[x].0;
            let p = out.point(g.side(ch.outgoing(x.corner)) / 2.0);
            let q = inc.point(l / 2.0);
            sum += angle_at(&here, &p, &q);
        }
        let want = if v.host.is_some() { PI } else { 2.0 * PI };
        angle_residual = angle_residual.max((sum - want).abs());
    }
    Ok(Realization { corners, closure_residual: worst.0, worst: worst.1, angle_residual, frames: side_frames })
}

/// Swap the partners of two glued pairs: a deliberately broken complex.
pub fn perturb_gluing(c: &TilingComplex) -> TilingComplex {
    let mut out = c.clone();
    let pairs: Vec<(SegRef, SegRef)> = c.gluing.iter().filter(|(x, y)| x < y).map(|(x, y)| (*x, *y)).collect();
    if pairs.len() < 2 {
        return out;
    }
    let (s, p) = pairs[0];
    // pick a pair on another tile so the swap really moves something
    let (s2, p2) = *pairs.iter().find(|(x, y)| x.tile != s.tile && y.tile != s.tile && x.tile != p.tile).unwrap_or(&pairs[1]);
    out.gluing.insert(s, p2);
    out.gluing.insert(p2, s);
    out.gluing.insert(s2, p);
    out.gluing.insert(p, s2);
    out
}
