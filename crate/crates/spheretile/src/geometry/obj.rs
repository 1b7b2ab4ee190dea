//! Wavefront OBJ export of a realized tiling.
//!
//! One group `g tile<id>` per tile. Each side is sampled along its great
//! circle with `subdivisions` segments; the boundary points and the
//! normalized centroid form a fan of triangular faces. Vertex indices are
//! global and 1-based, as OBJ requires.

use std::fmt::Write as _;

use crate::edges::Side;
use crate::tiling::{SideRef, TilingComplex};

use super::{Realization, SpherePoint, TriangleGeometry};

pub const DEFAULT_SUBDIVISIONS: usize = 16;

pub fn write_obj(c: &TilingComplex, g: &TriangleGeometry, r: &Realization, subdivisions: usize) -> String {
    let n = subdivisions.max(1);
    let mut out = String::new();
    let _ = writeln!(out, "# spheretile mesh: {} tiles, {n} segments per side", c.tiles.len());
    let mut next_index = 1usize;
    for t in &c.tiles {
        let _ = writeln!(out, "g tile{}", t.id);
        let mut ring = Vec::new();
        // boundary order: start with side c and follow the tile's own cycle
        let mut side = Side::C;
        for _ in 0..3 {
            let len = g.side(side);
            for k in 0..n {
                if let Some(p) = r.side_point(SideRef { tile: t.id, side }, len * k as f64 / n as f64) {
                    ring.push(p);
                }
            }
            side = t.chirality.outgoing(t.chirality.side_ends(side).1);
        }
        let sum = ring.iter().fold([0.0; 3], |acc, p| [acc[0] + p.0[0], acc[1] + p.0[1], acc[2] + p.0[2]]);
        let centre = SpherePoint::new(sum[0], sum[1], sum[2]);
        for p in std::iter::once(&centre).chain(&ring) {
            let _ = writeln!(out, "v {:.9} {:.9} {:.9}", p.0[0], p.0[1], p.0[2]);
        }
        let m = ring.len();
        for k in 0..m {
            let (a, b) = (next_index + 1 + k, next_index + 1 + (k + 1) % m);
            let _ = writeln!(out, "f {next_index} {a} {b}");
        }
        next_index += m + 1;
    }
    out
}
