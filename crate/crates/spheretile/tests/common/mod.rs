//! Oracles shared by the integration tests. Nothing here calls the library's
//! own feasibility or collinearity code.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::PI;

use spheretile::angles::{int, rat, Rational};
use spheretile::edges::{canonical_pair, EdgeWord, Side};
use spheretile::geometry::TriangleGeometry;
use spheretile::tiling::{
    generate_f16_sporadic, generate_f36_rational, generate_f8_sporadic, generate_one_layer, generate_subdivided_quad, generate_two_layer,
    generate_two_layer_rotation, Offset, QuadVariant, TilingComplex,
};
use spheretile::vertices::{Kind, VertexVector};

// ---- collinearity ----

fn dot(x: &[Rational; 3], y: &[Rational; 3]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn cross(x: &[Rational; 3], y: &[Rational; 3]) -> [Rational; 3] {
    [&x[1] * &y[2] - &x[2] * &y[1], &x[2] * &y[0] - &x[0] * &y[2], &x[0] * &y[1] - &x[1] * &y[0]]
}

fn vec3(n: [u32; 3]) -> [Rational; 3] {
    n.map(|k| int(k as i64))
}

/// The solution line `θ0 + s·d` of `m·θ = 2`, `(1,1,1)·θ = 1 + 4/f`.
pub fn solution_line(m: [u32; 3], f: u64) -> ([Rational; 3], [Rational; 3]) {
    let m = vec3(m);
    let u = vec3([1, 1, 1]);
    let sum = int(1) + rat(4, f as i64);
    let (mm, uu, mu) = (dot(&m, &m), dot(&u, &u), dot(&m, &u));
    let det = &mm * &uu - &mu * &mu;
    let p = (int(2) * &uu - &sum * &mu) / &det;
    let q = (&sum * &mm - int(2) * &mu) / &det;
    let theta0 = [0, 1, 2].map(|i| &p * &m[i] + &q * &u[i]);
    (theta0, cross(&m, &u))
}

/// `0 < γ < β < α < 1` somewhere on the seed's solution line.
pub fn ordered_feasible(m: [u32; 3], f: u64) -> bool {
    let (t0, d) = solution_line(m, f);
    // each constraint reads  c·θ0 + s·(c·d) > k
    let rows: [([i64; 3], i64); 4] = [([0, 0, 1], 0), ([0, 1, -1], 0), ([1, -1, 0], 0), ([-1, 0, 0], -1)];
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for (c, k) in rows {
        let c = c.map(|x| int(x));
        let base = dot(&c, &t0) - int(k);
        let slope = dot(&c, &d);
        if slope == int(0) {
            if base <= int(0) {
                return false;
            }
        } else {
            let bound = -&base / &slope;
            if slope > int(0) {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => l < h,
        _ => true,
    }
}

/// Every vertex forced by the seed at `f`: exponent vectors of degree at
/// most `max_degree` whose angle sum is 2 along the whole solution line, plus
/// their even halves. Empty when the seed cannot occur.
pub fn brute_force_avc(m: [u32; 3], f: u64, max_degree: u32) -> BTreeSet<VertexVector> {
    let mut out = BTreeSet::new();
    if !ordered_feasible(m, f) {
        return out;
    }
    let (t0, _) = solution_line(m, f);
    // the line's direction m × (1,1,1) in integers, for a cheap first test
    let mi = m.map(|k| k as i64);
    let d = [mi[1] - mi[2], mi[2] - mi[0], mi[0] - mi[1]];
    for n1 in 0..=max_degree {
        for n2 in 0..=max_degree - n1 {
            for n3 in 0..=max_degree - n1 - n2 {
                if n1 as i64 * d[0] + n2 as i64 * d[1] + n3 as i64 * d[2] != 0 {
                    continue;
                }
                if dot(&vec3([n1, n2, n3]), &t0) == int(2) {
                    let v = VertexVector::full(n1, n2, n3);
                    out.insert(v);
                    if let Some(h) = v.halved() {
                        out.insert(h);
                    }
                }
            }
        }
    }
    out
}

pub fn kinds(set: &BTreeSet<VertexVector>, kind: Kind) -> usize {
    set.iter().filter(|v| v.kind == kind).count()
}

// ---- extended edges ----

const N: i64 = 24;

/// Grid points `(a, b, c)/N` with `1 > a > b > c > 0` and `b + c > a`.
fn grid() -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in 1..N {
        for b in 1..a {
            for c in 1..b {
                if b + c > a {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn len(w: &[Side], p: &[i64; 3]) -> i64 {
    w.iter().map(|s| p[s.index()]).sum()
}

fn prefixes(w: &[Side], p: &[i64; 3]) -> Vec<i64> {
    (1..w.len()).map(|i| len(&w[..i], p)).collect()
}

fn words(max_len: usize) -> Vec<Vec<Side>> {
    let mut out: Vec<Vec<Side>> = vec![vec![]];
    let mut all = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &out {
            for s in Side::ALL {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        out = next;
    }
    all
}

/// Word pairs with some grid point of equal total length, no shared internal
/// breakpoint, and no side carrying α (any side but `a`) between two half
/// vertices.
pub fn brute_force_edges(k_max: u32) -> BTreeSet<(EdgeWord, EdgeWord)> {
    let pts = grid();
    let ws: Vec<Vec<Side>> =
        words(k_max as usize + 4).into_iter().filter(|w| w.len() <= 2 || w[1..w.len() - 1].iter().all(|&s| s == Side::A)).collect();
    let na = |w: &[Side]| w.iter().filter(|&&s| s == Side::A).count() as u32;
    let mut found = BTreeSet::new();
    for t in &ws {
        for b in &ws {
            if t == b || na(t).min(na(b)) > k_max {
                continue;
            }
            let ok = pts.iter().any(|p| {
                len(t, p) == len(b, p) && {
                    let pt = prefixes(t, p);
                    prefixes(b, p).iter().all(|x| !pt.contains(x))
                }
            });
            if ok {
                found.insert(canonical_pair(&EdgeWord(t.clone()), &EdgeWord(b.clone())));
            }
        }
    }
    found
}

// ---- tilings ----

pub struct Case {
    pub name: String,
    pub complex: TilingComplex,
    pub geometry: TriangleGeometry,
}

fn case(name: String, complex: TilingComplex, geometry: TriangleGeometry) -> Case {
    Case { name, complex, geometry }
}

fn from_triple(c: &TilingComplex, t: f64) -> TriangleGeometry {
    TriangleGeometry::from_triple(&c.angle_triple().expect("angles record"), t).expect("valid triangle")
}

/// Every generator output with a parameter at which it should realize.
pub fn tiling_suite() -> Vec<Case> {
    let mut out = Vec::new();
    for k in 2..=12 {
        let g = TriangleGeometry::lune(2.0 * PI / k as f64, 0.4 * PI).unwrap();
        out.push(case(format!("one-layer k={k}"), generate_one_layer(k, None).unwrap(), g));
    }
    for k in [4, 6, 8] {
        let g = TriangleGeometry::lune(2.0 * PI / k as f64, 0.4 * PI).unwrap();
        out.push(case(format!("one-layer k={k} offset b/2"), generate_one_layer(k, Some(Offset::half())).unwrap(), g));
    }
    let two = |n: u32| TriangleGeometry::from_angles(0.6 * PI, 0.4 * PI, 2.0 * PI / n as f64).unwrap();
    for n in 3..=12 {
        out.push(case(format!("two-layer n={n}"), generate_two_layer(n).unwrap(), two(n)));
    }
    for n in [4, 6, 8] {
        for (label, off) in [("b/2", Offset::half()), ("b", Offset(rat(1, 1)))] {
            let c = generate_two_layer_rotation(n, off).unwrap();
            out.push(case(format!("two-layer n={n} rotated {label}"), c, two(n)));
        }
    }
    for t in [0.26, 0.30, 0.33] {
        let c = generate_f8_sporadic();
        let g = from_triple(&c, t);
        out.push(case(format!("f=8 γ={t}π"), c, g));
    }
    let c = generate_f16_sporadic();
    let g = from_triple(&c, 2f64.sqrt().atan() / PI);
    out.push(case("f=16".into(), c, g));
    let c = generate_f36_rational();
    let g = from_triple(&c, 0.0);
    out.push(case("f=36".into(), c, g));
    for v in 1..=4 {
        let c = generate_subdivided_quad(10, QuadVariant::from_index(v).unwrap()).unwrap();
        let g = from_triple(&c, 0.0);
        out.push(case(format!("quad f′=10 variant {v}"), c, g));
    }
    out
}
