use std::collections::BTreeSet;
use std::f64::consts::PI;

use proptest::prelude::*;

use spheretile::angles::{rat, AngleTriple, IntervalBound, Ordered};
use spheretile::counting::{check_euler, deficit_sides, VertexStats};
use spheretile::edges::{family_pattern, match_words, Discipline, EdgeWord, ExtendedEdgePattern, LengthRelationSet, Side};
use spheretile::geometry::sides_from_angles;
use spheretile::tiling::{generate_one_layer, generate_two_layer, generate_two_layer_rotation, Offset, TilingComplex};
use spheretile::vertices::{enumerate_vertices, Avc, AvcEntry, Count, FCond, Kind, VertexVector};

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn stats() -> impl Strategy<Value = (VertexStats, u32)> {
    (2u64..300, 1u32..=12, prop::collection::vec(0u64..5, 26), prop::collection::vec(0u64..5, 14)).prop_map(|(f, l, full, half)| {
        let mut s = VertexStats::new(f);
        for (k, n) in (3..).zip(full) {
            s = s.with_full(k, n);
        }
        for (k, n) in (1..).zip(half) {
            s = s.with_half(k, n);
        }
        (s.with_full(2 * l, 1), l)
    })
}

/// `π > α > β > γ > 0` with `α + β + γ > π` and the three corner inequalities.
fn scalene() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.001f64..1.0, 0.001f64..1.0, 0.001f64..1.0)
        .prop_map(|(x, y, z)| {
            let mut v = [x, y, z];
            v.sort_by(|p, q| q.total_cmp(p));
            (v[0], v[1], v[2])
        })
        .prop_filter("convex scalene triangle", |&(a, b, g)| {
            a - b > 1e-6 && b - g > 1e-6 && a + b + g > 1.0 + 1e-6 && a + b < 1.0 + g - 1e-6 && a + g < 1.0 + b && b + g < 1.0 + a
        })
}

fn side() -> impl Strategy<Value = Side> {
    prop::sample::select(Side::ALL.to_vec())
}

fn word() -> impl Strategy<Value = EdgeWord> {
    prop::collection::vec(side(), 1..6).prop_map(EdgeWord)
}

fn entry() -> impl Strategy<Value = AvcEntry> {
    (0u32..20, 0u32..20, 0u32..20, any::<bool>(), prop::option::of(0u64..50)).prop_map(|(x, y, z, full, n)| AvcEntry {
        vertex: VertexVector { n: [x, y, z], kind: if full { Kind::Full } else { Kind::Half } },
        count: n.map_or(Count::Unconstrained, Count::Exact),
    })
}

fn vertex_set(angles: [(i64, i64); 3], f: u64) -> BTreeSet<([u32; 3], Kind)> {
    let [x, y, z] = angles.map(|(p, q)| rat(p, q));
    let t = AngleTriple::rational(x, y, z, f, Ordered::Unordered).unwrap();
    let mut out = BTreeSet::new();
    for kind in [Kind::Full, Kind::Half] {
        out.extend(enumerate_vertices(&t, &IntervalBound::unit(), kind).unwrap().iter().map(|v| (v.n, v.kind)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn replacing_a_full_vertex_by_two_halves_keeps_the_deficit((s, l) in stats()) {
        let split = s.split_full(l).unwrap();
        prop_assert_eq!(split.f, s.f);
        prop_assert_eq!(deficit_sides(&split), deficit_sides(&s));
        prop_assert_eq!(check_euler(&split).pass(), check_euler(&s).pass());
    }

    #[test]
    fn larger_corners_face_longer_sides((a, b, g) in scalene()) {
        let (x, y, z) = sides_from_angles(a * PI, b * PI, g * PI).unwrap();
        prop_assert!(x > y && y > z, "{x} {y} {z}");
    }

    #[test]
    fn relabeling_corners_relabels_vertices(num in (2i64..=9, 2i64..=9), f in 6u64..40, p in 0usize..6) {
        // γ = 1 + 4/f − (x + y)/12 over the denominator 12f
        let f12 = 12 * f as i64;
        let ga = f12 + 48 - f as i64 * (num.0 + num.1);
        prop_assume!(6 * ga >= f12 && ga < f12);
        let base = [(num.0, 12), (num.1, 12), (ga, f12)];
        let p = PERMS[p];
        let mut moved = base;
        for i in 0..3 {
            moved[p[i]] = base[i];
        }
        let want: BTreeSet<_> = vertex_set(base, f)
            .into_iter()
            .map(|(n, k)| {
                let mut m = [0; 3];
                for i in 0..3 {
                    m[p[i]] = n[i];
                }
                (m, k)
            })
            .collect();
        prop_assert_eq!(vertex_set(moved, f), want);
    }

    #[test]
    fn matching_ignores_order_and_direction(t in word(), b in word()) {
        let rel = LengthRelationSet::unordered();
        let m = match_words(&t, &b, &rel, Discipline::NoAlpha).unwrap().is_match();
        prop_assert_eq!(match_words(&b, &t, &rel, Discipline::NoAlpha).unwrap().is_match(), m);
        prop_assert_eq!(match_words(&t.reversed(), &b.reversed(), &rel, Discipline::NoAlpha).unwrap().is_match(), m);
    }

    #[test]
    fn avc_records_round_trip(entries in prop::collection::vec(entry(), 0..12), f in 1u64..400) {
        let avc = Avc::new(FCond::Exact(f), entries);
        prop_assert_eq!(Avc::parse_records(FCond::Exact(f), &avc.records()).unwrap(), avc);
    }

    #[test]
    fn edge_records_round_trip(family in 1u8..=7, k in 0u32..6) {
        let p = family_pattern(family, k);
        prop_assume!(p.is_some());
        let p = p.unwrap();
        prop_assert_eq!(ExtendedEdgePattern::parse_record(&p.record()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tiling_text_round_trips(k in 2u32..10, n in 3u32..10, q in 1i64..4) {
        let mut list = vec![generate_one_layer(k, None).unwrap(), generate_two_layer(n).unwrap()];
        if n % 2 == 0 {
            list.push(generate_two_layer_rotation(n, Offset(rat(q, 4))).unwrap());
        }
        for c in list {
            prop_assert_eq!(TilingComplex::parse(&c.to_text()).unwrap(), c);
        }
    }
}
