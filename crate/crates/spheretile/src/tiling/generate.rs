//! Generators for the explicit tiling families.

use num_traits::{One, Zero};

use crate::angles::{rat, Rational};
use crate::edges::Side;

use super::build::{ComplexBuilder, Piece};
use super::format::parse_relation;
use super::{Chirality, LengthBase, LengthExpr, TilingComplex, TilingError};

/// Rotation of a hemisphere along its boundary great circle by `t·b`,
/// `0 < t ≤ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Offset(pub Rational);

impl Offset {
    pub fn half() -> Self {
        Offset(rat(1, 2))
    }

    fn length(&self) -> Result<LengthExpr, TilingError> {
        if self.0 <= Rational::zero() || self.0 > Rational::one() {
            return Err(TilingError::InvalidModification(format!("offset {}·b must lie in (0, b]", self.0)));
        }
        Ok(LengthExpr::side(Side::B).scale(&self.0))
    }
}

fn rels(list: &[&str]) -> Vec<crate::angles::lp::Constraint> {
    list.iter().map(|r| parse_relation(r).expect("static relation")).collect()
}

fn angle_strings(a: &str, b: &str, c: &str) -> Option<[String; 3]> {
    Some([a.to_string(), b.to_string(), c.to_string()])
}

/// `k` lunes with `α = π` on one meridian and `β`, `γ` at the poles. With
/// an offset (even `k` only) the hemisphere of tiles `k/2..k` is rotated.
pub fn generate_one_layer(k: u32, offset: Option<Offset>) -> Result<TilingComplex, TilingError> {
    if k < 2 {
        return Err(TilingError::TooFew(format!("one-layer map needs k ≥ 2, got {k}")));
    }
    if offset.is_some() && k % 2 == 1 {
        return Err(TilingError::InvalidModification(format!("rotation needs an even k, got {k}")));
    }
    let mut b = ComplexBuilder::new([rat(1, 1), rat(3, 7), rat(4, 7)]);
    for i in 0..k {
        b.tile(i, Chirality::Direct);
    }
    let east = |i: u32| [Piece::new(i, Side::C), Piece::new(i, Side::B)];
    let zero = LengthExpr::zero();
    let h = k / 2;
    for i in 0..k {
        let next = (i + 1) % k;
        let on_seam = offset.is_some() && (next == 0 || next == h);
        if !on_seam {
            b.line(&[Piece::new(next, Side::A)], &east(i), &zero, false)?;
        }
    }
    if let Some(off) = &offset {
        // the seam circle runs south along meridian 0, north along meridian k/2
        let top = [Piece::new(0, Side::A), Piece::new(h - 1, Side::B), Piece::new(h - 1, Side::C)];
        let bottom = [Piece::new(k - 1, Side::C), Piece::new(k - 1, Side::B), Piece::new(h, Side::A)];
        b.line(&top, &bottom, &off.length()?, true)?;
    }
    let beta = format!("{}", rat(2, k as i64));
    b.finish(angle_strings("1", &beta, &beta), LengthBase::Free, rels(&["a=1", "b+c=1"]))
}

fn two_layer_builder(n: u32) -> ComplexBuilder {
    let mut b = ComplexBuilder::new([rat(4, 7), rat(3, 7), rat(1, 2)]);
    for i in 0..2 * n {
        b.tile(i, Chirality::Direct);
    }
    b
}

fn two_layer_finish(b: &ComplexBuilder, n: u32) -> Result<TilingComplex, TilingError> {
    let gamma = format!("{}", rat(2, n as i64));
    b.finish(angle_strings("t", "1 - t", &gamma), LengthBase::Unordered, rels(&["a+b=1", "a>b"]))
}

/// Lune `i` holds tile `2i` (γ at the north pole) and tile `2i+1` (γ at the
/// south pole); `α`, on the western meridian of the upper tile, exceeds π/2.
fn two_layer_lines(b: &mut ComplexBuilder, n: u32, skip: &[u32]) -> Result<(), TilingError> {
    let zero = LengthExpr::zero();
    for i in 0..n {
        b.line(&[Piece::new(2 * i, Side::C)], &[Piece::new(2 * i + 1, Side::C)], &zero, false)?;
        let next = (i + 1) % n;
        if skip.contains(&next) {
            continue;
        }
        let west = [Piece::new(2 * next, Side::B), Piece::new(2 * next + 1, Side::A)];
        let east = [Piece::new(2 * i, Side::A), Piece::new(2 * i + 1, Side::B)];
        b.line(&west, &east, &zero, false)?;
    }
    Ok(())
}

pub fn generate_two_layer(n: u32) -> Result<TilingComplex, TilingError> {
    if n < 3 {
        return Err(TilingError::TooFew(format!("two-layer map needs n ≥ 3, got {n}")));
    }
    let mut b = two_layer_builder(n);
    two_layer_lines(&mut b, n, &[])?;
    two_layer_finish(&b, n)
}

/// The hemisphere of lunes `n/2..n` rotated along the seam great circle.
pub fn generate_two_layer_rotation(n: u32, offset: Offset) -> Result<TilingComplex, TilingError> {
    if n < 3 {
        return Err(TilingError::TooFew(format!("two-layer map needs n ≥ 3, got {n}")));
    }
    if n % 2 == 1 {
        return Err(TilingError::InvalidModification(format!("rotation needs an even n, got {n}")));
    }
    let h = n / 2;
    let mut b = two_layer_builder(n);
    two_layer_lines(&mut b, n, &[0, h])?;
    let top = [Piece::new(0, Side::B), Piece::new(1, Side::A), Piece::new(2 * h - 1, Side::B), Piece::new(2 * h - 2, Side::A)];
    let bottom =
        [Piece::new(2 * n - 2, Side::A), Piece::new(2 * n - 1, Side::B), Piece::new(2 * h + 1, Side::A), Piece::new(2 * h, Side::B)];
    b.line(&top, &bottom, &offset.length()?, true)?;
    two_layer_finish(&b, n)
}

fn from_data(name: &str, text: &str) -> TilingComplex {
    let c = TilingComplex::parse(text).unwrap_or_else(|e| panic!("data file {name}: {e}"));
    c.with_derived_vertices().unwrap_or_else(|e| panic!("data file {name}: {e}"))
}

/// `T(4α²γ; 4β²γ)` with `α = π − γ/2`, `β = π/2 − γ/2`.
pub fn generate_f8_sporadic() -> TilingComplex {
    from_data("f8.tiling", include_str!("../../data/f8.tiling"))
}

/// `T(8α²βγ; 4β²γ²)` for `(3π/4, arctan√2, π/2 − arctan√2)`.
pub fn generate_f16_sporadic() -> TilingComplex {
    from_data("f16.tiling", include_str!("../../data/f16.tiling"))
}

/// `T(6α⁴, 2β⁶, 6βγ⁶; 6α², 6β³)` for `(1/2, 1/3, 5/18)`.
pub fn generate_f36_rational() -> TilingComplex {
    from_data("f36.tiling", include_str!("../../data/f36.tiling"))
}

/// Subdivisions of the quadrilateral tilings with `f′ = 10`: the earth map
/// and its three modifications.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuadVariant {
    EarthMap,
    Modified1,
    Modified2,
    Modified3,
}

impl QuadVariant {
    pub fn from_index(i: u32) -> Option<Self> {
        [QuadVariant::EarthMap, QuadVariant::Modified1, QuadVariant::Modified2, QuadVariant::Modified3]
            .get(i.checked_sub(1)? as usize)
            .copied()
    }
}

pub fn generate_subdivided_quad(f_prime: u32, variant: QuadVariant) -> Result<TilingComplex, TilingError> {
    if variant != QuadVariant::EarthMap && f_prime % 6 != 4 {
        return Err(TilingError::Unsupported(format!("modifications need f′ ≡ 4 mod 6, got {f_prime}")));
    }
    if f_prime != 10 {
        return Err(TilingError::Unsupported(format!("only f′ = 10 is available, got {f_prime}")));
    }
    let (name, text) = match variant {
        QuadVariant::EarthMap => ("quad10-1.tiling", include_str!("../../data/quad10-1.tiling")),
        QuadVariant::Modified1 => ("quad10-2.tiling", include_str!("../../data/quad10-2.tiling")),
        QuadVariant::Modified2 => ("quad10-3.tiling", include_str!("../../data/quad10-3.tiling")),
        QuadVariant::Modified3 => ("quad10-4.tiling", include_str!("../../data/quad10-4.tiling")),
    };
    Ok(from_data(name, text))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;
    use std::f64::consts::PI;

    use super::*;
    use crate::geometry::{perturb_gluing, realize_tiling, TriangleGeometry};
    use crate::tiling::{verify, CheckGroup};

    fn check(c: &TilingComplex) {
        let angles = c.angle_triple().unwrap();
        let report = verify(c, &angles, &c.length_relations());
        assert!(report.pass(), "{report}");
    }

    fn lune_geometry(k: u32) -> TriangleGeometry {
        TriangleGeometry::lune(2.0 * PI / k as f64, 0.4 * PI).unwrap()
    }

    fn two_layer_geometry(n: u32) -> TriangleGeometry {
        TriangleGeometry::from_angles(0.6 * PI, 0.4 * PI, 2.0 * PI / n as f64).unwrap()
    }

    #[test]
    fn one_layer() {
        for k in 2..=12 {
            let c = generate_one_layer(k, None).unwrap();
            assert_eq!(c.f(), k as u64);
            check(&c);
            let r = realize_tiling(&c, &lune_geometry(k)).unwrap();
            r.check(1e-8).unwrap();
        }
        for k in [2, 4, 6, 8] {
            for off in [Offset::half(), Offset(rat(1, 3)), Offset(rat(1, 1))] {
                let c = generate_one_layer(k, Some(off)).unwrap();
                check(&c);
                realize_tiling(&c, &lune_geometry(k)).unwrap().check(1e-8).unwrap();
            }
        }
    }

    #[test]
    fn one_layer_errors() {
        assert!(matches!(generate_one_layer(1, None), Err(TilingError::TooFew(_))));
        assert!(matches!(generate_one_layer(5, Some(Offset::half())), Err(TilingError::InvalidModification(_))));
        assert!(matches!(generate_one_layer(4, Some(Offset(rat(0, 1)))), Err(TilingError::InvalidModification(_))));
        assert!(matches!(generate_one_layer(4, Some(Offset(rat(3, 2)))), Err(TilingError::InvalidModification(_))));
    }

    #[test]
    fn two_layer() {
        for n in 3..=12 {
            let c = generate_two_layer(n).unwrap();
            assert_eq!(c.f(), 2 * n as u64);
            check(&c);
            realize_tiling(&c, &two_layer_geometry(n)).unwrap().check(1e-8).unwrap();
        }
        for n in [4, 6, 8] {
            for off in [Offset::half(), Offset(rat(1, 1))] {
                let c = generate_two_layer_rotation(n, off).unwrap();
                check(&c);
                realize_tiling(&c, &two_layer_geometry(n)).unwrap().check(1e-8).unwrap();
            }
        }
    }

    #[test]
    fn two_layer_errors() {
        assert!(matches!(generate_two_layer(2), Err(TilingError::TooFew(_))));
        assert!(matches!(generate_two_layer_rotation(3, Offset::half()), Err(TilingError::InvalidModification(_))));
    }

    #[test]
    fn broken_complexes_fail() {
        let c = generate_two_layer(4).unwrap();
        let angles = c.angle_triple().unwrap();
        let cut = c.without_tile(3);
        let report = verify(&cut, &angles, &cut.length_relations());
        assert!(!report.group_pass(CheckGroup::Counting));

        let r = realize_tiling(&perturb_gluing(&c), &two_layer_geometry(4)).unwrap();
        assert!(r.closure_residual > 1e-3, "{}", r.closure_residual);
    }

    #[test]
    fn mirror_and_relabel() {
        let c = generate_two_layer_rotation(6, Offset::half()).unwrap();
        let m = c.mirrored();
        check(&m);
        assert_eq!(m.avc(), c.avc());
        let map: BTreeMap<u32, u32> = c.tiles.iter().map(|t| (t.id, 100 - t.id)).collect();
        let r = c.relabeled(&map);
        check(&r);
        assert_eq!(r.avc(), c.avc());
        realize_tiling(&m, &two_layer_geometry(6)).unwrap().check(1e-8).unwrap();
    }

    #[test]
    fn sporadic() {
        let cases = [
            (generate_f8_sporadic(), 0.3, "T(4α²γ; 4β²γ)"),
            (generate_f16_sporadic(), 2f64.sqrt().atan() / PI, "T(8α²βγ; 4β²γ²)"),
            (generate_f36_rational(), 0.0, "T(6α⁴, 2β⁶, 6βγ⁶; 6α², 6β³)"),
        ];
        for (c, t, avc) in cases {
            check(&c);
            assert_eq!(c.avc().notation(), avc);
            let g = TriangleGeometry::from_triple(&c.angle_triple().unwrap(), t).unwrap();
            realize_tiling(&c, &g).unwrap().check(1e-8).unwrap();
        }
    }

    #[test]
    fn subdivided_quad() {
        let avcs = ["T(10α³γ, 2γ¹⁰; 10β³)", "T(8α³γ, 2α²γ⁴, 2αγ⁷; 10β³)", "T(6α³γ, 6α²γ⁴; 10β³)", "T(6α³γ, 2β⁶, 6α²γ⁴; 6β³)"];
        for (i, avc) in (1..=4).zip(avcs) {
            let c = generate_subdivided_quad(10, QuadVariant::from_index(i).unwrap()).unwrap();
            assert_eq!(c.f(), 30);
            check(&c);
            assert_eq!(c.avc().notation(), avc);
            let g = TriangleGeometry::from_triple(&c.angle_triple().unwrap(), 0.0).unwrap();
            realize_tiling(&c, &g).unwrap().check(1e-8).unwrap();
        }
        assert!(generate_subdivided_quad(12, QuadVariant::from_index(1).unwrap()).is_err());
        assert!(QuadVariant::from_index(5).is_none());
    }

    #[test]
    fn text_round_trip() {
        for c in [generate_one_layer(6, Some(Offset::half())).unwrap(), generate_two_layer_rotation(4, Offset(rat(1, 3))).unwrap()] {
            let back = TilingComplex::parse(&c.to_text()).unwrap();
            assert_eq!(back, c);
        }
    }
}
