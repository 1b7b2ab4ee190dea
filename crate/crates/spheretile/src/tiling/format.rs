//! Line-oriented interchange format.
//!
//! ```text
//! angles 1 - 1/2*t, 1/2 - 1/2*t, t
//! lengths unordered a+b=1
//! tile 0 direct
//! seg 0.a c b
//! glue 0.a.0 1.c.0
//! vertex full 0.B,1.B,2.B
//! vertex half 0.A host=1.a
//! ```
//!
//! `seg` lists the segment lengths of a split side in the tile's
//! counterclockwise direction; unsplit sides have no record. Blank lines and
//! lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::angles::lp::{Constraint, Rel};
use crate::edges::{render_relation, Corner, Side};
use crate::vertices::Kind;

use super::{CornerRef, LengthBase, LengthExpr, SegRef, SideRef, Tile, TilingComplex, TilingError, Vertex};

fn tile_id(s: &str) -> Result<u32, String> {
    s.parse().map_err(|_| format!("bad tile id {s:?}"))
}

fn side(s: &str) -> Result<Side, String> {
    let mut it = s.chars();
    match (it.next().and_then(Side::from_char), it.next()) {
        (Some(x), None) => Ok(x),
        _ => Err(format!("bad side {s:?}")),
    }
}

impl FromStr for CornerRef {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (t, c) = s.split_once('.').ok_or_else(|| format!("bad corner {s:?}"))?;
        let corner = match c {
            "A" => Corner::Alpha,
            "B" => Corner::Beta,
            "C" => Corner::Gamma,
            _ => return Err(format!("bad corner {s:?}")),
        };
        Ok(CornerRef { tile: tile_id(t)?, corner })
    }
}

impl FromStr for SideRef {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (t, x) = s.split_once('.').ok_or_else(|| format!("bad side {s:?}"))?;
        Ok(SideRef { tile: tile_id(t)?, side: side(x)? })
    }
}

impl FromStr for SegRef {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split('.').collect();
        let [t, x, i] = parts.as_slice() else {
            return Err(format!("bad segment {s:?}"));
        };
        let index = i.parse().map_err(|_| format!("bad segment index {s:?}"))?;
        Ok(SegRef::new(tile_id(t)?, side(x)?, index))
    }
}

/// Parses `a=2c`, `a+b=1`, `a>b`, `b<1`, `a≥b`, `c<=1/2`.
pub fn parse_relation(s: &str) -> Result<Constraint, String> {
    let ops: [(&str, Rel, bool); 7] = [
        (">=", Rel::Ge, false),
        ("<=", Rel::Ge, true),
        ("≥", Rel::Ge, false),
        ("≤", Rel::Ge, true),
        ("=", Rel::Eq, false),
        (">", Rel::Gt, false),
        ("<", Rel::Gt, true),
    ];
    for (op, rel, flip) in ops {
        if let Some((l, r)) = s.split_once(op) {
            let l: LengthExpr = l.parse()?;
            let r: LengthExpr = r.parse()?;
            let mut d = if flip { &r - &l } else { &l - &r };
            if rel == Rel::Eq && d.coeffs.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
                d = -&d;
            }
            return Ok(d.constraint(rel));
        }
    }
    Err(format!("bad relation {s:?}"))
}

pub fn parse_base(s: &str) -> Result<LengthBase, String> {
    match s {
        "free" => Ok(LengthBase::Free),
        "unordered" => Ok(LengthBase::Unordered),
        "scalene" => Ok(LengthBase::Scalene),
        _ => Err(format!("bad length base {s:?}")),
    }
}

impl TilingComplex {
    pub fn parse(text: &str) -> Result<TilingComplex, TilingError> {
        let mut tiles = Vec::new();
        let mut segments = BTreeMap::new();
        let mut gluing = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut angles = None;
        let mut length_base = LengthBase::Unordered;
        let mut relations = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fail = |msg: String| TilingError::Parse { line: n + 1, msg };
            let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
            let toks: Vec<&str> = rest.split_whitespace().collect();
            match head {
                "angles" => {
                    let parts: Vec<String> = rest.split(',').map(|p| p.trim().to_string()).collect();
                    let arr: [String; 3] = parts.try_into().map_err(|_| fail("angles needs three values".into()))?;
                    for p in &arr {
                        p.parse::<crate::angles::AngleExpr>().map_err(|e| fail(e.to_string()))?;
                    }
                    angles = Some(arr);
                }
                "lengths" => {
                    let (b, rels) = toks.split_first().ok_or_else(|| fail("lengths needs a base".into()))?;
                    length_base = parse_base(b).map_err(fail)?;
                    relations = rels.iter().map(|r| parse_relation(r)).collect::<Result<_, _>>().map_err(fail)?;
                }
                "tile" => {
                    let [id, ch] = toks.as_slice() else {
                        return Err(fail("tile needs id and chirality".into()));
                    };
                    tiles.push(Tile { id: tile_id(id).map_err(fail)?, chirality: ch.parse().map_err(fail)? });
                }
                "seg" => {
                    let (owner, lens) = toks.split_first().ok_or_else(|| fail("seg needs a side".into()))?;
                    let owner: SideRef = owner.parse().map_err(fail)?;
                    let lens = lens.iter().map(|l| l.parse::<LengthExpr>()).collect::<Result<Vec<_>, _>>().map_err(fail)?;
                    if lens.len() < 2 {
                        return Err(fail("seg needs at least two lengths".into()));
                    }
                    if segments.insert(owner, lens).is_some() {
                        return Err(fail(format!("side {owner} split twice")));
                    }
                }
                "glue" => {
                    let [x, y] = toks.as_slice() else {
                        return Err(fail("glue needs two segments".into()));
                    };
                    let x: SegRef = x.parse().map_err(fail)?;
                    let y: SegRef = y.parse().map_err(fail)?;
                    for (p, q) in [(x, y), (y, x)] {
                        if gluing.insert(p, q).is_some_and(|old| old != q) {
                            return Err(fail(format!("segment {p} glued twice")));
                        }
                    }
                }
                "vertex" => {
                    let kind = match toks.first() {
                        Some(&"full") => Kind::Full,
                        Some(&"half") => Kind::Half,
                        _ => return Err(fail("vertex needs full or half".into())),
                    };
                    let corners = toks
                        .get(1)
                        .ok_or_else(|| fail("vertex needs corners".into()))?
                        .split(',')
                        .map(CornerRef::from_str)
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(fail)?;
                    let host = match toks.get(2) {
                        Some(h) => {
                            let h = h.strip_prefix("host=").ok_or_else(|| fail(format!("bad host {h:?}")))?;
                            Some(h.parse::<SideRef>().map_err(fail)?)
                        }
                        None => None,
                    };
                    if toks.len() > 3 {
                        return Err(fail("trailing tokens".into()));
                    }
                    vertices.push(Vertex { kind, corners, host });
                }
                other => return Err(fail(format!("unknown record {other:?}"))),
            }
        }
        let mut out = TilingComplex { tiles, segments, gluing, vertices, angles, length_base, relations };
        out.normalize();
        Ok(out)
    }

    /// Canonical text; `parse` of it gives back an equal complex.
    pub fn to_text(&self) -> String {
        let mut c = self.clone();
        c.normalize();
        let mut s = String::new();
        if let Some([x, y, z]) = &c.angles {
            let _ = writeln!(s, "angles {x}, {y}, {z}");
        }
        let _ = write!(s, "lengths {}", c.length_base.as_str());
        for r in &c.relations {
            let _ = write!(s, " {}", render_relation(r));
        }
        s.push('\n');
        for t in &c.tiles {
            let _ = writeln!(s, "tile {} {}", t.id, t.chirality.as_str());
        }
        for (k, v) in &c.segments {
            let lens: Vec<String> = v.iter().map(|l| l.to_string()).collect();
            let _ = writeln!(s, "seg {k} {}", lens.join(" "));
        }
        for (x, y) in &c.gluing {
            if x < y {
                let _ = writeln!(s, "glue {x} {y}");
            }
        }
        for v in &c.vertices {
            let corners: Vec<String> = v.corners.iter().map(|c| c.to_string()).collect();
            let _ = write!(s, "vertex {} {}", v.kind.as_str(), corners.join(","));
            if let Some(h) = v.host {
                let _ = write!(s, " host={h}");
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
angles 1, 2/3, 2/3
lengths free a=1 b+c=1
tile 0 direct
tile 1 direct
tile 2 direct
seg 0.a c b
seg 1.a c b
seg 2.a c b
glue 0.a.0 2.c.0
glue 0.a.1 2.b.0
glue 0.b.0 1.a.1
glue 0.c.0 1.a.0
glue 1.b.0 2.a.1
glue 1.c.0 2.a.0
vertex half 0.A host=1.a
vertex full 0.B,1.B,2.B
vertex full 0.C,2.C,1.C
vertex half 1.A host=2.a
vertex half 2.A host=0.a
";

    #[test]
    fn round_trip() {
        let c = TilingComplex::parse(SAMPLE).unwrap();
        assert_eq!(c.to_text(), SAMPLE);
        assert_eq!(TilingComplex::parse(&c.to_text()).unwrap(), c);
        assert_eq!(c.derive_vertices().map(|v| v.len()), Ok(5));
    }

    #[test]
    fn parse_errors() {
        for bad in ["tile x direct", "tile 0 sideways", "glue 0.a.0", "vertex full", "seg 0.a b", "frob 1"] {
            assert!(matches!(TilingComplex::parse(bad), Err(TilingError::Parse { line: 1, .. })), "{bad}");
        }
        let twice = "glue 0.a.0 1.a.0\nglue 0.a.0 2.a.0\n";
        assert!(matches!(TilingComplex::parse(twice), Err(TilingError::Parse { line: 2, .. })));
    }

    #[test]
    fn relations() {
        let r = parse_relation("a+b=1").unwrap();
        assert_eq!(render_relation(&r), "a+b=1");
        let r = parse_relation("b<1").unwrap();
        assert_eq!(render_relation(&r), "b<1");
        assert_eq!(render_relation(&parse_relation("a>b").unwrap()), "a>b");
        assert!(parse_relation("a~b").is_err());
    }
}
