//! Vertex exponent vectors, the collinearity line through a seed vertex, and
//! AVC derivation.

pub mod symbolic;
pub mod tables;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::angles::lp::{Rel, System};
use crate::angles::{angle_sum, int, AngleExpr, AngleTriple, IntervalBound, Ordered, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Full,
    Half,
}

impl Kind {
    /// Corner sum in units of π.
    pub fn target(self) -> i64 {
        match self {
            Kind::Full => 2,
            Kind::Half => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Full => "full",
            Kind::Half => "half",
        }
    }
}

impl FromStr for Kind {
    type Err = VertexError;
    fn from_str(s: &str) -> Result<Self, VertexError> {
        match s {
            "full" => Ok(Kind::Full),
            "half" => Ok(Kind::Half),
            _ => Err(VertexError::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VertexError {
    #[error("angle {0} has no positive lower bound on the interval")]
    UnboundedEnumeration(char),
    #[error("seed {0} is proportional to (1,1,1)")]
    DegenerateSeed(String),
    #[error("seed must be a full vertex")]
    HalfSeed,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// `α^n1 β^n2 γ^n3` as a full or half vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexVector {
    pub n: [u32; 3],
    pub kind: Kind,
}

impl VertexVector {
    pub fn full(n1: u32, n2: u32, n3: u32) -> Self {
        VertexVector { n: [n1, n2, n3], kind: Kind::Full }
    }

    pub fn half(n1: u32, n2: u32, n3: u32) -> Self {
        VertexVector { n: [n1, n2, n3], kind: Kind::Half }
    }

    pub fn degree(&self) -> u32 {
        self.n.iter().sum()
    }

    pub fn dot(&self, angles: &AngleTriple) -> AngleExpr {
        let mut acc = AngleExpr::zero();
        for (k, a) in self.n.iter().zip(angles.as_array()) {
            acc = &acc + &a.scale(&int(*k as i64));
        }
        acc
    }

    /// Superscript rendering, e.g. `α²βγ`.
    pub fn greek(&self) -> String {
        greek_word(&self.n.map(|k| k.to_string()))
    }

    /// Record form `a^n1 b^n2 c^n3 kind`.
    pub fn record(&self) -> String {
        format!("a^{} b^{} c^{} {}", self.n[0], self.n[1], self.n[2], self.kind.as_str())
    }

    /// Compact form such as `a2bc`, as used on the command line.
    pub fn compact(&self) -> String {
        let mut s = String::new();
        for (k, ch) in self.n.iter().zip(['a', 'b', 'c']) {
            match k {
                0 => {}
                1 => s.push(ch),
                _ => s.push_str(&format!("{ch}{k}")),
            }
        }
        s
    }

    pub fn halved(&self) -> Option<VertexVector> {
        if self.kind == Kind::Full && self.n.iter().all(|k| k % 2 == 0) {
            Some(VertexVector { n: self.n.map(|k| k / 2), kind: Kind::Half })
        } else {
            None
        }
    }

    fn sort_key(&self) -> (Kind, u32, [u32; 3]) {
        (self.kind, self.degree(), self.n)
    }

    /// Parse the compact form (`a2bc`, `c10`) with a given kind.
    pub fn parse_compact(s: &str, kind: Kind) -> Result<Self, VertexError> {
        let err = || VertexError::Parse(s.to_string());
        let mut n = [0u32; 3];
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.is_empty() {
            return Err(err());
        }
        let mut i = 0;
        while i < chars.len() {
            let slot = match chars[i] {
                'a' | 'α' => 0,
                'b' | 'β' => 1,
                'c' | 'γ' => 2,
                _ => return Err(err()),
            };
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let k: u32 = if start == i { 1 } else { chars[start..i].iter().collect::<String>().parse().map_err(|_| err())? };
            n[slot] += k;
        }
        Ok(VertexVector { n, kind })
    }
}

impl Ord for VertexVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for VertexVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.greek())
    }
}

fn superscript(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            '9' => '⁹',
            other => other,
        })
        .collect()
}

/// Greek rendering of exponent strings; `"0"` drops the letter, `"1"` the exponent.
pub fn greek_word(exps: &[String; 3]) -> String {
    let mut s = String::new();
    for (e, ch) in exps.iter().zip(['α', 'β', 'γ']) {
        match e.as_str() {
            "0" => {}
            "1" => s.push(ch),
            e if e.chars().all(|c| c.is_ascii_digit()) => {
                s.push(ch);
                s.push_str(&superscript(e));
            }
            e => {
                s.push(ch);
                s.push('^');
                s.push_str(e);
            }
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Tile-count condition attached to an AVC or a family entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FCond {
    Exact(u64),
    Class { modulus: u64, residue: u64 },
    All,
}

impl FCond {
    pub fn holds(&self, f: u64) -> bool {
        match *self {
            FCond::Exact(g) => f == g,
            FCond::Class { modulus, residue } => f % modulus == residue,
            FCond::All => true,
        }
    }
}

impl fmt::Display for FCond {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FCond::Exact(f) => write!(fm, "f={f}"),
            FCond::All => write!(fm, "f=all"),
            FCond::Class { modulus: 1, .. } => write!(fm, "f=all"),
            FCond::Class { modulus, residue: 0 } => write!(fm, "f={modulus}k"),
            FCond::Class { modulus, residue } => write!(fm, "f={modulus}k+{residue}"),
        }
    }
}

impl FromStr for FCond {
    type Err = VertexError;
    fn from_str(s: &str) -> Result<Self, VertexError> {
        let err = || VertexError::Parse(s.to_string());
        let body = s.trim().strip_prefix("f=").ok_or_else(err)?;
        if body == "all" {
            return Ok(FCond::All);
        }
        if let Ok(f) = body.parse::<u64>() {
            return Ok(FCond::Exact(f));
        }
        let (m, r) = match body.split_once("k+") {
            Some((m, r)) => (m, r.parse::<u64>().map_err(|_| err())?),
            None => (body.strip_suffix('k').ok_or_else(err)?, 0),
        };
        let modulus = m.parse::<u64>().map_err(|_| err())?;
        if modulus == 0 || r >= modulus {
            return Err(err());
        }
        Ok(FCond::Class { modulus, residue: r })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Count {
    Exact(u64),
    Unconstrained,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(n) => write!(f, "x{n}"),
            Count::Unconstrained => write!(f, "x*"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AvcEntry {
    pub vertex: VertexVector,
    pub count: Count,
}

impl AvcEntry {
    /// `a^n1 b^n2 c^n3 kind xCOUNT`
    pub fn record(&self) -> String {
        format!("{} {}", self.vertex.record(), self.count)
    }

    pub fn parse_record(s: &str) -> Result<Self, VertexError> {
        let err = || VertexError::Parse(s.to_string());
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != 5 {
            return Err(err());
        }
        let mut n = [0u32; 3];
        for (i, (tok, pre)) in toks[..3].iter().zip(["a^", "b^", "c^"]).enumerate() {
            n[i] = tok.strip_prefix(pre).and_then(|x| x.parse().ok()).ok_or_else(err)?;
        }
        let kind: Kind = toks[3].parse()?;
        let count = match toks[4].strip_prefix('x').ok_or_else(err)? {
            "*" => Count::Unconstrained,
            k => Count::Exact(k.parse().map_err(|_| err())?),
        };
        Ok(AvcEntry { vertex: VertexVector { n, kind }, count })
    }
}

/// A vertex combination for a fixed tile-count condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Avc {
    pub f: FCond,
    pub entries: Vec<AvcEntry>,
}

impl Avc {
    pub fn new(f: FCond, mut entries: Vec<AvcEntry>) -> Self {
        entries.sort_by_key(|e| e.vertex);
        entries.dedup_by_key(|e| e.vertex);
        Avc { f, entries }
    }

    pub fn vertices(&self, kind: Kind) -> Vec<VertexVector> {
        self.entries.iter().filter(|e| e.vertex.kind == kind).map(|e| e.vertex).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn records(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&e.record());
            s.push('\n');
        }
        s
    }

    pub fn parse_records(f: FCond, text: &str) -> Result<Self, VertexError> {
        let entries = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(AvcEntry::parse_record)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Avc::new(f, entries))
    }

    /// Tiling notation `T(4α²γ; 4β²γ)`; unconstrained counts are omitted.
    pub fn notation(&self) -> String {
        let part = |kind: Kind| {
            self.entries
                .iter()
                .filter(|e| e.vertex.kind == kind)
                .map(|e| match e.count {
                    Count::Exact(k) => format!("{k}{}", e.vertex.greek()),
                    Count::Unconstrained => e.vertex.greek(),
                })
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("T({}; {})", part(Kind::Full), part(Kind::Half))
    }
}

/// Inequalities imposed on the angles of a seed system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    /// `α+β<1+γ` and its two companions.
    pub corner_inequalities: bool,
}

impl Profile {
    /// `0<γ<β<α<1` together with the three corner inequalities.
    pub const CONVEX: Profile = Profile { corner_inequalities: true };
    /// `0<γ<β<α<1` only.
    pub const ORDERED: Profile = Profile { corner_inequalities: false };
}

fn ints(xs: [i64; 4]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Angle system over `(α, β, γ, ε)` with `ε = 4/f`: each listed vertex has
/// its corner sum, the angles obey the profile, and `0 < ε < 1`.
pub fn angle_system(vertices: &[VertexVector], profile: Profile) -> System {
    let mut s = System::new(4);
    // α + β + γ = 1 + ε
    s.push(ints([1, 1, 1, -1]), int(-1), Rel::Eq);
    for v in vertices {
        let n = v.n.map(|k| k as i64);
        s.push(ints([n[0], n[1], n[2], 0]), int(-v.kind.target()), Rel::Eq);
    }
    s.push_rhs(ints([0, 0, 1, 0]), Rel::Gt, int(0));
    s.push_rhs(ints([0, 1, -1, 0]), Rel::Gt, int(0));
    s.push_rhs(ints([1, -1, 0, 0]), Rel::Gt, int(0));
    s.push_rhs(ints([-1, 0, 0, 0]), Rel::Gt, int(-1));
    s.push_rhs(ints([0, 0, 0, 1]), Rel::Gt, int(0));
    s.push_rhs(ints([0, 0, 0, -1]), Rel::Gt, int(-1));
    if profile.corner_inequalities {
        s.push_rhs(ints([-1, -1, 1, 0]), Rel::Gt, int(-1));
        s.push_rhs(ints([1, -1, -1, 0]), Rel::Gt, int(-1));
        s.push_rhs(ints([-1, 1, -1, 0]), Rel::Gt, int(-1));
    }
    s
}

/// Fix `ε = 4/f` in an [`angle_system`].
pub fn fix_tiles(mut s: System, f: u64) -> System {
    s.push_rhs(ints([0, 0, 0, 1]), Rel::Eq, Rational::new(BigInt::from(4), BigInt::from(f)));
    s
}

/// Whether the seed's angle system at tile count `f` has a solution.
pub fn seed_feasible(seed: &VertexVector, f: u64, profile: Profile) -> bool {
    f > 0 && fix_tiles(angle_system(&[*seed], profile), f).is_feasible()
}

pub fn det3(a: [i64; 3], b: [i64; 3], c: [i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn signed(v: &VertexVector) -> [i64; 3] {
    v.n.map(|k| k as i64)
}

/// `det(u, m, n) = 0` and `n` on the line through `m` and `(2f/(f+4))·u`.
pub fn is_collinear(m: &VertexVector, n: &VertexVector, f: u64) -> bool {
    let (mi, ni) = (signed(m), signed(n));
    if det3([1, 1, 1], mi, ni) != 0 {
        return false;
    }
    if mi[0] == mi[1] && mi[1] == mi[2] {
        return true;
    }
    // n = x·m + y·u; the line is 2x + y(1+4/f) = 2
    let (i, j) = if mi[0] != mi[1] {
        (0, 1)
    } else if mi[0] != mi[2] {
        (0, 2)
    } else {
        (1, 2)
    };
    let x = Rational::new(BigInt::from(ni[i] - ni[j]), BigInt::from(mi[i] - mi[j]));
    let y = int(ni[i]) - &x * int(mi[i]);
    &x * int(2) + y * angle_sum(f) == int(2)
}

/// Nonnegative lattice points on the seed's line at tile count `f`. Empty
/// when no positive angles fit the seed, since the points then form a ray.
pub fn line_points(m: &VertexVector, f: u64) -> Vec<[u32; 3]> {
    let mi = signed(m);
    let f = f as i64;
    let raw = mi.map(|k| (f + 4) * k - 2 * f);
    let g = raw.iter().fold(0i64, |g, &x| g.gcd(&x));
    let mut out = vec![m.n];
    if g == 0 {
        return out;
    }
    let dir = raw.map(|x| x / g);
    if dir.iter().all(|&x| x >= 0) || dir.iter().all(|&x| x <= 0) {
        return Vec::new();
    }
    for sign in [1i64, -1] {
        let mut j = 1i64;
        loop {
            let p = [0, 1, 2].map(|i| mi[i] + sign * j * dir[i]);
            if p.iter().any(|&x| x < 0) {
                break;
            }
            out.push(p.map(|x| x as u32));
            j += 1;
        }
    }
    out.sort_by_key(|n| (n.iter().sum::<u32>(), *n));
    out
}

fn check_seed(seed: &VertexVector) -> Result<(), VertexError> {
    if seed.kind != Kind::Full {
        return Err(VertexError::HalfSeed);
    }
    if seed.n[0] == seed.n[1] && seed.n[1] == seed.n[2] {
        return Err(VertexError::DegenerateSeed(seed.greek()));
    }
    Ok(())
}

/// Full vertices on the seed's line plus their even halves, at tile count `f`.
/// Empty when the seed's angle system is infeasible.
pub fn derive_avc(seed: &VertexVector, f: u64, profile: Profile) -> Result<Avc, VertexError> {
    check_seed(seed)?;
    if !seed_feasible(seed, f, profile) {
        return Ok(Avc::new(FCond::Exact(f), Vec::new()));
    }
    let mut entries = Vec::new();
    for n in line_points(seed, f) {
        let full = VertexVector { n, kind: Kind::Full };
        entries.push(AvcEntry { vertex: full, count: Count::Unconstrained });
        if let Some(h) = full.halved() {
            entries.push(AvcEntry { vertex: h, count: Count::Unconstrained });
        }
    }
    Ok(Avc::new(FCond::Exact(f), entries))
}

/// All `n` with `n·(α,β,γ)` equal to the kind's target for some `t` in the bound.
pub fn enumerate_vertices(angles: &AngleTriple, bound: &IntervalBound, kind: Kind) -> Result<Vec<VertexVector>, VertexError> {
    let target = int(kind.target());
    let mut caps = [0u32; 3];
    for (i, (a, name)) in angles.as_array().iter().zip(['α', 'β', 'γ']).enumerate() {
        let (lo, _) = bound.inf(a);
        if !lo.is_positive() {
            return Err(VertexError::UnboundedEnumeration(name));
        }
        caps[i] = (&target / &lo).floor().to_integer().try_into().unwrap_or(u32::MAX);
    }
    let t_coeffs = angles.as_array().map(|a| a.r.clone());
    let q_coeffs = angles.as_array().map(|a| a.q.clone());
    let mut out = Vec::new();
    for n1 in 0..=caps[0] {
        for n2 in 0..=caps[1] {
            for n3 in 0..=caps[2] {
                if n1 + n2 + n3 == 0 {
                    continue;
                }
                let n = [n1, n2, n3].map(|k| int(k as i64));
                let q: Rational = n.iter().zip(&q_coeffs).map(|(k, c)| k * c).sum();
                let r: Rational = n.iter().zip(&t_coeffs).map(|(k, c)| k * c).sum();
                let ok = if r.is_zero() { q == target } else { bound.contains(&((&target - &q) / &r)) };
                if ok {
                    out.push(VertexVector { n: [n1, n2, n3], kind });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Low-degree vertices that survive `α+β+γ<2` under `α>β>γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub full3: Vec<VertexVector>,
    pub full4: Vec<VertexVector>,
    pub full5: Vec<VertexVector>,
    pub half2: Vec<VertexVector>,
}

pub fn vectors_of_degree(d: u32, kind: Kind) -> Vec<VertexVector> {
    let mut out = Vec::new();
    for n1 in (0..=d).rev() {
        for n2 in (0..=d - n1).rev() {
            out.push(VertexVector { n: [n1, n2, d - n1 - n2], kind });
        }
    }
    out
}

/// Whether a single vertex can occur at all in a scalene tiling with `f > 4`.
pub fn admissible(v: &VertexVector, profile: Profile) -> bool {
    angle_system(&[*v], profile).is_feasible()
}

pub fn low_degree_catalog() -> Catalog {
    let pick = |d, kind| vectors_of_degree(d, kind).into_iter().filter(|v| admissible(v, Profile::ORDERED)).collect::<Vec<_>>();
    Catalog { full3: pick(3, Kind::Full), full4: pick(4, Kind::Full), full5: pick(5, Kind::Full), half2: pick(2, Kind::Half) }
}

/// Balance: every angle occurs exactly `f` times.
pub fn balance_filter(avc: &Avc, f: u64) -> bool {
    let mut totals = [0u64; 3];
    for e in &avc.entries {
        let Count::Exact(k) = e.count else {
            return false;
        };
        for i in 0..3 {
            totals[i] += k * e.vertex.n[i] as u64;
        }
    }
    totals.iter().all(|&t| t == f)
}

/// A rational triple for the scalene case, as a convenience for tests and tables.
pub fn rational_triple(alpha: Rational, beta: Rational, gamma: Rational, f: u64) -> Option<AngleTriple> {
    AngleTriple::rational(alpha, beta, gamma, f, Ordered::Scalene).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::rat;

    fn v(s: &str) -> VertexVector {
        VertexVector::parse_compact(s, Kind::Full).unwrap()
    }

    #[test]
    fn compact_and_records() {
        assert_eq!(v("a2bc").n, [2, 1, 1]);
        assert_eq!(v("c10").n, [0, 0, 10]);
        assert_eq!(v("ab3c").compact(), "ab3c");
        assert_eq!(v("a2bc").greek(), "α²βγ");
        assert_eq!(v("c10").greek(), "γ¹⁰");
        let e = AvcEntry { vertex: v("b4c4"), count: Count::Exact(3) };
        assert_eq!(e.record(), "a^0 b^4 c^4 full x3");
        assert_eq!(AvcEntry::parse_record(&e.record()).unwrap(), e);
        assert!(AvcEntry::parse_record("a^0 b^4 full x3").is_err());
        for s in ["f=all", "f=4k", "f=8k+4", "f=36"] {
            assert_eq!(s.parse::<FCond>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn collinearity_examples() {
        assert!(is_collinear(&v("a3"), &v("b4c4"), 24));
        assert!(is_collinear(&v("a3"), &v("a3"), 7));
        assert_ne!(det3([1, 1, 1], [2, 1, 1], [2, 2, 1]), 0);
        assert!(!is_collinear(&v("a2bc"), &v("a2b2c"), 16));
        // on the plane but not on the line for f=12
        assert!(!is_collinear(&v("a3"), &v("b4c4"), 12));
    }

    #[test]
    fn line_points_of_an_impossible_seed() {
        // α²β²γ³ sums past 2 for every positive triple at f=7
        assert!(line_points(&VertexVector::full(2, 2, 3), 7).is_empty());
    }

    #[test]
    fn line_points_match_collinearity() {
        for seed in ["a3", "a2b", "ab2c2", "a2b2"] {
            for f in 5..60 {
                let m = v(seed);
                let pts = line_points(&m, f);
                for p in &pts {
                    assert!(is_collinear(&m, &VertexVector { n: *p, kind: Kind::Full }, f));
                }
                for n1 in 0..30u32 {
                    for n2 in 0..30 {
                        for n3 in 0..30 {
                            let n = VertexVector::full(n1, n2, n3);
                            if n.degree() > 0 && is_collinear(&m, &n, f) {
                                assert!(pts.contains(&n.n), "{seed} f={f} {n}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn derive_examples() {
        let a = derive_avc(&v("a3"), 24, Profile::CONVEX).unwrap();
        assert_eq!(a.vertices(Kind::Full), vec![v("a3"), v("b4c4")]);
        assert_eq!(a.vertices(Kind::Half), vec![VertexVector::half(0, 2, 2)]);

        let a = derive_avc(&v("b3"), 6, Profile::ORDERED).unwrap();
        assert_eq!(a.vertices(Kind::Full), vec![v("b3"), v("a2c2")]);
        assert_eq!(a.vertices(Kind::Half), vec![VertexVector::half(1, 0, 1)]);

        for f in [16, 24, 40] {
            let a = derive_avc(&v("a2bc"), f, Profile::CONVEX).unwrap();
            let k = (f / 4) as u32;
            assert!(a.vertices(Kind::Full).contains(&VertexVector::full(0, k, k)));
            let half = a.vertices(Kind::Half);
            assert_eq!(half.contains(&VertexVector::half(0, k / 2, k / 2)), f % 8 == 0, "f={f}");
        }
        let a = derive_avc(&v("a2bc"), 10, Profile::CONVEX).unwrap();
        assert!(a.vertices(Kind::Half).is_empty());

        assert_eq!(derive_avc(&v("a2b2c2"), 8, Profile::CONVEX), Err(VertexError::DegenerateSeed("α²β²γ²".into())));
    }

    #[test]
    fn enumerate_examples() {
        let t = rational_triple(rat(1, 2), rat(1, 3), rat(1, 6) + rat(4, 36), 36).unwrap();
        let fulls = enumerate_vertices(&t, &IntervalBound::unit(), Kind::Full).unwrap();
        assert!(fulls.contains(&v("bc6")));
        assert!(fulls.contains(&v("ab2c3")));

        let third = (int(1) + rat(4, 20)) / int(3);
        let eq = AngleTriple::rational(third.clone(), third.clone(), third, 20, Ordered::Unordered).unwrap();
        let fulls = enumerate_vertices(&eq, &IntervalBound::unit(), Kind::Full).unwrap();
        assert_eq!(
            fulls,
            vectors_of_degree(5, Kind::Full).into_iter().collect::<std::collections::BTreeSet<_>>().into_iter().collect::<Vec<_>>()
        );

        let bound = IntervalBound::open(int(0), int(1)).unwrap();
        let par = AngleTriple::new(AngleExpr::t(), "1-t".parse().unwrap(), AngleExpr::constant(rat(1, 3)), 12, Ordered::Unordered, &bound)
            .unwrap();
        assert_eq!(enumerate_vertices(&par, &bound, Kind::Full), Err(VertexError::UnboundedEnumeration('α')));
    }

    #[test]
    fn catalog_sizes() {
        let c = low_degree_catalog();
        assert_eq!(c.full3, vec![v("a3"), v("a2b"), v("a2c"), v("ab2"), v("b3")]);
        assert_eq!(c.full4.len(), 15);
        assert_eq!(c.full5.len(), 21);
        assert_eq!(c.half2.len(), 6);
        assert!(!c.full3.contains(&v("abc")));
    }

    #[test]
    fn balance() {
        let avc = Avc::new(
            FCond::Exact(8),
            vec![
                AvcEntry { vertex: v("a2b"), count: Count::Exact(4) },
                AvcEntry { vertex: VertexVector::half(0, 1, 2), count: Count::Exact(4) },
            ],
        );
        assert!(balance_filter(&avc, 8));
        let lone = Avc::new(FCond::Exact(4), vec![AvcEntry { vertex: v("abc2"), count: Count::Exact(4) }]);
        assert!(!balance_filter(&lone, 4));
        let f16 = Avc::new(
            FCond::Exact(16),
            vec![
                AvcEntry { vertex: v("a2bc"), count: Count::Exact(8) },
                AvcEntry { vertex: VertexVector::half(0, 2, 2), count: Count::Exact(4) },
            ],
        );
        assert!(balance_filter(&f16, 16));
        assert_eq!(f16.notation(), "T(8α²βγ; 4β²γ²)");
    }
}
