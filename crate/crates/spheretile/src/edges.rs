//! Extended edges: the two words of side lengths that meet along one geodesic
//! segment between two stop vertices.
//!
//! Every internal breakpoint of one word that is not a breakpoint of the
//! other lies strictly inside a side across the line, so it is a half vertex.
//! A side in the interior of a word therefore has half vertices at both ends,
//! and both of its end corners sit at half vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::angles::lp::{Constraint, Rel, System};
use crate::angles::{int, Rational};
use crate::vertices::{Avc, Kind, VertexVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeError {
    #[error("length relations are unsatisfiable")]
    InfeasibleRelations,
    #[error("unsupported AVC shape: {0}")]
    Unsupported(String),
    #[error("cannot parse edge word {0:?}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Corner {
    Alpha,
    Beta,
    Gamma,
}

impl Corner {
    pub const ALL: [Corner; 3] = [Corner::Alpha, Corner::Beta, Corner::Gamma];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Corner {
        Corner::ALL[i]
    }

    pub fn greek(self) -> char {
        ['α', 'β', 'γ'][self.index()]
    }

    pub fn ascii(self) -> char {
        ['A', 'B', 'C'][self.index()]
    }

    /// The two sides meeting at this corner.
    pub fn sides(self) -> [Side; 2] {
        match self {
            Corner::Alpha => [Side::B, Side::C],
            Corner::Beta => [Side::A, Side::C],
            Corner::Gamma => [Side::A, Side::B],
        }
    }

    pub fn opposite(self) -> Side {
        Side::ALL[self.index()]
    }

    /// The side at this corner other than `s`.
    pub fn other_side(self, s: Side) -> Option<Side> {
        let [x, y] = self.sides();
        if s == x {
            Some(y)
        } else if s == y {
            Some(x)
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        ['a', 'b', 'c'][self.index()]
    }

    pub fn from_char(c: char) -> Option<Side> {
        match c {
            'a' => Some(Side::A),
            'b' => Some(Side::B),
            'c' => Some(Side::C),
            _ => None,
        }
    }

    /// Corners at the two ends of this side.
    pub fn end_corners(self) -> [Corner; 2] {
        match self {
            Side::A => [Corner::Beta, Corner::Gamma],
            Side::B => [Corner::Alpha, Corner::Gamma],
            Side::C => [Corner::Alpha, Corner::Beta],
        }
    }

    pub fn opposite(self) -> Corner {
        Corner::from_index(self.index())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeWord(pub Vec<Side>);

impl EdgeWord {
    pub fn new(sides: Vec<Side>) -> Self {
        assert!(!sides.is_empty(), "edge words are nonempty");
        EdgeWord(sides)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> EdgeWord {
        EdgeWord(self.0.iter().rev().copied().collect())
    }

    /// Number of each side symbol.
    pub fn counts(&self) -> [i64; 3] {
        let mut n = [0; 3];
        for s in &self.0 {
            n[s.index()] += 1;
        }
        n
    }

    /// Length vectors of the proper prefixes, i.e. the internal breakpoints.
    pub fn breakpoints(&self) -> Vec<[i64; 3]> {
        let mut acc = [0; 3];
        let mut out = Vec::new();
        for s in &self.0[..self.0.len() - 1] {
            acc[s.index()] += 1;
            out.push(acc);
        }
        out
    }

    pub fn interior(&self) -> &[Side] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// `c+2a+c` style with runs of `run` collapsed; `None` writes every side.
    pub fn render(&self, run: Option<Side>) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i + 1;
            if Some(s) == run {
                while j < self.0.len() && self.0[j] == s {
                    j += 1;
                }
            }
            let n = j - i;
            parts.push(if n == 1 { s.symbol().to_string() } else { format!("{n}{}", s.symbol()) });
            i = j;
        }
        parts.join("+")
    }
}

impl fmt::Display for EdgeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Some(Side::A)))
    }
}

/// Accepts `c+2a+c`, `c,a,a,c` and `caac`.
impl FromStr for EdgeWord {
    type Err = EdgeError;

    fn from_str(s: &str) -> Result<Self, EdgeError> {
        let err = || EdgeError::Parse(s.to_string());
        let mut sides = Vec::new();
        let parts: Vec<&str> = if s.contains('+') || s.contains(',') {
            s.split(['+', ',']).map(str::trim).collect()
        } else {
            s.trim().split("").filter(|p| !p.is_empty()).collect()
        };
        for p in parts {
            let (num, sym) = p.split_at(p.len().checked_sub(1).ok_or_else(err)?);
            let side = Side::from_char(sym.chars().next().ok_or_else(err)?).ok_or_else(err)?;
            let n: usize = if num.is_empty() { 1 } else { num.parse().map_err(|_| err())? };
            if n == 0 {
                return Err(err());
            }
            sides.extend(std::iter::repeat(side).take(n));
        }
        if sides.is_empty() {
            return Err(err());
        }
        Ok(EdgeWord(sides))
    }
}

fn coeffs(xs: [i64; 3]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

/// `x·(a,b,c) = 0` for an integer vector `x`.
pub fn length_equation(x: [i64; 3]) -> Constraint {
    Constraint::new(coeffs(x), int(0), Rel::Eq)
}

/// Renders a constraint over `(a, b, c)` as `a=2c`, `2b=a+c`, `a>b` or `a<1`.
pub fn render_relation(c: &Constraint) -> String {
    // clear denominators
    let den = c.coeffs.iter().chain([&c.constant]).fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
    let scale = |x: &Rational| (x * Rational::from_integer(den.clone())).to_integer();
    let mut xs: Vec<num_bigint::BigInt> = c.coeffs.iter().map(scale).collect();
    let mut k = scale(&c.constant);
    let g = xs.iter().chain([&k]).fold(num_bigint::BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() {
        xs.iter_mut().for_each(|x| *x /= &g);
        k /= &g;
    }
    if c.rel == Rel::Eq && xs.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        xs.iter_mut().for_each(|x| *x = -&*x);
        k = -k;
    }
    let names = ['a', 'b', 'c'];
    let side = |sign: i32| -> Vec<String> {
        let mut out = Vec::new();
        for (i, x) in xs.iter().enumerate() {
            if (sign > 0 && x.is_positive()) || (sign < 0 && x.is_negative()) {
                let m = x.abs();
                out.push(if m == 1.into() { names[i].to_string() } else { format!("{m}{}", names[i]) });
            }
        }
        if (sign > 0 && k.is_positive()) || (sign < 0 && k.is_negative()) {
            out.push(k.abs().to_string());
        }
        out
    };
    let (pos, neg) = (side(1), side(-1));
    let join = |v: &[String]| if v.is_empty() { "0".to_string() } else { v.join("+") };
    match c.rel {
        Rel::Eq => {
            let lone_neg = neg.len() == 1 && pos.len() > 1 && !k.is_negative();
            let first_pos = xs.iter().position(|x| x.is_positive());
            let first_neg = xs.iter().position(|x| x.is_negative());
            let neg_left = lone_neg || (pos.len() == neg.len() && first_neg < first_pos && first_neg.is_some());
            if neg_left {
                format!("{}={}", join(&neg), join(&pos))
            } else {
                format!("{}={}", join(&pos), join(&neg))
            }
        }
        Rel::Gt | Rel::Ge => {
            let op = if c.rel == Rel::Gt { ('>', '<') } else { ('≥', '≤') };
            let pos_is_const = xs.iter().all(|x| !x.is_positive());
            if pos_is_const && !neg.is_empty() {
                format!("{}{}{}", join(&neg), op.1, join(&pos))
            } else {
                format!("{}{}{}", join(&pos), op.0, join(&neg))
            }
        }
    }
}

/// Linear equalities and inequalities over the side lengths `(a, b, c)` in
/// units of π. The base always holds `0<a,b,c<1` and the three triangle
/// inequalities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthRelationSet {
    pub base: Vec<Constraint>,
    pub extra: Vec<Constraint>,
}

impl LengthRelationSet {
    /// Side bounds and triangle inequalities, without an order on the sides.
    pub fn unordered() -> Self {
        let mut base = Vec::new();
        for i in 0..3 {
            let mut e = [0; 3];
            e[i] = 1;
            base.push(Constraint::new(coeffs(e), int(0), Rel::Gt));
            base.push(Constraint::new(coeffs(e.map(|x| -x)), int(1), Rel::Gt));
            let mut t = [1; 3];
            t[i] = -1;
            base.push(Constraint::new(coeffs(t), int(0), Rel::Gt));
        }
        LengthRelationSet { base, extra: Vec::new() }
    }

    /// Only `0<a,b,c≤1`, for the degenerate lune where `a = b + c = 1`.
    pub fn free() -> Self {
        let mut base = Vec::new();
        for i in 0..3 {
            let mut e = [0; 3];
            e[i] = 1;
            base.push(Constraint::new(coeffs(e), int(0), Rel::Gt));
            base.push(Constraint::new(coeffs(e.map(|x| -x)), int(1), Rel::Ge));
        }
        LengthRelationSet { base, extra: Vec::new() }
    }

    /// The unordered set plus `a > b > c`, which a scalene triangle with
    /// `α > β > γ` always has.
    pub fn scalene() -> Self {
        let mut s = Self::unordered();
        s.base.push(Constraint::new(coeffs([1, -1, 0]), int(0), Rel::Gt));
        s.base.push(Constraint::new(coeffs([0, 1, -1]), int(0), Rel::Gt));
        s
    }

    pub fn with(&self, c: Constraint) -> Self {
        let mut s = self.clone();
        s.extra.push(c);
        s
    }

    pub fn system(&self) -> System {
        System { nvars: 3, constraints: self.base.iter().chain(&self.extra).cloned().collect() }
    }

    pub fn is_satisfiable(&self) -> bool {
        self.system().is_feasible()
    }

    /// Whether `x·(a,b,c) = 0` holds throughout the set.
    pub fn implies_zero(&self, x: &[Rational]) -> bool {
        let mut sys = self.system();
        let neg: Vec<Rational> = x.iter().map(|v| -v).collect();
        let mut up = sys.clone();
        up.constraints.push(Constraint::new(x.to_vec(), int(0), Rel::Gt));
        sys.constraints.push(Constraint::new(neg, int(0), Rel::Gt));
        !up.is_feasible() && !sys.is_feasible()
    }

    pub fn render_extra(&self) -> String {
        self.extra.iter().map(render_relation).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtendedEdgePattern {
    pub family: u8,
    pub k: u32,
    pub top: EdgeWord,
    pub bottom: EdgeWord,
    pub forced_relations: Vec<Constraint>,
}

impl ExtendedEdgePattern {
    pub fn notation(&self) -> String {
        format!("{} = {}", self.top.render(Some(Side::A)), self.bottom.render(Some(Side::A)))
    }

    /// `edge <family> <k> <top> <bottom> <relations>`; relations `-` if none.
    pub fn record(&self) -> String {
        let rel = if self.forced_relations.is_empty() {
            "-".to_string()
        } else {
            self.forced_relations.iter().map(render_relation).collect::<Vec<_>>().join(";")
        };
        format!("edge {} {} {} {} {}", self.family, self.k, self.top.render(None), self.bottom.render(None), rel)
    }

    /// Parses the word part of a [`record`](Self::record) and rebuilds the pattern.
    pub fn parse_record(line: &str) -> Result<Self, EdgeError> {
        let err = || EdgeError::Parse(line.to_string());
        let t: Vec<&str> = line.split_whitespace().collect();
        if t.len() != 6 || t[0] != "edge" {
            return Err(err());
        }
        let family: u8 = t[1].parse().map_err(|_| err())?;
        let k: u32 = t[2].parse().map_err(|_| err())?;
        let p = family_pattern(family, k).ok_or_else(err)?;
        if p.top.render(None) != t[3] || p.bottom.render(None) != t[4] {
            return Err(err());
        }
        Ok(p)
    }
}

impl fmt::Display for ExtendedEdgePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}. {}", self.family, self.notation())?;
        if !self.forced_relations.is_empty() {
            let r: Vec<String> = self.forced_relations.iter().map(render_relation).collect();
            write!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgePattern {
    Words(ExtendedEdgePattern),
    /// Family 8: the extended edge closes up into a great circle of length 2π
    /// with at most one stop vertex.
    GreatCircle,
}

impl fmt::Display for EdgePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgePattern::Words(p) => p.fmt(f),
            EdgePattern::GreatCircle => f.write_str("8. great circle (length 2π, at most one stop vertex)"),
        }
    }
}

fn word(parts: &[(Side, u32)]) -> EdgeWord {
    EdgeWord(parts.iter().flat_map(|&(s, n)| std::iter::repeat(s).take(n as usize)).collect())
}

/// The words of family `family` at repetition `k`, with the total-length
/// equality as its relation (omitted when it is an identity).
pub fn family_pattern(family: u8, k: u32) -> Option<ExtendedEdgePattern> {
    use Side::{A, B, C};
    let (top, bottom) = match family {
        1 => (word(&[(B, 1), (A, k)]), word(&[(A, k), (B, 1)])),
        2 => (word(&[(C, 1), (A, k)]), word(&[(A, k), (C, 1)])),
        3 => (word(&[(C, 1), (A, k), (B, 1)]), word(&[(B, 1), (A, k), (C, 1)])),
        4 => (word(&[(B, 1), (A, k), (B, 1)]), word(&[(A, k + 1), (C, 1)])),
        5 => (word(&[(A, k + 1)]), word(&[(C, 1), (A, k), (C, 1)])),
        6 => (word(&[(C, 1), (A, k), (C, 1)]), word(&[(A, k), (B, 1)])),
        7 => (word(&[(C, 1), (A, k + 1), (C, 1)]), word(&[(B, 1), (A, k), (B, 1)])),
        _ => return None,
    };
    let diff: [i64; 3] = std::array::from_fn(|i| top.counts()[i] - bottom.counts()[i]);
    let forced = if diff == [0; 3] { Vec::new() } else { vec![normalize(&length_equation(diff))] };
    Some(ExtendedEdgePattern { family, k, top, bottom, forced_relations: forced })
}

/// Integer coefficients with gcd one; equalities get a positive leading coefficient.
fn normalize(c: &Constraint) -> Constraint {
    let den = c.coeffs.iter().chain([&c.constant]).fold(num_bigint::BigInt::from(1), |l, x| l.lcm(x.denom()));
    let d = Rational::from_integer(den);
    let xs: Vec<Rational> = c.coeffs.iter().map(|x| x * &d).collect();
    let k = &c.constant * &d;
    let g = xs.iter().chain([&k]).fold(num_bigint::BigInt::zero(), |g, x| g.gcd(&x.to_integer()));
    let mut g = Rational::from_integer(if g.is_zero() { 1.into() } else { g });
    if c.rel == Rel::Eq && xs.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    Constraint::new(xs.iter().map(|x| x / &g).collect(), k / &g, c.rel)
}

/// Canonical representative of `(top, bottom)` under swapping the two words
/// and reversing both.
pub fn canonical_pair(top: &EdgeWord, bottom: &EdgeWord) -> (EdgeWord, EdgeWord) {
    let (rt, rb) = (top.reversed(), bottom.reversed());
    [(top.clone(), bottom.clone()), (bottom.clone(), top.clone()), (rt.clone(), rb.clone()), (rb, rt)]
        .into_iter()
        .min()
        .expect("four candidates")
}

/// Families 1–7 for every `k ≤ k_max` (without the single-side identities
/// `b=b`, `c=c` of families 1, 2 at `k=0`), then the great-circle marker.
pub fn enumerate_patterns(k_max: u32) -> Vec<EdgePattern> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for k in 0..=k_max {
        for family in 1..=7 {
            let p = family_pattern(family, k).expect("families 1-7");
            if p.top == p.bottom {
                continue;
            }
            if seen.insert(canonical_pair(&p.top, &p.bottom)) {
                out.push(EdgePattern::Words(p));
            }
        }
    }
    out.push(EdgePattern::GreatCircle);
    out
}

/// The family and `k` of a word pair, if it instantiates one of families 1–7.
pub fn classify(top: &EdgeWord, bottom: &EdgeWord) -> Option<(u8, u32)> {
    let key = canonical_pair(top, bottom);
    let k_top = top.counts()[0].min(bottom.counts()[0]) as u32;
    for family in 1..=7 {
        let p = family_pattern(family, k_top).expect("families 1-7");
        if canonical_pair(&p.top, &p.bottom) == key {
            return Some((family, k_top));
        }
    }
    None
}

/// Which corner may not sit at a half vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Discipline {
    NoAlpha,
    NoBeta,
    Unrestricted,
}

impl Discipline {
    pub fn forbidden(self) -> Option<Corner> {
        match self {
            Discipline::NoAlpha => Some(Corner::Alpha),
            Discipline::NoBeta => Some(Corner::Beta),
            Discipline::Unrestricted => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Matching {
    /// `family` is `None` for identical words (no half vertex) and for
    /// matches outside families 1–7.
    Match {
        family: Option<(u8, u32)>,
        forced: Vec<Constraint>,
    },
    NoMatch(String),
}

impl Matching {
    pub fn is_match(&self) -> bool {
        matches!(self, Matching::Match { .. })
    }
}

fn sub(x: [i64; 3], y: [i64; 3]) -> Vec<Rational> {
    coeffs(std::array::from_fn(|i| x[i] - y[i]))
}

/// Whether the extended edge `top` over `bottom` can exist: equal total
/// length under `relations`, no internal breakpoint shared by both words, and
/// no side with the forbidden corner between two half vertices.
pub fn match_words(
    top: &EdgeWord,
    bottom: &EdgeWord,
    relations: &LengthRelationSet,
    discipline: Discipline,
) -> Result<Matching, EdgeError> {
    if !relations.is_satisfiable() {
        return Err(EdgeError::InfeasibleRelations);
    }
    if top == bottom && top.len() == 1 {
        return Ok(Matching::Match { family: None, forced: Vec::new() });
    }
    if let Some(x) = discipline.forbidden() {
        for w in [top, bottom] {
            if let Some(s) = w.interior().iter().find(|s| s.end_corners().contains(&x)) {
                return Ok(Matching::NoMatch(format!("side {} inside {} puts {} at a half vertex", s.symbol(), w.render(None), x.greek())));
            }
        }
    }
    let diff = sub(top.counts(), bottom.counts());
    let total = relations.with(Constraint::new(diff.clone(), int(0), Rel::Eq));
    if !total.is_satisfiable() {
        return Ok(Matching::NoMatch(format!("{} and {} cannot have equal length", top.render(None), bottom.render(None))));
    }
    let sys = total.system();
    for p in top.breakpoints() {
        for q in bottom.breakpoints() {
            let h = sub(p, q);
            let side_open = |sign: i64| {
                let mut s = sys.clone();
                s.constraints.push(Constraint::new(h.iter().map(|x| x * int(sign)).collect(), int(0), Rel::Gt));
                s.is_feasible()
            };
            if !side_open(1) && !side_open(-1) {
                return Ok(Matching::NoMatch("an internal breakpoint is shared, so the edge stops there".to_string()));
            }
        }
    }
    let forced = if diff.iter().all(Zero::is_zero) || relations.implies_zero(&diff) {
        Vec::new()
    } else {
        vec![normalize(&Constraint::new(diff, int(0), Rel::Eq))]
    };
    Ok(Matching::Match { family: classify(top, bottom), forced })
}

/// Words of length at most `max_len` whose interior sides pass `interior_ok`.
fn candidate_words(max_len: usize, interior_ok: &dyn Fn(Side) -> bool) -> Vec<EdgeWord> {
    let mut out = Vec::new();
    for s in Side::ALL {
        out.push(EdgeWord(vec![s]));
    }
    let inner: Vec<Side> = Side::ALL.into_iter().filter(|&s| interior_ok(s)).collect();
    fn fill(prefix: &mut Vec<Side>, left: usize, inner: &[Side], out: &mut Vec<Vec<Side>>) {
        out.push(prefix.clone());
        if left == 0 {
            return;
        }
        for &s in inner {
            prefix.push(s);
            fill(prefix, left - 1, inner, out);
            prefix.pop();
        }
    }
    let mut mids = Vec::new();
    fill(&mut Vec::new(), max_len.saturating_sub(2), &inner, &mut mids);
    for first in Side::ALL {
        for last in Side::ALL {
            for mid in &mids {
                let mut w = vec![first];
                w.extend(mid);
                w.push(last);
                out.push(EdgeWord(w));
            }
        }
    }
    out
}

/// Whether the corners around one half vertex can run from `first` (whose
/// side on the line is `s_in`) to `last` (side `s_out`), using exactly the
/// corners of `h`, with neighbouring corners sharing a whole side.
fn half_chain(h: &VertexVector, first: Corner, s_in: Side, last: Corner, s_out: Side) -> bool {
    let mut left = h.n;
    if left[first.index()] == 0 {
        return false;
    }
    left[first.index()] -= 1;
    let Some(next) = first.other_side(s_in) else { return false };
    fn walk(left: &mut [u32; 3], side: Side, last: Corner, s_out: Side) -> bool {
        let remaining: u32 = left.iter().sum();
        if remaining == 1 {
            return left[last.index()] == 1 && last.other_side(side) == Some(s_out);
        }
        for x in Corner::ALL {
            if left[x.index()] == 0 {
                continue;
            }
            let Some(next) = x.other_side(side) else { continue };
            left[x.index()] -= 1;
            let ok = walk(left, next, last, s_out);
            left[x.index()] += 1;
            if ok {
                return true;
            }
        }
        false
    }
    if left.iter().sum::<u32>() == 0 {
        return false;
    }
    walk(&mut left, next, last, s_out)
}

/// Some orientation of every side puts, at each internal breakpoint, a pair
/// of corners that opens one of the half vertices in `halves`.
fn orientable(w: &EdgeWord, halves: &[VertexVector]) -> bool {
    let n = w.len();
    if n == 1 {
        return true;
    }
    // state: corner at the right end of the previous side
    let mut states: BTreeSet<Corner> = w.0[0].end_corners().into_iter().collect();
    for i in 1..n {
        let (prev, cur) = (w.0[i - 1], w.0[i]);
        let mut next = BTreeSet::new();
        for &end in &states {
            for (start, far) in [(cur.end_corners()[0], cur.end_corners()[1]), (cur.end_corners()[1], cur.end_corners()[0])] {
                if halves.iter().any(|h| half_chain(h, end, prev, start, cur)) {
                    next.insert(far);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        states = next;
    }
    true
}

/// Length relations forced by the half vertices of an AVC, as alternatives:
/// every realization satisfies all relations of at least one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedRelations {
    pub discipline: Discipline,
    pub alternatives: Vec<Vec<Constraint>>,
}

impl ForcedRelations {
    pub fn render(&self) -> String {
        if self.alternatives.is_empty() {
            return "none".to_string();
        }
        self.alternatives
            .iter()
            .map(
                |alt| {
                    if alt.is_empty() {
                        "no relation".to_string()
                    } else {
                        alt.iter().map(render_relation).collect::<Vec<_>>().join(", ")
                    }
                },
            )
            .collect::<Vec<_>>()
            .join(" or ")
    }

    pub fn contains(&self, rel: &Constraint) -> bool {
        let r = normalize(rel);
        self.alternatives.iter().any(|a| a.len() == 1 && a[0] == r)
    }
}

/// Extended edges with at most `k_max + 3` sides per word that the half
/// vertices of `avc` allow, and the length relations they force. An AVC
/// without half vertices needs nothing.
pub fn forced_relations_for_avc(avc: &Avc, k_max: u32) -> Result<ForcedRelations, EdgeError> {
    let halves = avc.vertices(Kind::Half);
    let in_half = |c: Corner| halves.iter().any(|h| h.n[c.index()] > 0);
    let discipline = if !in_half(Corner::Alpha) {
        Discipline::NoAlpha
    } else if !in_half(Corner::Beta) {
        Discipline::NoBeta
    } else {
        return Err(EdgeError::Unsupported("both α and β appear at half vertices".to_string()));
    };
    if halves.is_empty() {
        return Ok(ForcedRelations { discipline, alternatives: Vec::new() });
    }
    let relations = LengthRelationSet::scalene();
    let interior_ok = |s: Side| s.end_corners().iter().all(|&c| in_half(c));
    let words = candidate_words(k_max as usize + 3, &interior_ok);
    let words: Vec<EdgeWord> = words.into_iter().filter(|w| orientable(w, &halves)).collect();
    let mut alts = BTreeSet::new();
    for (i, t) in words.iter().enumerate() {
        for b in &words[i..] {
            if t == b || t.len() + b.len() < 3 {
                continue;
            }
            let diff: [i64; 3] = std::array::from_fn(|j| t.counts()[j] - b.counts()[j]);
            if diff.iter().all(|&x| x >= 0) || diff.iter().all(|&x| x <= 0) {
                // one word is longer outright unless they are permutations
                if diff != [0; 3] {
                    continue;
                }
            }
            if let Matching::Match { forced, .. } = match_words(t, b, &relations, discipline)? {
                alts.insert(forced);
            }
        }
    }
    Ok(ForcedRelations { discipline, alternatives: alts.into_iter().collect() })
}

/// `k` recovered from a word pair: the smaller count of `a`.
pub fn repetition(top: &EdgeWord, bottom: &EdgeWord) -> u32 {
    top.counts()[0].min(bottom.counts()[0]).to_u32().unwrap_or(0)
}
