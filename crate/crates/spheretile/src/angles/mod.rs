//! Exact angle arithmetic in units of π.
//!
//! Every angle is `q + r·t` with rational `q`, `r` and a single symbolic
//! irrational `t`. Comparisons are decided over an [`IntervalBound`] on `t`.

pub mod lp;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `1 + 4/f`, the angle sum of a tile in a tiling by `f` tiles.
pub fn angle_sum(f: u64) -> Rational {
    Rational::one() + Rational::new(BigInt::from(4), BigInt::from(f))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AngleError {
    #[error("tile count f={0} is below 2")]
    TooFewTiles(u64),
    #[error("angle sum {got} differs from 1+4/f = {want}")]
    AngleSum { got: String, want: String },
    #[error("angles are not certifiably ordered alpha > beta > gamma on the bound")]
    NotOrdered,
    #[error("scalene ordering needs f > 4, got {0}")]
    SmallScalene(u64),
    #[error("linear system is inconsistent")]
    Infeasible,
    #[error("cannot parse angle expression {0:?}")]
    Parse(String),
    #[error("empty interval: {0}")]
    EmptyInterval(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AngleExpr {
    pub q: Rational,
    pub r: Rational,
}

impl AngleExpr {
    pub fn new(q: Rational, r: Rational) -> Self {
        AngleExpr { q, r }
    }

    pub fn constant(q: Rational) -> Self {
        AngleExpr { q, r: Rational::zero() }
    }

    pub fn t() -> Self {
        AngleExpr { q: Rational::zero(), r: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    pub fn is_rational(&self) -> bool {
        self.r.is_zero()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        AngleExpr { q: &self.q * k, r: &self.r * k }
    }

    pub fn at(&self, t: &Rational) -> Rational {
        &self.q + &self.r * t
    }

    /// Numeric value in units of π.
    pub fn eval(&self, t: f64) -> f64 {
        to_f64(&self.q) + to_f64(&self.r) * t
    }
}

pub fn angle_add(x: &AngleExpr, y: &AngleExpr) -> AngleExpr {
    AngleExpr { q: &x.q + &y.q, r: &x.r + &y.r }
}

impl Add for &AngleExpr {
    type Output = AngleExpr;
    fn add(self, rhs: &AngleExpr) -> AngleExpr {
        angle_add(self, rhs)
    }
}

impl Sub for &AngleExpr {
    type Output = AngleExpr;
    fn sub(self, rhs: &AngleExpr) -> AngleExpr {
        AngleExpr { q: &self.q - &rhs.q, r: &self.r - &rhs.r }
    }
}

impl Neg for &AngleExpr {
    type Output = AngleExpr;
    fn neg(self) -> AngleExpr {
        AngleExpr { q: -&self.q, r: -&self.r }
    }
}

impl Mul<&Rational> for &AngleExpr {
    type Output = AngleExpr;
    fn mul(self, k: &Rational) -> AngleExpr {
        self.scale(k)
    }
}

fn fmt_coeff_t(r: &Rational) -> String {
    if r.is_one() {
        "t".to_string()
    } else {
        format!("{r}*t")
    }
}

impl fmt::Display for AngleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r.is_zero() {
            return write!(f, "{}", self.q);
        }
        if self.q.is_zero() {
            if self.r.is_negative() {
                return write!(f, "-{}", fmt_coeff_t(&-&self.r));
            }
            return write!(f, "{}", fmt_coeff_t(&self.r));
        }
        if self.r.is_negative() {
            write!(f, "{} - {}", self.q, fmt_coeff_t(&-&self.r))
        } else {
            write!(f, "{} + {}", self.q, fmt_coeff_t(&self.r))
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        Some(Rational::from_integer(s.parse().ok()?))
    }
}

fn parse_term(term: &str) -> Option<AngleExpr> {
    let term = term.trim();
    if let Some(coef) = term.strip_suffix('t') {
        let coef = coef.trim();
        let coef = coef.strip_suffix('*').unwrap_or(coef).trim();
        let r = if coef.is_empty() { Rational::one() } else { parse_rational(coef)? };
        Some(AngleExpr::new(Rational::zero(), r))
    } else {
        Some(AngleExpr::constant(parse_rational(term)?))
    }
}

impl FromStr for AngleExpr {
    type Err = AngleError;

    /// Accepts sums such as `t`, `1-t`, `2/3`, `1/2 + 1/3*t`, `-2*t + 1`.
    fn from_str(s: &str) -> Result<Self, AngleError> {
        let err = || AngleError::Parse(s.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(err());
        }
        let mut acc = AngleExpr::zero();
        let mut sign = 1i64;
        let mut cur = String::new();
        let flush = |cur: &mut String, sign: i64, acc: &mut AngleExpr| -> Result<(), AngleError> {
            if cur.trim().is_empty() {
                return Err(err());
            }
            let term = parse_term(cur).ok_or_else(err)?;
            *acc = &*acc + &term.scale(&int(sign));
            cur.clear();
            Ok(())
        };
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        // leading sign
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        while i < chars.len() {
            let c = chars[i];
            if (c == '+' || c == '-') && !cur.trim().is_empty() && !cur.trim_end().ends_with(['*', '/']) {
                flush(&mut cur, sign, &mut acc)?;
                sign = if c == '-' { -1 } else { 1 };
            } else {
                cur.push(c);
            }
            i += 1;
        }
        flush(&mut cur, sign, &mut acc)?;
        Ok(acc)
    }
}

/// Bound on the symbolic irrational `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalBound {
    pub lower: Rational,
    pub upper: Rational,
    pub lower_open: bool,
    pub upper_open: bool,
}

impl IntervalBound {
    pub fn new(lower: Rational, upper: Rational, lower_open: bool, upper_open: bool) -> Result<Self, AngleError> {
        if lower >= upper {
            return Err(AngleError::EmptyInterval(format!("[{lower}, {upper}]")));
        }
        Ok(IntervalBound { lower, upper, lower_open, upper_open })
    }

    pub fn open(lower: Rational, upper: Rational) -> Result<Self, AngleError> {
        Self::new(lower, upper, true, true)
    }

    /// The open interval (0, 1), a harmless default for rational triples.
    pub fn unit() -> Self {
        IntervalBound { lower: Rational::zero(), upper: Rational::one(), lower_open: true, upper_open: true }
    }

    pub fn contains(&self, t: &Rational) -> bool {
        let lo = if self.lower_open { t > &self.lower } else { t >= &self.lower };
        let hi = if self.upper_open { t < &self.upper } else { t <= &self.upper };
        lo && hi
    }

    /// Infimum of `x` over the bound and whether it is attained.
    pub fn inf(&self, x: &AngleExpr) -> (Rational, bool) {
        if x.r.is_zero() {
            (x.q.clone(), true)
        } else if x.r.is_positive() {
            (x.at(&self.lower), !self.lower_open)
        } else {
            (x.at(&self.upper), !self.upper_open)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Unknown,
}

/// Sign of `v` at an endpoint: open endpoints may touch zero.
fn endpoint_sign(v: &Rational, open: bool) -> Option<Ordering> {
    if v.is_positive() {
        Some(Ordering::Greater)
    } else if v.is_negative() {
        Some(Ordering::Less)
    } else if open {
        None
    } else {
        Some(Ordering::Equal)
    }
}

pub fn angle_compare(x: &AngleExpr, y: &AngleExpr, bound: &IntervalBound) -> Comparison {
    let d = x - y;
    if d.r.is_zero() {
        return match d.q.cmp(&Rational::zero()) {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        };
    }
    let lo = endpoint_sign(&d.at(&bound.lower), bound.lower_open);
    let hi = endpoint_sign(&d.at(&bound.upper), bound.upper_open);
    match (lo, hi) {
        (Some(Ordering::Greater), Some(Ordering::Greater)) | (Some(Ordering::Greater), None) | (None, Some(Ordering::Greater)) => {
            Comparison::Greater
        }
        (Some(Ordering::Less), Some(Ordering::Less)) | (Some(Ordering::Less), None) | (None, Some(Ordering::Less)) => Comparison::Less,
        _ => Comparison::Unknown,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ordered {
    Scalene,
    Unordered,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleTriple {
    pub alpha: AngleExpr,
    pub beta: AngleExpr,
    pub gamma: AngleExpr,
    pub f: u64,
    pub ordering: Ordered,
}

impl AngleTriple {
    pub fn new(
        alpha: AngleExpr,
        beta: AngleExpr,
        gamma: AngleExpr,
        f: u64,
        ordering: Ordered,
        bound: &IntervalBound,
    ) -> Result<Self, AngleError> {
        if f < 2 {
            return Err(AngleError::TooFewTiles(f));
        }
        let sum = &(&alpha + &beta) + &gamma;
        let want = AngleExpr::constant(angle_sum(f));
        if sum != want {
            return Err(AngleError::AngleSum { got: sum.to_string(), want: want.to_string() });
        }
        if ordering == Ordered::Scalene {
            if f <= 4 {
                return Err(AngleError::SmallScalene(f));
            }
            if angle_compare(&alpha, &beta, bound) != Comparison::Greater || angle_compare(&beta, &gamma, bound) != Comparison::Greater {
                return Err(AngleError::NotOrdered);
            }
        }
        Ok(AngleTriple { alpha, beta, gamma, f, ordering })
    }

    pub fn rational(alpha: Rational, beta: Rational, gamma: Rational, f: u64, ordering: Ordered) -> Result<Self, AngleError> {
        Self::new(AngleExpr::constant(alpha), AngleExpr::constant(beta), AngleExpr::constant(gamma), f, ordering, &IntervalBound::unit())
    }

    pub fn as_array(&self) -> [&AngleExpr; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// Numeric angles in radians at a sample value of `t`.
    pub fn radians(&self, t: f64) -> [f64; 3] {
        self.as_array().map(|a| a.eval(t) * std::f64::consts::PI)
    }
}

/// One row `c·(α,β,γ) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    pub coeffs: [Rational; 3],
    pub rhs: Rational,
}

impl LinearEquation {
    pub fn new(coeffs: [Rational; 3], rhs: Rational) -> Self {
        LinearEquation { coeffs, rhs }
    }

    pub fn from_ints(c: [i64; 3], rhs: Rational) -> Self {
        LinearEquation { coeffs: c.map(int), rhs }
    }
}

/// `point + Σ s_i·directions[i]` for free real `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub point: [Rational; 3],
    pub directions: Vec<[Rational; 3]>,
    /// Indices of the variables used as free parameters, one per direction.
    pub free: Vec<usize>,
}

impl AffineSolution {
    pub fn dimension(&self) -> usize {
        self.directions.len()
    }

    pub fn at(&self, params: &[Rational]) -> [Rational; 3] {
        let mut out = self.point.clone();
        for (d, s) in self.directions.iter().zip(params) {
            for i in 0..3 {
                out[i] = &out[i] + &d[i] * s;
            }
        }
        out
    }
}

/// Gauss-Jordan elimination; free variables become the parameters.
pub fn solve_linear(equations: &[LinearEquation]) -> Result<AffineSolution, AngleError> {
    let mut rows: Vec<[Rational; 4]> =
        equations.iter().map(|e| [e.coeffs[0].clone(), e.coeffs[1].clone(), e.coeffs[2].clone(), e.rhs.clone()]).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for k in 0..4 {
            rows[r][k] = &rows[r][k] * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for k in 0..4 {
                    let v = &rows[r][k] * &factor;
                    rows[i][k] = &rows[i][k] - &v;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[3].is_zero()) {
        return Err(AngleError::Infeasible);
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    let mut point = [Rational::zero(), Rational::zero(), Rational::zero()];
    for (i, &pc) in pivots.iter().enumerate() {
        point[pc] = rows[i][3].clone();
    }
    let directions = free
        .iter()
        .map(|&fc| {
            let mut d = [Rational::zero(), Rational::zero(), Rational::zero()];
            d[fc] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                d[pc] = -&rows[i][fc];
            }
            d
        })
        .collect();
    Ok(AffineSolution { point, directions, free })
}
