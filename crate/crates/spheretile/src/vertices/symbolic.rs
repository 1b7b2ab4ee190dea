//! AVC derivation with the tile count left symbolic.
//!
//! On the seed's line every point is `n = x·m + y·u` with `f(2−2x−y) = 4y`.
//! Fixing `s = 2−2x−y` gives a family of vertices whose exponents are affine
//! in `f`; integrality of the exponents is a congruence on `f`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{check_seed, derive_avc, line_points, Avc, AvcEntry, Count, FCond, Kind, Profile, VertexError, VertexVector};
use crate::angles::lp::Rel;
use crate::angles::{int, Rational};

use super::angle_system;

/// `slope·f + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub slope: Rational,
    pub constant: Rational,
}

impl Affine {
    pub fn constant(c: Rational) -> Self {
        Affine { slope: Rational::zero(), constant: c }
    }

    pub fn at(&self, f: u64) -> Rational {
        &self.slope * int(f as i64) + &self.constant
    }

    pub fn halved(&self) -> Affine {
        let two = int(2);
        Affine { slope: &self.slope / &two, constant: &self.constant / &two }
    }

    pub fn parse(s: &str) -> Option<Affine> {
        let s = s.trim();
        let (num, den) = match s.rsplit_once('/') {
            Some((n, d)) => (n.trim(), d.trim().parse::<i64>().ok()?),
            None => (s, 1),
        };
        let num = num.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(num);
        let mut slope = Rational::zero();
        let mut constant = Rational::zero();
        let mut rest = num.replace(' ', "");
        if !rest.starts_with('-') {
            rest.insert(0, '+');
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for c in rest.chars() {
            if (c == '+' || c == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(c);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = t.split_at(1);
            let sign = if sign == "-" { -1 } else { 1 };
            if let Some(k) = body.strip_suffix('f') {
                let k: i64 = if k.is_empty() { 1 } else { k.parse().ok()? };
                slope += int(sign * k);
            } else {
                constant += int(sign * body.parse::<i64>().ok()?);
            }
        }
        let d = int(den);
        Some(Affine { slope: slope / &d, constant: constant / &d })
    }
}

impl fmt::Display for Affine {
    /// `f/4`, `(f+4)/8`, `2`, `f+1`.
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slope.is_zero() {
            return write!(fm, "{}", self.constant);
        }
        let den = self.slope.denom().lcm(self.constant.denom());
        let a = (&self.slope * Rational::from_integer(den.clone())).to_integer();
        let b = (&self.constant * Rational::from_integer(den.clone())).to_integer();
        let mut num = match a.to_i64() {
            Some(1) => "f".to_string(),
            Some(-1) => "-f".to_string(),
            _ => format!("{a}f"),
        };
        if b.is_positive() {
            num.push_str(&format!("+{b}"));
        } else if b.is_negative() {
            num.push_str(&format!("{b}"));
        }
        if den.is_one() {
            write!(fm, "{num}")
        } else if b.is_zero() {
            write!(fm, "{num}/{den}")
        } else {
            write!(fm, "({num})/{den}")
        }
    }
}

/// Vertex whose exponents may depend on `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymVertex {
    pub kind: Kind,
    pub exps: [Affine; 3],
}

impl SymVertex {
    pub fn from_vertex(v: &VertexVector) -> Self {
        SymVertex { kind: v.kind, exps: v.n.map(|k| Affine::constant(int(k as i64))) }
    }

    pub fn at(&self, f: u64) -> Option<VertexVector> {
        let mut n = [0u32; 3];
        for (i, e) in self.exps.iter().enumerate() {
            let v = e.at(f);
            if !v.is_integer() || v.is_negative() {
                return None;
            }
            n[i] = v.to_integer().to_u32()?;
        }
        Some(VertexVector { n, kind: self.kind })
    }

    pub fn greek(&self) -> String {
        super::greek_word(&self.exps.clone().map(|e| e.to_string()))
    }

    pub fn record(&self) -> String {
        format!("a^{} b^{} c^{} {}", self.exps[0], self.exps[1], self.exps[2], self.kind.as_str())
    }

    pub fn parse_record(toks: &[&str]) -> Option<SymVertex> {
        if toks.len() != 4 {
            return None;
        }
        let mut exps = Vec::new();
        for (tok, pre) in toks[..3].iter().zip(["a^", "b^", "c^"]) {
            exps.push(Affine::parse(tok.strip_prefix(pre)?)?);
        }
        let kind = toks[3].parse().ok()?;
        Some(SymVertex { kind, exps: [exps[0].clone(), exps[1].clone(), exps[2].clone()] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyEntry {
    pub cond: FCond,
    pub vertex: SymVertex,
}

/// Which tile counts and vertex degrees a derivation reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub min_f: u64,
    /// Upper limit for sporadic entries of seeds whose tile count is unbounded.
    pub max_f: u64,
    pub min_full_degree: u32,
    pub min_half_degree: u32,
}

impl Default for Scope {
    fn default() -> Self {
        Scope { min_f: 5, max_f: 300, min_full_degree: 3, min_half_degree: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicAvc {
    pub seed: VertexVector,
    /// Vertices present for every `f` in their class (the seed itself omitted).
    pub families: Vec<FamilyEntry>,
    /// Remaining vertices at individual tile counts (seed omitted).
    pub sporadic: Vec<Avc>,
}

impl SymbolicAvc {
    /// Every reported entry as `(condition, vertex)`.
    pub fn entries(&self) -> Vec<FamilyEntry> {
        let mut out: Vec<FamilyEntry> = self.families.clone();
        for a in &self.sporadic {
            for e in &a.entries {
                out.push(FamilyEntry { cond: a.f, vertex: SymVertex::from_vertex(&e.vertex) });
            }
        }
        out
    }

    /// Reported vertices at a concrete tile count.
    pub fn at(&self, f: u64) -> BTreeSet<VertexVector> {
        let mut out = BTreeSet::new();
        for fam in &self.families {
            if fam.cond.holds(f) {
                if let Some(v) = fam.vertex.at(f) {
                    out.insert(v);
                }
            }
        }
        for a in &self.sporadic {
            if a.f.holds(f) {
                out.extend(a.entries.iter().map(|e| e.vertex));
            }
        }
        out
    }
}

/// `s = 2 − 2x − y` for `n = x·m + y·u`.
pub fn line_parameter(m: &VertexVector, n: &[u32; 3]) -> Rational {
    let mi = m.n.map(|k| k as i64);
    let ni = n.map(|k| k as i64);
    let (i, j) = if mi[0] != mi[1] {
        (0, 1)
    } else if mi[0] != mi[2] {
        (0, 2)
    } else {
        (1, 2)
    };
    let x = Rational::new(BigInt::from(ni[i] - ni[j]), BigInt::from(mi[i] - mi[j]));
    let y = int(ni[i]) - &x * int(mi[i]);
    int(2) - &x * int(2) - y
}

/// Exponents of the family with parameter `s`.
pub fn family_exponents(m: &VertexVector, s: &Rational) -> [Affine; 3] {
    m.n.map(|k| {
        let k = int(k as i64);
        Affine { slope: s * (int(2) - &k) / int(8), constant: (int(2) - s) * &k / int(2) }
    })
}

/// Smallest modulus and residues describing the `f` for which all exponents
/// are integers.
fn integral_classes(exps: &[Affine; 3]) -> Vec<FCond> {
    let period = exps.iter().fold(BigInt::one(), |l, e| l.lcm(e.slope.denom())).to_u64().expect("small period");
    let ok: Vec<bool> = (0..period).map(|r| exps.iter().all(|e| e.at(r).is_integer())).collect();
    if !ok.iter().any(|&b| b) {
        return Vec::new();
    }
    let modulus = (1..=period)
        .filter(|m| period % m == 0)
        .find(|&m| (0..period).all(|r| ok[r as usize] == ok[(r % m) as usize]))
        .expect("period itself works");
    (0..modulus)
        .filter(|&r| ok[r as usize])
        .map(|residue| if modulus == 1 { FCond::All } else { FCond::Class { modulus, residue } })
        .collect()
}

/// Whether the seed's angle system is solvable for all large `f`.
pub fn unbounded(seed: &VertexVector, profile: Profile) -> bool {
    angle_system(&[*seed], profile).feasible_near_zero(3)
}

/// Largest feasible `f` for the seed, or `None` when unbounded or never feasible.
pub fn f_ceiling(seed: &VertexVector, profile: Profile) -> Option<u64> {
    let proj = angle_system(&[*seed], profile).project(&[3])?;
    let mut lower: Option<(Rational, bool)> = None;
    for c in &proj.constraints {
        let k = &c.coeffs[3];
        if c.rel == Rel::Eq {
            let e = -&c.constant / k;
            lower = Some((e, false));
            break;
        }
        if k.is_positive() {
            let e = -&c.constant / k;
            let strict = c.rel == Rel::Gt;
            if lower.as_ref().is_none_or(|(l, _)| e > *l) {
                lower = Some((e, strict));
            }
        }
    }
    let (e, strict) = lower?;
    if !e.is_positive() {
        return None;
    }
    // f = 4/ε, ε >= e (strictly when the bound is strict)
    let fmax = (int(4) / &e).floor().to_integer().to_u64()?;
    let exact = (int(4) / &e).is_integer();
    Some(if strict && exact { fmax - 1 } else { fmax })
}

const SAMPLE_BASE: u64 = 240 * 1000;
const SAMPLE_SPAN: u64 = 240;

pub fn derive_symbolic(seed: &VertexVector, profile: Profile, scope: &Scope) -> Result<SymbolicAvc, VertexError> {
    check_seed(seed)?;
    let mut families = BTreeSet::new();
    let mut family_params: Vec<(Rational, Vec<FCond>)> = Vec::new();
    let big = unbounded(seed, profile);
    if big {
        let mut params = BTreeSet::new();
        for f in SAMPLE_BASE..SAMPLE_BASE + SAMPLE_SPAN {
            for n in line_points(seed, f) {
                if n != seed.n {
                    params.insert(line_parameter(seed, &n));
                }
            }
        }
        for s in params {
            let exps = family_exponents(seed, &s);
            let grows = exps.iter().all(|e| e.slope.is_positive() || (e.slope.is_zero() && !e.constant.is_negative()));
            if !grows {
                continue;
            }
            let conds = integral_classes(&exps);
            for c in &conds {
                families.insert(FamilyEntry { cond: *c, vertex: SymVertex { kind: Kind::Full, exps: exps.clone() } });
            }
            let halves = exps.clone().map(|e| e.halved());
            for c in integral_classes(&halves) {
                families.insert(FamilyEntry { cond: c, vertex: SymVertex { kind: Kind::Half, exps: halves.clone() } });
            }
            family_params.push((s, conds));
        }
    }
    let top = if big { Some(scope.max_f) } else { f_ceiling(seed, profile).map(|c| c.min(scope.max_f)) };
    let seed_half = seed.halved();
    let mut sporadic = Vec::new();
    let mut ever = false;
    if let Some(top) = top {
        for f in scope.min_f..=top {
            let avc = derive_avc(seed, f, profile)?;
            if avc.is_empty() {
                continue;
            }
            ever = true;
            let in_family = |v: &VertexVector| families.iter().any(|fam| fam.cond.holds(f) && fam.vertex.at(f).as_ref() == Some(v));
            let keep: Vec<AvcEntry> = avc
                .entries
                .into_iter()
                .filter(|e| {
                    let v = &e.vertex;
                    let floor = if v.kind == Kind::Full { scope.min_full_degree } else { scope.min_half_degree };
                    v.n != seed.n && Some(*v) != seed_half && !in_family(v) && v.degree() >= floor
                })
                .map(|e| AvcEntry { vertex: e.vertex, count: Count::Unconstrained })
                .collect();
            if !keep.is_empty() {
                sporadic.push(Avc::new(FCond::Exact(f), keep));
            }
        }
    }
    if let Some(h) = seed_half {
        if ever || big {
            families.insert(FamilyEntry { cond: FCond::All, vertex: SymVertex::from_vertex(&h) });
        }
    }
    Ok(SymbolicAvc { seed: *seed, families: families.into_iter().collect(), sporadic })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexVector {
        VertexVector::parse_compact(s, Kind::Full).unwrap()
    }

    fn fam(avc: &SymbolicAvc, kind: Kind) -> Vec<String> {
        avc.families.iter().filter(|e| e.vertex.kind == kind).map(|e| format!("{} {}", e.cond, e.vertex.greek())).collect()
    }

    #[test]
    fn affine_rendering() {
        let a = Affine { slope: Rational::new(1.into(), 8.into()), constant: Rational::new(1.into(), 2.into()) };
        assert_eq!(a.to_string(), "(f+4)/8");
        assert_eq!(Affine::parse("(f+4)/8"), Some(a));
        for s in ["f/4", "f/2", "2", "0", "f+1", "(3f-2)/5", "-f"] {
            assert_eq!(Affine::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn residue_families() {
        let a = derive_symbolic(&v("a2b"), Profile::ORDERED, &Scope::default()).unwrap();
        assert_eq!(fam(&a, Kind::Full), vec!["f=4k β^f/4γ^f/2", "f=8k+4 αβ^(f+4)/8γ^f/4"]);
        assert_eq!(fam(&a, Kind::Half), vec!["f=8k β^f/8γ^f/4"]);

        let a = derive_symbolic(&v("a2b2"), Profile::ORDERED, &Scope::default()).unwrap();
        assert_eq!(fam(&a, Kind::Full), vec!["f=2k γ^f/2", "f=4k αβγ^f/4"]);
        assert_eq!(fam(&a, Kind::Half), vec!["f=4k γ^f/4", "f=all αβ"]);
    }

    #[test]
    fn bounded_seeds() {
        assert!(unbounded(&v("a3"), Profile::ORDERED));
        assert_eq!(f_ceiling(&v("a3"), Profile::ORDERED), None);
        let top = f_ceiling(&v("ab2"), Profile::ORDERED).unwrap();
        assert!((8..12).contains(&top), "{top}");
        let a = derive_symbolic(&v("a3"), Profile::ORDERED, &Scope::default()).unwrap();
        assert!(a.families.is_empty());
        let fs: Vec<FCond> = a.sporadic.iter().map(|x| x.f).collect();
        assert_eq!(fs, [6, 12, 24, 36, 60].map(FCond::Exact).to_vec());
        let c4 = derive_symbolic(&v("c4"), Profile::ORDERED, &Scope::default()).unwrap();
        assert_eq!(fam(&c4, Kind::Half), vec!["f=all γ²"]);
        assert!(c4.sporadic.is_empty());
    }
}
