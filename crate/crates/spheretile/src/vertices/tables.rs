//! Text renderings of the derived vertex tables.

use std::fmt::Write as _;

use super::symbolic::{derive_symbolic, FamilyEntry, Scope, SymVertex, SymbolicAvc};
use super::{det3, enumerate_vertices, low_degree_catalog, FCond, Kind, Profile, VertexError, VertexVector};
use crate::angles::{rat, AngleTriple, IntervalBound, Ordered};
use crate::counting::min_tile_count;

pub const DEGREE3_SEEDS: [&str; 5] = ["a3", "b3", "ab2", "a2b", "a2c"];
pub const DEGREE4_SEEDS: [&str; 15] =
    ["a3b", "ab3", "b3c", "bc3", "a3c", "ac3", "a2bc", "ab2c", "abc2", "a4", "b4", "c4", "a2b2", "a2c2", "b2c2"];
pub const DEGREE5_SEEDS: [&str; 21] = [
    "a5", "b5", "c5", "a4b", "a4c", "a3b2", "a2b3", "a3c2", "a2c3", "ab4", "ac4", "b4c", "bc4", "b3c2", "b2c3", "a3bc", "a2b2c", "a2bc2",
    "abc3", "ab3c", "ab2c2",
];

/// Seeds of one degree, derived under the assumption that no full vertex of
/// lower degree (from 3) and, past degree 4, no degree-2 half vertex occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedTable {
    pub degree: u32,
    pub seeds: &'static [&'static str],
    pub scope: Scope,
}

pub const MAX_F: u64 = 300;

pub fn seed_table(degree: u32) -> SeedTable {
    let (seeds, min_half): (&'static [&'static str], u32) = match degree {
        3 => (&DEGREE3_SEEDS, 2),
        4 => (&DEGREE4_SEEDS, 2),
        5 => (&DEGREE5_SEEDS, 3),
        _ => panic!("no table for degree {degree}"),
    };
    let scope = Scope { min_f: min_tile_count(degree, min_half), max_f: MAX_F, min_full_degree: degree, min_half_degree: min_half };
    SeedTable { degree, seeds, scope }
}

/// `det(u, m, n) = 0` written as a linear condition, e.g. `2n2=n1+n3`.
pub fn line_condition(m: &VertexVector) -> String {
    let mi = m.n.map(|k| k as i64);
    let mut c = [0usize, 1, 2].map(|i| det3([1, 1, 1], mi, std::array::from_fn(|j| (i == j) as i64)));
    let g = c.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    if g != 0 {
        c = c.map(|x| x / g);
    }
    let term = |k: i64, i: usize| if k == 1 { format!("n{}", i + 1) } else { format!("{k}n{}", i + 1) };
    let pos: Vec<usize> = (0..3).filter(|&i| c[i] > 0).collect();
    let neg: Vec<usize> = (0..3).filter(|&i| c[i] < 0).collect();
    let (left, right) = if pos.len() == 1 && neg.len() == 2 {
        (pos, neg)
    } else if neg.len() == 1 && pos.len() == 2 {
        (neg, pos)
    } else if pos.first() < neg.first() {
        (pos, neg)
    } else {
        (neg, pos)
    };
    let side = |idx: &[usize]| idx.iter().map(|&i| term(c[i].abs(), i)).collect::<Vec<_>>().join("+");
    format!("{}={}", side(&left), side(&right))
}

fn cond_key(c: &FCond) -> (u8, u64, u64) {
    match *c {
        FCond::All => (0, 0, 0),
        FCond::Class { modulus, residue } => (1, modulus, residue),
        FCond::Exact(f) => (2, f, 0),
    }
}

fn entry_line(e: &FamilyEntry) -> String {
    format!("{} {} x*", e.cond, e.vertex.record())
}

fn sorted_entries(avc: &SymbolicAvc) -> Vec<FamilyEntry> {
    let mut es = avc.entries();
    es.sort_by(|a, b| (a.vertex.kind, cond_key(&a.cond), sym_key(&a.vertex)).cmp(&(b.vertex.kind, cond_key(&b.cond), sym_key(&b.vertex))));
    es
}

fn sym_key(v: &SymVertex) -> String {
    v.record()
}

pub fn render_row(avc: &SymbolicAvc) -> String {
    let mut s = format!("seed {} {}\n", avc.seed.record(), line_condition(&avc.seed));
    let es = sorted_entries(avc);
    if es.is_empty() {
        s.push_str("none\n");
    }
    for e in es {
        s.push_str(&entry_line(&e));
        s.push('\n');
    }
    s
}

pub fn derive_table(table: &SeedTable, profile: Profile) -> Result<Vec<SymbolicAvc>, VertexError> {
    table
        .seeds
        .iter()
        .map(|s| {
            let seed = VertexVector::parse_compact(s, Kind::Full)?;
            derive_symbolic(&seed, profile, &table.scope)
        })
        .collect()
}

pub fn render_seed_table(degree: u32, profile: Profile) -> Result<String, VertexError> {
    let table = seed_table(degree);
    let mut s = format!("# seeds of degree {degree}; sporadic f in [{}, {}]\n", table.scope.min_f, table.scope.max_f);
    for row in derive_table(&table, profile)? {
        s.push_str(&render_row(&row));
    }
    Ok(s)
}

pub fn render_catalog() -> String {
    let c = low_degree_catalog();
    let mut s = String::from("# low-degree vertices under alpha>beta>gamma and f>4\n");
    for (name, vs) in [("v3", &c.full3), ("v4", &c.full4), ("v5", &c.full5), ("h2", &c.half2)] {
        for v in vs {
            let _ = writeln!(s, "{name} {} x*", v.record());
        }
    }
    s
}

/// The rational angles `α=1/2, β=1/3, γ=1/6+4/f` at one tile count.
pub fn rational_case_triple(f: u64) -> Option<AngleTriple> {
    let gamma = rat(1, 6) + rat(4, f as i64);
    AngleTriple::rational(rat(1, 2), rat(1, 3), gamma, f, Ordered::Scalene).ok()
}

/// Full vertices of the rational case grouped by tile count; vertices
/// without `γ` do not depend on `f` and are grouped as `f=all`.
pub fn rational_case(max_f: u64) -> Vec<(FCond, Vec<VertexVector>)> {
    let mut all: Option<Vec<VertexVector>> = None;
    let mut rows = Vec::new();
    for f in 5..=max_f {
        let Some(t) = rational_case_triple(f) else { continue };
        let vs = enumerate_vertices(&t, &IntervalBound::unit(), Kind::Full).expect("rational angles are positive");
        let (free, tied): (Vec<_>, Vec<_>) = vs.into_iter().partition(|v| v.n[2] == 0);
        match &all {
            None => all = Some(free),
            Some(a) => assert_eq!(a, &free, "f-independent vertices changed at f={f}"),
        }
        if !tied.is_empty() {
            rows.push((FCond::Exact(f), tied));
        }
    }
    let mut out = vec![(FCond::All, all.unwrap_or_default())];
    out.extend(rows);
    out
}

pub fn render_rational_case(max_f: u64) -> String {
    let mut s = format!("# alpha=1/2, beta=1/3, gamma=1/6+4/f, scalene, f<={max_f}\n");
    for (cond, vs) in rational_case(max_f) {
        for v in vs {
            let _ = writeln!(s, "{cond} {} x*", v.record());
        }
    }
    s
}

/// `(3m + 2n + l − 12)·f = −24l` written out for the rational case; used by tests.
pub fn rational_case_equation(n: [u32; 3], f: u64) -> bool {
    let [m, k, l] = n.map(|x| x as i64);
    (3 * m + 2 * k + l - 12) * f as i64 == -24 * l
}
