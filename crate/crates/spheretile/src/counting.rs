//! Vertex statistics and the Euler-type identities they must satisfy.
//!
//! With `v_k` full vertices of degree `k` and `h_l` half vertices of degree
//! `l`, a tiling by `f` triangles has `e = (3f + h)/2` edges and
//!
//! ```text
//! 4v2 + 3v3 + 2v4 + v5 + 2h1 + h2 = 12 + (v7 + 2v8 + ...) + (h4 + 2h5 + ...)
//! 3f + 2v2 + h1 = 12 + (2v4 + 4v5 + 6v6 + ...) + (h2 + 3h3 + 5h4 + ...)
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::vertices::{Avc, Count, Kind};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexStats {
    /// degree -> number of full vertices
    pub v: BTreeMap<u32, u64>,
    /// degree -> number of half vertices
    pub h: BTreeMap<u32, u64>,
    pub f: u64,
}

impl VertexStats {
    pub fn new(f: u64) -> Self {
        VertexStats { f, ..Default::default() }
    }

    pub fn with_full(mut self, degree: u32, count: u64) -> Self {
        *self.v.entry(degree).or_default() += count;
        self
    }

    pub fn with_half(mut self, degree: u32, count: u64) -> Self {
        *self.h.entry(degree).or_default() += count;
        self
    }

    pub fn full_total(&self) -> i64 {
        self.v.values().sum::<u64>() as i64
    }

    pub fn half_total(&self) -> i64 {
        self.h.values().sum::<u64>() as i64
    }

    pub fn vk(&self, k: u32) -> i64 {
        self.v.get(&k).copied().unwrap_or(0) as i64
    }

    pub fn hl(&self, l: u32) -> i64 {
        self.h.get(&l).copied().unwrap_or(0) as i64
    }

    /// Replace one full vertex of degree `2l` by two half vertices of degree `l`.
    pub fn split_full(&self, l: u32) -> Option<VertexStats> {
        let mut s = self.clone();
        let slot = s.v.get_mut(&(2 * l))?;
        if *slot == 0 {
            return None;
        }
        *slot -= 1;
        if *slot == 0 {
            s.v.remove(&(2 * l));
        }
        *s.h.entry(l).or_default() += 2;
        Some(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

impl Check {
    fn new(id: &'static str, lhs: i64, rhs: i64) -> Self {
        Check { id, lhs, rhs, pass: lhs == rhs }
    }

    pub fn slack(&self) -> i64 {
        self.lhs - self.rhs
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "ok" } else { "FAIL" };
        write!(f, "{:<28} {} = {} {verdict}", self.id, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Edge count `(3f + h)/2` when the parity allows it.
pub fn edge_count(stats: &VertexStats) -> Option<i64> {
    let twice = 3 * stats.f as i64 + stats.half_total();
    (twice % 2 == 0).then_some(twice / 2)
}

pub fn check_euler(stats: &VertexStats) -> Report {
    let f = stats.f as i64;
    let v = stats.full_total();
    let h = stats.half_total();
    let mut checks = Vec::new();
    let twice = 3 * f + h;
    checks.push(Check::new("parity 3f+h even", twice % 2, 0));
    let e = twice.div_euclid(2);
    if twice % 2 == 0 {
        checks.push(Check::new("euler (v+h)-e+f=2", v + h - e + f, 2));
    } else {
        checks.push(Check { id: "euler (v+h)-e+f=2", lhs: v + h - e + f, rhs: 2, pass: false });
    }
    checks.push(Check::new("tiles f=2v+h-4", f, 2 * v + h - 4));
    let corners: i64 =
        stats.v.iter().map(|(&k, &n)| k as i64 * n as i64).sum::<i64>() + stats.h.iter().map(|(&l, &n)| l as i64 * n as i64).sum::<i64>();
    checks.push(Check::new("corners 3f=sum k*v_k+l*h_l", 3 * f, corners));
    Report { checks }
}

pub fn deficit_sides(stats: &VertexStats) -> [(i64, i64); 2] {
    let f = stats.f as i64;
    let lhs3 = 4 * stats.vk(2) + 3 * stats.vk(3) + 2 * stats.vk(4) + stats.vk(5) + 2 * stats.hl(1) + stats.hl(2);
    let rhs3 = 12
        + stats.v.iter().filter(|(&k, _)| k >= 7).map(|(&k, &n)| (k as i64 - 6) * n as i64).sum::<i64>()
        + stats.h.iter().filter(|(&l, _)| l >= 4).map(|(&l, &n)| (l as i64 - 3) * n as i64).sum::<i64>();
    let lhs4 = 3 * f + 2 * stats.vk(2) + stats.hl(1);
    let rhs4 = 12
        + stats.v.iter().filter(|(&k, _)| k >= 4).map(|(&k, &n)| (2 * k as i64 - 6) * n as i64).sum::<i64>()
        + stats.h.iter().filter(|(&l, _)| l >= 2).map(|(&l, &n)| (2 * l as i64 - 3) * n as i64).sum::<i64>();
    [(lhs3, rhs3), (lhs4, rhs4)]
}

pub fn check_deficit(stats: &VertexStats) -> Report {
    let [(l3, r3), (l4, r4)] = deficit_sides(stats);
    Report { checks: vec![Check::new("deficit low degrees", l3, r3), Check::new("deficit tile count", l4, r4)] }
}

/// `3v3 + 2v4 + v5 + h2 >= 12 − 4v2 − 2h1` whenever some half vertex exists.
pub fn low_degree_bound(stats: &VertexStats) -> bool {
    if stats.half_total() == 0 {
        return true;
    }
    3 * stats.vk(3) + 2 * stats.vk(4) + stats.vk(5) + stats.hl(2) >= 12 - 4 * stats.vk(2) - 2 * stats.hl(1)
}

/// Degree histogram of an AVC with numeric counts; `None` if a count is open.
pub fn stats_from_avc(avc: &Avc, f: u64) -> Option<VertexStats> {
    let mut s = VertexStats::new(f);
    for e in &avc.entries {
        let Count::Exact(k) = e.count else {
            return None;
        };
        if k == 0 {
            continue;
        }
        let map = if e.vertex.kind == Kind::Full { &mut s.v } else { &mut s.h };
        *map.entry(e.vertex.degree()).or_default() += k;
    }
    Some(s)
}

/// Smallest `f` allowed by the tile-count identity when a full vertex of
/// degree `seed_degree` and a half vertex of degree at least `min_half`
/// exist and no full vertex has degree 2 and no half vertex degree 1.
pub fn min_tile_count(seed_degree: u32, min_half: u32) -> u64 {
    let seed = (2 * seed_degree as i64 - 6).max(0);
    let half = 2 * min_half as i64 - 3;
    let need = 12 + seed + half;
    need.div_euclid(3) as u64 + u64::from(need % 3 != 0)
}
