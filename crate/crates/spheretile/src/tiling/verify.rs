//! The combinatorial verifier.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::angles::{AngleExpr, AngleTriple};
use crate::counting::{check_deficit, check_euler, VertexStats};
use crate::edges::{match_words, Corner, Discipline, EdgeWord, LengthRelationSet, Matching, Side};
use crate::vertices::{balance_filter, Avc, Kind};

use super::{CornerRef, LengthExpr, SegRef, SideRef, TilingComplex, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckGroup {
    VertexSums,
    EdgeWords,
    Counting,
    Balance,
    Structure,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 5] =
        [CheckGroup::VertexSums, CheckGroup::EdgeWords, CheckGroup::Counting, CheckGroup::Balance, CheckGroup::Structure];

    pub fn label(self) -> &'static str {
        match self {
            CheckGroup::VertexSums => "(i) vertex sums",
            CheckGroup::EdgeWords => "(ii) extended edges",
            CheckGroup::Counting => "(iii) counting",
            CheckGroup::Balance => "(iv) balance",
            CheckGroup::Structure => "(v) gluing and AAD",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyItem {
    pub group: CheckGroup,
    pub subject: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub items: Vec<VerifyItem>,
    pub avc: Avc,
    pub edges: Vec<ExtendedEdge>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn group_pass(&self, g: CheckGroup) -> bool {
        self.items.iter().filter(|i| i.group == g).all(|i| i.pass)
    }

    pub fn failures(&self) -> Vec<&VerifyItem> {
        self.items.iter().filter(|i| !i.pass).collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "avc {}", self.avc.notation())?;
        for g in CheckGroup::ALL {
            let items: Vec<_> = self.items.iter().filter(|i| i.group == g).collect();
            let bad = items.iter().filter(|i| !i.pass).count();
            let verdict = if bad == 0 { "ok" } else { "FAIL" };
            writeln!(f, "{:<22} {} checks, {} failed {verdict}", g.label(), items.len(), bad)?;
            for i in items.iter().filter(|i| !i.pass) {
                writeln!(f, "  {}: {}", i.subject, i.detail)?;
            }
        }
        let single = self.edges.iter().filter(|e| e.top_word().len() == 1 && e.bottom_word().len() == 1).count();
        for e in self.edges.iter().filter(|e| e.top_word().len() > 1 || e.bottom_word().len() > 1) {
            writeln!(f, "edge {e}")?;
        }
        if single > 0 {
            writeln!(f, "{single} single-side edges")?;
        }
        Ok(())
    }
}

/// A maximal line of glued sides, with both banks read in the same direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedEdge {
    pub top: Vec<SideRef>,
    pub bottom: Vec<SideRef>,
    pub cyclic: bool,
}

impl ExtendedEdge {
    pub fn top_word(&self) -> EdgeWord {
        EdgeWord::new(self.top.iter().map(|s| s.side).collect())
    }

    pub fn bottom_word(&self) -> EdgeWord {
        EdgeWord::new(self.bottom.iter().map(|s| s.side).collect())
    }
}

impl fmt::Display for ExtendedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cyc = if self.cyclic { " (great circle)" } else { "" };
        write!(f, "{} = {}{cyc}", self.top_word(), self.bottom_word())
    }
}

/// Group glued segment pairs into lines: two pairs are consecutive when they
/// share a side on either bank.
pub fn extended_edges(c: &TilingComplex) -> Vec<ExtendedEdge> {
    let count = |s: &SegRef| c.segment_count(s.owner());
    let next = |(t, b): (SegRef, SegRef)| -> Option<(SegRef, SegRef)> {
        if t.index + 1 < count(&t) {
            let t2 = SegRef::new(t.tile, t.side, t.index + 1);
            Some((t2, *c.gluing.get(&t2)?))
        } else if b.index > 0 {
            let b2 = SegRef::new(b.tile, b.side, b.index - 1);
            Some((*c.gluing.get(&b2)?, b2))
        } else {
            None
        }
    };
    let prev = |(t, b): (SegRef, SegRef)| -> Option<(SegRef, SegRef)> {
        if t.index > 0 {
            let t2 = SegRef::new(t.tile, t.side, t.index - 1);
            Some((t2, *c.gluing.get(&t2)?))
        } else if b.index + 1 < count(&b) {
            let b2 = SegRef::new(b.tile, b.side, b.index + 1);
            Some((*c.gluing.get(&b2)?, b2))
        } else {
            None
        }
    };
    let mut seen: BTreeSet<SegRef> = BTreeSet::new();
    let mut out = Vec::new();
    let limit = c.gluing.len() + 1;
    for (&x, &y) in &c.gluing {
        if seen.contains(&x) {
            continue;
        }
        let start = (x, y);
        let mut head = start;
        let mut cyclic = false;
        for _ in 0..limit {
            match prev(head) {
                Some(p) if p == start => {
                    cyclic = true;
                    break;
                }
                Some(p) => head = p,
                None => break,
            }
        }
        let mut cells = vec![head];
        let mut cur = head;
        for _ in 0..limit {
            match next(cur) {
                Some(n) if n == head => break,
                Some(n) => {
                    cells.push(n);
                    cur = n;
                }
                None => break,
            }
        }
        let mut top: Vec<SideRef> = Vec::new();
        let mut bottom: Vec<SideRef> = Vec::new();
        for (t, b) in &cells {
            seen.insert(*t);
            seen.insert(*b);
            if top.last() != Some(&t.owner()) {
                top.push(t.owner());
            }
            if bottom.last() != Some(&b.owner()) {
                bottom.push(b.owner());
            }
        }
        if cyclic {
            for w in [&mut top, &mut bottom] {
                if w.len() > 1 && w.first() == w.last() {
                    w.pop();
                }
            }
        }
        out.push(ExtendedEdge { top, bottom, cyclic });
    }
    out
}

/// Which corner the half vertices exclude, read off the AVC.
pub fn discipline_of(avc: &Avc) -> Discipline {
    let halves = avc.vertices(Kind::Half);
    if halves.iter().all(|v| v.n[0] == 0) {
        Discipline::NoAlpha
    } else if halves.iter().all(|v| v.n[1] == 0) {
        Discipline::NoBeta
    } else {
        Discipline::Unrestricted
    }
}

/// Adjacent angle deduction notation: each corner with the corners at the
/// far ends of its two flanking sides, `|^βα^γ|`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AadWord {
    pub entries: Vec<(Corner, Corner, Corner)>,
    pub full: bool,
}

impl AadWord {
    pub fn of(c: &TilingComplex, v: &Vertex) -> AadWord {
        let entries = v
            .corners
            .iter()
            .map(|cr| {
                let ch = c.chirality(cr.tile);
                let cw = ch.side_ends(ch.outgoing(cr.corner)).1;
                let ccw = ch.side_ends(ch.incoming(cr.corner)).0;
                (cw, cr.corner, ccw)
            })
            .collect();
        AadWord { entries, full: v.kind == Kind::Full }
    }

    pub fn reversed(&self) -> AadWord {
        AadWord { entries: self.entries.iter().rev().map(|&(p, x, q)| (q, x, p)).collect(), full: self.full }
    }

    /// Smallest form under rotation (full vertices) and reversal.
    pub fn canonical(&self) -> AadWord {
        let mut best: Option<AadWord> = None;
        for w in [self.clone(), self.reversed()] {
            let n = w.entries.len().max(1);
            let rots = if w.full { n } else { 1 };
            for r in 0..rots {
                let mut e = w.entries.clone();
                e.rotate_left(r);
                let cand = AadWord { entries: e, full: w.full };
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap_or_else(|| self.clone())
    }
}

impl fmt::Display for AadWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (p, x, q) in &self.entries {
            write!(f, "^{}{}^{}|", p.greek(), x.greek(), q.greek())?;
        }
        Ok(())
    }
}

fn item(items: &mut Vec<VerifyItem>, group: CheckGroup, subject: impl Into<String>, pass: bool, detail: impl Into<String>) {
    items.push(VerifyItem { group, subject: subject.into(), pass, detail: detail.into() });
}

fn vertex_name(v: &Vertex) -> String {
    let corners: Vec<String> = v.corners.iter().map(|c| c.to_string()).collect();
    format!("{} {} [{}]", v.kind.as_str(), v.vector().greek(), corners.join(","))
}

fn structure(c: &TilingComplex, relations: &LengthRelationSet, items: &mut Vec<VerifyItem>) {
    use CheckGroup::Structure as S;
    let ids: BTreeSet<u32> = c.tiles.iter().map(|t| t.id).collect();
    item(items, S, "tile ids", ids.len() == c.tiles.len(), "tile ids must be unique");
    for (owner, lens) in &c.segments {
        if !ids.contains(&owner.tile) {
            item(items, S, format!("side {owner}"), false, "segments on an unknown tile");
            continue;
        }
        let total = lens.iter().fold(LengthExpr::zero(), |acc, l| &acc + l);
        let diff = &total - &LengthExpr::side(owner.side);
        item(items, S, format!("side {owner}"), diff.vanishes_under(relations), format!("segments sum to {total}"));
        for (i, l) in lens.iter().enumerate() {
            if !l.is_positive_under(relations) {
                item(items, S, format!("segment {owner}.{i}"), false, format!("length {l} is not positive"));
            }
        }
    }
    let all = c.all_segments();
    let known: BTreeSet<SegRef> = all.iter().copied().collect();
    let mut glue_ok = true;
    for s in &all {
        match c.gluing.get(s) {
            None => {
                glue_ok = false;
                item(items, S, format!("segment {s}"), false, "not glued");
            }
            Some(p) if p == s => {
                glue_ok = false;
                item(items, S, format!("segment {s}"), false, "glued to itself");
            }
            Some(p) => {
                if !known.contains(p) || c.gluing.get(p) != Some(s) {
                    glue_ok = false;
                    item(items, S, format!("segment {s}"), false, format!("partner {p} does not glue back"));
                } else if s < p {
                    let (ls, lp) = (c.segment_length(*s).unwrap(), c.segment_length(*p).unwrap());
                    let eq = (&ls - &lp).vanishes_under(relations);
                    item(items, S, format!("glue {s} {p}"), eq, format!("lengths {ls} and {lp}"));
                }
            }
        }
    }
    for s in c.gluing.keys() {
        if !known.contains(s) {
            glue_ok = false;
            item(items, S, format!("segment {s}"), false, "glued but does not exist");
        }
    }
    item(items, S, "gluing involution", glue_ok, "fixed-point-free involution on all segments");

    let mut corner_count: BTreeMap<CornerRef, usize> = BTreeMap::new();
    for v in &c.vertices {
        for cr in &v.corners {
            *corner_count.entry(*cr).or_default() += 1;
        }
    }
    let mut corners_ok = true;
    for t in &c.tiles {
        for x in Corner::ALL {
            let cr = CornerRef { tile: t.id, corner: x };
            let n = corner_count.get(&cr).copied().unwrap_or(0);
            if n != 1 {
                corners_ok = false;
                item(items, S, format!("corner {cr}"), false, format!("in {n} vertices"));
            }
        }
    }
    if corner_count.keys().any(|cr| !ids.contains(&cr.tile)) {
        corners_ok = false;
        item(items, S, "corners", false, "vertex lists a corner of an unknown tile");
    }
    item(items, S, "corner coverage", corners_ok, "every corner in exactly one vertex");
    for v in &c.vertices {
        let host_ok = (v.kind == Kind::Half) == v.host.is_some();
        if !host_ok {
            item(items, S, vertex_name(v), false, "half vertices and only they carry a host side");
        }
    }
    if !glue_ok {
        return;
    }
    match c.derive_vertices() {
        Err(e) => item(items, S, "vertex tracing", false, e),
        Ok(derived) => {
            let breakpoints: u32 = c.segments.values().map(|v| v.len() as u32 - 1).sum();
            let halves = derived.iter().filter(|v| v.kind == Kind::Half).count() as u32;
            item(items, S, "breakpoints", breakpoints == halves, format!("{breakpoints} side breakpoints, {halves} traced half vertices"));
            let declared: BTreeSet<Vertex> = c.vertices.iter().map(Vertex::canonical).collect();
            let traced: BTreeSet<Vertex> = derived.iter().map(Vertex::canonical).collect();
            for v in traced.difference(&declared) {
                item(items, S, vertex_name(v), false, format!("traced from gluing but not declared, AAD {}", AadWord::of(c, v)));
            }
            for v in declared.difference(&traced) {
                item(items, S, vertex_name(v), false, "declared but inconsistent with the gluing");
            }
            item(items, S, "AAD consistency", traced == declared, format!("{} vertices traced", traced.len()));
        }
    }
}

/// Checks (i)–(v) for `c` with corner angles `angles` and side relations
/// `relations`.
pub fn verify(c: &TilingComplex, angles: &AngleTriple, relations: &LengthRelationSet) -> VerifyReport {
    let mut items = Vec::new();
    if !relations.is_satisfiable() {
        item(&mut items, CheckGroup::EdgeWords, "relations", false, "length relations are infeasible");
    }
    item(
        &mut items,
        CheckGroup::Counting,
        "tile count",
        angles.f == c.f(),
        format!("angles are for f={}, complex has {} tiles", angles.f, c.f()),
    );
    for v in &c.vertices {
        let sum = v.vector().dot(angles);
        let want = AngleExpr::constant(crate::angles::int(v.kind.target()));
        item(&mut items, CheckGroup::VertexSums, vertex_name(v), sum == want, format!("corner sum {sum}, want {want}"));
    }

    structure(c, relations, &mut items);

    let avc = c.avc();
    let discipline = discipline_of(&avc);
    let edges = if c.gluing.len() == c.all_segments().len() { extended_edges(c) } else { Vec::new() };
    for e in &edges {
        let (top, bottom) = (e.top_word(), e.bottom_word());
        if e.cyclic {
            for w in [&e.top, &e.bottom] {
                let total = w.iter().fold(LengthExpr::constant(crate::angles::int(-2)), |acc, s| &acc + &LengthExpr::side(s.side));
                item(
                    &mut items,
                    CheckGroup::EdgeWords,
                    format!("great circle {e}"),
                    total.vanishes_under(relations),
                    "each bank has length 2π",
                );
            }
            continue;
        }
        let (pass, detail) = match match_words(&top, &bottom, relations, discipline) {
            Ok(Matching::Match { family, .. }) => (true, format!("family {family:?}")),
            Ok(Matching::NoMatch(why)) => (false, why),
            Err(err) => (false, err.to_string()),
        };
        item(&mut items, CheckGroup::EdgeWords, format!("edge {e}"), pass, detail);
    }

    let mut stats = VertexStats::new(c.f());
    for v in &c.vertices {
        let d = v.corners.len() as u32;
        stats = if v.kind == Kind::Full { stats.with_full(d, 1) } else { stats.with_half(d, 1) };
    }
    for ch in check_euler(&stats).checks.into_iter().chain(check_deficit(&stats).checks) {
        item(&mut items, CheckGroup::Counting, ch.id, ch.pass, format!("{} = {}", ch.lhs, ch.rhs));
    }
    let totals: Vec<u64> = (0..3).map(|i| avc.entries.iter().map(|e| e.vertex.n[i] as u64 * count_of(e)).sum()).collect();
    item(
        &mut items,
        CheckGroup::Balance,
        "balance",
        balance_filter(&avc, c.f()),
        format!("α, β, γ appear {}, {}, {} times for f={}", totals[0], totals[1], totals[2], c.f()),
    );
    VerifyReport { items, avc, edges }
}

fn count_of(e: &crate::vertices::AvcEntry) -> u64 {
    match e.count {
        crate::vertices::Count::Exact(k) => k,
        crate::vertices::Count::Unconstrained => 0,
    }
}

/// Orientation bookkeeping used by tests: every tile side appears on exactly
/// one extended edge.
pub fn side_coverage(c: &TilingComplex, edges: &[ExtendedEdge]) -> bool {
    let mut seen = BTreeSet::new();
    for e in edges {
        for s in e.top.iter().chain(&e.bottom) {
            if !seen.insert(*s) {
                return false;
            }
        }
    }
    seen.len() == 3 * c.tiles.len() && c.tiles.iter().all(|t| Side::ALL.iter().all(|&s| seen.contains(&SideRef { tile: t.id, side: s })))
}
