//! Pattern matching of local pictures. Each builder takes the slots of a candidate site,
//! checks the pattern and sign conditions, and returns the canonical application.

use std::collections::{BTreeMap, BTreeSet};

use crate::diagram::{Arrow, ArrowId, Endpoint, GaussDiagram, Role, Slot};

use super::{tables, Direction, MoveApplication, MoveKind, Portion};

pub(super) struct Locator {
    arrows: BTreeMap<ArrowId, Arrow>,
}

impl Locator {
    pub fn new(d: &GaussDiagram) -> Self {
        Locator { arrows: d.arrows().into_iter().map(|a| (a.id, a)).collect() }
    }

    pub fn get(&self, id: ArrowId) -> Option<&Arrow> {
        self.arrows.get(&id)
    }

    pub fn slot(&self, e: Endpoint) -> Slot {
        self.arrows[&e.arrow].slot(e.role)
    }

    pub fn all(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.values()
    }
}

/// The two slots as an adjacent pair in strand order. On a circle of length two both
/// orders are adjacent; the one starting at position 0 is used.
pub(super) fn ordered_pair(d: &GaussDiagram, a: Slot, b: Slot) -> Option<(Slot, Slot)> {
    match (d.follows(a, b), d.follows(b, a)) {
        (true, true) => Some(if a.pos < b.pos { (a, b) } else { (b, a) }),
        (true, false) => Some((a, b)),
        (false, true) => Some((b, a)),
        (false, false) => None,
    }
}

fn portion(p: (Slot, Slot), delta: i8) -> Portion {
    Portion { strand: p.0.strand, start: p.0.pos, end: p.1.pos, delta }
}

fn point(s: Slot) -> Portion {
    Portion { strand: s.strand, start: s.pos, end: s.pos, delta: 1 }
}

fn bit(b: bool) -> i8 {
    if b {
        1
    } else {
        -1
    }
}

fn neighbours(d: &GaussDiagram, s: Slot) -> Vec<Slot> {
    let mut v = Vec::with_capacity(2);
    for p in [d.prev_pos(s.strand, s.pos), d.next_pos(s.strand, s.pos)].into_iter().flatten() {
        let n = Slot::new(s.strand, p);
        if n != s && !v.contains(&n) {
            v.push(n);
        }
    }
    v
}

/// Adjacent slot pairs in strand order, each physical pair once.
fn adjacent_pairs(d: &GaussDiagram) -> Vec<(Slot, Slot)> {
    let mut out = Vec::new();
    for i in 1..=d.n() {
        for p in 0..d.strand_len(i) {
            if let Some(q) = d.next_pos(i, p) {
                let (a, b) = (Slot::new(i, p), Slot::new(i, q));
                if ordered_pair(d, a, b) == Some((a, b)) {
                    out.push((a, b));
                }
            }
        }
    }
    out
}

fn mk(kind: MoveKind, portions: Vec<Portion>, arrows: Vec<ArrowId>, keep: Option<ArrowId>) -> MoveApplication {
    MoveApplication { kind, direction: Direction::Fwd, portions, arrows, keep, insertion: None }
}

/// OC, UC and F: transposition of two consecutive endpoints.
pub(super) fn swap_site(d: &GaussDiagram, kind: MoveKind, first: Slot, second: Slot) -> Option<MoveApplication> {
    if ordered_pair(d, first, second)? != (first, second) {
        return None;
    }
    let (e1, e2) = (d.endpoint(first), d.endpoint(second));
    let ok = match kind {
        MoveKind::OC => e1.is_tail() && e2.is_tail(),
        MoveKind::UC => e1.is_head() && e2.is_head(),
        MoveKind::F => e1.role != e2.role,
        _ => false,
    };
    ok.then(|| mk(kind, vec![portion((first, second), 1)], vec![e1.arrow, e2.arrow], None))
}

pub(super) fn r1_site(d: &GaussDiagram, loc: &Locator, id: ArrowId) -> Option<MoveApplication> {
    let a = loc.get(id)?;
    let p = ordered_pair(d, a.tail, a.head)?;
    Some(mk(MoveKind::R1, vec![portion(p, bit(p.0 == a.tail))], vec![id], None))
}

pub(super) fn r2_site(d: &GaussDiagram, loc: &Locator, a: ArrowId, b: ArrowId) -> Option<MoveApplication> {
    let (aa, bb) = (loc.get(a)?, loc.get(b)?);
    if a == b || aa.sign == bb.sign {
        return None;
    }
    let tails = ordered_pair(d, aa.tail, bb.tail)?;
    let heads = ordered_pair(d, aa.head, bb.head)?;
    let x = d.endpoint(tails.0).arrow;
    let y = if x == a { b } else { a };
    let parallel = d.endpoint(heads.0).arrow == x;
    Some(mk(MoveKind::R2, vec![portion(tails, 1), portion(heads, bit(parallel))], vec![x, y], None))
}

/// CC, SC, V, SV, VC, SR: one arrow.
pub(super) fn arrow_site(loc: &Locator, kind: MoveKind, id: ArrowId) -> Option<MoveApplication> {
    let a = loc.get(id)?;
    if matches!(kind, MoveKind::SC | MoveKind::SV) && !a.is_self() {
        return None;
    }
    Some(mk(kind, vec![point(a.tail), point(a.head)], vec![id], None))
}

fn normalise<const N: usize>(d: &GaussDiagram, pairs: [(Slot, Slot); N]) -> Option<[(Slot, Slot); N]> {
    let mut out = pairs;
    for (o, p) in out.iter_mut().zip(pairs) {
        *o = ordered_pair(d, p.0, p.1)?;
    }
    let distinct: BTreeSet<Slot> = out.iter().flat_map(|p| [p.0, p.1]).collect();
    (distinct.len() == 2 * N).then_some(out)
}

fn which<const N: usize>(d: &GaussDiagram, pairs: &[(Slot, Slot); N], e: Endpoint) -> Option<usize> {
    pairs.iter().position(|p| d.endpoint(p.0) == e || d.endpoint(p.1) == e)
}

fn tails_in(d: &GaussDiagram, p: (Slot, Slot)) -> usize {
    d.endpoint(p.0).is_tail() as usize + d.endpoint(p.1).is_tail() as usize
}

fn tail_arrows(d: &GaussDiagram, p: (Slot, Slot)) -> Vec<ArrowId> {
    [p.0, p.1].iter().map(|&s| d.endpoint(s)).filter(|e| e.is_tail()).map(|e| e.arrow).collect()
}

/// R3 and M (stacked triangle) or DELTA (cyclic triangle).
pub(super) fn triangle_site(
    d: &GaussDiagram,
    loc: &Locator,
    kind: MoveKind,
    pairs: [(Slot, Slot); 3],
) -> Option<MoveApplication> {
    let pairs = normalise(d, pairs)?;
    let mut ids = BTreeSet::new();
    for p in &pairs {
        let (e1, e2) = (d.endpoint(p.0), d.endpoint(p.1));
        if e1.arrow == e2.arrow {
            return None;
        }
        ids.insert(e1.arrow);
        ids.insert(e2.arrow);
    }
    if ids.len() != 3 {
        return None;
    }
    let sign = |id: ArrowId| loc.get(id).map(|a| a.sign.value() as i8);
    let first_is = |p: (Slot, Slot), e: Endpoint| d.endpoint(p.0) == e;
    let counts: Vec<usize> = pairs.iter().map(|&p| tails_in(d, p)).collect();
    match kind {
        MoveKind::R3 | MoveKind::M => {
            let top = counts.iter().position(|&c| c == 2)?;
            let mid = counts.iter().position(|&c| c == 1)?;
            let bot = counts.iter().position(|&c| c == 0)?;
            let top_arrows = tail_arrows(d, pairs[top]);
            let z = tail_arrows(d, pairs[mid])[0];
            let x = *top_arrows.iter().find(|&&a| which(d, &pairs, Endpoint::head(a)) == Some(mid))?;
            let y = *top_arrows.iter().find(|&&a| which(d, &pairs, Endpoint::head(a)) == Some(bot))?;
            if which(d, &pairs, Endpoint::head(z)) != Some(bot) {
                return None;
            }
            let o = [
                bit(first_is(pairs[top], Endpoint::tail(x))),
                bit(first_is(pairs[mid], Endpoint::head(x))),
                bit(first_is(pairs[bot], Endpoint::head(y))),
            ];
            if kind == MoveKind::R3 && !tables::stacked_admits(o, [sign(x)?, sign(y)?, sign(z)?]) {
                return None;
            }
            let portions = vec![portion(pairs[top], o[0]), portion(pairs[mid], o[1]), portion(pairs[bot], o[2])];
            Some(mk(kind, portions, vec![x, y, z], None))
        }
        MoveKind::Delta => {
            if counts.iter().any(|&c| c != 1) {
                return None;
            }
            let l0 = (0..3).min_by_key(|&k| pairs[k].0)?;
            let x = tail_arrows(d, pairs[l0])[0];
            let l1 = which(d, &pairs, Endpoint::head(x))?;
            let z = tail_arrows(d, pairs[l1])[0];
            let l2 = which(d, &pairs, Endpoint::head(z))?;
            let y = tail_arrows(d, pairs[l2])[0];
            if l1 == l0 || l2 == l0 || l2 == l1 || which(d, &pairs, Endpoint::head(y)) != Some(l0) {
                return None;
            }
            let o = [
                bit(first_is(pairs[l0], Endpoint::tail(x))),
                bit(first_is(pairs[l1], Endpoint::head(x))),
                bit(first_is(pairs[l2], Endpoint::tail(y))),
            ];
            if !tables::cyclic_admits(o, [sign(x)?, sign(y)?, sign(z)?]) {
                return None;
            }
            let portions = vec![portion(pairs[l0], o[0]), portion(pairs[l1], o[1]), portion(pairs[l2], o[2])];
            Some(mk(kind, portions, vec![x, y, z], None))
        }
        _ => None,
    }
}

/// BP and WBP: two portions of adjacent tails crossing two portions of adjacent heads.
pub(super) fn grid_site(
    d: &GaussDiagram,
    loc: &Locator,
    kind: MoveKind,
    pairs: [(Slot, Slot); 4],
    keep: Option<ArrowId>,
) -> Option<MoveApplication> {
    let pairs = normalise(d, pairs)?;
    let counts: Vec<usize> = pairs.iter().map(|&p| tails_in(d, p)).collect();
    let mut tp: Vec<usize> = (0..4).filter(|&k| counts[k] == 2).collect();
    let hp: Vec<usize> = (0..4).filter(|&k| counts[k] == 0).collect();
    if tp.len() != 2 || hp.len() != 2 {
        return None;
    }
    tp.sort_by_key(|&k| pairs[k].0);
    let (x1, x2) = (pairs[tp[0]], pairs[tp[1]]);
    let ik = d.endpoint(x1.0).arrow;
    let il = d.endpoint(x1.1).arrow;
    let y1 = which(d, &pairs, Endpoint::head(ik))?;
    let y2 = which(d, &pairs, Endpoint::head(il))?;
    if y1 == y2 || !hp.contains(&y1) || !hp.contains(&y2) {
        return None;
    }
    let (c, e) = (d.endpoint(x2.0).arrow, d.endpoint(x2.1).arrow);
    let (jk, jl) = if which(d, &pairs, Endpoint::head(c)) == Some(y1) { (c, e) } else { (e, c) };
    if which(d, &pairs, Endpoint::head(jk)) != Some(y1) || which(d, &pairs, Endpoint::head(jl)) != Some(y2) {
        return None;
    }
    let (y1, y2) = (pairs[y1], pairs[y2]);
    let o = [
        1,
        bit(d.endpoint(x2.0).arrow == jk),
        bit(d.endpoint(y1.0).arrow == ik),
        bit(d.endpoint(y2.0).arrow == il),
    ];
    let arrows = vec![ik, il, jk, jl];
    match kind {
        MoveKind::Bp => {
            let s: Vec<i8> = arrows.iter().map(|&a| loc.get(a).map(|x| x.sign.value() as i8)).collect::<Option<_>>()?;
            if keep.is_some() || !tables::band_admits(o, [s[0], s[1], s[2], s[3]]) {
                return None;
            }
        }
        MoveKind::Wbp => {
            if !arrows.contains(&keep?) {
                return None;
            }
        }
        _ => return None,
    }
    let portions = vec![portion(x1, o[0]), portion(x2, o[1]), portion(y1, o[2]), portion(y2, o[3])];
    Some(mk(kind, portions, arrows, keep))
}

/// MIXED4: a clasp, arrows a: P -> Q and b: Q -> P of equal sign.
pub(super) fn clasp_site(d: &GaussDiagram, loc: &Locator, pairs: [(Slot, Slot); 2]) -> Option<MoveApplication> {
    let mut pairs = normalise(d, pairs)?;
    pairs.sort_by_key(|p| p.0);
    let [p, q] = pairs;
    if tails_in(d, p) != 1 || tails_in(d, q) != 1 {
        return None;
    }
    let a = tail_arrows(d, p)[0];
    let b = tail_arrows(d, q)[0];
    if a == b || which(d, &pairs, Endpoint::head(a)) != Some(1) || which(d, &pairs, Endpoint::head(b)) != Some(0) {
        return None;
    }
    if loc.get(a)?.sign != loc.get(b)?.sign {
        return None;
    }
    let portions = vec![
        portion(p, bit(d.endpoint(p.0) == Endpoint::tail(a))),
        portion(q, bit(d.endpoint(q.0) == Endpoint::head(a))),
    ];
    Some(mk(MoveKind::Mixed4, portions, vec![a, b], None))
}

/// All forward applications of `kind`, sorted.
pub(super) fn enumerate_forward(d: &GaussDiagram, kind: MoveKind) -> Vec<MoveApplication> {
    let loc = Locator::new(d);
    let mut out: BTreeSet<MoveApplication> = BTreeSet::new();
    let role_of = |s: Slot| d.endpoint(s);
    match kind {
        MoveKind::OC | MoveKind::UC | MoveKind::F => {
            for (a, b) in adjacent_pairs(d) {
                out.extend(swap_site(d, kind, a, b));
            }
        }
        MoveKind::R1 => {
            for a in loc.all() {
                out.extend(r1_site(d, &loc, a.id));
            }
        }
        MoveKind::R2 => {
            for (s1, s2) in adjacent_pairs(d) {
                let (e1, e2) = (role_of(s1), role_of(s2));
                if e1.is_tail() && e2.is_tail() {
                    out.extend(r2_site(d, &loc, e1.arrow, e2.arrow));
                }
            }
        }
        MoveKind::CC | MoveKind::SC | MoveKind::V | MoveKind::SV | MoveKind::VC | MoveKind::SR => {
            for a in loc.all() {
                out.extend(arrow_site(&loc, kind, a.id));
            }
        }
        MoveKind::R3 | MoveKind::M => {
            for (s1, s2) in adjacent_pairs(d) {
                let (e1, e2) = (role_of(s1), role_of(s2));
                if !(e1.is_tail() && e2.is_tail()) {
                    continue;
                }
                for (x, y) in [(e1.arrow, e2.arrow), (e2.arrow, e1.arrow)] {
                    let (hx, hy) = (loc.slot(Endpoint::head(x)), loc.slot(Endpoint::head(y)));
                    for m in neighbours(d, hx) {
                        let ez = role_of(m);
                        if !ez.is_tail() || ez.arrow == x || ez.arrow == y {
                            continue;
                        }
                        for b in neighbours(d, hy) {
                            if role_of(b) == Endpoint::head(ez.arrow) {
                                out.extend(triangle_site(d, &loc, kind, [(s1, s2), (hx, m), (hy, b)]));
                            }
                        }
                    }
                }
            }
        }
        MoveKind::Delta => {
            for (s1, s2) in adjacent_pairs(d) {
                let (e1, e2) = (role_of(s1), role_of(s2));
                if e1.role == e2.role || e1.arrow == e2.arrow {
                    continue;
                }
                let (x, y) = if e1.is_tail() { (e1.arrow, e2.arrow) } else { (e2.arrow, e1.arrow) };
                let hx = loc.slot(Endpoint::head(x));
                for m in neighbours(d, hx) {
                    let ez = role_of(m);
                    if !ez.is_tail() || ez.arrow == x || ez.arrow == y {
                        continue;
                    }
                    let hz = loc.slot(Endpoint::head(ez.arrow));
                    for b in neighbours(d, hz) {
                        if role_of(b) == Endpoint::tail(y) {
                            out.extend(triangle_site(d, &loc, kind, [(s1, s2), (hx, m), (hz, b)]));
                        }
                    }
                }
            }
        }
        MoveKind::Bp | MoveKind::Wbp => {
            for (s1, s2) in adjacent_pairs(d) {
                let (e1, e2) = (role_of(s1), role_of(s2));
                if !(e1.is_tail() && e2.is_tail()) {
                    continue;
                }
                let (a, b) = (e1.arrow, e2.arrow);
                let (ha, hb) = (loc.slot(Endpoint::head(a)), loc.slot(Endpoint::head(b)));
                for m in neighbours(d, ha) {
                    let ec = role_of(m);
                    if !ec.is_head() || ec.arrow == a || ec.arrow == b {
                        continue;
                    }
                    for k in neighbours(d, hb) {
                        let ee = role_of(k);
                        if !ee.is_head() || [a, b, ec.arrow].contains(&ee.arrow) {
                            continue;
                        }
                        let (tc, te) = (loc.slot(Endpoint::tail(ec.arrow)), loc.slot(Endpoint::tail(ee.arrow)));
                        if ordered_pair(d, tc, te).is_none() {
                            continue;
                        }
                        let pairs = [(s1, s2), (tc, te), (ha, m), (hb, k)];
                        if kind == MoveKind::Bp {
                            out.extend(grid_site(d, &loc, kind, pairs, None));
                        } else {
                            for keep in [a, b, ec.arrow, ee.arrow] {
                                out.extend(grid_site(d, &loc, kind, pairs, Some(keep)));
                            }
                        }
                    }
                }
            }
        }
        MoveKind::Mixed4 => {
            for (s1, s2) in adjacent_pairs(d) {
                let (e1, e2) = (role_of(s1), role_of(s2));
                if e1.role == e2.role || e1.arrow == e2.arrow {
                    continue;
                }
                let (a, b) = if e1.is_tail() { (e1.arrow, e2.arrow) } else { (e2.arrow, e1.arrow) };
                let (ha, tb) = (loc.slot(Endpoint::head(a)), loc.slot(Endpoint::tail(b)));
                if ordered_pair(d, ha, tb).is_some() {
                    out.extend(clasp_site(d, &loc, [(s1, s2), (ha, tb)]));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Rebuilds the canonical application from the identifying data of `app`
/// (portions for multi-portion kinds, arrow ids otherwise).
pub(super) fn rebuild(d: &GaussDiagram, loc: &Locator, kind: MoveKind, app: &MoveApplication) -> Option<MoveApplication> {
    let slots = |p: &Portion| -> Option<(Slot, Slot)> {
        let a = Slot::new(p.strand, p.start);
        let b = Slot::new(p.strand, p.end);
        d.get_endpoint(a)?;
        d.get_endpoint(b)?;
        Some((a, b))
    };
    let pairs: Option<Vec<(Slot, Slot)>> = app.portions.iter().map(slots).collect();
    let pairs = pairs?;
    match kind {
        MoveKind::OC | MoveKind::UC | MoveKind::F => {
            let [p] = pairs[..] else { return None };
            swap_site(d, kind, p.0, p.1)
        }
        MoveKind::R1 => r1_site(d, loc, *app.arrows.first()?),
        MoveKind::R2 => match app.arrows[..] {
            [a, b] => r2_site(d, loc, a, b),
            _ => None,
        },
        MoveKind::CC | MoveKind::SC | MoveKind::V | MoveKind::SV | MoveKind::VC | MoveKind::SR => {
            arrow_site(loc, kind, *app.arrows.first()?)
        }
        MoveKind::R3 | MoveKind::M | MoveKind::Delta => {
            let [a, b, c] = pairs[..] else { return None };
            triangle_site(d, loc, kind, [a, b, c])
        }
        MoveKind::Bp | MoveKind::Wbp => {
            let [a, b, c, e] = pairs[..] else { return None };
            grid_site(d, loc, kind, [a, b, c, e], app.keep)
        }
        MoveKind::Mixed4 => {
            let [a, b] = pairs[..] else { return None };
            clasp_site(d, loc, [a, b])
        }
    }
}

pub(super) fn role_slots(loc: &Locator, id: ArrowId) -> Option<(Slot, Slot)> {
    loc.get(id).map(|a| (a.slot(Role::Tail), a.slot(Role::Head)))
}
