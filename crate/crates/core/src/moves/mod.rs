//! Local moves on Gauss diagrams: enumeration, application, inversion and replay.

mod sites;
pub mod tables;
mod trace;

pub use trace::MoveSequence;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{ArrowId, DiagramError, Endpoint, GaussDiagram, Kind, Role, Sign, Slot};
use sites::Locator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    OC,
    UC,
    CC,
    SC,
    V,
    SV,
    VC,
    SR,
    F,
    Delta,
    Bp,
    Wbp,
    Mixed4,
    M,
}

impl MoveKind {
    pub const ALL: [MoveKind; 17] = [
        MoveKind::R1,
        MoveKind::R2,
        MoveKind::R3,
        MoveKind::OC,
        MoveKind::UC,
        MoveKind::CC,
        MoveKind::SC,
        MoveKind::V,
        MoveKind::SV,
        MoveKind::VC,
        MoveKind::SR,
        MoveKind::F,
        MoveKind::Delta,
        MoveKind::Bp,
        MoveKind::Wbp,
        MoveKind::Mixed4,
        MoveKind::M,
    ];

    /// The welded Reidemeister moves, always available.
    pub const REIDEMEISTER: [MoveKind; 4] = [MoveKind::R1, MoveKind::R2, MoveKind::R3, MoveKind::OC];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1 => "R1",
            MoveKind::R2 => "R2",
            MoveKind::R3 => "R3",
            MoveKind::OC => "OC",
            MoveKind::UC => "UC",
            MoveKind::CC => "CC",
            MoveKind::SC => "SC",
            MoveKind::V => "V",
            MoveKind::SV => "SV",
            MoveKind::VC => "VC",
            MoveKind::SR => "SR",
            MoveKind::F => "F",
            MoveKind::Delta => "DELTA",
            MoveKind::Bp => "BP",
            MoveKind::Wbp => "WBP",
            MoveKind::Mixed4 => "MIXED4",
            MoveKind::M => "M",
        }
    }

    pub fn is_reidemeister(self) -> bool {
        Self::REIDEMEISTER.contains(&self)
    }

    /// Kinds whose backward direction inserts arrows and needs explicit insertion data.
    pub fn inserts(self) -> bool {
        matches!(self, MoveKind::R1 | MoveKind::R2 | MoveKind::V | MoveKind::SV)
    }

    /// Change in the number of arrows caused by a forward application.
    pub fn arrow_delta(self) -> i32 {
        match self {
            MoveKind::R1 | MoveKind::V | MoveKind::SV => -1,
            MoveKind::R2 => -2,
            _ => 0,
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = MoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        let alias = match up.as_str() {
            "Δ" | "DEL" => "DELTA",
            "#" | "SHARP" => "BP",
            "WSHARP" => "WBP",
            "4" | "FOUR" | "4-MOVE" => "MIXED4",
            other => other,
        };
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| MoveError::Parse(format!("unknown move kind `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    Fwd,
    Bwd,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Fwd => Direction::Bwd,
            Direction::Bwd => Direction::Fwd,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Fwd => "fwd",
            Direction::Bwd => "bwd",
        })
    }
}

/// A matched portion of the local picture: the slots `start` and `end` (consecutive, or
/// equal for single-endpoint portions) on `strand`, read with direction `delta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Portion {
    pub strand: usize,
    pub start: usize,
    pub end: usize,
    pub delta: i8,
}

/// An insertion point: before position `index` of `strand` (`index == len` appends).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Gap {
    pub strand: usize,
    pub index: usize,
}

/// Data of a backward R1, R2, V or SV move.
///
/// The tails go to `tail`, the heads to `head`. For R2 the tails are placed as
/// `ids[0] ids[1]` and the heads in the same order, or reversed when `crossed`; the second
/// arrow gets the opposite sign. When both gaps coincide the head block comes first iff
/// `head_first`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Insertion {
    pub ids: Vec<ArrowId>,
    pub sign: Sign,
    pub tail: Gap,
    pub head: Gap,
    pub crossed: bool,
    pub head_first: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MoveApplication {
    pub kind: MoveKind,
    pub direction: Direction,
    pub portions: Vec<Portion>,
    pub arrows: Vec<ArrowId>,
    pub keep: Option<ArrowId>,
    pub insertion: Option<Insertion>,
}

impl MoveApplication {
    fn is_insertion(&self) -> bool {
        self.kind.inserts() && self.direction == Direction::Bwd
    }

    /// Arrow ids touched by the move (inserted ids for insertions).
    pub fn touched(&self) -> Vec<ArrowId> {
        match &self.insertion {
            Some(ins) => ins.ids.clone(),
            None => self.arrows.clone(),
        }
    }

    /// Renames arrow ids; ids missing from `map` are kept.
    pub fn rename(&self, map: &BTreeMap<ArrowId, ArrowId>) -> MoveApplication {
        let r = |a: &ArrowId| *map.get(a).unwrap_or(a);
        let mut out = self.clone();
        out.arrows = self.arrows.iter().map(r).collect();
        out.keep = self.keep.as_ref().map(r);
        if let Some(ins) = &mut out.insertion {
            ins.ids = ins.ids.iter().map(r).collect();
        }
        out
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("{kind} does not apply: {reason}")]
    Inapplicable { kind: MoveKind, reason: String },
    #[error("step {index}: {source}")]
    Step { index: usize, source: Box<MoveError> },
    #[error("sequence starts from {expected}, diagram is {found}")]
    Fingerprint { expected: String, found: String },
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn inapplicable(kind: MoveKind, reason: impl Into<String>) -> MoveError {
    MoveError::Inapplicable { kind, reason: reason.into() }
}

/// All forward applications of `kind` at `d`, in a deterministic order.
/// Involutive kinds have no separate backward applications.
pub fn enumerate(d: &GaussDiagram, kind: MoveKind) -> Vec<MoveApplication> {
    sites::enumerate_forward(d, kind)
}

fn gaps(d: &GaussDiagram, strand: usize) -> impl Iterator<Item = Gap> {
    let len = d.strand_len(strand);
    let hi = match d.kind() {
        Kind::Open => len + 1,
        Kind::Closed => len.max(1),
    };
    (0..hi).map(move |index| Gap { strand, index })
}

/// Backward applications of an inserting kind using the given new ids.
pub fn enumerate_insertions(d: &GaussDiagram, kind: MoveKind, ids: &[ArrowId]) -> Vec<MoveApplication> {
    let mut out = Vec::new();
    let all: Vec<Gap> = (1..=d.n()).flat_map(|i| gaps(d, i)).collect();
    let mk = |tail: Gap, head: Gap, sign: Sign, crossed: bool, head_first: bool| MoveApplication {
        kind,
        direction: Direction::Bwd,
        portions: Vec::new(),
        arrows: Vec::new(),
        keep: None,
        insertion: Some(Insertion { ids: ids.to_vec(), sign, tail, head, crossed, head_first }),
    };
    let signs = [Sign::Plus, Sign::Minus];
    match (kind, ids.len()) {
        (MoveKind::R1, 1) => {
            for &g in &all {
                for s in signs {
                    for hf in [false, true] {
                        out.push(mk(g, g, s, false, hf));
                    }
                }
            }
        }
        (MoveKind::R2, 2) | (MoveKind::V, 1) | (MoveKind::SV, 1) => {
            let crossings: &[bool] = if kind == MoveKind::R2 { &[false, true] } else { &[false] };
            for &t in &all {
                for &h in &all {
                    if kind == MoveKind::SV && t.strand != h.strand {
                        continue;
                    }
                    let orders: &[bool] = if t == h { &[false, true] } else { &[false] };
                    for s in signs {
                        for &c in crossings {
                            for &hf in orders {
                                out.push(mk(t, h, s, c, hf));
                            }
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn check_insertion(d: &GaussDiagram, kind: MoveKind, ins: &Insertion) -> Result<(), MoveError> {
    let want = if kind == MoveKind::R2 { 2 } else { 1 };
    if ins.ids.len() != want {
        return Err(inapplicable(kind, format!("needs {want} new arrow id(s)")));
    }
    if ins.ids.iter().any(|&a| d.has_arrow(a)) || (want == 2 && ins.ids[0] == ins.ids[1]) {
        return Err(inapplicable(kind, "new arrow ids must be fresh and distinct"));
    }
    for g in [ins.tail, ins.head] {
        if g.strand == 0 || g.strand > d.n() || g.index > d.strand_len(g.strand) {
            return Err(inapplicable(kind, format!("gap {}:{} out of range", g.strand, g.index)));
        }
    }
    if ins.crossed && kind != MoveKind::R2 {
        return Err(inapplicable(kind, "`crossed` only applies to R2"));
    }
    if ins.head_first && ins.tail != ins.head {
        return Err(inapplicable(kind, "`headfirst` needs coinciding gaps"));
    }
    match kind {
        MoveKind::R1 if ins.tail != ins.head => Err(inapplicable(kind, "R1 inserts at a single gap")),
        MoveKind::SV if ins.tail.strand != ins.head.strand => {
            Err(inapplicable(kind, "SV inserts a self-arrow"))
        }
        _ => Ok(()),
    }
}

fn insert(d: &GaussDiagram, ins: &Insertion) -> GaussDiagram {
    let (tails, heads) = match ins.ids[..] {
        [x, y] => {
            let h = if ins.crossed { vec![Endpoint::head(y), Endpoint::head(x)] } else { vec![Endpoint::head(x), Endpoint::head(y)] };
            (vec![Endpoint::tail(x), Endpoint::tail(y)], h)
        }
        _ => (vec![Endpoint::tail(ins.ids[0])], vec![Endpoint::head(ins.ids[0])]),
    };
    let mut adds: BTreeMap<Gap, Vec<Endpoint>> = BTreeMap::new();
    if ins.tail == ins.head {
        let block = if ins.head_first { [heads, tails].concat() } else { [tails, heads].concat() };
        adds.insert(ins.tail, block);
    } else {
        adds.insert(ins.tail, tails);
        adds.insert(ins.head, heads);
    }
    let mut out = d.clone();
    for (i, s) in out.strands_mut().iter_mut().enumerate() {
        let strand = i + 1;
        if !adds.keys().any(|g| g.strand == strand) {
            continue;
        }
        let mut ns = Vec::with_capacity(s.len() + 4);
        for idx in 0..=s.len() {
            if let Some(b) = adds.get(&Gap { strand, index: idx }) {
                ns.extend_from_slice(b);
            }
            if idx < s.len() {
                ns.push(s[idx]);
            }
        }
        *s = ns;
    }
    out.signs_mut().insert(ins.ids[0], ins.sign);
    if let Some(&y) = ins.ids.get(1) {
        out.signs_mut().insert(y, ins.sign.flip());
    }
    out
}

fn remove(d: &GaussDiagram, ids: &[ArrowId]) -> GaussDiagram {
    let mut out = d.clone();
    for s in out.strands_mut() {
        s.retain(|e| !ids.contains(&e.arrow));
    }
    for a in ids {
        out.signs_mut().remove(a);
    }
    out
}

fn reverse(out: &mut GaussDiagram, loc: &Locator, id: ArrowId) {
    let (t, h) = sites::role_slots(loc, id).expect("arrow located");
    let strands = out.strands_mut();
    strands[t.strand - 1][t.pos].role = Role::Head;
    strands[h.strand - 1][h.pos].role = Role::Tail;
}

fn flip_sign(out: &mut GaussDiagram, id: ArrowId) {
    if let Some(s) = out.signs_mut().get_mut(&id) {
        *s = s.flip();
    }
}

fn swap_portion(out: &mut GaussDiagram, p: &Portion) {
    out.strands_mut()[p.strand - 1].swap(p.start, p.end);
}

/// The canonical form of `app` at `d`, or why it does not apply.
fn validate(d: &GaussDiagram, loc: &Locator, app: &MoveApplication) -> Result<(), MoveError> {
    if app.is_insertion() {
        let ins = app.insertion.as_ref().ok_or_else(|| inapplicable(app.kind, "missing insertion data"))?;
        return check_insertion(d, app.kind, ins);
    }
    let site = sites::rebuild(d, loc, app.kind, app)
        .ok_or_else(|| inapplicable(app.kind, "pattern or sign condition fails"))?;
    let mut given = app.clone();
    given.direction = Direction::Fwd;
    if site != given {
        return Err(inapplicable(app.kind, "application is not in canonical form for this diagram"));
    }
    Ok(())
}

fn perform(d: &GaussDiagram, loc: &Locator, app: &MoveApplication) -> GaussDiagram {
    if app.is_insertion() {
        return insert(d, app.insertion.as_ref().expect("validated"));
    }
    let mut out = d.clone();
    match app.kind {
        MoveKind::R1 | MoveKind::R2 | MoveKind::V | MoveKind::SV => return remove(d, &app.arrows),
        MoveKind::OC | MoveKind::UC | MoveKind::F | MoveKind::R3 | MoveKind::Delta => {
            for p in &app.portions {
                swap_portion(&mut out, p);
            }
        }
        MoveKind::CC | MoveKind::SC | MoveKind::M | MoveKind::Mixed4 | MoveKind::Bp => {
            for &a in &app.arrows {
                reverse(&mut out, loc, a);
                flip_sign(&mut out, a);
            }
        }
        MoveKind::VC => reverse(&mut out, loc, app.arrows[0]),
        MoveKind::SR => flip_sign(&mut out, app.arrows[0]),
        MoveKind::Wbp => {
            for &a in &app.arrows {
                reverse(&mut out, loc, a);
                if Some(a) != app.keep {
                    flip_sign(&mut out, a);
                }
            }
        }
    }
    out
}

/// Applies one move. Fails if the application is not one that `enumerate` (or, for
/// insertions, `enumerate_insertions`) would produce at `d`.
pub fn apply(d: &GaussDiagram, app: &MoveApplication) -> Result<GaussDiagram, MoveError> {
    let loc = Locator::new(d);
    validate(d, &loc, app)?;
    Ok(perform(d, &loc, app))
}

fn removal_gap(s: (usize, usize), removed: &[Slot]) -> Gap {
    let shift = removed.iter().filter(|r| r.strand == s.0 && r.pos < s.1).count();
    Gap { strand: s.0, index: s.1 - shift }
}

/// Applies `app` and returns the result together with an application undoing it.
pub fn apply_with_inverse(
    d: &GaussDiagram,
    app: &MoveApplication,
) -> Result<(GaussDiagram, MoveApplication), MoveError> {
    let loc = Locator::new(d);
    validate(d, &loc, app)?;
    let after = perform(d, &loc, app);
    let aloc = Locator::new(&after);
    let lost = || inapplicable(app.kind, "internal: no inverse site");
    let inv = if app.is_insertion() {
        let ids = &app.insertion.as_ref().expect("validated").ids;
        let mut probe = app.clone();
        probe.direction = Direction::Fwd;
        probe.arrows = ids.clone();
        probe.insertion = None;
        sites::rebuild(&after, &aloc, app.kind, &probe).ok_or_else(lost)?
    } else if app.kind.inserts() {
        let removed: Vec<Slot> = app
            .arrows
            .iter()
            .flat_map(|&a| {
                let (t, h) = sites::role_slots(&loc, a).expect("validated");
                [t, h]
            })
            .collect();
        let sign = d.sign(app.arrows[0]).expect("validated");
        let ins = match app.kind {
            MoveKind::R1 => {
                let p = &app.portions[0];
                let g = removal_gap((p.strand, p.start), &removed);
                Insertion { ids: app.arrows.clone(), sign, tail: g, head: g, crossed: false, head_first: p.delta < 0 }
            }
            MoveKind::R2 => {
                let (tp, hp) = (&app.portions[0], &app.portions[1]);
                let tail = removal_gap((tp.strand, tp.start), &removed);
                let head = removal_gap((hp.strand, hp.start), &removed);
                let head_first = tail == head && (hp.strand, hp.start) < (tp.strand, tp.start);
                Insertion { ids: app.arrows.clone(), sign, tail, head, crossed: hp.delta < 0, head_first }
            }
            _ => {
                let (t, h) = (removed[0], removed[1]);
                let tail = removal_gap((t.strand, t.pos), &removed);
                let head = removal_gap((h.strand, h.pos), &removed);
                let head_first = tail == head && h.pos < t.pos;
                Insertion { ids: app.arrows.clone(), sign, tail, head, crossed: false, head_first }
            }
        };
        MoveApplication {
            kind: app.kind,
            direction: Direction::Bwd,
            portions: Vec::new(),
            arrows: Vec::new(),
            keep: None,
            insertion: Some(ins),
        }
    } else {
        let mut site = sites::rebuild(&after, &aloc, app.kind, app);
        if site.is_none() && matches!(app.kind, MoveKind::R3 | MoveKind::Delta) {
            let other = if app.kind == MoveKind::R3 { MoveKind::Delta } else { MoveKind::R3 };
            site = sites::rebuild(&after, &aloc, other, app);
        }
        let mut site = site.ok_or_else(lost)?;
        site.direction = app.direction.flip();
        site
    };
    Ok((after, inv))
}

/// An application undoing `app` on the diagram `apply(d, app)`.
pub fn inverse(d: &GaussDiagram, app: &MoveApplication) -> Result<MoveApplication, MoveError> {
    apply_with_inverse(d, app).map(|(_, inv)| inv)
}

/// Replays a sequence. The sequence's start fingerprint must match `d`.
pub fn apply_sequence(d: &GaussDiagram, seq: &MoveSequence) -> Result<GaussDiagram, MoveError> {
    replay(d, seq).map(|mut v| v.pop().expect("at least the start"))
}

/// Replays a sequence and returns every intermediate diagram, starting with `d`.
pub fn replay(d: &GaussDiagram, seq: &MoveSequence) -> Result<Vec<GaussDiagram>, MoveError> {
    let found = d.fingerprint();
    if !seq.start.is_empty() && seq.start != found {
        return Err(MoveError::Fingerprint { expected: seq.start.clone(), found });
    }
    let mut out = vec![d.clone()];
    for (index, app) in seq.steps.iter().enumerate() {
        let next = apply(out.last().expect("nonempty"), app)
            .map_err(|e| MoveError::Step { index, source: Box::new(e) })?;
        out.push(next);
    }
    Ok(out)
}

/// Applies the applications in order without fingerprint checks.
pub fn apply_all(d: &GaussDiagram, apps: &[MoveApplication]) -> Result<GaussDiagram, MoveError> {
    let mut cur = d.clone();
    for (index, app) in apps.iter().enumerate() {
        cur = apply(&cur, app).map_err(|e| MoveError::Step { index, source: Box::new(e) })?;
    }
    Ok(cur)
}

/// The forward application of `kind` whose portions are the given slot pairs (in any
/// order, each pair adjacent), or the one on `arrows` for kinds located by arrows.
pub fn site_at(
    d: &GaussDiagram,
    kind: MoveKind,
    pairs: &[(Slot, Slot)],
    arrows: &[ArrowId],
    keep: Option<ArrowId>,
) -> Option<MoveApplication> {
    let mut portions = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        let (a, b) = sites::ordered_pair(d, a, b)?;
        portions.push(Portion { strand: a.strand, start: a.pos, end: b.pos, delta: 1 });
    }
    let probe = MoveApplication {
        kind,
        direction: Direction::Fwd,
        portions,
        arrows: arrows.to_vec(),
        keep,
        insertion: None,
    };
    sites::rebuild(d, &Locator::new(d), kind, &probe)
}

/// The swap (OC, UC or F) of two adjacent slots.
pub fn swap_at(d: &GaussDiagram, a: Slot, b: Slot) -> Option<MoveApplication> {
    let kind = match (d.get_endpoint(a)?.role, d.get_endpoint(b)?.role) {
        (Role::Tail, Role::Tail) => MoveKind::OC,
        (Role::Head, Role::Head) => MoveKind::UC,
        _ => MoveKind::F,
    };
    site_at(d, kind, &[(a, b)], &[], None)
}

/// `app` re-read at `d`: insertions are kept if valid, other moves are rebuilt on the same
/// portions (or arrows). A triangle may change between R3 and DELTA.
pub fn relocate(d: &GaussDiagram, app: &MoveApplication) -> Option<MoveApplication> {
    if app.is_insertion() {
        return apply(d, app).is_ok().then(|| app.clone());
    }
    let loc = Locator::new(d);
    let mut kinds = vec![app.kind];
    match app.kind {
        MoveKind::R3 => kinds.push(MoveKind::Delta),
        MoveKind::Delta => kinds.push(MoveKind::R3),
        _ => {}
    }
    kinds.into_iter().find_map(|k| sites::rebuild(d, &loc, k, app)).map(|mut s| {
        s.direction = app.direction;
        s
    })
}

impl fmt::Display for MoveApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.direction)?;
        for p in &self.portions {
            write!(f, " ({},{},{},{})", p.strand, p.start, p.end, if p.delta > 0 { '+' } else { '-' })?;
        }
        let list = |v: &[ArrowId]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        if !self.arrows.is_empty() {
            write!(f, " arrows={}", list(&self.arrows))?;
        }
        if let Some(k) = self.keep {
            write!(f, " keep={k}")?;
        }
        if let Some(ins) = &self.insertion {
            write!(
                f,
                " ids={} sign={} tail={}:{} head={}:{} crossed={} headfirst={}",
                list(&ins.ids),
                ins.sign,
                ins.tail.strand,
                ins.tail.index,
                ins.head.strand,
                ins.head.index,
                ins.crossed as u8,
                ins.head_first as u8
            )?;
        }
        Ok(())
    }
}

fn parse_err(line: &str, msg: &str) -> MoveError {
    MoveError::Parse(format!("bad move `{line}`: {msg}"))
}

impl FromStr for MoveApplication {
    type Err = MoveError;

    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let mut words = line.split_whitespace();
        let kind: MoveKind = words.next().ok_or_else(|| parse_err(line, "empty"))?.parse()?;
        let direction = match words.next() {
            Some("fwd") => Direction::Fwd,
            Some("bwd") => Direction::Bwd,
            _ => return Err(parse_err(line, "expected `fwd` or `bwd`")),
        };
        let mut app = MoveApplication { kind, direction, portions: Vec::new(), arrows: Vec::new(), keep: None, insertion: None };
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for w in words {
            if let Some(body) = w.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                let parts: Vec<&str> = body.split(',').collect();
                let [s, a, b, dl] = parts[..] else { return Err(parse_err(line, "portion needs 4 fields")) };
                let num = |x: &str| x.parse::<usize>().map_err(|_| parse_err(line, "bad portion number"));
                let delta = match dl {
                    "+" => 1,
                    "-" => -1,
                    _ => return Err(parse_err(line, "portion direction must be + or -")),
                };
                app.portions.push(Portion { strand: num(s)?, start: num(a)?, end: num(b)?, delta });
            } else if let Some((k, v)) = w.split_once('=') {
                kv.insert(k, v);
            } else {
                return Err(parse_err(line, &format!("unexpected `{w}`")));
            }
        }
        let ids = |v: &str| -> Result<Vec<ArrowId>, MoveError> {
            v.split(',').map(|x| x.parse().map_err(|_| parse_err(line, "bad arrow id"))).collect()
        };
        let gap = |v: &str| -> Result<Gap, MoveError> {
            let (s, i) = v.split_once(':').ok_or_else(|| parse_err(line, "gap is strand:index"))?;
            Ok(Gap {
                strand: s.parse().map_err(|_| parse_err(line, "bad gap"))?,
                index: i.parse().map_err(|_| parse_err(line, "bad gap"))?,
            })
        };
        let flag = |v: Option<&&str>| matches!(v, Some(&"1"));
        if let Some(v) = kv.get("arrows") {
            app.arrows = ids(v)?;
        }
        if let Some(v) = kv.get("keep") {
            app.keep = Some(v.parse().map_err(|_| parse_err(line, "bad keep id"))?);
        }
        if let Some(v) = kv.get("ids") {
            let sign = match kv.get("sign") {
                Some(&"+") => Sign::Plus,
                Some(&"-") => Sign::Minus,
                _ => return Err(parse_err(line, "insertion needs sign=+ or sign=-")),
            };
            let tail = gap(kv.get("tail").ok_or_else(|| parse_err(line, "insertion needs tail="))?)?;
            let head = gap(kv.get("head").ok_or_else(|| parse_err(line, "insertion needs head="))?)?;
            app.insertion = Some(Insertion {
                ids: ids(v)?,
                sign,
                tail,
                head,
                crossed: flag(kv.get("crossed")),
                head_first: flag(kv.get("headfirst")),
            });
        }
        Ok(app)
    }
}
