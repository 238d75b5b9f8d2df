//! SC from DELTA and classical Reidemeister moves, by induction on the width of the
//! self-arrow: the number of heads strictly between its two ends.

use crate::diagram::{ArrowId, Endpoint as E, GaussDiagram, Slot};
use crate::moves::{apply, apply_with_inverse, site_at, swap_at, Gap, MoveApplication, MoveKind, MoveSequence};

use super::build::{r1_at, r2_candidates, removing, replay_inverse, toward, Builder};
use super::{DerivedMoveKind, MacroError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScExpansion {
    pub sequence: MoveSequence,
    /// Width of the arrow in the start diagram.
    pub width: usize,
    /// Deepest level of the induction reached (the top call is level 1).
    pub depth: usize,
}

impl ScExpansion {
    /// Depth allowed for a width `w` arrow.
    pub fn depth_bound(width: usize) -> usize {
        width + 1
    }
}

fn span(d: &GaussDiagram, a: ArrowId) -> (usize, usize, usize) {
    let x = d.arrow(a).expect("arrow present");
    let (p, q) = (x.tail.pos, x.head.pos);
    (x.tail.strand, p.min(q), p.max(q))
}

/// Heads strictly between the two ends of the self-arrow `a`.
pub fn width(d: &GaussDiagram, a: ArrowId) -> usize {
    let (s, lo, hi) = span(d, a);
    d.strand(s)[lo + 1..hi].iter().filter(|e| e.is_head()).count()
}

fn inside(d: &GaussDiagram, a: ArrowId, s: Slot) -> bool {
    let (st, lo, hi) = span(d, a);
    s.strand == st && lo < s.pos && s.pos < hi
}

/// Both ends of `c` lie strictly inside the span of `a`.
fn interior(d: &GaussDiagram, a: ArrowId, c: ArrowId) -> bool {
    let x = d.arrow(c).expect("arrow present");
    c != a && inside(d, a, x.tail) && inside(d, a, x.head)
}

enum Undo {
    Move(MoveApplication),
    Sc(ArrowId),
}

struct Run {
    depth: usize,
}

/// A sequence of DELTA, R1, R2, R3 and OC moves performing SC on the self-arrow `a`.
pub fn expand_sc_via_delta(d: &GaussDiagram, a: ArrowId) -> Result<ScExpansion, MacroError> {
    let arrow = d.arrow(a).ok_or(MacroError::NoArrow(a))?;
    if !arrow.is_self() {
        return Err(MacroError::NotSelfArrow(a));
    }
    let target = site_at(d, MoveKind::SC, &[], &[a], None).expect("self-arrow");
    let goal = apply(d, &target)?;
    let w = width(d, a);
    let mut b = Builder::new(d);
    let mut run = Run { depth: 0 };
    sc(&mut b, a, 1, &mut run)?;
    if b.cur != goal {
        return Err(MacroError::Mismatch { kind: DerivedMoveKind::ScFromDelta });
    }
    let mut sequence = MoveSequence::new(d.fingerprint(), b.steps);
    sequence.notes.push(format!("macro: {}", DerivedMoveKind::ScFromDelta.name()));
    Ok(ScExpansion { sequence, width: w, depth: run.depth })
}

fn sc(b: &mut Builder, a: ArrowId, level: usize, run: &mut Run) -> Result<(), MacroError> {
    run.depth = run.depth.max(level);
    let w = width(&b.cur, a);
    if w == 0 {
        return base(b, a);
    }
    let (st, lo, hi) = span(&b.cur, a);
    let inner = (lo + 1..hi)
        .map(|p| b.cur.endpoint(Slot::new(st, p)).arrow)
        .filter(|&c| interior(&b.cur, a, c))
        .min_by_key(|&c| {
            let (_, l, h) = span(&b.cur, c);
            (h - l, c)
        });
    let mut log = Vec::new();
    match inner {
        Some(c) => {
            // carry the tail of c to its head, remove c, recurse on a, undo
            loop {
                let (tc, hc) = (b.tail(c), b.head(c));
                if tc.pos.abs_diff(hc.pos) == 1 {
                    break;
                }
                let next = toward(tc, hc);
                let e = b.cur.endpoint(next);
                if e.is_tail() {
                    log.push(Undo::Move(b.push(swap_at(&b.cur, tc, next).expect("two tails"))?));
                } else if interior(&b.cur, a, e.arrow) {
                    let we = width(&b.cur, e.arrow);
                    if we >= w {
                        return Err(MacroError::WidthNotDecreasing { arrow: e.arrow, before: w, after: we });
                    }
                    sc(b, e.arrow, level + 1, run)?;
                    log.push(Undo::Sc(e.arrow));
                    let tc = b.tail(c);
                    log.push(Undo::Move(b.push(swap_at(&b.cur, tc, next).expect("two tails"))?));
                } else {
                    log.extend(delta_gadget(b, c, e.arrow)?.into_iter().map(Undo::Move));
                }
            }
            let back = b.push(removing(&b.cur, MoveKind::R1, &[c]).expect("adjacent ends"))?;
            recurse_narrower(b, a, w, level, run)?;
            b.push(back)?;
        }
        None => {
            // carry the tail of a past the first head
            loop {
                let next = toward(b.tail(a), b.head(a));
                let e = b.cur.endpoint(next);
                if e.is_tail() {
                    log.extend(r3_gadget(b, a, e.arrow)?.into_iter().map(Undo::Move));
                } else {
                    log.extend(delta_gadget(b, a, e.arrow)?.into_iter().map(Undo::Move));
                    break;
                }
            }
            recurse_narrower(b, a, w, level, run)?;
        }
    }
    for u in log.into_iter().rev() {
        match u {
            Undo::Move(inv) => replay_inverse(b, &inv)?,
            Undo::Sc(x) => sc(b, x, level + 1, run)?,
        }
    }
    Ok(())
}

fn recurse_narrower(b: &mut Builder, a: ArrowId, w: usize, level: usize, run: &mut Run) -> Result<(), MacroError> {
    let now = width(&b.cur, a);
    if now >= w {
        return Err(MacroError::WidthNotDecreasing { arrow: a, before: w, after: now });
    }
    sc(b, a, level + 1, run)
}

/// Width zero: only tails between the ends. Slide the tail onto the head, remove the
/// kink, put it back the other way with the opposite sign, slide the new tail back.
fn base(b: &mut Builder, a: ArrowId) -> Result<(), MacroError> {
    let (ta, ha) = (b.tail(a), b.head(a));
    let sign = b.cur.sign(a).expect("arrow present").flip();
    let forward = ha.pos > ta.pos;
    let slide = |b: &mut Builder, stop: &dyn Fn(&Builder) -> bool| -> Result<(), MacroError> {
        while !stop(b) {
            let t = b.tail(a);
            let n = if forward { Slot::new(t.strand, t.pos + 1) } else { Slot::new(t.strand, t.pos - 1) };
            b.push(swap_at(&b.cur, t, n).expect("two tails"))?;
        }
        Ok(())
    };
    slide(b, &|b| b.tail(a).pos.abs_diff(b.head(a).pos) == 1)?;
    b.push(removing(&b.cur, MoveKind::R1, &[a]).expect("adjacent ends"))?;
    let gap = Gap { strand: ta.strand, index: if forward { ta.pos } else { ta.pos - 1 } };
    b.push(r1_at(a, sign, gap, forward))?;
    slide(b, &|b| b.tail(a).pos == ha.pos)?;
    Ok(())
}

/// Moves the tail of `m` past the adjacent head of `e` (whose tail lies outside the
/// current span): an R2 pair from next to H_m to next to T_e closes a cyclic triangle.
fn delta_gadget(b: &mut Builder, m: ArrowId, e: ArrowId) -> Result<Vec<MoveApplication>, MacroError> {
    let ids = b.fresh_pair();
    for cand in r2_candidates(ids, b.head(m), b.tail(e)) {
        let Ok((mid, inv1)) = apply_with_inverse(&b.cur, &cand) else { continue };
        let at = |x: E| mid.slot_of(x).expect("arrow present");
        let p = (at(E::tail(m)), at(E::head(e)));
        for f in ids {
            let pairs = [p, (at(E::head(m)), at(E::tail(f))), (at(E::tail(e)), at(E::head(f)))];
            if let Some(delta) = site_at(&mid, MoveKind::Delta, &pairs, &[], None) {
                b.push(cand)?;
                let inv2 = b.push(delta)?;
                return Ok(vec![inv1, inv2]);
            }
        }
    }
    Err(MacroError::NoConstruction { kind: DerivedMoveKind::ScFromDelta })
}

/// Moves the tail of `a` past the adjacent tail of `k` with an R3 whose middle portion is
/// {H_a, T_z}, so that after `a` is reversed the same triangle is still stacked.
fn r3_gadget(b: &mut Builder, a: ArrowId, k: ArrowId) -> Result<Vec<MoveApplication>, MacroError> {
    let ids = b.fresh_pair();
    for cand in r2_candidates(ids, b.head(a), b.head(k)) {
        let Ok((mid, inv1)) = apply_with_inverse(&b.cur, &cand) else { continue };
        let at = |x: E| mid.slot_of(x).expect("arrow present");
        for z in ids {
            let pairs = [(at(E::tail(a)), at(E::tail(k))), (at(E::head(a)), at(E::tail(z))), (at(E::head(k)), at(E::head(z)))];
            if let Some(r3) = site_at(&mid, MoveKind::R3, &pairs, &[], None) {
                b.push(cand)?;
                let inv2 = b.push(r3)?;
                return Ok(vec![inv1, inv2]);
            }
        }
    }
    Err(MacroError::NoConstruction { kind: DerivedMoveKind::ScFromDelta })
}
