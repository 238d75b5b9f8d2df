//! Unknotting long knots with a chosen set of moves.

use crate::diagram::{ArrowId, GaussDiagram};
use crate::moves::{apply, swap_at, MoveApplication, MoveKind, MoveSequence};

use super::build::{on_arrow, removing, toward, Builder};
use super::{expand, expand_sc_via_delta, DerivedMoveKind, MacroError};

/// How a self-arrow is changed or removed with the allowed moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    /// V or SV: delete every arrow outright.
    Delete(MoveKind),
    /// SC or CC directly.
    Change(MoveKind),
    /// SC realised by DELTA.
    Delta,
    /// Exchange adjacent ends with F, itself realised by the given macro when F is not allowed.
    Transport(Option<DerivedMoveKind>),
}

fn route(allowed: &[MoveKind]) -> Option<Route> {
    let has = |k: MoveKind| allowed.contains(&k);
    [
        (has(MoveKind::SV), Route::Delete(MoveKind::SV)),
        (has(MoveKind::V), Route::Delete(MoveKind::V)),
        (has(MoveKind::SC), Route::Change(MoveKind::SC)),
        (has(MoveKind::CC), Route::Change(MoveKind::CC)),
        (has(MoveKind::F), Route::Transport(None)),
        (has(MoveKind::Delta), Route::Delta),
        (has(MoveKind::UC), Route::Transport(Some(DerivedMoveKind::FFromUc))),
        (has(MoveKind::VC), Route::Transport(Some(DerivedMoveKind::FFromVc))),
        (has(MoveKind::Wbp), Route::Transport(Some(DerivedMoveKind::FFromWbp))),
    ]
    .into_iter()
    .find_map(|(ok, r)| ok.then_some(r))
}

/// The arrow whose ends are closest, ties broken by position so the choice does not depend
/// on arrow names. No arrow lies fully inside it.
fn narrowest(d: &GaussDiagram) -> ArrowId {
    d.arrows()
        .into_iter()
        .min_by_key(|x| (x.tail.pos.abs_diff(x.head.pos), x.tail.pos.min(x.head.pos)))
        .expect("nonempty")
        .id
}

fn checked_route(d: &GaussDiagram, allowed: &[MoveKind]) -> Result<Route, MacroError> {
    if d.n() != 1 || !d.is_open() {
        return Err(MacroError::Unsupported(format!(
            "trivialize_long_knot needs a one-strand open diagram, got {} {} strand(s)",
            d.kind(),
            d.n()
        )));
    }
    route(allowed).ok_or_else(|| {
        let names: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
        MacroError::InsufficientSet(names.join(","))
    })
}

/// A sequence of allowed moves (plus R1, R2, R3, OC) taking a one-strand open diagram to
/// the trivial one. Fails for other diagrams and for sets that cannot do it
/// constructively (BP alone only reaches DELTA non-constructively).
///
/// The result is `unknot_step` repeated until no arrow is left.
pub fn trivialize_long_knot(d: &GaussDiagram, allowed: &[MoveKind]) -> Result<MoveSequence, MacroError> {
    let route = checked_route(d, allowed)?;
    let mut b = Builder::new(d);
    while b.cur.arrow_count() > 0 {
        remove_one(&mut b, route)?;
    }
    let mut seq = MoveSequence::new(d.fingerprint(), b.steps);
    let names: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
    seq.notes.push(format!("trivialize: allowed={}", names.join(",")));
    Ok(seq)
}

/// The first round of `trivialize_long_knot`: moves removing one arrow of a nonempty
/// diagram, leaving one arrow fewer.
pub fn unknot_step(d: &GaussDiagram, allowed: &[MoveKind]) -> Result<MoveSequence, MacroError> {
    let route = checked_route(d, allowed)?;
    let mut b = Builder::new(d);
    if b.cur.arrow_count() > 0 {
        remove_one(&mut b, route)?;
    }
    Ok(MoveSequence::new(d.fingerprint(), b.steps))
}

fn remove_one(b: &mut Builder, route: Route) -> Result<(), MacroError> {
    if let Route::Delete(k) = route {
        let id = b.cur.arrows().into_iter().min_by_key(|x| x.tail.pos).expect("nonempty").id;
        b.push(on_arrow(&b.cur, k, id).expect("self-arrow"))?;
        return Ok(());
    }
    let a = narrowest(&b.cur);
    if let Route::Transport(via) = route {
        for s in super::constructions::transport_and_remove(&b.cur, a)? {
            push_realised(b, s, via)?;
        }
        return Ok(());
    }
    let (ta, ha) = (b.tail(a), b.head(a));
    let (lo, hi) = (ta.pos.min(ha.pos), ta.pos.max(ha.pos));
    let heads: Vec<ArrowId> = b.cur.strand(1)[lo + 1..hi].iter().filter(|e| e.is_head()).map(|e| e.arrow).collect();
    for c in heads {
        match route {
            Route::Change(k) => {
                b.push(on_arrow(&b.cur, k, c).expect("arrow present"))?;
            }
            _ => {
                let x = expand_sc_via_delta(&b.cur, c)?;
                b.extend(x.sequence.steps)?;
            }
        }
    }
    loop {
        let (ta, ha) = (b.tail(a), b.head(a));
        if ta.pos.abs_diff(ha.pos) == 1 {
            break;
        }
        b.push(swap_at(&b.cur, ta, toward(ta, ha)).expect("adjacent tails"))?;
    }
    b.push(removing(&b.cur, MoveKind::R1, &[a]).expect("adjacent ends"))?;
    Ok(())
}

/// Pushes an F step as is, or through the macro realising it.
fn push_realised(b: &mut Builder, s: MoveApplication, via: Option<DerivedMoveKind>) -> Result<(), MacroError> {
    match via {
        Some(kind) if s.kind == MoveKind::F => {
            let seq = expand(kind, &b.cur, &s)?;
            let goal = apply(&b.cur, &s)?;
            b.extend(seq.steps)?;
            if b.cur != goal {
                return Err(MacroError::Mismatch { kind });
            }
            Ok(())
        }
        _ => b.push(s).map(|_| ()).map_err(Into::into),
    }
}
