use crate::diagram::{ArrowId, Endpoint, GaussDiagram, Sign, Slot};
use crate::moves::{
    apply, apply_with_inverse, enumerate, relocate, site_at, Direction, Gap, Insertion, MoveApplication, MoveError,
    MoveKind,
};

/// A diagram together with the moves that led to it.
#[derive(Clone, Debug)]
pub(crate) struct Builder {
    pub cur: GaussDiagram,
    pub steps: Vec<MoveApplication>,
}

impl Builder {
    pub fn new(d: &GaussDiagram) -> Self {
        Builder { cur: d.clone(), steps: Vec::new() }
    }

    /// Applies `app` and returns its inverse.
    pub fn push(&mut self, app: MoveApplication) -> Result<MoveApplication, MoveError> {
        let (after, inv) = apply_with_inverse(&self.cur, &app)?;
        self.cur = after;
        self.steps.push(app);
        Ok(inv)
    }

    pub fn extend(&mut self, apps: Vec<MoveApplication>) -> Result<(), MoveError> {
        for a in apps {
            self.push(a)?;
        }
        Ok(())
    }

    pub fn at(&self, e: Endpoint) -> Slot {
        self.cur.slot_of(e).expect("arrow present")
    }

    pub fn tail(&self, a: ArrowId) -> Slot {
        self.at(Endpoint::tail(a))
    }

    pub fn head(&self, a: ArrowId) -> Slot {
        self.at(Endpoint::head(a))
    }

    pub fn fresh_pair(&self) -> [ArrowId; 2] {
        let f = self.cur.fresh_id();
        [f, f + 1]
    }
}

/// The gaps just before and just after a slot.
pub(crate) fn around(s: Slot) -> [Gap; 2] {
    [Gap { strand: s.strand, index: s.pos }, Gap { strand: s.strand, index: s.pos + 1 }]
}

/// The gap between the two slots of an adjacent pair given in strand order.
pub(crate) fn between(first: Slot) -> Gap {
    Gap { strand: first.strand, index: first.pos + 1 }
}

pub(crate) fn inserting(kind: MoveKind, ids: &[ArrowId], sign: Sign, tail: Gap, head: Gap, crossed: bool, head_first: bool) -> MoveApplication {
    MoveApplication {
        kind,
        direction: Direction::Bwd,
        portions: Vec::new(),
        arrows: Vec::new(),
        keep: None,
        insertion: Some(Insertion { ids: ids.to_vec(), sign, tail, head, crossed, head_first }),
    }
}

pub(crate) fn r1_at(id: ArrowId, sign: Sign, gap: Gap, head_first: bool) -> MoveApplication {
    inserting(MoveKind::R1, &[id], sign, gap, gap, false, head_first)
}

/// R2 insertions of `ids` with tails next to `tails_near` and heads next to `heads_near`,
/// in a fixed order: sign, tail side, head side, crossing, block order.
pub(crate) fn r2_candidates(ids: [ArrowId; 2], tails_near: Slot, heads_near: Slot) -> Vec<MoveApplication> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for tg in around(tails_near) {
            for hg in around(heads_near) {
                for crossed in [false, true] {
                    let orders: &[bool] = if tg == hg { &[false, true] } else { &[false] };
                    for &hf in orders {
                        out.push(inserting(MoveKind::R2, &ids, sign, tg, hg, crossed, hf));
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn removing(d: &GaussDiagram, kind: MoveKind, ids: &[ArrowId]) -> Option<MoveApplication> {
    site_at(d, kind, &[], ids, None)
}

pub(crate) fn on_arrow(d: &GaussDiagram, kind: MoveKind, id: ArrowId) -> Option<MoveApplication> {
    site_at(d, kind, &[], &[id], None)
}

/// Short search for clean-up moves: moves of `kinds` touching the auxiliary pair, then
/// the R2 removing it, ending exactly at `goal`.
pub(crate) fn finish(
    cur: &GaussDiagram,
    goal: &GaussDiagram,
    kinds: &[MoveKind],
    aux: [ArrowId; 2],
    depth: usize,
) -> Option<Vec<MoveApplication>> {
    if let Some(r) = removing(cur, MoveKind::R2, &aux) {
        if apply(cur, &r).ok().as_ref() == Some(goal) {
            return Some(vec![r]);
        }
    }
    if depth == 0 {
        return None;
    }
    for &k in kinds {
        for app in enumerate(cur, k) {
            if !app.arrows.iter().any(|a| aux.contains(a)) {
                continue;
            }
            let Ok(next) = apply(cur, &app) else { continue };
            if let Some(mut rest) = finish(&next, goal, kinds, aux, depth - 1) {
                rest.insert(0, app);
                return Some(rest);
            }
        }
    }
    None
}

/// Given moves taking `d` somewhere, the moves taking that place back to `d`.
pub(crate) fn invert(d: &GaussDiagram, steps: &[MoveApplication]) -> Result<Vec<MoveApplication>, MoveError> {
    let mut cur = d.clone();
    let mut out = Vec::with_capacity(steps.len());
    for s in steps {
        let (next, inv) = apply_with_inverse(&cur, s)?;
        out.push(inv);
        cur = next;
    }
    out.reverse();
    Ok(out)
}

/// The undo record of a move: re-read at replay time, since the diagram may have
/// changed in between (a triangle may switch between R3 and DELTA).
pub(crate) fn replay_inverse(b: &mut Builder, inv: &MoveApplication) -> Result<(), MoveError> {
    let app = relocate(&b.cur, inv).ok_or_else(|| MoveError::Inapplicable {
        kind: inv.kind,
        reason: "undo step no longer applies".into(),
    })?;
    b.push(app).map(|_| ())
}

/// Slot pair of portion `k` of an application.
pub(crate) fn pair(app: &MoveApplication, k: usize) -> (Slot, Slot) {
    let p = &app.portions[k];
    (Slot::new(p.strand, p.start), Slot::new(p.strand, p.end))
}

/// One step from `from` toward `to` on the same strand.
pub(crate) fn toward(from: Slot, to: Slot) -> Slot {
    if to.pos > from.pos {
        Slot::new(from.strand, from.pos + 1)
    } else {
        Slot::new(from.strand, from.pos - 1)
    }
}
