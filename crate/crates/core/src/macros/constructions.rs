//! One construction per derived move. Each takes the start diagram, a valid target
//! application and the diagram the target produces, and returns generating moves.
//! Free choices (signs and placements of auxiliary arrows) are tried in a fixed order;
//! the first choice that reproduces the target is kept.

use crate::diagram::{ArrowId, Endpoint, GaussDiagram, Sign, Slot};
use crate::moves::{apply, apply_with_inverse, site_at, swap_at, Direction, MoveApplication, MoveKind};

use super::build::{around, between, finish, invert, on_arrow, pair, r1_at, r2_candidates, removing, toward, Builder};
use super::{expand_sc_via_delta, DerivedMoveKind, MacroError};

type Steps = Result<Vec<MoveApplication>, MacroError>;

pub(super) fn build(kind: DerivedMoveKind, d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    use DerivedMoveKind::*;
    match kind {
        UcFromF => uc_from_f(d, t, goal),
        FFromUc => f_from_uc(d, t, goal),
        FFromVc => f_by_reversal(d, t, MoveKind::VC),
        FFromCc => f_by_reversal(d, t, MoveKind::CC),
        SrFromWbp => sr_from_wbp(d, t, goal),
        FourFromWbp => four_from_wbp(d, t, goal),
        MFromWbp => m_from_wbp(d, t, goal),
        FFromWbp => f_from_wbp(d, t, goal),
        DeltaFromF => delta_from_f(d, t),
        SvFromF => sv_from_f(d, t),
        ScFromDelta => Ok(expand_sc_via_delta(d, t.arrows[0])?.sequence.steps),
        BpFromCc => each_arrow(d, &t.arrows, MoveKind::CC),
        CcFromV => reinsert_reversed(d, t.arrows[0], MoveKind::V, true),
        ScFromSv => reinsert_reversed(d, t.arrows[0], MoveKind::SV, true),
        WbpFromV => wbp_from_v(d, t),
        DeltaFromSc2 => delta_from_sc(d, t),
    }
}

fn none(kind: DerivedMoveKind) -> MacroError {
    MacroError::NoConstruction { kind }
}

/// The tail and head endpoints of a mixed portion.
fn mixed(d: &GaussDiagram, p: (Slot, Slot)) -> (Endpoint, Endpoint) {
    let (e1, e2) = (d.endpoint(p.0), d.endpoint(p.1));
    if e1.is_tail() {
        (e1, e2)
    } else {
        (e2, e1)
    }
}

/// Exchanges the two adjacent ends of one arrow: remove it by R1 and put it back the
/// other way round.
fn self_swap(d: &GaussDiagram, a: ArrowId) -> Steps {
    let mut b = Builder::new(d);
    let r1 = removing(d, MoveKind::R1, &[a]).ok_or(MacroError::Unsupported("ends are not adjacent".into()))?;
    let mut back = b.push(r1)?;
    if let Some(ins) = back.insertion.as_mut() {
        ins.head_first = !ins.head_first;
    }
    b.push(back)?;
    Ok(b.steps)
}

/// F at a portion {T_a, H_b}: an auxiliary arrow y from next to T_b to next to H_a makes
/// a stacked triangle with a and b; R3 exchanges the portion, UC and OC tidy up.
fn f_from_uc(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let p = pair(t, 0);
    let (te, he) = mixed(d, p);
    let (a, bb) = (te.arrow, he.arrow);
    if a == bb {
        return self_swap(d, a);
    }
    let b0 = Builder::new(d);
    let ids = b0.fresh_pair();
    for cand in r2_candidates(ids, b0.tail(bb), b0.head(a)) {
        let mut b = b0.clone();
        if b.push(cand).is_err() {
            continue;
        }
        let p = (b.at(te), b.at(he));
        for c in ids {
            let pairs = [p, (b.tail(bb), b.tail(c)), (b.head(a), b.head(c))];
            let Some(r3) = site_at(&b.cur, MoveKind::R3, &pairs, &[], None) else { continue };
            let mut b2 = b.clone();
            b2.push(r3)?;
            if let Some(rest) = finish(&b2.cur, goal, &[MoveKind::UC, MoveKind::OC], ids, 2) {
                b2.extend(rest)?;
                return Ok(b2.steps);
            }
        }
    }
    Err(none(DerivedMoveKind::FFromUc))
}

/// UC at a portion {H_a, H_b}: an auxiliary arrow from next to T_a to next to T_b makes
/// a stacked triangle with bottom portion {H_a, H_b}; R3, then F and OC tidy up.
fn uc_from_f(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let p = pair(t, 0);
    let (h1, h2) = (d.endpoint(p.0), d.endpoint(p.1));
    let b0 = Builder::new(d);
    let ids = b0.fresh_pair();
    for (a, bb) in [(h1.arrow, h2.arrow), (h2.arrow, h1.arrow)] {
        for cand in r2_candidates(ids, b0.tail(a), b0.tail(bb)) {
            let mut b = b0.clone();
            if b.push(cand).is_err() {
                continue;
            }
            let p = (b.at(h1), b.at(h2));
            for c in ids {
                let pairs = [(b.tail(a), b.tail(c)), (b.head(c), b.tail(bb)), p];
                let Some(r3) = site_at(&b.cur, MoveKind::R3, &pairs, &[], None) else { continue };
                let mut b2 = b.clone();
                b2.push(r3)?;
                if let Some(rest) = finish(&b2.cur, goal, &[MoveKind::F, MoveKind::OC], ids, 2) {
                    b2.extend(rest)?;
                    return Ok(b2.steps);
                }
            }
        }
    }
    Err(none(DerivedMoveKind::UcFromF))
}

/// UC by two M moves around an OC: the arrows of the stacked triangle are all reversed,
/// so the two heads become tails and can be exchanged.
fn uc_via_m(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let p = pair(t, 0);
    let (h1, h2) = (d.endpoint(p.0), d.endpoint(p.1));
    let b0 = Builder::new(d);
    let ids = b0.fresh_pair();
    for (a, bb) in [(h1.arrow, h2.arrow), (h2.arrow, h1.arrow)] {
        for cand in r2_candidates(ids, b0.tail(a), b0.tail(bb)) {
            let mut b = b0.clone();
            if b.push(cand).is_err() {
                continue;
            }
            let p = (b.at(h1), b.at(h2));
            for c in ids {
                let pairs = [(b.tail(a), b.tail(c)), (b.head(c), b.tail(bb)), p];
                let Some(m) = site_at(&b.cur, MoveKind::M, &pairs, &[], None) else { continue };
                let mut b2 = b.clone();
                b2.push(m)?;
                let Some(oc) = swap_at(&b2.cur, p.0, p.1) else { continue };
                b2.push(oc)?;
                let Some(m2) = site_at(&b2.cur, MoveKind::M, &pairs, &[], None) else { continue };
                b2.push(m2)?;
                let Some(r2) = removing(&b2.cur, MoveKind::R2, &ids) else { continue };
                b2.push(r2)?;
                if &b2.cur == goal {
                    return Ok(b2.steps);
                }
            }
        }
    }
    Err(none(DerivedMoveKind::FFromWbp))
}

/// F at {T_a, H_b} by reversing b (VC or CC), exchanging two tails, and reversing back.
fn f_by_reversal(d: &GaussDiagram, t: &MoveApplication, kind: MoveKind) -> Steps {
    let p = pair(t, 0);
    let (te, he) = mixed(d, p);
    if te.arrow == he.arrow {
        return self_swap(d, te.arrow);
    }
    let mut b = Builder::new(d);
    let rev = on_arrow(d, kind, he.arrow).expect("arrow present");
    b.push(rev)?;
    let oc = swap_at(&b.cur, p.0, p.1).expect("two tails");
    b.push(oc)?;
    let rev = on_arrow(&b.cur, kind, he.arrow).expect("arrow present");
    b.push(rev)?;
    Ok(b.steps)
}

/// SR of `a` by two WBP moves on a grid made of `a`, two kinks f (next to T_a) and g
/// (next to H_a), and an R2 pair h between them. The first WBP keeps `a`, the second
/// keeps `f`; only the signs of `a` and `f` change overall.
fn sr_from_wbp(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let a = t.arrows[0];
    let b0 = Builder::new(d);
    let f = b0.cur.fresh_id();
    let (g, ids) = (f + 1, [f + 2, f + 3]);
    for f_after in [true, false] {
        let mut b1 = b0.clone();
        let ta = b1.tail(a);
        let gap = if f_after { around(ta)[1] } else { around(ta)[0] };
        if b1.push(r1_at(f, Sign::Plus, gap, !f_after)).is_err() {
            continue;
        }
        for g_after in [true, false] {
            let mut b2 = b1.clone();
            let ha = b2.head(a);
            let gap = if g_after { around(ha)[1] } else { around(ha)[0] };
            if b2.push(r1_at(g, Sign::Plus, gap, g_after)).is_err() {
                continue;
            }
            for cand in r2_candidates(ids, b2.tail(g), b2.head(f)) {
                let mut b = b2.clone();
                if b.push(cand).is_err() {
                    continue;
                }
                for c in ids {
                    let pairs = [(b.tail(a), b.tail(f)), (b.tail(g), b.tail(c)), (b.head(a), b.head(g)), (b.head(f), b.head(c))];
                    let Some(w1) = site_at(&b.cur, MoveKind::Wbp, &pairs, &[], Some(a)) else { continue };
                    let mut b3 = b.clone();
                    b3.push(w1)?;
                    let Some(w2) = site_at(&b3.cur, MoveKind::Wbp, &pairs, &[], Some(f)) else { continue };
                    b3.push(w2)?;
                    let Some(r2) = removing(&b3.cur, MoveKind::R2, &ids) else { continue };
                    b3.push(r2)?;
                    let Some(r1f) = removing(&b3.cur, MoveKind::R1, &[f]) else { continue };
                    b3.push(r1f)?;
                    let Some(r1g) = removing(&b3.cur, MoveKind::R1, &[g]) else { continue };
                    b3.push(r1g)?;
                    if &b3.cur == goal {
                        return Ok(b3.steps);
                    }
                }
            }
        }
    }
    Err(none(DerivedMoveKind::SrFromWbp))
}

/// The clasp move: a kink c inside {T_a, H_b} and a kink e inside {H_a, T_b} complete a
/// grid; WBP keeping c reverses a and b with their signs, then both kinks go.
fn four_from_wbp(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let (a, bb) = (t.arrows[0], t.arrows[1]);
    let b0 = Builder::new(d);
    let c = b0.cur.fresh_id();
    let e = c + 1;
    for (sc, se) in [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus), (Sign::Minus, Sign::Minus)] {
        let mut b = b0.clone();
        let p = pair(t, 0);
        let p_first_is_tail = b.cur.endpoint(p.0) == Endpoint::tail(a);
        b.push(r1_at(c, sc, between(p.0), !p_first_is_tail))?;
        let (ha, tb) = (b.head(a), b.tail(bb));
        let (q0, q_first_is_head) = if b.cur.follows(ha, tb) { (ha, true) } else { (tb, false) };
        b.push(r1_at(e, se, between(q0), q_first_is_head))?;
        let pairs = [(b.tail(a), b.tail(c)), (b.tail(e), b.tail(bb)), (b.head(c), b.head(bb)), (b.head(a), b.head(e))];
        let Some(w) = site_at(&b.cur, MoveKind::Wbp, &pairs, &[], Some(c)) else { continue };
        b.push(w)?;
        let Some(r) = removing(&b.cur, MoveKind::R1, &[c]) else { continue };
        b.push(r)?;
        let Some(r) = removing(&b.cur, MoveKind::R1, &[e]) else { continue };
        b.push(r)?;
        if &b.cur == goal {
            return Ok(b.steps);
        }
    }
    Err(none(DerivedMoveKind::FourFromWbp))
}

/// M on a stacked triangle: a kink e inside the middle portion {H_x, T_z} completes a
/// grid; WBP keeping e reverses x, y, z with their signs, then R1 removes e.
fn m_from_wbp(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let [x, y, z] = [t.arrows[0], t.arrows[1], t.arrows[2]];
    let b0 = Builder::new(d);
    let e = b0.cur.fresh_id();
    let mid = pair(t, 1);
    let first_is_hx = d.endpoint(mid.0) == Endpoint::head(x);
    for s in [Sign::Plus, Sign::Minus] {
        let mut b = b0.clone();
        b.push(r1_at(e, s, between(mid.0), first_is_hx))?;
        let pairs = [(b.tail(x), b.tail(y)), (b.tail(e), b.tail(z)), (b.head(x), b.head(e)), (b.head(y), b.head(z))];
        let Some(w) = site_at(&b.cur, MoveKind::Wbp, &pairs, &[], Some(e)) else { continue };
        b.push(w)?;
        let Some(r) = removing(&b.cur, MoveKind::R1, &[e]) else { continue };
        b.push(r)?;
        if &b.cur == goal {
            return Ok(b.steps);
        }
    }
    Err(none(DerivedMoveKind::MFromWbp))
}

/// Replaces every step of `kind` by the moves `f` builds for it.
fn refine(
    d: &GaussDiagram,
    steps: Vec<MoveApplication>,
    kind: MoveKind,
    f: impl Fn(&GaussDiagram, &MoveApplication, &GaussDiagram) -> Steps,
) -> Steps {
    let mut b = Builder::new(d);
    for s in steps {
        if s.kind == kind {
            let goal = apply(&b.cur, &s)?;
            let sub = f(&b.cur, &s, &goal)?;
            b.extend(sub)?;
            if b.cur != goal {
                return Err(MacroError::Mismatch { kind: DerivedMoveKind::FFromWbp });
            }
        } else {
            b.push(s)?;
        }
    }
    Ok(b.steps)
}

/// F through UC, with UC through M and M through WBP.
fn f_from_wbp(d: &GaussDiagram, t: &MoveApplication, goal: &GaussDiagram) -> Steps {
    let steps = f_from_uc(d, t, goal)?;
    let steps = refine(d, steps, MoveKind::UC, uc_via_m)?;
    refine(d, steps, MoveKind::M, m_from_wbp)
}

fn delta_from_f(d: &GaussDiagram, t: &MoveApplication) -> Steps {
    let mut b = Builder::new(d);
    for k in 0..3 {
        let (s1, s2) = pair(t, k);
        let f = swap_at(&b.cur, s1, s2).filter(|a| a.kind == MoveKind::F).ok_or(none(DerivedMoveKind::DeltaFromF))?;
        b.push(f)?;
    }
    Ok(b.steps)
}

/// Brings the tail of a self-arrow next to its head (OC past tails, F past heads), then R1.
pub(crate) fn transport_and_remove(d: &GaussDiagram, a: ArrowId) -> Steps {
    let mut b = Builder::new(d);
    loop {
        let (ta, ha) = (b.tail(a), b.head(a));
        if b.cur.follows(ta, ha) || b.cur.follows(ha, ta) {
            break;
        }
        let next = toward(ta, ha);
        let sw = swap_at(&b.cur, ta, next).expect("adjacent slots");
        b.push(sw)?;
    }
    let r1 = removing(&b.cur, MoveKind::R1, &[a]).expect("adjacent ends");
    b.push(r1)?;
    Ok(b.steps)
}

fn sv_from_f(d: &GaussDiagram, t: &MoveApplication) -> Steps {
    if t.direction == Direction::Fwd {
        return transport_and_remove(d, t.arrows[0]);
    }
    let (after, removal) = apply_with_inverse(d, t)?;
    let steps = transport_and_remove(&after, removal.arrows[0])?;
    Ok(invert(&after, &steps)?)
}

fn each_arrow(d: &GaussDiagram, arrows: &[ArrowId], kind: MoveKind) -> Steps {
    let mut b = Builder::new(d);
    for &a in arrows {
        let app = on_arrow(&b.cur, kind, a).expect("arrow present");
        b.push(app)?;
    }
    Ok(b.steps)
}

/// Deletes `a` with a V-type move and puts it back reversed, with its sign flipped when
/// `flip`.
fn reinsert_reversed(d: &GaussDiagram, a: ArrowId, kind: MoveKind, flip: bool) -> Steps {
    let mut b = Builder::new(d);
    let del = on_arrow(d, kind, a).expect("arrow present");
    let mut back = b.push(del)?;
    let ins = back.insertion.as_mut().expect("insertion data");
    std::mem::swap(&mut ins.tail, &mut ins.head);
    if flip {
        ins.sign = ins.sign.flip();
    }
    if ins.tail == ins.head {
        ins.head_first = !ins.head_first;
    }
    b.push(back)?;
    Ok(b.steps)
}

fn wbp_from_v(d: &GaussDiagram, t: &MoveApplication) -> Steps {
    let mut b = Builder::new(d);
    for &a in &t.arrows {
        let sub = reinsert_reversed(&b.cur, a, MoveKind::V, Some(a) != t.keep)?;
        b.extend(sub)?;
    }
    Ok(b.steps)
}

/// On at most two strands one arrow of a cyclic triangle joins two portions of the same
/// strand. Changing that crossing makes the triangle stacked: SC, R3, SC.
fn delta_from_sc(d: &GaussDiagram, t: &MoveApplication) -> Steps {
    if d.n() > 2 {
        return Err(MacroError::Unsupported(format!("DELTA_from_SC_2strand needs at most 2 strands, got {}", d.n())));
    }
    let a = *t
        .arrows
        .iter()
        .find(|&&a| d.arrow(a).is_some_and(|x| x.is_self()))
        .ok_or(none(DerivedMoveKind::DeltaFromSc2))?;
    let pairs = [pair(t, 0), pair(t, 1), pair(t, 2)];
    let mut b = Builder::new(d);
    b.push(on_arrow(d, MoveKind::SC, a).expect("self-arrow"))?;
    let r3 = site_at(&b.cur, MoveKind::R3, &pairs, &[], None).ok_or(none(DerivedMoveKind::DeltaFromSc2))?;
    b.push(r3)?;
    let sc = on_arrow(&b.cur, MoveKind::SC, a).expect("self-arrow");
    b.push(sc)?;
    Ok(b.steps)
}
