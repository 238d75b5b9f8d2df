//! Explicit move sequences from a string link to its normal form.

use std::collections::BTreeMap;

use crate::diagram::{equal_raw, ArrowId, Endpoint, GaussDiagram, Sign, Slot};
use crate::invariants::{vlk, Tag};
use crate::macros::build::{inserting, on_arrow, r1_at, removing, toward, Builder};
use crate::macros::constructions::transport_and_remove;
use crate::macros::{expand, DerivedMoveKind};
use crate::moves::{apply, site_at, swap_at, Gap, MoveApplication, MoveKind, MoveSequence};

use super::{need, normal_form, ClassifyError, QuotientTag};

/// Moves of the tag's quotient (with moves it lacks replaced by macros) taking `d` to
/// `normal_form(tag, d)`. The result is replayed and compared before being returned.
pub fn reduction_sequence(tag: Tag, d: &GaussDiagram) -> Result<MoveSequence, ClassifyError> {
    need(crate::diagram::Kind::Open, d)?;
    let target = normal_form(tag, d)?;
    let mut r = Reducer { b: Builder::new(d), tag };
    match tag {
        Tag::V => {
            let ids: Vec<ArrowId> = d.arrow_ids().collect();
            for id in ids {
                r.push(on_arrow(&r.b.cur, MoveKind::V, id).expect("arrow present"))?;
            }
        }
        Tag::VC | Tag::CC => {
            // point every arrow between distinct strands from the lower to the higher strand
            let kind = QuotientTag::from(tag).generator();
            let back: Vec<ArrowId> =
                r.b.cur.arrows().iter().filter(|a| a.tail.strand > a.head.strand).map(|a| a.id).collect();
            for id in back {
                r.push(on_arrow(&r.b.cur, kind, id).expect("arrow present"))?;
            }
        }
        Tag::WBP => {
            r.remove_self_arrows()?;
            r.kernel(&target)?;
        }
        Tag::F => {}
    }
    r.arrange(&target)?;
    let out = crate::moves::apply_all(d, &r.b.steps)?;
    if !equal_raw(&out, &target).unwrap_or(false) {
        return Err(ClassifyError::Mismatch(format!("replay gives\n{out}")));
    }
    let mut seq = MoveSequence::new(d.fingerprint(), r.b.steps);
    seq.notes.push(format!("reduce: tag={tag}"));
    Ok(seq)
}

struct Reducer {
    b: Builder,
    tag: Tag,
}

impl Reducer {
    /// Pushes a move, through macros when the quotient lacks it.
    fn push(&mut self, app: MoveApplication) -> Result<(), ClassifyError> {
        let gen = QuotientTag::from(self.tag).generator();
        if app.kind.is_reidemeister() || app.kind == gen {
            self.b.push(app)?;
            return Ok(());
        }
        let via = match (app.kind, self.tag) {
            (MoveKind::UC, _) => DerivedMoveKind::UcFromF,
            (MoveKind::F, Tag::VC) => DerivedMoveKind::FFromVc,
            (MoveKind::F, Tag::CC) => DerivedMoveKind::FFromCc,
            (MoveKind::F, Tag::WBP) => DerivedMoveKind::FFromWbp,
            (MoveKind::SR, Tag::WBP) => DerivedMoveKind::SrFromWbp,
            (k, _) => return Err(ClassifyError::Unrealisable(k)),
        };
        let goal = apply(&self.b.cur, &app)?;
        for s in expand(via, &self.b.cur, &app)?.steps {
            self.push(s)?;
        }
        if self.b.cur != goal {
            return Err(ClassifyError::Mismatch(format!("{via} left the diagram elsewhere")));
        }
        Ok(())
    }

    fn swap(&mut self, a: Slot, b: Slot) -> Result<(), ClassifyError> {
        let app = swap_at(&self.b.cur, a, b).ok_or(ClassifyError::Unrealisable(MoveKind::F))?;
        self.push(app)
    }

    /// Slides endpoint `e` along its strand until it sits next to `to`.
    fn bring(&mut self, e: Endpoint, to: Endpoint) -> Result<(), ClassifyError> {
        loop {
            let (x, y) = (self.b.at(e), self.b.at(to));
            if x.pos.abs_diff(y.pos) == 1 {
                return Ok(());
            }
            self.swap(x, toward(x, y))?;
        }
    }

    fn remove_self_arrows(&mut self) -> Result<(), ClassifyError> {
        while let Some(a) = self.b.cur.arrows().into_iter().find(|a| a.is_self()) {
            for s in transport_and_remove(&self.b.cur, a.id)? {
                self.push(s)?;
            }
        }
        Ok(())
    }

    /// Removes pairs of opposite arrows between the same ordered pair of strands.
    fn cancel(&mut self) -> Result<(), ClassifyError> {
        loop {
            let arrows = self.b.cur.arrows();
            let found = arrows.iter().find_map(|a| {
                (a.sign == Sign::Plus).then(|| {
                    arrows
                        .iter()
                        .find(|b| b.sign == Sign::Minus && (b.tail.strand, b.head.strand) == (a.tail.strand, a.head.strand))
                        .map(|b| (a.id, b.id))
                })?
            });
            let Some((a, b)) = found else { return Ok(()) };
            self.bring(Endpoint::tail(b), Endpoint::tail(a))?;
            self.bring(Endpoint::head(b), Endpoint::head(a))?;
            let r2 = removing(&self.b.cur, MoveKind::R2, &[a, b]).ok_or(ClassifyError::Unrealisable(MoveKind::R2))?;
            self.push(r2)?;
        }
    }

    /// Arrows between distinct strands grouped by (tail strand, head strand), each group
    /// ordered along the tail strand.
    fn classes(d: &GaussDiagram) -> BTreeMap<(usize, usize), Vec<(ArrowId, Sign)>> {
        let mut out: BTreeMap<(usize, usize), Vec<(usize, ArrowId, Sign)>> = BTreeMap::new();
        for a in d.arrows() {
            out.entry((a.tail.strand, a.head.strand)).or_default().push((a.tail.pos, a.id, a.sign));
        }
        out.into_iter()
            .map(|(k, mut v)| {
                v.sort();
                (k, v.into_iter().map(|(_, id, s)| (id, s)).collect())
            })
            .collect()
    }

    /// Takes the current diagram to `target`, which has no self-arrows and the same
    /// linking numbers, with one sign per class.
    fn arrange(&mut self, target: &GaussDiagram) -> Result<(), ClassifyError> {
        self.remove_self_arrows()?;
        self.cancel()?;
        let (have, want) = (Self::classes(&self.b.cur), Self::classes(target));
        let mut rename: BTreeMap<ArrowId, ArrowId> = BTreeMap::new();
        if have.len() != want.len() {
            return Err(ClassifyError::Mismatch("arrow classes differ".into()));
        }
        for ((k1, v1), (k2, v2)) in have.iter().zip(&want) {
            let signs = |v: &[(ArrowId, Sign)]| v.iter().map(|x| x.1).collect::<Vec<_>>();
            if k1 != k2 || signs(v1) != signs(v2) {
                return Err(ClassifyError::Mismatch(format!("class {k1:?} does not match {k2:?}")));
            }
            for (x, y) in v2.iter().zip(v1) {
                rename.insert(x.0, y.0);
            }
        }
        for s in 1..=target.n() {
            let order: Vec<Endpoint> =
                target.strand(s).iter().map(|e| Endpoint { arrow: rename[&e.arrow], role: e.role }).collect();
            for (p, &e) in order.iter().enumerate() {
                let mut q = self.b.at(e).pos;
                while q > p {
                    self.swap(Slot::new(s, q - 1), Slot::new(s, q))?;
                    q -= 1;
                }
            }
        }
        Ok(())
    }

    /// Brings the linking numbers to those of `target` with WBP moves: mod 2 the
    /// difference is a graph with even degrees, cleared by triangles through the last
    /// strand; the even remainder is cleared with SR.
    fn kernel(&mut self, target: &GaussDiagram) -> Result<(), ClassifyError> {
        let n = target.n();
        let want = vlk(target);
        let have = vlk(&self.b.cur);
        for a in 1..n {
            for b in a + 1..n {
                if (have.get(a, b) - want.get(a, b)).rem_euclid(2) == 1 {
                    self.triangle(a, b, n)?;
                }
            }
        }
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                loop {
                    let diff = vlk(&self.b.cur).get(i, j) - want.get(i, j);
                    if diff == 0 {
                        break;
                    }
                    if diff % 2 != 0 {
                        return Err(ClassifyError::Mismatch(format!("odd difference at ({i},{j})")));
                    }
                    let sign = if diff > 0 { Sign::Plus } else { Sign::Minus };
                    let id = match self.b.cur.arrows().iter().find(|a| (a.tail.strand, a.head.strand, a.sign) == (i, j, sign)) {
                        Some(a) => a.id,
                        None => {
                            let ids = self.b.fresh_pair();
                            let (ti, hj) = (self.end(i), self.end(j));
                            self.push(inserting(MoveKind::R2, &ids, sign, ti, hj, false, false))?;
                            ids[0]
                        }
                    };
                    self.push(on_arrow(&self.b.cur, MoveKind::SR, id).expect("arrow present"))?;
                }
            }
        }
        Ok(())
    }

    fn end(&self, s: usize) -> Gap {
        Gap { strand: s, index: self.b.cur.strand_len(s) }
    }

    fn after(&self, e: Endpoint) -> Gap {
        let s = self.b.at(e);
        Gap { strand: s.strand, index: s.pos + 1 }
    }

    /// One WBP on four new arrows x: a->b, y: a->c, z: b->b, w: b->c, laid out with
    /// R1 and R2 so that tails {x, y}, tails {w, z}, heads {z, x}, heads {y, w} are
    /// adjacent. Reversing them changes every vlk between a, b and c by one.
    fn triangle(&mut self, a: usize, b: usize, c: usize) -> Result<(), ClassifyError> {
        let f = self.b.cur.fresh_id();
        let [z, x, x2, y, y2, w2, w] = [f, f + 1, f + 2, f + 3, f + 4, f + 5, f + 6];
        let plus = Sign::Plus;
        self.push(r1_at(z, plus, self.end(b), false))?;
        let (ta, hb) = (self.end(a), self.end(b));
        self.push(inserting(MoveKind::R2, &[x, x2], plus, ta, hb, false, false))?;
        let (tx, hc) = (self.after(Endpoint::tail(x)), self.end(c));
        self.push(inserting(MoveKind::R2, &[y, y2], plus, tx, hc, false, false))?;
        let tz = Gap { strand: b, index: self.b.tail(z).pos };
        let hy = self.after(Endpoint::head(y));
        self.push(inserting(MoveKind::R2, &[w2, w], plus, tz, hy, true, false))?;
        let at = |e: Endpoint| self.b.at(e);
        let pairs = [
            (at(Endpoint::tail(x)), at(Endpoint::tail(y))),
            (at(Endpoint::tail(w)), at(Endpoint::tail(z))),
            (at(Endpoint::head(z)), at(Endpoint::head(x))),
            (at(Endpoint::head(y)), at(Endpoint::head(w))),
        ];
        let wbp = site_at(&self.b.cur, MoveKind::Wbp, &pairs, &[], Some(x)).ok_or(ClassifyError::Unrealisable(MoveKind::Wbp))?;
        self.push(wbp)
    }
}
