//! Which moves generate which, with the macro realising each relation when there is one.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::moves::MoveKind;

use super::DerivedMoveKind;

/// `Classical`: realised with classical Reidemeister moves only. `Welded`: welded
/// Reidemeister moves (OC) may be needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Strength {
    Classical,
    Welded,
}

/// Where a relation comes from: the ordering diagram of the local moves, the width
/// induction (which upgrades the classical chain CC, BP, DELTA, SC to welded), or one of
/// the single-move realisations (F and UC, VC and CC giving F, WBP giving SR, the clasp
/// move and M).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Source {
    OrderingDiagram,
    WidthInduction,
    Realisation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// The generating move.
    pub from: MoveKind,
    /// The move it realises.
    pub to: MoveKind,
    pub strength: Strength,
    /// False when the realisation is only known from outside results.
    pub constructive: bool,
    /// The macro building the realisation, if a single one does.
    pub via: Option<DerivedMoveKind>,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationTable {
    pub relations: Vec<Relation>,
}

impl RelationTable {
    pub fn standard() -> Self {
        use DerivedMoveKind as D;
        use MoveKind::*;
        use Source::*;
        use Strength::*;
        let r = |from, to, strength, via: Option<D>, source| Relation {
            from,
            to,
            strength,
            constructive: via.is_some() || (from, to) == (Wbp, Bp),
            via,
            source,
        };
        RelationTable {
            relations: vec![
                r(CC, Bp, Classical, Some(D::BpFromCc), OrderingDiagram),
                r(Bp, Delta, Classical, None, OrderingDiagram),
                r(Delta, SC, Classical, Some(D::ScFromDelta), OrderingDiagram),
                r(V, CC, Welded, Some(D::CcFromV), OrderingDiagram),
                r(V, Wbp, Welded, Some(D::WbpFromV), OrderingDiagram),
                // WBP keeping one arrow, then SR on it
                r(Wbp, Bp, Welded, None, OrderingDiagram),
                r(Wbp, F, Welded, Some(D::FFromWbp), OrderingDiagram),
                r(F, Delta, Welded, Some(D::DeltaFromF), OrderingDiagram),
                r(F, SV, Welded, Some(D::SvFromF), OrderingDiagram),
                r(SV, SC, Welded, Some(D::ScFromSv), OrderingDiagram),
                r(CC, Bp, Welded, Some(D::BpFromCc), WidthInduction),
                r(Bp, Delta, Welded, None, WidthInduction),
                r(Delta, SC, Welded, Some(D::ScFromDelta), WidthInduction),
                r(F, UC, Welded, Some(D::UcFromF), Realisation),
                r(UC, F, Welded, Some(D::FFromUc), Realisation),
                r(VC, F, Welded, Some(D::FFromVc), Realisation),
                r(CC, F, Welded, Some(D::FFromCc), Realisation),
                r(Wbp, SR, Welded, Some(D::SrFromWbp), Realisation),
                r(Wbp, Mixed4, Welded, Some(D::FourFromWbp), Realisation),
                r(Wbp, M, Welded, Some(D::MFromWbp), Realisation),
            ],
        }
    }

    /// The relations of one source.
    pub fn from_source(&self, source: Source) -> impl Iterator<Item = &Relation> {
        self.relations.iter().filter(move |r| r.source == source)
    }

    /// All pairs `(a, b)` with `a` generating `b` through a chain of relations.
    pub fn closure(&self) -> BTreeSet<(MoveKind, MoveKind)> {
        let mut out: BTreeSet<(MoveKind, MoveKind)> = self.relations.iter().map(|r| (r.from, r.to)).collect();
        loop {
            let mut added = Vec::new();
            for &(a, b) in &out {
                for &(c, e) in &out {
                    if b == c && a != e && !out.contains(&(a, e)) {
                        added.push((a, e));
                    }
                }
            }
            if added.is_empty() {
                return out;
            }
            out.extend(added);
        }
    }

    pub fn generates(&self, from: MoveKind, to: MoveKind) -> bool {
        from == to || self.closure().contains(&(from, to))
    }
}
