//! Derived moves: sequences of generating moves and Reidemeister moves that realise
//! another move, checked by replay.

pub(crate) mod build;
pub(crate) mod constructions;
mod knot;
mod relations;
mod sc;

pub use knot::{trivialize_long_knot, unknot_step};
pub use relations::{Relation, RelationTable, Source, Strength};
pub use sc::{expand_sc_via_delta, width, ScExpansion};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{equal_raw, ArrowId, GaussDiagram};
use crate::moves::{apply, apply_all, apply_sequence, MoveApplication, MoveError, MoveKind, MoveSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DerivedMoveKind {
    UcFromF,
    FFromUc,
    FFromVc,
    FFromCc,
    SrFromWbp,
    FourFromWbp,
    MFromWbp,
    FFromWbp,
    DeltaFromF,
    SvFromF,
    ScFromDelta,
    BpFromCc,
    CcFromV,
    ScFromSv,
    WbpFromV,
    DeltaFromSc2,
}

impl DerivedMoveKind {
    pub const ALL: [DerivedMoveKind; 16] = [
        DerivedMoveKind::UcFromF,
        DerivedMoveKind::FFromUc,
        DerivedMoveKind::FFromVc,
        DerivedMoveKind::FFromCc,
        DerivedMoveKind::SrFromWbp,
        DerivedMoveKind::FourFromWbp,
        DerivedMoveKind::MFromWbp,
        DerivedMoveKind::FFromWbp,
        DerivedMoveKind::DeltaFromF,
        DerivedMoveKind::SvFromF,
        DerivedMoveKind::ScFromDelta,
        DerivedMoveKind::BpFromCc,
        DerivedMoveKind::CcFromV,
        DerivedMoveKind::ScFromSv,
        DerivedMoveKind::WbpFromV,
        DerivedMoveKind::DeltaFromSc2,
    ];

    pub fn name(self) -> &'static str {
        use DerivedMoveKind::*;
        match self {
            UcFromF => "UC_from_F",
            FFromUc => "F_from_UC",
            FFromVc => "F_from_VC",
            FFromCc => "F_from_CC",
            SrFromWbp => "SR_from_wBP",
            FourFromWbp => "FOUR_from_wBP",
            MFromWbp => "M_from_wBP",
            FFromWbp => "F_from_wBP",
            DeltaFromF => "DELTA_from_F",
            SvFromF => "SV_from_F",
            ScFromDelta => "SC_from_DELTA",
            BpFromCc => "BP_from_CC",
            CcFromV => "CC_from_V",
            ScFromSv => "SC_from_SV",
            WbpFromV => "wBP_from_V",
            DeltaFromSc2 => "DELTA_from_SC_2strand",
        }
    }

    /// The move being realised.
    pub fn target(self) -> MoveKind {
        use DerivedMoveKind::*;
        match self {
            UcFromF => MoveKind::UC,
            FFromUc | FFromVc | FFromCc | FFromWbp => MoveKind::F,
            SrFromWbp => MoveKind::SR,
            FourFromWbp => MoveKind::Mixed4,
            MFromWbp => MoveKind::M,
            DeltaFromF | DeltaFromSc2 => MoveKind::Delta,
            SvFromF => MoveKind::SV,
            ScFromDelta | ScFromSv => MoveKind::SC,
            BpFromCc => MoveKind::Bp,
            CcFromV => MoveKind::CC,
            WbpFromV => MoveKind::Wbp,
        }
    }

    /// The generating move.
    pub fn generator(self) -> MoveKind {
        use DerivedMoveKind::*;
        match self {
            UcFromF | DeltaFromF | SvFromF => MoveKind::F,
            FFromUc => MoveKind::UC,
            FFromVc => MoveKind::VC,
            FFromCc | BpFromCc => MoveKind::CC,
            SrFromWbp | FourFromWbp | MFromWbp | FFromWbp => MoveKind::Wbp,
            ScFromDelta => MoveKind::Delta,
            CcFromV | WbpFromV => MoveKind::V,
            ScFromSv => MoveKind::SV,
            DeltaFromSc2 => MoveKind::SC,
        }
    }

    /// The generating move together with R1, R2, R3 and OC.
    pub fn allowed(self) -> Vec<MoveKind> {
        let mut v = MoveKind::REIDEMEISTER.to_vec();
        v.push(self.generator());
        v
    }
}

impl fmt::Display for DerivedMoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown derived move `{0}`")]
pub struct UnknownDerivedMove(pub String);

impl FromStr for DerivedMoveKind {
    type Err = UnknownDerivedMove;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let want = s.trim().to_ascii_lowercase();
        DerivedMoveKind::ALL
            .into_iter()
            .find(|k| k.name().to_ascii_lowercase() == want)
            .ok_or_else(|| UnknownDerivedMove(s.to_string()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MacroError {
    #[error("{kind} realises {expected} moves, the target is {found}")]
    WrongTarget { kind: DerivedMoveKind, expected: MoveKind, found: MoveKind },
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("no arrow {0}")]
    NoArrow(ArrowId),
    #[error("arrow {0} is not a self-arrow")]
    NotSelfArrow(ArrowId),
    #[error("{kind}: no admissible choice realises this site")]
    NoConstruction { kind: DerivedMoveKind },
    #[error("{kind}: replay does not reproduce the direct move")]
    Mismatch { kind: DerivedMoveKind },
    #[error("{kind}: step {index} uses {used}, outside the generating set")]
    Impure { kind: DerivedMoveKind, index: usize, used: MoveKind },
    #[error("width of arrow {arrow} did not decrease ({before} -> {after})")]
    WidthNotDecreasing { arrow: ArrowId, before: usize, after: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("moves {{{0}}} cannot trivialize long knots constructively")]
    InsufficientSet(String),
}

/// A sequence of the derived kind's allowed moves whose replay from `d` gives the same
/// diagram as applying `target` directly.
pub fn expand(kind: DerivedMoveKind, d: &GaussDiagram, target: &MoveApplication) -> Result<MoveSequence, MacroError> {
    if target.kind != kind.target() {
        return Err(MacroError::WrongTarget { kind, expected: kind.target(), found: target.kind });
    }
    let goal = apply(d, target)?;
    let steps = constructions::build(kind, d, target, &goal)?;
    let allowed = kind.allowed();
    if let Some((index, s)) = steps.iter().enumerate().find(|(_, s)| !allowed.contains(&s.kind)) {
        return Err(MacroError::Impure { kind, index, used: s.kind });
    }
    let out = apply_all(d, &steps)?;
    if !equal_raw(&out, &goal).map_err(MoveError::from)? {
        return Err(MacroError::Mismatch { kind });
    }
    let mut seq = MoveSequence::new(d.fingerprint(), steps);
    seq.notes.push(format!("macro: {}", kind.name()));
    Ok(seq)
}

/// True iff `seq` replays from `d` to the result of `target` using only allowed moves.
pub fn verify_sequence(kind: DerivedMoveKind, d: &GaussDiagram, target: &MoveApplication, seq: &MoveSequence) -> bool {
    let allowed = kind.allowed();
    if seq.steps.iter().any(|s| !allowed.contains(&s.kind)) {
        return false;
    }
    match (apply(d, target), apply_sequence(d, seq)) {
        (Ok(goal), Ok(out)) => equal_raw(&goal, &out).unwrap_or(false),
        _ => false,
    }
}

/// Expands and checks. Any failure to expand counts as false.
pub fn verify(d: &GaussDiagram, kind: DerivedMoveKind, target: &MoveApplication) -> bool {
    expand(kind, d, target).is_ok_and(|seq| verify_sequence(kind, d, target, &seq))
}
