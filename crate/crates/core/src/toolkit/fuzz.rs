use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{decide, QuotientTag, Verdict};
use crate::diagram::GaussDiagram;
use crate::moves::{apply, MoveKind, MoveSequence};

use super::random::random_walk_with;
use super::{ToolkitError, WalkParams};

/// A single move after which the classifier of the tag reports a different class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Position of the walk's start diagram in the corpus.
    pub index: usize,
    /// Step of the walk at which it happened.
    pub step: usize,
    /// The diagram just before the move.
    pub start: GaussDiagram,
    /// The offending move alone, replayable from `start`.
    pub trace: MoveSequence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub tag: QuotientTag,
    pub kinds: Vec<MoveKind>,
    pub walks: usize,
    pub moves: usize,
    pub violations: Vec<Violation>,
}

impl FuzzReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Random walks of `steps` moves of `kinds` from every corpus diagram, comparing the
/// classes before and after each move. A walk stops at its first violation, which is
/// reported as the one-move trace from the diagram where it occurred.
pub fn fuzz_invariance(
    tag: QuotientTag,
    corpus: &[GaussDiagram],
    kinds: &[MoveKind],
    steps: usize,
    seed: u64,
) -> Result<FuzzReport, ToolkitError> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let params = WalkParams::default();
    let mut report = FuzzReport { tag, kinds: kinds.to_vec(), walks: 0, moves: 0, violations: Vec::new() };
    for (index, d) in corpus.iter().enumerate() {
        let walk_seed: u64 = master.gen();
        let (_, seq) = random_walk_with(d, kinds, steps, walk_seed, &params);
        report.walks += 1;
        let mut cur = d.clone();
        for (step, app) in seq.steps.iter().enumerate() {
            let next = apply(&cur, app)?;
            report.moves += 1;
            if decide(tag, &cur, &next)? == Verdict::Inequivalent {
                let mut trace = MoveSequence::new(cur.fingerprint(), vec![app.clone()]);
                trace.notes.push(format!("violation: tag={tag} walk={index} step={step}"));
                report.violations.push(Violation { index, step, start: cur, trace });
                break;
            }
            cur = next;
        }
    }
    Ok(report)
}
