use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{ArrowId, Endpoint, GaussDiagram, Kind, Sign};
use crate::moves::{apply, enumerate, enumerate_insertions, MoveApplication, MoveKind, MoveSequence};

/// An open diagram with `m` arrows on `n` strands. Each endpoint in turn is dropped into
/// one of the current gaps, chosen uniformly; signs are fair coins.
pub fn random_diagram(n: usize, m: usize, seed: u64) -> GaussDiagram {
    assert!(n >= 1, "at least one strand");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut strands: Vec<Vec<Endpoint>> = vec![Vec::new(); n];
    let mut signs = BTreeMap::new();
    for a in 1..=m as ArrowId {
        for e in [Endpoint::tail(a), Endpoint::head(a)] {
            let total: usize = strands.iter().map(|s| s.len() + 1).sum();
            let mut g = rng.gen_range(0..total);
            for s in strands.iter_mut() {
                if g <= s.len() {
                    s.insert(g, e);
                    break;
                }
                g -= s.len() + 1;
            }
        }
        signs.insert(a, if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus });
    }
    GaussDiagram::new(Kind::Open, strands, signs).expect("well-formed by construction")
}

/// How a walk mixes insertions with the other moves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WalkParams {
    /// Chance of an insertion step when both kinds of step are available.
    pub insert_rate: f64,
    /// Insertions are skipped once the diagram has this many arrows more than at the start.
    pub extra_arrows: usize,
}

impl Default for WalkParams {
    fn default() -> Self {
        WalkParams { insert_rate: 0.25, extra_arrows: 6 }
    }
}

pub fn random_walk(d: &GaussDiagram, kinds: &[MoveKind], steps: usize, seed: u64) -> (GaussDiagram, MoveSequence) {
    random_walk_with(d, kinds, steps, seed, &WalkParams::default())
}

/// Each step picks uniformly among the applications `enumerate` gives for `kinds`, or,
/// at rate `insert_rate`, uniformly among the insertions of an inserting kind. Steps
/// with nothing to apply are skipped.
pub fn random_walk_with(
    d: &GaussDiagram,
    kinds: &[MoveKind],
    steps: usize,
    seed: u64,
    params: &WalkParams,
) -> (GaussDiagram, MoveSequence) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = d.arrow_count() + params.extra_arrows;
    let kinds: Vec<MoveKind> = MoveKind::ALL.into_iter().filter(|k| kinds.contains(k)).collect();
    let mut cur = d.clone();
    let mut done = Vec::new();
    for _ in 0..steps {
        let Some(app) = pick(&cur, &kinds, cap, params, &mut rng) else { continue };
        if let Ok(next) = apply(&cur, &app) {
            cur = next;
            done.push(app);
        }
    }
    let mut seq = MoveSequence::new(d.fingerprint(), done);
    let names: Vec<&str> = kinds.iter().map(|k| k.name()).collect();
    seq.notes.push(format!("walk: seed={seed} kinds={}", names.join(",")));
    (cur, seq)
}

fn pick(
    d: &GaussDiagram,
    kinds: &[MoveKind],
    cap: usize,
    params: &WalkParams,
    rng: &mut ChaCha8Rng,
) -> Option<MoveApplication> {
    let local: Vec<MoveApplication> = kinds.iter().flat_map(|&k| enumerate(d, k)).collect();
    let inserting: Vec<MoveKind> = kinds
        .iter()
        .copied()
        .filter(|k| k.inserts() && d.arrow_count() + if *k == MoveKind::R2 { 2 } else { 1 } <= cap)
        .collect();
    let insert = !inserting.is_empty() && (local.is_empty() || rng.gen_bool(params.insert_rate));
    if insert {
        let kind = *inserting.choose(rng)?;
        let f = d.fresh_id();
        let ids: Vec<ArrowId> = if kind == MoveKind::R2 { vec![f, f + 1] } else { vec![f] };
        enumerate_insertions(d, kind, &ids).choose(rng).cloned()
    } else {
        local.choose(rng).cloned()
    }
}
