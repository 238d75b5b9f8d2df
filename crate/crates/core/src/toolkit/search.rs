use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{canonical, GaussDiagram};
use crate::moves::{apply, enumerate, enumerate_insertions, MoveApplication, MoveKind, MoveSequence};

use super::{SearchBudget, ToolkitError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StopReason {
    /// Every path of at most `max_depth` moves was tried.
    DepthLimit,
    /// More than `max_states` diagrams were stored.
    StateLimit,
    /// One side ran out of new diagrams within the arrow cap.
    Exhausted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStop {
    pub reason: StopReason,
    pub states: usize,
    /// Forward plus backward depth reached.
    pub depth: usize,
}

/// Either a shortest sequence or "unknown": a search never concludes inequivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchOutcome {
    Found(MoveSequence),
    Unknown(SearchStop),
}

/// All applications of `kinds` at `d`, in the order of `MoveKind::ALL`; insertions of
/// the inserting kinds use fresh ids and are skipped past `max_arrows`.
pub fn neighbours(d: &GaussDiagram, kinds: &[MoveKind], max_arrows: usize) -> Vec<MoveApplication> {
    let mut out = Vec::new();
    for kind in MoveKind::ALL.into_iter().filter(|k| kinds.contains(k)) {
        out.extend(enumerate(d, kind));
        if kind.inserts() {
            let k = if kind == MoveKind::R2 { 2 } else { 1 };
            if d.arrow_count() + k <= max_arrows {
                let f = d.fresh_id();
                let ids: Vec<_> = (f..f + k as u32).collect();
                out.extend(enumerate_insertions(d, kind, &ids));
            }
        }
    }
    out
}

struct Node {
    diagram: GaussDiagram,
    parent: Option<usize>,
    step: Option<MoveApplication>,
    depth: usize,
}

struct Side {
    nodes: Vec<Node>,
    index: HashMap<GaussDiagram, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn new(d: &GaussDiagram) -> Self {
        let mut index = HashMap::new();
        index.insert(canonical(d).0, 0);
        Side { nodes: vec![Node { diagram: d.clone(), parent: None, step: None, depth: 0 }], index, frontier: vec![0], depth: 0 }
    }

    /// Moves from the root to node `i`.
    fn path(&self, mut i: usize) -> Vec<MoveApplication> {
        let mut out = Vec::new();
        while let Some(p) = self.nodes[i].parent {
            out.push(self.nodes[i].step.clone().expect("non-root node"));
            i = p;
        }
        out.reverse();
        out
    }

    /// Diagrams from node `i` back to the root, `i` excluded.
    fn ancestors(&self, mut i: usize) -> Vec<&GaussDiagram> {
        let mut out = Vec::new();
        while let Some(p) = self.nodes[i].parent {
            out.push(&self.nodes[p].diagram);
            i = p;
        }
        out
    }
}

/// Bidirectional breadth-first search over diagrams up to relabelling, expanding one full
/// level of the smaller frontier at a time. A returned sequence is shortest; among
/// shortest ones it is the first met in enumeration order.
pub fn bfs_search(
    d1: &GaussDiagram,
    d2: &GaussDiagram,
    kinds: &[MoveKind],
    budget: &SearchBudget,
) -> Result<SearchOutcome, ToolkitError> {
    budget.check()?;
    if d1.n() != d2.n() || d1.kind() != d2.kind() {
        return Err(ToolkitError::Incomparable(format!("{} {}", d1.kind(), d1.n()), format!("{} {}", d2.kind(), d2.n())));
    }
    for d in [d1, d2] {
        if d.arrow_count() > budget.max_arrows {
            return Err(ToolkitError::TooLarge { got: d.arrow_count(), max: budget.max_arrows });
        }
    }
    let mut sides = [Side::new(d1), Side::new(d2)];
    if sides[0].index.contains_key(&canonical(d2).0) {
        return Ok(SearchOutcome::Found(MoveSequence::new(d1.fingerprint(), Vec::new())));
    }
    let states = |s: &[Side; 2]| s[0].nodes.len() + s[1].nodes.len();
    let stop = |reason, s: &[Side; 2]| SearchStop { reason, states: states(s), depth: s[0].depth + s[1].depth };
    while sides[0].depth + sides[1].depth < budget.max_depth {
        if sides[0].frontier.is_empty() || sides[1].frontier.is_empty() {
            return Ok(SearchOutcome::Unknown(stop(StopReason::Exhausted, &sides)));
        }
        let me = usize::from(sides[1].frontier.len() < sides[0].frontier.len());
        let [a, b] = &mut sides;
        let (this, other) = if me == 0 { (a, b) } else { (b, a) };
        let frontier = std::mem::take(&mut this.frontier);
        let mut best: Option<(usize, usize, usize)> = None;
        let mut over = false;
        'level: for &i in &frontier {
            for app in neighbours(&this.nodes[i].diagram, kinds, budget.max_arrows) {
                let Ok(child) = apply(&this.nodes[i].diagram, &app) else { continue };
                let key = canonical(&child).0;
                if this.index.contains_key(&key) {
                    continue;
                }
                let j = this.nodes.len();
                let depth = this.nodes[i].depth + 1;
                if let Some(&k) = other.index.get(&key) {
                    let total = depth + other.nodes[k].depth;
                    if best.is_none_or(|(t, _, _)| total < t) {
                        best = Some((total, j, k));
                    }
                }
                this.index.insert(key, j);
                this.nodes.push(Node { diagram: child, parent: Some(i), step: Some(app), depth });
                this.frontier.push(j);
                if this.nodes.len() + other.nodes.len() > budget.max_states {
                    over = true;
                    break 'level;
                }
            }
        }
        this.depth += 1;
        if let Some((_, j, k)) = best {
            let (f, g) = if me == 0 { (j, k) } else { (k, j) };
            return Ok(SearchOutcome::Found(join(&sides, f, g, d1, kinds, budget)?));
        }
        if over {
            return Ok(SearchOutcome::Unknown(stop(StopReason::StateLimit, &sides)));
        }
    }
    Ok(SearchOutcome::Unknown(stop(StopReason::DepthLimit, &sides)))
}

/// The forward path to node `f`, then moves retracing the backward tree from node `g` to
/// its root. Backward diagrams agree with the current one only up to relabelling, so
/// each retracing move is the first neighbour landing on the next backward diagram.
fn join(
    sides: &[Side; 2],
    f: usize,
    g: usize,
    d1: &GaussDiagram,
    kinds: &[MoveKind],
    budget: &SearchBudget,
) -> Result<MoveSequence, ToolkitError> {
    let mut steps = sides[0].path(f);
    let mut cur = sides[0].nodes[f].diagram.clone();
    for next in sides[1].ancestors(g) {
        let want = canonical(next).0;
        let (app, after) = neighbours(&cur, kinds, budget.max_arrows)
            .into_iter()
            .find_map(|app| {
                let after = apply(&cur, &app).ok()?;
                (canonical(&after).0 == want).then_some((app, after))
            })
            .ok_or_else(|| ToolkitError::Incomparable(cur.to_string(), next.to_string()))?;
        steps.push(app);
        cur = after;
    }
    Ok(MoveSequence::new(d1.fingerprint(), steps))
}
