//! Deciding equivalence in each quotient, normal forms, closed and unordered links,
//! and pure braids up to CC.

mod reduce;

pub use reduce::reduction_sequence;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{GaussDiagram, Kind, Sign};
use crate::invariants::{invariant_for, project, vlk, QuotientInvariant, Tag, VlkMatrix};
use crate::macros::MacroError;
use crate::moves::{MoveError, MoveKind};
use crate::rfgroup::{aut_equal, phi_hl, RfError};

/// A quotient of welded string links: welded Reidemeister moves plus one local move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum QuotientTag {
    V,
    F,
    VC,
    CC,
    WBP,
    SV,
    /// DELTA on two strands.
    Delta2,
}

impl QuotientTag {
    pub const ALL: [QuotientTag; 7] = [
        QuotientTag::V,
        QuotientTag::F,
        QuotientTag::VC,
        QuotientTag::CC,
        QuotientTag::WBP,
        QuotientTag::SV,
        QuotientTag::Delta2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QuotientTag::V => "V",
            QuotientTag::F => "F",
            QuotientTag::VC => "VC",
            QuotientTag::CC => "CC",
            QuotientTag::WBP => "WBP",
            QuotientTag::SV => "SV",
            QuotientTag::Delta2 => "DELTA_2strand",
        }
    }

    /// The linking-number classifier, for the tags that have one.
    pub fn classifier(self) -> Option<Tag> {
        match self {
            QuotientTag::V => Some(Tag::V),
            QuotientTag::F => Some(Tag::F),
            QuotientTag::VC => Some(Tag::VC),
            QuotientTag::CC => Some(Tag::CC),
            QuotientTag::WBP => Some(Tag::WBP),
            QuotientTag::SV | QuotientTag::Delta2 => None,
        }
    }

    /// The local move defining the quotient.
    pub fn generator(self) -> MoveKind {
        match self {
            QuotientTag::V => MoveKind::V,
            QuotientTag::F => MoveKind::F,
            QuotientTag::VC => MoveKind::VC,
            QuotientTag::CC => MoveKind::CC,
            QuotientTag::WBP => MoveKind::Wbp,
            QuotientTag::SV => MoveKind::SV,
            QuotientTag::Delta2 => MoveKind::Delta,
        }
    }
}

impl From<Tag> for QuotientTag {
    fn from(t: Tag) -> Self {
        match t {
            Tag::V => QuotientTag::V,
            Tag::F => QuotientTag::F,
            Tag::VC => QuotientTag::VC,
            Tag::CC => QuotientTag::CC,
            Tag::WBP => QuotientTag::WBP,
        }
    }
}

impl fmt::Display for QuotientTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown quotient `{0}` (expected V, F, VC, CC, WBP, SV or DELTA_2strand)")]
pub struct UnknownQuotient(pub String);

impl FromStr for QuotientTag {
    type Err = UnknownQuotient;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let want = s.trim().to_ascii_uppercase();
        let want = if want == "DELTA" { "DELTA_2STRAND".to_string() } else { want };
        QuotientTag::ALL
            .into_iter()
            .find(|t| t.name().to_ascii_uppercase() == want)
            .ok_or_else(|| UnknownQuotient(s.to_string()))
    }
}

/// `Unknown` only comes from DELTA_2strand, where equal automorphisms are necessary but
/// not known to be sufficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    Unknown,
}

impl Verdict {
    pub fn from_bool(eq: bool) -> Self {
        if eq {
            Verdict::Equivalent
        } else {
            Verdict::Inequivalent
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::Equivalent => Some(true),
            Verdict::Inequivalent => Some(false),
            Verdict::Unknown => None,
        }
    }

    /// 0 equivalent, 1 inequivalent, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Equivalent => 0,
            Verdict::Inequivalent => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "equivalent",
            Verdict::Inequivalent => "inequivalent",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("expected {expected} diagrams, got {found}")]
    WrongKind { expected: Kind, found: Kind },
    #[error("strand counts differ: {0} and {1}")]
    StrandMismatch(usize, usize),
    #[error("{tag} is decided on {need} strands only, got {got}")]
    StrandCount { tag: QuotientTag, need: usize, got: usize },
    #[error("{0} is not supported by this procedure")]
    UnsupportedTag(QuotientTag),
    #[error("diagram is not in braid form")]
    NotBraid,
    #[error("{0} moves cannot be realised in this quotient")]
    Unrealisable(MoveKind),
    #[error("reduction did not reach the normal form: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Rf(#[from] RfError),
    #[error(transparent)]
    Macro(#[from] MacroError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

fn need(kind: Kind, d: &GaussDiagram) -> Result<(), ClassifyError> {
    if d.kind() == kind {
        Ok(())
    } else {
        Err(ClassifyError::WrongKind { expected: kind, found: d.kind() })
    }
}

fn same_n(d1: &GaussDiagram, d2: &GaussDiagram) -> Result<(), ClassifyError> {
    if d1.n() == d2.n() {
        Ok(())
    } else {
        Err(ClassifyError::StrandMismatch(d1.n(), d2.n()))
    }
}

/// Equivalence of two string links in the quotient `tag`.
pub fn decide(tag: QuotientTag, d1: &GaussDiagram, d2: &GaussDiagram) -> Result<Verdict, ClassifyError> {
    need(Kind::Open, d1)?;
    need(Kind::Open, d2)?;
    same_n(d1, d2)?;
    if let Some(t) = tag.classifier() {
        return Ok(Verdict::from_bool(invariant_for(t, d1) == invariant_for(t, d2)));
    }
    if tag == QuotientTag::Delta2 && d1.n() != 2 {
        return Err(ClassifyError::StrandCount { tag, need: 2, got: d1.n() });
    }
    let eq = aut_equal(&phi_hl(d1)?, &phi_hl(d2)?)?;
    Ok(match (tag, eq) {
        (QuotientTag::SV, e) => Verdict::from_bool(e),
        (_, false) => Verdict::Inequivalent,
        (_, true) => Verdict::Unknown,
    })
}

fn add_block(d: &GaussDiagram, i: usize, j: usize, v: i64) -> GaussDiagram {
    if v == 0 {
        return d.clone();
    }
    let b = GaussDiagram::block(d.n(), i, j, Sign::from_value(v), v.unsigned_abs() as usize);
    d.stack(&b).expect("open diagrams on the same strands")
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// The normal form with a given invariant: blocks `G_{i,j}` stacked in lexicographic
/// order of `(i, j)`. For WBP, one `G^{+1}_{i,j}` per odd pair, then `G^{+1}_{i,n}` and
/// `G^{+1}_{n,i}` for each `i < n` whose row parity is still wrong.
pub fn representative(inv: &QuotientInvariant) -> GaussDiagram {
    let n = inv.n;
    let mut d = GaussDiagram::trivial(n);
    let mut vals = inv.values.iter().copied();
    match inv.tag {
        Tag::V => {}
        Tag::F => {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    d = add_block(&d, i, j, vals.next().expect("dimension"));
                }
            }
        }
        Tag::VC | Tag::CC => {
            for (i, j) in pairs(n) {
                d = add_block(&d, i, j, vals.next().expect("dimension"));
            }
        }
        Tag::WBP => {
            for (i, j) in pairs(n) {
                d = add_block(&d, i, j, vals.next().expect("dimension").rem_euclid(2));
            }
            for i in 1..n {
                let want = vals.next().expect("dimension").rem_euclid(2);
                if vlk(&d).star(i).rem_euclid(2) != want {
                    d = add_block(&d, i, n, 1);
                    d = add_block(&d, n, i, 1);
                }
            }
        }
    }
    d
}

/// The normal form of `d` in the quotient of `tag`.
pub fn normal_form(tag: Tag, d: &GaussDiagram) -> Result<GaussDiagram, ClassifyError> {
    need(Kind::Open, d)?;
    Ok(representative(&invariant_for(tag, d)))
}

fn classifier(tag: QuotientTag) -> Result<Tag, ClassifyError> {
    tag.classifier().filter(|&t| t != Tag::V).ok_or(ClassifyError::UnsupportedTag(tag))
}

/// Equivalence of two links (closed diagrams), read off the linking numbers of the circles.
pub fn decide_closed(tag: QuotientTag, d1: &GaussDiagram, d2: &GaussDiagram) -> Result<bool, ClassifyError> {
    let t = classifier(tag)?;
    need(Kind::Closed, d1)?;
    need(Kind::Closed, d2)?;
    same_n(d1, d2)?;
    Ok(invariant_for(t, d1) == invariant_for(t, d2))
}

/// An orbit representative of the invariant under relabelling of the circles: the
/// lexicographically least vector over all permutations, with the first permutation
/// reaching it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnorderedInvariant {
    pub tag: Tag,
    pub n: usize,
    pub values: Vec<i64>,
    /// 1-based; the representative is the invariant of `vlk.permuted(permutation)`.
    pub permutation: Vec<usize>,
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

pub fn unordered_of_matrix(tag: Tag, m: &VlkMatrix) -> UnorderedInvariant {
    let mut best: Option<(Vec<i64>, Vec<usize>)> = None;
    for p in permutations(m.n()) {
        let v = project(tag, &m.permuted(&p)).values;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, p));
        }
    }
    let (values, permutation) = best.expect("at least one permutation");
    UnorderedInvariant { tag, n: m.n(), values, permutation }
}

pub fn unordered_invariant(tag: Tag, d: &GaussDiagram) -> UnorderedInvariant {
    unordered_of_matrix(tag, &vlk(d))
}

/// Equivalence of links up to relabelling the circles.
pub fn decide_unordered(tag: QuotientTag, d1: &GaussDiagram, d2: &GaussDiagram) -> Result<bool, ClassifyError> {
    let t = classifier(tag)?;
    need(Kind::Closed, d1)?;
    need(Kind::Closed, d2)?;
    same_n(d1, d2)?;
    Ok(unordered_invariant(t, d1).values == unordered_invariant(t, d2).values)
}

/// Pure braids up to CC, through the differences `vlk_ij - vlk_ji`.
pub fn decide_braid_cc(b1: &GaussDiagram, b2: &GaussDiagram) -> Result<bool, ClassifyError> {
    if !b1.is_braid_form() || !b2.is_braid_form() {
        return Err(ClassifyError::NotBraid);
    }
    same_n(b1, b2)?;
    Ok(invariant_for(Tag::CC, b1) == invariant_for(Tag::CC, b2))
}

#[cfg(test)]
mod tests;
