//! Gauss diagrams over ordered, oriented strands (intervals or circles).

mod canon;
mod wgd;

pub use canon::{canonical, Relabel};
pub use wgd::{parse_gauss_code, serialize, ParseError};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub type ArrowId = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Role {
    Tail,
    Head,
}

impl Role {
    pub fn other(self) -> Role {
        match self {
            Role::Tail => Role::Head,
            Role::Head => Role::Tail,
        }
    }
}

/// One arrow end as it sits on a strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub arrow: ArrowId,
    pub role: Role,
}

impl Endpoint {
    pub fn tail(arrow: ArrowId) -> Self {
        Endpoint { arrow, role: Role::Tail }
    }

    pub fn head(arrow: ArrowId) -> Self {
        Endpoint { arrow, role: Role::Head }
    }

    pub fn is_tail(self) -> bool {
        self.role == Role::Tail
    }

    pub fn is_head(self) -> bool {
        self.role == Role::Head
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.role {
            Role::Tail => write!(f, "T{}", self.arrow),
            Role::Head => write!(f, "H{}", self.arrow),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    Open,
    Closed,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Open => "open",
            Kind::Closed => "closed",
        })
    }
}

/// Position of an endpoint: strand is 1-based, pos is 0-based along the strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slot {
    pub strand: usize,
    pub pos: usize,
}

impl Slot {
    pub fn new(strand: usize, pos: usize) -> Self {
        Slot { strand, pos }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub id: ArrowId,
    pub tail: Slot,
    pub head: Slot,
    pub sign: Sign,
}

impl Arrow {
    pub fn is_self(&self) -> bool {
        self.tail.strand == self.head.strand
    }

    pub fn slot(&self, role: Role) -> Slot {
        match role {
            Role::Tail => self.tail,
            Role::Head => self.head,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("a diagram needs at least one strand")]
    NoStrands,
    #[error("arrow {0} has {1} tails")]
    TailCount(ArrowId, usize),
    #[error("arrow {0} has {1} heads")]
    HeadCount(ArrowId, usize),
    #[error("arrow {0} has no sign")]
    MissingSign(ArrowId),
    #[error("sign given for arrow {0}, which has no endpoints")]
    UnusedSign(ArrowId),
    #[error("strand {0} out of range 1..={1}")]
    StrandOutOfRange(usize, usize),
    #[error("expected a {0} diagram")]
    WrongKind(Kind),
    #[error("diagrams are not comparable: {0}")]
    Incomparable(String),
    #[error("expected {expected} cuts, got {got}")]
    CutCount { expected: usize, got: usize },
    #[error("cut {cut} on circle {circle} lies on an endpoint")]
    CutOnEndpoint { circle: usize, cut: usize },
    #[error("cut {cut} on circle {circle} is out of range")]
    CutOutOfRange { circle: usize, cut: usize },
    #[error("arrow {0} not found")]
    UnknownArrow(ArrowId),
}

/// A Gauss diagram: `n` strands, each an ordered list of arrow endpoints, plus arrow signs.
///
/// Arrow ids are opaque; `==` compares raw data including ids and basepoints,
/// [`equal_raw`] compares up to renaming (and rotation of circles).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaussDiagram {
    kind: Kind,
    strands: Vec<Vec<Endpoint>>,
    signs: BTreeMap<ArrowId, Sign>,
}

impl GaussDiagram {
    pub fn new(
        kind: Kind,
        strands: Vec<Vec<Endpoint>>,
        signs: BTreeMap<ArrowId, Sign>,
    ) -> Result<Self, DiagramError> {
        let d = GaussDiagram { kind, strands, signs };
        d.validate()?;
        Ok(d)
    }


    pub fn trivial(n: usize) -> Self {
        GaussDiagram { kind: Kind::Open, strands: vec![Vec::new(); n], signs: BTreeMap::new() }
    }

    /// `k` parallel arrows of sign `sign` from strand `i` to strand `j` (the block G^{±k}_{i,j}).
    pub fn block(n: usize, i: usize, j: usize, sign: Sign, k: usize) -> Self {
        assert!(i >= 1 && j >= 1 && i <= n && j <= n && i != j);
        let mut d = GaussDiagram::trivial(n);
        for a in 1..=k as ArrowId {
            d.strands[i - 1].push(Endpoint::tail(a));
            d.strands[j - 1].push(Endpoint::head(a));
            d.signs.insert(a, sign);
        }
        d
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        if self.strands.is_empty() {
            return Err(DiagramError::NoStrands);
        }
        let mut counts: BTreeMap<ArrowId, (usize, usize)> = BTreeMap::new();
        for e in self.strands.iter().flatten() {
            let c = counts.entry(e.arrow).or_default();
            match e.role {
                Role::Tail => c.0 += 1,
                Role::Head => c.1 += 1,
            }
        }
        for (&id, &(t, h)) in &counts {
            if t != 1 {
                return Err(DiagramError::TailCount(id, t));
            }
            if h != 1 {
                return Err(DiagramError::HeadCount(id, h));
            }
            if !self.signs.contains_key(&id) {
                return Err(DiagramError::MissingSign(id));
            }
        }
        if let Some(&id) = self.signs.keys().find(|id| !counts.contains_key(id)) {
            return Err(DiagramError::UnusedSign(id));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.strands.len()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_open(&self) -> bool {
        self.kind == Kind::Open
    }

    pub fn is_closed(&self) -> bool {
        self.kind == Kind::Closed
    }

    /// Endpoints of strand `i` (1-based).
    pub fn strand(&self, i: usize) -> &[Endpoint] {
        &self.strands[i - 1]
    }

    pub fn strands(&self) -> &[Vec<Endpoint>] {
        &self.strands
    }

    pub(crate) fn strands_mut(&mut self) -> &mut Vec<Vec<Endpoint>> {
        &mut self.strands
    }

    pub(crate) fn signs_mut(&mut self) -> &mut BTreeMap<ArrowId, Sign> {
        &mut self.signs
    }

    pub fn strand_len(&self, i: usize) -> usize {
        self.strands[i - 1].len()
    }

    pub fn signs(&self) -> &BTreeMap<ArrowId, Sign> {
        &self.signs
    }

    pub fn arrow_count(&self) -> usize {
        self.signs.len()
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        self.signs.keys().copied()
    }

    pub fn sign(&self, id: ArrowId) -> Option<Sign> {
        self.signs.get(&id).copied()
    }

    pub fn has_arrow(&self, id: ArrowId) -> bool {
        self.signs.contains_key(&id)
    }

    pub fn endpoint(&self, s: Slot) -> Endpoint {
        self.strands[s.strand - 1][s.pos]
    }

    pub fn get_endpoint(&self, s: Slot) -> Option<Endpoint> {
        self.strands.get(s.strand.wrapping_sub(1))?.get(s.pos).copied()
    }

    /// Smallest id strictly larger than every id in use.
    pub fn fresh_id(&self) -> ArrowId {
        self.signs.keys().next_back().map_or(1, |m| m + 1)
    }

    pub fn slot_of(&self, e: Endpoint) -> Option<Slot> {
        for (si, s) in self.strands.iter().enumerate() {
            if let Some(p) = s.iter().position(|x| *x == e) {
                return Some(Slot::new(si + 1, p));
            }
        }
        None
    }

    pub fn arrow(&self, id: ArrowId) -> Option<Arrow> {
        let sign = self.sign(id)?;
        Some(Arrow {
            id,
            tail: self.slot_of(Endpoint::tail(id))?,
            head: self.slot_of(Endpoint::head(id))?,
            sign,
        })
    }

    /// All arrows, sorted by id.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut loc: BTreeMap<ArrowId, (Option<Slot>, Option<Slot>)> = BTreeMap::new();
        for (si, s) in self.strands.iter().enumerate() {
            for (p, e) in s.iter().enumerate() {
                let entry = loc.entry(e.arrow).or_default();
                match e.role {
                    Role::Tail => entry.0 = Some(Slot::new(si + 1, p)),
                    Role::Head => entry.1 = Some(Slot::new(si + 1, p)),
                }
            }
        }
        loc.into_iter()
            .map(|(id, (t, h))| Arrow {
                id,
                tail: t.expect("validated"),
                head: h.expect("validated"),
                sign: self.signs[&id],
            })
            .collect()
    }

    /// Position following `pos` on strand `i`; wraps around on circles.
    pub fn next_pos(&self, i: usize, pos: usize) -> Option<usize> {
        let len = self.strand_len(i);
        match self.kind {
            Kind::Open => (pos + 1 < len).then_some(pos + 1),
            Kind::Closed => (len >= 2).then_some((pos + 1) % len),
        }
    }

    pub fn prev_pos(&self, i: usize, pos: usize) -> Option<usize> {
        let len = self.strand_len(i);
        match self.kind {
            Kind::Open => pos.checked_sub(1),
            Kind::Closed => (len >= 2).then_some((pos + len - 1) % len),
        }
    }

    /// True if `b` immediately follows `a` on the same strand.
    pub fn follows(&self, a: Slot, b: Slot) -> bool {
        a.strand == b.strand && self.next_pos(a.strand, a.pos) == Some(b.pos) && a.pos != b.pos
    }

    pub fn stack(&self, other: &GaussDiagram) -> Result<GaussDiagram, DiagramError> {
        if !self.is_open() || !other.is_open() {
            return Err(DiagramError::WrongKind(Kind::Open));
        }
        if self.n() != other.n() {
            return Err(DiagramError::Incomparable(format!(
                "strand counts {} and {}",
                self.n(),
                other.n()
            )));
        }
        let shift = self.fresh_id() - 1;
        let mut out = self.clone();
        for (i, s) in other.strands.iter().enumerate() {
            out.strands[i].extend(s.iter().map(|e| Endpoint { arrow: e.arrow + shift, role: e.role }));
        }
        for (&id, &sg) in &other.signs {
            out.signs.insert(id + shift, sg);
        }
        Ok(out)
    }

    /// Joins the two ends of every strand; basepoints sit at the former starts.
    pub fn close(&self) -> Result<GaussDiagram, DiagramError> {
        if !self.is_open() {
            return Err(DiagramError::WrongKind(Kind::Open));
        }
        let mut out = self.clone();
        out.kind = Kind::Closed;
        Ok(out)
    }

    /// Cuts each circle. Cut positions are in half-slot units: `2g` is the gap before
    /// slot `g`, odd values sit on an endpoint and are rejected.
    pub fn open_at(&self, cuts: &[usize]) -> Result<GaussDiagram, DiagramError> {
        if !self.is_closed() {
            return Err(DiagramError::WrongKind(Kind::Closed));
        }
        if cuts.len() != self.n() {
            return Err(DiagramError::CutCount { expected: self.n(), got: cuts.len() });
        }
        let mut out = self.clone();
        out.kind = Kind::Open;
        for (i, &c) in cuts.iter().enumerate() {
            let len = self.strands[i].len();
            if c % 2 == 1 {
                return Err(DiagramError::CutOnEndpoint { circle: i + 1, cut: c });
            }
            let g = c / 2;
            if g > len {
                return Err(DiagramError::CutOutOfRange { circle: i + 1, cut: c });
            }
            if len > 0 {
                out.strands[i].rotate_left(g % len);
            }
        }
        Ok(out)
    }

    /// Rotates every circle so that the given slot becomes the basepoint.
    pub fn rotate(&self, rotations: &[usize]) -> GaussDiagram {
        assert!(self.is_closed() && rotations.len() == self.n());
        let mut out = self.clone();
        for (s, &r) in out.strands.iter_mut().zip(rotations) {
            let len = s.len();
            if len > 0 {
                s.rotate_left(r % len);
            }
        }
        out
    }

    /// True for open diagrams without self-arrows whose arrows can be put at distinct heights.
    pub fn is_braid_form(&self) -> bool {
        if !self.is_open() {
            return false;
        }
        let arrows = self.arrows();
        if arrows.iter().any(Arrow::is_self) {
            return false;
        }
        let index: BTreeMap<ArrowId, usize> =
            arrows.iter().enumerate().map(|(k, a)| (a.id, k)).collect();
        let m = arrows.len();
        let mut succ = vec![Vec::new(); m];
        let mut indeg = vec![0usize; m];
        for s in &self.strands {
            for w in s.windows(2) {
                let (a, b) = (index[&w[0].arrow], index[&w[1].arrow]);
                succ[a].push(b);
                indeg[b] += 1;
            }
        }
        let mut ready: Vec<usize> = (0..m).filter(|&k| indeg[k] == 0).collect();
        let mut seen = 0;
        while let Some(k) = ready.pop() {
            seen += 1;
            for &b in &succ[k] {
                indeg[b] -= 1;
                if indeg[b] == 0 {
                    ready.push(b);
                }
            }
        }
        seen == m
    }

    /// Renames arrows; ids not in the map keep their value.
    pub fn rename(&self, map: &BTreeMap<ArrowId, ArrowId>) -> GaussDiagram {
        let f = |a: ArrowId| map.get(&a).copied().unwrap_or(a);
        GaussDiagram {
            kind: self.kind,
            strands: self
                .strands
                .iter()
                .map(|s| s.iter().map(|e| Endpoint { arrow: f(e.arrow), role: e.role }).collect())
                .collect(),
            signs: self.signs.iter().map(|(&id, &s)| (f(id), s)).collect(),
        }
    }

    /// Relabels strands: strand `i` of the result is strand `perm[i-1]` of `self`.
    pub fn permute_strands(&self, perm: &[usize]) -> GaussDiagram {
        assert_eq!(perm.len(), self.n());
        GaussDiagram {
            kind: self.kind,
            strands: perm.iter().map(|&p| self.strands[p - 1].clone()).collect(),
            signs: self.signs.clone(),
        }
    }

    /// Hash of the raw data (ids and basepoints included); identifies a trace's start.
    pub fn fingerprint(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.kind.to_string().as_bytes());
        for s in &self.strands {
            h.update(b"|");
            for e in s {
                h.update(e.to_string().as_bytes());
                h.update(b" ");
            }
        }
        for (id, s) in &self.signs {
            h.update(format!(";{id}{s}").as_bytes());
        }
        h.finalize().iter().take(16).map(|b| format!("{b:02x}")).collect()
    }
}

/// Equality up to arrow renaming and, for circles, rotation of each basepoint.
pub fn equal_raw(d1: &GaussDiagram, d2: &GaussDiagram) -> Result<bool, DiagramError> {
    if d1.n() != d2.n() || d1.kind() != d2.kind() {
        return Err(DiagramError::Incomparable(format!(
            "{} {} strands vs {} {} strands",
            d1.kind(),
            d1.n(),
            d2.kind(),
            d2.n()
        )));
    }
    if d1.arrow_count() != d2.arrow_count()
        || d1.strands.iter().zip(&d2.strands).any(|(a, b)| a.len() != b.len())
    {
        return Ok(false);
    }
    Ok(canonical(d1).0 == canonical(d2).0)
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}
