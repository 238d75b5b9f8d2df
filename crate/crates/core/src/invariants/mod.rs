//! Virtual linking numbers, their per-quotient projections, and Gauss diagram pairings.

mod pattern;

pub use pattern::{count_pattern, parse_pattern, Pattern, PatternError, StrandMap, Weight};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::GaussDiagram;

/// `vlk[i][j]`: signed count of arrows from strand `i` to strand `j`, 1-based accessors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VlkMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl VlkMatrix {
    pub fn zero(n: usize) -> Self {
        VlkMatrix { n, entries: vec![0; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    /// `vlk_{i*}`: sum of row `i`.
    pub fn star(&self, i: usize) -> i64 {
        (1..=self.n).filter(|&k| k != i).map(|k| self.get(i, k)).sum()
    }

    /// Off-diagonal entries in row-major order.
    pub fn off_diagonal(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(self.n * self.n.saturating_sub(1));
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    v.push(self.get(i, j));
                }
            }
        }
        v
    }

    /// The matrix with strands relabelled: entry `(i, j)` becomes `(perm[i], perm[j])`
    /// read from the original, i.e. `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> VlkMatrix {
        let mut out = VlkMatrix::zero(self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                if i != j {
                    out.set(i, j, self.get(perm[i - 1], perm[j - 1]));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &VlkMatrix) -> VlkMatrix {
        assert_eq!(self.n, other.n);
        VlkMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }
}

/// Virtual linking numbers of an open or closed diagram; self-arrows are ignored.
pub fn vlk(d: &GaussDiagram) -> VlkMatrix {
    let mut m = VlkMatrix::zero(d.n());
    for a in d.arrows() {
        if !a.is_self() {
            let (i, j) = (a.tail.strand, a.head.strand);
            m.set(i, j, m.get(i, j) + a.sign.value());
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    V,
    F,
    VC,
    CC,
    WBP,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::V, Tag::F, Tag::VC, Tag::CC, Tag::WBP];

    pub fn name(self) -> &'static str {
        match self {
            Tag::V => "V",
            Tag::F => "F",
            Tag::VC => "VC",
            Tag::CC => "CC",
            Tag::WBP => "WBP",
        }
    }

    /// Length of the invariant vector on `n` strands.
    pub fn dimension(self, n: usize) -> usize {
        let pairs = n * n.saturating_sub(1) / 2;
        match self {
            Tag::V => 0,
            Tag::F => 2 * pairs,
            Tag::VC | Tag::CC => pairs,
            Tag::WBP => pairs + n.saturating_sub(1),
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown invariant tag `{0}` (expected V, F, VC, CC or WBP)")]
pub struct UnknownTag(pub String);

impl FromStr for Tag {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let up = s.trim().to_ascii_uppercase();
        Tag::ALL.into_iter().find(|t| t.name() == up).ok_or_else(|| UnknownTag(s.to_string()))
    }
}

/// A classifying vector. For `WBP` the values are residues mod 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct QuotientInvariant {
    pub tag: Tag,
    pub n: usize,
    pub values: Vec<i64>,
}

impl fmt::Display for QuotientInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "tag={} n={} vlk=[{}]", self.tag, self.n, vals.join(","))
    }
}

/// The projection of a vlk matrix for a tag. Pairs run over `i < j` in lexicographic
/// order; for `WBP` the pair residues are followed by the row residues `i = 1..n-1`.
pub fn project(tag: Tag, m: &VlkMatrix) -> QuotientInvariant {
    let n = m.n();
    let pairs = || (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)));
    let values = match tag {
        Tag::V => Vec::new(),
        Tag::F => m.off_diagonal(),
        Tag::VC => pairs().map(|(i, j)| m.get(i, j) + m.get(j, i)).collect(),
        Tag::CC => pairs().map(|(i, j)| m.get(i, j) - m.get(j, i)).collect(),
        Tag::WBP => pairs()
            .map(|(i, j)| (m.get(i, j) + m.get(j, i)).rem_euclid(2))
            .chain((1..n).map(|i| m.star(i).rem_euclid(2)))
            .collect(),
    };
    QuotientInvariant { tag, n, values }
}

pub fn invariant_for(tag: Tag, d: &GaussDiagram) -> QuotientInvariant {
    project(tag, &vlk(d))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("not classical: vlk_{i}{j} = {ij} but vlk_{j}{i} = {ji}")]
pub struct NotClassical {
    pub i: usize,
    pub j: usize,
    pub ij: i64,
    pub ji: i64,
}

/// Linking numbers of a diagram claimed to be classical. The symmetry of vlk, which
/// every classical diagram satisfies, is checked; the first asymmetric pair is the witness.
pub fn lk(d: &GaussDiagram) -> Result<VlkMatrix, NotClassical> {
    let m = vlk(d);
    for i in 1..=m.n() {
        for j in i + 1..=m.n() {
            let (ij, ji) = (m.get(i, j), m.get(j, i));
            if ij != ji {
                return Err(NotClassical { i, j, ij, ji });
            }
        }
    }
    Ok(m)
}
