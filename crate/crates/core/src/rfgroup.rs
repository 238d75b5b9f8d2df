//! The reduced free group: words, a faithful normal form via the repeat-free Magnus
//! expansion, and the conjugating automorphism attached to a string link diagram.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{GaussDiagram, Role};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RfError {
    #[error("expected an open diagram")]
    ClosedInput,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("bad word: {0}")]
    BadWord(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A word in `x_1, ..., x_n` and their inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RFWord(pub Vec<Letter>);

impl RFWord {
    pub fn x(i: usize) -> RFWord {
        RFWord(vec![Letter { generator: i, inverse: false }])
    }

    pub fn inverse(&self) -> RFWord {
        RFWord(self.0.iter().rev().map(|l| Letter { generator: l.generator, inverse: !l.inverse }).collect())
    }

    pub fn concat(&self, other: &RFWord) -> RFWord {
        RFWord([self.0.clone(), other.0.clone()].concat())
    }

    /// `g w g^-1`
    pub fn conjugated_by(&self, g: &RFWord) -> RFWord {
        g.concat(self).concat(&g.inverse())
    }

    /// `[a, b] = a b a^-1 b^-1`
    pub fn commutator(a: &RFWord, b: &RFWord) -> RFWord {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|l| l.generator).max().unwrap_or(0)
    }
}

impl fmt::Display for RFWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverse { format!("x{}^-1", l.generator) } else { format!("x{}", l.generator) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for RFWord {
    type Err = RfError;

    /// Space-separated letters `x3` and `x3^-1`; `1` or the empty string is the identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, inverse) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let generator: usize = body
                .strip_prefix('x')
                .and_then(|g| g.parse().ok())
                .filter(|&g| g > 0)
                .ok_or_else(|| RfError::BadWord(tok.to_string()))?;
            out.push(Letter { generator, inverse });
        }
        Ok(RFWord(out))
    }
}

type Monomial = Vec<u8>;

fn mask(m: &[u8]) -> u64 {
    m.iter().fold(0, |acc, &i| acc | 1 << i)
}

/// An element of the truncated algebra `Z<X_1..X_n>` modulo monomials with a repeated
/// index. Group elements have constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RFElement {
    terms: BTreeMap<Monomial, i64>,
}

impl RFElement {
    pub fn one() -> Self {
        RFElement { terms: [(Vec::new(), 1)].into() }
    }

    pub fn zero() -> Self {
        RFElement { terms: BTreeMap::new() }
    }

    /// `x_i` or `x_i^-1`, i.e. `1 + X_i` or `1 - X_i` (higher powers vanish).
    pub fn letter(l: Letter) -> Self {
        let c = if l.inverse { -1 } else { 1 };
        RFElement { terms: [(Vec::new(), 1), (vec![l.generator as u8], c)].into() }
    }

    pub fn coefficient(&self, monomial: &[usize]) -> i64 {
        let key: Monomial = monomial.iter().map(|&i| i as u8).collect();
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m.iter().map(|&i| i as usize).collect(), c))
    }

    pub fn is_one(&self) -> bool {
        *self == RFElement::one()
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &RFElement) -> RFElement {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> RFElement {
        let mut out = RFElement::zero();
        for (m, &c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &RFElement) -> RFElement {
        let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
        let right: Vec<(&Monomial, i64, u64)> = other.terms.iter().map(|(m, &c)| (m, c, mask(m))).collect();
        for (ma, &ca) in &self.terms {
            let ka = mask(ma);
            for &(mb, cb, kb) in &right {
                if ka & kb != 0 {
                    continue;
                }
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                *acc.entry(m).or_insert(0) += ca * cb;
            }
        }
        acc.retain(|_, c| *c != 0);
        RFElement { terms: acc }
    }

    fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// Inverse of an element with constant term 1: `sum_k (-a)^k` with `a = self - 1`.
    pub fn inverse(&self) -> RFElement {
        assert_eq!(self.terms.get(&Vec::new()).copied(), Some(1), "only units with constant term 1");
        let a = self.add(&RFElement::one().scale(-1)).scale(-1);
        let mut out = RFElement::one();
        let mut power = RFElement::one();
        loop {
            power = power.mul(&a);
            if power.terms.is_empty() {
                break;
            }
            out = out.add(&power);
        }
        out
    }

    pub fn pow_sign(&self, inverse: bool) -> RFElement {
        if inverse {
            self.inverse()
        } else {
            self.clone()
        }
    }

    /// `g w g^-1`
    pub fn conjugate(&self, g: &RFElement) -> RFElement {
        g.mul(self).mul(&g.inverse())
    }

    /// Image under the algebra map sending `x_k` to `images[k-1]`.
    pub fn substitute(&self, images: &[RFElement]) -> RFElement {
        let var: Vec<RFElement> = images.iter().map(|g| g.add(&RFElement::one().scale(-1))).collect();
        let mut out = RFElement::zero();
        for (m, &c) in &self.terms {
            let mut t = RFElement::one();
            for &i in m {
                t = t.mul(&var[i as usize - 1]);
                if t.terms.is_empty() {
                    break;
                }
            }
            out = out.add(&t.scale(c));
        }
        out
    }
}

impl fmt::Display for RFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Magnus polynomial in X_i = x_i - 1, e.g. `1 - X1X2 + 2X2`.
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mono: String = m.iter().map(|i| format!("X{i}")).collect();
            let (neg, abs) = (*c < 0, c.unsigned_abs());
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if abs != 1 || mono.is_empty() {
                write!(f, "{abs}")?;
            }
            f.write_str(&mono)?;
        }
        Ok(())
    }
}

pub fn expand(w: &RFWord) -> RFElement {
    w.0.iter().fold(RFElement::one(), |acc, &l| acc.mul(&RFElement::letter(l)))
}

pub fn rf_equal(w1: &RFWord, w2: &RFWord) -> bool {
    expand(w1) == expand(w2)
}

/// An automorphism `x_i -> l_i x_i l_i^-1` of the reduced free group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyAutomorphism {
    pub n: usize,
    pub longitudes: Vec<RFElement>,
}

impl ConjugacyAutomorphism {
    pub fn identity(n: usize) -> Self {
        ConjugacyAutomorphism { n, longitudes: vec![RFElement::one(); n] }
    }

    pub fn generator(i: usize) -> RFElement {
        RFElement::letter(Letter { generator: i, inverse: false })
    }

    /// Expanded image of `x_i`.
    pub fn image(&self, i: usize) -> RFElement {
        ConjugacyAutomorphism::generator(i).conjugate(&self.longitudes[i - 1])
    }

    pub fn images(&self) -> Vec<RFElement> {
        (1..=self.n).map(|i| self.image(i)).collect()
    }
}

/// `a1` followed by `a2` along the strands: longitudes `a1(l2_i) * l1_i`.
pub fn compose(a1: &ConjugacyAutomorphism, a2: &ConjugacyAutomorphism) -> Result<ConjugacyAutomorphism, RfError> {
    if a1.n != a2.n {
        return Err(RfError::StrandMismatch(a1.n, a2.n));
    }
    let images = a1.images();
    let longitudes = a2
        .longitudes
        .iter()
        .zip(&a1.longitudes)
        .map(|(l2, l1)| l2.substitute(&images).mul(l1))
        .collect();
    Ok(ConjugacyAutomorphism { n: a1.n, longitudes })
}

/// Compares the actions on the generators, not the conjugators.
pub fn aut_equal(a1: &ConjugacyAutomorphism, a2: &ConjugacyAutomorphism) -> Result<bool, RfError> {
    if a1.n != a2.n {
        return Err(RfError::StrandMismatch(a1.n, a2.n));
    }
    Ok((1..=a1.n).all(|i| a1.image(i) == a2.image(i)))
}

/// The automorphism of a string link diagram, read from Wirtinger-style arc labels.
///
/// Walking down strand `i`, the arc label is `l x_i l^-1` with `l` starting at 1; passing
/// the head of an arrow from strand `j` with sign `e` replaces `l` by `w^e l`, where `w` is
/// the label of strand `j` at the arrow's tail. The labels depend on each other, so they
/// are recomputed until stable; the truncation makes this terminate after at most `n + 1`
/// rounds.
pub fn phi_hl(d: &GaussDiagram) -> Result<ConjugacyAutomorphism, RfError> {
    if !d.is_open() {
        return Err(RfError::ClosedInput);
    }
    let n = d.n();
    let arrows: BTreeMap<_, _> = d.arrows().into_iter().map(|a| (a.id, a)).collect();
    let mut partial: Vec<Vec<RFElement>> = (1..=n).map(|i| vec![RFElement::one(); d.strand_len(i) + 1]).collect();
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut next = partial.clone();
        for i in 1..=n {
            let mut cur = RFElement::one();
            for (p, e) in d.strand(i).iter().enumerate() {
                next[i - 1][p] = cur.clone();
                if e.role == Role::Head {
                    let a = arrows[&e.arrow];
                    let lt = &partial[a.tail.strand - 1][a.tail.pos];
                    let w = ConjugacyAutomorphism::generator(a.tail.strand).conjugate(lt);
                    cur = w.pow_sign(a.sign.value() < 0).mul(&cur);
                }
            }
            let len = d.strand_len(i);
            next[i - 1][len] = cur;
        }
        if next == partial {
            break;
        }
        assert!(rounds <= n + 2, "longitudes failed to stabilise after {rounds} rounds");
        partial = next;
    }
    let longitudes = partial.into_iter().map(|mut v| v.pop().expect("final label")).collect();
    Ok(ConjugacyAutomorphism { n, longitudes })
}

/// Highest degree present in any longitude; bounded by `n - 1` for non-self contributions.
pub fn max_degree(a: &ConjugacyAutomorphism) -> usize {
    a.longitudes.iter().map(|l| l.degree()).max().unwrap_or(0)
}
