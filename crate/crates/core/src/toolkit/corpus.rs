use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{serialize, ArrowId, Endpoint, GaussDiagram, Kind, Role, Sign};

use super::random_diagram;

/// Strand and arrow counts are drawn uniformly from the inclusive ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub strands: (usize, usize),
    pub arrows: (usize, usize),
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub spec: CorpusSpec,
    pub diagrams: Vec<GaussDiagram>,
}

impl Corpus {
    pub fn generate(spec: CorpusSpec) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let diagrams = (0..spec.count)
            .map(|_| {
                let n = rng.gen_range(spec.strands.0..=spec.strands.1);
                let m = rng.gen_range(spec.arrows.0..=spec.arrows.1);
                random_diagram(n, m, rng.gen())
            })
            .collect();
        Corpus { spec, diagrams }
    }

    /// All diagrams in the text format, one after the other.
    pub fn to_text(&self) -> String {
        self.diagrams.iter().map(serialize).collect::<Vec<_>>().join("\n")
    }
}

/// Endpoint words of length `2m` with arrows numbered by first occurrence.
fn words(m: usize) -> Vec<Vec<Endpoint>> {
    fn go(m: usize, word: &mut Vec<Endpoint>, open: &mut Vec<Endpoint>, used: usize, out: &mut Vec<Vec<Endpoint>>) {
        if word.len() == 2 * m {
            out.push(word.clone());
            return;
        }
        if used < m {
            let a = used as ArrowId + 1;
            for (first, second) in [(Role::Tail, Role::Head), (Role::Head, Role::Tail)] {
                word.push(Endpoint { arrow: a, role: first });
                open.push(Endpoint { arrow: a, role: second });
                go(m, word, open, used + 1, out);
                open.pop();
                word.pop();
            }
        }
        for k in 0..open.len() {
            let e = open.remove(k);
            word.push(e);
            go(m, word, open, used, out);
            word.pop();
            open.insert(k, e);
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut Vec::new(), 0, &mut out);
    out
}

/// Ways to write `total` as an ordered sum of `n` non-negative parts.
fn compositions(total: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, n - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every open diagram on `n` strands with exactly `m` arrows, once per class up to
/// renaming of arrows. Each is produced already in canonical form.
pub fn exhaustive(n: usize, m: usize) -> Vec<GaussDiagram> {
    let mut out = Vec::new();
    for word in words(m) {
        for comp in compositions(2 * m, n) {
            let mut strands = Vec::with_capacity(n);
            let mut rest = &word[..];
            for &len in &comp {
                strands.push(rest[..len].to_vec());
                rest = &rest[len..];
            }
            for mask in 0..1u32 << m {
                let signs: BTreeMap<ArrowId, Sign> = (0..m as u32)
                    .map(|k| (k + 1, if mask >> k & 1 == 0 { Sign::Plus } else { Sign::Minus }))
                    .collect();
                out.push(GaussDiagram::new(Kind::Open, strands.clone(), signs).expect("well-formed by construction"));
            }
        }
    }
    out
}

/// `exhaustive(n, m)` for `m = 0..=max_arrows`.
pub fn exhaustive_up_to(n: usize, max_arrows: usize) -> Vec<GaussDiagram> {
    (0..=max_arrows).flat_map(|m| exhaustive(n, m)).collect()
}
