#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use welded::classify::QuotientTag;
use welded::{ArrowId, Endpoint, GaussDiagram, Kind, MoveKind, Sign};

/// The quotient's generating move plus R1, R2, R3, OC.
pub fn quotient_moves(tag: QuotientTag) -> Vec<MoveKind> {
    let mut v = MoveKind::REIDEMEISTER.to_vec();
    v.push(tag.generator());
    v
}

/// Gauss diagram of a braid word on `n` strands. Letter `(k, e)` is sigma_k^e: the strands
/// at positions `k` and `k+1` cross, the left one over for `e = +1`, the right one over for
/// `e = -1`, and the crossing has sign `e`. Each crossing is one horizontal level. Panics if
/// the word is not a pure braid.
pub fn braid_diagram(n: usize, word: &[(usize, i8)]) -> GaussDiagram {
    let mut at: Vec<usize> = (1..=n).collect();
    let mut strands = vec![Vec::new(); n];
    let mut signs = BTreeMap::new();
    for (a, &(k, e)) in word.iter().enumerate() {
        let a = a as ArrowId + 1;
        let (l, r) = (at[k - 1], at[k]);
        let (over, under) = if e > 0 { (l, r) } else { (r, l) };
        strands[over - 1].push(Endpoint::tail(a));
        strands[under - 1].push(Endpoint::head(a));
        signs.insert(a, if e > 0 { Sign::Plus } else { Sign::Minus });
        at.swap(k - 1, k);
    }
    assert!(at.iter().enumerate().all(|(p, &s)| p + 1 == s), "not a pure braid");
    GaussDiagram::new(Kind::Open, strands, signs).expect("well-formed")
}

/// A random pure braid: a product of conjugated generators `A_ij^e`, the whole word then
/// conjugated by a random braid.
pub fn random_pure_braid(n: usize, factors: usize, seed: u64) -> GaussDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word = Vec::new();
    if n >= 2 {
        for _ in 0..factors {
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(i + 1..=n);
            let e: i8 = if rng.gen() { 1 } else { -1 };
            // A_ij = s_{j-1} .. s_{i+1} s_i^2 s_{i+1}^-1 .. s_{j-1}^-1
            let conj: Vec<(usize, i8)> = (i + 1..j).rev().map(|k| (k, 1)).collect();
            word.extend(conj.iter().copied());
            word.extend([(i, e), (i, e)]);
            word.extend(conj.iter().rev().map(|&(k, _)| (k, -1)));
        }
    }
    let outer: Vec<(usize, i8)> = if n >= 2 {
        (0..rng.gen_range(0..4)).map(|_| (rng.gen_range(1..n), if rng.gen() { 1 } else { -1 })).collect()
    } else {
        Vec::new()
    };
    let mut full = outer.clone();
    full.extend(word);
    full.extend(outer.iter().rev().map(|&(k, e)| (k, -e)));
    braid_diagram(n, &full)
}
