use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{ArrowId, Endpoint, GaussDiagram, Kind, Sign};

/// Arrows with uniformly random ends and signs.
pub(crate) fn scatter(seed: u64, n: usize, m: usize, closed: bool) -> GaussDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut strands = vec![Vec::new(); n];
    let mut signs = BTreeMap::new();
    for a in 1..=m as ArrowId {
        strands[rng.gen_range(0..n)].push(Endpoint::tail(a));
        strands[rng.gen_range(0..n)].push(Endpoint::head(a));
        signs.insert(a, if rng.gen() { Sign::Plus } else { Sign::Minus });
    }
    for s in &mut strands {
        s.shuffle(&mut rng);
    }
    let kind = if closed { Kind::Closed } else { Kind::Open };
    GaussDiagram::new(kind, strands, signs).unwrap()
}
