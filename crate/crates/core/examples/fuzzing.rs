//! Random walks checking that the classifiers do not change.

use welded::classify::QuotientTag;
use welded::toolkit::{fuzz_invariance, Corpus, CorpusSpec};
use welded::MoveKind;

fn main() {
    let corpus = Corpus::generate(CorpusSpec { strands: (1, 3), arrows: (0, 6), count: 100, seed: 42 });
    for tag in [QuotientTag::F, QuotientTag::VC, QuotientTag::CC, QuotientTag::WBP, QuotientTag::SV] {
        let mut kinds = MoveKind::REIDEMEISTER.to_vec();
        kinds.push(tag.generator());
        let r = fuzz_invariance(tag, &corpus.diagrams, &kinds, 20, 1).unwrap();
        println!("{tag}: {} moves, {} violations", r.moves, r.violations.len());
    }
    let r = fuzz_invariance(QuotientTag::CC, &corpus.diagrams, &[MoveKind::V], 5, 1).unwrap();
    println!("CC under V: {} violations, e.g.\n{}", r.violations.len(), r.violations[0].trace);
}
