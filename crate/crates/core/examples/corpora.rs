//! Reproducible random corpora and exhaustive enumeration.

use welded::toolkit::{exhaustive, exhaustive_up_to, Corpus, CorpusSpec};

fn main() {
    let spec = CorpusSpec { strands: (2, 3), arrows: (1, 4), count: 3, seed: 9 };
    let corpus = Corpus::generate(spec);
    println!("{}", corpus.to_text());
    println!("regenerates identically: {}", Corpus::generate(spec).to_text() == corpus.to_text());
    for m in 0..=4 {
        println!("long knots with {m} arrows: {}", exhaustive(1, m).len());
    }
    println!("2-strand diagrams with at most 3 arrows: {}", exhaustive_up_to(2, 3).len());
}
