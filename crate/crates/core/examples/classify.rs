//! Deciding equivalence, normal forms and reduction sequences.

use welded::classify::{decide, normal_form, reduction_sequence, QuotientTag};
use welded::invariants::Tag;
use welded::toolkit::random_diagram;
use welded::{apply_sequence, equal_raw, serialize};

fn main() {
    let (a, b) = (random_diagram(3, 4, 1), random_diagram(3, 4, 2));
    for tag in QuotientTag::ALL {
        match decide(tag, &a, &b) {
            Ok(v) => println!("{tag}: {v}"),
            Err(e) => println!("{tag}: {e}"),
        }
    }
    for tag in [Tag::F, Tag::VC, Tag::CC, Tag::WBP] {
        let nf = normal_form(tag, &a).unwrap();
        let seq = reduction_sequence(tag, &a).unwrap();
        let reached = equal_raw(&apply_sequence(&a, &seq).unwrap(), &nf).unwrap();
        println!("{tag}: normal form with {} arrows, {} moves, reached: {reached}", nf.arrow_count(), seq.len());
    }
    println!("{}", serialize(&normal_form(Tag::WBP, &a).unwrap()));
}
