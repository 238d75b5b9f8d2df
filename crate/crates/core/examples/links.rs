//! Closed diagrams, unordered components and braids.

use welded::classify::{decide_braid_cc, decide_closed, decide_unordered, unordered_invariant, QuotientTag};
use welded::invariants::Tag;
use welded::toolkit::random_diagram;

fn main() {
    let d = random_diagram(3, 5, 11);
    let c = d.close().unwrap();
    let turned = c.rotate(&[1, 2, 0]);
    println!("closure equals a rotated closure (VC): {}", decide_closed(QuotientTag::VC, &c, &turned).unwrap());
    let swapped = d.permute_strands(&[3, 1, 2]);
    println!("{:?}", unordered_invariant(Tag::CC, &d));
    println!("same up to reordering strands (CC): {}", decide_unordered(QuotientTag::CC, &c, &swapped.close().unwrap()).unwrap());
    let braid = welded::GaussDiagram::block(2, 1, 2, welded::Sign::Plus, 1);
    let b2 = braid.stack(&welded::GaussDiagram::block(2, 2, 1, welded::Sign::Plus, 1)).unwrap();
    println!("pure braid sigma^2 vs trivial, up to CC: {}", decide_braid_cc(&b2, &welded::GaussDiagram::trivial(2)).unwrap());
}
