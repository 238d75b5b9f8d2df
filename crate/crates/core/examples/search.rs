//! Bounded breadth-first search between diagrams.

use welded::classify::{normal_form, QuotientTag};
use welded::invariants::Tag;
use welded::toolkit::{bfs_search, random_diagram, SearchBudget, SearchOutcome};
use welded::MoveKind;

fn main() {
    let d = random_diagram(2, 3, 5);
    let nf = normal_form(Tag::F, &d).unwrap();
    let mut kinds = MoveKind::REIDEMEISTER.to_vec();
    kinds.push(QuotientTag::F.generator());
    let budget = SearchBudget::new(10, 5, 200_000, 0).unwrap();
    match bfs_search(&d, &nf, &kinds, &budget).unwrap() {
        SearchOutcome::Found(seq) => print!("shortest path to the F normal form, {} moves:\n{seq}", seq.len()),
        SearchOutcome::Unknown(stop) => println!("unknown: {stop:?}"),
    }
    let tiny = SearchBudget::new(1, 5, 1000, 0).unwrap();
    println!("{:?}", bfs_search(&d, &welded::GaussDiagram::trivial(2), &kinds, &tiny).unwrap());
}
