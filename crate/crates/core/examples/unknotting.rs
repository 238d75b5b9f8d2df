//! Unknotting a long knot with different sets of moves.

use welded::macros::trivialize_long_knot;
use welded::toolkit::random_diagram;
use welded::{apply_sequence, GaussDiagram, MoveKind};

fn main() {
    let d = random_diagram(1, 5, 2024);
    println!("{d}");
    for set in [MoveKind::SC, MoveKind::Delta, MoveKind::F, MoveKind::VC, MoveKind::CC, MoveKind::Wbp, MoveKind::SV] {
        let seq = trivialize_long_knot(&d, &[set]).expect("unknotting set");
        let done = apply_sequence(&d, &seq).unwrap() == GaussDiagram::trivial(1);
        println!("{set:>6}: {:4} moves, trivial: {done}", seq.len());
    }
    println!("BP alone: {}", trivialize_long_knot(&d, &[MoveKind::Bp]).unwrap_err());
}
