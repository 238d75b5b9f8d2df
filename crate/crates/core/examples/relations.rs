//! Which local moves generate which.

use welded::macros::RelationTable;
use welded::MoveKind;

fn main() {
    let t = RelationTable::standard();
    for r in &t.relations {
        println!("{:?}", r);
    }
    for from in [MoveKind::Wbp, MoveKind::F, MoveKind::VC, MoveKind::Delta, MoveKind::Bp] {
        println!("{from} generates SC: {}", t.generates(from, MoveKind::SC));
    }
}
