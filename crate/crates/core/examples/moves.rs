//! Enumerating, applying and undoing local moves; trace files.

use welded::moves::{inverse, MoveSequence};
use welded::{apply, apply_sequence, enumerate, GaussDiagram, MoveKind, Sign};

fn main() {
    let d = GaussDiagram::block(2, 1, 2, Sign::Plus, 2);
    for kind in [MoveKind::F, MoveKind::VC, MoveKind::CC, MoveKind::R2] {
        println!("{kind}: {} sites", enumerate(&d, kind).len());
    }
    let vc = enumerate(&d, MoveKind::VC)[0].clone();
    let after = apply(&d, &vc).expect("enumerated sites apply");
    let back = inverse(&d, &vc).expect("every move has an inverse");
    println!("{vc}\nundone by {back}");

    let seq = MoveSequence::new(d.fingerprint(), vec![vc, back]);
    let text = seq.to_string();
    let parsed: MoveSequence = text.parse().expect("trace round trip");
    println!("{text}replays to start: {}", apply_sequence(&d, &parsed).unwrap() == d);
    println!("VC moved the arrow: {}", after != d);
}
