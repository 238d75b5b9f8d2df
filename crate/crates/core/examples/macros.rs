//! Expanding derived moves into their generating moves.

use welded::macros::{expand, verify, DerivedMoveKind};
use welded::{enumerate, parse_gauss_code};

fn main() {
    let d = parse_gauss_code(
        "wgd 1\nkind open\nstrands 3\narrows 3\nsign 1 +\nsign 2 -\nsign 3 +\nstrand 1: T1 H2\nstrand 2: H1 T3\nstrand 3: T2 H3\n",
    )
    .unwrap();
    for kind in [DerivedMoveKind::FFromVc, DerivedMoveKind::FFromCc, DerivedMoveKind::UcFromF, DerivedMoveKind::SrFromWbp] {
        let Some(site) = enumerate(&d, kind.target()).into_iter().next() else { continue };
        let seq = expand(kind, &d, &site).expect("constructive");
        println!("{kind}: {} moves, verified: {}", seq.len(), verify(&d, kind, &site));
        print!("{seq}");
    }
}
