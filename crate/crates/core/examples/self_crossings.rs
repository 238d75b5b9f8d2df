//! Changing a self-crossing with DELTA moves, by induction on its width.

use welded::macros::{expand_sc_via_delta, width, ScExpansion};
use welded::parse_gauss_code;

fn main() {
    let d = parse_gauss_code(
        "wgd 1\nkind open\nstrands 1\narrows 3\nsign 1 +\nsign 2 -\nsign 3 +\nstrand 1: T1 H2 T3 H3 T2 H1\n",
    )
    .unwrap();
    for a in d.arrows() {
        let x = expand_sc_via_delta(&d, a.id).expect("self-arrow");
        println!(
            "arrow {}: width {}, {} moves, depth {} (bound {})",
            a.id,
            width(&d, a.id),
            x.sequence.len(),
            x.depth,
            ScExpansion::depth_bound(x.width)
        );
    }
}
