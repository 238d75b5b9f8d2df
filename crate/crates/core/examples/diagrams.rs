//! Parsing, printing, stacking, closing and cutting Gauss diagrams.

use welded::{equal_raw, parse_gauss_code, serialize, GaussDiagram, Sign};

fn main() {
    let d = parse_gauss_code(
        "wgd 1\nkind open\nstrands 2\narrows 2\nsign 1 +\nsign 2 -\nstrand 1: T1 H2\nstrand 2: H1 T2\n",
    )
    .expect("valid diagram");
    println!("{}", serialize(&d));

    let d1 = GaussDiagram::block(2, 1, 2, Sign::Plus, 1);
    let stacked = d.stack(&d1).expect("same strand count");
    println!("stacked with D1: {} arrows, braid form: {}", stacked.arrow_count(), stacked.is_braid_form());

    let closed = d.close().expect("open");
    let cut = closed.open_at(&[2, 0]).expect("cut between endpoints");
    println!("cut after the first endpoint of circle 1:\n{}", serialize(&cut));
    println!("reclosed equals closure: {}", equal_raw(&cut.close().unwrap(), &closed).unwrap());
}
