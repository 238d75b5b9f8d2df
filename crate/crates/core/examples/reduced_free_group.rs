//! The automorphism of the reduced free group attached to a string link.

use welded::invariants::{invariant_for, Tag};
use welded::rfgroup::{aut_equal, compose, expand, phi_hl, RFWord};
use welded::parse_gauss_code;

fn main() {
    let a = parse_gauss_code(
        "wgd 1\nkind open\nstrands 3\narrows 3\nsign 1 -\nsign 2 -\nsign 3 -\nstrand 1: T1 H2\nstrand 2: T2 T3\nstrand 3: H3 H1\n",
    )
    .unwrap();
    let b = parse_gauss_code(
        "wgd 1\nkind open\nstrands 3\narrows 3\nsign 1 -\nsign 2 -\nsign 3 -\nstrand 1: T1 H2\nstrand 2: T2 T3\nstrand 3: H1 H3\n",
    )
    .unwrap();
    let (pa, pb) = (phi_hl(&a).unwrap(), phi_hl(&b).unwrap());
    for (i, (la, lb)) in pa.longitudes.iter().zip(&pb.longitudes).enumerate() {
        println!("l{}: {la}   vs   {lb}", i + 1);
    }
    println!("same F-invariant: {}", invariant_for(Tag::F, &a) == invariant_for(Tag::F, &b));
    println!("same automorphism: {}", aut_equal(&pa, &pb).unwrap());
    let ab = compose(&pa, &pb).unwrap();
    println!("phi(a) then phi(b) equals phi(a b): {}", aut_equal(&ab, &phi_hl(&a.stack(&b).unwrap()).unwrap()).unwrap());

    let w: RFWord = "x1 x2 x1^-1 x1 x2^-1 x1^-1".parse().unwrap();
    println!("{w} expands to {}", expand(&w));
}
