//! Virtual linking numbers, the quotient invariants and pattern counts.

use welded::invariants::{count_pattern, invariant_for, lk, parse_pattern, vlk, Tag};
use welded::toolkit::random_diagram;

fn main() {
    let d = random_diagram(3, 6, 7);
    println!("{d}");
    let m = vlk(&d);
    for i in 1..=3 {
        println!("row {i}: {:?}  star {}", (1..=3).map(|j| m.get(i, j)).collect::<Vec<_>>(), m.star(i));
    }
    for tag in Tag::ALL {
        println!("{}", invariant_for(tag, &d));
    }
    println!("classical: {}", lk(&d).is_ok());
    let p = parse_pattern("wgdp 1\nmap 1 2\nweight sign\nwgd 1\nkind open\nstrands 2\narrows 1\nsign 1 +\nstrand 1: T1\nstrand 2: H1\n").expect("pattern");
    println!("arrows from strand 1 to 2, signed: {} (vlk {})", count_pattern(&d, &p), m.get(1, 2));
}
