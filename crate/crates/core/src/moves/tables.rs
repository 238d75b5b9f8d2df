//! Sign conditions of the multi-arrow moves, as lookup tables.
//!
//! Orders are the per-portion reading directions: `+1` when, along the strand, the
//! endpoint meeting the lower-labelled other portion comes first. Each table maps an
//! order tuple to the admissible sign tuple with the first sign normalised to `+1`;
//! the negated tuple is admissible as well.

/// Stacked triangle (top over mid over bottom). Arrows x: top->mid, y: top->bot,
/// z: mid->bot. Key: (o_top, o_mid, o_bot); value: (s_x, s_y, s_z).
pub const STACKED: [([i8; 3], [i8; 3]); 8] = [
    ([1, 1, 1], [1, 1, 1]),
    ([1, 1, -1], [1, -1, -1]),
    ([1, -1, 1], [1, -1, 1]),
    ([1, -1, -1], [1, 1, -1]),
    ([-1, 1, 1], [1, 1, -1]),
    ([-1, 1, -1], [1, -1, 1]),
    ([-1, -1, 1], [1, -1, -1]),
    ([-1, -1, -1], [1, 1, 1]),
];

/// Cyclic triangle (portion 0 over 1 over 2 over 0). Arrows x: 0->1, y: 2->0, z: 1->2.
/// Key: (o_0, o_1, o_2); value: (s_x, s_y, s_z).
pub const CYCLIC: [([i8; 3], [i8; 3]); 8] = [
    ([1, 1, 1], [1, -1, 1]),
    ([1, 1, -1], [1, 1, -1]),
    ([1, -1, 1], [1, 1, 1]),
    ([1, -1, -1], [1, -1, -1]),
    ([-1, 1, 1], [1, -1, -1]),
    ([-1, 1, -1], [1, 1, 1]),
    ([-1, -1, 1], [1, 1, -1]),
    ([-1, -1, -1], [1, -1, 1]),
];

/// Band pass grid: over portions i, j and under portions k, l, arrows ik, il, jk, jl.
/// Key: (o_i, o_j, o_k, o_l); value: (s_ik, s_il, s_jk, s_jl).
pub const BAND: [([i8; 4], [i8; 4]); 16] = [
    ([1, 1, 1, 1], [1, 1, 1, 1]),
    ([1, 1, 1, -1], [1, -1, 1, -1]),
    ([1, 1, -1, 1], [1, -1, 1, -1]),
    ([1, 1, -1, -1], [1, 1, 1, 1]),
    ([1, -1, 1, 1], [1, 1, -1, -1]),
    ([1, -1, 1, -1], [1, -1, -1, 1]),
    ([1, -1, -1, 1], [1, -1, -1, 1]),
    ([1, -1, -1, -1], [1, 1, -1, -1]),
    ([-1, 1, 1, 1], [1, 1, -1, -1]),
    ([-1, 1, 1, -1], [1, -1, -1, 1]),
    ([-1, 1, -1, 1], [1, -1, -1, 1]),
    ([-1, 1, -1, -1], [1, 1, -1, -1]),
    ([-1, -1, 1, 1], [1, 1, 1, 1]),
    ([-1, -1, 1, -1], [1, -1, 1, -1]),
    ([-1, -1, -1, 1], [1, -1, 1, -1]),
    ([-1, -1, -1, -1], [1, 1, 1, 1]),
];

fn admits<const N: usize>(table: &[([i8; N], [i8; N])], orders: [i8; N], signs: [i8; N]) -> bool {
    table.iter().any(|(o, s)| {
        *o == orders && (*s == signs || s.iter().zip(&signs).all(|(a, b)| *a == -*b))
    })
}

pub fn stacked_admits(orders: [i8; 3], signs: [i8; 3]) -> bool {
    admits(&STACKED, orders, signs)
}

pub fn cyclic_admits(orders: [i8; 3], signs: [i8; 3]) -> bool {
    admits(&CYCLIC, orders, signs)
}

pub fn band_admits(orders: [i8; 4], signs: [i8; 4]) -> bool {
    admits(&BAND, orders, signs)
}

#[cfg(test)]
mod tests {
    //! The tables are checked against straight-line pictures: random oriented lines,
    //! crossing order read along each line, crossing sign from the over/under directions.
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    type P = (f64, f64);

    fn cross(a: P, b: P) -> f64 {
        a.0 * b.1 - a.1 * b.0
    }

    /// Parameter along line (p, d) where it meets line (q, e).
    fn meet(p: P, d: P, q: P, e: P) -> f64 {
        let w = (q.0 - p.0, q.1 - p.1);
        cross(w, e) / cross(d, e)
    }

    fn sgn(x: f64) -> i8 {
        if x > 0.0 {
            1
        } else {
            -1
        }
    }

    fn random_dir(rng: &mut ChaCha8Rng) -> P {
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        (t.cos(), t.sin())
    }

    /// over[a][b]: line a passes over line b.
    fn triangle_census(over: [[bool; 3]; 3], seed: u64) -> BTreeSet<([i8; 3], [i8; 3])> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        for _ in 0..20_000 {
            let pts: Vec<P> = (0..3).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let dirs: Vec<P> = (0..3).map(|_| random_dir(&mut rng)).collect();
            if (0..3).any(|a| (0..3).any(|b| a != b && cross(dirs[a], dirs[b]).abs() < 1e-3)) {
                continue;
            }
            // order bit on line k: meeting with the lower other line first
            let mut o = [0i8; 3];
            for k in 0..3 {
                let others: Vec<usize> = (0..3).filter(|&x| x != k).collect();
                let t0 = meet(pts[k], dirs[k], pts[others[0]], dirs[others[0]]);
                let t1 = meet(pts[k], dirs[k], pts[others[1]], dirs[others[1]]);
                o[k] = sgn(t1 - t0);
            }
            let sign = |a: usize, b: usize| {
                let (ov, un) = if over[a][b] { (a, b) } else { (b, a) };
                sgn(cross(dirs[ov], dirs[un]))
            };
            seen.insert((o, [sign(0, 1), sign(0, 2), sign(1, 2)]));
        }
        seen
    }

    #[test]
    fn stacked_table_matches_geometry() {
        let over = [[false, true, true], [false, false, true], [false, false, false]];
        let census = triangle_census(over, 1);
        assert_eq!(census.len(), 16);
        for o in census.iter().map(|c| c.0) {
            for sx in [-1i8, 1] {
                for sy in [-1i8, 1] {
                    for sz in [-1i8, 1] {
                        let s = [sx, sy, sz];
                        assert_eq!(census.contains(&(o, s)), stacked_admits(o, s), "{o:?} {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_table_matches_geometry_in_both_chiralities() {
        // 0 over 1, 1 over 2, 2 over 0; signs listed as (01, 20, 12) = (x, y, z)
        for (over, seed) in [
            ([[false, true, false], [false, false, true], [true, false, false]], 2),
            ([[false, false, true], [true, false, false], [false, true, false]], 3),
        ] {
            let census = triangle_census(over, seed);
            assert_eq!(census.len(), 16);
            let forward = over[0][1];
            for (o, s) in &census {
                // census stores (01, 02, 12); table arrows are 0->1, 2->0, 1->2 for the
                // forward chirality, and the reversed arrows for the mirror, which the
                // matcher relabels; both must land in the table.
                let signs = [s[0], s[1], s[2]];
                if forward {
                    assert!(cyclic_admits(*o, signs), "{o:?} {signs:?}");
                } else {
                    // relabel portions 0<->1 so that 0 is over 1 again
                    let o2 = [o[1], o[0], -o[2]];
                    let signs2 = [s[0], s[2], s[1]];
                    assert!(cyclic_admits(o2, signs2), "{o2:?} {signs2:?}");
                }
            }
        }
    }

    #[test]
    fn band_table_matches_geometry() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut seen = BTreeSet::new();
        for _ in 0..40_000 {
            let a = random_dir(&mut rng);
            let b = random_dir(&mut rng);
            if cross(a, b).abs() < 1e-2 {
                continue;
            }
            let flip = |v: P, r: bool| if r { (-v.0, -v.1) } else { v };
            let dirs = [
                flip(a, rng.gen()),
                flip(a, rng.gen()),
                flip(b, rng.gen()),
                flip(b, rng.gen()),
            ];
            let pts: Vec<P> = (0..4).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let others = [[2usize, 3], [2, 3], [0, 1], [0, 1]];
            let mut o = [0i8; 4];
            for k in 0..4 {
                let t0 = meet(pts[k], dirs[k], pts[others[k][0]], dirs[others[k][0]]);
                let t1 = meet(pts[k], dirs[k], pts[others[k][1]], dirs[others[k][1]]);
                o[k] = sgn(t1 - t0);
            }
            let s = |i: usize, k: usize| sgn(cross(dirs[i], dirs[k]));
            seen.insert((o, [s(0, 2), s(0, 3), s(1, 2), s(1, 3)]));
        }
        assert_eq!(seen.len(), 32);
        for (o, s) in &seen {
            assert!(band_admits(*o, *s));
        }
        let admitted = BAND.len() * 2;
        assert_eq!(admitted, seen.len());
    }

    #[test]
    fn cyclic_table_is_invariant_under_relabelling_the_cycle() {
        // portions (0, 1, 2) -> (2, 0, 1): arrows (x, y, z) -> (y, z, x)
        for (o, _) in CYCLIC {
            for bits in 0..8u8 {
                let s = [0, 1, 2].map(|k| if bits >> k & 1 == 1 { 1i8 } else { -1 });
                let o2 = [-o[1], -o[2], o[0]];
                let s2 = [s[2], s[0], s[1]];
                assert_eq!(cyclic_admits(o, s), cyclic_admits(o2, s2));
            }
        }
    }

    #[test]
    fn tables_are_closed_under_reversing_all_orders() {
        for (o, s) in STACKED {
            assert!(stacked_admits(o.map(|x| -x), s));
        }
        for (o, s) in CYCLIC {
            assert!(cyclic_admits(o.map(|x| -x), s));
        }
    }
}
