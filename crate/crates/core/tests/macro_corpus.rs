use welded::macros::{expand, expand_sc_via_delta, trivialize_long_knot, verify_sequence, width, DerivedMoveKind, ScExpansion};
use welded::toolkit::{exhaustive, exhaustive_up_to, random_diagram};
use welded::{apply_sequence, enumerate, GaussDiagram, MoveKind};

#[test]
fn f_from_vc_on_every_small_site() {
    let mut corpus = exhaustive_up_to(1, 4);
    corpus.extend(exhaustive_up_to(2, 3));
    let mut sites = 0;
    for d in &corpus {
        for t in enumerate(d, MoveKind::F) {
            let seq = expand(DerivedMoveKind::FFromVc, d, &t).unwrap();
            assert!(verify_sequence(DerivedMoveKind::FFromVc, d, &t, &seq), "{t}\n{d}");
            sites += 1;
        }
    }
    assert!(sites > 100_000, "{sites}");
}

#[test]
fn sc_via_delta_depth_stays_within_bound() {
    // all long knots up to 4 arrows, and every 40th one with 5
    let five = exhaustive(1, 5);
    let corpus = exhaustive_up_to(1, 4).into_iter().chain(five.into_iter().step_by(40));
    let mut deepest = [0usize; 5];
    for d in corpus {
        for a in d.arrows() {
            let x = expand_sc_via_delta(&d, a.id).unwrap_or_else(|e| panic!("{e}\n{d}"));
            assert_eq!(x.width, width(&d, a.id));
            assert!(x.depth <= ScExpansion::depth_bound(x.width), "width {} depth {}\n{d}", x.width, x.depth);
            deepest[x.width] = deepest[x.width].max(x.depth);
        }
    }
    assert_eq!(deepest, [1, 2, 3, 4, 5]);
}

#[test]
fn six_arrow_long_knots_unknot_with_delta() {
    for seed in 0..60 {
        let d = random_diagram(1, 6, seed);
        let seq = trivialize_long_knot(&d, &[MoveKind::Delta]).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(seq.steps.iter().all(|s| s.kind == MoveKind::Delta || s.kind.is_reidemeister()));
        assert_eq!(apply_sequence(&d, &seq).unwrap(), GaussDiagram::trivial(1));
    }
}
