use super::*;
use crate::diagram::{equal_raw, parse_gauss_code};
use crate::invariants::Tag;
use crate::moves::{apply, apply_sequence, enumerate, MoveKind};
use crate::testutil::scatter;

fn d1() -> GaussDiagram {
    GaussDiagram::block(2, 1, 2, Sign::Plus, 1)
}

fn three_arrows() -> GaussDiagram {
    parse_gauss_code(
        "wgd 1\nkind open\nstrands 2\narrows 3\nsign 1 +\nsign 2 +\nsign 3 -\nstrand 1: T1 H2 T3\nstrand 2: H1 T2 H3\n",
    )
    .unwrap()
}

const TAGS: [Tag; 4] = [Tag::F, Tag::VC, Tag::CC, Tag::WBP];

#[test]
fn decide_examples() {
    let c = apply(&d1(), &enumerate(&d1(), MoveKind::CC)[0]).unwrap();
    assert_eq!(decide(QuotientTag::CC, &d1(), &c).unwrap(), Verdict::Equivalent);
    assert_eq!(decide(QuotientTag::F, &d1(), &GaussDiagram::trivial(2)).unwrap(), Verdict::Inequivalent);
    for seed in 0..10 {
        let (a, b) = (scatter(seed, 1, 4, false), scatter(seed + 100, 1, 3, false));
        for t in TAGS {
            assert_eq!(decide(t.into(), &a, &b).unwrap(), Verdict::Equivalent);
        }
    }
    assert!(matches!(decide(QuotientTag::F, &d1(), &GaussDiagram::trivial(3)), Err(ClassifyError::StrandMismatch(2, 3))));
    assert!(matches!(decide(QuotientTag::F, &d1().close().unwrap(), &d1()), Err(ClassifyError::WrongKind { .. })));
}

#[test]
fn two_strand_delta_is_one_directional() {
    let t = GaussDiagram::trivial(2);
    assert_eq!(decide(QuotientTag::Delta2, &t, &t).unwrap(), Verdict::Unknown);
    assert_eq!(decide(QuotientTag::Delta2, &d1(), &t).unwrap(), Verdict::Inequivalent);
    assert_eq!(decide(QuotientTag::SV, &d1(), &d1()).unwrap(), Verdict::Equivalent);
    let t3 = GaussDiagram::trivial(3);
    assert!(matches!(decide(QuotientTag::Delta2, &t3, &t3), Err(ClassifyError::StrandCount { need: 2, got: 3, .. })));
}

#[test]
fn normal_form_examples() {
    let nf = normal_form(Tag::F, &three_arrows()).unwrap();
    assert!(equal_raw(&nf, &GaussDiagram::block(2, 2, 1, Sign::Plus, 1)).unwrap());
    let nf = normal_form(Tag::WBP, &GaussDiagram::block(2, 1, 2, Sign::Plus, 3)).unwrap();
    assert!(equal_raw(&nf, &d1()).unwrap());
    for t in Tag::ALL {
        assert_eq!(normal_form(t, &GaussDiagram::trivial(3)).unwrap(), GaussDiagram::trivial(3));
        assert_eq!(normal_form(t, &d1()).unwrap().n(), 2);
    }
    assert!(normal_form(Tag::F, &d1().close().unwrap()).is_err());
}

#[test]
fn normal_forms_are_idempotent_and_classified() {
    for seed in 0..60 {
        let d = scatter(seed, 1 + seed as usize % 4, 6, false);
        for t in Tag::ALL {
            let nf = normal_form(t, &d).unwrap();
            assert_eq!(normal_form(t, &nf).unwrap(), nf, "{t} seed {seed}");
            assert_eq!(decide(t.into(), &d, &nf).unwrap(), Verdict::Equivalent);
        }
    }
}

#[test]
fn reduction_of_the_three_arrow_example() {
    let d = three_arrows();
    let seq = reduction_sequence(Tag::F, &d).unwrap();
    let out = apply_sequence(&d, &seq).unwrap();
    assert!(equal_raw(&out, &GaussDiagram::block(2, 2, 1, Sign::Plus, 1)).unwrap());
    assert!(seq.steps.iter().all(|s| s.kind.is_reidemeister() || s.kind == MoveKind::F));
}

#[test]
fn normal_forms_reduce_to_themselves() {
    for t in Tag::ALL {
        let nf = normal_form(t, &three_arrows()).unwrap();
        let seq = reduction_sequence(t, &nf).unwrap();
        assert!(equal_raw(&apply_sequence(&nf, &seq).unwrap(), &nf).unwrap());
    }
}

#[test]
fn reductions_replay_to_normal_forms() {
    for seed in 0..24 {
        let d = scatter(seed, 1 + seed as usize % 3, 4, false);
        for t in Tag::ALL {
            let seq = reduction_sequence(t, &d).unwrap_or_else(|e| panic!("{t} seed {seed}: {e}\n{d}"));
            let gen = QuotientTag::from(t).generator();
            assert!(seq.steps.iter().all(|s| s.kind.is_reidemeister() || s.kind == gen), "{t}");
            let out = apply_sequence(&d, &seq).unwrap();
            assert!(equal_raw(&out, &normal_form(t, &d).unwrap()).unwrap(), "{t} seed {seed}");
        }
    }
}

fn mixed(n: usize, blocks: &[(usize, usize)]) -> GaussDiagram {
    blocks.iter().fold(GaussDiagram::trivial(n), |d, &(i, j)| d.stack(&GaussDiagram::block(n, i, j, Sign::Plus, 1)).unwrap())
}

#[test]
fn wbp_kernel_reduces_to_empty() {
    let d = mixed(3, &[(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]);
    assert!(crate::invariants::invariant_for(Tag::WBP, &d).values.iter().all(|&v| v == 0));
    let seq = reduction_sequence(Tag::WBP, &d).unwrap();
    assert_eq!(apply_sequence(&d, &seq).unwrap(), GaussDiagram::trivial(3));
    assert!(seq.steps.iter().any(|s| s.kind == MoveKind::Wbp));
    // four of the six arrows only: the row of strand 2 is odd, so this is not in the kernel
    let four = mixed(3, &[(1, 2), (2, 1), (1, 3), (3, 1)]);
    assert_eq!(crate::invariants::invariant_for(Tag::WBP, &four).values, vec![0, 0, 0, 0, 1]);
}

#[test]
fn closed_decisions() {
    for seed in 0..20 {
        let d = scatter(seed, 2 + seed as usize % 2, 5, false).close().unwrap();
        let rot: Vec<usize> = (0..d.n()).map(|i| i + seed as usize).collect();
        for t in TAGS {
            assert!(decide_closed(t.into(), &d, &d.rotate(&rot)).unwrap());
        }
    }
    let c1 = d1().close().unwrap();
    let t = GaussDiagram::trivial(2).close().unwrap();
    assert!(!decide_closed(QuotientTag::F, &c1, &t).unwrap());
    assert!(decide_closed(QuotientTag::F, &d1(), &d1()).is_err());
    assert!(matches!(decide_closed(QuotientTag::SV, &c1, &c1), Err(ClassifyError::UnsupportedTag(_))));
}

#[test]
fn unordered_links() {
    let a = GaussDiagram::block(2, 1, 2, Sign::Plus, 1).close().unwrap();
    let b = GaussDiagram::block(2, 2, 1, Sign::Plus, 1).close().unwrap();
    assert!(decide_unordered(QuotientTag::F, &a, &b).unwrap());
    assert!(!decide_closed(QuotientTag::F, &a, &b).unwrap());
    let u = unordered_invariant(Tag::F, &a);
    assert_eq!(u.values, vec![0, 1]);
    assert_eq!(u.permutation, vec![2, 1]);
    for seed in 0..15 {
        let d = scatter(seed, 3, 6, true);
        for p in permutations(3) {
            let e = d.permute_strands(&p);
            for t in TAGS {
                assert!(decide_unordered(t.into(), &d, &e).unwrap(), "{t} {p:?}");
                let u = unordered_invariant(t, &d);
                let again = unordered_of_matrix(t, &vlk(&d).permuted(&u.permutation));
                assert_eq!(again.values, u.values);
            }
        }
    }
}

#[test]
fn braids_up_to_cc() {
    let c = apply(&d1(), &enumerate(&d1(), MoveKind::CC)[0]).unwrap();
    assert!(decide_braid_cc(&d1(), &c).unwrap());
    assert!(!decide_braid_cc(&GaussDiagram::trivial(2), &d1()).unwrap());
    let kink = parse_gauss_code("wgd 1\nkind open\nstrands 2\narrows 1\nsign 1 +\nstrand 1: T1 H1\nstrand 2:\n").unwrap();
    assert_eq!(decide_braid_cc(&kink, &d1()), Err(ClassifyError::NotBraid));
}

#[test]
fn tag_names() {
    for t in QuotientTag::ALL {
        assert_eq!(t.name().parse::<QuotientTag>().unwrap(), t);
    }
    assert_eq!("delta".parse::<QuotientTag>().unwrap(), QuotientTag::Delta2);
    assert_eq!(permutations(3).len(), 6);
    assert_eq!(Verdict::Unknown.exit_code(), 2);
}
