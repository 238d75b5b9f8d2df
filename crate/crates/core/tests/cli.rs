use std::path::PathBuf;
use std::process::{Command, Output};

use welded::moves::MoveSequence;
use welded::{apply_sequence, parse_gauss_code, GaussDiagram};

const KNOT: &str = "wgd 1\nkind open\nstrands 1\narrows 3\nsign 1 +\nsign 2 -\nsign 3 +\nstrand 1: T1 H2 T3 H1 T2 H3\n";
const LINK_A: &str = "wgd 1\nkind open\nstrands 2\narrows 1\nsign 1 +\nstrand 1: T1\nstrand 2: H1\n";
const LINK_B: &str = "wgd 1\nkind open\nstrands 2\narrows 1\nsign 1 +\nstrand 1: H1\nstrand 2: T1\n";

struct Scratch(PathBuf);

impl Scratch {
    fn new(name: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("wm-cli-{name}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn wm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wm")).args(args).output().unwrap()
}

fn s(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_exit_codes() {
    let t = Scratch::new("decide");
    let (a, b) = (t.file("a.wgd", LINK_A), t.file("b.wgd", LINK_B));
    let v = wm(&["decide", "--tag", "V", s(&a), s(&b)]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert_eq!(stdout(&v).trim(), "equivalent");
    let f = wm(&["decide", "--tag", "F", s(&a), s(&b)]);
    assert_eq!(f.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&wm(&["--json", "decide", "--tag", "CC", s(&a), s(&b)]))).unwrap();
    assert_eq!(json["verdict"], "inequivalent");
    assert_eq!(json["tag"], "CC");
}

#[test]
fn errors_exit_with_three() {
    let t = Scratch::new("errors");
    let bad = t.file("bad.wgd", "wgd 1\nkind open\nstrands 1\narrows 1\nstrand 1: T1\n");
    let o = wm(&["normal-form", "--tag", "F", s(&bad)]);
    assert_eq!(o.status.code(), Some(3));
    let o = wm(&["--json", "normal-form", "--tag", "F", s(&bad)]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(json["error"].is_string());
    let (a, k) = (t.file("a.wgd", LINK_A), t.file("k.wgd", KNOT));
    assert_eq!(wm(&["decide", "--tag", "F", s(&a), s(&k)]).status.code(), Some(3));
}

#[test]
fn emitted_traces_replay() {
    let t = Scratch::new("emit");
    let k = t.file("k.wgd", KNOT);
    let start = parse_gauss_code(KNOT).unwrap();
    let runs: [(&str, Vec<&str>); 3] = [
        ("triv.trace", vec!["trivialize", s(&k), "--allow", "DELTA"]),
        ("reduce.trace", vec!["reduce", "--tag", "WBP", s(&k)]),
        ("macro.trace", vec!["macro", "SC_from_DELTA", s(&k)]),
    ];
    for (name, mut args) in runs {
        let out = t.0.join(name);
        args.extend(["--emit", s(&out)]);
        let o = wm(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let seq: MoveSequence = std::fs::read_to_string(&out).unwrap().parse().unwrap();
        let end = apply_sequence(&start, &seq).unwrap();
        if name != "macro.trace" {
            assert_eq!(end, GaussDiagram::trivial(1), "{name}");
        }
    }
}

#[test]
fn search_and_fuzz() {
    let t = Scratch::new("search");
    let (a, b) = (t.file("a.wgd", LINK_A), t.file("b.wgd", LINK_B));
    let o = wm(&["--json", "search", s(&a), s(&b), "--kinds", "R1,R2,R3,OC,V", "--depth", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["found"], true);
    let o = wm(&["search", s(&a), s(&b), "--kinds", "R1,R2,R3,OC,F", "--depth", "3", "--max-states", "2000"]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(wm(&["fuzz", "--tag", "VC", "--count", "20"]).status.code(), Some(0));
    let o = wm(&["fuzz", "--tag", "CC", "--count", "20", "--kinds", "V"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("start "));
}

#[test]
fn invariants_lists_every_quotient() {
    let t = Scratch::new("inv");
    let a = t.file("a.wgd", LINK_A);
    let o = wm(&["invariants", s(&a)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for tag in ["V", "F", "VC", "CC", "WBP", "SV"] {
        assert!(text.lines().any(|l| l.starts_with(&format!("{tag}:"))), "{tag} missing in\n{text}");
    }
    assert!(text.contains("l2 = 1 + X1") || text.contains("l2 = 1 - X1") || text.contains("l2 = X1"), "{text}");
}
