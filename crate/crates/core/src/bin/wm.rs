use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use welded::classify::{decide, normal_form, reduction_sequence, QuotientTag, Verdict};
use welded::diagram::{parse_gauss_code, serialize, GaussDiagram};
use welded::invariants::{invariant_for, Tag};
use welded::macros::{expand, trivialize_long_knot, DerivedMoveKind};
use welded::moves::{apply_sequence, enumerate, MoveApplication, MoveKind, MoveSequence};
use welded::rfgroup::phi_hl;
use welded::toolkit::{bfs_search, fuzz_invariance, Corpus, CorpusSpec, SearchBudget, SearchOutcome};

#[derive(Parser)]
#[command(name = "wm", about = "Gauss diagrams of welded string links", version)]
struct Cli {
    /// Print a JSON summary instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classifying invariants of a diagram.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        tag: Option<QuotientTag>,
    },
    /// Decide whether two diagrams are equivalent in a quotient.
    Decide {
        #[arg(long)]
        tag: QuotientTag,
        a: PathBuf,
        b: PathBuf,
    },
    /// The normal form of a diagram.
    NormalForm {
        #[arg(long)]
        tag: Tag,
        file: PathBuf,
    },
    /// A move sequence from a diagram to its normal form.
    Reduce {
        #[arg(long)]
        tag: Tag,
        file: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Expand one derived move into allowed moves.
    Macro {
        kind: DerivedMoveKind,
        file: PathBuf,
        /// The target move, in trace syntax; defaults to the first applicable site.
        #[arg(long)]
        site: Option<String>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Unknot a one-strand diagram with the given moves.
    Trivialize {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        allow: Vec<MoveKind>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Bounded breadth-first search for a move sequence.
    Search {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        kinds: Vec<MoveKind>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 6)]
        max_arrows: usize,
        #[arg(long, default_value_t = 200_000)]
        max_states: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Random walks checking that a quotient's classifier does not change.
    Fuzz {
        #[arg(long)]
        tag: QuotientTag,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        /// Defaults to the tag's move plus R1, R2, R3, OC.
        #[arg(long, value_delimiter = ',')]
        kinds: Option<Vec<MoveKind>>,
        #[arg(long, default_value_t = 3)]
        max_strands: usize,
        #[arg(long, default_value_t = 6)]
        max_arrows: usize,
    },
}

type Failure = Box<dyn std::error::Error>;

/// What a verb prints, plus its exit code.
struct Report {
    code: u8,
    text: String,
    json: Value,
}

fn load(p: &Path) -> Result<GaussDiagram, Failure> {
    let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
    Ok(parse_gauss_code(&text).map_err(|e| format!("{}: {e}", p.display()))?)
}

fn emit(path: &Option<PathBuf>, seq: &MoveSequence) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, seq.to_string()).map_err(|e| format!("{}: {e}", p.display()))?;
    }
    Ok(())
}

fn verdict_report(v: Verdict, extra: Value) -> Report {
    let mut j = json!({ "verdict": v.to_string() });
    if let (Value::Object(a), Value::Object(b)) = (&mut j, extra) {
        a.extend(b);
    }
    Report { code: v.exit_code() as u8, text: v.to_string(), json: j }
}

fn sequence_report(seq: &MoveSequence, result: &GaussDiagram) -> Report {
    let steps: Vec<String> = seq.steps.iter().map(|s| s.to_string()).collect();
    Report {
        code: 0,
        text: seq.to_string(),
        json: json!({ "length": seq.len(), "steps": steps, "result": serialize(result) }),
    }
}

fn run(cmd: Cmd) -> Result<Report, Failure> {
    Ok(match cmd {
        Cmd::Invariants { file, tag } => {
            let d = load(&file)?;
            let tags: Vec<QuotientTag> = match tag {
                Some(t) => vec![t],
                None => QuotientTag::ALL.to_vec(),
            };
            let mut text = String::new();
            let mut out = serde_json::Map::new();
            for t in tags {
                let (line, val) = match t.classifier() {
                    Some(c) => {
                        let inv = invariant_for(c, &d);
                        (inv.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "), json!(inv.values))
                    }
                    None if d.is_open() => {
                        let phi = phi_hl(&d)?;
                        let ls: Vec<String> = phi.longitudes.iter().map(|l| l.to_string()).collect();
                        let named: Vec<String> = ls.iter().enumerate().map(|(i, l)| format!("l{} = {l}", i + 1)).collect();
                        (named.join("; "), json!(ls))
                    }
                    None => continue,
                };
                text.push_str(&format!("{t}: {line}\n"));
                out.insert(t.name().to_string(), val);
            }
            Report { code: 0, text: text.trim_end().to_string(), json: Value::Object(out) }
        }
        Cmd::Decide { tag, a, b } => {
            let v = decide(tag, &load(&a)?, &load(&b)?)?;
            verdict_report(v, json!({ "tag": tag.name() }))
        }
        Cmd::NormalForm { tag, file } => {
            let nf = normal_form(tag, &load(&file)?)?;
            let s = serialize(&nf);
            Report { code: 0, text: s.trim_end().to_string(), json: json!({ "tag": tag.name(), "normal_form": s }) }
        }
        Cmd::Reduce { tag, file, emit: path } => {
            let d = load(&file)?;
            let seq = reduction_sequence(tag, &d)?;
            emit(&path, &seq)?;
            sequence_report(&seq, &apply_sequence(&d, &seq)?)
        }
        Cmd::Macro { kind, file, site, emit: path } => {
            let d = load(&file)?;
            let target: MoveApplication = match site {
                Some(s) => s.parse()?,
                None => enumerate(&d, kind.target())
                    .into_iter()
                    .next()
                    .ok_or_else(|| format!("no {} site in {}", kind.target(), file.display()))?,
            };
            let seq = expand(kind, &d, &target)?;
            emit(&path, &seq)?;
            let mut r = sequence_report(&seq, &apply_sequence(&d, &seq)?);
            r.json["target"] = json!(target.to_string());
            r
        }
        Cmd::Trivialize { file, allow, emit: path } => {
            let d = load(&file)?;
            let seq = trivialize_long_knot(&d, &allow)?;
            emit(&path, &seq)?;
            sequence_report(&seq, &apply_sequence(&d, &seq)?)
        }
        Cmd::Search { a, b, mut kinds, depth, max_arrows, max_states, emit: path } => {
            let (d1, d2) = (load(&a)?, load(&b)?);
            kinds.sort();
            kinds.dedup();
            let budget = SearchBudget::new(depth, max_arrows, max_states, 0)?;
            match bfs_search(&d1, &d2, &kinds, &budget)? {
                SearchOutcome::Found(seq) => {
                    emit(&path, &seq)?;
                    let mut r = sequence_report(&seq, &apply_sequence(&d1, &seq)?);
                    r.json["found"] = json!(true);
                    r
                }
                SearchOutcome::Unknown(stop) => Report {
                    code: 2,
                    text: format!("unknown: {:?} after {} states, depth {}", stop.reason, stop.states, stop.depth),
                    json: json!({ "found": false, "stop": stop }),
                },
            }
        }
        Cmd::Fuzz { tag, count, seed, steps, kinds, max_strands, max_arrows } => {
            let kinds = kinds.unwrap_or_else(|| {
                let mut v = MoveKind::REIDEMEISTER.to_vec();
                v.push(tag.generator());
                v
            });
            let spec = CorpusSpec { strands: (1, max_strands.max(1)), arrows: (0, max_arrows), count, seed };
            let corpus = Corpus::generate(spec);
            let r = fuzz_invariance(tag, &corpus.diagrams, &kinds, steps, seed)?;
            let mut text = format!("{}: {} walks, {} moves, {} violations", tag, r.walks, r.moves, r.violations.len());
            if let Some(v) = r.violations.first() {
                text.push_str(&format!("\nfirst at walk {} step {}:\n{}{}", v.index, v.step, serialize(&v.start), v.trace));
            }
            Report { code: u8::from(!r.is_clean()), text, json: serde_json::to_value(&r)? }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(r) => {
            if cli.json {
                println!("{}", r.json);
            } else {
                println!("{}", r.text);
            }
            ExitCode::from(r.code)
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(3)
        }
    }
}
