//! The line-oriented `wgd 1` text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{canonical, ArrowId, DiagramError, Endpoint, GaussDiagram, Kind, Role, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: sign for arrow {id} given twice")]
    DuplicateSign { line: usize, id: ArrowId },
    #[error("line {line}: strand {strand} listed twice")]
    DuplicateStrand { line: usize, strand: usize },
    #[error("header announces {announced} arrows but {found} sign lines follow")]
    ArrowCount { announced: usize, found: usize },
    #[error(transparent)]
    Semantic(#[from] DiagramError),
}

struct Line<'a> {
    no: usize,
    words: Vec<(usize, &'a str)>,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, msg: msg.into() }
}

fn logical_lines(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut words = Vec::new();
        let mut start = None;
        for (i, ch) in body.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    words.push((s + 1, &body[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            words.push((s + 1, &body[s..]));
        }
        if !words.is_empty() {
            out.push(Line { no: k + 1, words });
        }
    }
    out
}

fn number<T: std::str::FromStr>(line: &Line<'_>, idx: usize, what: &str) -> Result<T, ParseError> {
    let (col, w) = line
        .words
        .get(idx)
        .copied()
        .ok_or_else(|| syntax(line.no, line.words.last().map_or(1, |w| w.0 + w.1.len()), format!("missing {what}")))?;
    w.parse().map_err(|_| syntax(line.no, col, format!("expected {what}, found `{w}`")))
}

fn keyword(line: &Line<'_>, kw: &str, arity: usize) -> Result<(), ParseError> {
    let (col, w) = line.words[0];
    if w != kw {
        return Err(syntax(line.no, col, format!("expected `{kw}`, found `{w}`")));
    }
    if line.words.len() != arity + 1 {
        let col = line.words.get(arity + 1).map_or(col, |w| w.0);
        return Err(syntax(line.no, col, format!("`{kw}` takes {arity} field(s)")));
    }
    Ok(())
}

/// Parses and validates a `wgd 1` document. Arrow ids are kept as written.
pub fn parse_gauss_code(text: &str) -> Result<GaussDiagram, ParseError> {
    let lines = logical_lines(text);
    let mut it = lines.iter().peekable();
    let eof = |what: &str| syntax(text.lines().count().max(1), 1, format!("unexpected end of input, expected {what}"));

    let l = it.next().ok_or_else(|| eof("`wgd 1`"))?;
    keyword(l, "wgd", 1)?;
    if l.words[1].1 != "1" {
        return Err(syntax(l.no, l.words[1].0, "unsupported format version"));
    }
    let l = it.next().ok_or_else(|| eof("`kind`"))?;
    keyword(l, "kind", 1)?;
    let kind = match l.words[1].1 {
        "open" => Kind::Open,
        "closed" => Kind::Closed,
        w => return Err(syntax(l.no, l.words[1].0, format!("unknown kind `{w}`"))),
    };
    let l = it.next().ok_or_else(|| eof("`strands`"))?;
    keyword(l, "strands", 1)?;
    let n: usize = number(l, 1, "strand count")?;
    if n == 0 {
        return Err(syntax(l.no, l.words[1].0, "strand count must be at least 1"));
    }
    let l = it.next().ok_or_else(|| eof("`arrows`"))?;
    keyword(l, "arrows", 1)?;
    let m: usize = number(l, 1, "arrow count")?;

    let mut signs = BTreeMap::new();
    let mut found = 0;
    while let Some(l) = it.peek() {
        if l.words[0].1 != "sign" {
            break;
        }
        keyword(l, "sign", 2)?;
        let id: ArrowId = number(l, 1, "arrow id")?;
        let sign = match l.words[2].1 {
            "+" => Sign::Plus,
            "-" => Sign::Minus,
            w => return Err(syntax(l.no, l.words[2].0, format!("expected `+` or `-`, found `{w}`"))),
        };
        if signs.insert(id, sign).is_some() {
            return Err(ParseError::DuplicateSign { line: l.no, id });
        }
        found += 1;
        it.next();
    }
    if found != m {
        return Err(ParseError::ArrowCount { announced: m, found });
    }

    let mut strands: Vec<Option<Vec<Endpoint>>> = vec![None; n];
    for l in it {
        let (col, w) = l.words[0];
        if w != "strand" {
            return Err(syntax(l.no, col, format!("expected `strand`, found `{w}`")));
        }
        let (col, label) = *l.words.get(1).ok_or_else(|| syntax(l.no, col + 6, "missing strand index"))?;
        let idx = label
            .strip_suffix(':')
            .ok_or_else(|| syntax(l.no, col + label.len(), "expected `:` after strand index"))?;
        let i: usize = idx.parse().map_err(|_| syntax(l.no, col, format!("bad strand index `{idx}`")))?;
        if i == 0 || i > n {
            return Err(DiagramError::StrandOutOfRange(i, n).into());
        }
        let mut seq = Vec::new();
        for &(c, tok) in &l.words[2..] {
            let (role, rest) = match tok.split_at(1) {
                ("T", r) => (Role::Tail, r),
                ("H", r) => (Role::Head, r),
                _ => return Err(syntax(l.no, c, format!("bad endpoint `{tok}`"))),
            };
            let id: ArrowId = rest.parse().map_err(|_| syntax(l.no, c + 1, format!("bad arrow id in `{tok}`")))?;
            seq.push(Endpoint { arrow: id, role });
        }
        if strands[i - 1].replace(seq).is_some() {
            return Err(ParseError::DuplicateStrand { line: l.no, strand: i });
        }
    }
    if let Some(missing) = strands.iter().position(Option::is_none) {
        return Err(eof(&format!("`strand {}:`", missing + 1)));
    }
    let strands = strands.into_iter().map(Option::unwrap).collect();
    Ok(GaussDiagram::new(kind, strands, signs)?)
}

/// Canonical text: arrows renumbered 1..m by first occurrence, circles rotated canonically.
pub fn serialize(d: &GaussDiagram) -> String {
    let (c, _) = canonical(d);
    let mut out = String::new();
    let _ = writeln!(out, "wgd 1");
    let _ = writeln!(out, "kind {}", c.kind());
    let _ = writeln!(out, "strands {}", c.n());
    let _ = writeln!(out, "arrows {}", c.arrow_count());
    for (id, s) in c.signs() {
        let _ = writeln!(out, "sign {id} {s}");
    }
    for i in 1..=c.n() {
        let _ = write!(out, "strand {i}:");
        for e in c.strand(i) {
            let _ = write!(out, " {e}");
        }
        out.push('\n');
    }
    out
}
