//! Gauss diagram pairings: signed counts of sub-diagrams.
//!
//! Pattern file format:
//!
//! ```text
//! wgdp 1
//! map 1 2        # pattern strand k goes to target strand map[k]; or `map sum`
//! weight sign    # or `weight one`
//! wgd 1
//! ...            # the configuration, as a wgd document
//! ```

use thiserror::Error;

use crate::diagram::{parse_gauss_code, Arrow, GaussDiagram, Kind, ParseError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrandMap {
    /// Pattern strand `k` (1-based) is sent to target strand `map[k-1]`.
    Fixed(Vec<usize>),
    /// Sum over all injective strand assignments.
    Sum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    /// Product of the signs of the matched arrows.
    Sign,
    One,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub diagram: GaussDiagram,
    pub map: StrandMap,
    pub weight: Weight,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error("pattern header: {0}")]
    Header(String),
    #[error(transparent)]
    Body(#[from] ParseError),
}

pub fn parse_pattern(text: &str) -> Result<Pattern, PatternError> {
    let mut map = StrandMap::Sum;
    let mut weight = Weight::Sign;
    let mut seen_magic = false;
    let mut body_start = None;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let words: Vec<&str> = line.split('#').next().unwrap_or("").split_whitespace().collect();
        match words.as_slice() {
            [] => {}
            ["wgdp", "1"] => seen_magic = true,
            ["map", "sum"] => map = StrandMap::Sum,
            ["map", rest @ ..] => {
                let v: Result<Vec<usize>, _> = rest.iter().map(|w| w.parse()).collect();
                map = StrandMap::Fixed(v.map_err(|_| PatternError::Header(format!("bad map `{}`", line.trim())))?);
            }
            ["weight", "sign"] => weight = Weight::Sign,
            ["weight", "one"] => weight = Weight::One,
            ["wgd", ..] => {
                body_start = Some(offset);
                break;
            }
            _ => return Err(PatternError::Header(format!("unexpected `{}`", line.trim()))),
        }
        offset += line.len();
    }
    if !seen_magic {
        return Err(PatternError::Header("missing `wgdp 1`".into()));
    }
    let start = body_start.ok_or_else(|| PatternError::Header("missing wgd body".into()))?;
    let diagram = parse_gauss_code(&text[start..])?;
    if let StrandMap::Fixed(m) = &map {
        if m.len() != diagram.n() {
            return Err(PatternError::Header(format!("map has {} entries for {} strands", m.len(), diagram.n())));
        }
    }
    Ok(Pattern { diagram, map, weight })
}

/// Positions (along each target strand) must respect the pattern's order, cyclically on circles.
fn order_ok(positions: &[usize], closed: bool) -> bool {
    if positions.len() < 2 {
        return true;
    }
    let descents = positions.windows(2).filter(|w| w[0] > w[1]).count();
    if !closed {
        return descents == 0;
    }
    let wrap = (positions[positions.len() - 1] > positions[0]) as usize;
    descents + wrap == 1
}

fn injective_maps(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in 1..=n {
            if !cur.contains(&t) {
                cur.push(t);
                rec(k, n, cur, out);
                cur.pop();
            }
        }
    }
    rec(k, n, &mut cur, &mut out);
    out
}

/// `<P, D>`: sum over embeddings of the pattern's arrows into `d`'s arrows that respect
/// strands, directions and the order of endpoints on each strand.
pub fn count_pattern(d: &GaussDiagram, p: &Pattern) -> i64 {
    let pd = &p.diagram;
    if pd.n() > d.n() || pd.arrow_count() > d.arrow_count() {
        return 0;
    }
    let maps = match &p.map {
        StrandMap::Fixed(m) => vec![m.clone()],
        StrandMap::Sum => injective_maps(pd.n(), d.n()),
    };
    let pat: Vec<Arrow> = pd.arrows();
    let target: Vec<Arrow> = d.arrows();
    let closed = d.kind() == Kind::Closed;
    let mut total = 0;
    for m in maps {
        if m.iter().any(|&t| t == 0 || t > d.n()) {
            continue;
        }
        let mut chosen = vec![usize::MAX; pat.len()];
        total += embed(pd, d, &pat, &target, &m, 0, &mut chosen, closed, p.weight);
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn embed(
    pd: &GaussDiagram,
    d: &GaussDiagram,
    pat: &[Arrow],
    target: &[Arrow],
    map: &[usize],
    k: usize,
    chosen: &mut Vec<usize>,
    closed: bool,
    weight: Weight,
) -> i64 {
    if k == pat.len() {
        // read each pattern strand's endpoints and check the target order
        for s in 1..=pd.n() {
            let positions: Vec<usize> = pd
                .strand(s)
                .iter()
                .map(|e| {
                    let idx = pat.iter().position(|a| a.id == e.arrow).expect("pattern arrow");
                    target[chosen[idx]].slot(e.role).pos
                })
                .collect();
            if !order_ok(&positions, closed) {
                return 0;
            }
        }
        return match weight {
            Weight::One => 1,
            Weight::Sign => chosen.iter().map(|&c| target[c].sign.value()).product(),
        };
    }
    let a = pat[k];
    let mut sum = 0;
    for (ti, t) in target.iter().enumerate() {
        if chosen[..k].contains(&ti) {
            continue;
        }
        if t.tail.strand != map[a.tail.strand - 1] || t.head.strand != map[a.head.strand - 1] {
            continue;
        }
        chosen[k] = ti;
        sum += embed(pd, d, pat, target, map, k + 1, chosen, closed, weight);
    }
    chosen[k] = usize::MAX;
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Sign;
    use crate::invariants::vlk;

    fn arrow_pattern(i: usize, j: usize) -> Pattern {
        let text = format!("wgdp 1\nmap {i} {j}\nweight sign\nwgd 1\nkind open\nstrands 2\narrows 1\nsign 1 +\nstrand 1: T1\nstrand 2: H1\n");
        parse_pattern(&text).unwrap()
    }

    #[test]
    fn single_arrow_pattern_is_vlk() {
        let text = "wgd 1\nkind open\nstrands 3\narrows 4\nsign 1 +\nsign 2 -\nsign 3 +\nsign 4 +\nstrand 1: T1 H2 T4\nstrand 2: H1 T3 H4\nstrand 3: T2 H3\n";
        let d = parse_gauss_code(text).unwrap();
        let m = vlk(&d);
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    assert_eq!(count_pattern(&d, &arrow_pattern(i, j)), m.get(i, j), "{i} {j}");
                }
            }
        }
    }

    #[test]
    fn larger_pattern_gives_zero() {
        let p = parse_pattern("wgdp 1\nmap sum\nweight one\nwgd 1\nkind open\nstrands 1\narrows 2\nsign 1 +\nsign 2 +\nstrand 1: T1 T2 H1 H2\n").unwrap();
        assert_eq!(count_pattern(&GaussDiagram::block(2, 1, 2, Sign::Plus, 1), &p), 0);
    }

    #[test]
    fn order_matters_and_renaming_does_not() {
        let p = parse_pattern("wgdp 1\nmap 1\nweight one\nwgd 1\nkind open\nstrands 1\narrows 2\nsign 1 +\nsign 2 +\nstrand 1: T1 T2 H1 H2\n").unwrap();
        let d = parse_gauss_code("wgd 1\nkind open\nstrands 1\narrows 2\nsign 5 -\nsign 9 +\nstrand 1: T9 T5 H9 H5\n").unwrap();
        assert_eq!(count_pattern(&d, &p), 1);
        let e = parse_gauss_code("wgd 1\nkind open\nstrands 1\narrows 2\nsign 1 -\nsign 2 +\nstrand 1: T1 T2 H2 H1\n").unwrap();
        assert_eq!(count_pattern(&e, &p), 0);
        let c = e.close().unwrap();
        assert_eq!(count_pattern(&c, &Pattern { diagram: p.diagram.close().unwrap(), ..p.clone() }), 0);
    }
}
