use std::collections::BTreeMap;

use super::{ArrowId, Endpoint, GaussDiagram, Kind, Role, Sign};

/// How a diagram was mapped onto its canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relabel {
    /// old id -> canonical id
    pub ids: BTreeMap<ArrowId, ArrowId>,
    /// per circle, the slot that became the basepoint (all zero for open diagrams)
    pub rotations: Vec<usize>,
}

impl Relabel {
    pub fn inverse_ids(&self) -> BTreeMap<ArrowId, ArrowId> {
        self.ids.iter().map(|(&a, &b)| (b, a)).collect()
    }
}

type Token = (Role, ArrowId, Sign);

#[derive(Clone)]
struct Partial {
    map: BTreeMap<ArrowId, ArrowId>,
    next: ArrowId,
    rotations: Vec<usize>,
}

impl Partial {
    fn tokens(&self, d: &GaussDiagram, strand: &[Endpoint], rot: usize) -> (Vec<Token>, Self) {
        let mut st = self.clone();
        let len = strand.len();
        let mut toks = Vec::with_capacity(len);
        for k in 0..len {
            let e = strand[(rot + k) % len];
            let id = *st.map.entry(e.arrow).or_insert_with(|| {
                st.next += 1;
                st.next
            });
            toks.push((e.role, id, d.signs[&e.arrow]));
        }
        st.rotations.push(rot);
        (toks, st)
    }
}

/// Canonical representative: arrows renumbered 1..m by first occurrence, and for circles the
/// basepoints rotated to the lexicographically least token sequence (circle by circle).
pub fn canonical(d: &GaussDiagram) -> (GaussDiagram, Relabel) {
    let mut states = vec![Partial { map: BTreeMap::new(), next: 0, rotations: Vec::new() }];
    for strand in d.strands() {
        let rots: Vec<usize> = match d.kind() {
            Kind::Open => vec![0],
            Kind::Closed => (0..strand.len().max(1)).collect(),
        };
        let mut best: Option<Vec<Token>> = None;
        let mut next_states: Vec<Partial> = Vec::new();
        for st in &states {
            for &r in &rots {
                let (toks, ns) = st.tokens(d, strand, r);
                match &best {
                    Some(b) if toks > *b => {}
                    Some(b) if toks == *b => {
                        if !next_states.iter().any(|x| x.map == ns.map) {
                            next_states.push(ns);
                        }
                    }
                    _ => {
                        best = Some(toks);
                        next_states = vec![ns];
                    }
                }
            }
        }
        states = next_states;
    }
    let st = states.swap_remove(0);
    let rel = Relabel { ids: st.map, rotations: st.rotations };
    let rotated = if d.is_closed() { d.rotate(&rel.rotations) } else { d.clone() };
    (rotated.rename(&rel.ids), rel)
}
