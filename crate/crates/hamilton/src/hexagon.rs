use std::collections::BTreeMap;
use std::fmt::Write as _;

use midlevels::Word;
use rayon::prelude::*;

use crate::factor::CycleDecomposition;

/// A 6-cycle `u u' u'' v'' v' v` of M_k meeting the host cycle in the
/// edges `u u'` and `v' v` and another cycle in the edge `u'' v''`; `u v` is
/// an edge of color `h >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SixCycle {
    pub u: usize,
    pub u1: usize,
    pub u2: usize,
    pub v2: usize,
    pub v1: usize,
    pub v: usize,
    pub host: usize,
    pub target: usize,
    pub color: u8,
    /// Position of `u` on the host cycle.
    pub position: usize,
    /// `v` lies five steps ahead of `u` (otherwise behind).
    pub ahead: bool,
}

impl SixCycle {
    pub fn vertices(&self) -> [usize; 6] {
        [self.u, self.u1, self.u2, self.v2, self.v1, self.v]
    }

    /// Edges leaving the 2-factor.
    pub fn removed(&self) -> [(usize, usize); 3] {
        [(self.u, self.u1), (self.v1, self.v), (self.u2, self.v2)]
    }

    /// Edges entering it.
    pub fn added(&self) -> [(usize, usize); 3] {
        [(self.u1, self.u2), (self.v2, self.v1), (self.v, self.u)]
    }

    pub fn edges(&self) -> [(usize, usize); 6] {
        let [a, b, c] = self.removed();
        let [d, e, f] = self.added();
        [a, b, c, d, e, f]
    }

    /// Sort key: host, target, position, orientation.
    pub fn key(&self) -> (usize, usize, usize, bool) {
        (self.host, self.target, self.position, !self.ahead)
    }
}

fn adjacent(a: Word, b: Word) -> bool {
    (a.raw() ^ b.raw()).count_ones() == 1
}

/// All words at Hamming distance one that stay in the middle levels.
fn neighbors(w: Word) -> impl Iterator<Item = Word> {
    (0..w.len()).map(move |i| w.flip(i))
}

fn hexagons_of_host(dec: &CycleDecomposition, i: usize) -> Vec<SixCycle> {
    let cycle = dec.cycle(i);
    let len = cycle.len();
    let mut out = Vec::new();
    if len < 7 {
        return out;
    }
    let at = |p: isize| cycle[p.rem_euclid(len as isize) as usize];
    for p in 0..len {
        for ahead in [true, false] {
            let s: isize = if ahead { 1 } else { -1 };
            let pi = p as isize;
            let (u, v) = (at(pi), at(pi + 5 * s));
            let (wu, wv) = (dec.word(u), dec.word(v));
            if !adjacent(wu, wv) {
                continue;
            }
            let (u1, v1) = (at(pi - s), at(pi + 4 * s));
            let wv1 = dec.word(v1);
            let color = edge_color(dec, u, v);
            for wu2 in neighbors(dec.word(u1)) {
                let Some(u2) = dec.vertex(wu2) else { continue };
                let target = dec.cycle_of(u2);
                if target == i {
                    continue;
                }
                for v2 in dec.w01(u2) {
                    if adjacent(dec.word(v2), wv1) {
                        out.push(SixCycle {
                            u,
                            u1,
                            u2,
                            v2,
                            v1,
                            v,
                            host: i,
                            target,
                            color,
                            position: p,
                            ahead,
                        });
                    }
                }
            }
        }
    }
    out
}

fn edge_color(dec: &CycleDecomposition, a: usize, b: usize) -> u8 {
    let (wa, wb) = (dec.word(a), dec.word(b));
    let (lower, upper) = if wa.weight() < wb.weight() {
        (wa, wb)
    } else {
        (wb, wa)
    };
    let x = (lower.raw() ^ upper.raw()).leading_zeros() as usize - (64 - lower.len());
    lexical::color_at(lower, x).expect("adjacent middle-levels words differ in a zero of the lower one")
}

/// Pairs `u, v` five steps apart on a cycle that are adjacent in M_k, as
/// `(host, position of u, ahead)`; every 6-cycle extends one of them.
pub fn chords(dec: &CycleDecomposition) -> Vec<(usize, usize, bool)> {
    let mut out = Vec::new();
    for i in 0..dec.cycle_count() {
        let cycle = dec.cycle(i);
        let len = cycle.len();
        if len < 7 {
            continue;
        }
        for p in 0..len {
            for ahead in [true, false] {
                let q = if ahead { (p + 5) % len } else { (p + len - 5) % len };
                if adjacent(dec.word(cycle[p]), dec.word(cycle[q])) {
                    out.push((i, p, ahead));
                }
            }
        }
    }
    out
}

/// Scans every host cycle for 6-cycles, both orientations, in parallel.
pub fn find_six_cycles(dec: &CycleDecomposition) -> Vec<SixCycle> {
    let mut all: Vec<SixCycle> = (0..dec.cycle_count())
        .into_par_iter()
        .flat_map_iter(|i| hexagons_of_host(dec, i))
        .collect();
    all.sort_by_key(|h| h.key());
    all
}

/// Cycles as nodes; each available 6-cycle is an arc from its host to its
/// target.
#[derive(Debug, Clone)]
pub struct CycleDigraph {
    nodes: usize,
    arcs: BTreeMap<(usize, usize), Vec<usize>>,
}

impl CycleDigraph {
    pub fn new(nodes: usize, hexagons: &[SixCycle]) -> Self {
        let mut arcs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (idx, h) in hexagons.iter().enumerate() {
            arcs.entry((h.host, h.target)).or_default().push(idx);
        }
        CycleDigraph { nodes, arcs }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.arcs
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.arcs
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, v)| v.len())
            .sum()
    }

    /// Cycles from which the root can be reached along arcs.
    pub fn reaching(&self, root: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes];
        seen[root] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(h, t) in self.arcs.keys() {
                if seen[t] && !seen[h] {
                    seen[h] = true;
                    changed = true;
                }
            }
        }
        seen
    }

    /// Graphviz text; arcs used by `chosen` (hexagon indices) are drawn bold.
    pub fn to_dot(&self, chosen: &[usize]) -> String {
        let mut out = String::from("digraph cycles {\n");
        for i in 0..self.nodes {
            let _ = writeln!(out, "  c{i};");
        }
        for (&(h, t), list) in &self.arcs {
            let bold = list.iter().any(|x| chosen.contains(x));
            let style = if bold { ", style=bold, color=red" } else { "" };
            let _ = writeln!(out, "  c{h} -> c{t} [label=\"{}\"{style}];", list.len());
        }
        out.push_str("}\n");
        out
    }
}
