use std::collections::HashSet;

use midlevels::{Budget, Word};

use crate::factor::{two_factor_w01, CycleDecomposition};
use crate::hexagon::{find_six_cycles, CycleDigraph, SixCycle};
use crate::verify::{verify_hamilton, Certificate};
use crate::HamiltonError;

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// A 2-regular spanning edge set stored as two neighbors per vertex.
#[derive(Debug, Clone)]
struct TwoFactor {
    adj: Vec<[usize; 2]>,
}

impl TwoFactor {
    fn of(dec: &CycleDecomposition) -> Self {
        TwoFactor {
            adj: (0..dec.graph().vertex_count()).map(|v| dec.w01(v)).collect(),
        }
    }

    fn replace(&mut self, v: usize, old: usize, new: usize) {
        let slot = self.adj[v]
            .iter()
            .position(|&x| x == old)
            .expect("removed edges are present");
        self.adj[v][slot] = new;
    }

    fn remove_add(&mut self, removed: [(usize, usize); 3], added: [(usize, usize); 3]) {
        // every vertex of the hexagon loses one edge and gains one
        let mut gain = std::collections::HashMap::new();
        for (a, b) in added {
            gain.entry(a).or_insert_with(Vec::new).push(b);
            gain.entry(b).or_insert_with(Vec::new).push(a);
        }
        for (a, b) in removed {
            for (x, y) in [(a, b), (b, a)] {
                let new = gain
                    .get_mut(&x)
                    .and_then(|g| g.pop())
                    .expect("hexagon vertices gain one edge");
                self.replace(x, y, new);
            }
        }
    }

    fn apply(&mut self, h: &SixCycle) {
        self.remove_add(h.removed(), h.added());
    }

    fn undo(&mut self, h: &SixCycle) {
        self.remove_add(h.added(), h.removed());
    }

    /// Walks the cycle through `start`.
    fn walk(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let (mut prev, mut cur) = (start, self.adj[start][0]);
        while cur != start {
            out.push(cur);
            let [a, b] = self.adj[cur];
            let next = if a == prev { b } else { a };
            prev = cur;
            cur = next;
        }
        out
    }

    fn components(&self) -> usize {
        let mut seen = vec![false; self.adj.len()];
        let mut count = 0;
        for v in 0..self.adj.len() {
            if !seen[v] {
                count += 1;
                for x in self.walk(v) {
                    seen[x] = true;
                }
            }
        }
        count
    }
}

/// The chosen 6-cycles, one per non-root cycle.
#[derive(Debug, Clone)]
pub struct Gluing {
    pub root: usize,
    /// Indices into the hexagon list, in the order applied.
    pub chosen: Vec<usize>,
    /// Candidates passed over only because they shared an edge with an
    /// earlier choice.
    pub overlap_skips: usize,
    pub backtracks: usize,
}

/// Picks, for every cycle other than the root, the least 6-cycle whose host
/// is that cycle and whose target is already merged, keeping the chosen
/// 6-cycles pairwise edge-disjoint; backtracks when stuck.
pub fn select_gluing(dec: &CycleDecomposition, hexagons: &[SixCycle]) -> Result<Gluing, HamiltonError> {
    let total = dec.cycle_count();
    let root = dec.root();
    let digraph = CycleDigraph::new(total, hexagons);
    let reached = digraph.reaching(root).iter().filter(|&&b| b).count();
    if reached < total {
        return Err(HamiltonError::Disconnected { reached, total });
    }
    let mut merged = vec![false; total];
    merged[root] = true;
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    // (hexagon index) per level; cursor to resume from after a backtrack
    let mut stack: Vec<usize> = Vec::new();
    let mut cursor = 0;
    let (mut overlap_skips, mut backtracks, mut attempts) = (0, 0, 0);
    while stack.len() + 1 < total {
        let mut found = None;
        for (idx, h) in hexagons.iter().enumerate().skip(cursor) {
            if merged[h.host] || !merged[h.target] {
                continue;
            }
            attempts += 1;
            if h.edges().iter().any(|&(a, b)| used.contains(&edge(a, b))) {
                overlap_skips += 1;
                continue;
            }
            found = Some(idx);
            break;
        }
        match found {
            Some(idx) => {
                let h = &hexagons[idx];
                merged[h.host] = true;
                used.extend(h.edges().iter().map(|&(a, b)| edge(a, b)));
                stack.push(idx);
                cursor = 0;
            }
            None => {
                let Some(idx) = stack.pop() else {
                    return Err(HamiltonError::NoGluing {
                        merged: 1,
                        total,
                        attempts,
                    });
                };
                backtracks += 1;
                if attempts > 50_000_000 {
                    return Err(HamiltonError::NoGluing {
                        merged: stack.len() + 1,
                        total,
                        attempts,
                    });
                }
                let h = &hexagons[idx];
                merged[h.host] = false;
                for (a, b) in h.edges() {
                    used.remove(&edge(a, b));
                }
                cursor = idx + 1;
            }
        }
    }
    Ok(Gluing {
        root,
        chosen: stack,
        overlap_skips,
        backtracks,
    })
}

/// Everything produced on the way to a Hamilton cycle.
#[derive(Debug, Clone)]
pub struct HamiltonRun {
    pub decomposition: CycleDecomposition,
    pub hexagons: Vec<SixCycle>,
    pub gluing: Gluing,
    pub cycle: Vec<Word>,
    pub certificate: Certificate,
}

/// Glues the cycles of the 0/1 2-factor into a Hamilton cycle, starting at
/// the word `0^{k+1} 1^k`, and checks it with the independent verifier.
pub fn hamilton_cycle(k: usize, budget: &Budget) -> Result<HamiltonRun, HamiltonError> {
    let decomposition = two_factor_w01(k, budget)?;
    let hexagons = find_six_cycles(&decomposition);
    let gluing = select_gluing(&decomposition, &hexagons)?;
    let mut factor = TwoFactor::of(&decomposition);
    for &idx in &gluing.chosen {
        factor.apply(&hexagons[idx]);
    }
    let components = factor.components();
    if components != 1 {
        return Err(HamiltonError::NotSingleCycle(components));
    }
    let start = decomposition
        .vertex(Word::from_raw((1u64 << k) - 1, 2 * k + 1))
        .expect("the base word is a vertex");
    let cycle: Vec<Word> = factor
        .walk(start)
        .into_iter()
        .map(|v| decomposition.word(v))
        .collect();
    let certificate = verify_hamilton(k, &cycle)?;
    Ok(HamiltonRun {
        decomposition,
        hexagons,
        gluing,
        cycle,
        certificate,
    })
}

/// Applies one 6-cycle to the 2-factor of `dec` and returns the vertex set
/// of the resulting cycle through `u`, for checking single merges.
pub fn merged_cycle(dec: &CycleDecomposition, h: &SixCycle) -> Vec<usize> {
    let mut f = TwoFactor::of(dec);
    f.apply(h);
    let out = f.walk(h.u);
    f.undo(h);
    out
}
