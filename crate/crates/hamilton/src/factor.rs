use std::collections::{BTreeMap, BTreeSet, HashMap};

use germs::Germ;
use lexical::{germ_of_vertex, one_factorization};
use midlevels::{Budget, ColoredGraph, Word};
use treecodec::{castle, OrderedTree, TreeCode};

use crate::HamiltonError;

/// The 2-factor formed by the edges of colors 0 and 1, split into cycles.
#[derive(Debug, Clone)]
pub struct CycleDecomposition {
    k: usize,
    graph: ColoredGraph<Word>,
    /// `w01[v] = [color-0 neighbor, color-1 neighbor]`.
    w01: Vec<[usize; 2]>,
    cycles: Vec<Vec<usize>>,
    cycle_of: Vec<usize>,
    position: Vec<usize>,
}

/// Builds the colored M_k and walks its 0/1 cycles. Each cycle starts at its
/// least word and leaves it along the color-1 edge.
pub fn two_factor_w01(k: usize, budget: &Budget) -> Result<CycleDecomposition, HamiltonError> {
    let graph = one_factorization(k, budget)?;
    let n = graph.vertex_count();
    let mut w01 = vec![[usize::MAX; 2]; n];
    for e in graph.edges() {
        if let Some(c @ (0 | 1)) = e.color {
            let c = usize::from(c);
            w01[e.a][c] = e.b;
            w01[e.b][c] = e.a;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| graph.vertices()[v]);
    let mut cycle_of = vec![usize::MAX; n];
    let mut position = vec![0; n];
    let mut cycles = Vec::new();
    for &start in &order {
        if cycle_of[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = vec![start];
        let mut color = 1;
        let mut cur = w01[start][color];
        while cur != start {
            cycle.push(cur);
            color ^= 1;
            cur = w01[cur][color];
        }
        for (p, &v) in cycle.iter().enumerate() {
            cycle_of[v] = id;
            position[v] = p;
        }
        cycles.push(cycle);
    }
    Ok(CycleDecomposition {
        k,
        graph,
        w01,
        cycles,
        cycle_of,
        position,
    })
}

impl CycleDecomposition {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &ColoredGraph<Word> {
        &self.graph
    }

    pub fn word(&self, v: usize) -> Word {
        self.graph.vertices()[v]
    }

    pub fn vertex(&self, w: Word) -> Option<usize> {
        self.graph.index_of(&w)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Vertex ids of cycle `i` in traversal order.
    pub fn cycle(&self, i: usize) -> &[usize] {
        &self.cycles[i]
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_words(&self, i: usize) -> Vec<Word> {
        self.cycles[i].iter().map(|&v| self.word(v)).collect()
    }

    pub fn cycle_of(&self, v: usize) -> usize {
        self.cycle_of[v]
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Neighbors of `v` in the 2-factor, colors 0 and 1.
    pub fn w01(&self, v: usize) -> [usize; 2] {
        self.w01[v]
    }

    /// Color of the 2-factor edge leaving position `p` of cycle `i` forward.
    pub fn step_color(&self, i: usize, p: usize) -> u8 {
        let c = &self.cycles[i];
        let (a, b) = (c[p], c[(p + 1) % c.len()]);
        if self.w01[a][0] == b {
            0
        } else {
            1
        }
    }

    /// Cycle containing the vertex `0^{k+1} 1^k` of the null germ.
    pub fn root(&self) -> usize {
        let n = 2 * self.k + 1;
        let w = Word::from_raw((1u64 << self.k) - 1, n);
        self.cycle_of[self.vertex(w).expect("the base word is a vertex")]
    }
}

/// Plane-tree data attached to one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLabel {
    pub length: usize,
    pub germs: BTreeSet<Germ>,
    /// Root-rotation classes of the trees met along the cycle, least code
    /// first.
    pub plane_classes: Vec<TreeCode>,
    /// The plane tree assigned to this cycle.
    pub label: TreeCode,
    /// Contiguous pairs of vertices with the same germ.
    pub xi: usize,
    /// Two mirror-image plane trees meet on the cycle.
    pub enantiomorphic: bool,
    /// Number of root rotations fixing the labeling tree, out of `2k`.
    pub tau: usize,
    /// Leaves of the labeling tree.
    pub leaves: usize,
}

struct TreeInfo {
    class: TreeCode,
    tau: usize,
    leaves: usize,
}

fn tree_info(code: &TreeCode) -> TreeInfo {
    let tree = OrderedTree::from_code(code);
    let orbit = tree.rotation_orbit();
    let k = code.k();
    TreeInfo {
        class: orbit.iter().min().expect("orbit is never empty").clone(),
        tau: (2 * k) / orbit.len(),
        leaves: tree.leaf_count(),
    }
}

/// Labels every cycle by plane trees. Cycles carrying the same set of plane
/// classes share them out in order, so that the labels are distinct.
pub fn label_cycles(dec: &CycleDecomposition) -> Result<Vec<CycleLabel>, HamiltonError> {
    let mut germ_of_class: HashMap<Word, Germ> = HashMap::new();
    let mut germ_of = |w: Word| -> Result<Germ, HamiltonError> {
        let lower = if w.weight() > w.len() / 2 { w.aleph() } else { w };
        let key = lower.canonical();
        if let Some(g) = germ_of_class.get(&key) {
            return Ok(g.clone());
        }
        let g = germ_of_vertex(key)?;
        germ_of_class.insert(key, g.clone());
        Ok(g)
    };
    let mut partial = Vec::with_capacity(dec.cycle_count());
    let mut infos: HashMap<Germ, TreeCode> = HashMap::new();
    for cycle in dec.cycles() {
        let germs: Vec<Germ> = cycle
            .iter()
            .map(|&v| germ_of(dec.word(v)))
            .collect::<Result<_, _>>()?;
        let xi = (0..germs.len())
            .filter(|&p| germs[p] == germs[(p + 1) % germs.len()])
            .count();
        let set: BTreeSet<Germ> = germs.into_iter().collect();
        let classes: BTreeSet<TreeCode> = set
            .iter()
            .map(|g| {
                infos
                    .entry(g.clone())
                    .or_insert_with(|| tree_info(&castle(g)).class)
                    .clone()
            })
            .collect();
        partial.push((cycle.len(), set, classes, xi));
    }
    let mut groups: BTreeMap<Vec<TreeCode>, Vec<usize>> = BTreeMap::new();
    for (i, p) in partial.iter().enumerate() {
        groups.entry(p.2.iter().cloned().collect()).or_default().push(i);
    }
    let mut labels = vec![None; partial.len()];
    for (classes, members) in &groups {
        for (slot, &i) in members.iter().enumerate() {
            labels[i] = Some(classes[slot.min(classes.len() - 1)].clone());
        }
    }
    Ok(partial
        .into_iter()
        .zip(labels)
        .map(|((length, germs, classes, xi), label)| {
            let label = label.expect("every cycle is in a group");
            let info = tree_info(&label);
            let plane_classes: Vec<TreeCode> = classes.into_iter().collect();
            CycleLabel {
                length,
                germs,
                enantiomorphic: plane_classes.len() > 1,
                plane_classes,
                label,
                xi,
                tau: info.tau,
                leaves: info.leaves,
            }
        })
        .collect())
}
