use std::collections::HashMap;
use std::fmt::Write as _;
use std::hash::Hash;

use crate::word::{words_of_weight, NecklaceClass, Word};
use crate::{Budget, MidlevelsError};

/// An edge between vertex indices. `position` is the bit flipped in the
/// lower endpoint's word (for quotients: in its canonical representative).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub position: usize,
    pub color: Option<u8>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Debug, Clone)]
pub struct ColoredGraph<V> {
    vertices: Vec<V>,
    index: HashMap<V, usize>,
    edges: Vec<Edge>,
}

impl<V: Copy + Eq + Hash> ColoredGraph<V> {
    fn new(vertices: Vec<V>) -> Self {
        let index = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        ColoredGraph {
            vertices,
            index,
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_mut(&mut self) -> &mut [Edge] {
        &mut self.edges
    }

    pub fn index_of(&self, v: &V) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_loop()).count()
    }

    /// Incidences per vertex; a loop counts once.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.a] += 1;
            if !e.is_loop() {
                deg[e.b] += 1;
            }
        }
        deg
    }

    /// Number of parallel edges between two vertices.
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
            .count()
    }

    /// Graphviz text; loops and parallel edges are kept, colors become labels.
    pub fn to_dot(&self, name: &str, label: impl Fn(&V) -> String) -> String {
        let mut out = format!("graph {name} {{\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label(v));
        }
        for e in &self.edges {
            match e.color {
                Some(c) => {
                    let _ = writeln!(
                        out,
                        "  n{} -- n{} [label=\"{c}\", colorscheme=set19, color={}];",
                        e.a,
                        e.b,
                        c % 9 + 1
                    );
                }
                None => {
                    let _ = writeln!(out, "  n{} -- n{};", e.a, e.b);
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// CSV rows `vertex,color,neighbor`, one per edge end.
    pub fn to_csv(&self, label: impl Fn(&V) -> String) -> String {
        let mut out = String::from("vertex,color,neighbor\n");
        let color = |e: &Edge| e.color.map(|c| c.to_string()).unwrap_or_default();
        for e in &self.edges {
            let (a, b) = (label(&self.vertices[e.a]), label(&self.vertices[e.b]));
            let _ = writeln!(out, "{a},{},{b}", color(e));
            if !e.is_loop() {
                let _ = writeln!(out, "{b},{},{a}", color(e));
            }
        }
        out
    }
}

fn check_k(k: usize, budget: &Budget, vertices: u64) -> Result<(), MidlevelsError> {
    if k == 0 {
        return Err(MidlevelsError::ZeroK);
    }
    if 2 * k + 1 > crate::word::MAX_LEN {
        return Err(MidlevelsError::WordTooLong(2 * k + 1));
    }
    budget.admit(k, vertices * (k as u64 + 2) * 32)
}

/// Vertex count of M_k: `2 * binom(2k+1, k)`.
pub fn mk_order(k: usize) -> u64 {
    let n = 2 * k as u64 + 1;
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * (n - i) / (i + 1);
    }
    2 * c
}

/// Words of the lower level followed by words of the upper level.
pub fn mk_vertices(k: usize) -> impl Iterator<Item = Word> {
    let n = 2 * k + 1;
    words_of_weight(n, k).chain(words_of_weight(n, k + 1))
}

/// The middle-levels graph: levels k and k+1 of the (2k+1)-cube.
pub fn build_mk(k: usize, budget: &Budget) -> Result<ColoredGraph<Word>, MidlevelsError> {
    check_k(k, budget, mk_order(k))?;
    let mut g = ColoredGraph::new(mk_vertices(k).collect());
    let lower = g.vertices.len() / 2;
    for a in 0..lower {
        let w = g.vertices[a];
        for x in w.zeros() {
            let b = g.index[&w.flip(x)];
            g.edges.push(Edge {
                a,
                b,
                position: x,
                color: None,
            });
        }
    }
    Ok(g)
}

/// Lower-level necklace classes in increasing order of canonical word.
pub fn lower_classes(k: usize) -> Vec<NecklaceClass> {
    let mut classes: Vec<NecklaceClass> = words_of_weight(2 * k + 1, k)
        .filter(|w| w.canonical() == *w)
        .map(NecklaceClass::of)
        .collect();
    classes.sort();
    classes
}

/// Edge orbits of M_k under rotation: for each lower class, one edge per zero
/// of its canonical word, leading to the class of the word with that bit set.
pub fn quotient_edges(c: NecklaceClass) -> impl Iterator<Item = (usize, NecklaceClass)> {
    let w = c.canonical();
    w.zeros().map(move |x| (x, NecklaceClass::of(w.flip(x))))
}

/// Rotation quotient M_k / pi.
pub fn build_mk_pi(k: usize, budget: &Budget) -> Result<ColoredGraph<NecklaceClass>, MidlevelsError> {
    check_k(k, budget, mk_order(k) / (2 * k as u64 + 1))?;
    let lower = lower_classes(k);
    let mut vertices = lower.clone();
    vertices.extend(lower.iter().map(|c| c.aleph()));
    let mut g = ColoredGraph::new(vertices);
    for (a, &c) in lower.iter().enumerate() {
        for (x, d) in quotient_edges(c) {
            g.edges.push(Edge {
                a,
                b: g.index[&d],
                position: x,
                color: None,
            });
        }
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Horizontal,
    Skew,
}

/// A quotient edge is horizontal when its endpoints are an aleph pair.
pub fn classify(lower: NecklaceClass, upper: NecklaceClass) -> EdgeKind {
    if lower.aleph() == upper {
        EdgeKind::Horizontal
    } else {
        EdgeKind::Skew
    }
}

/// Image of the quotient edge `(c, x)` under complemented reversal, as a
/// lower class and a zero position in its canonical word.
pub fn reflect_quotient_edge(c: NecklaceClass, x: usize) -> (NecklaceClass, usize) {
    let w = c.canonical();
    let n = w.len();
    let reflected = w.flip(x).aleph();
    let (canon, start) = reflected.min_rotation();
    let moved = (n - 1 - x + n - start) % n;
    debug_assert!(!canon.bit(moved));
    (NecklaceClass::of(canon), moved)
}

/// Dihedral quotient R_k. Vertices are lower classes (each standing for the
/// pair `{c, aleph(c)}`); each skew reflection pair becomes one edge and each
/// horizontal edge a loop.
pub fn build_rk(k: usize, budget: &Budget) -> Result<ColoredGraph<NecklaceClass>, MidlevelsError> {
    check_k(k, budget, mk_order(k) / (2 * k as u64 + 1))?;
    let mut g = ColoredGraph::new(lower_classes(k));
    for a in 0..g.vertices.len() {
        let c = g.vertices[a];
        for (x, d) in quotient_edges(c) {
            let b = g.index[&d.aleph()];
            if a <= b {
                g.edges.push(Edge {
                    a,
                    b,
                    position: x,
                    color: None,
                });
            }
        }
    }
    Ok(g)
}
