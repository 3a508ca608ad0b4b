//! Invariant suites run by `verify`. Each probe checks one property at one
//! value of k and returns a witness on failure.

use std::collections::BTreeSet;
use std::fmt;

use germs::{catalan, enumerate, Germ, GermIndex};
use hamilton::{hamilton_cycle, label_cycles, two_factor_w01};
use lexical::{
    cat_table, color_at, color_upper, expected_footer, lexical_color_formula, neighbor_germ,
    one_factorization, preserved_index, theta_reroot_by_reversal, Color,
};
use midlevels::{
    build_mk, build_rk, classify, lower_classes, mk_order, quotient_edges, reflect_quotient_edge,
    words_of_weight, Budget, EdgeKind,
};
use rayon::prelude::*;
use treecodec::{castle, reflect_phi, theta, theta_reroot, uncastle, OrderedTree};

type Probe = fn(usize, &Budget) -> Result<(), String>;

struct Invariant {
    module: &'static str,
    name: &'static str,
    min_k: usize,
    probe: Probe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub module: &'static str,
    pub invariant: &'static str,
    pub k: usize,
    pub witness: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "ok    {:<9} k={:<2} {}", self.module, self.k, self.invariant),
            Some(w) => write!(
                f,
                "FAIL  {:<9} k={:<2} {}: {w}",
                self.module, self.k, self.invariant
            ),
        }
    }
}

fn ensure(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

const SUITE: &[Invariant] = &[
    Invariant {
        module: "germs",
        name: "count is Catalan",
        min_k: 1,
        probe: germ_count,
    },
    Invariant {
        module: "germs",
        name: "rank follows natural order",
        min_k: 1,
        probe: germ_ranks,
    },
    Invariant {
        module: "germs",
        name: "parents descend to the null germ",
        min_k: 2,
        probe: germ_parents,
    },
    Invariant {
        module: "treecodec",
        name: "uncastle inverts castle",
        min_k: 1,
        probe: codec_roundtrip,
    },
    Invariant {
        module: "treecodec",
        name: "theta has weight k",
        min_k: 1,
        probe: theta_weight,
    },
    Invariant {
        module: "treecodec",
        name: "reflection and reroot are involutions",
        min_k: 1,
        probe: involutions,
    },
    Invariant {
        module: "midlevels",
        name: "M_k is (k+1)-regular of order 2 binom(2k+1,k)",
        min_k: 1,
        probe: mk_regular,
    },
    Invariant {
        module: "midlevels",
        name: "R_k has C_k vertices, degree k+1",
        min_k: 1,
        probe: rk_order,
    },
    Invariant {
        module: "midlevels",
        name: "at most 2 horizontal edges per class",
        min_k: 1,
        probe: horizontal,
    },
    Invariant {
        module: "lexical",
        name: "lattice path equals the counting formula",
        min_k: 1,
        probe: formula,
    },
    Invariant {
        module: "lexical",
        name: "both endpoints give the same color",
        min_k: 1,
        probe: endpoints,
    },
    Invariant {
        module: "lexical",
        name: "color classes are perfect matchings",
        min_k: 1,
        probe: matchings,
    },
    Invariant {
        module: "lexical",
        name: "skew reflection pairs share a color",
        min_k: 1,
        probe: srep,
    },
    Invariant {
        module: "lexical",
        name: "adjacency columns are involutions",
        min_k: 2,
        probe: cat_involutions,
    },
    Invariant {
        module: "lexical",
        name: "each color preserves its entry",
        min_k: 2,
        probe: preserved,
    },
    Invariant {
        module: "lexical",
        name: "reroot conjugates color i to k-i",
        min_k: 2,
        probe: conjugation,
    },
    Invariant {
        module: "hamilton",
        name: "W01 cycles match plane trees",
        min_k: 1,
        probe: w01_count,
    },
    Invariant {
        module: "hamilton",
        name: "W01 cycles alternate colors, xi even",
        min_k: 1,
        probe: w01_alternate,
    },
    Invariant {
        module: "hamilton",
        name: "glued cycle is Hamiltonian",
        min_k: 1,
        probe: hamiltonian,
    },
];

/// Runs every invariant for every k in `1..=max_k` (probes in parallel,
/// results in a fixed order).
pub fn run_suite(max_k: usize, budget: &Budget) -> Vec<Check> {
    let jobs: Vec<(&Invariant, usize)> = SUITE
        .iter()
        .flat_map(|inv| (inv.min_k..=max_k).map(move |k| (inv, k)))
        .collect();
    jobs.par_iter()
        .map(|&(inv, k)| Check {
            module: inv.module,
            invariant: inv.name,
            k,
            witness: (inv.probe)(k, budget).err(),
        })
        .collect()
}

pub fn plane_class_count(k: usize) -> usize {
    enumerate(k)
        .iter()
        .map(|g| OrderedTree::from_code(&castle(g)).plane_canonical())
        .collect::<BTreeSet<_>>()
        .len()
}

/// Steps of the alternation `a, b, a, b, ...` from `g` until it returns,
/// counted in pairs; `None` past `cap` pairs.
pub fn alternating_orbit(g: &Germ, a: Color, b: Color, cap: usize) -> Option<usize> {
    let mut cur = g.clone();
    for n in 1..=cap {
        cur = neighbor_germ(&neighbor_germ(&cur, a).ok()?, b).ok()?;
        if &cur == g {
            return Some(n);
        }
    }
    None
}

fn germ_count(k: usize, _: &Budget) -> Result<(), String> {
    let n = enumerate(k).len() as u64;
    ensure(n == catalan(k), || format!("{n} germs, C_k = {}", catalan(k)))
}

fn germ_ranks(k: usize, _: &Budget) -> Result<(), String> {
    let index = GermIndex::new(k);
    for (m, g) in index.germs().iter().enumerate() {
        ensure(index.rank(g) == Some(m), || format!("germ {g} at {m}"))?;
        if let Some(next) = g.successor() {
            ensure(index.rank(&next) == Some(m + 1), || format!("successor of {g}"))?;
        }
    }
    Ok(())
}

fn germ_parents(k: usize, _: &Budget) -> Result<(), String> {
    for g in enumerate(k) {
        let mut cur = g.clone();
        while let Ok(p) = cur.parent() {
            ensure(p.digit_sum() + 1 == cur.digit_sum() && p < cur, || {
                format!("parent of {cur}")
            })?;
            cur = p;
        }
        ensure(cur.is_zero(), || format!("{g} stops at {cur}"))?;
    }
    Ok(())
}

fn codec_roundtrip(k: usize, _: &Budget) -> Result<(), String> {
    for g in enumerate(k) {
        let code = castle(&g);
        code.validate()
            .map_err(|e| format!("castle({g}) = {code}: {e}"))?;
        let back = uncastle(&code).map_err(|e| format!("{code}: {e}"))?;
        ensure(back == g, || format!("{g} -> {code} -> {back}"))?;
    }
    Ok(())
}

fn theta_weight(k: usize, _: &Budget) -> Result<(), String> {
    for g in enumerate(k) {
        let w = theta(&g);
        ensure(w.len() == 2 * k + 1 && w.weight() == k, || {
            format!("theta({g}) = {w}")
        })?;
    }
    Ok(())
}

fn involutions(k: usize, _: &Budget) -> Result<(), String> {
    for g in enumerate(k) {
        ensure(reflect_phi(&reflect_phi(&g)) == g, || {
            format!("reflection at {g}")
        })?;
        let t = theta_reroot(&g);
        ensure(theta_reroot(&t) == g, || format!("reroot at {g}"))?;
        if k >= 2 {
            let r = theta_reroot_by_reversal(&g).map_err(|e| e.to_string())?;
            ensure(r == t, || format!("reroot of {g}: {t} vs reversal {r}"))?;
        }
    }
    Ok(())
}

fn mk_regular(k: usize, budget: &Budget) -> Result<(), String> {
    let g = build_mk(k, budget).map_err(|e| e.to_string())?;
    ensure(g.vertex_count() as u64 == mk_order(k), || {
        format!("{} vertices", g.vertex_count())
    })?;
    let bad = g.degrees().iter().position(|&d| d != k + 1);
    ensure(bad.is_none(), || {
        format!("vertex {} has another degree", g.vertices()[bad.unwrap_or(0)])
    })
}

fn rk_order(k: usize, budget: &Budget) -> Result<(), String> {
    let r = build_rk(k, budget).map_err(|e| e.to_string())?;
    ensure(r.vertex_count() as u64 == catalan(k), || {
        format!("{} vertices", r.vertex_count())
    })?;
    ensure(r.degrees().iter().all(|&d| d == k + 1), || {
        "degree other than k+1".into()
    })
}

fn horizontal(k: usize, _: &Budget) -> Result<(), String> {
    for c in lower_classes(k) {
        let h = quotient_edges(c)
            .filter(|&(_, d)| classify(c, d) == EdgeKind::Horizontal)
            .count();
        ensure(h <= 2, || format!("class {c} has {h}"))?;
    }
    Ok(())
}

fn formula(k: usize, _: &Budget) -> Result<(), String> {
    for c in lower_classes(k) {
        let w = c.canonical();
        for x in w.zeros() {
            let a = color_at(w, x).map_err(|e| e.to_string())?;
            let b = lexical_color_formula(w, x).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{w} at {x}: path {a}, formula {b}"))?;
        }
    }
    Ok(())
}

fn endpoints(k: usize, _: &Budget) -> Result<(), String> {
    for w in words_of_weight(2 * k + 1, k) {
        for x in w.zeros() {
            let a = color_at(w, x).map_err(|e| e.to_string())?;
            let b = color_upper(w.flip(x), x).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{w} at {x}: lower {a}, upper {b}"))?;
        }
    }
    Ok(())
}

fn matchings(k: usize, budget: &Budget) -> Result<(), String> {
    let g = one_factorization(k, budget).map_err(|e| e.to_string())?;
    let mut seen = vec![0u64; g.vertex_count()];
    for e in g.edges() {
        let c = e.color.ok_or_else(|| format!("edge {}-{} uncolored", e.a, e.b))?;
        for v in [e.a, e.b] {
            ensure(seen[v] & (1 << c) == 0, || {
                format!("{} meets color {c} twice", g.vertices()[v])
            })?;
            seen[v] |= 1 << c;
        }
    }
    let full = (1u64 << (k + 1)) - 1;
    ensure(seen.iter().all(|&s| s == full), || {
        "a vertex misses a color".into()
    })
}

fn srep(k: usize, _: &Budget) -> Result<(), String> {
    for c in lower_classes(k) {
        let w = c.canonical();
        for x in w.zeros() {
            let (d, y) = reflect_quotient_edge(c, x);
            let a = color_at(w, x).map_err(|e| e.to_string())?;
            let b = color_at(d.canonical(), y).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{c} at {x} ({a}) vs {d} at {y} ({b})"))?;
        }
    }
    Ok(())
}

fn cat_involutions(k: usize, _: &Budget) -> Result<(), String> {
    let t = cat_table(k).map_err(|e| e.to_string())?;
    for c in t.colors_desc() {
        let col = t.column(c);
        let bad = (0..col.len()).find(|&m| col[col[m]] != m);
        ensure(bad.is_none(), || {
            format!("color {c} at germ {}", t.germ(bad.unwrap_or(0)))
        })?;
    }
    Ok(())
}

fn preserved(k: usize, _: &Budget) -> Result<(), String> {
    let t = cat_table(k).map_err(|e| e.to_string())?;
    for c in t.colors_desc() {
        if let Some(j) = preserved_index(k, c) {
            let bad = (0..t.len()).find(|&m| t.germ(m).entry(j) != t.neighbor(m, c).entry(j));
            ensure(bad.is_none(), || {
                format!("color {c} at germ {}", t.germ(bad.unwrap_or(0)))
            })?;
        }
        let (seen, want) = (t.observed_footer(c), expected_footer(k, c));
        ensure(seen == want, || {
            format!("color {c}: footer {seen}, expected {want}")
        })?;
    }
    Ok(())
}

fn conjugation(k: usize, _: &Budget) -> Result<(), String> {
    for g in enumerate(k) {
        let t = theta_reroot(&g);
        for c in 1..k as Color {
            let lhs = neighbor_germ(&t, c).map_err(|e| e.to_string())?;
            let rhs = theta_reroot(&neighbor_germ(&g, k as Color - c).map_err(|e| e.to_string())?);
            ensure(lhs == rhs, || format!("germ {g} color {c}: {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

fn w01_count(k: usize, budget: &Budget) -> Result<(), String> {
    let dec = two_factor_w01(k, budget).map_err(|e| e.to_string())?;
    let planes = plane_class_count(k);
    ensure(dec.cycle_count() == planes, || {
        format!("{} cycles, {planes} plane trees", dec.cycle_count())
    })
}

fn w01_alternate(k: usize, budget: &Budget) -> Result<(), String> {
    let dec = two_factor_w01(k, budget).map_err(|e| e.to_string())?;
    for i in 0..dec.cycle_count() {
        for p in 0..dec.cycle(i).len() {
            let want = if p % 2 == 0 { 1 } else { 0 };
            ensure(dec.step_color(i, p) == want, || format!("cycle {i} step {p}"))?;
        }
    }
    if k >= 2 {
        for (i, l) in label_cycles(&dec).map_err(|e| e.to_string())?.iter().enumerate() {
            ensure(l.xi % 2 == 0, || format!("cycle {i} has xi {}", l.xi))?;
        }
    }
    Ok(())
}

fn hamiltonian(k: usize, budget: &Budget) -> Result<(), String> {
    hamilton_cycle(k, budget).map(|_| ()).map_err(|e| e.to_string())
}
