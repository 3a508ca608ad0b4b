use std::collections::{BTreeSet, HashSet};

use germs::{enumerate, Germ};
use lexical::{
    coded_word, color_at, color_upper, colored_mk_pi, colored_rk, delta, germ_of_class, germ_of_vertex,
    lexical_color_formula, neighbor_germ, one_factorization, theta_reroot_by_reversal, zero_colors, Color,
};
use midlevels::{classify, lower_classes, reflect_quotient_edge, words_of_weight, Budget, EdgeKind, Word};
use proptest::prelude::*;
use treecodec::{castle, reflect_phi, rotate_germ, theta, theta_reroot};

fn lower_words(k: usize) -> impl Iterator<Item = Word> {
    words_of_weight(2 * k + 1, k)
}

#[test]
fn procedure_matches_formula_on_every_class() {
    for k in 1..=6 {
        for c in lower_classes(k) {
            let w = c.canonical();
            for x in w.zeros() {
                assert_eq!(
                    color_at(w, x).unwrap(),
                    lexical_color_formula(w, x).unwrap(),
                    "{w} at {x}"
                );
            }
        }
    }
}

#[test]
fn zeros_of_every_lower_word_get_every_color_once() {
    for k in 1..=6 {
        for w in lower_words(k) {
            let colors: BTreeSet<Color> = zero_colors(w).unwrap().iter().map(|p| p.1).collect();
            assert_eq!(colors, (0..=k as Color).collect(), "{w}");
        }
    }
}

#[test]
fn endpoints_agree_on_every_edge() {
    for k in 1..=5 {
        for w in lower_words(k) {
            for x in w.zeros() {
                assert_eq!(
                    color_at(w, x).unwrap(),
                    color_upper(w.flip(x), x).unwrap(),
                    "{w} at {x}"
                );
            }
        }
    }
}

#[test]
fn color_classes_are_perfect_matchings() {
    let budget = Budget::default();
    for k in 1..=6 {
        let g = one_factorization(k, &budget).unwrap();
        let n = g.vertex_count();
        assert_eq!(g.edge_count(), (k + 1) * n / 2);
        for c in 0..=k as Color {
            let mut seen = vec![false; n];
            let mut count = 0;
            for e in g.edges().iter().filter(|e| e.color == Some(c)) {
                assert!(!seen[e.a] && !seen[e.b], "k={k} color {c} repeats at an endpoint");
                seen[e.a] = true;
                seen[e.b] = true;
                count += 1;
            }
            assert_eq!(count, n / 2, "k={k} color {c}");
        }
    }
}

#[test]
fn colors_are_invariant_under_rotation() {
    for k in 1..=6 {
        let n = 2 * k + 1;
        for w in lower_words(k) {
            for x in w.zeros() {
                let moved = w.translate(1);
                assert_eq!(color_at(w, x).unwrap(), color_at(moved, (x + 1) % n).unwrap());
            }
        }
    }
}

#[test]
fn skew_reflection_pairs_share_colors() {
    for k in 1..=6 {
        for c in lower_classes(k) {
            let w = c.canonical();
            for x in w.zeros() {
                let (d, y) = reflect_quotient_edge(c, x);
                assert_eq!(
                    color_at(w, x).unwrap(),
                    color_at(d.canonical(), y).unwrap(),
                    "{c} at {x}"
                );
            }
        }
    }
}

#[test]
fn first_two_middle_levels_graphs() {
    let budget = Budget::default();
    let m1 = one_factorization(1, &budget).unwrap();
    let colors: BTreeSet<Option<Color>> = m1.edges().iter().map(|e| e.color).collect();
    assert_eq!(colors, [Some(0), Some(1)].into());
    let m2 = one_factorization(2, &budget).unwrap();
    for c in 0..=2 {
        assert_eq!(m2.edges().iter().filter(|e| e.color == Some(c)).count(), 10);
    }
}

#[test]
fn smallest_dihedral_quotient() {
    let r2 = colored_rk(2, &Budget::default()).unwrap();
    assert_eq!(r2.vertex_count(), 2);
    for v in 0..2 {
        let loops: BTreeSet<Color> = r2
            .edges()
            .iter()
            .filter(|e| e.is_loop() && e.a == v)
            .filter_map(|e| e.color)
            .collect();
        assert_eq!(loops, [0, 2].into());
    }
    let links: Vec<Option<Color>> = r2
        .edges()
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| e.color)
        .collect();
    assert_eq!(links, [Some(1)]);
}

#[test]
fn quotient_colors_match_lifted_colors() {
    let budget = Budget::default();
    for k in 1..=5 {
        let q = colored_mk_pi(k, &budget).unwrap();
        for e in q.edges() {
            let w = q.vertices()[e.a].canonical();
            assert_eq!(e.color, Some(color_at(w, e.position).unwrap()));
        }
    }
}

#[test]
fn horizontal_edges_are_loops_of_rk() {
    let budget = Budget::default();
    for k in 2..=5 {
        let r = colored_rk(k, &budget).unwrap();
        for e in r.edges() {
            let c = r.vertices()[e.a];
            let d = midlevels::NecklaceClass::of(c.canonical().flip(e.position));
            assert_eq!(e.is_loop(), classify(c, d) == EdgeKind::Horizontal);
        }
    }
}

#[test]
fn delta_examples() {
    assert_eq!(delta(Word::parse("00011").unwrap()).unwrap().to_string(), "012**");
    assert_eq!(delta(Word::parse("00101").unwrap()).unwrap().to_string(), "02*1*");
    assert_eq!(
        germ_of_vertex(Word::parse("00101").unwrap()).unwrap().to_string(),
        "1"
    );
}

#[test]
fn classes_biject_onto_germs() {
    for k in 1..=6 {
        let germs: HashSet<Germ> = lower_classes(k)
            .into_iter()
            .map(|c| germ_of_class(c).unwrap())
            .collect();
        let expected: HashSet<Germ> = enumerate(k).into_iter().collect();
        assert_eq!(germs, expected, "k={k}");
    }
}

#[test]
fn every_vertex_of_a_class_has_the_same_germ() {
    for k in 1..=4 {
        for w in lower_words(k) {
            assert_eq!(germ_of_vertex(w).unwrap(), germ_of_vertex(w.canonical()).unwrap());
            assert_eq!(germ_of_vertex(w.aleph()).unwrap(), germ_of_vertex(w).unwrap());
        }
    }
}

#[test]
fn code_subscripts_are_lexical_colors() {
    for k in 2..=8 {
        for g in enumerate(k) {
            assert_eq!(coded_word(theta(&g)).unwrap(), castle(&g).symbols(), "{g}");
        }
    }
}

#[test]
fn color_zero_is_reflection() {
    for k in 2..=6 {
        for g in enumerate(k) {
            assert_eq!(neighbor_germ(&g, 0).unwrap(), reflect_phi(&g), "{g}");
        }
    }
}

#[test]
fn color_one_is_reflection_then_rotation() {
    for k in 2..=6 {
        for g in enumerate(k) {
            assert_eq!(
                neighbor_germ(&g, 1).unwrap(),
                rotate_germ(&reflect_phi(&g)),
                "{g}"
            );
        }
    }
}

#[test]
fn reroot_conjugates_colors() {
    for k in 2..=6 {
        for g in enumerate(k) {
            let t = theta_reroot(&g);
            for c in 1..k as Color {
                let lhs = neighbor_germ(&t, c).unwrap();
                let rhs = theta_reroot(&neighbor_germ(&g, k as Color - c).unwrap());
                assert_eq!(lhs, rhs, "k={k} {g} color {c}");
            }
        }
    }
}

#[test]
fn reroot_is_reversal_of_the_word() {
    for k in 2..=8 {
        for g in enumerate(k) {
            assert_eq!(theta_reroot_by_reversal(&g).unwrap(), theta_reroot(&g), "{g}");
        }
    }
    let g = Germ::parse("0123223442310121").unwrap();
    assert_eq!(theta_reroot_by_reversal(&g).unwrap(), theta_reroot(&g));
}

proptest! {
    #[test]
    fn neighbors_are_mutual(k in 2usize..=8, seed in any::<prop::sample::Index>(), c in 0u8..=8) {
        let germs = enumerate(k);
        let g = &germs[seed.index(germs.len())];
        let c = c % (k as u8 + 1);
        let h = neighbor_germ(g, c).unwrap();
        prop_assert_eq!(&neighbor_germ(&h, c).unwrap(), g);
    }

    #[test]
    fn formula_matches_on_random_words(k in 1usize..=12, raw in any::<u64>()) {
        let words: Vec<Word> = lower_words(k.min(7)).collect();
        let w = words[(raw as usize) % words.len()];
        for x in w.zeros() {
            prop_assert_eq!(color_at(w, x).unwrap(), lexical_color_formula(w, x).unwrap());
        }
    }
}
