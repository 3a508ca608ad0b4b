use std::collections::{BTreeSet, HashSet};

use germs::{catalan, enumerate};
use hamilton::{chords, find_six_cycles, label_cycles, merged_cycle, two_factor_w01, CycleDigraph};
use lexical::germ_of_vertex;
use midlevels::Budget;
use treecodec::{castle, rotate_germ, OrderedTree};

fn plane_class_count(k: usize) -> usize {
    enumerate(k)
        .iter()
        .map(|g| OrderedTree::from_code(&castle(g)).plane_canonical())
        .collect::<BTreeSet<_>>()
        .len()
}

#[test]
fn cycle_counts_match_plane_trees() {
    let budget = Budget::default();
    let expected = [1, 1, 2, 3, 6, 14];
    for k in 1..=6 {
        let dec = two_factor_w01(k, &budget).unwrap();
        assert_eq!(dec.cycle_count(), expected[k - 1], "k={k}");
        if k >= 2 {
            assert_eq!(dec.cycle_count(), plane_class_count(k), "k={k}");
        }
    }
    assert_eq!(two_factor_w01(2, &budget).unwrap().cycle(0).len(), 20);
}

#[test]
fn cycles_partition_and_alternate() {
    let budget = Budget::default();
    for k in 1..=6 {
        let dec = two_factor_w01(k, &budget).unwrap();
        let total: usize = dec.cycles().iter().map(Vec::len).sum();
        assert_eq!(total, dec.graph().vertex_count());
        for i in 0..dec.cycle_count() {
            let len = dec.cycle(i).len();
            assert_eq!(len % 2, 0);
            for p in 0..len {
                assert_eq!(
                    dec.step_color(i, p),
                    if p % 2 == 0 { 1 } else { 0 },
                    "k={k} cycle {i}"
                );
            }
            let first = dec.word(dec.cycle(i)[0]);
            assert!(dec.cycle_words(i).iter().all(|&w| w >= first));
        }
    }
}

#[test]
fn labels_are_a_bijection_onto_plane_trees() {
    let budget = Budget::default();
    for k in 2..=6 {
        let dec = two_factor_w01(k, &budget).unwrap();
        let labels = label_cycles(&dec).unwrap();
        let distinct: BTreeSet<_> = labels.iter().map(|l| l.label.clone()).collect();
        assert_eq!(distinct.len(), labels.len(), "k={k}");
        assert_eq!(distinct.len(), plane_class_count(k));
        let mut germs = HashSet::new();
        let mut covered = 0;
        for l in &labels {
            assert_eq!(l.xi % 2, 0, "k={k}: odd xi");
            assert!(l.plane_classes.contains(&l.label));
            assert!(l.plane_classes.len() <= 2);
            if !germs.contains(l.germs.iter().next().unwrap()) {
                covered += l.germs.len();
            }
            germs.extend(l.germs.iter().cloned());
        }
        assert_eq!(germs.len() as u64, catalan(k));
        assert_eq!(covered as u64, catalan(k), "k={k}: germ sets overlap partially");
    }
}

#[test]
fn worked_cycle_of_four() {
    let dec = two_factor_w01(4, &Budget::default()).unwrap();
    let labels = label_cycles(&dec).unwrap();
    let index = germs::GermIndex::new(4);
    let want: BTreeSet<usize> = [9, 2, 4, 11, 5, 6, 12, 7].into();
    let hit = labels
        .iter()
        .find(|l| {
            l.germs
                .iter()
                .map(|g| index.rank(g).unwrap())
                .collect::<BTreeSet<_>>()
                == want
        })
        .expect("a cycle through the eight germs");
    let tree = OrderedTree::from_code(&castle(index.get(2).unwrap()));
    assert_eq!(hit.label, tree.plane_canonical());
}

#[test]
fn six_edge_trees_without_repeated_germs() {
    let dec = two_factor_w01(6, &Budget::default()).unwrap();
    let labels = label_cycles(&dec).unwrap();
    let null: Vec<_> = labels.iter().filter(|l| l.xi == 0).collect();
    assert!(!null.is_empty());
    for l in &null {
        assert!(l.enantiomorphic, "{}", l.label);
    }
    let printed = ["012356**4****", "01235*46*****", "01246*5**3***", "0124*36*5****"];
    for code in printed {
        let c = treecodec::TreeCode::parse(code).unwrap();
        let class = OrderedTree::from_code(&c).plane_canonical();
        assert!(null.iter().any(|l| l.plane_classes.contains(&class)), "{code}");
    }
    for k in 2..=5 {
        let dec = two_factor_w01(k, &Budget::default()).unwrap();
        assert!(label_cycles(&dec).unwrap().iter().all(|l| l.xi > 0), "k={k}");
    }
}

#[test]
fn zero_then_one_rotates_the_root() {
    let budget = Budget::default();
    for k in 2..=5 {
        let dec = two_factor_w01(k, &budget).unwrap();
        for i in 0..dec.cycle_count() {
            let c = dec.cycle(i);
            for p in (1..c.len()).step_by(2) {
                // position p leaves along color 0, position p + 1 along color 1
                let a = germ_of_vertex(dec.word(c[p])).unwrap();
                let b = germ_of_vertex(dec.word(c[(p + 2) % c.len()])).unwrap();
                assert_eq!(rotate_germ(&a), b, "k={k}");
            }
        }
    }
}

#[test]
fn hexagons_satisfy_their_definition() {
    let budget = Budget::default();
    for k in 3..=5 {
        let dec = two_factor_w01(k, &budget).unwrap();
        let hexes = find_six_cycles(&dec);
        assert!(!hexes.is_empty());
        let adjacent = |a: usize, b: usize| (dec.word(a).raw() ^ dec.word(b).raw()).count_ones() == 1;
        for h in &hexes {
            let vs = h.vertices();
            assert_eq!(vs.iter().collect::<HashSet<_>>().len(), 6);
            for j in 0..6 {
                assert!(adjacent(vs[j], vs[(j + 1) % 6]));
            }
            assert!(h.color >= 2);
            assert_ne!(h.host, h.target);
            assert_eq!(dec.cycle_of(h.u), h.host);
            assert_eq!(dec.cycle_of(h.v), h.host);
            assert_eq!(dec.cycle_of(h.u2), h.target);
            assert_eq!(dec.cycle_of(h.v2), h.target);
            assert!(dec.w01(h.u2).contains(&h.v2));
            let len = dec.cycle(h.host).len();
            let pv = dec.position(h.v);
            let gap = if h.ahead {
                (pv + len - h.position) % len
            } else {
                (h.position + len - pv) % len
            };
            assert_eq!(gap, 5);
        }
    }
}

#[test]
fn every_hexagon_merges_two_cycles() {
    let budget = Budget::default();
    for k in 3..=4 {
        let dec = two_factor_w01(k, &budget).unwrap();
        for h in find_six_cycles(&dec) {
            let merged: HashSet<usize> = merged_cycle(&dec, &h).into_iter().collect();
            let expected: HashSet<usize> = dec
                .cycle(h.host)
                .iter()
                .chain(dec.cycle(h.target))
                .copied()
                .collect();
            assert_eq!(merged, expected);
        }
    }
}

#[test]
fn cycle_digraph_reaches_the_root() {
    let budget = Budget::default();
    for k in 3..=6 {
        let dec = two_factor_w01(k, &budget).unwrap();
        let hexes = find_six_cycles(&dec);
        let d = CycleDigraph::new(dec.cycle_count(), &hexes);
        assert!(d.reaching(dec.root()).iter().all(|&b| b), "k={k}");
        assert!(d.to_dot(&[]).starts_with("digraph"));
    }
}

#[test]
fn every_cycle_hosts_hexagons() {
    for k in 3..=6 {
        let dec = two_factor_w01(k, &Budget::default()).unwrap();
        let hosts: BTreeSet<usize> = find_six_cycles(&dec).iter().map(|h| h.host).collect();
        assert_eq!(hosts.len(), dec.cycle_count(), "k={k}");
    }
}

#[test]
fn observed_counts_against_closed_forms() {
    let budget = Budget::default();
    for k in 2..=6 {
        let n = 2 * k + 1;
        let dec = two_factor_w01(k, &budget).unwrap();
        let labels = label_cycles(&dec).unwrap();
        let hexes = find_six_cycles(&dec);
        let d = CycleDigraph::new(dec.cycle_count(), &hexes);
        let pairs = chords(&dec);
        for (i, l) in labels.iter().enumerate() {
            let predicted = 2 * n * l.leaves / l.tau;
            let found_pairs = pairs.iter().filter(|c| c.0 == i).count();
            println!(
                "k={k} cycle {i}: length {}, hexagons {} (2n t/tau = {predicted}), chords {found_pairs}, \
                 tau {}, leaves {}, xi {}, enantiomorphic {}",
                l.length,
                d.out_degree(i),
                l.tau,
                l.leaves,
                l.xi,
                l.enantiomorphic
            );
            assert_eq!(l.length, 2 * k * (4 * k + 2) / l.tau, "k={k} cycle {i}");
            assert_eq!(found_pairs, predicted, "k={k} cycle {i}");
            assert!(d.out_degree(i) <= found_pairs, "k={k} cycle {i}");
        }
    }
}
