use std::collections::{BTreeSet, HashSet};

use germs::{catalan, enumerate, Germ, GermIndex};
use proptest::prelude::*;
use treecodec::{
    atoms, castle, reflect_phi, rotate_germ, theta, theta_reroot, tree_of_code, uncastle, OrderedTree,
    Symbol, TreeCode,
};

#[test]
fn castle_is_a_bijection_up_to_nine() {
    for k in 1..=9 {
        let mut seen = HashSet::new();
        for g in enumerate(k) {
            let code = castle(&g);
            code.validate().unwrap();
            assert_eq!(uncastle(&code).unwrap(), g);
            assert!(seen.insert(code));
        }
    }
}

#[test]
fn castle_codes_have_the_dyck_form() {
    // 0 v 1 u * with v and u balanced
    fn balanced(s: &[Symbol]) -> bool {
        let mut depth = 0i32;
        for sym in s {
            depth += if sym.is_star() { -1 } else { 1 };
            if depth < 0 {
                return false;
            }
        }
        depth == 0
    }
    for k in 1..=8 {
        for g in enumerate(k) {
            let code = castle(&g);
            let s = code.symbols();
            let one = s.iter().position(|&x| x == Symbol::Color(1)).unwrap();
            assert_eq!(s[0], Symbol::Color(0));
            assert_eq!(*s.last().unwrap(), Symbol::Star);
            assert!(balanced(&s[1..one]), "{code}");
            assert!(balanced(&s[one + 1..s.len() - 1]), "{code}");
        }
    }
}

#[test]
fn invariant_checker_accepts_exactly_castled_codes_at_small_k() {
    // brute force over all arrangements for k <= 4
    fn arrangements(k: usize) -> Vec<Vec<Symbol>> {
        let mut out = Vec::new();
        let n = 2 * k + 1;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let stars: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let slots: Vec<usize> = (0..n).filter(|i| !stars.contains(i)).collect();
            permute(&mut (0..=k as u8).collect(), 0, &mut |perm| {
                let mut s = vec![Symbol::Star; n];
                for (slot, &c) in slots.iter().zip(perm.iter()) {
                    s[*slot] = Symbol::Color(c);
                }
                out.push(s);
            });
        }
        out
    }
    fn permute(v: &mut Vec<u8>, i: usize, f: &mut impl FnMut(&[u8])) {
        if i == v.len() {
            f(v);
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            permute(v, i + 1, f);
            v.swap(i, j);
        }
    }
    for k in 1..=4 {
        let castled: HashSet<TreeCode> = enumerate(k).iter().map(castle).collect();
        let mut valid = 0;
        for s in arrangements(k) {
            if let Ok(code) = TreeCode::new(s) {
                valid += 1;
                assert_eq!(castled.contains(&code), uncastle(&code).is_ok());
            }
        }
        println!(
            "k={k}: {valid} codes pass the structural checks, {} are castled",
            castled.len()
        );
    }
}

#[test]
fn tree_roundtrip_at_five() {
    let codes: Vec<TreeCode> = enumerate(5).iter().map(castle).collect();
    assert_eq!(codes.len(), 42);
    for code in codes {
        let tree = tree_of_code(&code);
        assert_eq!(tree.edge_count(), 5);
        assert_eq!(tree.code(), code);
    }
}

fn ranks_along_rotation(start: &str) -> Vec<usize> {
    let g = Germ::parse(start).unwrap();
    let index = GermIndex::new(g.k());
    let mut out = vec![index.rank(&g).unwrap()];
    let mut cur = rotate_germ(&g);
    while cur != g {
        out.push(index.rank(&cur).unwrap());
        cur = rotate_germ(&cur);
    }
    out
}

#[test]
fn rotation_orbit_example() {
    assert_eq!(ranks_along_rotation("112"), vec![9, 2, 4, 11, 5, 6, 12, 7]);
}

#[test]
fn rotation_orbits_divide_twice_k() {
    for k in 1..=7 {
        for g in enumerate(k) {
            let orbit = OrderedTree::from_code(&castle(&g)).rotation_orbit();
            assert_eq!((2 * k) % orbit.len(), 0, "germ {g}");
        }
    }
}

#[test]
fn plane_class_counts() {
    let expected = [1, 1, 2, 3, 6, 14, 34];
    for (k, &count) in (1..=7).zip(expected.iter()) {
        let mut classes = BTreeSet::new();
        let mut orbit_total = 0;
        for g in enumerate(k) {
            let tree = OrderedTree::from_code(&castle(&g));
            let canon = tree.plane_canonical();
            if classes.insert(canon) {
                let distinct: HashSet<_> = tree.rotation_orbit().into_iter().collect();
                orbit_total += distinct.len();
            }
        }
        assert_eq!(classes.len(), count, "k={k}");
        assert_eq!(orbit_total as u64, catalan(k));
    }
}

#[test]
fn reflection_is_an_involution() {
    for k in 1..=8 {
        for g in enumerate(k) {
            assert_eq!(reflect_phi(&reflect_phi(&g)), g);
        }
    }
}

#[test]
fn reroot_is_an_involution() {
    for k in 1..=10 {
        for g in enumerate(k) {
            assert_eq!(theta_reroot(&theta_reroot(&g)), g);
        }
    }
}

#[test]
fn reroot_fixes_the_path_and_the_star() {
    for k in 1..=10 {
        assert!(theta_reroot(&Germ::zero(k)).is_zero());
        let star = Germ::new((1..k as u8).collect()).unwrap();
        assert_eq!(theta_reroot(&star), star);
    }
}

#[test]
fn atoms_reassemble() {
    for k in 1..=8 {
        for g in enumerate(k) {
            let d = atoms(&g);
            assert_eq!(d.reassemble(), g.digits());
            let base = d.base();
            assert_eq!(base, (1..=g.max_digit()).collect::<Vec<u8>>());
            for a in d.atoms() {
                let first = a.digits[0];
                assert!(a.digits.len() == 1 || first > 0);
                assert!(a.digits.windows(2).all(|w| w[1] == w[0] + 1));
            }
        }
    }
}

#[test]
fn theta_has_weight_k() {
    for k in 1..=7 {
        for g in enumerate(k) {
            let w = theta(&g);
            assert_eq!((w.len(), w.weight()), (2 * k + 1, k));
            assert_eq!(w.aleph().weight(), k + 1);
        }
    }
}

proptest! {
    #[test]
    fn uncastle_rejects_or_inverts(bits in proptest::collection::vec(0u8..8, 7..=7), stars in proptest::collection::vec(any::<bool>(), 7..=7)) {
        let s: Vec<Symbol> = bits.iter().zip(&stars).map(|(&b, &st)| if st { Symbol::Star } else { Symbol::Color(b) }).collect();
        if let Ok(code) = TreeCode::new(s) {
            if let Ok(g) = uncastle(&code) {
                prop_assert_eq!(castle(&g), code);
            }
        }
    }
}
