use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use proptest::prelude::*;
use soergel::coxeter::{CoxeterMatrix, CoxeterSystem, Element, Side};

/// All words obtained from `word` by braid moves.
fn braid_class(cm: &CoxeterMatrix, word: &[usize]) -> HashSet<Vec<usize>> {
    let mut seen = HashSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for s in 0..cm.rank() {
            for t in 0..cm.rank() {
                let Some(m) = cm.order(s, t) else { continue };
                if s == t {
                    continue;
                }
                let m = m as usize;
                let lhs: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect();
                let rhs: Vec<usize> = (0..m).map(|i| if i % 2 == 0 { t } else { s }).collect();
                for i in 0..=w.len().saturating_sub(m) {
                    if w.len() >= m && w[i..i + m] == lhs[..] {
                        let mut v = w.clone();
                        v[i..i + m].copy_from_slice(&rhs);
                        if seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
        }
    }
    seen
}

/// Tits: repeatedly cancel `ss` anywhere in the braid class.
fn tits_reduce(cm: &CoxeterMatrix, word: &[usize]) -> HashSet<Vec<usize>> {
    let mut current = word.to_vec();
    'outer: loop {
        let class = braid_class(cm, &current);
        for w in &class {
            if let Some(i) = w.windows(2).position(|p| p[0] == p[1]) {
                let mut v = w.clone();
                v.drain(i..i + 2);
                current = v;
                continue 'outer;
            }
        }
        return class;
    }
}

fn systems() -> Vec<Arc<CoxeterSystem>> {
    let mut out: Vec<_> = [Some(2), Some(3), Some(4), Some(5), None]
        .into_iter()
        .map(|m| CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap()).unwrap())
        .collect();
    out.push(CoxeterSystem::new(CoxeterMatrix::type_a(3).unwrap()).unwrap());
    out
}

fn subword_lower_set(sys: &CoxeterSystem, x: Element) -> BTreeSet<Element> {
    let w = sys.word(x);
    let mut set = BTreeSet::new();
    for mask in 0u32..(1 << w.len()) {
        let sub: Vec<usize> = (0..w.len()).filter(|i| mask & (1 << i) != 0).map(|i| w[i]).collect();
        set.insert(sys.element_from_word(&sub));
    }
    set
}

#[test]
fn bruhat_matches_subword_property() {
    for sys in systems() {
        let elems = sys.elements_up_to_length(6);
        for &x in &elems {
            let lower = subword_lower_set(&sys, x);
            assert_eq!(lower.len(), sys.lower_interval(x).len());
            for &y in &elems {
                assert_eq!(sys.bruhat_leq(y, x).unwrap(), lower.contains(&y));
            }
        }
    }
}

#[test]
fn property_z() {
    for sys in systems() {
        let elems = sys.elements_up_to_length(5);
        for &x in &elems {
            for &y in &elems {
                for s in 0..sys.rank() {
                    let sy_up = !sys.descends(y, s, Side::Left);
                    let sx_down = sys.descends(x, s, Side::Left);
                    if sy_up && sx_down && y != x && sys.bruhat_leq(y, x).unwrap() {
                        assert!(sys.bruhat_leq(y, sys.lmul(s, x)).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn inversion_count_equals_length() {
    for sys in systems() {
        let refl = sys.reflections_up_to_length(11);
        for y in sys.elements_up_to_length(5) {
            let n = refl
                .iter()
                .filter(|&&t| sys.length(sys.multiply(y, t).unwrap()) < sys.length(y))
                .count();
            assert_eq!(n, sys.length(y));
        }
    }
}

#[test]
fn reflection_test_matches_conjugation() {
    for sys in systems() {
        assert_eq!(sys.reflections_up_to_length(7), sys.reflections_by_conjugation(7));
    }
}

#[test]
fn element_invariants() {
    for sys in systems() {
        for x in sys.elements_up_to_length(6) {
            let w = sys.word(x);
            assert_eq!(w.len(), sys.length(x));
            assert_eq!(sys.geometric_rep().matrix_of_word(&w), sys.key(x));
            assert_eq!(x.is_identity(), w.is_empty());
            assert_eq!(x.is_identity(), sys.key(x).is_identity());
            let inv = sys.inverse(x).unwrap();
            assert_eq!(sys.multiply(x, inv).unwrap(), sys.identity());
        }
    }
}

#[test]
fn s4_has_24_elements() {
    let sys = CoxeterSystem::new(CoxeterMatrix::type_a(3).unwrap()).unwrap();
    let all = sys.elements_up_to_length(10);
    assert_eq!(all.len(), 24);
    assert_eq!(all.iter().map(|&x| sys.length(x)).max(), Some(6));
}

proptest! {
    #[test]
    fn multiplication_matches_tits_rewriting(
        which in 0usize..6,
        a in proptest::collection::vec(0usize..3, 0..=8),
        b in proptest::collection::vec(0usize..3, 0..=8),
    ) {
        let sys = &systems()[which];
        let n = sys.rank();
        let a: Vec<usize> = a.into_iter().map(|s| s % n).collect();
        let b: Vec<usize> = b.into_iter().map(|s| s % n).collect();
        let x = sys.multiply(sys.element_from_word(&a), sys.element_from_word(&b)).unwrap();
        let joined: Vec<usize> = a.iter().chain(&b).copied().collect();
        let class = tits_reduce(sys.matrix(), &joined);
        prop_assert!(class.contains(&sys.word(x)));
        prop_assert_eq!(class.iter().next().unwrap().len(), sys.length(x));
        // ShortLex: the stored word is the least reduced word.
        prop_assert_eq!(class.iter().min().unwrap(), &sys.word(x));
    }
}
