mod support;

use lexideal::complexes::complex_of_ideal;
use lexideal::{homology, MonomialIdeal, Ring};
use proptest::prelude::*;
use support::{ideal, ideal_pair, mono};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sum_and_intersection_commute((a, b) in ideal_pair(1, 8, 6)) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        let again = MonomialIdeal::minimalize(a.ring(), a.gens().iter().copied()).unwrap();
        prop_assert_eq!(again, a);
    }

    #[test]
    fn sum_and_intersection_associate(((a, b), c) in ideal_pair(1, 7, 5).prop_flat_map(|(a, b)| {
        let n = a.n();
        (Just((a, b)), ideal(n, n, 5))
    })) {
        prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
        let left = a.intersect(&b).unwrap().intersect(&c).unwrap();
        prop_assert_eq!(left, a.intersect(&b.intersect(&c).unwrap()).unwrap());
    }

    #[test]
    fn alexander_dual_is_an_involution(i in ideal(1, 8, 10)) {
        prop_assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
    }

    #[test]
    fn membership_agrees_with_decomposition(i in ideal(1, 7, 8), bits in any::<u64>()) {
        let n = i.n();
        let m = mono(i.ring(), bits & ((1u64 << n) - 1));
        let d = i.decompose().unwrap();
        let via_primes = d.components().iter().all(|p| p.vars().iter().any(|&v| m.contains_var(v)));
        prop_assert_eq!(i.contains(m).unwrap(), via_primes);
        if i.contains(m).unwrap() && m.degree() >= 1 {
            prop_assert!(i.graded_component(m.degree()).unwrap().contains(m).unwrap());
        }
    }

    #[test]
    fn complex_round_trip(i in ideal(1, 8, 10)) {
        let delta = complex_of_ideal(&i).unwrap();
        prop_assert_eq!(delta.ideal(), i.clone());
        let decomp = delta.facet_decomposition();
        prop_assert_eq!(decomp.to_ideal(), i.clone());
        prop_assert_eq!(&decomp, &i.decompose().unwrap());
        // dual generators are the facet complements
        let mut complements: Vec<Vec<usize>> = delta
            .facets()
            .iter()
            .map(|f| (1..=i.n()).filter(|v| !f.contains(v)).collect())
            .collect();
        complements.sort();
        let mut dual: Vec<Vec<usize>> = i.alexander_dual().unwrap().gens().iter().map(|g| g.support()).collect();
        dual.sort();
        prop_assert_eq!(dual, complements);
        let max_facet = delta.facets().iter().map(Vec::len).max().unwrap_or(0);
        prop_assert_eq!(homology::dim(&i).unwrap(), max_facet);
    }
}

#[test]
fn dual_involution_exhaustive_up_to_four() {
    for n in 1..=4 {
        let ring = Ring::new(n).unwrap();
        let subsets: Vec<u64> = (1..(1u64 << n)).collect();
        // every family of generators, minimalized; duplicates are harmless
        for family in 1u64..(1 << subsets.len()) {
            let gens = subsets.iter().enumerate().filter(|(k, _)| family >> k & 1 == 1).map(|(_, &m)| mono(ring, m));
            let i = MonomialIdeal::minimalize(ring, gens).unwrap();
            assert_eq!(i.alexander_dual().unwrap().alexander_dual().unwrap(), i);
            assert_eq!(complex_of_ideal(&i).unwrap().ideal(), i);
        }
    }
}
