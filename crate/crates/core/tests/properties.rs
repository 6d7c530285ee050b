mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use common::{catalog_upto, check_system_properties, system_of};
use uindep::diagram::{catalog_names, Crossing};
use uindep::indep::{exchange_property, independence_isomorphic, is_valid_partition, verify_isomorphism, SweepOptions};
use uindep::{analyze, conway_to_pd, load_catalog, parse_pd, ConwaySpec, CrossingSet, PlanarDiagram};

#[test]
fn system_properties_on_catalog() {
    for (name, d) in catalog_upto(8) {
        check_system_properties(&name, &d).unwrap();
    }
    check_system_properties("unknot", &PlanarDiagram::unknot()).unwrap();
}

#[test]
fn system_properties_on_switched_diagrams() {
    for name in ["5_2", "6_2", "7_6"] {
        let d = load_catalog(name).unwrap();
        let s = d.switch_crossings(CrossingSet::from_mask(0b101)).unwrap();
        check_system_properties(name, &s).unwrap();
    }
}

#[test]
fn maximal_independent_need_not_be_unknotting() {
    let (m, sys) = system_of(&load_catalog("7_3").unwrap());
    let minimal: BTreeSet<_> = sys.minimal_unknotting_sets().iter().copied().collect();
    let extra: Vec<_> = sys.maximal_independent_sets().into_iter().filter(|s| !minimal.contains(s)).collect();
    assert!(!extra.is_empty());
    assert!(extra.iter().all(|&s| !m.is_unknotting(s)));
}

#[test]
fn mirror_invariance() {
    for (name, d) in catalog_upto(8) {
        let (_, a) = system_of(&d);
        let (_, b) = system_of(&d.mirror());
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn exchange_and_matroid_force_equal_sizes() {
    for (name, d) in catalog_upto(8) {
        let (_, sys) = system_of(&d);
        let minimal = sys.minimal_unknotting_sets();
        if exchange_property(minimal).is_ok() {
            assert!(minimal.iter().all(|s| s.len() == minimal[0].len()), "{name}");
        }
        if sys.is_matroid() {
            let bases = sys.maximal_independent_sets();
            assert!(bases.iter().all(|s| s.len() == bases[0].len()), "{name}");
        }
    }
}

#[test]
fn chromatic_witness_and_lower_bound() {
    for (name, d) in catalog_upto(8) {
        let (_, sys) = system_of(&d);
        let c = sys.chromatic_number().unwrap();
        assert!(is_valid_partition(&sys, &c.partition), "{name}");
        assert_eq!(c.partition.len(), c.number);
        assert!(c.number == 1 || sys.partition_into(c.number - 1).is_none(), "{name}");
    }
}

#[test]
fn sweep_is_independent_of_worker_count() {
    let d = load_catalog("8_2").unwrap();
    let one = analyze("8_2", &d, &SweepOptions { workers: 1, ..Default::default() }).unwrap().report;
    let four = analyze("8_2", &d, &SweepOptions { workers: 4, ..Default::default() }).unwrap().report;
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
}

#[test]
fn report_json_round_trips() {
    for (name, d) in catalog_upto(7) {
        let r = analyze(&name, &d, &SweepOptions::default()).unwrap().report;
        let back: uindep::AnalysisReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}

fn permuted(d: &PlanarDiagram, perm: &[usize]) -> PlanarDiagram {
    // Crossing i moves to position perm[i].
    let mut xs: Vec<Option<Crossing>> = vec![None; perm.len()];
    for (i, c) in d.crossings().iter().enumerate() {
        xs[perm[i]] = Some(*c);
    }
    PlanarDiagram::new(xs.into_iter().map(Option::unwrap).collect()).unwrap()
}

fn catalog_index() -> impl Strategy<Value = PlanarDiagram> {
    let names: Vec<&'static str> = catalog_names().into_iter().filter(|n| !n.starts_with("8") && !n.starts_with("10")).collect();
    prop::sample::select(names).prop_map(|n| load_catalog(n).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn switch_is_an_involution(d in catalog_index(), a in any::<u32>(), b in any::<u32>()) {
        let full = CrossingSet::full(d.crossing_count()).mask();
        let (s, t) = (CrossingSet::from_mask(a & full), CrossingSet::from_mask(b & full));
        let once = d.switch_crossings(s).unwrap();
        prop_assert_eq!(&once.switch_crossings(s).unwrap(), &d);
        prop_assert_eq!(once.switch_crossings(t).unwrap(), d.switch_crossings(s.symmetric_difference(t)).unwrap());
        if !s.is_empty() {
            prop_assert_ne!(&once, &d);
        }
    }

    #[test]
    fn pd_text_round_trips(d in catalog_index(), mask in any::<u32>(), sep in prop::sample::select(vec![" ", ",", "\n", ", "])) {
        let s = d.switch_crossings(CrossingSet::from_mask(mask & CrossingSet::full(d.crossing_count()).mask())).unwrap();
        let text = s.to_pd_string().replace(' ', sep);
        prop_assert_eq!(parse_pd(&text).unwrap(), s);
    }

    #[test]
    fn conway_output_is_reduced_alternating(word in prop::collection::vec(1i32..5, 1..4)) {
        let spec = ConwaySpec::new(word.clone()).unwrap();
        match conway_to_pd(&spec) {
            Ok(d) => {
                prop_assert!(spec.fraction().0 % 2 == 1);
                prop_assert!(d.is_alternating());
                prop_assert_eq!(d.crossing_count(), word.iter().sum::<i32>() as usize);
                prop_assert_eq!(d.writhe().unsigned_abs() as usize <= d.crossing_count(), true);
            }
            Err(uindep::Error::MultiComponent(2)) => prop_assert!(spec.fraction().0 % 2 == 0),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn relabeled_systems_are_isomorphic(d in catalog_index(), seed in any::<u64>()) {
        let n = d.crossing_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut x = seed | 1;
        for i in (1..n).rev() {
            x ^= x << 13; x ^= x >> 7; x ^= x << 17;
            perm.swap(i, (x % (i as u64 + 1)) as usize);
        }
        let (_, a) = system_of(&d);
        let (_, b) = system_of(&permuted(&d, &perm));
        let expected: Vec<CrossingSet> = {
            let mut v: Vec<_> = a.minimal_unknotting_sets().iter().map(|s| s.map(&perm)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(b.minimal_unknotting_sets(), expected.as_slice());
        let phi = independence_isomorphic(&a, &b);
        prop_assert!(phi.is_some());
        let phi = phi.unwrap();
        prop_assert!(verify_isomorphism(&a, &b, &phi));
        prop_assert_eq!(a.independent_profile(), b.independent_profile());
        prop_assert_eq!(a.chromatic_number().unwrap().number, b.chromatic_number().unwrap().number);
    }
}
