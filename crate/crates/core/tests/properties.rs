use proptest::prelude::*;

use quiver_schur::combinatorics::{
    enumerate_standard, partitions, std_relative, Multicharge, Multipartition, RelativeMode,
    StandardTableau,
};
use quiver_schur::roots::{block_containing, content, defect};

fn arb_multipartition(max_n: usize, level: usize) -> impl Strategy<Value = Multipartition> {
    (0..=max_n)
        .prop_flat_map(move |n| {
            proptest::collection::vec(0..=n, level).prop_map(move |cuts| (n, cuts))
        })
        .prop_flat_map(|(n, mut cuts)| {
            cuts.sort_unstable();
            let mut sizes = Vec::new();
            let mut prev = 0;
            for c in cuts.iter().skip(1) {
                sizes.push(c - prev);
                prev = *c;
            }
            sizes.push(n - prev);
            sizes
                .into_iter()
                .map(|k| {
                    let all = partitions(k);
                    (0..all.len()).prop_map(move |i| all[i].clone())
                })
                .collect::<Vec<_>>()
        })
        .prop_map(|comps| Multipartition::new(comps).unwrap())
}

fn arb_charge(level: usize) -> impl Strategy<Value = Multicharge> {
    proptest::collection::vec(-3i64..=3, level).prop_map(|k| Multicharge::new(k, 0).unwrap())
}

fn arb_case() -> impl Strategy<Value = (Multipartition, Multicharge)> {
    (1usize..=3).prop_flat_map(|level| (arb_multipartition(6, level), arb_charge(level)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution((lambda, _mc) in arb_case()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda);
    }

    #[test]
    fn conjugation_reverses_dominance((a, mc) in arb_case(), seed in any::<u64>()) {
        let b = block_containing(&a, &mc).unwrap();
        let other = &b.members[(seed as usize) % b.members.len()];
        prop_assert_eq!(
            a.dominates(other).unwrap(),
            other.conjugate().dominates(&a.conjugate()).unwrap()
        );
    }

    #[test]
    fn degree_plus_codegree_is_defect((lambda, mc) in arb_case()) {
        let d = defect(&mc, &content(&lambda, &mc)).unwrap();
        for t in enumerate_standard(&lambda) {
            let (deg, codeg) = t.degree_codegree(&mc);
            prop_assert_eq!(deg + codeg, d);
        }
    }

    #[test]
    fn conjugate_statistics_swap((lambda, mc) in arb_case()) {
        let dual = mc.conjugate();
        for t in enumerate_standard(&lambda) {
            let tc = t.conjugate();
            let (deg, codeg) = t.degree_codegree(&mc);
            prop_assert_eq!(tc.degree_codegree(&dual), (codeg, deg));
            let neg: Vec<i64> = t.residue_sequence(&mc).iter().map(|r| -r).collect();
            prop_assert_eq!(tc.residue_sequence(&dual), neg);
        }
    }

    #[test]
    fn initial_and_final_bound_every_tableau((lambda, _mc) in arb_case()) {
        let top = StandardTableau::initial(&lambda);
        let bottom = StandardTableau::final_(&lambda);
        for t in enumerate_standard(&lambda) {
            prop_assert!(top.dominates(&t).unwrap());
            prop_assert!(t.dominates(&bottom).unwrap());
        }
    }

    #[test]
    fn tableaux_determined_by_residues_and_components((lambda, mc) in arb_case()) {
        let mut seen = std::collections::BTreeSet::new();
        for t in enumerate_standard(&lambda) {
            prop_assert!(seen.insert((t.residue_sequence(&mc), t.component_sets())));
        }
    }

    #[test]
    fn relative_sets_contain_reference((mu, mc) in arb_case()) {
        let up = std_relative(&mu, &mu, RelativeMode::Upper, &mc).unwrap();
        prop_assert_eq!(up, vec![StandardTableau::initial(&mu)]);
        let down = std_relative(&mu, &mu, RelativeMode::Lower, &mc).unwrap();
        prop_assert_eq!(down, vec![StandardTableau::final_(&mu)]);
    }

    #[test]
    fn text_and_json_round_trip((lambda, _mc) in arb_case()) {
        prop_assert_eq!(lambda.to_string().parse::<Multipartition>().unwrap(), lambda.clone());
        let js = serde_json::to_string(&lambda).unwrap();
        prop_assert_eq!(serde_json::from_str::<Multipartition>(&js).unwrap(), lambda.clone());
        for t in enumerate_standard(&lambda).into_iter().take(5) {
            let js = serde_json::to_string(&t).unwrap();
            prop_assert_eq!(serde_json::from_str::<StandardTableau>(&js).unwrap(), t);
        }
    }
}
