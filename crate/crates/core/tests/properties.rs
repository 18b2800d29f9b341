use proptest::prelude::*;

use pyramidal_core::group::{Factor, GroupSpec};
use pyramidal_core::sequences::{find_extended_skolem, skolem_exists};

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        (1u32..=9).prop_map(Factor::Cyclic),
        (1u32..=5).prop_map(Factor::Dihedral),
    ]
}

fn group() -> impl Strategy<Value = GroupSpec> {
    prop::collection::vec(factor(), 1..=3).prop_map(|f| GroupSpec::new(f).unwrap())
}

/// A group together with three element indices in it.
fn group_and_three() -> impl Strategy<Value = (GroupSpec, usize, usize, usize)> {
    group().prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn composition_is_associative((g, a, b, c) in group_and_three()) {
        let (a, b, c) = (g.element_at(a), g.element_at(b), g.element_at(c));
        let left = g.compose(&g.compose(&a, &b).unwrap(), &c).unwrap();
        let right = g.compose(&a, &g.compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_identity((g, a, _, _) in group_and_three()) {
        let a = g.element_at(a);
        let inv = g.invert(&a).unwrap();
        prop_assert_eq!(g.compose(&a, &inv).unwrap(), g.identity());
        prop_assert_eq!(g.compose(&inv, &a).unwrap(), g.identity());
        prop_assert_eq!(g.compose(&a, &g.identity()).unwrap(), a);
    }

    #[test]
    fn index_arithmetic_agrees((g, a, b, _) in group_and_three()) {
        let (ea, eb) = (g.element_at(a), g.element_at(b));
        prop_assert_eq!(g.index_of(&ea).unwrap(), a);
        prop_assert_eq!(
            g.element_at(g.compose_index(a, b)),
            g.compose(&ea, &eb).unwrap()
        );
        prop_assert_eq!(g.element_at(g.invert_index(a)), g.invert(&ea).unwrap());
    }

    #[test]
    fn right_difference_is_translation_invariant((g, a, b, t) in group_and_three()) {
        let (a, b, t) = (g.element_at(a), g.element_at(b), g.element_at(t));
        let at = g.compose(&a, &t).unwrap();
        let bt = g.compose(&b, &t).unwrap();
        prop_assert_eq!(
            g.right_difference(&at, &bt).unwrap(),
            g.right_difference(&a, &b).unwrap()
        );
    }

    #[test]
    fn descriptors_round_trip(g in group()) {
        let text = g.to_string();
        prop_assert_eq!(text.parse::<GroupSpec>().unwrap(), g);
    }

    #[test]
    fn patterned_starter_halves_odd_groups(ms in prop::collection::vec(0u32..4, 1..=3)) {
        let factors = ms.iter().map(|&m| Factor::Cyclic(2 * m + 1)).collect();
        let g = GroupSpec::new(factors).unwrap();
        let starter = g.patterned_starter().unwrap();
        prop_assert_eq!(starter.len(), (g.order() - 1) / 2);
        let mut all: Vec<_> = starter
            .iter()
            .flat_map(|h| [h.clone(), g.invert(h).unwrap()])
            .collect();
        all.sort();
        all.dedup();
        prop_assert_eq!(all.len(), g.order() - 1);
    }

    #[test]
    fn skolem_search_is_deterministic_and_valid(n in 1u32..=16, k_seed in 0u32..64) {
        let k = 1 + k_seed % (2 * n + 1);
        let first = find_extended_skolem(n, k).unwrap();
        prop_assert_eq!(first.is_some(), skolem_exists(n, k).unwrap());
        if let Some(s) = &first {
            prop_assert!(s.is_valid());
        }
        prop_assert_eq!(find_extended_skolem(n, k).unwrap(), first);
    }
}
