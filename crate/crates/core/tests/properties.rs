use proptest::prelude::*;
use tree_descent::poly::{
    brute_force_poly, complement_labeling, descent_count, is_symmetric, poly_by_deletion, Labeling, MemoStore,
};
use tree_descent::{canonical_code, descent_poly, DescentPolynomial, RootedForest};

/// Increasing parent array (entry `i` is 0 or a vertex `<= i`) scrambled by a
/// vertex permutation, so ids carry no structure.
fn forest(max: usize) -> impl Strategy<Value = RootedForest> {
    (1..=max)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (0..n).map(|i| 0..=i).collect();
            (parents, Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        })
        .prop_map(|(parents, perm)| {
            let mut scrambled = vec![None; parents.len()];
            for (v, &p) in parents.iter().enumerate() {
                scrambled[perm[v] - 1] = (p != 0).then(|| perm[p - 1]);
            }
            RootedForest::from_parents(&scrambled).unwrap()
        })
}

fn with_labeling(max: usize) -> impl Strategy<Value = (RootedForest, Labeling)> {
    forest(max).prop_flat_map(|f| {
        let n = f.size() as u32;
        (Just(f), Just((1..=n).collect::<Vec<u32>>()).prop_shuffle())
            .prop_map(|(f, w)| (f, Labeling::new(w).unwrap()))
    })
}

proptest! {
    #[test]
    fn shape_determines_code_and_polynomial(f in forest(9)) {
        let g = RootedForest::parse_nested(&f.serialize_nested()).unwrap();
        prop_assert_eq!(g.size(), f.size());
        prop_assert_eq!(canonical_code(&g), canonical_code(&f));
        let p = descent_poly(&f).unwrap();
        prop_assert_eq!(descent_poly(&g).unwrap(), p.clone());
        prop_assert!(is_symmetric(&p));
        p.check_normalized(f.size()).unwrap();
    }

    #[test]
    fn engines_agree_on_forests(f in forest(8)) {
        let auto = descent_poly(&f).unwrap();
        prop_assert_eq!(brute_force_poly(&f, 8).unwrap(), auto.clone());
        prop_assert_eq!(poly_by_deletion(&f, &mut MemoStore::new()).unwrap(), auto);
    }

    #[test]
    fn complement_swaps_descents_and_ascents((f, w) in with_labeling(12)) {
        let c = complement_labeling(&w, f.size()).unwrap();
        prop_assert_eq!(descent_count(&f, &w).unwrap() + descent_count(&f, &c).unwrap(), f.edge_count());
        prop_assert_eq!(c.complement(), w);
    }

    #[test]
    fn polynomial_json_round_trips(f in forest(30)) {
        let p = descent_poly(&f).unwrap();
        let text = serde_json::to_string(&p.to_json(f.size())).unwrap();
        let (q, n) = DescentPolynomial::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(q, p);
        prop_assert_eq!(n, f.size());
    }
}
