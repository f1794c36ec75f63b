use std::collections::HashSet;

use num_complex::Complex64;
use orbit_fusion::{
    append_zero, enumerate_labels, enumerate_level_weights, enumerate_orbit, label_count,
    label_of_tuple, lift_level, orbit_size, orbit_to_weight, product, standard_form,
    weight_to_orbit, FusionTable, Method, OrbitLabel, Params, FUSION_TOLERANCE,
};
use proptest::prelude::*;

/// A random label for some `(N, k)` with `N <= 4`, `k <= 6`.
fn arb_label() -> impl Strategy<Value = OrbitLabel> {
    (2u32..=4, 1u32..=6).prop_flat_map(|(n, k)| {
        let labels: Vec<OrbitLabel> = enumerate_labels(Params::new(n, k).unwrap()).collect();
        proptest::sample::select(labels)
    })
}

fn arb_pair() -> impl Strategy<Value = (OrbitLabel, OrbitLabel)> {
    (2u32..=3, 1u32..=4).prop_flat_map(|(n, k)| {
        let labels: Vec<OrbitLabel> = enumerate_labels(Params::new(n, k).unwrap()).collect();
        (
            proptest::sample::select(labels.clone()),
            proptest::sample::select(labels),
        )
    })
}

proptest! {
    #[test]
    fn standard_form_roundtrips(l in arb_label()) {
        let sf = standard_form(&l);
        prop_assert_eq!(label_of_tuple(l.params(), sf.entries()).unwrap(), l.clone());
        prop_assert_eq!(l.mults().iter().sum::<u32>(), l.level());
    }

    #[test]
    fn orbit_enumeration_is_exact(l in arb_label()) {
        let tuples: Vec<_> = enumerate_orbit(&l).unwrap().collect();
        prop_assert_eq!(tuples.len() as u128, orbit_size(&l).unwrap());
        let distinct: HashSet<_> = tuples.iter().collect();
        prop_assert_eq!(distinct.len(), tuples.len());
        prop_assert_eq!(&tuples[0], &standard_form(&l));
        for t in &tuples {
            prop_assert_eq!(&label_of_tuple(l.params(), t.entries()).unwrap(), &l);
        }
    }

    #[test]
    fn product_is_commutative((a, b) in arb_pair()) {
        for m in Method::ALL {
            prop_assert_eq!(product(&a, &b, m).unwrap(), product(&b, &a, m).unwrap());
        }
    }

    #[test]
    fn product_conserves_charge((a, b) in arb_pair()) {
        let n = a.modulus();
        let e = product(&a, &b, Method::Blockwise).unwrap();
        for (c, coeff) in e.iter() {
            prop_assert!(coeff > 0);
            prop_assert_eq!((a.charge() + b.charge()) % n, c.charge());
        }
    }

    #[test]
    fn coefficient_total_counts_stabilizer_classes((a, b) in arb_pair()) {
        // Independent count: y's up to permutations fixing the standard form
        // of a, i.e. distinct multisets of (a_hat_i, y_i) columns.
        let a_hat = standard_form(&a).into_entries();
        let classes: HashSet<Vec<(u32, u32)>> = enumerate_orbit(&b)
            .unwrap()
            .map(|y| {
                let mut cols: Vec<(u32, u32)> =
                    a_hat.iter().copied().zip(y.entries().iter().copied()).collect();
                cols.sort_unstable();
                cols
            })
            .collect();
        let e = product(&a, &b, Method::Blockwise).unwrap();
        prop_assert_eq!(e.total(), classes.len() as u64);
    }

    #[test]
    fn lift_matches_append_zero(l in arb_label()) {
        let w = orbit_to_weight(&l);
        prop_assert_eq!(weight_to_orbit(&lift_level(&w)), append_zero(&l));
    }
}

#[test]
fn orbit_sizes_partition_the_group() {
    for n in 2..=4u32 {
        for k in 1..=6u32 {
            let params = Params::new(n, k).unwrap();
            let total: u128 = enumerate_labels(params)
                .map(|l| orbit_size(&l).unwrap())
                .sum();
            assert_eq!(total, u128::from(n).pow(k));
            assert_eq!(
                enumerate_labels(params).count() as u128,
                label_count(params)
            );
            let distinct: HashSet<OrbitLabel> = enumerate_labels(params).collect();
            assert_eq!(distinct.len() as u128, label_count(params));
        }
    }
}

#[test]
fn level_weights_count() {
    for n in 2..=4u32 {
        for k in 1..=6u32 {
            let params = Params::new(n, k).unwrap();
            assert_eq!(
                enumerate_level_weights(params).len() as u128,
                label_count(params)
            );
        }
    }
}

#[test]
fn verlinde_sums_are_integral() {
    for n in 2..=3u32 {
        for k in 1..=4u32 {
            let table = FusionTable::new(Params::new(n, k).unwrap());
            let ws = table.weights();
            for l in ws {
                for m in ws {
                    for v in ws {
                        let raw: Complex64 = table.raw(l, m, v).unwrap();
                        let r = raw.re.round();
                        assert!(r >= 0.0);
                        assert!((raw.re - r).abs() <= FUSION_TOLERANCE, "{raw}");
                        assert!(raw.im.abs() <= FUSION_TOLERANCE, "{raw}");
                    }
                }
            }
        }
    }
}
