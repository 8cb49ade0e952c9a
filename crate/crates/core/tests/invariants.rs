use proptest::prelude::*;

use cyclotome::laurent::serre::multidegrees;
use cyclotome::{CycIndex, CycVec, CycVertex, DimVec, DynkinQuiver, DynkinType, VWPair};

fn quiver() -> impl Strategy<Value = DynkinQuiver> {
    prop_oneof![
        Just(DynkinType::A(2)),
        Just(DynkinType::A(3)),
        Just(DynkinType::A(4)),
        Just(DynkinType::D(4)),
    ]
    .prop_flat_map(|ty| {
        let all = DynkinQuiver::all_orientations(ty);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

/// Arbitrary integer vectors on `σÎ` and `Î`, not necessarily l-dominant.
fn pair(idx: &CycIndex, coeffs: &[i64]) -> VWPair {
    let v: CycVec = idx.sigma_i_hat().iter().copied().zip(coeffs.iter().copied()).collect();
    let w: CycVec = idx
        .i_hat()
        .iter()
        .copied()
        .zip(coeffs.iter().rev().copied())
        .collect();
    VWPair::new(v, w)
}

fn sigma_star(idx: &CycIndex, p: &VWPair) -> VWPair {
    VWPair::new(idx.big_sigma_star(&p.v), idx.big_sigma_star(&p.w))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_is_bilinear(
        q in quiver(),
        a in prop::collection::vec(-3i64..4, 60),
        b in prop::collection::vec(-3i64..4, 60),
        c in prop::collection::vec(-3i64..4, 60),
        k in -3i64..4,
    ) {
        let idx = CycIndex::new(&q).unwrap();
        let (x, y, z) = (pair(&idx, &a), pair(&idx, &b), pair(&idx, &c));
        let xy = VWPair::new(&x.v + &(&y.v * k), &x.w + &(&y.w * k));
        prop_assert_eq!(idx.d_form(&xy, &z), idx.d_form(&x, &z) + k * idx.d_form(&y, &z));
        prop_assert_eq!(idx.d_form(&z, &xy), idx.d_form(&z, &x) + k * idx.d_form(&z, &y));
    }

    #[test]
    fn d_is_sigma_star_invariant(
        q in quiver(),
        a in prop::collection::vec(-3i64..4, 60),
        b in prop::collection::vec(-3i64..4, 60),
    ) {
        let idx = CycIndex::new(&q).unwrap();
        let (x, y) = (pair(&idx, &a), pair(&idx, &b));
        prop_assert_eq!(idx.d_form(&sigma_star(&idx, &x), &sigma_star(&idx, &y)), idx.d_form(&x, &y));
    }

    #[test]
    fn q_cartan_commutes_with_sigma_star(q in quiver(), a in prop::collection::vec(-3i64..4, 60)) {
        let idx = CycIndex::new(&q).unwrap();
        let v = pair(&idx, &a).v;
        prop_assert_eq!(
            idx.q_cartan_apply(&idx.big_sigma_star(&v)),
            idx.big_sigma_star(&idx.q_cartan_apply(&v))
        );
    }

    #[test]
    fn sigma_star_preserves_l_dominance(q in quiver(), k in 0usize..64, m in 0usize..64) {
        let idx = CycIndex::new(&q).unwrap();
        let n = idx.model().module_count();
        let p = &idx.iota(k % n) + &idx.iota(m % n);
        prop_assert!(idx.is_l_dominant(&p));
        prop_assert!(idx.is_l_dominant(&sigma_star(&idx, &p)));
    }

    #[test]
    fn enumeration_matches_kostant_count(q in quiver(), pick in 0usize..1000) {
        let idx = CycIndex::new(&q).unwrap();
        let degrees: Vec<DimVec> = multidegrees(idx.rank(), 3).into_iter().collect();
        let beta = &degrees[pick % degrees.len()];
        let mut w = CycVec::zero();
        for (i, &c) in beta.iter().enumerate() {
            for y in idx.e_sigma_simple(i).support() {
                w.add_at(y, c);
            }
        }
        let found = idx.enumerate_l_dominant(&w).unwrap();
        prop_assert_eq!(found.len() as u64, idx.kostant_partitions(beta));
        prop_assert!(found.iter().all(|v| idx.is_l_dominant(&VWPair::new(v.clone(), w.clone()))));
    }

    #[test]
    fn big_sigma_is_an_involution(q in quiver(), i in 0usize..8, a in 0usize..64) {
        let idx = CycIndex::new(&q).unwrap();
        let x = CycVertex::new(i % idx.rank(), a % idx.period());
        prop_assert_eq!(idx.big_sigma(idx.big_sigma(x)), x);
        prop_assert_eq!(idx.in_i_hat(idx.big_sigma(x)), idx.in_i_hat(x));
    }
}
