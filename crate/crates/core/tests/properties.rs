use num_bigint::BigInt;
use proptest::prelude::*;

use ellgenus_core::genus::{
    a_hat_genus_series, genus_polynomial, l_genus_series, partitions, universal_char_series, universal_genus, Partition,
    PontryaginVector,
};
use ellgenus_core::oracle::root_expansion_genus;
use ellgenus_core::series::{int, rat, DeltaEpsPoly, ExactRational, Series, ZSeries};
use ellgenus_core::string24::{
    a_from_kappa, basis_matrix_k, classify, column_hnf, image_matrix, kappa_from_a, lattice_membership,
    string_relation, ClassifyInput, ClassificationReport, IndexQuadruple,
};
use ellgenus_core::twist::TangentIndexFunctionals;

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

/// A series with constant term 1, valid below `order`.
fn unit_series(order: usize) -> impl Strategy<Value = ZSeries> {
    prop::collection::vec(small_rational(), order - 1).prop_map(move |mut c| {
        c.insert(0, int(1));
        Series::new(c, order)
    })
}

fn pontryagin(k: u32) -> impl Strategy<Value = PontryaginVector> {
    let n = partitions(k).len();
    prop::collection::vec(-60i64..=60, n).prop_map(move |v| PontryaginVector::from_values(k, &v).unwrap())
}

fn kappa() -> impl Strategy<Value = IndexQuadruple> {
    prop::array::uniform4(-500i64..=500).prop_map(IndexQuadruple::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn inverse_is_two_sided(s in unit_series(9)) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, ZSeries::one_to(9));
    }

    #[test]
    fn inv_sqrt_squares_to_inverse(s in unit_series(8)) {
        let r = s.inv_sqrt().unwrap();
        prop_assert_eq!(&(&r * &r) * &s, ZSeries::one_to(8));
    }

    #[test]
    fn exp_inverts_log(s in unit_series(8)) {
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn reversion_composes_to_identity(s in unit_series(7)) {
        let f = s.shift_up(1);
        let g = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), ZSeries::var(f.order()));
        prop_assert_eq!(g.compose(&f).unwrap(), ZSeries::var(f.order()));
    }

    #[test]
    fn partition_display_roundtrip(k in 0u32..9, i in 0usize..30) {
        let ps = partitions(k);
        let p = &ps[i % ps.len()];
        prop_assert_eq!(&p.to_string().parse::<Partition>().unwrap(), p);
        prop_assert_eq!(p.weight(), k);
    }

    #[test]
    fn newton_path_matches_root_oracle((k, v) in (1u32..=3).prop_flat_map(|k| (Just(k), pontryagin(k))), which in 0usize..3) {
        let order = 2 * k as usize + 1;
        let q = [l_genus_series(order), a_hat_genus_series(order)];
        if which < 2 {
            let fast = genus_polynomial(&q[which], k).unwrap().evaluate(&v).unwrap();
            prop_assert_eq!(fast, root_expansion_genus(&q[which], k).evaluate(&v).unwrap());
        } else {
            let u = universal_char_series(order);
            let fast = genus_polynomial(&u, k).unwrap().evaluate(&v).unwrap();
            prop_assert_eq!(fast, root_expansion_genus(&u, k).evaluate(&v).unwrap());
        }
    }

    #[test]
    fn kappa_roundtrip(k in kappa()) {
        prop_assert_eq!(kappa_from_a(&a_from_kappa(&k)), k.to_vector());
    }

    #[test]
    fn membership_recovers_basis_coordinates(k in kappa()) {
        let a8 = a_from_kappa(&k).to_8delta_basis();
        let x = lattice_membership(&a8).unwrap().expect("string classes lie in the image");
        let want = basis_matrix_k().solve(&k.to_vector()).unwrap();
        prop_assert_eq!(x.map(|n| ellgenus_core::series::from_bigint(&n)), want);
    }

    #[test]
    fn classify_kappa_is_consistent_and_roundtrips(k in kappa()) {
        let r = classify(&ClassifyInput::Kappa(k.clone()), 6).unwrap();
        prop_assert!(r.is_consistent());
        prop_assert!(r.in_string_image);
        prop_assert_eq!(r.bounds_string, Some(k.is_zero()));
        prop_assert_eq!(ClassificationReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn hnf_is_invariant_under_unimodular_column_ops(i in 0usize..4, j in 0usize..4, f in -9i64..=9) {
        prop_assume!(i != j);
        let a = image_matrix().to_integers().unwrap();
        let rows: Vec<Vec<BigInt>> = a.iter().map(|r| r.to_vec()).collect();
        let mut moved = rows.clone();
        for row in moved.iter_mut() {
            let add = &row[j] * f;
            row[i] += add;
        }
        prop_assert_eq!(column_hnf(&moved), column_hnf(&rows));
        prop_assert_eq!(column_hnf(&column_hnf(&rows)), column_hnf(&rows));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn genus_is_linear(a in pontryagin(6), b in pontryagin(6)) {
        let g = universal_genus(6);
        let sum: Vec<i64> = partitions(6)
            .iter()
            .map(|p| i64::try_from(a.get(p).unwrap() + b.get(p).unwrap()).unwrap())
            .collect();
        let ab = PontryaginVector::from_values(6, &sum).unwrap();
        prop_assert_eq!(g.evaluate(&ab).unwrap(), {
            use ellgenus_core::Coeff;
            g.evaluate(&a).unwrap().add_ref(&g.evaluate(&b).unwrap())
        });
    }

    #[test]
    fn weight_six_homogeneous(v in pontryagin(6)) {
        let phi: DeltaEpsPoly = universal_genus(6).evaluate(&v).unwrap();
        prop_assert!(phi.terms().is_empty() || phi.homogeneous_weight() == Some(6));
    }

    #[test]
    fn index_relation_in_dimension_24(v in pontryagin(6)) {
        let idx = TangentIndexFunctionals::new(6).evaluate(&v).unwrap();
        prop_assert_eq!(string_relation(&idx.ahat, &idx.ahat_t, &idx.ahat_lambda2), idx.sig_t);
    }

    #[test]
    fn pontryagin_classification_paths_agree(v in pontryagin(6)) {
        let r = classify(&ClassifyInput::Pontryagin(v), 6).unwrap();
        for name in ["genus = index formula", "string-relation", "kappa-from-a"] {
            let c = r.consistency.iter().find(|c| c.name == name).unwrap();
            prop_assert!(c.passed, "{}: {}", name, c.detail);
        }
        prop_assert_eq!(r.is_consistent(), r.kappa.is_some());
    }
}
