use flt_lab_core::diophantine::{FermatTriples, RangeSearch, SearchBounds};
use flt_lab_core::exactmath::{
    exact_kth_root, factorize, gaussian_factorize, gaussian_gcd, gaussian_square_root, gcd, integer_kth_root,
    is_prime, pairwise_coprime, pow, GaussianInt,
};
use flt_lab_core::polysplit::{
    build_cubic, build_poly_from_powersum, extract_fermat_witness, extract_powersum_identity, Extraction,
    FermatWitness,
};
use flt_lab_core::powersum::{recover_missing_term, CoprimeMode, EqualSumsSearch, PowerSumInstance, Recovery, Slot};
use flt_lab_core::ExactInt;
use flt_lab_oracles as oracle;
use num_bigint::BigInt;
use proptest::prelude::*;

fn e(v: i128) -> ExactInt {
    ExactInt::from(v)
}

fn big(v: &ExactInt) -> BigInt {
    v.to_bigint()
}

/// Values straddling the i128 boundary so both representations get exercised.
fn wide() -> impl Strategy<Value = ExactInt> {
    prop_oneof![
        any::<i64>().prop_map(|v| e(v.into())),
        any::<i128>().prop_map(e),
        (any::<i128>(), any::<i64>()).prop_map(|(a, b)| ExactInt::from_bigint(BigInt::from(a) * BigInt::from(b))),
    ]
}

proptest! {
    #[test]
    fn gcd_agrees_with_euclid(a in -1_000_000_000i128..1_000_000_000, b in -1_000_000_000i128..1_000_000_000) {
        prop_assert_eq!(gcd(&e(a), &e(b)), e(oracle::gcd(a, b)));
    }

    #[test]
    fn gcd_scales(a in 1i64.., b in 1i64.., c in 1i64..) {
        let (a, b, c) = (e(a.into()), e(b.into()), e(c.into()));
        let lhs = gcd(&(&a * &c), &(&b * &c));
        prop_assert_eq!(lhs, &gcd(&a, &b) * &c);
    }

    #[test]
    fn arithmetic_matches_bigint(a in wide(), b in wide()) {
        prop_assert_eq!(big(&(&a + &b)), big(&a) + big(&b));
        prop_assert_eq!(big(&(&a - &b)), big(&a) - big(&b));
        prop_assert_eq!(big(&(&a * &b)), big(&a) * big(&b));
        prop_assert_eq!(a.cmp(&b), big(&a).cmp(&big(&b)));
        // normalization: equal values compare equal whichever path made them
        let via_big = ExactInt::from_bigint(big(&a) * big(&b));
        prop_assert_eq!(via_big, &a * &b);
    }

    #[test]
    fn decimal_roundtrip(a in wide()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<ExactInt>().unwrap(), a.clone());
        prop_assert_eq!(s, big(&a).to_string());
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..) {
        let f = factorize(&e(n.into())).unwrap();
        prop_assert_eq!(f.product(), e(n.into()));
        for w in f.factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
        for (p, _) in &f.factors {
            prop_assert!(is_prime(p));
        }
    }

    #[test]
    fn factorization_of_products_of_large_primes(i in 0usize..6, j in 0usize..6) {
        const P: [u64; 6] = [1_000_000_007, 998_244_353, 4_294_967_291, 2_147_483_647, 1_000_000_000_039, 999_999_999_989];
        let n = e(P[i].into()) * e(P[j].into());
        let f = factorize(&n).unwrap();
        prop_assert_eq!(f.product(), n);
        prop_assert_eq!(f.omega_total(), 2);
    }

    #[test]
    fn kth_roots(r in 0u64..1_000_000, k in 1u32..7) {
        let rk = pow(&e(r.into()), k).unwrap();
        prop_assert_eq!(exact_kth_root(&rk, k), Some(e(r.into())));
        if k >= 2 && r >= 1 {
            let above = &rk + &e(1);
            prop_assert_eq!(exact_kth_root(&above, k), None);
            prop_assert_eq!(integer_kth_root(&above, k).unwrap(), (e(r.into()), false));
        }
        if k % 2 == 1 {
            prop_assert_eq!(exact_kth_root(&-&rk, k), Some(-e(r.into())));
        }
    }

    #[test]
    fn kth_roots_beyond_i128(r in any::<u64>(), k in 3u32..6) {
        let rk = pow(&e(r.into()), k).unwrap();
        prop_assert_eq!(exact_kth_root(&rk, k), Some(e(r.into())));
        if r > 1 {
            prop_assert_eq!(integer_kth_root(&(&rk - &e(1)), k).unwrap().0, e((r - 1).into()));
        }
    }

    #[test]
    fn gaussian_gcd_divides(a in -300i64..300, b in -300i64..300, c in -300i64..300, d in -300i64..300) {
        prop_assume!((a, b) != (0, 0) && (c, d) != (0, 0));
        let (z, w) = (GaussianInt::new(a, b), GaussianInt::new(c, d));
        let g = gaussian_gcd(&z, &w).unwrap();
        prop_assert!(g.divides(&z) && g.divides(&w));
        // and it is the largest such: the cofactors are coprime
        let (zc, wc) = (z.checked_exact_div(&g).unwrap(), w.checked_exact_div(&g).unwrap());
        prop_assert!(gaussian_gcd(&zc, &wc).unwrap().is_unit());
    }

    #[test]
    fn gaussian_factorization_and_roots(a in -2000i64..2000, b in -2000i64..2000) {
        prop_assume!((a, b) != (0, 0));
        let z = GaussianInt::new(a, b);
        let f = gaussian_factorize(&z).unwrap();
        prop_assert_eq!(f.product(), z.clone());
        prop_assert!(f.unit.is_unit());
        let sq = z.square();
        let r = gaussian_square_root(&sq).unwrap().unwrap();
        prop_assert!(r == z || r == -&z);
    }

    #[test]
    fn cubic_roundtrip_pythagorean(m in 2i128..200, k in 1i128..200) {
        let n = m - (k % (m - 1)) - 1;
        prop_assume!(n >= 1 && oracle::gcd(m, n) == 1 && (m - n) % 2 == 1);
        let (p, q, r) = (m * m - n * n, 2 * m * n, m * m + n * n);
        let w = FermatWitness::new(e(p), e(q), e(r), 2).unwrap();
        let c = build_cubic(&w).unwrap();
        prop_assert!(c.gcd_ab_is_one);
        prop_assert_eq!(extract_fermat_witness(&c.poly, 2).unwrap(), Extraction::Found(w));
    }

    #[test]
    fn cubic_roundtrip_linear(p in 1i128..1_000_000, q in 1i128..1_000_000) {
        prop_assume!(p != q && oracle::gcd(p, q) == 1);
        let w = FermatWitness::new(e(p), e(q), e(p + q), 1).unwrap();
        let c = build_cubic(&w).unwrap();
        prop_assert_eq!(extract_fermat_witness(&c.poly, 1).unwrap(), Extraction::Found(w));
    }

    #[test]
    fn powersum_roundtrip(x1 in 1i128..10_000, x2 in 1i128..10_000) {
        prop_assume!(x1 < x2 && oracle::gcd(x1, x2) == 1);
        let inst = PowerSumInstance::new(1, vec![e(x1), e(x2)], vec![e(x1 + x2)]).unwrap();
        let (poly, report) = build_poly_from_powersum(&inst).unwrap();
        prop_assert!(report.terms_pairwise_coprime());
        if report.a1_a0_coprime {
            prop_assert_eq!(extract_powersum_identity(&poly, 1).unwrap(), Extraction::Found(inst));
        } else {
            prop_assert!(extract_powersum_identity(&poly, 1).is_err());
        }
    }

    #[test]
    fn missing_term_recovered(m in 2i128..300, k in 1i128..300, slot in 0usize..3) {
        let n = m - (k % (m - 1)) - 1;
        prop_assume!(n >= 1);
        let (p, q, r) = (m * m - n * n, 2 * m * n, m * m + n * n);
        let mut lhs = vec![Some(e(p)), Some(e(q))];
        let mut rhs = vec![Some(e(r))];
        let (expected_slot, term) = match slot {
            0 => { lhs[0] = None; (Slot::Lhs(0), p) }
            1 => { lhs[1] = None; (Slot::Lhs(1), q) }
            _ => { rhs[0] = None; (Slot::Rhs(0), r) }
        };
        let (s, rec) = recover_missing_term(&lhs, &rhs, 2).unwrap();
        prop_assert_eq!(s, expected_slot);
        prop_assert_eq!(rec, Recovery::Recovered { term: e(term) });
    }

    #[test]
    fn coprime_filter_commutes_with_equal_sums(h in 1u32..4, k in 1u32..4, max in 1u64..25) {
        let all = EqualSumsSearch::new(h, 1, k, max, CoprimeMode::None).unwrap().run().unwrap();
        let filtered = EqualSumsSearch::new(h, 1, k, max, CoprimeMode::Pairwise).unwrap().run().unwrap();
        let values = |rs: &[flt_lab_core::diophantine::SolutionRecord]| -> Vec<Vec<ExactInt>> {
            rs.iter().map(|r| r.values().cloned().collect()).collect()
        };
        let kept: Vec<Vec<ExactInt>> = values(&all.records)
            .into_iter()
            .filter(|v| v.len() < 2 || pairwise_coprime(v).unwrap().is_none())
            .collect();
        prop_assert_eq!(filtered.filtered as usize, all.records.len() - kept.len());
        prop_assert_eq!(values(&filtered.records), kept);
    }

    #[test]
    fn coprime_filter_commutes_with_fermat(n in 1u32..4, max in 1u64..40) {
        let b = SearchBounds::new(max, n).unwrap();
        let all = FermatTriples { bounds: b, primitive_only: false }.run().unwrap();
        let prim = FermatTriples { bounds: b, primitive_only: true }.run().unwrap();
        let kept: Vec<_> = all
            .records
            .iter()
            .filter(|r| pairwise_coprime(&r.values().cloned().collect::<Vec<_>>()).unwrap().is_none())
            .map(|r| r.values().cloned().collect::<Vec<_>>())
            .collect();
        let got: Vec<_> = prim.records.iter().map(|r| r.values().cloned().collect::<Vec<_>>()).collect();
        prop_assert_eq!(got, kept);
        prop_assert_eq!(prim.filtered as usize, all.records.len() - prim.records.len());
    }

    #[test]
    fn records_reverify(max in 1u64..40, n in 1u32..3) {
        let rs = FermatTriples { bounds: SearchBounds::new(max, n).unwrap(), primitive_only: false }.run().unwrap();
        for r in &rs.records {
            prop_assert!(r.reverify().unwrap());
        }
    }
}
