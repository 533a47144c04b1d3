//! Property tests for the algebraic invariants.

mod common;

use common::*;
use crt_core::catalog;
use crt_core::crt::{crt_isomorphic, is_acyclic, module_from_json, module_to_json, suspend, verify_relations, Part};
use crt_core::free::{FreeCrt, Kind, Monogenic};
use crt_core::kunneth::{classical_complex_kunneth, kunneth_pipeline, DEFAULT_BUDGET};
use crt_core::tensor::{cuntz_resolution, tensor_and_tor, tensor_free, tensor_monogenic};
use crt_core::Int;
use proptest::prelude::*;

fn kind_strategy() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::R), Just(Kind::C), Just(Kind::T)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_normal_form_is_a_valid_decomposition(rows in matrix_strategy()) {
        let a = to_matrix(&rows);
        prop_assert_eq!(check_snf(&a), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn kernel_image_cokernel_agree_with_enumeration((d, c, raw) in hom_strategy()) {
        let f = to_hom(&d, &c, &raw);
        prop_assert_eq!(check_against_oracle(&f), Ok(()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cuntz_modules_are_valid(k in 1i64..=64) {
        let m = catalog::cuntz::<Int>(k).unwrap().module;
        prop_assert!(verify_relations(&m).passed());
        prop_assert!(is_acyclic(&m).unwrap().passed());
        for n in 0..8 {
            let expect = if n % 2 == 0 { crt_core::zlinalg::FinAbGroup::from_orders(&[Int::from(k)]) } else { crt_core::zlinalg::FinAbGroup::zero() };
            prop_assert_eq!(m.group(Part::U, n), &expect);
        }
    }

    #[test]
    fn json_round_trips(k in 1i64..=64) {
        let m = catalog::cuntz::<Int>(k).unwrap().module;
        prop_assert_eq!(module_from_json::<Int>(&module_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn tensor_with_free_is_acyclic(kind in kind_strategy(), shift in 0i64..8, k in 1i64..=16) {
        let n = catalog::cuntz::<Int>(k).unwrap().module;
        let f = FreeCrt::<Int>::new(&[Monogenic::new(kind, shift)]).unwrap();
        let t = tensor_free(&f, &n).unwrap().module;
        prop_assert!(verify_relations(&t).passed());
        prop_assert!(is_acyclic(&t).unwrap().passed());
    }

    #[test]
    fn tensor_commutes_with_suspension(kind in kind_strategy(), s in 0i64..8, k in 1i64..=12) {
        let n = catalog::cuntz::<Int>(k).unwrap().module;
        let base = tensor_monogenic(kind, 0, &n).unwrap().module;
        prop_assert_eq!(tensor_monogenic(kind, s, &n).unwrap().module, suspend(&base, -s));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn tensor_and_tor_satisfy_the_relations(k in 1i64..=12, l in 1i64..=12) {
        let res = cuntz_resolution::<Int>(k).unwrap();
        let tt = tensor_and_tor(&res, &catalog::cuntz::<Int>(l).unwrap().module).unwrap();
        prop_assert!(verify_relations(&tt.tensor).passed());
        prop_assert!(verify_relations(&tt.tor).passed());
        // Orders balance along 0 → Tor → F1⊗N → F0⊗N → tensor → 0.
        for p in Part::ALL {
            for n in 0..8 {
                let o = |m: &crt_core::crt::CrtModule<Int>| m.group(p, n).order_usize().unwrap();
                prop_assert_eq!(o(&tt.tensor) * o(&tt.f1_tensor.module), o(&tt.tor) * o(&tt.f0_tensor.module));
            }
        }
    }

    #[test]
    fn kunneth_middle_terms_are_balanced(k in 1i64..=8, l in 1i64..=8) {
        let r = kunneth_pipeline::<Int>(&format!("O{}", k + 1), &format!("O{}", l + 1), DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(r.result.solutions.len(), 1);
        prop_assert_eq!(r.matches_expected, Some(true));
        let m = &r.result.solutions[0].middle;
        for p in Part::ALL {
            for n in 0..8 {
                let got = m.group(p, n).order_usize().unwrap();
                let a = r.problem.tensor.group(p, n).order_usize().unwrap();
                let b = r.problem.tor.group(p, n - 1).order_usize().unwrap();
                prop_assert_eq!(got, a * b);
            }
        }
        let u = classical_complex_kunneth::<Int>(k, l);
        prop_assert_eq!(m.group(Part::U, 0), &u[0]);
        prop_assert_eq!(m.group(Part::U, 1), &u[1]);
    }

    #[test]
    fn tensor_is_symmetric(k in 1i64..=8, l in 1i64..=8) {
        let a = cuntz_resolution::<Int>(k).unwrap();
        let b = cuntz_resolution::<Int>(l).unwrap();
        let ab = tensor_and_tor(&a, b.target()).unwrap().tensor;
        let ba = tensor_and_tor(&b, a.target()).unwrap().tensor;
        prop_assert!(crt_isomorphic(&ab, &ba).unwrap().is_some());
    }
}
