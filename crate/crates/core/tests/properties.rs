use proptest::prelude::*;

use gentorsion::braid3::{self, BraidGen, BraidWord};
use gentorsion::certificate::{verify, Certificate, Group};
use gentorsion::modular::{self, Gen3Tag};
use gentorsion::seifert::{gen_n_certificate, parse_seifert, SeifertGroup};
use gentorsion::word::{cyclic_reduce, is_conjugate, reduce, Word};
use gentorsion::IntMatrix2;

fn raw_modular() -> impl Strategy<Value = Vec<(String, i64)>> {
    prop::collection::vec((prop::bool::ANY, -4i64..=4), 0..10)
        .prop_map(|v| v.into_iter().map(|(a, e)| (if a { "a" } else { "b" }.to_string(), e)).collect())
}

fn modular_word() -> impl Strategy<Value = Word> {
    raw_modular().prop_map(|raw| reduce(&raw, &modular::scheme()).unwrap())
}

fn braid_word() -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((prop::bool::ANY, -3i64..=3), 0..8).prop_map(|v| {
        BraidWord::new(v.into_iter().map(|(s, e)| (if s { BraidGen::S1 } else { BraidGen::S2 }, e)))
    })
}

fn matrix(w: &Word) -> IntMatrix2 {
    modular::to_matrix(w).unwrap()
}

proptest! {
    #[test]
    fn reduce_is_idempotent(raw in raw_modular()) {
        let w = reduce(&raw, &modular::scheme()).unwrap();
        prop_assert_eq!(reduce(&w.to_raw(), &modular::scheme()).unwrap(), w);
    }

    #[test]
    fn inverse_is_anti_homomorphism(u in modular_word(), v in modular_word()) {
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert!(u.mul(&u.inverse()).is_identity());
    }

    #[test]
    fn matrices_are_a_homomorphism(u in modular_word(), v in modular_word()) {
        prop_assert_eq!(matrix(&u.mul(&v)), matrix(&u).mul(&matrix(&v)).normalized());
    }

    #[test]
    fn conjugacy_certificate_is_exact(w in modular_word(), k in modular_word()) {
        let v = w.conjugate_by(&k);
        let c = is_conjugate(&w, &v).unwrap().expect("conjugates are found");
        prop_assert_eq!(w.conjugate_by(&c), v.clone());
        let back = is_conjugate(&v, &w).unwrap().expect("symmetric");
        prop_assert_eq!(v.conjugate_by(&back), w.clone());
        let (core, _) = cyclic_reduce(&w);
        prop_assert_eq!(core, cyclic_reduce(&v).0);
    }

    #[test]
    fn class_is_conjugacy_invariant(w in modular_word(), k in modular_word()) {
        prop_assume!(!w.is_identity());
        let v = w.conjugate_by(&k);
        prop_assert_eq!(modular::classify(&w).unwrap(), modular::classify(&v).unwrap());
        prop_assert_eq!(modular::reversible(&w).unwrap().is_some(), modular::reversible(&v).unwrap().is_some());
    }

    #[test]
    fn reverser_certificates_hold(w in modular_word()) {
        prop_assume!(!w.is_identity());
        if let Some(r) = modular::reversible(&w).unwrap() {
            prop_assert_eq!(w.conjugate_by(&r.reverser), w.inverse());
            let (u, v) = r.involutions;
            prop_assert!(u.pow(2).is_identity() && v.pow(2).is_identity());
            prop_assert!(is_conjugate(&w, &u.mul(&v)).unwrap().is_some());
        }
    }

    #[test]
    fn gen3_verdict_is_conjugacy_invariant(w in modular_word(), k in modular_word()) {
        prop_assume!(!w.is_identity());
        let v = w.conjugate_by(&k);
        let a = modular::gen3_torsion(&w, 4).unwrap();
        let b = modular::gen3_torsion(&v, 4).unwrap();
        if a.tag != Gen3Tag::UnknownWithinBound && b.tag != Gen3Tag::UnknownWithinBound {
            prop_assert_eq!(a.tag, b.tag);
        }
        if let Some(c) = a.certificate {
            prop_assert!(c.validates(&w));
        }
    }

    #[test]
    fn braid_normal_form_is_homomorphism(u in braid_word(), v in braid_word()) {
        let (gu, gv) = (braid3::normal_form(&u), braid3::normal_form(&v));
        prop_assert_eq!(braid3::normal_form(&u.concat(&v)), gu.mul(&gv));
        prop_assert_eq!(braid3::normal_form(&u.inverse()), gu.inverse());
        prop_assert_eq!(braid3::element_exponent_sum(&gu), braid3::exponent_sum(&u));
    }

    #[test]
    fn braid_spellings_round_trip(u in braid_word()) {
        let g = braid3::normal_form(&u);
        prop_assert_eq!(braid3::normal_form(&braid3::section(&g)), g.clone());
        prop_assert_eq!(braid3::normal_form(&braid3::to_sigma_word(&g)), g.clone());
        prop_assert_eq!(braid3::normal_form(&braid3::parse_braid(&u.to_string()).unwrap()), g);
    }

    #[test]
    fn braid_conjugacy_certificates(u in braid_word(), k in braid_word()) {
        let g = braid3::normal_form(&u);
        let target = g.conjugate_by(&braid3::normal_form(&k));
        let c = braid3::conjugate_elements(&g, &target).unwrap().expect("conjugates are found");
        prop_assert_eq!(g.conjugate_by(&c), target);
        prop_assume!(!g.is_identity());
        if let Some(r) = braid3::reversible_element(&g).unwrap() {
            prop_assert_eq!(g.conjugate_by(&r.reverser), g.inverse());
            prop_assert_eq!(braid3::element_exponent_sum(&g), 0);
        }
    }

    #[test]
    fn seifert_certificates_balance(
        mus in prop::collection::vec(2i64..=6, 2..=3),
        beta in 1i64..=5,
        n in 2i64..=4,
    ) {
        let fibers: Vec<String> = mus.iter().map(|m| format!("({m},{})", beta % m + if beta % m == 0 { 1 } else { 0 })).collect();
        let spec = format!("(O,o,0 | 0; {}); boundaries=1", fibers.join(","));
        let d = match parse_seifert(&spec) {
            Ok(d) => d,
            Err(_) => return Ok(()),
        };
        if let Some(c) = gen_n_certificate(&d, n).unwrap() {
            prop_assert_eq!(c.n * c.x + c.m1 + c.m2, 0);
            prop_assert!(c.validate(&d).unwrap());
            let group = Group::Seifert(Box::new(SeifertGroup::new(&d).unwrap()));
            let cert = Certificate::Torsion {
                group: group.name(),
                element: c.element.clone(),
                n: c.n,
                conjugators: c.conjugators.clone(),
            };
            prop_assert!(verify(&cert).unwrap());
        }
    }
}
