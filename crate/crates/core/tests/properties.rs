use num_complex::Complex64;
use proptest::prelude::*;

use witting_ks::numerics::{
    complex_inner_float, eis_inner, proj_equal_float, realified_inner, Eisenstein, ExactRay, FloatRay,
    WittingScalar,
};

const CASES: u32 = 2000;

fn eis() -> impl Strategy<Value = Eisenstein> {
    (-50i64..=50, -50i64..=50).prop_map(|(a, b)| Eisenstein::new(a, b))
}

fn unit() -> impl Strategy<Value = Eisenstein> {
    (0usize..6).prop_map(|k| Eisenstein::units()[k])
}

fn witting_scalar() -> impl Strategy<Value = WittingScalar> {
    (eis(), eis()).prop_map(|(x, y)| WittingScalar::new(x, y))
}

/// A ray whose leading nonzero component is a unit, so it has a canonical form.
fn unit_led_ray() -> impl Strategy<Value = ExactRay> {
    (0usize..4, unit(), prop::collection::vec(eis(), 4)).prop_map(|(lead, u, mut c)| {
        for x in c.iter_mut().take(lead) {
            *x = Eisenstein::ZERO;
        }
        c[lead] = u;
        ExactRay::new(c).unwrap()
    })
}

fn exact_vec() -> impl Strategy<Value = ExactRay> {
    prop::collection::vec(eis(), 4)
        .prop_filter("nonzero", |c| c.iter().any(|x| !x.is_zero()))
        .prop_map(|c| ExactRay::new(c).unwrap())
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-10.0f64..10.0, -10.0f64..10.0).prop_map(|(re, im)| Complex64::new(re, im))
}

fn float_ray() -> impl Strategy<Value = FloatRay> {
    prop::collection::vec(complex(), 4)
        .prop_filter("not tiny", |c| c.iter().map(|z| z.norm_sqr()).sum::<f64>() > 1e-3)
        .prop_map(|c| FloatRay::new(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn eisenstein_ring_axioms(a in eis(), b in eis(), c in eis()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + Eisenstein::ZERO, a);
        prop_assert_eq!(a * Eisenstein::ONE, a);
        prop_assert_eq!(a + (-a), Eisenstein::ZERO);
        prop_assert_eq!(a - b, a + (-b));
        prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        prop_assert_eq!((a * b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a * a.conj(), Eisenstein::from_int(a.norm()));
    }

    #[test]
    fn eisenstein_matches_complex_arithmetic(a in eis(), b in eis()) {
        let p = (a * b).to_complex();
        let q = a.to_complex() * b.to_complex();
        prop_assert!((p - q).norm() < 1e-9);
        prop_assert!((a.conj().to_complex() - a.to_complex().conj()).norm() < 1e-12);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in eis(), b in eis()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((a * b).div_exact(b), Some(a));
    }

    #[test]
    fn witting_scalar_ring_axioms(a in witting_scalar(), b in witting_scalar(), c in witting_scalar()) {
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        prop_assert_eq!((a * b).to_eisenstein(), a.to_eisenstein() * b.to_eisenstein());
    }

    #[test]
    fn exact_canonicalization_is_idempotent_and_scale_invariant(r in unit_led_ray(), u in unit()) {
        let c = r.canonicalize().unwrap();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize().unwrap(), c.clone());
        prop_assert_eq!(r.scale(u).unwrap().canonicalize().unwrap(), c);
    }

    #[test]
    fn float_canonicalization_is_idempotent_and_phase_invariant(r in float_ray(), theta in 0.0f64..std::f64::consts::TAU, s in 0.1f64..10.0) {
        let c = r.canonicalize();
        let cc = c.canonicalize();
        for (x, y) in c.components().iter().zip(cc.components()) {
            prop_assert!((x - y).norm() < 1e-9);
        }
        let scaled = FloatRay::new(r.components().iter().map(|z| z * Complex64::from_polar(s, theta)).collect()).unwrap();
        prop_assert!(proj_equal_float(&scaled, &r, 1e-9).unwrap());
    }

    #[test]
    fn exact_inner_product_is_conjugate_symmetric(u in exact_vec(), v in exact_vec()) {
        prop_assert_eq!(eis_inner(&u, &v).unwrap(), eis_inner(&v, &u).unwrap().conj());
        let f = complex_inner_float(&u.to_float(), &v.to_float()).unwrap();
        prop_assert!((f - eis_inner(&u, &v).unwrap().to_complex()).norm() < 1e-6);
    }

    #[test]
    fn float_inner_product_is_conjugate_symmetric(u in float_ray(), v in float_ray()) {
        let a = complex_inner_float(&u, &v).unwrap();
        let b = complex_inner_float(&v, &u).unwrap();
        prop_assert!((a - b.conj()).norm() < 1e-9);
    }

    #[test]
    fn realified_inner_matches_float_dot(
        u in prop::collection::vec(witting_scalar(), 4),
        v in prop::collection::vec(witting_scalar(), 4),
    ) {
        let exact = realified_inner(&u, &v).unwrap().to_f64();
        let flat = |w: &[WittingScalar]| -> Vec<f64> {
            w.iter().flat_map(|s| { let (re, im) = s.realify(); [re.to_f64(), im.to_f64()] }).collect()
        };
        let dot: f64 = flat(&u).iter().zip(flat(&v)).map(|(a, b)| a * b).sum();
        let scale = 1.0 + dot.abs();
        prop_assert!((exact - dot).abs() / scale < 1e-9, "{} vs {}", exact, dot);
        prop_assert_eq!(realified_inner(&u, &v).unwrap(), realified_inner(&v, &u).unwrap());
    }
}
