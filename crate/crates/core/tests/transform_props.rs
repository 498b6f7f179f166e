use proptest::prelude::*;
use su11::c64;
use su11::transform::{
    gelfand_transform, resolvent_kernel, resolvent_transform, BoundedRadialFunction, RadialFunction,
    SpectralParameter, StripPoint,
};

fn test_functions() -> Vec<RadialFunction> {
    vec![
        RadialFunction::indicator(1.0, 3.0).unwrap(),
        RadialFunction::exp_decay(1.7).unwrap(),
        resolvent_kernel(SpectralParameter::new(c64(2.5, 0.0))).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transform_symmetry_and_reality(k in 0usize..3, re in 0.0f64..=1.0, im in -8.0f64..8.0) {
        let f = &test_functions()[k];
        let s = StripPoint::new(c64(re, im)).unwrap();
        let v = gelfand_transform(f, s).unwrap();
        let w = gelfand_transform(f, s.involution()).unwrap();
        let c = gelfand_transform(f, s.conj()).unwrap();
        prop_assert!((v - w).norm() <= 1e-9, "{} vs {}", v, w);
        prop_assert!((c - v.conj()).norm() <= 1e-9);
    }

    #[test]
    fn resolvent_symmetry(re in prop_oneof![-3.0f64..-0.2, 1.2f64..4.0], im in -4.0f64..4.0, a in 1.0f64..2.0) {
        let g = BoundedRadialFunction::from_radial(RadialFunction::indicator(1.0, 1.0 + a).unwrap()).unwrap();
        let l = SpectralParameter::new(c64(re, im));
        let x = resolvent_transform(&g, l).unwrap();
        let y = resolvent_transform(&g, l.reflected()).unwrap();
        prop_assert!((x - y).norm() <= 1e-8);
    }

    #[test]
    fn pairing_bound(a in 1.0f64..4.0, w in 0.1f64..3.0, c in 0.2f64..3.0) {
        let f = RadialFunction::indicator(a, a + w).unwrap();
        let g = BoundedRadialFunction::from_radial(RadialFunction::exp_decay(c).unwrap()).unwrap();
        let v = su11::transform::pair(&f, &g).unwrap();
        prop_assert!(v.norm() <= 0.5 * f.l1_norm() * g.sup_norm() + 1e-9);
    }
}

#[test]
fn growth_probe() {
    let one = BoundedRadialFunction::constant(c64(1.0, 0.0));
    for re in [-2.0, -1.0, 1.5, 2.0, 3.0] {
        for im in [-5.0, -2.5, 0.0, 2.5, 5.0] {
            let l = SpectralParameter::new(c64(re, im));
            let e = resolvent_transform(&one, l).unwrap();
            let p = e.norm() * re.abs() * (1.0 - re).abs();
            assert!(p <= 4.0, "λ = {re}+{im}i: {p}");
        }
    }
}

#[test]
fn resolvent_contract_grid() {
    for l in [c64(2.0, 0.0), c64(3.0, 1.0), c64(-1.0, 0.0), c64(1.5, 2.0)] {
        let lam = SpectralParameter::new(l);
        let b = resolvent_kernel(lam).unwrap();
        for i in 0..5 {
            for k in 0..5 {
                let s = StripPoint::new(c64(0.125 * i as f64, 1.25 * k as f64)).unwrap();
                let v = gelfand_transform(&b, s).unwrap();
                let r = (v * (s.eigenvalue() - lam.eigenvalue()) - 1.0).norm();
                assert!(r <= 1e-6, "λ = {l}, s = {}: {r}", s.value());
            }
        }
    }
}
