use omega_forge_core::reps::{binary_forms_module, PolynomialComodule, RationalRep, DEFAULT_DIMENSION_CAP};

fn assert_comodule(name: &str, m: &PolynomialComodule) {
    assert!(m.check_counit().unwrap(), "{name}: counit");
    assert!(m.check_zero_idempotent(), "{name}: C(0) not idempotent");
    assert_eq!(m.multiplicativity_residual_symbolic().unwrap(), None, "{name}: C(XY) != C(X)C(Y)");
}

#[test]
fn every_constructed_module_is_a_comodule() {
    for n in 2..=3 {
        assert_comodule("trivial", &PolynomialComodule::trivial(n).unwrap());
        assert_comodule("k_det", &PolynomialComodule::k_det(n).unwrap());
        let v = PolynomialComodule::standard(n).unwrap();
        assert_comodule("V", &v);
        assert_comodule("V*", &v.dual_action_module().unwrap());
        assert_comodule("S2(V)", &v.symmetric_power(2, DEFAULT_DIMENSION_CAP).unwrap());
        assert_comodule("det^2", &PolynomialComodule::character(n, 2).unwrap());
    }
    for d in 1..=4 {
        let b = binary_forms_module(d).unwrap();
        let dual = b.dual_action_module().unwrap();
        assert_comodule(&format!("B{d}"), &b);
        assert_comodule(&format!("B{d}*"), &dual);
        for e in 1..=3 {
            if d == 4 && e == 3 {
                let s = dual.symmetric_power(e, DEFAULT_DIMENSION_CAP).unwrap();
                assert_eq!(s.dim(), 35);
                assert_comodule("S3(B4*)", &s);
            } else {
                assert_comodule(&format!("S{e}(B{d})"), &b.symmetric_power(e, DEFAULT_DIMENSION_CAP).unwrap());
                assert_comodule(&format!("S{e}(B{d}*)"), &dual.symmetric_power(e, DEFAULT_DIMENSION_CAP).unwrap());
            }
        }
    }
    let b1 = binary_forms_module(1).unwrap();
    let b2 = binary_forms_module(2).unwrap();
    assert_comodule("B1+B2", &b1.direct_sum(&b2).unwrap());
    assert_comodule("B1xB2", &b1.tensor(&b2).unwrap());
    assert_comodule("twist(B2,2)", &b2.twist(2).unwrap());
}

#[test]
fn dimension_cap_refuses_large_powers() {
    let b4 = binary_forms_module(4).unwrap().dual_action_module().unwrap();
    assert!(b4.symmetric_power(3, 34).is_err());
}

#[test]
fn minimal_twist_is_additive_on_tensor_products() {
    let rat = |m: &PolynomialComodule| RationalRep::from_polynomial(m).unwrap();
    let b1 = rat(&binary_forms_module(1).unwrap());
    let b2 = rat(&binary_forms_module(2).unwrap());
    let b1_dual = rat(&binary_forms_module(1).unwrap().dual_action_module().unwrap());
    let k_det = rat(&PolynomialComodule::k_det(2).unwrap());
    let pairs = [
        ("B1, B1*", b1.clone(), b1_dual.clone()),
        ("B2, det B1", b2.clone(), b1.twist(1).unwrap()),
        ("B1^, B2^", b1.contragredient().unwrap(), b2.contragredient().unwrap()),
        ("k_det, B2", k_det.clone(), b2.clone()),
        ("B1*, B1*", b1_dual.clone(), b1_dual.clone()),
    ];
    for (name, v, w) in pairs {
        let t = v.tensor(&w).unwrap();
        t.verify().unwrap();
        assert_eq!(
            t.minimal_twist_exponent(),
            v.minimal_twist_exponent() + w.minimal_twist_exponent(),
            "{name}"
        );
    }
    assert_eq!(k_det.minimal_twist_exponent(), -1);
    assert_eq!(b1.contragredient().unwrap().minimal_twist_exponent(), 1);
    assert_eq!(b2.contragredient().unwrap().minimal_twist_exponent(), 2);
}

#[test]
fn twists_cancel_and_contragredient_is_involutive() {
    for d in 1..=3 {
        let v = RationalRep::from_polynomial(&binary_forms_module(d).unwrap()).unwrap();
        assert_eq!(v.twist(1).unwrap().twist(-1).unwrap(), v);
        let back = v.contragredient().unwrap().contragredient().unwrap();
        for i in 0..v.dim() {
            for j in 0..v.dim() {
                assert_eq!(back.entry(i, j), v.entry(i, j), "B{d} entry ({i},{j})");
            }
        }
        v.contragredient().unwrap().verify().unwrap();
        assert_eq!(v.twist(2).unwrap().polynomial_twist().unwrap().twist_exponent(), -2);
    }
}
