use proptest::prelude::*;

use solvdeg::gfield::{prime_power, FieldSpec};

fn prime_powers(max: u64) -> Vec<u64> {
    (2..=max).filter(|&q| prime_power(q).is_some()).collect()
}

#[test]
fn ring_axioms_hold_exhaustively_up_to_64() {
    for q in prime_powers(64) {
        let k = FieldSpec::of_order(q).unwrap();
        let elems: Vec<_> = k.elements().collect();
        for a in &elems {
            for b in &elems {
                assert_eq!(k.add(a, b), k.add(b, a), "q={q}");
                assert_eq!(k.mul(a, b), k.mul(b, a), "q={q}");
                for c in &elems {
                    assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)), "q={q}");
                    assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)), "q={q}");
                    assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)), "q={q}");
                }
            }
        }
    }
}

#[test]
fn frobenius_is_additive_and_multiplicative_up_to_64() {
    for q in prime_powers(64) {
        let k = FieldSpec::of_order(q).unwrap();
        let p = k.characteristic() as i64;
        let elems: Vec<_> = k.elements().collect();
        for a in &elems {
            assert_eq!(k.frobenius(a), k.pow(a, p).unwrap());
            for b in &elems {
                assert_eq!(k.frobenius(&k.add(a, b)), k.add(&k.frobenius(a), &k.frobenius(b)));
                assert_eq!(k.frobenius(&k.mul(a, b)), k.mul(&k.frobenius(a), &k.frobenius(b)));
            }
        }
    }
}

#[test]
fn multiplicative_group_is_cyclic_up_to_1024() {
    for q in prime_powers(1024) {
        let k = FieldSpec::of_order(q).unwrap();
        assert_eq!(k.mult_order(&k.primitive_element()), Some(q as u32 - 1), "q={q}");
    }
}

proptest! {
    #[test]
    fn inverses_and_index_round_trip(qi in 0usize..60, a in 0u32..1 << 20, b in 0u32..1 << 20) {
        let qs = prime_powers(1 << 12);
        let q = qs[qi * qs.len() / 60];
        let k = FieldSpec::of_order(q).unwrap();
        let (x, y) = (k.from_index(a % k.order()), k.from_index(b % k.order()));
        prop_assert_eq!(k.from_index(k.index(&x)), x.clone());
        prop_assert_eq!(k.sub(&k.add(&x, &y), &y), x.clone());
        if !x.is_zero() {
            prop_assert_eq!(k.mul(&x, &k.inv(&x).unwrap()), k.one());
            prop_assert_eq!(k.pow(&x, q as i64 - 1).unwrap(), k.one());
        }
    }
}
