use proptest::prelude::*;
use tildebraid::extension::G0Element;
use tildebraid::g9tower::{ab9, psi9, QElement};
use tildebraid::words::BraidWord;

fn letters() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..=8i32, any::<bool>()).prop_map(|(k, s)| if s { k } else { -k }), 0..8)
}

fn element() -> impl Strategy<Value = QElement> {
    (letters(), 0..2u8, prop::collection::vec(-2i64..=2, 8)).prop_map(|(l, e, v)| {
        let mut b = [0i64; 9];
        for (slot, x) in [0, 1, 2, 4, 5, 6, 7, 8].into_iter().zip(v) {
            b[slot] = x;
        }
        let braid = QElement::from_braid(&BraidWord::from_letters(9, l).unwrap()).unwrap();
        braid.mul(&QElement::from_g0(G0Element::from_parts(e, b).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn multiplication_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn inverses_cancel(x in element()) {
        prop_assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn projections_are_homomorphisms(x in element(), y in element()) {
        let xy = x.mul(&y);
        prop_assert_eq!(psi9(&xy), psi9(&x).then(&psi9(&y)));
        prop_assert_eq!(ab9(&xy), ab9(&x) + ab9(&y));
    }
}
