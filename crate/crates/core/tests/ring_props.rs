mod common;

use common::{ideal_from, ring, RINGS};
use locring::presentation::parse_ring;
use locring::ring::{build, Ideal};
use proptest::prelude::*;

fn raw() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(any::<u8>(), 8), 0..4)
}

proptest! {
    #[test]
    fn galois_pair(r in 0..RINGS.len(), a in raw(), b in raw()) {
        let r = ring(r);
        let i = ideal_from(&r, &a);
        let j = ideal_from(&r, &b);
        prop_assert!(j.contains(&i.product(&j.colon(&i).unwrap()).unwrap()).unwrap());
        prop_assert!(i.product(&j).unwrap().colon(&i).unwrap().contains(&j).unwrap());
    }

    #[test]
    fn powers_decrease(r in 0..RINGS.len()) {
        let r = ring(r);
        let m = Ideal::maximal(&r);
        for k in 0..r.trunc() {
            prop_assert!(m.power(k).unwrap().contains(&m.power(k + 1).unwrap()).unwrap());
        }
        prop_assert!(m.power(r.trunc()).unwrap().is_zero());
    }

    #[test]
    fn units_outside_maximal_ideal(r in 0..RINGS.len(), raw in prop::collection::vec(any::<u8>(), 8), c in 1u8..=2) {
        let r = ring(r);
        let mut u: Vec<u8> = raw.iter().take(r.dim()).map(|b| b % r.p()).collect();
        u[0] = c % r.p();
        if u[0] == 0 { u[0] = 1; }
        let v = r.inverse(&u).expect("unit");
        prop_assert_eq!(r.mul(&u, &v), r.one());
    }

    #[test]
    fn relation_order_is_irrelevant(r in 0..RINGS.len()) {
        let mut pres = parse_ring(RINGS[r]).unwrap();
        let a = build(pres.clone()).unwrap();
        pres.rels.reverse();
        let b = build(pres).unwrap();
        prop_assert_eq!(a.basis(), b.basis());
        prop_assert_eq!(a.var_actions(), b.var_actions());
    }

    #[test]
    fn presentation_round_trip(r in 0..RINGS.len()) {
        let pres = parse_ring(RINGS[r]).unwrap();
        let again = parse_ring(&pres.to_string()).unwrap();
        prop_assert_eq!(pres.to_string(), again.to_string());
        prop_assert_eq!(pres, again);
    }
}
