use locring::exactla::{preimage, FpMatrix, Subspace};
use proptest::prelude::*;

fn space(p: u8, n: usize, raw: &[Vec<u8>]) -> Subspace {
    let vecs = raw.iter().map(|v| v.iter().take(n).map(|b| b % p).collect()).collect();
    Subspace::span(p, n, vecs).unwrap()
}

fn raw() -> impl Strategy<Value = Vec<Vec<u8>>> {
    prop::collection::vec(prop::collection::vec(any::<u8>(), 6), 0..5)
}

fn prime() -> impl Strategy<Value = u8> {
    prop_oneof![Just(2u8), Just(3u8), Just(5u8)]
}

proptest! {
    #[test]
    fn modular_law(p in prime(), a in raw(), b in raw(), c in raw()) {
        let n = 6;
        let v = space(p, n, &b);
        let w = space(p, n, &c);
        // force U ⊆ W
        let u = space(p, n, &a).intersect(&w).unwrap();
        let lhs = u.sum(&v.intersect(&w).unwrap()).unwrap();
        let rhs = u.sum(&v).unwrap().intersect(&w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_formula(p in prime(), a in raw(), b in raw()) {
        let u = space(p, 6, &a);
        let v = space(p, 6, &b);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
    }

    #[test]
    fn preimage_of_image_and_kernel(p in prime(), rows in raw()) {
        let n = 6;
        let vecs: Vec<Vec<u8>> = rows.iter().map(|v| v.iter().map(|b| b % p).collect()).collect();
        let m = FpMatrix::from_vectors(p, n, &vecs);
        let img = m.image();
        prop_assert!(preimage(&m, &img).unwrap().is_full());
        prop_assert_eq!(m.kernel(), preimage(&m, &Subspace::zero(p, m.nrows())).unwrap());
        prop_assert_eq!(m.rank() + m.kernel().dim(), n);
    }

    #[test]
    fn span_is_canonical(p in prime(), a in raw(), shift in 0usize..5) {
        let mut vecs: Vec<Vec<u8>> = a.iter().map(|v| v.iter().map(|b| b % p).collect()).collect();
        let first = space(p, 6, &a);
        if !vecs.is_empty() {
            let k = shift % vecs.len();
            vecs.rotate_left(k);
            let sum: Vec<u8> = vecs[0].iter().zip(vecs.last().unwrap()).map(|(x, y)| (x + y) % p).collect();
            vecs.push(sum);
        }
        let second = Subspace::span(p, 6, vecs).unwrap();
        prop_assert_eq!(first.basis(), second.basis());
    }
}
