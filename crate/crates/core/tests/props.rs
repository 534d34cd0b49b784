use proptest::prelude::*;

use orthokit::corpus;
use orthokit::kalmbach::{kalmbach, katoms_check, kcommute_check, phi_chain, KSeq};
use orthokit::ortho::{commutator, commutes, is_orthomodular, product};
use orthokit::{BoundedLattice, FiniteLattice, OrthoLattice, Ortho};

fn generator(i: usize) -> BoundedLattice {
    match i % 6 {
        0 => corpus::chain(2),
        1 => corpus::chain(3),
        2 => corpus::m2(),
        3 => corpus::n5(),
        4 => corpus::m_n(3),
        _ => corpus::hexagon(),
    }
}

/// Lattices built from small generators by ordinal sums and products.
fn lattice() -> impl Strategy<Value = BoundedLattice> {
    (0usize..6, 0usize..6, 0usize..3).prop_map(|(a, b, how)| {
        let (x, y) = (generator(a), generator(b));
        match how {
            0 => x,
            1 => x.ordinal_sum(&y).unwrap(),
            _ => BoundedLattice::product(&[&x, &corpus::chain(2)]).unwrap(),
        }
    })
}

fn oml(i: usize) -> OrthoLattice {
    match i % 4 {
        0 => corpus::boolean_ol(2),
        1 => corpus::mo(2),
        2 => corpus::mo(3),
        _ => corpus::o6(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lattice_identities(l in lattice(), s in any::<[usize; 3]>()) {
        let n = l.len();
        let (x, y, z) = (s[0] % n, s[1] % n, s[2] % n);
        prop_assert_eq!(l.join(x, y), l.join(y, x));
        prop_assert_eq!(l.join(x, l.join(y, z)), l.join(l.join(x, y), z));
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.leq(x, y), l.join(x, y) == y);
    }

    #[test]
    fn kalmbach_laws(l in lattice()) {
        let k = kalmbach(&l).unwrap();
        prop_assert!(is_orthomodular(&k).holds);
        prop_assert!(katoms_check(&k));
        prop_assert!(kcommute_check(&k));
    }

    #[test]
    fn merge_join_is_least_upper_bound(l in lattice(), s in any::<[usize; 2]>()) {
        let k = kalmbach(&l).unwrap();
        let (x, y) = (s[0] % k.len(), s[1] % k.len());
        let j = k.join(x, y);
        let ub: Vec<usize> = (0..k.len()).filter(|&u| k.leq(x, u) && k.leq(y, u)).collect();
        prop_assert!(ub.contains(&j));
        prop_assert!(ub.iter().all(|&u| k.leq(j, u)));
    }

    #[test]
    fn phi_turns_joins_into_unions(n in 2usize..8, s in any::<[usize; 2]>()) {
        let c = corpus::chain(n);
        let k = kalmbach(&c).unwrap();
        let (x, y) = (s[0] % k.len(), s[1] % k.len());
        let phi = |i: usize| phi_chain(&c, k.seq(i));
        let mut union = phi(x);
        union.extend(phi(y));
        union.sort_unstable();
        union.dedup();
        prop_assert_eq!(phi(k.join(x, y)), union);
        let all: Vec<usize> = (0..n).filter(|&z| z != c.top()).collect();
        let comp: Vec<usize> = all.into_iter().filter(|z| !phi(x).contains(z)).collect();
        prop_assert_eq!(phi(k.perp(x)), comp);
        prop_assert_eq!(KSeq::empty().ell(), 0);
    }

    #[test]
    fn commutator_is_symmetric(a in 0usize..4, b in 0usize..4, s in any::<[usize; 2]>()) {
        let p = product(&[&oml(a), &oml(b)]).unwrap();
        let (x, y) = (s[0] % p.len(), s[1] % p.len());
        prop_assert_eq!(commutator(&p, x, y), commutator(&p, y, x));
        if p.is_orthomodular() && p.leq(x, y) {
            prop_assert!(commutes(&p, x, y));
        }
        prop_assert_eq!(p.perp(p.perp(x)), x);
        prop_assert_eq!(p.is_orthomodular(), oml(a).is_orthomodular() && oml(b).is_orthomodular());
    }
}
