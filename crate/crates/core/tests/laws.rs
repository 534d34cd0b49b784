use orthokit::corpus;
use orthokit::kalmbach::{kalmbach, kjoin_by_truncation, kleq, kperp, phi_chain, KSeq};
use orthokit::order::{find_isomorphism_with_perp, predicates};
use orthokit::ortho::{
    blocks, blocks_are_atomic, center, center_exhaustive, chains_are_weakly_atomic, commutes, decompose,
    interval_oml, is_directly_irreducible,
};
use orthokit::rn::{classify_atoms, rn_lattice, AtomClass};
use orthokit::{has_n_covering, FiniteLattice, Ortho};

#[test]
fn semimodular_dual_semimodular_and_covering_agree_on_omls() {
    for (name, ol) in corpus::omls() {
        let p = predicates(ol.lattice());
        let c = has_n_covering(&ol, 1).holds;
        assert_eq!(p.is_semimodular.holds, p.is_dual_semimodular.holds, "{name}");
        assert_eq!(p.is_semimodular.holds, c, "{name}");
    }
}

#[test]
fn irreducible_with_covering_is_modular() {
    let mut seen = 0;
    for (name, ol) in corpus::omls() {
        if is_directly_irreducible(&ol) && has_n_covering(&ol, 1).holds {
            seen += 1;
            assert!(predicates(ol.lattice()).is_modular.holds, "{name}");
        }
    }
    assert!(seen >= 3);
}

#[test]
fn blocks_cover_and_are_atomic() {
    for (name, ol) in corpus::omls() {
        let bs = blocks(&ol).unwrap();
        let mut covered = vec![false; ol.len()];
        for b in &bs {
            b.elements.iter().for_each(|&x| covered[x] = true);
        }
        assert!(covered.iter().all(|&c| c), "{name}");
        assert!(blocks_are_atomic(&ol, &bs), "{name}");
        assert!(chains_are_weakly_atomic(ol.lattice()), "{name}");
    }
}

#[test]
fn foulis_holland_on_commuting_triples() {
    for (name, ol) in corpus::omls().into_iter().filter(|(_, o)| o.len() <= 40) {
        let n = ol.len();
        for x in 0..n {
            for y in 0..n {
                if !commutes(&ol, x, y) {
                    continue;
                }
                for z in 0..n {
                    if commutes(&ol, x, z) && commutes(&ol, y, z) {
                        assert_eq!(ol.meet(x, ol.join(y, z)), ol.join(ol.meet(x, y), ol.meet(x, z)), "{name}");
                        assert_eq!(ol.join(x, ol.meet(y, z)), ol.meet(ol.join(x, y), ol.join(x, z)), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn intervals_are_isomorphic_to_lower_intervals() {
    for (name, ol) in corpus::omls().into_iter().filter(|(_, o)| o.len() <= 40) {
        for x in 0..ol.len() {
            for y in 0..ol.len() {
                if ol.leq(x, y) {
                    interval_oml(&ol, x, y).unwrap_or_else(|e| panic!("{name}: {e}"));
                }
            }
        }
    }
}

#[test]
fn centers_split_into_factors() {
    for (name, ol) in corpus::omls().into_iter().filter(|(_, o)| o.len() <= 40) {
        let c = center(&ol);
        assert_eq!(c, center_exhaustive(&ol), "{name}");
        for &z in &c {
            let (a, b) = decompose(&ol, z).unwrap();
            assert_eq!(a.len() * b.len(), ol.len(), "{name}");
        }
    }
}

#[test]
fn kperp_is_an_order_inverting_involution() {
    for (name, l) in corpus::lattices() {
        let k = kalmbach(&l).unwrap();
        for x in k.elements() {
            assert_eq!(&kperp(&l, &kperp(&l, x)), x, "{name}");
            for y in k.elements() {
                if kleq(&l, x, y) {
                    assert!(kleq(&l, &kperp(&l, y), &kperp(&l, x)), "{name}");
                    if kleq(&l, y, x) {
                        assert_eq!(x, y, "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn truncation_joins_agree_with_table_joins() {
    for (name, l) in corpus::lattices() {
        let k = kalmbach(&l).unwrap();
        let table = k.to_ortholattice().unwrap();
        for x in 0..k.len() {
            for y in 0..k.len() {
                let j = kjoin_by_truncation(&k, k.seq(x), k.seq(y)).unwrap();
                assert_eq!(k.id_of(&j), Some(table.join(x, y)), "{name}");
            }
        }
    }
}

#[test]
fn subchain_joins_agree() {
    let c = corpus::chain(6);
    let kc = kalmbach(&c).unwrap();
    // every bounded subchain containing both ends
    for mask in 0u32..16 {
        let members: Vec<usize> = (0..6).filter(|&i| i == 0 || i == 5 || mask >> (i - 1) & 1 == 1).collect();
        let d = c.restrict(&members).unwrap();
        let kd = kalmbach(&d).unwrap();
        let lift = |x: usize| {
            let names: Vec<&str> = kd.seq(x).terms().iter().map(|&t| d.name_of(t)).collect();
            kc.id_from_names(&names).unwrap()
        };
        for x in 0..kd.len() {
            for y in 0..kd.len() {
                assert_eq!(lift(kd.join(x, y)), kc.join(lift(x), lift(y)));
            }
        }
    }
}

#[test]
fn phi_examples() {
    let c = corpus::chain(3);
    let x = KSeq::from_names(&c, &["0", "a"]).unwrap();
    assert_eq!(phi_chain(&c, &x), vec![c.id("0").unwrap()]);
    assert!(phi_chain(&c, &KSeq::empty()).is_empty());
}

#[test]
fn k_blocks_are_k_of_chains() {
    for (name, l) in corpus::lattices() {
        let k = kalmbach(&l).unwrap();
        let chains = l.maximal_chains();
        let bs = blocks(&k).unwrap();
        assert_eq!(bs.len(), chains.len(), "{name}");
        for c in &chains {
            let sub = l.restrict(&c.elements).unwrap();
            let kc = kalmbach(&sub).unwrap().to_ortholattice().unwrap();
            let members = k.supported_on(&c.elements);
            let b = bs.iter().find(|b| b.elements == members).expect("block for chain");
            assert_eq!(b.elements.len(), kc.len(), "{name}");
            // the block carries the structure of K(C)
            let table = k.to_ortholattice().unwrap();
            let restricted = table.lattice().restrict(&b.elements).unwrap();
            let perp: Vec<usize> =
                b.elements.iter().map(|&x| b.elements.binary_search(&k.perp(x)).unwrap()).collect();
            assert!(find_isomorphism_with_perp(&restricted, &perp, kc.lattice(), kc.perp_map()).is_some(), "{name}");
        }
    }
}

#[test]
fn rn_classification_is_stable_across_rows() {
    let named = |r: usize| {
        let rn = rn_lattice(r).unwrap();
        let k = kalmbach(rn.lattice()).unwrap();
        let c = classify_atoms(&rn, &k).unwrap();
        k.atoms()
            .into_iter()
            .filter_map(|a| {
                let class = c.class_of(a).unwrap();
                (class != AtomClass::Artifact).then(|| (k.name(a).into_owned(), class))
            })
            .collect::<Vec<_>>()
    };
    for r in 3..=4 {
        let small = named(r);
        let large = named(r + 1);
        for item in &small {
            assert!(large.contains(item), "{item:?}");
        }
        assert!(large.len() > small.len());
    }
}

#[test]
fn rn_center_comes_from_the_added_top() {
    for r in 3..=4 {
        let rn = rn_lattice(r).unwrap();
        let l = rn.lattice();
        let k = kalmbach(l).unwrap();
        let necks: Vec<usize> = [l.bottom(), rn.element(r, 2).unwrap(), rn.element(r, 3).unwrap(), l.top()].to_vec();
        assert_eq!(center(&k), k.supported_on(&necks));
    }
}
