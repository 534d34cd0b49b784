use std::cmp::Ordering;
use std::collections::BTreeSet;

use orthokit_hahn::checks::run_all;
use orthokit_hahn::*;

fn s(src: &str) -> HahnSeries {
    parse_series(src).unwrap()
}

fn e(n: usize, i: usize) -> KVector {
    KVector::basis(n, i)
}

fn types(ix: &[usize]) -> BTreeSet<TypeClass> {
    ix.iter().map(|&i| GammaExp::delta(i).type_class()).collect()
}

#[test]
fn gamma_order_examples() {
    assert_eq!(gamma_cmp(&GammaExp::delta(0), &GammaExp::delta(1)), Ordering::Less);
    let g = GammaExp::from_sparse(&[(0, 5), (1, -1)]);
    assert!(g < GammaExp::zero());
    assert_eq!(GammaExp::from_vec(vec![1, 0, 0]), GammaExp::delta(0));
}

#[test]
fn series_examples() {
    for n in 0..6 {
        assert_eq!(HahnSeries::t(n).valuation(), Val::Fin(GammaExp::delta(n)));
    }
    let p = &s("1 + t[(0:1)]") * &s("1 - t[(0:1)]");
    assert_eq!(p, s("1 - t[(0:2)]"));
    assert_eq!(p.valuation(), Val::Fin(GammaExp::zero()));
    assert_eq!(HahnSeries::zero().valuation(), Val::Inf);
}

#[test]
fn scalar_examples() {
    let t0 = HahnScalar::t(0);
    let inv = t0.inv().unwrap();
    assert_eq!(inv, HahnScalar::new(HahnSeries::one(), HahnSeries::t(0)).unwrap());
    assert_eq!(inv.valuation(), Val::Fin(-GammaExp::delta(0)));
    let a: HahnScalar = s("1 + t[(0:1)]").into();
    assert_eq!(&a * &a.inv().unwrap(), HahnScalar::one());
    let lhs = HahnScalar::new(HahnSeries::t(0), s("t[(0:2)]")).unwrap();
    assert_eq!(lhs, HahnScalar::new(HahnSeries::one(), HahnSeries::t(0)).unwrap());
    assert_eq!(HahnScalar::zero().inv().unwrap_err(), Error::DivisionByZero);
}

#[test]
fn form_examples() {
    for n in 0..5 {
        assert_eq!(norm(&e(5, n)), HahnScalar::t(n));
        for m in 0..5 {
            if m != n {
                assert!(form(&e(5, m), &e(5, n)).unwrap().is_zero());
            }
        }
    }
    let f = e(2, 0).add(&e(2, 1)).unwrap();
    assert_eq!(norm(&f), HahnScalar::from(s("t[(0:1)] + t[(1:1)]")));
    assert_eq!(norm(&f).valuation(), Val::Fin(GammaExp::delta(0)));
    let g = KVector::new(vec![HahnScalar::t(1), -&HahnScalar::t(0)]);
    assert!(form(&f, &g).unwrap().is_zero());
    assert_eq!(norm(&f.add(&g).unwrap()), &norm(&f) + &norm(&g));
    assert_eq!(form(&e(2, 0), &e(3, 0)).unwrap_err(), Error::DimensionMismatch { left: 2, right: 3 });
}

#[test]
fn anisotropy_examples() {
    let z = anisotropy_check(&KVector::zeros(4));
    assert!(!z.nonzero && z.valuation == Val::Inf);
    let a = anisotropy_check(&e(3, 2));
    assert!(a.nonzero && a.valuation == Val::Fin(GammaExp::delta(2)) && a.consistent());
}

#[test]
fn type_examples() {
    for n in 0..6 {
        assert_eq!(type_of(&e(6, n)).unwrap(), GammaExp::delta(n).type_class());
    }
    let f = e(2, 0).add(&e(2, 1)).unwrap();
    assert_eq!(type_of(&f).unwrap(), GammaExp::delta(0).type_class());
    let c: HahnScalar = s("3 * t[(0:1, 2:-1)] + t[(1:1)]").into();
    assert_eq!(type_of(&f.scale(&c)).unwrap(), type_of(&f).unwrap());
    assert_eq!(type_of(&KVector::zeros(2)).unwrap_err(), Error::ZeroVector);
}

#[test]
fn orthogonalize_examples() {
    assert_eq!(orthogonalize(&[e(2, 0), e(2, 1)]).unwrap(), vec![e(2, 0), e(2, 1)]);
    let f = e(2, 0).add(&e(2, 1)).unwrap();
    assert_eq!(orthogonalize(&[e(2, 0), f.clone()]).unwrap(), vec![e(2, 0), e(2, 1)]);
    assert_eq!(orthogonalize(&[f.clone(), f]).unwrap_err(), Error::DependentInput);
}

#[test]
fn gram_matrix_of_random_families_is_diagonal() {
    let mut sampler = checks::Sampler::new(11);
    for _ in 0..25 {
        let vs = sampler.independent(5, 3);
        let os = orthogonalize(&vs).unwrap();
        assert_eq!(os.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(form(&os[i], &os[j]).unwrap().is_zero(), i != j);
            }
        }
        assert_eq!(Subspace::span(5, &os).unwrap(), Subspace::span(5, &vs).unwrap());
    }
}

#[test]
fn pi_examples() {
    assert!(pi_map(&Subspace::zero(3)).is_empty());
    let x = Subspace::span(3, &[e(3, 0), e(3, 1)]).unwrap();
    assert_eq!(pi_map(&x), types(&[0, 1]));
    assert_eq!(pi_map(&ortho_complement(&x)), types(&[2]));
    assert_eq!(pi_map(&Subspace::whole(4)), types(&[0, 1, 2, 3]));
}

#[test]
fn complement_examples() {
    let x = Subspace::span(3, &[e(3, 0)]).unwrap();
    assert_eq!(ortho_complement(&x), Subspace::span(3, &[e(3, 1), e(3, 2)]).unwrap());
    let f = e(2, 0).add(&e(2, 1)).unwrap();
    let x = Subspace::span(2, &[f]).unwrap();
    let g = KVector::new(vec![HahnScalar::t(1), -&HahnScalar::t(0)]);
    assert_eq!(ortho_complement(&x), Subspace::span(2, &[g]).unwrap());
    assert!(x.closure_check());
}

#[test]
fn double_complement_in_five_dimensions() {
    let mut sampler = checks::Sampler::new(5);
    for _ in 0..20 {
        let (x, _) = sampler.subspace(5);
        let perp = x.ortho_complement();
        assert_eq!(x.dim() + perp.dim(), 5);
        assert!(x.is_orthogonal_to(&perp));
        assert!(x.closure_check());
    }
}

#[test]
fn counting_types_examples() {
    let c = counting_types(3);
    assert_eq!(c.len(), 3);
    assert!(c.values().all(|&v| v == 1));
    assert_eq!(c.keys().cloned().collect::<BTreeSet<_>>(), types(&[0, 1, 2]));
}

#[test]
fn randomized_checks_pass_and_repeat() {
    let a = run_all(6, 0, 40);
    for o in &a {
        assert!(o.passed(), "{o:?}");
        assert_eq!(o.trials, 40);
    }
    assert_eq!(a, run_all(6, 0, 40));
    assert_eq!(a.len(), 14);
}
