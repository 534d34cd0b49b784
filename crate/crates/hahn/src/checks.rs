//! Seeded randomized checks of the arithmetic, the form and the `π` map.

use std::collections::BTreeSet;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gamma::{gamma_cmp, GammaExp, TypeClass, Val};
use crate::scalar::HahnScalar;
use crate::series::HahnSeries;
use crate::space::{anisotropy_check, form, norm, orthogonalize, pi_of_basis, type_of, KVector, Subspace};

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// Description of the first failing trial.
    pub first_failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Random inputs kept small enough that exact arithmetic stays quick.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Entries in `-bound..=bound` at indices below `len`.
    pub fn gamma(&mut self, len: usize, bound: i64) -> GammaExp {
        GammaExp::from_vec(
            (0..len)
                .map(|_| if self.rng.gen_bool(0.5) { self.rng.gen_range(-bound..=bound) } else { 0 })
                .collect(),
        )
    }

    pub fn rational(&mut self) -> BigRational {
        let n = loop {
            let n: i64 = self.rng.gen_range(-3..=3);
            if n != 0 {
                break n;
            }
        };
        BigRational::new(n.into(), self.rng.gen_range(1i64..=3).into())
    }

    /// One or two terms, exponents supported below `len`.
    pub fn series(&mut self, len: usize) -> HahnSeries {
        let k = self.rng.gen_range(1..=2);
        let terms: Vec<(GammaExp, BigRational)> = (0..k).map(|_| (self.gamma(len, 2), self.rational())).collect();
        let s = HahnSeries::from_terms(terms);
        if s.is_zero() {
            self.series(len)
        } else {
            s
        }
    }

    pub fn scalar(&mut self, len: usize) -> HahnScalar {
        let num = self.series(len);
        if self.rng.gen_bool(0.3) {
            HahnScalar::new(num, self.series(len)).expect("nonzero denominator")
        } else {
            num.into()
        }
    }

    /// Each coordinate zero with probability one half, otherwise usually a
    /// monomial and sometimes a two-term series.
    pub fn vector(&mut self, n: usize) -> KVector {
        KVector::new(
            (0..n)
                .map(|_| {
                    if self.rng.gen_bool(0.5) {
                        HahnScalar::zero()
                    } else if self.rng.gen_bool(0.75) {
                        let (g, q) = (self.gamma(n, 2), self.rational());
                        HahnSeries::from_terms(vec![(g, q)]).into()
                    } else {
                        self.series(n).into()
                    }
                })
                .collect(),
        )
    }

    pub fn nonzero_vector(&mut self, n: usize) -> KVector {
        loop {
            let v = self.vector(n);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// `k` linearly independent vectors in `Eₙ`.
    pub fn independent(&mut self, n: usize, k: usize) -> Vec<KVector> {
        let mut out: Vec<KVector> = Vec::new();
        while out.len() < k {
            let v = self.nonzero_vector(n);
            let mut all = out.clone();
            all.push(v.clone());
            if Subspace::span(n, &all).unwrap().dim() == all.len() {
                out.push(v);
            }
        }
        out
    }

    /// A subspace of random dimension `0..=n`, with the vectors spanning it.
    pub fn subspace(&mut self, n: usize) -> (Subspace, Vec<KVector>) {
        let k = self.rng.gen_range(0..=n);
        let vs = self.independent(n, k);
        (Subspace::span(n, &vs).unwrap(), vs)
    }
}

/// `{T(δᵢ) : i < n}`.
pub fn basis_types(n: usize) -> BTreeSet<TypeClass> {
    (0..n).map(|i| GammaExp::delta(i).type_class()).collect()
}

fn run<F>(name: &'static str, trials: usize, s: &mut Sampler, mut trial: F) -> CheckOutcome
where
    F: FnMut(&mut Sampler) -> Result<(), String>,
{
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        if let Err(e) = trial(s) {
            failures += 1;
            first_failure.get_or_insert(e);
        }
    }
    CheckOutcome { name, trials, failures, first_failure }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Largest ambient dimension for the subspace checks; exact elimination
/// over several indeterminates grows quickly beyond it.
pub const SUBSPACE_DIM: usize = 4;

/// Every check, in a fixed order. `dim` is the ambient dimension of the
/// anisotropy slice; subspace checks draw `n` from `2..=min(dim, SUBSPACE_DIM)`.
pub fn run_all(dim: usize, seed: u64, trials: usize) -> Vec<CheckOutcome> {
    let dim = dim.max(2);
    let mut s = Sampler::new(seed);
    let small = |s: &mut Sampler| s.rng().gen_range(2..=dim.min(SUBSPACE_DIM));
    vec![
        run("field_axioms", trials, &mut s, |s| {
            let (a, b, c) = (s.scalar(3), s.scalar(3), s.scalar(3));
            let (zero, one) = (HahnScalar::zero(), HahnScalar::one());
            ensure(&a + &b == &b + &a && &a * &b == &b * &a, || format!("commutativity: {a}, {b}"))?;
            ensure(&(&a + &b) + &c == &a + &(&b + &c), || format!("additive associativity: {a}, {b}, {c}"))?;
            ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity: {a}, {b}, {c}"))?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity: {a}, {b}, {c}"))?;
            ensure(&a + &zero == a && &a * &one == a && (&a - &a).is_zero(), || format!("identities: {a}"))?;
            let inv = a.inv().map_err(|e| e.to_string())?;
            ensure(&a * &inv == one, || format!("inverse: {a}"))?;
            let (x, y) = (s.series(3), s.series(3));
            let (sx, sy) = (HahnScalar::from(x.clone()), HahnScalar::from(y.clone()));
            ensure(
                HahnScalar::from(&x + &y) == &sx + &sy && HahnScalar::from(&x * &y) == &sx * &sy,
                || format!("embedding: {x}, {y}"),
            )
        }),
        run("order_axioms", trials, &mut s, |s| {
            let (g, h, k) = (s.gamma(5, 3), s.gamma(5, 3), s.gamma(5, 3));
            let o = gamma_cmp(&g, &h);
            ensure(o == gamma_cmp(&h, &g).reverse(), || format!("antisymmetry: {g}, {h}"))?;
            ensure(o.is_eq() == (g == h), || format!("totality: {g}, {h}"))?;
            ensure(gamma_cmp(&(&g + &k), &(&h + &k)) == o, || format!("translation: {g}, {h}, {k}"))?;
            if g <= h && h <= k {
                ensure(g <= k, || format!("transitivity: {g}, {h}, {k}"))?;
            }
            let (x, y) = (s.series(4), s.series(4));
            ensure((&x * &y).valuation() == x.valuation().plus(&y.valuation()), || format!("multiplicative: {x}, {y}"))?;
            let (vx, vy, vs) = (x.valuation(), y.valuation(), (&x + &y).valuation());
            let min = vx.clone().min(vy.clone());
            ensure(vs >= min, || format!("ultrametric: {x}, {y}"))?;
            if vx != vy {
                ensure(vs == min, || format!("strict ultrametric: {x}, {y}"))?;
            }
            let (a, b) = (s.scalar(3), s.scalar(3));
            ensure((&a * &b).valuation() == a.valuation().plus(&b.valuation()), || format!("scalar valuation: {a}, {b}"))
        }),
        run("basis_facts", trials, &mut s, |s| {
            let n = small(s);
            let i = s.rng().gen_range(0..n);
            let j = s.rng().gen_range(0..n);
            ensure(HahnSeries::t(i).valuation() == Val::Fin(GammaExp::delta(i)), || format!("φ(t{i})"))?;
            let (ei, ej) = (KVector::basis(n, i), KVector::basis(n, j));
            ensure(norm(&ei) == HahnScalar::t(i), || format!("⟨e{i}⟩"))?;
            ensure(i == j || form(&ei, &ej).unwrap().is_zero(), || format!("⟨e{i},e{j}⟩"))?;
            ensure(type_of(&ei).unwrap() == GammaExp::delta(i).type_class(), || format!("type(e{i})"))
        }),
        run("anisotropy", trials, &mut s, |s| {
            let f = s.vector(dim);
            let a = anisotropy_check(&f);
            ensure(a.consistent() && a.nonzero == !f.is_zero(), || format!("{f}: {a:?}"))
        }),
        run("orthogonal_types_distinct", trials, &mut s, |s| {
            let n = small(s);
            let k = s.rng().gen_range(1..=n);
            let vs = s.independent(n, k);
            let os = orthogonalize(&vs).map_err(|e| e.to_string())?;
            for (i, a) in os.iter().enumerate() {
                for b in &os[i + 1..] {
                    ensure(form(a, b).unwrap().is_zero(), || format!("not orthogonal: {a}, {b}"))?;
                    ensure(type_of(a).unwrap() != type_of(b).unwrap(), || format!("equal types: {a}, {b}"))?;
                }
            }
            let types: BTreeSet<TypeClass> = os.iter().map(|v| type_of(v).unwrap()).collect();
            ensure(pi_of_basis(&vs) == types, || "Gram minors disagree with Gram–Schmidt".into())?;
            let span = Subspace::span(n, &vs).unwrap();
            ensure(os.len() == vs.len() && os.iter().all(|o| !o.is_zero() && span.contains(o)), || "span changed".into())
        }),
        run("pi_empty_iff_zero", trials, &mut s, |s| {
            let n = small(s);
            let (x, mut vs) = s.subspace(n);
            let p = x.pi();
            ensure(p.is_empty() == (x.dim() == 0) && p.len() == x.dim(), || format!("dim {} π {p:?}", x.dim()))?;
            vs.shuffle(s.rng());
            ensure(pi_of_basis(&vs) == p, || "π depends on the basis".into())
        }),
        run("pi_monotone", trials, &mut s, |s| {
            let n = small(s);
            let (x, _) = s.subspace(n);
            let extra = s.vector(n);
            let y = x.join(&Subspace::span(n, &[extra]).unwrap()).unwrap();
            ensure(x.is_subspace_of(&y) && x.pi().is_subset(&y.pi()), || "π(X) ⊄ π(Y)".into())
        }),
        run("pi_orthogonal_join", trials, &mut s, |s| {
            let n = small(s);
            let (x, _) = s.subspace(n);
            let perp = x.ortho_complement();
            let picked: Vec<KVector> = perp.generators().iter().filter(|_| s.rng().gen_bool(0.5)).cloned().collect();
            let y = Subspace::span(n, &picked).unwrap();
            ensure(x.is_orthogonal_to(&y), || "not orthogonal".into())?;
            let union: BTreeSet<TypeClass> = x.pi().union(&y.pi()).cloned().collect();
            ensure(x.join(&y).unwrap().pi() == union, || "π(X ∨ Y) ≠ π(X) ∪ π(Y)".into())
        }),
        run("pi_complement", trials, &mut s, |s| {
            let n = small(s);
            let (x, _) = s.subspace(n);
            let perp = x.ortho_complement();
            ensure(x.dim() + perp.dim() == n, || "dimensions".into())?;
            ensure(perp.ortho_complement() == x, || "X⊥⊥ ≠ X".into())?;
            let expected: BTreeSet<TypeClass> = basis_types(n).difference(&x.pi()).cloned().collect();
            ensure(perp.pi() == expected, || "π(X⊥) ≠ T[Δ] ∖ π(X)".into())
        }),
        run("pi_chains", trials, &mut s, |s| {
            let n = small(s);
            let vs = s.independent(n, n);
            let chain: Vec<Subspace> = (0..=n).map(|k| Subspace::span(n, &vs[..k]).unwrap()).collect();
            let mut union = BTreeSet::new();
            for w in chain.windows(2) {
                ensure(w[0].pi().is_subset(&w[1].pi()), || "π not increasing".into())?;
            }
            for x in &chain {
                union.extend(x.pi());
            }
            ensure(chain.last().unwrap().pi() == union, || "π of the top ≠ union".into())
        }),
        run("triangle", trials, &mut s, |s| {
            let n = small(s);
            let (f, g) = (s.vector(n), s.vector(n));
            let sum = norm(&f.add(&g).unwrap()).valuation();
            ensure(sum >= norm(&f).valuation().min(norm(&g).valuation()), || format!("{f}, {g}"))
        }),
        run("type_order", trials, &mut s, |s| {
            let n = s.rng().gen_range(1..=12usize);
            let mut g = s.gamma(13, 4);
            let mut v: Vec<i64> = (0..13).map(|i| g.get(i)).collect();
            for (i, x) in v.iter_mut().enumerate() {
                if (x.rem_euclid(2) == 1) != (i == n) {
                    *x += 1;
                }
            }
            g = GammaExp::from_vec(v);
            if !g.is_positive() {
                g = -g;
            }
            ensure(g.type_class() == GammaExp::delta(n).type_class(), || format!("setup: {g}"))?;
            ensure(g > GammaExp::delta(n - 1), || format!("γ = {g}, n = {n}"))
        }),
        run("type_scaling", trials, &mut s, |s| {
            let n = small(s);
            let f = s.nonzero_vector(n);
            let c = s.scalar(n);
            ensure(type_of(&f.scale(&c)).unwrap() == type_of(&f).unwrap(), || format!("{c} · {f}"))
        }),
        run("counting_types", trials, &mut s, |s| {
            let n = small(s);
            let counts = crate::space::counting_types(n);
            ensure(counts.values().all(|&v| v <= 1), || "value above 1".into())?;
            ensure(counts.keys().cloned().collect::<BTreeSet<_>>() == basis_types(n), || "support".into())?;
            let vs = s.independent(n, n);
            let types: BTreeSet<TypeClass> =
                orthogonalize(&vs).unwrap().iter().map(|v| type_of(v).unwrap()).collect();
            ensure(types == basis_types(n), || "maximal family types".into())
        }),
    ]
}
