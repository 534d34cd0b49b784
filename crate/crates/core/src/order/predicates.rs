//! Structural predicates decided by exhaustive quantification.
//!
//! Witnesses are the least counterexample in lexicographic index order.
//! Where a cheaper equivalent criterion exists it decides first, and the
//! tuple scan only runs to locate the witness.

use fixedbitset::FixedBitSet;

use super::BoundedLattice;
use crate::lattice::{has_n_covering, FiniteLattice, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicates {
    pub is_modular: Verdict,
    pub is_semimodular: Verdict,
    pub is_dual_semimodular: Verdict,
    pub has_covering: Verdict,
    pub is_atomic: Verdict,
    pub is_atomistic: Verdict,
    pub is_weakly_atomic: Verdict,
    pub is_strongly_atomic: Verdict,
    pub is_distributive: Verdict,
    pub is_complemented: Verdict,
    pub is_relatively_complemented: Verdict,
}

impl Predicates {
    /// `(name, verdict)` pairs in a fixed reporting order.
    pub fn entries(&self) -> [(&'static str, &Verdict); 11] {
        [
            ("modular", &self.is_modular),
            ("semimodular", &self.is_semimodular),
            ("dual_semimodular", &self.is_dual_semimodular),
            ("covering", &self.has_covering),
            ("atomic", &self.is_atomic),
            ("atomistic", &self.is_atomistic),
            ("weakly_atomic", &self.is_weakly_atomic),
            ("strongly_atomic", &self.is_strongly_atomic),
            ("distributive", &self.is_distributive),
            ("complemented", &self.is_complemented),
            ("relatively_complemented", &self.is_relatively_complemented),
        ]
    }
}

pub fn predicates(l: &BoundedLattice) -> Predicates {
    Predicates {
        is_modular: modular(l),
        is_semimodular: semimodular(l),
        is_dual_semimodular: dual_semimodular(l),
        has_covering: has_n_covering(l, 1),
        is_atomic: atomic(l),
        is_atomistic: atomistic(l),
        is_weakly_atomic: weakly_atomic(l),
        is_strongly_atomic: strongly_atomic(l),
        is_distributive: distributive(l),
        is_complemented: complemented(l),
        is_relatively_complemented: relatively_complemented(l),
    }
}

fn first_pair<F: Fn(usize, usize) -> bool>(n: usize, ok: F) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            if !ok(x, y) {
                return Verdict::fail(vec![x, y]);
            }
        }
    }
    Verdict::pass()
}

/// Least `(x, y, z)` with `x ≤ z` failing `ok`.
fn first_triple_above<F: Fn(usize, usize, usize) -> bool>(l: &BoundedLattice, ok: F) -> Verdict {
    for x in 0..l.len() {
        let up = l.up_set(x);
        for y in 0..l.len() {
            if let Some(&z) = up.iter().find(|&&z| !ok(x, y, z)) {
                return Verdict::fail(vec![x, y, z]);
            }
        }
    }
    Verdict::pass()
}

/// `x ≤ z ⟹ x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
///
/// At finite length this is upper plus lower semimodularity, which decides
/// the common case; the triple scan only runs to locate a witness.
fn modular(l: &BoundedLattice) -> Verdict {
    if semimodular(l).holds && dual_semimodular(l).holds {
        return Verdict::pass();
    }
    first_triple_above(l, |x, y, z| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z))
}

/// `a ∧ b <· a ⟹ b <· a ∨ b`.
fn semimodular(l: &BoundedLattice) -> Verdict {
    first_pair(l.len(), |a, b| !l.is_cover(l.meet(a, b), a) || l.is_cover(b, l.join(a, b)))
}

/// `a <· a ∨ b ⟹ a ∧ b <· b`.
fn dual_semimodular(l: &BoundedLattice) -> Verdict {
    first_pair(l.len(), |a, b| !l.is_cover(a, l.join(a, b)) || l.is_cover(l.meet(a, b), b))
}

fn first_single<F: Fn(usize) -> bool>(n: usize, ok: F) -> Verdict {
    match (0..n).find(|&x| !ok(x)) {
        Some(x) => Verdict::fail(vec![x]),
        None => Verdict::pass(),
    }
}

fn atomic(l: &BoundedLattice) -> Verdict {
    let atoms = l.atoms();
    first_single(l.len(), |x| x == l.bottom() || atoms.iter().any(|&a| l.leq(a, x)))
}

fn atomistic(l: &BoundedLattice) -> Verdict {
    let atoms = l.atoms();
    first_single(l.len(), |x| {
        atoms.iter().filter(|&&a| l.leq(a, x)).fold(l.bottom(), |acc, &a| l.join(acc, a)) == x
    })
}

/// Every `x < y` has a cover `a <· b` with `x ≤ a`, `b ≤ y`. An upper
/// cover of `x` below `y` settles the pair; otherwise all covers are tried.
fn weakly_atomic(l: &BoundedLattice) -> Verdict {
    first_pair(l.len(), |x, y| {
        !l.lt(x, y)
            || l.upper[x].iter().any(|&w| l.leq(w, y))
            || l.covers.iter().any(|&(a, b)| l.leq(x, a) && l.leq(b, y))
    })
}

/// Every interval is atomic: each `x < z` has some `w` with `x <· w ≤ z`.
fn strongly_atomic(l: &BoundedLattice) -> Verdict {
    first_pair(l.len(), |x, z| !l.lt(x, z) || l.upper[x].iter().any(|&w| l.leq(w, z)))
}

/// `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
///
/// Decided first by join-irreducibles: the map `x ↦ {j ∈ J : j ≤ x}` is
/// injective and preserves meets, so the lattice is distributive exactly
/// when it also preserves joins.
fn distributive(l: &BoundedLattice) -> Verdict {
    let n = l.len();
    let irreducibles: Vec<usize> = (0..n).filter(|&j| l.lower[j].len() == 1).collect();
    let below: Vec<FixedBitSet> = (0..n)
        .map(|x| {
            let mut s = FixedBitSet::with_capacity(irreducibles.len());
            for (i, &j) in irreducibles.iter().enumerate() {
                s.set(i, l.leq(j, x));
            }
            s
        })
        .collect();
    let preserved = (0..n).all(|x| {
        (x + 1..n).all(|y| {
            let mut u = below[x].clone();
            u.union_with(&below[y]);
            u == below[l.join(x, y)]
        })
    });
    if preserved {
        return Verdict::pass();
    }
    for x in 0..n {
        for y in 0..n {
            if let Some(z) = (0..n).find(|&z| l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
                return Verdict::fail(vec![x, y, z]);
            }
        }
    }
    unreachable!("join-irreducibles decide distributivity")
}

fn complemented(l: &BoundedLattice) -> Verdict {
    let n = l.len();
    first_single(n, |x| (0..n).any(|y| l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()))
}

/// Every interval `[x, y]` is complemented; witness `(x, y, z)` with
/// `x ≤ z ≤ y`, least in that order.
///
/// For fixed `x ≤ z`, the tops reachable as `z ∨ w` with `z ∧ w = x` are
/// collected once, and every `y ≥ z` outside them fails.
fn relatively_complemented(l: &BoundedLattice) -> Verdict {
    let n = l.len();
    let mut reach = FixedBitSet::with_capacity(n);
    for x in 0..n {
        let up = l.up_set(x);
        let mut least: Option<(usize, usize)> = None;
        for &z in &up {
            reach.clear();
            for &w in &up {
                if l.meet(z, w) == x {
                    reach.insert(l.join(z, w));
                }
            }
            if let Some(&y) = up.iter().find(|&&y| l.leq(z, y) && !reach.contains(y)) {
                least = Some(least.map_or((y, z), |m| m.min((y, z))));
            }
        }
        if let Some((y, z)) = least {
            return Verdict::fail(vec![x, y, z]);
        }
    }
    Verdict::pass()
}
