//! The Kalmbach construction `K(L)`.
//!
//! Elements are even-length strictly increasing sequences of `L`, read as
//! lists of intervals `[x0,x1], [x2,x3], ...`. `x ⊑ y` when every interval of
//! `x` lies inside some interval of `y`, and `x⊥` toggles `0` and `1` in the
//! term set.
//!
//! [`KalmbachOML`] keeps the elements implicitly. Joins merge intervals, the
//! down-set of `y` is the product of the `K([y2j, y2j+1])`, and upper covers
//! come from joins with atoms. [`KalmbachOML::to_ortholattice`] builds the
//! table-backed lattice with joins found as least upper bounds, which the
//! tests compare against.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Ortho};
use crate::order::BoundedLattice;
use crate::ortho::{blocks, commutes, OrthoLattice};

pub const DEFAULT_K_CAP: usize = 200_000;

/// An element of `K(L)`: the terms of an even-length chain of `L`, bottom
/// to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSeq {
    terms: Vec<usize>,
}

impl KSeq {
    /// Validate `terms` as an even-length strictly increasing sequence.
    pub fn new(l: &BoundedLattice, terms: Vec<usize>) -> Result<Self> {
        if terms.len() % 2 != 0 {
            return Err(Error::Invalid(format!("sequence of odd length {}", terms.len())));
        }
        if let Some(&x) = terms.iter().find(|&&x| x >= l.len()) {
            return Err(Error::Invalid(format!("no element with index {x}")));
        }
        if let Some(w) = terms.windows(2).find(|w| !l.lt(w[0], w[1])) {
            return Err(Error::Invalid(format!(
                "sequence is not strictly increasing at {} {}",
                l.name_of(w[0]),
                l.name_of(w[1])
            )));
        }
        Ok(KSeq { terms })
    }

    pub fn from_names<S: AsRef<str>>(l: &BoundedLattice, names: &[S]) -> Result<Self> {
        let terms = names.iter().map(|n| l.require(n.as_ref())).collect::<Result<_>>()?;
        Self::new(l, terms)
    }

    pub fn empty() -> Self {
        KSeq { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    /// Half the length.
    pub fn ell(&self) -> usize {
        self.terms.len() / 2
    }

    pub fn intervals(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.terms.chunks_exact(2).map(|c| (c[0], c[1]))
    }

    /// The first `2n` terms, or the whole sequence when it is shorter.
    pub fn truncate(&self, n: usize) -> KSeq {
        KSeq { terms: self.terms[..self.terms.len().min(2 * n)].to_vec() }
    }

    /// `()` for the empty sequence, otherwise `(x0,x1,...)`.
    pub fn display(&self, l: &BoundedLattice) -> String {
        let parts: Vec<&str> = self.terms.iter().map(|&t| l.name_of(t)).collect();
        format!("({})", parts.join(","))
    }
}

/// `x ⊑ y`: every interval of `x` sits inside an interval of `y`.
pub fn kleq(l: &BoundedLattice, x: &KSeq, y: &KSeq) -> bool {
    leq_terms(l, &x.terms, &y.terms)
}

fn leq_terms(l: &BoundedLattice, x: &[usize], y: &[usize]) -> bool {
    x.chunks_exact(2)
        .all(|a| y.chunks_exact(2).any(|b| l.leq(b[0], a[0]) && l.leq(a[1], b[1])))
}

/// Term set of `x` with `0` and `1` toggled.
pub fn kperp(l: &BoundedLattice, x: &KSeq) -> KSeq {
    let mut terms = x.terms.clone();
    for b in [l.bottom(), l.top()] {
        match terms.iter().position(|&t| t == b) {
            Some(i) => {
                terms.remove(i);
            }
            None => terms.push(b),
        }
    }
    sort_chain(l, &mut terms);
    KSeq { terms }
}

fn sort_chain(l: &BoundedLattice, terms: &mut [usize]) {
    terms.sort_by(|&a, &b| {
        if a == b {
            Ordering::Equal
        } else if l.leq(a, b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    });
}

/// Join by merging intervals: two intervals that are not strictly separated
/// are replaced by `[l ∧ l', h ∨ h']` until all are separated.
pub fn kjoin(l: &BoundedLattice, x: &KSeq, y: &KSeq) -> KSeq {
    KSeq { terms: join_terms(l, &x.terms, &y.terms) }
}

fn join_terms(l: &BoundedLattice, x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut iv: Vec<(usize, usize)> = x.chunks_exact(2).chain(y.chunks_exact(2)).map(|c| (c[0], c[1])).collect();
    'merge: loop {
        for i in 0..iv.len() {
            for j in i + 1..iv.len() {
                let (a, b) = (iv[i], iv[j]);
                if !(l.lt(a.1, b.0) || l.lt(b.1, a.0)) {
                    iv[i] = (l.meet(a.0, b.0), l.join(a.1, b.1));
                    iv.swap_remove(j);
                    continue 'merge;
                }
            }
        }
        break;
    }
    iv.sort_by(|a, b| if a == b { Ordering::Equal } else if l.lt(a.1, b.0) { Ordering::Less } else { Ordering::Greater });
    iv.into_iter().flat_map(|(a, b)| [a, b]).collect()
}

/// Number of even-length strictly increasing sequences, saturating.
pub fn count_elements(l: &BoundedLattice) -> u128 {
    // chains[x] = (even, odd) counts of sequences starting at x
    let n = l.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| std::cmp::Reverse(l.down_set(x).len()));
    let mut even = vec![0u128; n];
    let mut odd = vec![0u128; n];
    for &x in &order {
        let (mut e, mut o) = (0u128, 1u128);
        for y in l.up_set(x) {
            if y != x {
                e = e.saturating_add(odd[y]);
                o = o.saturating_add(even[y]);
            }
        }
        even[x] = e;
        odd[x] = o;
    }
    even.iter().fold(1u128, |acc, &e| acc.saturating_add(e))
}

/// `K(L)` with its elements held as sequences.
#[derive(Debug, Clone)]
pub struct KalmbachOML {
    base: BoundedLattice,
    elements: Vec<KSeq>,
    names: Vec<String>,
    index: HashMap<Vec<usize>, usize>,
    perp: Vec<usize>,
    atoms: Vec<usize>,
    top: usize,
}

pub fn kalmbach(l: &BoundedLattice) -> Result<KalmbachOML> {
    kalmbach_with_cap(l, DEFAULT_K_CAP)
}

/// As [`kalmbach`], refusing when `K(L)` would exceed `cap` elements.
pub fn kalmbach_with_cap(l: &BoundedLattice, cap: usize) -> Result<KalmbachOML> {
    let count = count_elements(l);
    if count > cap as u128 {
        return Err(Error::TooLarge { size: usize::try_from(count).unwrap_or(usize::MAX), cap });
    }
    let mut seqs = vec![Vec::new()];
    let mut path = Vec::new();
    for x in 0..l.len() {
        path.push(x);
        extend(l, &mut path, &mut seqs, usize::MAX);
        path.pop();
    }
    seqs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let index: HashMap<Vec<usize>, usize> = seqs.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
    let elements: Vec<KSeq> = seqs.into_iter().map(|terms| KSeq { terms }).collect();
    let names = elements.iter().map(|s| s.display(l)).collect();
    let perp = elements.iter().map(|s| index[&kperp(l, s).terms]).collect();
    let top = index[&vec![l.bottom(), l.top()]];
    let mut k = KalmbachOML { base: l.clone(), elements, names, index, perp, atoms: Vec::new(), top };
    // every nonzero x lies above (x0, x1), so atoms have two terms
    let pairs: Vec<usize> = (0..k.elements.len()).filter(|&i| k.elements[i].terms.len() == 2).collect();
    k.atoms = pairs
        .iter()
        .copied()
        .filter(|&p| !pairs.iter().any(|&q| q != p && k.leq(q, p)))
        .collect();
    Ok(k)
}

/// Push every strictly increasing extension of `path` whose terms stay
/// below `bound` (or unbounded for `usize::MAX`); even lengths are recorded.
fn extend(l: &BoundedLattice, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, bound: usize) {
    if path.len() % 2 == 0 {
        out.push(path.clone());
    }
    let last = *path.last().unwrap();
    for y in l.up_set(last) {
        if y != last && (bound == usize::MAX || l.leq(y, bound)) {
            path.push(y);
            extend(l, path, out, bound);
            path.pop();
        }
    }
}

impl KalmbachOML {
    pub fn base(&self) -> &BoundedLattice {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// All elements, ordered by length and then by term indices.
    pub fn elements(&self) -> &[KSeq] {
        &self.elements
    }

    pub fn seq(&self, x: usize) -> &KSeq {
        &self.elements[x]
    }

    pub fn id_of(&self, s: &KSeq) -> Option<usize> {
        self.index.get(&s.terms).copied()
    }

    /// Element given by the names of its terms.
    pub fn id_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<usize> {
        let s = KSeq::from_names(&self.base, names)?;
        Ok(self.index[&s.terms])
    }

    /// Elements whose terms all lie in `members`, ascending.
    pub fn supported_on(&self, members: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.elements[x].terms.iter().all(|t| members.contains(t)))
            .collect()
    }

    /// The table-backed ortholattice on the same elements and names, with
    /// joins and meets found as least upper and greatest lower bounds of
    /// `⊑`. Limited to [`crate::order::DEFAULT_CAP`] elements.
    pub fn to_ortholattice(&self) -> Result<OrthoLattice> {
        let lattice = BoundedLattice::from_order(
            self.names.clone(),
            |i, j| self.leq(i, j),
            crate::order::DEFAULT_CAP,
        )?;
        OrthoLattice::new(lattice, self.perp.clone())
    }
}

impl FiniteLattice for KalmbachOML {
    fn size(&self) -> usize {
        self.elements.len()
    }

    fn name(&self, x: usize) -> Cow<'_, str> {
        Cow::Borrowed(&self.names[x])
    }

    fn bottom(&self) -> usize {
        0
    }

    fn top(&self) -> usize {
        self.top
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        x == y || leq_terms(&self.base, &self.elements[x].terms, &self.elements[y].terms)
    }

    fn join(&self, x: usize, y: usize) -> usize {
        if x == y {
            return x;
        }
        self.index[&join_terms(&self.base, &self.elements[x].terms, &self.elements[y].terms)]
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.perp[self.join(self.perp[x], self.perp[y])]
    }

    fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.upper_covers_below(x, self.top)
    }

    /// Minimal elements among `x ∨ a` for atoms `a ≤ bound`, `a ⋢ x`.
    fn upper_covers_below(&self, x: usize, bound: usize) -> Vec<usize> {
        let mut cand: Vec<usize> = self
            .atoms
            .iter()
            .filter(|&&a| self.leq(a, bound) && !self.leq(a, x))
            .map(|&a| self.join(x, a))
            .collect();
        cand.sort_unstable();
        cand.dedup();
        cand.iter()
            .copied()
            .filter(|&c| !cand.iter().any(|&d| d != c && self.leq(d, c)))
            .collect()
    }

    fn is_cover(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y) && self.upper_covers_below(x, y).contains(&y)
    }

    fn down_set(&self, y: usize) -> Vec<usize> {
        let l = &self.base;
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for (p, q) in self.elements[y].intervals() {
            let mut local = Vec::new();
            let mut path = Vec::new();
            for z in l.up_set(p) {
                if l.leq(z, q) {
                    path.push(z);
                    extend(l, &mut path, &mut local, q);
                    path.pop();
                }
            }
            local.push(Vec::new());
            combos = combos
                .iter()
                .flat_map(|c| local.iter().map(move |s| [c.as_slice(), s.as_slice()].concat()))
                .collect();
        }
        let mut out: Vec<usize> = combos.iter().map(|c| self.index[c]).collect();
        out.sort_unstable();
        out
    }

    fn atoms(&self) -> Vec<usize> {
        self.atoms.clone()
    }
}

impl Ortho for KalmbachOML {
    fn perp(&self, x: usize) -> usize {
        self.perp[x]
    }
}

/// Atoms of `K(L)` are exactly the two-term sequences `(a, b)` with `a <· b`.
/// Atoms are found here as the elements with exactly one nonzero element
/// below them.
pub fn katoms_check(k: &KalmbachOML) -> bool {
    let atoms: Vec<usize> = (0..k.len()).filter(|&x| k.down_set(x).len() == 2).collect();
    let mut covers: Vec<usize> = k
        .base
        .covers()
        .iter()
        .map(|&(a, b)| k.index[&vec![a, b]])
        .collect();
    covers.sort_unstable();
    atoms == covers
}

/// Blocks of `K(L)` are exactly the sets `K(C)` for maximal chains `C`, one
/// for one.
pub fn kblocks_check(k: &KalmbachOML) -> Result<bool> {
    let found: Vec<Vec<usize>> = blocks(k)?.into_iter().map(|b| b.elements).collect();
    let mut expected: Vec<Vec<usize>> = k
        .base
        .maximal_chains()
        .iter()
        .map(|c| k.supported_on(&c.elements))
        .collect();
    expected.sort();
    let distinct = expected.windows(2).all(|w| w[0] != w[1]);
    Ok(distinct && found == expected)
}

/// `Φ(x) = ⋃ [x2n, x2n+1)`, ascending by index.
pub fn phi_chain(c: &BoundedLattice, x: &KSeq) -> Vec<usize> {
    (0..c.len())
        .filter(|&z| x.intervals().any(|(a, b)| c.leq(a, z) && c.lt(z, b)))
        .collect()
}

/// On a chain `C`: `Φ` is a bijection from `K(C)` onto the subsets of
/// `C ∖ {1}` that preserves and reflects order and sends `⊥` to complement.
pub fn phi_check(k: &KalmbachOML) -> bool {
    let c = &k.base;
    let n = c.len();
    if !(0..n).all(|x| (0..n).all(|y| c.comparable(x, y))) || n > 64 {
        return false;
    }
    let mask = |x: usize| -> u64 { phi_chain(c, &k.elements[x]).iter().fold(0, |m, &z| m | 1 << z) };
    let masks: Vec<u64> = (0..k.len()).map(mask).collect();
    let full: u64 = (0..n).filter(|&z| z != c.top()).fold(0, |m, z| m | 1 << z);
    let mut sorted = masks.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k.len() || k.len() as u128 != 1u128 << (n - 1) || masks.iter().any(|&m| m & !full != 0) {
        return false;
    }
    (0..k.len()).all(|x| {
        masks[k.perp(x)] == full & !masks[x]
            && (0..k.len()).all(|y| k.leq(x, y) == (masks[x] & !masks[y] == 0))
    })
}

/// Join through truncations: `zⁿ = xⁿ ∨ yⁿ` for growing `n`, checked to
/// increase under `⊑`, and returned once both inputs are exhausted.
pub fn kjoin_by_truncation(k: &KalmbachOML, x: &KSeq, y: &KSeq) -> Result<KSeq> {
    let steps = x.ell().max(y.ell()).max(1);
    let mut prev: Option<usize> = None;
    for n in 1..=steps {
        let (xn, yn) = (x.truncate(n), y.truncate(n));
        let xi = k.id_of(&xn).ok_or_else(|| Error::Invalid(xn.display(&k.base)))?;
        let yi = k.id_of(&yn).ok_or_else(|| Error::Invalid(yn.display(&k.base)))?;
        let z = k.join(xi, yi);
        if let Some(p) = prev {
            if !k.leq(p, z) {
                return Err(Error::Invalid(format!(
                    "truncation joins decrease from {} to {}",
                    k.name(p),
                    k.name(z)
                )));
            }
        }
        prev = Some(z);
    }
    Ok(k.elements[prev.unwrap()].clone())
}

/// `x` and `y` commute exactly when their terms together form a chain of
/// `L`; checked on every pair.
pub fn kcommute_check(k: &KalmbachOML) -> bool {
    let l = &k.base;
    (0..k.len()).all(|x| {
        (x..k.len()).all(|y| {
            let chain = k.elements[x]
                .terms
                .iter()
                .all(|&a| k.elements[y].terms.iter().all(|&b| l.comparable(a, b)));
            commutes(k, x, y) == chain
        })
    })
}
