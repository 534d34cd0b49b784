//! The element-indexed view shared by every finite structure in the crate.
//!
//! Elements are dense indices `0..size()`. Table-backed lattices and the
//! implicitly represented Kalmbach lattices both implement [`FiniteLattice`],
//! so the checkers in [`crate::ortho`] run unchanged on either.

use std::borrow::Cow;
use std::collections::HashMap;

/// Outcome of an exhaustive check: either it holds, or the least
/// counterexample (in element-index order) is reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(witness: Vec<usize>) -> Self {
        Verdict { holds: false, witness: Some(witness) }
    }

    /// Witness rendered with element names of `l`.
    pub fn witness_names<L: FiniteLattice + ?Sized>(&self, l: &L) -> Option<Vec<String>> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|&x| l.name(x).into_owned()).collect())
    }
}

/// A finite bounded lattice addressed by element index.
pub trait FiniteLattice {
    fn size(&self) -> usize;
    fn name(&self, x: usize) -> Cow<'_, str>;
    fn bottom(&self) -> usize;
    fn top(&self) -> usize;
    fn leq(&self, x: usize, y: usize) -> bool;
    fn join(&self, x: usize, y: usize) -> usize;
    fn meet(&self, x: usize, y: usize) -> usize;

    fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Upper covers of `x`, ascending.
    fn upper_covers(&self, x: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.size()).filter(|&y| self.lt(x, y)).collect();
        above
            .iter()
            .copied()
            .filter(|&y| !above.iter().any(|&z| z != y && self.leq(z, y)))
            .collect()
    }

    /// Upper covers of `x` that lie below `bound`.
    fn upper_covers_below(&self, x: usize, bound: usize) -> Vec<usize> {
        self.upper_covers(x)
            .into_iter()
            .filter(|&y| self.leq(y, bound))
            .collect()
    }

    fn is_cover(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && !(0..self.size()).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
    }

    /// Elements below `x`, ascending.
    fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.size()).filter(|&z| self.leq(z, x)).collect()
    }

    /// Atoms, ascending.
    fn atoms(&self) -> Vec<usize> {
        let b = self.bottom();
        self.upper_covers(b)
    }

    fn join_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.bottom(), |acc, &x| self.join(acc, x))
    }

    fn meet_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.top(), |acc, &x| self.meet(acc, x))
    }
}

/// A finite ortholattice: a bounded lattice with an orthocomplement.
pub trait Ortho: FiniteLattice {
    fn perp(&self, x: usize) -> usize;
}

/// Length of a longest chain in the interval `[x, y]`.
///
/// Walks upper covers restricted to `y`, memoising per element.
pub fn interval_height<L: FiniteLattice + ?Sized>(l: &L, x: usize, y: usize) -> usize {
    fn go<L: FiniteLattice + ?Sized>(
        l: &L,
        w: usize,
        y: usize,
        memo: &mut HashMap<usize, usize>,
    ) -> usize {
        if w == y {
            return 0;
        }
        if let Some(&h) = memo.get(&w) {
            return h;
        }
        let h = l
            .upper_covers_below(w, y)
            .into_iter()
            .map(|z| 1 + go(l, z, y, memo))
            .max()
            .unwrap_or(0);
        memo.insert(w, h);
        h
    }
    debug_assert!(l.leq(x, y));
    go(l, x, y, &mut HashMap::new())
}

/// `n`-covering property: for every atom `a` and element `x`, the interval
/// `[x, x ∨ a]` has height at most `n`. The witness is the least `(a, x)`.
pub fn has_n_covering<L: FiniteLattice + ?Sized>(l: &L, n: usize) -> Verdict {
    has_n_covering_where(l, n, |_, _| true)
}

/// As [`has_n_covering`], restricted to the pairs `(a, x)` accepted by `keep`
/// (called with the atom and `x`).
pub fn has_n_covering_where<L, F>(l: &L, n: usize, keep: F) -> Verdict
where
    L: FiniteLattice + ?Sized,
    F: Fn(usize, usize) -> bool,
{
    for a in l.atoms() {
        for x in 0..l.size() {
            if !keep(a, x) {
                continue;
            }
            let y = l.join(x, a);
            if y == x {
                continue;
            }
            if interval_height(l, x, y) > n {
                return Verdict::fail(vec![a, x]);
            }
        }
    }
    Verdict::pass()
}

/// A minimum-cardinality subset `S' ⊆ s` with `c ≤ ⋁S'`.
///
/// Subsets of equal size are tried in lexicographic order of positions in
/// `s`, so ties resolve to the lexicographically least subset. Returns `None`
/// when `c` is not below `⋁s`.
pub fn compactness_witness<L: FiniteLattice + ?Sized>(
    l: &L,
    c: usize,
    s: &[usize],
) -> Option<Vec<usize>> {
    use itertools::Itertools;
    if !l.leq(c, l.join_all(s)) {
        return None;
    }
    for k in 0..=s.len() {
        for subset in s.iter().copied().combinations(k) {
            if l.leq(c, l.join_all(&subset)) {
                return Some(subset);
            }
        }
    }
    unreachable!("the full set is a witness")
}
