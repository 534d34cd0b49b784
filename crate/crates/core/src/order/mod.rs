//! Finite bounded lattices stored as explicit order bitsets plus
//! precomputed meet and join tables.

mod iso;
mod predicates;

use std::borrow::Cow;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;

pub use iso::{find_isomorphism, find_isomorphism_with_perp, is_isomorphic};
pub use predicates::{predicates, Predicates};

/// Default ceiling on the number of elements of a table-backed lattice.
pub const DEFAULT_CAP: usize = 4096;

/// A finite bounded lattice with named elements.
///
/// Up-sets are stored as bitsets indexed by position in a fixed linear
/// extension, so the least element of any up-closed set is its first bit.
#[derive(Clone)]
pub struct BoundedLattice {
    names: Vec<String>,
    index: HashMap<String, usize>,
    // position of each element in the linear extension, and its inverse
    pos: Vec<usize>,
    by_pos: Vec<usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    bottom: usize,
    top: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl std::fmt::Debug for BoundedLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundedLattice")
            .field("elements", &self.names)
            .field("covers", &self.cover_names())
            .finish()
    }
}

impl PartialEq for BoundedLattice {
    /// Same names in the same order with the same order relation.
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.covers == other.covers
    }
}

/// Build a lattice from its Hasse diagram. Non-cover pairs are accepted and
/// absorbed by the transitive closure.
pub fn lattice_from_covers<S: AsRef<str>>(names: &[S], cover_pairs: &[(S, S)]) -> Result<BoundedLattice> {
    BoundedLattice::from_covers(names, cover_pairs)
}

impl BoundedLattice {
    pub fn from_covers<S: AsRef<str>>(names: &[S], cover_pairs: &[(S, S)]) -> Result<Self> {
        Self::from_covers_with_cap(names, cover_pairs, DEFAULT_CAP)
    }

    pub fn from_covers_with_cap<S: AsRef<str>>(
        names: &[S],
        cover_pairs: &[(S, S)],
        cap: usize,
    ) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index = name_index(&names)?;
        let n = names.len();
        if n > cap {
            return Err(Error::TooLarge { size: n, cap });
        }
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownName(s.as_ref().to_string()))
        };
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for (a, b) in cover_pairs {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if a == b {
                return Err(Error::CycleDetected(names[a].clone()));
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        // Kahn's algorithm; leftovers sit on a cycle
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
        while let Some(x) = ready.pop() {
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    ready.push(y);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&x| indeg[x] > 0).unwrap();
            return Err(Error::CycleDetected(names[stuck].clone()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &succ[x] {
                set.union_with(&up[y]);
            }
            up[x] = set;
        }
        Self::build(names, index, up)
    }

    /// Build from an arbitrary order relation given as a predicate. The
    /// relation is checked to be a partial order.
    pub fn from_order<F>(names: Vec<String>, leq: F, cap: usize) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = names.len();
        if n > cap {
            return Err(Error::TooLarge { size: n, cap });
        }
        let index = name_index(&names)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotAnOrder(names[x].clone(), names[x].clone()));
            }
            for y in up[x].ones() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotAnOrder(names[x].clone(), names[y].clone()));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::NotAnOrder(names[x].clone(), names[y].clone()));
                }
            }
        }
        Self::build(names, index, up)
    }

    /// Finish construction from plain up-sets (indexed by element).
    fn build(names: Vec<String>, index: HashMap<String, usize>, up_by_elem: Vec<FixedBitSet>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::NoBounds);
        }
        let mut down_count = vec![0usize; n];
        for row in &up_by_elem {
            for y in row.ones() {
                down_count[y] += 1;
            }
        }
        let mut by_pos: Vec<usize> = (0..n).collect();
        by_pos.sort_by_key(|&x| (down_count[x], x));
        let mut pos = vec![0; n];
        for (p, &x) in by_pos.iter().enumerate() {
            pos[x] = p;
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in up_by_elem[x].ones() {
                up[x].insert(pos[y]);
                down[y].insert(pos[x]);
            }
        }
        let bottom = (0..n).find(|&x| up[x].count_ones(..) == n).ok_or(Error::NoBounds)?;
        let top = (0..n).find(|&x| down[x].count_ones(..) == n).ok_or(Error::NoBounds)?;

        let up_count: Vec<usize> = up.iter().map(|s| s.count_ones(..)).collect();
        let down_count: Vec<usize> = down.iter().map(|s| s.count_ones(..)).collect();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            join[x * n + x] = x as u32;
            meet[x * n + x] = x as u32;
            for y in x + 1..n {
                let j = least_of(&up[x], &up[y], &up_count, &by_pos, false)
                    .ok_or_else(|| Error::NotALattice(names[x].clone(), names[y].clone(), "join"))?;
                let m = least_of(&down[x], &down[y], &down_count, &by_pos, true)
                    .ok_or_else(|| Error::NotALattice(names[x].clone(), names[y].clone(), "meet"))?;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }

        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            for py in up[x].ones() {
                let y = by_pos[py];
                if y == x {
                    continue;
                }
                if intersection_count(&up[x], &down[y]) == 2 {
                    covers.push((x, y));
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }
        covers.sort_unstable();
        for list in upper.iter_mut().chain(lower.iter_mut()) {
            list.sort_unstable();
        }
        Ok(BoundedLattice {
            names,
            index,
            pos,
            by_pos,
            up,
            down,
            join,
            meet,
            bottom,
            top,
            covers,
            upper,
            lower,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name_of(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Like [`Self::id`], failing with `UnknownName`.
    pub fn require(&self, name: &str) -> Result<usize> {
        self.id(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// All cover pairs `(a, b)` with `a <· b`, ascending.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn cover_names(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    /// Elements above `x`, ascending by index.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.up[x].ones().map(|p| self.by_pos[p]).collect();
        v.sort_unstable();
        v
    }

    /// Elements below `x`, ascending by index.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.down[x].ones().map(|p| self.by_pos[p]).collect();
        v.sort_unstable();
        v
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Every maximal chain, as bottom-to-top index lists, in lexicographic
    /// order of those lists.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut path = vec![self.bottom];
        self.extend_chains(&mut path, &mut out);
        out.sort_by(|a, b| a.elements.cmp(&b.elements));
        out
    }

    fn extend_chains(&self, path: &mut Vec<usize>, out: &mut Vec<Chain>) {
        let last = *path.last().unwrap();
        if self.upper[last].is_empty() {
            out.push(Chain { elements: path.clone(), maximal: true });
            return;
        }
        for &next in &self.upper[last] {
            path.push(next);
            self.extend_chains(path, out);
            path.pop();
        }
    }

    /// One less than the largest chain cardinality.
    pub fn height(&self) -> usize {
        let mut longest = vec![0usize; self.len()];
        for &x in &self.by_pos {
            for &y in &self.upper[x] {
                longest[y] = longest[y].max(longest[x] + 1);
            }
        }
        longest[self.top]
    }

    /// The closed interval `[x, y]` as a lattice in its own right.
    pub fn interval(&self, x: usize, y: usize) -> Result<IntervalView> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(self.names[x].clone(), self.names[y].clone()));
        }
        let members: Vec<usize> = (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        let names = members.iter().map(|&z| self.names[z].clone()).collect();
        let lattice = BoundedLattice::from_order(names, |i, j| self.leq(members[i], members[j]), usize::MAX)?;
        Ok(IntervalView { lower: x, upper: y, members, lattice })
    }

    /// Sub-order on a subset of elements, keeping names.
    pub fn restrict(&self, members: &[usize]) -> Result<BoundedLattice> {
        let names = members.iter().map(|&z| self.names[z].clone()).collect();
        BoundedLattice::from_order(names, |i, j| self.leq(members[i], members[j]), usize::MAX)
    }

    /// Direct product; element names are `(x1,...,xk)`.
    pub fn product(factors: &[&BoundedLattice]) -> Result<BoundedLattice> {
        let tuples = product_tuples(&factors.iter().map(|f| f.len()).collect::<Vec<_>>());
        let names = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().zip(factors).map(|(&x, f)| f.name_of(x)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        BoundedLattice::from_order(
            names,
            |i, j| (0..factors.len()).all(|k| factors[k].leq(tuples[i][k], tuples[j][k])),
            DEFAULT_CAP,
        )
    }

    /// Glue `upper` on top of `self`, identifying the top of `self` with the
    /// bottom of `upper`. The glued element keeps the name from `self`; other
    /// names of `upper` already in use get `'` appended until unique.
    pub fn ordinal_sum(&self, upper: &BoundedLattice) -> Result<BoundedLattice> {
        let mut names = self.names.clone();
        let mut map_upper = vec![0usize; upper.len()];
        for (u, slot) in map_upper.iter_mut().enumerate() {
            if u == upper.bottom {
                *slot = self.top;
            } else {
                *slot = names.len();
                let mut name = upper.names[u].clone();
                while names.contains(&name) {
                    name.push('\'');
                }
                names.push(name);
            }
        }
        let mut covers: Vec<(String, String)> = self.cover_names();
        for &(a, b) in upper.covers() {
            covers.push((names[map_upper[a]].clone(), names[map_upper[b]].clone()));
        }
        let pairs: Vec<(&str, &str)> = covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let names_ref: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        BoundedLattice::from_covers(&names_ref, &pairs)
    }
}

fn name_index(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), i).is_some() {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(index)
}

/// All index tuples of a product, last coordinate fastest.
pub(crate) fn product_tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..s).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn intersection_count(a: &FixedBitSet, b: &FixedBitSet) -> usize {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Least element of `a ∩ b` (or greatest, when `from_top`), provided the
/// candidate's own up-set (down-set) is the whole intersection.
fn least_of(
    a: &FixedBitSet,
    b: &FixedBitSet,
    count: &[usize],
    by_pos: &[usize],
    from_top: bool,
) -> Option<usize> {
    let blocks_a = a.as_slice();
    let blocks_b = b.as_slice();
    let bits = usize::BITS as usize;
    let mut total = 0usize;
    let mut first = None;
    let mut last = None;
    for (i, (x, y)) in blocks_a.iter().zip(blocks_b).enumerate() {
        let w = x & y;
        if w != 0 {
            total += w.count_ones() as usize;
            if first.is_none() {
                first = Some(i * bits + w.trailing_zeros() as usize);
            }
            last = Some(i * bits + (bits - 1 - w.leading_zeros() as usize));
        }
    }
    let p = if from_top { last? } else { first? };
    let z = by_pos[p];
    (count[z] == total).then_some(z)
}

impl FiniteLattice for BoundedLattice {
    fn size(&self) -> usize {
        self.names.len()
    }

    fn name(&self, x: usize) -> Cow<'_, str> {
        Cow::Borrowed(&self.names[x])
    }

    fn bottom(&self) -> usize {
        self.bottom
    }

    fn top(&self) -> usize {
        self.top
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(self.pos[y])
    }

    fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.upper[x].clone()
    }

    fn upper_covers_below(&self, x: usize, bound: usize) -> Vec<usize> {
        self.upper[x].iter().copied().filter(|&y| self.leq(y, bound)).collect()
    }

    fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    fn down_set(&self, x: usize) -> Vec<usize> {
        BoundedLattice::down_set(self, x)
    }
}

/// A chain of elements listed bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub elements: Vec<usize>,
    pub maximal: bool,
}

impl Chain {
    pub fn names(&self, l: &BoundedLattice) -> Vec<String> {
        self.elements.iter().map(|&x| l.names[x].clone()).collect()
    }
}

/// The interval `[lower, upper]` of a parent lattice.
#[derive(Debug, Clone)]
pub struct IntervalView {
    pub lower: usize,
    pub upper: usize,
    /// Parent indices of the members; member `i` of `lattice` is `members[i]`.
    pub members: Vec<usize>,
    pub lattice: BoundedLattice,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn two_chain() {
        let l = lattice_from_covers(&["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.height(), 1);
    }

    #[test]
    fn diamond() {
        let l = corpus::m2();
        let (a, b) = (l.id("a").unwrap(), l.id("b").unwrap());
        assert_eq!(l.name_of(l.join(a, b)), "1");
        assert_eq!(l.name_of(l.meet(a, b)), "0");
        assert_eq!(
            l.cover_names(),
            vec![
                ("0".into(), "a".into()),
                ("0".into(), "b".into()),
                ("a".into(), "1".into()),
                ("b".into(), "1".into())
            ]
        );
        assert_eq!(l.atoms(), vec![a, b]);
    }

    #[test]
    fn chain_atoms() {
        let l = lattice_from_covers(&["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "1")]).unwrap();
        assert_eq!(l.atoms(), vec![1]);
    }

    #[test]
    fn cube_counts() {
        let l = corpus::boolean(3);
        assert_eq!(l.atoms().len(), 3);
        assert_eq!(l.covers().len(), 12);
        let chains = l.maximal_chains();
        assert_eq!(chains.len(), 6);
        assert!(chains.iter().all(|c| c.elements.len() == 4));
    }

    #[test]
    fn chains_m2_n5() {
        let m2 = corpus::m2();
        let names: Vec<Vec<String>> = m2.maximal_chains().iter().map(|c| c.names(&m2)).collect();
        assert_eq!(names, vec![vec!["0", "a", "1"], vec!["0", "b", "1"]]);
        let n5 = corpus::n5();
        let names: Vec<Vec<String>> = n5.maximal_chains().iter().map(|c| c.names(&n5)).collect();
        assert_eq!(names, vec![vec!["0", "a", "b", "1"], vec!["0", "c", "1"]]);
    }

    #[test]
    fn boolean_heights() {
        for n in 0..=5 {
            assert_eq!(corpus::boolean(n).height(), n);
        }
    }

    #[test]
    fn intervals() {
        let cube = corpus::boolean(3);
        let atom = cube.atoms()[0];
        let view = cube.interval(atom, cube.top()).unwrap();
        assert!(is_isomorphic(&view.lattice, &corpus::boolean(2)));
        let point = cube.interval(atom, atom).unwrap();
        assert_eq!(point.lattice.len(), 1);
        assert_eq!(point.lattice.height(), 0);
        let other = cube.atoms()[1];
        assert!(matches!(cube.interval(atom, other), Err(Error::NotComparable(..))));
    }

    #[test]
    fn rejects_non_lattice() {
        // two incomparable upper bounds for a, b
        let err = lattice_from_covers(
            &["0", "a", "b", "c", "d", "1"],
            &[("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")],
        )
        .unwrap_err();
        assert_eq!(err, Error::NotALattice("a".into(), "b".into(), "join"));
    }

    #[test]
    fn rejects_missing_bounds_and_cycles() {
        let err = lattice_from_covers(&["a", "b"], &[]).unwrap_err();
        assert_eq!(err, Error::NoBounds);
        let err = lattice_from_covers(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
        let err = lattice_from_covers(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, Error::DuplicateName("a".into()));
        let err = lattice_from_covers(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, Error::UnknownName("z".into()));
    }

    #[test]
    fn size_cap_is_hard() {
        let names: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> = (0..4).map(|i| (i.to_string(), (i + 1).to_string())).collect();
        let err = BoundedLattice::from_covers_with_cap(&names, &pairs, 4).unwrap_err();
        assert_eq!(err, Error::TooLarge { size: 5, cap: 4 });
    }

    #[test]
    fn transitive_edges_are_absorbed() {
        let l = lattice_from_covers(&["0", "a", "1"], &[("0", "a"), ("a", "1"), ("0", "1")]).unwrap();
        assert_eq!(l.covers().len(), 2);
    }
}
