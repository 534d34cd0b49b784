//! Ortholattices and orthomodular lattices over finite bounded lattices.

mod blocks;

use std::borrow::Cow;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lattice::{FiniteLattice, Ortho, Verdict};
use crate::order::{find_isomorphism_with_perp, product_tuples, BoundedLattice};

pub use blocks::{blocks, Block};

/// A bounded lattice with a validated orthocomplementation. Whether the
/// orthomodular law holds is computed once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthoLattice {
    lattice: BoundedLattice,
    perp: Vec<usize>,
    orthomodular: Verdict,
}

/// Commutator value together with the commutation verdict. `advisory` marks
/// results computed on an ortholattice that is not orthomodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Commutation {
    pub gamma: usize,
    pub commutes: bool,
    pub advisory: bool,
}

/// Validate `perp` as an orthocomplementation of `lattice`.
pub fn ortholattice(lattice: BoundedLattice, perp: Vec<usize>) -> Result<OrthoLattice> {
    OrthoLattice::new(lattice, perp)
}

impl OrthoLattice {
    pub fn new(lattice: BoundedLattice, perp: Vec<usize>) -> Result<Self> {
        let n = lattice.len();
        if perp.len() != n {
            let missing = lattice.name_of(perp.len().min(n.saturating_sub(1))).to_string();
            return Err(Error::NonTotalPerp(missing));
        }
        let name = |x: usize| lattice.name_of(x).to_string();
        for x in 0..n {
            if perp[x] >= n || perp[perp[x]] != x {
                return Err(Error::NotInvolutive(name(x)));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if lattice.leq(x, y) && !lattice.leq(perp[y], perp[x]) {
                    return Err(Error::NotOrderInverting(name(x), name(y)));
                }
            }
        }
        for x in 0..n {
            if lattice.meet(x, perp[x]) != lattice.bottom() || lattice.join(x, perp[x]) != lattice.top() {
                return Err(Error::NotComplement(name(x)));
            }
        }
        let mut ol = OrthoLattice { lattice, perp, orthomodular: Verdict::pass() };
        ol.orthomodular = is_orthomodular(&ol);
        Ok(ol)
    }

    /// Build from `(element, perp)` name pairs; every element must appear
    /// exactly once on the left.
    pub fn from_names<S: AsRef<str>>(lattice: BoundedLattice, pairs: &[(S, S)]) -> Result<Self> {
        let mut perp = vec![usize::MAX; lattice.len()];
        for (a, b) in pairs {
            let (a, b) = (lattice.require(a.as_ref())?, lattice.require(b.as_ref())?);
            perp[a] = b;
        }
        if let Some(x) = perp.iter().position(|&p| p == usize::MAX) {
            return Err(Error::NonTotalPerp(lattice.name_of(x).to_string()));
        }
        Self::new(lattice, perp)
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    pub fn perp_map(&self) -> &[usize] {
        &self.perp
    }

    pub fn orthomodular(&self) -> &Verdict {
        &self.orthomodular
    }

    pub fn is_orthomodular(&self) -> bool {
        self.orthomodular.holds
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.lattice.id(name)
    }

    pub fn commutation(&self, x: usize, y: usize) -> Commutation {
        let gamma = commutator(self, x, y);
        Commutation { gamma, commutes: gamma == self.bottom(), advisory: !self.orthomodular.holds }
    }

    fn require_oml(&self) -> Result<()> {
        match &self.orthomodular.witness {
            None => Ok(()),
            Some(w) => Err(Error::NotOrthomodular(self.name(w[0]).into_owned(), self.name(w[1]).into_owned())),
        }
    }
}

impl FiniteLattice for OrthoLattice {
    fn size(&self) -> usize {
        self.lattice.size()
    }
    fn name(&self, x: usize) -> Cow<'_, str> {
        self.lattice.name(x)
    }
    fn bottom(&self) -> usize {
        self.lattice.bottom()
    }
    fn top(&self) -> usize {
        self.lattice.top()
    }
    fn leq(&self, x: usize, y: usize) -> bool {
        self.lattice.leq(x, y)
    }
    fn join(&self, x: usize, y: usize) -> usize {
        self.lattice.join(x, y)
    }
    fn meet(&self, x: usize, y: usize) -> usize {
        self.lattice.meet(x, y)
    }
    fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.lattice.upper_covers(x)
    }
    fn upper_covers_below(&self, x: usize, bound: usize) -> Vec<usize> {
        self.lattice.upper_covers_below(x, bound)
    }
    fn is_cover(&self, x: usize, y: usize) -> bool {
        self.lattice.is_cover(x, y)
    }
    fn down_set(&self, x: usize) -> Vec<usize> {
        self.lattice.down_set(x)
    }
}

impl Ortho for OrthoLattice {
    fn perp(&self, x: usize) -> usize {
        self.perp[x]
    }
}

/// Orthomodular law `x ≤ y ⟹ x ∨ (x⊥ ∧ y) = y` over all comparable pairs;
/// the witness is the least failing `(x, y)`.
pub fn is_orthomodular<O: Ortho + ?Sized>(ol: &O) -> Verdict {
    let mut least: Option<(usize, usize)> = None;
    for y in 0..ol.size() {
        for x in ol.down_set(y) {
            if least.is_some_and(|(lx, _)| x > lx) {
                break;
            }
            if ol.join(x, ol.meet(ol.perp(x), y)) != y {
                least = Some(least.map_or((x, y), |w| w.min((x, y))));
                break;
            }
        }
    }
    least.map_or_else(Verdict::pass, |(x, y)| Verdict::fail(vec![x, y]))
}

/// `γ(x,y) = (x∨y) ∧ (x∨y⊥) ∧ (x⊥∨y) ∧ (x⊥∨y⊥)`.
pub fn commutator<O: Ortho + ?Sized>(ol: &O, x: usize, y: usize) -> usize {
    let (px, py) = (ol.perp(x), ol.perp(y));
    let a = ol.meet(ol.join(x, y), ol.join(x, py));
    let b = ol.meet(ol.join(px, y), ol.join(px, py));
    ol.meet(a, b)
}

pub fn commutes<O: Ortho + ?Sized>(ol: &O, x: usize, y: usize) -> bool {
    commutator(ol, x, y) == ol.bottom()
}

/// Whether every element is the join of the atoms beneath it; the witness
/// is the least element that is not.
pub fn atomistic<L: FiniteLattice + ?Sized>(l: &L) -> Verdict {
    let atoms = l.atoms();
    for x in 0..l.size() {
        let below: Vec<usize> = atoms.iter().copied().filter(|&a| l.leq(a, x)).collect();
        if l.join_all(&below) != x {
            return Verdict::fail(vec![x]);
        }
    }
    Verdict::pass()
}

/// Elements commuting with every element, ascending.
///
/// In an orthomodular lattice the commutant of an element is a subalgebra,
/// so when the lattice is atomistic it suffices to test against atoms.
/// Otherwise every pair is tested.
pub fn center<O: Ortho + ?Sized>(ol: &O) -> Vec<usize> {
    let generators: Vec<usize> = if atomistic(ol).holds {
        ol.atoms()
    } else {
        (0..ol.size()).collect()
    };
    (0..ol.size())
        .filter(|&x| generators.iter().all(|&g| commutes(ol, x, g)))
        .collect()
}

/// Center by testing all pairs.
pub fn center_exhaustive<O: Ortho + ?Sized>(ol: &O) -> Vec<usize> {
    (0..ol.size())
        .filter(|&x| (0..ol.size()).all(|y| commutes(ol, x, y)))
        .collect()
}

pub fn is_directly_irreducible<O: Ortho + ?Sized>(ol: &O) -> bool {
    center(ol).len() <= 2
}

/// Every block is atomic: each nonzero member lies above a member covering
/// `0` within the block.
pub fn blocks_are_atomic<O: Ortho + ?Sized>(ol: &O, blocks: &[Block]) -> bool {
    blocks.iter().all(|b| {
        let e = &b.elements;
        let nonzero: Vec<usize> = e.iter().copied().filter(|&x| x != ol.bottom()).collect();
        let atoms: Vec<usize> = nonzero
            .iter()
            .copied()
            .filter(|&a| !nonzero.iter().any(|&z| z != a && ol.leq(z, a)))
            .collect();
        nonzero.iter().all(|&x| atoms.iter().any(|&a| ol.leq(a, x)))
    })
}

/// Every maximal chain is weakly atomic: each pair `x < y` in the chain has
/// a cover of the chain between them.
pub fn chains_are_weakly_atomic(l: &BoundedLattice) -> bool {
    l.maximal_chains().iter().all(|c| {
        let e = &c.elements;
        (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i..=j].windows(2).any(|w| l.is_cover(w[0], w[1]))))
    })
}

/// `[x, y]` with orthocomplement `z# = x ∨ (z⊥ ∧ y)`. The result is checked
/// to be orthomodular and isomorphic to `[0, y ∧ x⊥]`.
pub fn interval_oml(ol: &OrthoLattice, x: usize, y: usize) -> Result<OrthoLattice> {
    if !ol.leq(x, y) {
        return Err(Error::NotComparable(ol.name(x).into_owned(), ol.name(y).into_owned()));
    }
    ol.require_oml()?;
    let sub = raw_interval(ol, x, y)?;
    let z = ol.meet(y, ol.perp(x));
    let base = raw_interval(ol, ol.bottom(), z)?;
    if !sub.is_orthomodular() {
        return Err(Error::Invalid(format!("interval [{}, {}] is not orthomodular", ol.name(x), ol.name(y))));
    }
    if find_isomorphism_with_perp(sub.lattice(), sub.perp_map(), base.lattice(), base.perp_map()).is_none() {
        return Err(Error::Invalid(format!(
            "interval [{}, {}] is not isomorphic to [0, {}]",
            ol.name(x),
            ol.name(y),
            ol.name(z)
        )));
    }
    Ok(sub)
}

fn raw_interval(ol: &OrthoLattice, x: usize, y: usize) -> Result<OrthoLattice> {
    let view = ol.lattice.interval(x, y)?;
    let local: HashMap<usize, usize> = view.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let perp = view
        .members
        .iter()
        .map(|&z| local[&ol.join(x, ol.meet(ol.perp(z), y))])
        .collect();
    OrthoLattice::new(view.lattice, perp)
}

/// Split at a central element: `x ↦ (x ∧ c, x ∧ c⊥)` onto `[0,c] × [0,c⊥]`.
/// The map is checked to be a bijection preserving meet, join and
/// orthocomplement.
pub fn decompose(ol: &OrthoLattice, c: usize) -> Result<(OrthoLattice, OrthoLattice)> {
    ol.require_oml()?;
    if !(0..ol.len()).all(|y| commutes(ol, c, y)) {
        return Err(Error::NotCentral(ol.name(c).into_owned()));
    }
    let pc = ol.perp(c);
    let left = interval_oml(ol, ol.bottom(), c)?;
    let right = interval_oml(ol, ol.bottom(), pc)?;
    let f = |x: usize| {
        let l = left.id(&ol.name(ol.meet(x, c))).unwrap();
        let r = right.id(&ol.name(ol.meet(x, pc))).unwrap();
        (l, r)
    };
    let image: Vec<(usize, usize)> = (0..ol.len()).map(f).collect();
    let mut seen = image.clone();
    seen.sort_unstable();
    seen.dedup();
    let broken = |what: &str| Error::Invalid(format!("decomposition at {} does not preserve {what}", ol.name(c)));
    if seen.len() != ol.len() || ol.len() != left.len() * right.len() {
        return Err(broken("bijectivity"));
    }
    for x in 0..ol.len() {
        let (lx, rx) = image[x];
        if image[ol.perp(x)] != (left.perp(lx), right.perp(rx)) {
            return Err(broken("orthocomplement"));
        }
        for y in 0..ol.len() {
            let (ly, ry) = image[y];
            if image[ol.join(x, y)] != (left.join(lx, ly), right.join(rx, ry))
                || image[ol.meet(x, y)] != (left.meet(lx, ly), right.meet(rx, ry))
            {
                return Err(broken("lattice operations"));
            }
        }
    }
    Ok((left, right))
}

/// Componentwise product; names are `(x1,...,xk)`.
pub fn product(factors: &[&OrthoLattice]) -> Result<OrthoLattice> {
    let lattices: Vec<&BoundedLattice> = factors.iter().map(|f| f.lattice()).collect();
    let lattice = BoundedLattice::product(&lattices)?;
    let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let tuples = product_tuples(&sizes);
    let position: HashMap<&Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let perp = tuples
        .iter()
        .map(|t| {
            let image: Vec<usize> = t.iter().zip(factors).map(|(&x, f)| f.perp(x)).collect();
            position[&image]
        })
        .collect();
    OrthoLattice::new(lattice, perp)
}

/// Glue orthomodular summands along their bounds. Interior elements of
/// summand `i` are renamed `s{i}.{name}`; a single summand is returned as is.
pub fn horizontal_sum(summands: &[&OrthoLattice]) -> Result<OrthoLattice> {
    match summands {
        [] => return Err(Error::EmptySum),
        [only] => {
            only.require_oml()?;
            return Ok((*only).clone());
        }
        _ => {}
    }
    let mut names = vec!["0".to_string()];
    let mut maps = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        s.require_oml()?;
        let map: Vec<usize> = (0..s.len())
            .map(|x| {
                if x == s.bottom() {
                    0
                } else if x == s.top() {
                    usize::MAX
                } else {
                    names.push(format!("s{i}.{}", s.name(x)));
                    names.len() - 1
                }
            })
            .collect();
        maps.push(map);
    }
    let top = names.len();
    names.push("1".into());
    for map in &mut maps {
        for v in map.iter_mut().filter(|v| **v == usize::MAX) {
            *v = top;
        }
    }
    let mut covers = Vec::new();
    let mut perp = vec![0usize; names.len()];
    perp[0] = top;
    perp[top] = 0;
    for (s, map) in summands.iter().zip(&maps) {
        for &(a, b) in s.lattice().covers() {
            covers.push((names[map[a]].clone(), names[map[b]].clone()));
        }
        for x in 0..s.len() {
            perp[map[x]] = map[s.perp(x)];
        }
    }
    let lattice = BoundedLattice::from_covers(&names, &covers)?;
    let sum = OrthoLattice::new(lattice, perp)?;
    sum.require_oml()?;
    Ok(sum)
}
