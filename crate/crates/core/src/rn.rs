//! Finite truncations of the Rieger–Nishimura ladder and the atom-level
//! facts about their Kalmbach lattices.
//!
//! Row `i` holds `a{i}0 .. a{i}3` (row 0 starts at `a01`, the bottom). Covers
//! run `a{i}{j} <· a{i}{j+1}` along a row and `a{i}{j} <· a{i+1}{j-1}` across
//! rows; an added element `1` covers the single maximal element `a{r}3`.

use crate::error::{Error, Result};
use crate::kalmbach::{kalmbach, KalmbachOML};
use crate::lattice::{compactness_witness, has_n_covering, has_n_covering_where, FiniteLattice, Ortho, Verdict};
use crate::order::BoundedLattice;
use crate::ortho::{center, commutes, is_orthomodular};

#[derive(Debug, Clone)]
pub struct RnLattice {
    rows: usize,
    lattice: BoundedLattice,
    coords: Vec<Option<(usize, usize)>>,
}

pub fn rn_lattice(rows: usize) -> Result<RnLattice> {
    if rows < 1 {
        return Err(Error::RowsTooSmall { got: rows, min: 1 });
    }
    let cells: Vec<(usize, usize)> = (0..=rows)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .filter(|&c| c != (0, 0))
        .collect();
    let name = |(i, j): (usize, usize)| format!("a{i}{j}");
    let mut names: Vec<String> = cells.iter().copied().map(name).collect();
    names.push("1".into());
    let mut covers = Vec::new();
    for &(i, j) in &cells {
        if j < 3 {
            covers.push((name((i, j)), name((i, j + 1))));
        }
        if j >= 1 && i < rows {
            covers.push((name((i, j)), name((i + 1, j - 1))));
        }
    }
    covers.push((name((rows, 3)), "1".into()));
    let lattice = BoundedLattice::from_covers(&names, &covers)?;
    let coords = names
        .iter()
        .map(|n| cells.iter().copied().find(|&c| name(c) == *n))
        .collect();
    Ok(RnLattice { rows, lattice, coords })
}

/// Degree of `a{i}{j}` in the cover graph of the untruncated ladder.
pub fn infinite_degree(i: usize, j: usize) -> usize {
    let exists = |i: usize, j: usize| j <= 3 && (i, j) != (0, 0);
    let mut d = 0;
    if j >= 1 && exists(i, j - 1) {
        d += 1;
    }
    if j < 3 {
        d += 1;
    }
    if j >= 1 {
        d += 1;
    }
    if i >= 1 && exists(i - 1, j + 1) {
        d += 1;
    }
    d
}

const EXCEPTIONAL: [((usize, usize), (usize, usize)); 5] = [
    ((0, 1), (0, 2)),
    ((0, 2), (0, 3)),
    ((0, 1), (1, 0)),
    ((0, 2), (1, 1)),
    ((1, 0), (1, 1)),
];

impl RnLattice {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn lattice(&self) -> &BoundedLattice {
        &self.lattice
    }

    /// `(i, j)` for `a{i}{j}`, `None` for the top.
    pub fn coords(&self, x: usize) -> Option<(usize, usize)> {
        self.coords[x]
    }

    pub fn element(&self, i: usize, j: usize) -> Option<usize> {
        self.coords.iter().position(|&c| c == Some((i, j)))
    }

    /// Grid elements covered by the added top.
    pub fn maximal_grid_elements(&self) -> Vec<usize> {
        self.lattice.lower_covers(self.lattice.top()).to_vec()
    }

    /// Degree of `x` in the cover graph of this truncation.
    pub fn degree(&self, x: usize) -> usize {
        self.lattice.covers().iter().filter(|&&(a, b)| a == x || b == x).count()
    }

    fn classify_edge(&self, a: usize, b: usize) -> AtomClass {
        let (Some(p), Some(q)) = (self.coords[a], self.coords[b]) else {
            return AtomClass::Artifact;
        };
        if p.0 + 1 >= self.rows || q.0 + 1 >= self.rows {
            return AtomClass::Artifact;
        }
        if EXCEPTIONAL.contains(&(p, q)) {
            return AtomClass::Exceptional;
        }
        match (infinite_degree(p.0, p.1), infinite_degree(q.0, q.1)) {
            (4, 4) => AtomClass::Internal,
            (2, 4) | (4, 2) => AtomClass::External,
            _ => AtomClass::Exceptional,
        }
    }

    /// The shift `a{i}{j} ↦ a{i+1}{j}` on rows `0..r-1`, checked to preserve
    /// and reflect order, preserve covers, and preserve joins and meets that
    /// stay inside the grid.
    pub fn shift_embedding_check(&self) -> bool {
        let l = &self.lattice;
        let dom: Vec<usize> = (0..l.len())
            .filter(|&x| matches!(self.coords[x], Some((i, _)) if i < self.rows))
            .collect();
        let f = |x: usize| {
            let (i, j) = self.coords[x].unwrap();
            self.element(i + 1, j).unwrap()
        };
        let in_dom = |x: usize| dom.contains(&x);
        dom.iter().all(|&x| {
            dom.iter().all(|&y| {
                let (j, m) = (l.join(x, y), l.meet(x, y));
                l.leq(x, y) == l.leq(f(x), f(y))
                    && l.is_cover(x, y) == l.is_cover(f(x), f(y))
                    && (!in_dom(j) || f(j) == l.join(f(x), f(y)))
                    && (!in_dom(m) || f(m) == l.meet(f(x), f(y)))
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomClass {
    Internal,
    External,
    Exceptional,
    /// Touches the last two rows or the added top, where degrees differ from
    /// the untruncated ladder.
    Artifact,
}

/// Atoms of `K(L)` grouped by class, each list ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomClassification {
    pub internal: Vec<usize>,
    pub external: Vec<usize>,
    pub exceptional: Vec<usize>,
    pub artifacts: Vec<usize>,
}

impl AtomClassification {
    pub fn class_of(&self, atom: usize) -> Option<AtomClass> {
        [
            (&self.internal, AtomClass::Internal),
            (&self.external, AtomClass::External),
            (&self.exceptional, AtomClass::Exceptional),
            (&self.artifacts, AtomClass::Artifact),
        ]
        .into_iter()
        .find(|(v, _)| v.contains(&atom))
        .map(|(_, c)| c)
    }
}

/// Classify the atoms of `k = K(rn)` by the degrees of their endpoints in the
/// untruncated ladder. Needs at least three rows.
pub fn classify_atoms(rn: &RnLattice, k: &KalmbachOML) -> Result<AtomClassification> {
    if rn.rows < 3 {
        return Err(Error::RowsTooSmall { got: rn.rows, min: 3 });
    }
    let mut out = AtomClassification { internal: vec![], external: vec![], exceptional: vec![], artifacts: vec![] };
    for atom in k.atoms() {
        let t = k.seq(atom).terms();
        let list = match rn.classify_edge(t[0], t[1]) {
            AtomClass::Internal => &mut out.internal,
            AtomClass::External => &mut out.external,
            AtomClass::Exceptional => &mut out.exceptional,
            AtomClass::Artifact => &mut out.artifacts,
        };
        list.push(atom);
    }
    Ok(out)
}

/// Atoms `p` with `γ(p, atom) ≠ 0`, ascending.
pub fn noncommuting_atoms<O: Ortho + ?Sized>(ol: &O, atom: usize) -> Vec<usize> {
    ol.atoms().into_iter().filter(|&p| !commutes(ol, p, atom)).collect()
}

/// Split `atoms` into groups connected by commutation. For an internal atom
/// the four non-commuting atoms fall into two commuting pairs.
pub fn commuting_groups<O: Ortho + ?Sized>(ol: &O, atoms: &[usize]) -> Vec<Vec<usize>> {
    let mut group: Vec<usize> = (0..atoms.len()).collect();
    fn find(g: &mut [usize], i: usize) -> usize {
        if g[i] != i {
            g[i] = find(g, g[i]);
        }
        g[i]
    }
    for i in 0..atoms.len() {
        for j in i + 1..atoms.len() {
            if commutes(ol, atoms[i], atoms[j]) {
                let (a, b) = (find(&mut group, i), find(&mut group, j));
                group[a.max(b)] = a.min(b);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for i in 0..atoms.len() {
        let r = find(&mut group, i);
        match roots.iter().position(|&x| x == r) {
            Some(p) => out[p].push(atoms[i]),
            None => {
                roots.push(r);
                out.push(vec![atoms[i]]);
            }
        }
    }
    out
}

/// Exactly four atoms fail to commute with `atom`, and the join of any two
/// of them lies above `atom`.
pub fn pairwise_join_check<O: Ortho + ?Sized>(ol: &O, atom: usize) -> bool {
    let nc = noncommuting_atoms(ol, atom);
    nc.len() == 4
        && nc
            .iter()
            .enumerate()
            .all(|(i, &p)| nc[i + 1..].iter().all(|&q| ol.leq(atom, ol.join(p, q))))
}

/// Per-atom facts gathered for the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomFacts {
    pub atom: usize,
    pub class: AtomClass,
    pub noncommuting: Vec<usize>,
    pub groups: Vec<Vec<usize>>,
    /// Whether all pairwise joins of `noncommuting` lie above the atom.
    pub pairwise_joins_dominate: bool,
    /// Least subset of `noncommuting` whose join lies above the atom.
    pub compactness_witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct RnReport {
    pub rows: usize,
    pub size: usize,
    pub orthomodular: Verdict,
    pub center: Vec<usize>,
    /// Center is `{0, 1}`.
    pub directly_irreducible: bool,
    /// Every central element other than `0` and `1` has a term in the last
    /// two rows or the added top.
    pub directly_irreducible_away_from_top: bool,
    pub covering1: Verdict,
    pub covering2: Verdict,
    /// 2-covering over intervals `[x, x ∨ a]` whose top avoids the added `1`.
    pub covering2_away_from_top: Verdict,
    pub shift_embedding: bool,
    pub classification: AtomClassification,
    pub atoms: Vec<AtomFacts>,
    pub kalmbach: KalmbachOML,
}

impl RnReport {
    pub fn internal_claim_holds(&self) -> bool {
        self.facts(AtomClass::Internal)
            .all(|f| f.noncommuting.len() == 4 && f.pairwise_joins_dominate)
    }

    pub fn external_claim_holds(&self) -> bool {
        self.facts(AtomClass::External).all(|f| f.noncommuting.len() == 6)
    }

    pub fn compactness_holds(&self) -> bool {
        self.atoms
            .iter()
            .filter(|f| f.class != AtomClass::Artifact)
            .all(|f| f.compactness_witness.as_ref().is_some_and(|w| w.len() <= 2))
    }

    pub fn facts(&self, class: AtomClass) -> impl Iterator<Item = &AtomFacts> {
        self.atoms.iter().filter(move |f| f.class == class)
    }

    /// Structured text, one fact per line.
    pub fn render(&self) -> String {
        let k = &self.kalmbach;
        let names = |v: &[usize]| v.iter().map(|&x| k.name(x).into_owned()).collect::<Vec<_>>().join(" ");
        let verdict = |v: &Verdict| match &v.witness {
            None => "true".to_string(),
            Some(w) => format!("false ({})", names(w)),
        };
        let mut s = String::new();
        s += &format!("rows: {}\nsize: {}\n", self.rows, self.size);
        s += &format!("orthomodular: {}\n", verdict(&self.orthomodular));
        s += &format!("center: {}\n", names(&self.center));
        s += &format!("directly_irreducible: {}\n", self.directly_irreducible);
        s += &format!("directly_irreducible_away_from_top: {}\n", self.directly_irreducible_away_from_top);
        s += &format!("covering_1: {}\n", verdict(&self.covering1));
        s += &format!("covering_2: {}\n", verdict(&self.covering2));
        s += &format!("covering_2_away_from_top: {}\n", verdict(&self.covering2_away_from_top));
        s += &format!("shift_embedding: {}\n", self.shift_embedding);
        s += &format!("internal_claim: {}\n", self.internal_claim_holds());
        s += &format!("external_claim: {}\n", self.external_claim_holds());
        s += &format!("compactness: {}\n", self.compactness_holds());
        for f in &self.atoms {
            let groups: Vec<String> = f.groups.iter().map(|g| format!("[{}]", names(g))).collect();
            s += &format!(
                "atom {} {:?}: noncommuting {} groups {} joins_dominate {} witness {}\n",
                k.name(f.atom),
                f.class,
                f.noncommuting.len(),
                groups.join(" "),
                f.pairwise_joins_dominate,
                f.compactness_witness.as_ref().map_or("none".to_string(), |w| format!("[{}]", names(w))),
            );
        }
        s
    }
}

/// Build `K(rn_lattice(rows))` and evaluate every check on it.
pub fn rn_report(rows: usize) -> Result<RnReport> {
    if rows < 3 {
        return Err(Error::RowsTooSmall { got: rows, min: 3 });
    }
    let rn = rn_lattice(rows)?;
    let k = kalmbach(rn.lattice())?;
    let classification = classify_atoms(&rn, &k)?;
    let top_of_l = rn.lattice().top();
    let away = |a: usize, x: usize| !k.seq(k.join(x, a)).terms().contains(&top_of_l);
    let center = center(&k);
    let touches_boundary = |x: usize| {
        k.seq(x).terms().iter().any(|&t| rn.coords(t).is_none_or(|(i, _)| i + 1 >= rows))
    };
    let irreducible_away = center
        .iter()
        .all(|&x| x == k.bottom() || x == k.top() || touches_boundary(x));
    let mut atoms = Vec::new();
    for atom in k.atoms() {
        let class = classification.class_of(atom).expect("every atom is classified");
        let nc = noncommuting_atoms(&k, atom);
        let dominate = nc
            .iter()
            .enumerate()
            .all(|(i, &p)| nc[i + 1..].iter().all(|&q| k.leq(atom, k.join(p, q))));
        atoms.push(AtomFacts {
            atom,
            class,
            groups: commuting_groups(&k, &nc),
            pairwise_joins_dominate: dominate,
            compactness_witness: compactness_witness(&k, atom, &nc),
            noncommuting: nc,
        });
    }
    Ok(RnReport {
        rows,
        size: k.len(),
        orthomodular: is_orthomodular(&k),
        directly_irreducible: center.len() == 2,
        directly_irreducible_away_from_top: irreducible_away,
        center,
        covering1: has_n_covering(&k, 1),
        covering2: has_n_covering(&k, 2),
        covering2_away_from_top: has_n_covering_where(&k, 2, away),
        shift_embedding: rn.shift_embedding_check(),
        classification,
        atoms,
        kalmbach: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_atoms() {
        let rn = rn_lattice(1).unwrap();
        assert_eq!(rn.lattice().len(), 8);
        for r in 1..=6 {
            let rn = rn_lattice(r).unwrap();
            assert_eq!(rn.lattice().len(), 3 + 4 * r + 1);
            let atoms: Vec<&str> = rn.lattice().atoms().iter().map(|&a| rn.lattice().name_of(a)).collect();
            assert_eq!(atoms, vec!["a02", "a10"]);
            assert_eq!(rn.lattice().name_of(rn.lattice().bottom()), "a01");
            assert!(rn.shift_embedding_check());
        }
        assert_eq!(rn_lattice(0).unwrap_err(), Error::RowsTooSmall { got: 0, min: 1 });
    }

    #[test]
    fn exceptional_edges_and_incomparability() {
        let rn = rn_lattice(2).unwrap();
        let l = rn.lattice();
        let (a02, a10, a11) = (l.id("a02").unwrap(), l.id("a10").unwrap(), l.id("a11").unwrap());
        assert!(l.is_cover(a02, a11));
        assert!(!l.comparable(a02, a10));
    }

    #[test]
    fn degrees_match_the_ladder_away_from_the_top() {
        let rn = rn_lattice(6).unwrap();
        for x in 0..rn.lattice().len() {
            if let Some((i, j)) = rn.coords(x) {
                if i + 1 < rn.rows() {
                    assert_eq!(rn.degree(x), infinite_degree(i, j), "a{i}{j}");
                }
            }
        }
        assert_eq!(infinite_degree(0, 2), 3);
        assert_eq!(infinite_degree(1, 1), 4);
        assert_eq!(infinite_degree(3, 0), 2);
        assert_eq!(infinite_degree(3, 3), 2);
    }

    #[test]
    fn k_sizes() {
        let expected = [64u128, 480, 3584, 26752];
        for (r, &n) in (1..=4).zip(&expected) {
            assert_eq!(crate::kalmbach::count_elements(rn_lattice(r).unwrap().lattice()), n);
        }
    }

    #[test]
    fn classification_rows_3() {
        let rn = rn_lattice(3).unwrap();
        let k = kalmbach(rn.lattice()).unwrap();
        let c = classify_atoms(&rn, &k).unwrap();
        assert_eq!(c.exceptional.len(), 5);
        let find = |a: &str, b: &str| k.id_from_names(&[a, b]).unwrap();
        assert_eq!(c.class_of(find("a21", "a22")), Some(AtomClass::Artifact));
        assert_eq!(c.class_of(find("a11", "a12")), Some(AtomClass::Internal));
        assert_eq!(c.class_of(find("a02", "a03")), Some(AtomClass::Exceptional));
        assert_eq!(c.class_of(find("a10", "a11")), Some(AtomClass::Exceptional));
        assert_eq!(c.class_of(find("a03", "a12")), Some(AtomClass::External));
        assert!(matches!(classify_atoms(&rn_lattice(2).unwrap(), &kalmbach(rn_lattice(2).unwrap().lattice()).unwrap()), Err(Error::RowsTooSmall { got: 2, min: 3 })));
    }

    #[test]
    fn internal_atom_example() {
        let rn = rn_lattice(4).unwrap();
        let k = kalmbach(rn.lattice()).unwrap();
        let c = k.id_from_names(&["a21", "a22"]).unwrap();
        let nc: Vec<String> = noncommuting_atoms(&k, c).iter().map(|&x| k.name(x).into_owned()).collect();
        assert_eq!(nc, vec!["(a12,a13)", "(a13,a22)", "(a21,a30)", "(a30,a31)"]);
        assert!(pairwise_join_check(&k, c));
        assert_eq!(commuting_groups(&k, &noncommuting_atoms(&k, c)).len(), 2);
    }
}
