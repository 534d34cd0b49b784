use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::Ortho;

use super::{commutes, is_orthomodular};

/// A maximal pairwise-commuting subset, with the closure facts verified on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Members, ascending.
    pub elements: Vec<usize>,
    pub has_bounds: bool,
    pub meet_closed: bool,
    pub join_closed: bool,
    pub perp_closed: bool,
    pub distributive: bool,
}

impl Block {
    pub fn is_boolean(&self) -> bool {
        self.has_bounds && self.meet_closed && self.join_closed && self.perp_closed && self.distributive
    }

    pub fn names<O: Ortho + ?Sized>(&self, ol: &O) -> Vec<String> {
        self.elements.iter().map(|&x| ol.name(x).into_owned()).collect()
    }

    fn inspect<O: Ortho + ?Sized>(ol: &O, elements: Vec<usize>) -> Block {
        let n = ol.size();
        let mut member = FixedBitSet::with_capacity(n);
        for &x in &elements {
            member.insert(x);
        }
        let pairs = || elements.iter().flat_map(|&x| elements.iter().map(move |&y| (x, y)));
        let meet_closed = pairs().all(|(x, y)| member.contains(ol.meet(x, y)));
        let join_closed = pairs().all(|(x, y)| member.contains(ol.join(x, y)));
        let distributive = meet_closed
            && join_closed
            && pairs().all(|(x, y)| {
                elements
                    .iter()
                    .all(|&z| ol.meet(x, ol.join(y, z)) == ol.join(ol.meet(x, y), ol.meet(x, z)))
            });
        Block {
            has_bounds: member.contains(ol.bottom()) && member.contains(ol.top()),
            perp_closed: elements.iter().all(|&x| member.contains(ol.perp(x))),
            meet_closed,
            join_closed,
            distributive,
            elements,
        }
    }
}

/// All blocks, sorted by their element lists.
///
/// Blocks are the maximal cliques of the commutation graph; each is checked
/// to be a Boolean subalgebra, and a failure is reported as an error since
/// it cannot happen in an orthomodular lattice.
pub fn blocks<O: Ortho + ?Sized>(ol: &O) -> Result<Vec<Block>> {
    if let Some(w) = is_orthomodular(ol).witness {
        return Err(Error::NotOrthomodular(ol.name(w[0]).into_owned(), ol.name(w[1]).into_owned()));
    }
    let n = ol.size();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in x + 1..n {
            if commutes(ol, x, y) {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
    }
    let mut cliques = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    bron_kerbosch(&adj, &mut Vec::new(), p, FixedBitSet::with_capacity(n), &mut cliques);
    let mut out = Vec::with_capacity(cliques.len());
    for mut c in cliques {
        c.sort_unstable();
        let b = Block::inspect(ol, c);
        if !b.is_boolean() {
            return Err(Error::BlockNotBoolean(b.names(ol)));
        }
        out.push(b);
    }
    out.sort_by(|a, b| a.elements.cmp(&b.elements));
    Ok(out)
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    r: &mut Vec<usize>,
    p: FixedBitSet,
    x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&adj[u]).count())
        .expect("p is non-empty");
    let mut p = p;
    let mut x = x;
    let candidates: Vec<usize> = p.difference(&adj[pivot]).collect();
    for v in candidates {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        r.push(v);
        bron_kerbosch(adj, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::FiniteLattice;

    #[test]
    fn boolean_has_one_block() {
        for n in 0..=4 {
            let ol = corpus::boolean_ol(n);
            let bs = blocks(&ol).unwrap();
            assert_eq!(bs.len(), 1);
            assert_eq!(bs[0].elements.len(), ol.size());
        }
    }

    #[test]
    fn mo_blocks() {
        for k in 1..=4 {
            let ol = corpus::mo(k);
            let bs = blocks(&ol).unwrap();
            assert_eq!(bs.len(), k);
            assert!(bs.iter().all(|b| b.elements.len() == 4));
        }
        let bs = blocks(&corpus::mo(2)).unwrap();
        assert_eq!(bs[0].names(&corpus::mo(2)), vec!["0", "a", "a'", "1"]);
    }

    #[test]
    fn blocks_cover_the_lattice() {
        let ol = super::super::product(&[&corpus::mo(2), &corpus::mo(3)]).unwrap();
        let bs = blocks(&ol).unwrap();
        let mut seen = vec![false; ol.size()];
        for b in &bs {
            for &x in &b.elements {
                seen[x] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
        assert_eq!(bs.len(), 6);
    }

    #[test]
    fn non_oml_is_rejected() {
        assert!(matches!(blocks(&corpus::o6()), Err(Error::NotOrthomodular(..))));
    }
}
