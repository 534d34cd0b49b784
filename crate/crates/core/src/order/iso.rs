//! Explicit order-isomorphism search between small lattices.

use super::BoundedLattice;
use crate::lattice::FiniteLattice;

pub fn is_isomorphic(a: &BoundedLattice, b: &BoundedLattice) -> bool {
    find_isomorphism(a, b).is_some()
}

/// An order isomorphism `a → b` as an index map, if one exists.
pub fn find_isomorphism(a: &BoundedLattice, b: &BoundedLattice) -> Option<Vec<usize>> {
    search(a, b, None)
}

/// An order isomorphism that also carries `perp_a` to `perp_b`.
pub fn find_isomorphism_with_perp(
    a: &BoundedLattice,
    perp_a: &[usize],
    b: &BoundedLattice,
    perp_b: &[usize],
) -> Option<Vec<usize>> {
    search(a, b, Some((perp_a, perp_b)))
}

fn search(a: &BoundedLattice, b: &BoundedLattice, perps: Option<(&[usize], &[usize])>) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.covers().len() != b.covers().len() {
        return None;
    }
    let sig = |l: &BoundedLattice, x: usize| (l.up_set(x).len(), l.down_set(x).len(), l.upper_covers(x).len());
    let sig_a: Vec<_> = (0..n).map(|x| sig(a, x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| sig(b, x)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // most constrained first: bottom-up by down-set size
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (sig_a[x].1, x));
    fn go(
        k: usize,
        order: &[usize],
        a: &BoundedLattice,
        b: &BoundedLattice,
        sig_a: &[(usize, usize, usize)],
        sig_b: &[(usize, usize, usize)],
        perps: Option<(&[usize], &[usize])>,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        if map[x] != usize::MAX {
            // fixed earlier through perp
            return go(k + 1, order, a, b, sig_a, sig_b, perps, map, used);
        }
        for y in 0..b.len() {
            if used[y] || sig_a[x] != sig_b[y] {
                continue;
            }
            let mut assigned = vec![(x, y)];
            if let Some((pa, pb)) = perps {
                let (px, py) = (pa[x], pb[y]);
                if px == x || py == y {
                    if !(px == x && py == y) {
                        continue;
                    }
                } else {
                    if map[px] != usize::MAX || used[py] || sig_a[px] != sig_b[py] {
                        continue;
                    }
                    assigned.push((px, py));
                }
            }
            let consistent = assigned.iter().all(|&(u, v)| {
                (0..a.len()).all(|w| {
                    let mw = if let Some(&(_, t)) = assigned.iter().find(|&&(s, _)| s == w) {
                        t
                    } else {
                        map[w]
                    };
                    mw == usize::MAX || (a.leq(u, w) == b.leq(v, mw) && a.leq(w, u) == b.leq(mw, v))
                })
            });
            if !consistent {
                continue;
            }
            for &(u, v) in &assigned {
                map[u] = v;
                used[v] = true;
            }
            if go(k + 1, order, a, b, sig_a, sig_b, perps, map, used) {
                return true;
            }
            for &(u, v) in &assigned {
                map[u] = usize::MAX;
                used[v] = false;
            }
        }
        false
    }
    go(0, &order, a, b, &sig_a, &sig_b, perps, &mut map, &mut used).then_some(map)
}
