//! Hand-listed small lattices and ortholattices used as test fixtures and
//! CLI examples.

use crate::lattice::FiniteLattice;
use crate::order::BoundedLattice;
use crate::kalmbach::kalmbach;
use crate::ortho::{self, OrthoLattice};

fn letters(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if k <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("c{}", i + 1)
            }
        })
        .collect()
}

fn build(names: &[String], covers: &[(String, String)]) -> BoundedLattice {
    BoundedLattice::from_covers(names, covers).expect("corpus lattice is valid")
}

/// The chain with `n ≥ 1` elements: `0 < a < b < ... < 1`.
pub fn chain(n: usize) -> BoundedLattice {
    assert!(n >= 1);
    let mut names = vec!["0".to_string()];
    if n >= 2 {
        names.extend(letters(n - 2));
        names.push("1".to_string());
    }
    let covers: Vec<(String, String)> = names.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    build(&names, &covers)
}

/// The Boolean lattice `2ⁿ`. Elements are subsets of the first `n` letters,
/// ordered by bitmask; `0` and `1` name the bounds.
pub fn boolean(n: usize) -> BoundedLattice {
    let full = (1usize << n) - 1;
    let abc = letters(n);
    let name = |m: usize| -> String {
        if m == 0 {
            "0".into()
        } else if m == full {
            "1".into()
        } else {
            (0..n).filter(|i| m >> i & 1 == 1).map(|i| abc[i].as_str()).collect()
        }
    };
    let names: Vec<String> = (0..=full).map(name).collect();
    let mut covers = Vec::new();
    for m in 0..=full {
        for i in 0..n {
            if m >> i & 1 == 0 {
                covers.push((name(m), name(m | 1 << i)));
            }
        }
    }
    build(&names, &covers)
}

/// `M_k`: `k` pairwise incomparable atoms between `0` and `1`.
pub fn m_n(k: usize) -> BoundedLattice {
    let mut names = vec!["0".to_string()];
    let atoms = letters(k);
    names.extend(atoms.iter().cloned());
    names.push("1".into());
    let mut covers = Vec::new();
    for a in &atoms {
        covers.push(("0".to_string(), a.clone()));
        covers.push((a.clone(), "1".to_string()));
    }
    build(&names, &covers)
}

/// The diamond `0 < a, b < 1`.
pub fn m2() -> BoundedLattice {
    m_n(2)
}

/// The pentagon: `0 < a < b < 1` and `0 < c < 1`.
pub fn n5() -> BoundedLattice {
    let names: Vec<String> = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
    let covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .to_vec();
    build(&names, &covers)
}

/// The hexagon underlying the benzene ortholattice: `0 < a < b < 1`,
/// `0 < c < d < 1`.
pub fn hexagon() -> BoundedLattice {
    let names: Vec<String> = ["0", "a", "b", "c", "d", "1"].map(String::from).to_vec();
    let covers = [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "d"), ("d", "1")]
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .to_vec();
    build(&names, &covers)
}

/// Bounded lattices of at most eight elements: generators plus products and
/// ordinal sums.
pub fn lattices() -> Vec<(String, BoundedLattice)> {
    let mut out: Vec<(String, BoundedLattice)> = Vec::new();
    for n in 2..=8 {
        out.push((format!("chain{n}"), chain(n)));
    }
    out.push(("2^2".into(), boolean(2)));
    out.push(("2^3".into(), boolean(3)));
    for k in 3..=6 {
        out.push((format!("M{k}"), m_n(k)));
    }
    out.push(("N5".into(), n5()));
    out.push(("hexagon".into(), hexagon()));
    let prod = |a: &BoundedLattice, b: &BoundedLattice| BoundedLattice::product(&[a, b]).unwrap();
    out.push(("2x3".into(), prod(&chain(2), &chain(3))));
    out.push(("2x4".into(), prod(&chain(2), &chain(4))));
    let sum = |a: &BoundedLattice, b: &BoundedLattice| a.ordinal_sum(b).unwrap();
    out.push(("N5+2".into(), sum(&n5(), &chain(2))));
    out.push(("2+M2+2".into(), sum(&sum(&chain(2), &m2()), &chain(2))));
    out.push(("M2+M2".into(), sum(&m2(), &m2())));
    out.push(("M3+3".into(), sum(&m_n(3), &chain(3))));
    out.push(("N5+M2".into(), sum(&n5(), &m2())));
    debug_assert!(out.iter().all(|(_, l)| l.size() <= 8));
    out
}

/// The Boolean ortholattice `2ⁿ` with set complement.
pub fn boolean_ol(n: usize) -> OrthoLattice {
    let l = boolean(n);
    let full = (1usize << n) - 1;
    // element index equals bitmask
    let perp = (0..=full).map(|m| full ^ m).collect();
    OrthoLattice::new(l, perp).expect("Boolean algebra")
}

/// `MO_k`: `k` blocks `{0, x, x', 1}` glued at the bounds.
pub fn mo(k: usize) -> OrthoLattice {
    let mut names = vec!["0".to_string()];
    for a in letters(k) {
        names.push(a.clone());
        names.push(format!("{a}'"));
    }
    names.push("1".into());
    let mut covers = Vec::new();
    for x in &names[1..names.len() - 1] {
        covers.push(("0".to_string(), x.clone()));
        covers.push((x.clone(), "1".to_string()));
    }
    let l = build(&names, &covers);
    let n = names.len();
    let perp = (0..n)
        .map(|x| match x {
            0 => n - 1,
            x if x == n - 1 => 0,
            x if x % 2 == 1 => x + 1,
            x => x - 1,
        })
        .collect();
    OrthoLattice::new(l, perp).expect("MO_k")
}

/// The benzene ring `O6`: the hexagon with `a ↔ d`, `b ↔ c`.
pub fn o6() -> OrthoLattice {
    let l = hexagon();
    let perp = vec![5, 4, 3, 2, 1, 0];
    OrthoLattice::new(l, perp).expect("O6 is an ortholattice")
}

/// Orthomodular lattices: Boolean algebras, `MO_k`, products, horizontal
/// sums, and `K(L)` for every lattice in [`lattices`].
pub fn omls() -> Vec<(String, OrthoLattice)> {
    let mut out: Vec<(String, OrthoLattice)> = Vec::new();
    for n in 1..=5 {
        out.push((format!("2^{n}"), boolean_ol(n)));
    }
    for k in 2..=4 {
        out.push((format!("MO{k}"), mo(k)));
    }
    let prod = |a: &OrthoLattice, b: &OrthoLattice| ortho::product(&[a, b]).unwrap();
    out.push(("MO2x2".into(), prod(&mo(2), &boolean_ol(1))));
    out.push(("MO2xMO2".into(), prod(&mo(2), &mo(2))));
    out.push(("MO3x2^2".into(), prod(&mo(3), &boolean_ol(2))));
    let hs = |parts: &[&OrthoLattice]| ortho::horizontal_sum(parts).unwrap();
    out.push(("2^3+2^2".into(), hs(&[&boolean_ol(3), &boolean_ol(2)])));
    out.push(("2^3+2^3".into(), hs(&[&boolean_ol(3), &boolean_ol(3)])));
    out.push(("2^3+MO2x2".into(), hs(&[&boolean_ol(3), &prod(&mo(2), &boolean_ol(1))])));
    for (name, l) in lattices() {
        let k = kalmbach(&l).unwrap().to_ortholattice().unwrap();
        out.push((format!("K({name})"), k));
    }
    out
}
