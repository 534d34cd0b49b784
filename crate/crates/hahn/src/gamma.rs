//! The ordered group `Γ = Z ⊕ Z ⊕ ...` under reverse lexicographic order,
//! and its quotient `Γ/2Γ`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A finitely supported integer sequence. Trailing zeros are trimmed, so
/// the zero element has an empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GammaExp(Vec<i64>);

impl GammaExp {
    pub fn zero() -> Self {
        GammaExp(Vec::new())
    }

    /// `δₙ`: 1 at index `n`, 0 elsewhere.
    pub fn delta(n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[n] = 1;
        GammaExp(v)
    }

    pub fn from_vec(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        GammaExp(v)
    }

    /// Build from sparse `(index, value)` pairs; repeated indices add up.
    pub fn from_sparse(pairs: &[(usize, i64)]) -> Self {
        let len = pairs.iter().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut v = vec![0; len];
        for &(i, x) in pairs {
            v[i] += x;
        }
        Self::from_vec(v)
    }

    pub fn get(&self, n: usize) -> i64 {
        self.0.get(n).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest index with a nonzero entry.
    pub fn top_index(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_vec(self.0.iter().map(|&x| x * k).collect())
    }

    /// `T(γ)`: entries reduced mod 2.
    pub fn type_class(&self) -> TypeClass {
        TypeClass::from_bits(self.0.iter().map(|&x| x.rem_euclid(2) == 1).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.last().is_some_and(|&x| x > 0)
    }
}

/// Compare at the largest index where the two differ.
pub fn gamma_cmp(a: &GammaExp, b: &GammaExp) -> Ordering {
    let len = a.0.len().max(b.0.len());
    for n in (0..len).rev() {
        match a.get(n).cmp(&b.get(n)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

impl Ord for GammaExp {
    fn cmp(&self, other: &Self) -> Ordering {
        gamma_cmp(self, other)
    }
}

impl PartialOrd for GammaExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn zip_with(a: &GammaExp, b: &GammaExp, f: impl Fn(i64, i64) -> i64) -> GammaExp {
    let len = a.0.len().max(b.0.len());
    GammaExp::from_vec((0..len).map(|n| f(a.get(n), b.get(n))).collect())
}

impl Add for &GammaExp {
    type Output = GammaExp;
    fn add(self, rhs: &GammaExp) -> GammaExp {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &GammaExp {
    type Output = GammaExp;
    fn sub(self, rhs: &GammaExp) -> GammaExp {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &GammaExp {
    type Output = GammaExp;
    fn neg(self) -> GammaExp {
        self.scale(-1)
    }
}

impl Add for GammaExp {
    type Output = GammaExp;
    fn add(self, rhs: GammaExp) -> GammaExp {
        &self + &rhs
    }
}

impl Sub for GammaExp {
    type Output = GammaExp;
    fn sub(self, rhs: GammaExp) -> GammaExp {
        &self - &rhs
    }
}

impl Neg for GammaExp {
    type Output = GammaExp;
    fn neg(self) -> GammaExp {
        -&self
    }
}

/// Sparse form `(i:v, j:w)`, indices ascending; zero is `()`.
impl fmt::Display for GammaExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, x)| format!("{i}:{x}"))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Valuation values: `Γ` together with `∞` above everything.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val {
    Fin(GammaExp),
    Inf,
}

impl Val {
    pub fn fin(&self) -> Option<&GammaExp> {
        match self {
            Val::Fin(g) => Some(g),
            Val::Inf => None,
        }
    }

    /// `∞` absorbs.
    pub fn plus(&self, other: &Val) -> Val {
        match (self, other) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a + b),
            _ => Val::Inf,
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(g) => g.fmt(f),
            Val::Inf => f.write_str("inf"),
        }
    }
}

/// An element of `Γ/2Γ`, kept as trimmed bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeClass(Vec<bool>);

impl TypeClass {
    pub fn from_bits(mut bits: Vec<bool>) -> Self {
        while bits.last() == Some(&false) {
            bits.pop();
        }
        TypeClass(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Componentwise sum mod 2.
    pub fn add(&self, other: &TypeClass) -> TypeClass {
        let len = self.0.len().max(other.0.len());
        let bit = |v: &Vec<bool>, i: usize| v.get(i).copied().unwrap_or(false);
        TypeClass::from_bits((0..len).map(|i| bit(&self.0, i) ^ bit(&other.0, i)).collect())
    }
}

/// Indices of the odd entries, e.g. `{0,2}`.
impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.0.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i.to_string()).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}
