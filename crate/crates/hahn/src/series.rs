//! Finite-support Hahn series `Σ q_γ t^γ` with rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::gamma::{GammaExp, Val};

/// Terms keyed by exponent; iteration runs from the least exponent up, and
/// no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HahnSeries {
    terms: BTreeMap<GammaExp, BigRational>,
}

impl HahnSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        Self::monomial(GammaExp::zero(), q)
    }

    pub fn from_int(k: i64) -> Self {
        Self::constant(BigRational::from_integer(k.into()))
    }

    pub fn monomial(g: GammaExp, q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(g, q);
        }
        HahnSeries { terms }
    }

    /// `tₙ = t^{δₙ}`.
    pub fn t(n: usize) -> Self {
        Self::monomial(GammaExp::delta(n), BigRational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GammaExp, BigRational)>) -> Self {
        let mut s = HahnSeries::zero();
        for (g, q) in terms {
            s.add_term(g, q);
        }
        s
    }

    fn add_term(&mut self, g: GammaExp, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            Entry::Vacant(v) => {
                v.insert(q);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GammaExp, &BigRational)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    /// `φ`: least exponent of the support, `∞` for zero.
    pub fn valuation(&self) -> Val {
        self.terms.keys().next().map_or(Val::Inf, |g| Val::Fin(g.clone()))
    }

    pub fn max_exponent(&self) -> Option<&GammaExp> {
        self.terms.keys().next_back()
    }

    /// Coefficient at the valuation; zero for the zero series.
    pub fn leading_coefficient(&self) -> BigRational {
        self.terms.values().next().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficient(&self, g: &GammaExp) -> BigRational {
        self.terms.get(g).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Multiply by `q t^g`.
    pub fn shift(&self, g: &GammaExp, q: &BigRational) -> Self {
        if q.is_zero() {
            return HahnSeries::zero();
        }
        HahnSeries { terms: self.terms.iter().map(|(e, c)| (e + g, c * q)).collect() }
    }

    /// `self / d` when the quotient has finite support.
    ///
    /// Long division on least terms. Degree in each coordinate is additive
    /// on products, so an exact quotient lives in the box
    /// `[min_i(self) - min_i(d), max_i(self) - max_i(d)]`; quotient terms
    /// strictly increase, so leaving the box means no exact quotient.
    pub fn div_exact(&self, d: &HahnSeries) -> Option<HahnSeries> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(HahnSeries::zero());
        }
        let (lo, hi) = {
            let (alo, ahi) = self.coordinate_box();
            let (dlo, dhi) = d.coordinate_box();
            let n = alo.len().max(dlo.len());
            let at = |v: &Vec<i64>, i: usize| v.get(i).copied().unwrap_or(0);
            let lo: Vec<i64> = (0..n).map(|i| at(&alo, i) - at(&dlo, i)).collect();
            let hi: Vec<i64> = (0..n).map(|i| at(&ahi, i) - at(&dhi, i)).collect();
            if lo.iter().zip(&hi).any(|(l, h)| l > h) {
                return None;
            }
            (lo, hi)
        };
        let (dmin, dlc) = d.terms.iter().next().unwrap();
        let mut rem = self.clone();
        let mut q = HahnSeries::zero();
        while let Some((g, c)) = rem.terms.first_key_value() {
            let e = g - dmin;
            let c = c.clone();
            let n = lo.len().max(e.entries().len());
            let inside = (0..n).all(|i| {
                let (l, h) = (lo.get(i).copied().unwrap_or(0), hi.get(i).copied().unwrap_or(0));
                (l..=h).contains(&e.get(i))
            });
            if !inside {
                return None;
            }
            let k = c / dlc;
            for (h, x) in &d.terms {
                rem.add_term(&e + h, -(&k * x));
            }
            q.add_term(e, k);
        }
        Some(q)
    }

    /// Coordinatewise minimum and maximum over the support.
    fn coordinate_box(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.terms.keys().filter_map(|g| g.top_index()).map(|t| t + 1).max().unwrap_or(0);
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for g in self.terms.keys() {
            for i in 0..n {
                lo[i] = lo[i].min(g.get(i));
                hi[i] = hi[i].max(g.get(i));
            }
        }
        (lo, hi)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        self.shift(&GammaExp::zero(), q)
    }
}

impl Add for &HahnSeries {
    type Output = HahnSeries;
    fn add(self, rhs: &HahnSeries) -> HahnSeries {
        let mut out = self.clone();
        for (g, q) in &rhs.terms {
            out.add_term(g.clone(), q.clone());
        }
        out
    }
}

impl Sub for &HahnSeries {
    type Output = HahnSeries;
    fn sub(self, rhs: &HahnSeries) -> HahnSeries {
        let mut out = self.clone();
        for (g, q) in &rhs.terms {
            out.add_term(g.clone(), -q.clone());
        }
        out
    }
}

impl Neg for &HahnSeries {
    type Output = HahnSeries;
    fn neg(self) -> HahnSeries {
        HahnSeries { terms: self.terms.iter().map(|(g, q)| (g.clone(), -q.clone())).collect() }
    }
}

impl Mul for &HahnSeries {
    type Output = HahnSeries;
    fn mul(self, rhs: &HahnSeries) -> HahnSeries {
        let mut acc: BTreeMap<GammaExp, BigRational> = BTreeMap::new();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                *acc.entry(a + b).or_insert_with(BigRational::zero) += p * q;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        HahnSeries { terms: acc }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;

owned_ops!(HahnSeries);

/// Literal syntax: `3/2 * t[(0:1)] - t[(1:1)] + 2`, least exponent first;
/// zero prints as `0`.
impl fmt::Display for HahnSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (g, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            match (i, q.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if g.is_zero() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "t[{g}]")?;
            } else {
                write!(f, "{mag} * t[{g}]")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn valuation_of_t() {
        for n in 0..6 {
            assert_eq!(HahnSeries::t(n).valuation(), Val::Fin(GammaExp::delta(n)));
        }
        assert_eq!(HahnSeries::zero().valuation(), Val::Inf);
    }

    #[test]
    fn difference_of_squares() {
        let one = HahnSeries::one();
        let t0 = HahnSeries::t(0);
        let p = &(&one + &t0) * &(&one - &t0);
        assert_eq!(p, &one - &(&t0 * &t0));
        assert_eq!(p.valuation(), Val::Fin(GammaExp::zero()));
    }

    #[test]
    fn exact_division() {
        let one = HahnSeries::one();
        let t0 = HahnSeries::t(0);
        let t1 = HahnSeries::t(1);
        let a = &one + &t0;
        let b = &t1 - &t0.scale(&q(1, 2));
        let p = &a * &b;
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(one.div_exact(&a), None);
        assert_eq!(t0.div_exact(&t1), Some(HahnSeries::monomial(GammaExp::from_vec(vec![1, -1]), q(1, 1))));
    }

    #[test]
    fn display() {
        let s = HahnSeries::from_terms([
            (GammaExp::delta(0), q(3, 2)),
            (GammaExp::delta(1), q(-1, 1)),
            (GammaExp::zero(), q(2, 1)),
        ]);
        assert_eq!(s.to_string(), "2 + 3/2 * t[(0:1)] - t[(1:1)]");
    }
}
