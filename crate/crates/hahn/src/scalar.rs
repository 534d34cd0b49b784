//! Fractions of finite-support series: exact stand-ins for elements of the
//! series field whose inverses would need infinite support.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gamma::{GammaExp, Val};
use crate::series::{owned_ops, HahnSeries};
use crate::{Error, Result};

/// `num / den`. The denominator is scaled by a unit monomial so its
/// valuation is `0` with leading coefficient `1`, and it is dropped
/// whenever it divides the numerator exactly.
#[derive(Debug, Clone)]
pub struct HahnScalar {
    num: HahnSeries,
    den: HahnSeries,
}

impl HahnScalar {
    pub fn new(num: HahnSeries, den: HahnSeries) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: HahnSeries, den: HahnSeries) -> Self {
        if num.is_zero() {
            return HahnScalar::zero();
        }
        let g = match den.valuation() {
            Val::Fin(g) => -g,
            Val::Inf => unreachable!("denominator is nonzero"),
        };
        let c = BigRational::one() / den.leading_coefficient();
        let (num, den) = (num.shift(&g, &c), den.shift(&g, &c));
        if den == HahnSeries::one() {
            return HahnScalar { num, den };
        }
        match num.div_exact(&den) {
            Some(q) => HahnScalar { num: q, den: HahnSeries::one() },
            None => HahnScalar { num, den },
        }
    }

    pub fn zero() -> Self {
        HahnScalar { num: HahnSeries::zero(), den: HahnSeries::one() }
    }

    pub fn one() -> Self {
        HahnScalar { num: HahnSeries::one(), den: HahnSeries::one() }
    }

    pub fn from_int(k: i64) -> Self {
        HahnSeries::from_int(k).into()
    }

    pub fn t(n: usize) -> Self {
        HahnSeries::t(n).into()
    }

    pub fn num(&self) -> &HahnSeries {
        &self.num
    }

    pub fn den(&self) -> &HahnSeries {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the denominator is `1`.
    pub fn is_series(&self) -> bool {
        self.den == HahnSeries::one()
    }

    /// `φ(num) − φ(den)`.
    pub fn valuation(&self) -> Val {
        match (self.num.valuation(), self.den.valuation()) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(&a - &b),
            _ => Val::Inf,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &HahnScalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiply by `q t^g`, a unit of the series ring.
    pub fn shift(&self, g: &GammaExp, q: &BigRational) -> Self {
        if q.is_zero() {
            return HahnScalar::zero();
        }
        HahnScalar { num: self.num.shift(g, q), den: self.den.clone() }
    }
}

impl From<HahnSeries> for HahnScalar {
    fn from(s: HahnSeries) -> Self {
        HahnScalar { num: s, den: HahnSeries::one() }
    }
}

impl PartialEq for HahnScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for HahnScalar {}

impl Add for &HahnScalar {
    type Output = HahnScalar;
    fn add(self, rhs: &HahnScalar) -> HahnScalar {
        if self.den == rhs.den {
            return HahnScalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        HahnScalar::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &HahnScalar {
    type Output = HahnScalar;
    fn sub(self, rhs: &HahnScalar) -> HahnScalar {
        self + &(-rhs)
    }
}

impl Neg for &HahnScalar {
    type Output = HahnScalar;
    fn neg(self) -> HahnScalar {
        HahnScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &HahnScalar {
    type Output = HahnScalar;
    fn mul(self, rhs: &HahnScalar) -> HahnScalar {
        if self.is_zero() || rhs.is_zero() {
            return HahnScalar::zero();
        }
        HahnScalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

owned_ops!(HahnScalar);

impl fmt::Display for HahnScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_series() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
