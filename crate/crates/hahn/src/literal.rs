//! Parser for series literals such as `3/2 * t[(0:1)] - t[(1:1, 2:-1)] + 2`.

use num_rational::BigRational;
use num_traits::One;

use crate::gamma::GammaExp;
use crate::series::HahnSeries;
use crate::{Error, Result};

pub fn parse_series(src: &str) -> Result<HahnSeries> {
    let mut p = Parser { s: src.as_bytes(), i: 0 };
    let mut out = HahnSeries::zero();
    p.ws();
    let mut sign = BigRational::one();
    if p.eat(b'-') {
        sign = -sign;
    } else {
        p.eat(b'+');
    }
    loop {
        let (g, q) = p.term()?;
        out = &out + &HahnSeries::monomial(g, sign * q);
        p.ws();
        if p.eat(b'+') {
            sign = BigRational::one();
        } else if p.eat(b'-') {
            sign = -BigRational::one();
        } else if p.i == p.s.len() {
            return Ok(out);
        } else {
            return Err(p.err("expected `+`, `-` or end of input"));
        }
    }
}

/// Parse `(i:v, j:w)`.
pub fn parse_gamma(src: &str) -> Result<GammaExp> {
    let mut p = Parser { s: src.as_bytes(), i: 0 };
    let g = p.gamma()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {}", self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.s.get(self.i) == Some(&c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.ws();
        let start = self.i;
        if self.s.get(self.i) == Some(&b'-') {
            self.i += 1;
        }
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected an integer"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let n = self.int()?;
        if self.eat(b'/') {
            let d = self.int()?;
            if d == 0 {
                return Err(self.err("zero denominator"));
            }
            return Ok(BigRational::new(n.into(), d.into()));
        }
        Ok(BigRational::from_integer(n.into()))
    }

    fn gamma(&mut self) -> Result<GammaExp> {
        self.expect(b'(')?;
        let mut pairs = Vec::new();
        if !self.eat(b')') {
            loop {
                let i = self.int()?;
                let i = usize::try_from(i).map_err(|_| self.err("negative index"))?;
                self.expect(b':')?;
                pairs.push((i, self.int()?));
                if self.eat(b')') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        Ok(GammaExp::from_sparse(&pairs))
    }

    fn monomial(&mut self) -> Result<GammaExp> {
        self.expect(b't')?;
        self.expect(b'[')?;
        let g = self.gamma()?;
        self.expect(b']')?;
        Ok(g)
    }

    fn term(&mut self) -> Result<(GammaExp, BigRational)> {
        self.ws();
        if self.s.get(self.i) == Some(&b't') {
            return Ok((self.monomial()?, BigRational::one()));
        }
        let q = self.rational()?;
        if self.eat(b'*') {
            return Ok((self.monomial()?, q));
        }
        Ok((GammaExp::zero(), q))
    }
}
