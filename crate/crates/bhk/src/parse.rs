//! Parser for the ASCII polynomial grammar.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := [coeff '*'] factor ('*' factor)*
//! factor := var ['^' posint]
//! var    := 'x' nonneg-int
//! coeff  := rational 'p/q' or integer
//! ```
//!
//! Whitespace is ignored. Variables must be `x0..xn` contiguous.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mat::{Int, Rat};

/// One parsed monomial: coefficient and exponent-per-variable-index map.
#[derive(Clone, Debug)]
pub struct RawMonomial {
    pub coeff: Rat,
    pub exponents: Vec<(usize, Int)>,
}

#[derive(Debug)]
pub struct RawPolynomial {
    pub monomials: Vec<RawMonomial>,
    pub var_count: usize,
}

struct Scanner<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            Some(got) => self.err(format!("expected `{}`, found `{}`", c as char, got as char)),
            None => self.err(format!("expected `{}`, found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        if self.text.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn coeff(&mut self) -> Result<Rat> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let den = self.integer()?;
            if den.is_zero() {
                return self.err("zero denominator in coefficient");
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    fn var_index(&mut self) -> Result<usize> {
        self.expect(b'x')?;
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a variable index after `x`");
        }
        let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
        s.parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: format!("variable index `{s}` out of range"),
            })
    }

    fn factor(&mut self) -> Result<(usize, Int)> {
        let var = self.var_index()?;
        let exp = if self.peek() == Some(b'^') {
            self.bump();
            let e = self.integer()?;
            if e <= Int::zero() {
                return self.err("exponent must be a positive integer");
            }
            e
        } else {
            Int::one()
        };
        Ok((var, exp))
    }

    fn term(&mut self) -> Result<RawMonomial> {
        let mut coeff = Rat::one();
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {
                coeff = self.coeff()?;
                self.expect(b'*')?;
            }
            _ => {}
        }
        let mut exponents: Vec<(usize, Int)> = Vec::new();
        loop {
            let (var, exp) = self.factor()?;
            match exponents.iter_mut().find(|(v, _)| *v == var) {
                Some((_, e)) => *e += exp,
                None => exponents.push((var, exp)),
            }
            if self.peek() == Some(b'*') {
                self.bump();
            } else {
                break;
            }
        }
        exponents.sort_by_key(|(v, _)| *v);
        Ok(RawMonomial { coeff, exponents })
    }
}

/// Parse polynomial text into monomials in source order.
pub fn parse_raw(text: &str) -> Result<RawPolynomial> {
    let mut sc = Scanner::new(text);
    let mut monomials = vec![sc.term()?];
    while let Some(c) = sc.peek() {
        if c == b'+' {
            sc.bump();
            monomials.push(sc.term()?);
        } else {
            return sc.err(format!("unexpected character `{}`", c as char));
        }
    }
    let mut used = std::collections::BTreeSet::new();
    for m in &monomials {
        for (v, _) in &m.exponents {
            used.insert(*v);
        }
    }
    let var_count = used.iter().copied().max().map(|m| m + 1).unwrap_or(0);
    for v in 0..var_count {
        if !used.contains(&v) {
            return Err(Error::Parse {
                position: text.len(),
                message: format!("variables must be contiguous: x{v} is never used"),
            });
        }
    }
    Ok(RawPolynomial {
        monomials,
        var_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{int, rat};

    #[test]
    fn parses_quintic() {
        let p = parse_raw("x0^5+x1^5+x2^5+x3^5+x4^5").unwrap();
        assert_eq!(p.var_count, 5);
        assert_eq!(p.monomials.len(), 5);
        assert_eq!(p.monomials[0].exponents, vec![(0, int(5))]);
        assert!(p.monomials.iter().all(|m| m.coeff == Rat::one()));
    }

    #[test]
    fn parses_coefficients_and_whitespace() {
        let p = parse_raw(" 2*x0^3 + 1/2 * x1 * x2 + x2^3 ").unwrap();
        assert_eq!(p.monomials[0].coeff, rat(2, 1));
        assert_eq!(p.monomials[1].coeff, rat(1, 2));
        assert_eq!(p.monomials[1].exponents, vec![(1, int(1)), (2, int(1))]);
        let p = parse_raw("-3*x0^2+x1").unwrap();
        assert_eq!(p.monomials[0].coeff, rat(-3, 1));
    }

    #[test]
    fn repeated_factors_accumulate() {
        let p = parse_raw("x0*x0*x1^2").unwrap();
        assert_eq!(p.monomials[0].exponents, vec![(0, int(2)), (1, int(2))]);
    }

    #[test]
    fn rejects_gaps_and_junk() {
        assert!(matches!(parse_raw("x0+x2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw("x0^0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw("x0^-2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw("x0 & x1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw("3*"), Err(Error::Parse { .. })));
        assert!(matches!(parse_raw(""), Err(Error::Parse { .. })));
        let err = parse_raw("x0^5 + y1").unwrap_err();
        match err {
            Error::Parse { position, .. } => assert!(position >= 6),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
