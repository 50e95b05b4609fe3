//! Human text form.
//!
//! ```text
//! doc     := [ "nvars" "=" INT ";" ] poly
//! poly    := [sign] term { sign term }
//! term    := coeff { ["*"] var } | var { ["*"] var }
//! coeff   := ratio | "(" [sign] ratio [ sign ratio ] "i" ")" | "(" [sign] ratio ")"
//! ratio   := INT [ "/" INT ]
//! var     := ("z" | "zb") INT [ "^" INT ]
//! ```
//!
//! Whitespace is ignored between tokens. `zbK` is the conjugate of `zK`,
//! variables are numbered from 1, and repeated variables multiply. Without
//! the `nvars` prefix the variable count is the largest index used (at
//! least 1).

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use hermsos_core::{GaussianRational, HermPoly, MultiIndex};

use crate::ParseError;

/// `nvars=N; <terms>`, which [`parse_herm`] reads back exactly.
pub fn render_herm(a: &HermPoly) -> String {
    format!("nvars={}; {a}", a.nvars())
}

pub fn parse_herm(input: &str) -> Result<HermPoly, ParseError> {
    Parser { src: input, pos: 0 }.document()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

/// Exponents collected before the variable count is known.
#[derive(Default)]
struct RawMonomial {
    holo: Vec<(usize, u32)>,
    anti: Vec<(usize, u32)>,
}

struct RawTerm {
    coeff: GaussianRational,
    monomial: RawMonomial,
    /// Byte offset of each variable, for range diagnostics.
    var_positions: Vec<(usize, usize)>,
}

impl<'a> Parser<'a> {
    fn error(&self, pos: usize, msg: impl fmt::Display) -> ParseError {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.chars().count(), |i| before[i + 1..].chars().count()) + 1;
        ParseError::at(line, column, msg.to_string())
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        let pos = {
            self.skip_ws();
            self.pos
        };
        match self.src[pos..].chars().next() {
            Some(c) => self.error(pos, format!("expected {wanted}, found '{c}'")),
            None => self.error(pos, format!("expected {wanted}, found end of input")),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        match self.digits() {
            Some(d) => Ok(d.parse().expect("ascii digits")),
            None => Err(self.unexpected("an integer")),
        }
    }

    fn small(&mut self, what: &str) -> Result<(usize, u64), ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.digits() {
            Some(d) => d.parse().map(|v| (start, v)).map_err(|_| self.error(start, format!("{what} is too large"))),
            None => Err(self.unexpected(what)),
        }
    }

    fn ratio(&mut self) -> Result<BigRational, ParseError> {
        let num = self.integer()?;
        if !self.eat('/') {
            return Ok(BigRational::from_integer(num));
        }
        self.skip_ws();
        let at = self.pos;
        let den = self.integer()?;
        if den.is_zero() {
            return Err(self.error(at, "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }

    fn sign(&mut self) -> Option<bool> {
        if self.eat('+') {
            Some(false)
        } else if self.eat('-') {
            Some(true)
        } else {
            None
        }
    }

    fn signed_ratio(&mut self) -> Result<BigRational, ParseError> {
        let negative = self.sign().unwrap_or(false);
        let r = self.ratio()?;
        Ok(if negative { -r } else { r })
    }

    /// Inside `( … )`: `a`, `b i`, `a ± b i`.
    fn gaussian(&mut self) -> Result<GaussianRational, ParseError> {
        let first = self.signed_ratio()?;
        let c = if self.eat('i') {
            GaussianRational::new(BigRational::zero(), first)
        } else if let Some(negative) = self.sign() {
            let im = self.ratio()?;
            self.expect('i')?;
            GaussianRational::new(first, if negative { -im } else { im })
        } else {
            GaussianRational::from_real(first)
        };
        self.expect(')')?;
        Ok(c)
    }

    fn variable(&mut self, m: &mut RawMonomial, positions: &mut Vec<(usize, usize)>) -> Result<(), ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.expect('z')?;
        let conj = self.src[self.pos..].starts_with('b');
        if conj {
            self.pos += 1;
        }
        let (at, index) = self.small("a variable index")?;
        if index == 0 {
            return Err(self.error(at, "variables are numbered from 1"));
        }
        let index = usize::try_from(index).map_err(|_| self.error(at, "variable index is too large"))?;
        let exponent = if self.eat('^') {
            let (at, e) = self.small("an exponent")?;
            u32::try_from(e).map_err(|_| self.error(at, "exponent is too large"))?
        } else {
            1
        };
        positions.push((start, index));
        if conj { &mut m.anti } else { &mut m.holo }.push((index - 1, exponent));
        Ok(())
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let coeff = match self.peek() {
            Some('(') => {
                self.pos += 1;
                Some(self.gaussian()?)
            }
            Some(c) if c.is_ascii_digit() => Some(GaussianRational::from_real(self.ratio()?)),
            Some('z') => None,
            _ => return Err(self.unexpected("a coefficient or variable")),
        };
        let mut monomial = RawMonomial::default();
        let mut var_positions = Vec::new();
        loop {
            let star = self.eat('*');
            if self.peek() == Some('z') {
                self.variable(&mut monomial, &mut var_positions)?;
            } else if star {
                return Err(self.unexpected("a variable"));
            } else {
                break;
            }
        }
        Ok(RawTerm { coeff: coeff.unwrap_or_else(GaussianRational::one), monomial, var_positions })
    }

    fn prefix(&mut self) -> Result<Option<usize>, ParseError> {
        self.skip_ws();
        if !self.src[self.pos..].starts_with("nvars") {
            return Ok(None);
        }
        self.pos += "nvars".len();
        self.expect('=')?;
        let (at, n) = self.small("a variable count")?;
        let n = usize::try_from(n).map_err(|_| self.error(at, "variable count is too large"))?;
        self.expect(';')?;
        Ok(Some(n))
    }

    fn document(&mut self) -> Result<HermPoly, ParseError> {
        let declared = self.prefix()?;
        let mut terms = Vec::new();
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.sign() {
                Some(s) => negative = s,
                None if self.peek().is_none() => break,
                None => return Err(self.unexpected("'+', '-' or end of input")),
            }
        }
        let used = terms.iter().flat_map(|t| t.var_positions.iter().map(|&(_, i)| i)).max().unwrap_or(0);
        let nvars = match declared {
            Some(n) => {
                if let Some(&(at, i)) = terms.iter().flat_map(|t| t.var_positions.iter()).find(|&&(_, i)| i > n) {
                    return Err(self.error(at, format!("variable index {i} exceeds nvars={n}")));
                }
                n
            }
            None => used.max(1),
        };
        let expand = |parts: &[(usize, u32)]| {
            let mut e = vec![0u32; nvars];
            for &(v, k) in parts {
                e[v] = e[v].saturating_add(k);
            }
            MultiIndex::from(e)
        };
        let pairs = terms.into_iter().map(|t| ((expand(&t.monomial.holo), expand(&t.monomial.anti)), t.coeff));
        Ok(HermPoly::from_terms(nvars, pairs).expect("indices checked against nvars"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hermsos_core::poly::{norm_power, pfister_base};

    fn p(s: &str) -> HermPoly {
        parse_herm(s).unwrap_or_else(|e| panic!("{s:?}: {e}"))
    }

    #[test]
    fn typed_examples() {
        assert_eq!(p("1 + z1 zb1"), pfister_base(1, 1));
        assert_eq!(p("z1 zb1 + z2zb2"), norm_power(2, 1));
        assert_eq!(p("nvars=2; 1 + z1 zb1 + z2 zb2"), pfister_base(2, 1));
        assert_eq!(p("1+2*z1*zb1+z1^2 zb1^2"), pfister_base(1, 2));
        assert_eq!(p("z1 z1 zb1 zb1"), p("z1^2 zb1^2"));
        assert!(p("0").is_zero());
        assert!(p("z1 zb1 - z1 zb1").is_zero());
    }

    #[test]
    fn gaussian_coefficients() {
        let a = p("-1 + (0+1 i) z2 + 3/2 z1^2 zb1");
        assert_eq!(a.to_string(), "-1 + (0+1 i) z2 + 3/2 z1^2 zb1");
        assert_eq!(p("(1/2 i) z1"), p("(0+1/2 i) z1"));
        assert_eq!(p("(-1/2-3 i)"), HermPoly::constant(1, GaussianRational::from_parts(-1, 2, -3, 1)));
        assert_eq!(p("(4/6)"), p("2/3"));
    }

    #[test]
    fn rendering_round_trips() {
        for a in [pfister_base(3, 2), norm_power(2, 2), HermPoly::zero(3), p("nvars=2; (1-2 i) z1 zb2 + (1+2 i) z2 zb1")] {
            assert_eq!(p(&render_herm(&a)), a);
        }
    }

    #[test]
    fn diagnostics_point_at_the_problem() {
        let err = parse_herm("1 + z1 zq1").unwrap_err();
        assert_eq!(err.line_column(), Some((1, 9)));
        let err = parse_herm("nvars=1; z2 zb2").unwrap_err();
        assert_eq!(err.to_string(), "line 1, column 10: variable index 2 exceeds nvars=1");
        let err = parse_herm("1/0 z1").unwrap_err();
        assert_eq!(err.line_column(), Some((1, 3)));
        let err = parse_herm("z0").unwrap_err();
        assert!(err.to_string().contains("numbered from 1"));
        let err = parse_herm("1 +\n  2 3").unwrap_err();
        assert_eq!(err.line_column(), Some((2, 5)));
        assert!(parse_herm("").is_err());
        assert!(parse_herm("1 + ").is_err());
    }
}
