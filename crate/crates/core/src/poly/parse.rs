//! Recursive-descent parser for polynomial expressions such as
//! `x^2 + (1+r)*y*z - 3/2*w`.

use num_bigint::BigInt;

use super::{PolyError, Polynomial};
use crate::scalar::{Field, Scalar};

/// Parses `src` over the variables `names`; the field's adjoined root may
/// appear under its symbol.
pub fn parse_polynomial(src: &str, names: &[String], field: &Field) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, names, field };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    field: &'a Field,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                if rhs.degree() != Some(0) {
                    return Err(self.err("division by a non-constant or zero"));
                }
                let inv = rhs.constant_term().inv().map_err(|_| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap();
                Ok(Polynomial::constant(self.nvars(), Scalar::from_bigint(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if let Some(i) = self.names.iter().position(|n| n == ident) {
                    return Ok(Polynomial::var(self.nvars(), i));
                }
                if self.field.symbol() == Some(ident) {
                    return Ok(Polynomial::constant(self.nvars(), self.field.generator().unwrap()));
                }
                self.pos = start;
                Err(self.err(&format!("unknown identifier `{ident}`")))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::default_var_names;

    #[test]
    fn parses_and_renders() {
        let names = default_var_names(3);
        let p = parse_polynomial("x^2 + y^2 + z^2", &names, &Field::Rational).unwrap();
        assert_eq!(p.to_string(), "x^2 + y^2 + z^2");
        let q = parse_polynomial("2*x^2 - y*z", &names, &Field::Rational).unwrap();
        assert_eq!(q.to_string(), "2*x^2 - y*z");
        let r = parse_polynomial("(x+y)*(x-y)/2", &names, &Field::Rational).unwrap();
        assert_eq!(r.to_string(), "1/2*x^2 - 1/2*y^2");
    }

    #[test]
    fn field_symbol() {
        let f = Field::sqrt2("r");
        let names = default_var_names(2);
        let p = parse_polynomial("x - r*y", &names, &f).unwrap();
        let sq = &p * &parse_polynomial("x + r*y", &names, &f).unwrap();
        assert_eq!(sq.to_string(), "x^2 - 2*y^2");
        assert_eq!(parse_polynomial("(1+r)*x", &names, &f).unwrap().to_string(), "(r + 1)*x");
    }

    #[test]
    fn errors_carry_position() {
        let names = default_var_names(2);
        match parse_polynomial("x + q", &names, &Field::Rational) {
            Err(PolyError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x/y", &names, &Field::Rational).is_err());
        assert!(parse_polynomial("(x", &names, &Field::Rational).is_err());
    }
}
