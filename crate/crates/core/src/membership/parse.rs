//! Text syntax for polynomials: `x1`..`xn`, power sums `p1`, `p2`, ...,
//! integer or `p/q` constants, `+ - * ^` and parentheses.
//!
//! Example: `(x2^2*x3^2 - x1^4)^2 - 2*(x1*x2)^2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::multipoly::{power_sum, MultiPoly};
use crate::error::MembershipError;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

fn err(msg: String) -> MembershipError {
    MembershipError::Parse(msg)
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str, MembershipError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(format!("expected a number at offset {start}")));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self, what: &str) -> Result<u32, MembershipError> {
        self.digits()?.parse().map_err(|_| err(format!("{what} out of range")))
    }

    fn expr(&mut self) -> Result<MultiPoly, MembershipError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == b'+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, MembershipError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, MembershipError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.small("exponent")?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, MembershipError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(err(format!("expected ')' at offset {}", self.pos)));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.small("variable index")? as usize;
                if i == 0 || i > self.nvars {
                    return Err(err(format!("variable x{i} outside x1..x{}", self.nvars)));
                }
                Ok(MultiPoly::var(self.nvars, i - 1))
            }
            Some(b'p') => {
                self.pos += 1;
                let a = self.small("power-sum exponent")?;
                if a == 0 {
                    return Err(err("power sum p0 is not allowed".into()));
                }
                Ok(power_sum(self.nvars, a))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits()?.parse().expect("digits");
                let mut q = BigRational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d: BigInt = self.digits()?.parse().expect("digits");
                    if d.is_zero() {
                        return Err(err("zero denominator".into()));
                    }
                    q /= BigRational::from_integer(d);
                }
                Ok(MultiPoly::constant(self.nvars, q))
            }
            Some(c) => Err(err(format!("unexpected '{}' at offset {}", c as char, self.pos))),
            None => Err(err("unexpected end of input".into())),
        }
    }
}

pub fn parse_poly(s: &str, nvars: usize) -> Result<MultiPoly, MembershipError> {
    if nvars == 0 {
        return Err(err("need at least one variable".into()));
    }
    let mut p = Parser { src: s.as_bytes(), pos: 0, nvars };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(err(format!("trailing input at offset {}", p.pos)));
    }
    Ok(e)
}

/// Comma-separated polynomials; commas inside parentheses do not split.
pub fn parse_poly_list(s: &str, nvars: usize) -> Result<Vec<MultiPoly>, MembershipError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts.into_iter().map(|p| parse_poly(p, nvars)).collect()
}
