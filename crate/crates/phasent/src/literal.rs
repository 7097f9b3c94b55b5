//! Text form of combs.
//!
//! ```text
//! comb    := term ('+' term)*
//! term    := [complex '*'] 'phi(' period ',' rational ',' rational ')'
//! period  := [rational '*'] 'sqrt(' integer ')' | rational
//! complex := real | '(' real ('+'|'-') real 'i' ')'
//! ```
//!
//! Whitespace is ignored everywhere. [`format_comb`] emits a literal that
//! [`parse_comb`] maps back to the identical atoms.

use num_complex::Complex64;
use num_rational::Ratio;

use crate::combcalc::{Comb, CombAtom, QuadReal};
use crate::{Error, Result};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor {
            chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.fail(&format!("expected {c:?}")))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let end = self.pos + s.chars().count();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().copied().eq(s.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn fail(&self, what: &str) -> Error {
        let rest: String = self.chars[self.pos.min(self.chars.len())..]
            .iter()
            .take(16)
            .collect();
        Error::InvalidSpec(format!(
            "comb literal: {what} at position {} (near {rest:?})",
            self.pos
        ))
    }

    fn integer(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.fail("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value: i64 = digits
            .parse()
            .map_err(|_| self.fail("integer out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn rational(&mut self) -> Result<Ratio<i64>> {
        let numer = self.integer()?;
        if self.eat('/') {
            let denom = self.integer()?;
            if denom == 0 {
                return Err(self.fail("zero denominator"));
            }
            Ok(Ratio::new(numer, denom))
        } else {
            Ok(Ratio::from_integer(numer))
        }
    }

    fn real(&mut self) -> Result<f64> {
        let start = self.pos;
        self.eat('-');
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.eat('.') {
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if self.eat('e') || self.eat('E') {
            if !self.eat('-') {
                self.eat('+');
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| self.fail("expected a real number"))
    }

    /// `real` or `( real (+|-) real i )`.
    fn complex(&mut self) -> Result<Complex64> {
        if !self.eat('(') {
            return Ok(Complex64::new(self.real()?, 0.0));
        }
        let re = self.real()?;
        let im = match self.bump() {
            Some(')') => return Ok(Complex64::new(re, 0.0)),
            Some('+') => self.real()?,
            Some('-') => -self.real()?,
            _ => return Err(self.fail("expected '+', '-' or ')' in a complex coefficient")),
        };
        self.expect('i')?;
        self.expect(')')?;
        Ok(Complex64::new(re, im))
    }

    /// `[rational '*'] 'sqrt(' integer ')' | rational`.
    fn period(&mut self) -> Result<QuadReal> {
        if self.eat_str("sqrt(") {
            return self.finish_sqrt(Ratio::from_integer(1));
        }
        let t = self.rational()?;
        if self.eat('*') {
            if self.eat_str("sqrt(") {
                return self.finish_sqrt(t);
            }
            return Err(self.fail("expected 'sqrt(' after '*' in a period"));
        }
        Ok(QuadReal::from_ratio(t))
    }

    fn finish_sqrt(&mut self, t: Ratio<i64>) -> Result<QuadReal> {
        let d = self.integer()?;
        self.expect(')')?;
        if d <= 0 {
            return Err(self.fail("radicand must be positive"));
        }
        QuadReal::new(t, d as u64)
    }

    fn term(&mut self) -> Result<CombAtom> {
        let coeff = if self.eat_str("phi(") {
            Complex64::new(1.0, 0.0)
        } else {
            let c = self.complex()?;
            self.expect('*')?;
            if !self.eat_str("phi(") {
                return Err(self.fail("expected 'phi('"));
            }
            c
        };
        let period = self.period()?;
        self.expect(',')?;
        let alpha = self.rational()?;
        self.expect(',')?;
        let beta = self.rational()?;
        self.expect(')')?;
        CombAtom::new(coeff, period, alpha, beta)
    }
}

/// Parse a comb literal such as `phi(1,1/2,1/2)` or
/// `-0.5*phi(sqrt(2),0,0) + (0-1i)*phi(1/2*sqrt(2),1/2,0)`.
pub fn parse_comb(text: &str) -> Result<Comb> {
    let mut cur = Cursor::new(text);
    let mut atoms = vec![cur.term()?];
    while cur.eat('+') {
        atoms.push(cur.term()?);
    }
    if cur.peek().is_some() {
        return Err(cur.fail("unexpected trailing input"));
    }
    Comb::new(atoms)
}

fn push_real(out: &mut String, x: f64) {
    if x == x.trunc() && x.abs() < 1e15 {
        out.push_str(&format!("{:.1}", x));
    } else {
        out.push_str(&format!("{x}"));
    }
}

fn push_coeff(out: &mut String, c: Complex64) {
    if c.im == 0.0 {
        if c.re == 1.0 {
            return;
        }
        push_real(out, c.re);
    } else {
        out.push('(');
        push_real(out, c.re);
        out.push(if c.im < 0.0 { '-' } else { '+' });
        push_real(out, c.im.abs());
        out.push_str("i)");
    }
    out.push('*');
}

fn push_period(out: &mut String, p: QuadReal) {
    let t = p.rational_part();
    let d = p.radicand();
    if d == 1 {
        out.push_str(&t.to_string());
    } else if t == Ratio::from_integer(1) {
        out.push_str(&format!("sqrt({d})"));
    } else {
        out.push_str(&format!("{t}*sqrt({d})"));
    }
}

/// Render a comb as a literal accepted by [`parse_comb`]; parsing the result
/// reproduces the atoms exactly.
pub fn format_comb(c: &Comb) -> String {
    let mut out = String::new();
    for (k, atom) in c.atoms().iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        push_coeff(&mut out, atom.coeff);
        out.push_str("phi(");
        push_period(&mut out, atom.period);
        out.push(',');
        out.push_str(&atom.alpha.to_string());
        out.push(',');
        out.push_str(&atom.beta.to_string());
        out.push(')');
    }
    out
}
