//! Text form of biquaternions.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := number | 'I' | 'i' | 'j' | 'k' | '(' expr ')'
//! number := digits ['.' digits] [('e' | 'E') ['+' | '-'] digits] ['/' digits ...]
//! ```
//!
//! Whitespace is ignored everywhere. Juxtaposed factors multiply left to
//! right, so `(1/2)Ii`, `2Ij` and `I(2j + 2k)` all read as expected. The
//! canonical output of [`std::fmt::Display`] is accepted back verbatim.

use super::Biquaternion;
use crate::error::ParseError;
use crate::numeric::{Backend, Complex, Scalar};

pub fn parse<S: Scalar>(text: &str) -> Result<Biquaternion<S>, ParseError> {
    let mut parser = Parser::new(text);
    let value = parser.expr()?;
    if let Some((pos, _)) = parser.peek() {
        return Err(ParseError::new(pos, "'+', '-' or end of input"));
    }
    Ok(value)
}

/// Canonical text form; `parse(&format(q)) == q` on the exact backend.
pub fn format<S: Scalar>(q: &Biquaternion<S>) -> String {
    q.to_string()
}

/// Backend implied by the literals in `text`: approx when any number carries a
/// decimal point or exponent, exact otherwise.
pub fn literal_backend(text: &str) -> Backend {
    let mut prev_digit = false;
    for ch in text.chars() {
        let decimal = ch == '.' || (prev_digit && (ch == 'e' || ch == 'E'));
        if decimal {
            return Backend::Approx;
        }
        prev_digit = ch.is_ascii_digit();
    }
    Backend::Exact
}

struct Parser {
    // Non-whitespace characters with their byte offsets in the source.
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            at: 0,
            end: text.len(),
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn eat(&mut self, want: char) -> bool {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.at += 1;
                true
            }
            _ => false,
        }
    }

    fn expr<S: Scalar>(&mut self) -> Result<Biquaternion<S>, ParseError> {
        let negate_first = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate_first { -first } else { first };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<S: Scalar>(&mut self) -> Result<Biquaternion<S>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            let explicit = self.eat('*');
            match self.peek() {
                Some((_, c)) if starts_factor(c) => acc = &acc * &self.factor()?,
                _ if explicit => return Err(ParseError::new(self.pos(), "factor after '*'")),
                _ => return Ok(acc),
            }
        }
    }

    fn factor<S: Scalar>(&mut self) -> Result<Biquaternion<S>, ParseError> {
        let Some((pos, c)) = self.peek() else {
            return Err(ParseError::new(self.end, "number, 'I', 'i', 'j', 'k' or '('"));
        };
        match c {
            'I' => {
                self.at += 1;
                Ok(Biquaternion::imaginary_unit())
            }
            'i' => {
                self.at += 1;
                Ok(Biquaternion::unit_i())
            }
            'j' => {
                self.at += 1;
                Ok(Biquaternion::unit_j())
            }
            'k' => {
                self.at += 1;
                Ok(Biquaternion::unit_k())
            }
            '(' => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(ParseError::new(self.pos(), "')'"));
                }
                Ok(inner)
            }
            c if c.is_ascii_digit() || c == '.' => {
                let literal = self.number();
                let value = S::parse_literal(&literal).map_err(|_| {
                    let expected = match S::BACKEND {
                        Backend::Exact => "rational literal `p/q` or `p`",
                        Backend::Approx => "decimal literal",
                    };
                    ParseError::new(pos, expected)
                })?;
                Ok(Biquaternion::from_complex(Complex::real(value)))
            }
            _ => Err(ParseError::new(pos, "number, 'I', 'i', 'j', 'k' or '('")),
        }
    }

    fn number(&mut self) -> String {
        let mut out = String::new();
        self.mantissa(&mut out);
        if self.eat('/') {
            out.push('/');
            self.mantissa(&mut out);
        }
        out
    }

    fn mantissa(&mut self, out: &mut String) {
        self.digits(out);
        if self.eat('.') {
            out.push('.');
            self.digits(out);
        }
        if let Some((_, e @ ('e' | 'E'))) = self.peek() {
            // Only an exponent if digits follow; `e` is not otherwise a token.
            let save = self.at;
            self.at += 1;
            let mut exp = String::from(e);
            if let Some((_, s @ ('+' | '-'))) = self.peek() {
                self.at += 1;
                exp.push(s);
            }
            let before = exp.len();
            self.digits(&mut exp);
            if exp.len() > before {
                out.push_str(&exp);
            } else {
                self.at = save;
            }
        }
    }

    fn digits(&mut self, out: &mut String) {
        while let Some((_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            out.push(c);
            self.at += 1;
        }
    }
}

fn starts_factor(c: char) -> bool {
    matches!(c, 'I' | 'i' | 'j' | 'k' | '(' | '.') || c.is_ascii_digit()
}
