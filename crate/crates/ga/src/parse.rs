//! Text form of multivectors.
//!
//! ```text
//! mv       := term (("+" | "-") term)*      (a leading sign is allowed)
//! term     := rational ("*" blade)? | blade
//! rational := integer ("/" positive-integer)?
//! blade    := "e" digits                    (one digit per generator, n <= 9)
//!           | "e{" d ("," d)* "}"           (any n)
//!           | "e"                           (the identity)
//! ```
//!
//! Generator indices are 1-based. A blade written out of order or with a
//! repeated generator is reduced with the geometric product of the target
//! algebra, so `e21` reads as `-e12` and `e11` as the square of `e1`.
//! Output uses the canonical form of [`Multivector`]'s `Display`, which this
//! parser reads back unchanged.

use ga_core::{Multivector, Rational, Signature};
use thiserror::Error;

/// A rejected multivector text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// The input ended where a term was expected.
    #[error("unexpected end of input at byte {0}")]
    UnexpectedEnd(usize),
    /// A character that fits no rule.
    #[error("unexpected {found:?} at byte {pos}")]
    Unexpected {
        /// Offending character.
        found: char,
        /// Byte offset.
        pos: usize,
    },
    /// A fraction with zero or negative denominator.
    #[error("bad denominator at byte {0}")]
    BadDenominator(usize),
    /// A generator index of 0 or above `n`.
    #[error("generator e{index} does not exist in an algebra with {n} generators")]
    NoSuchGenerator {
        /// 1-based index as written.
        index: usize,
        /// Number of generators.
        n: usize,
    },
    /// An integer that does not fit in 64 bits.
    #[error("number too large at byte {0}")]
    Overflow(usize),
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ParseError {
        match std::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next()) {
            Some(found) => ParseError::Unexpected { found, pos: self.pos },
            None => ParseError::UnexpectedEnd(self.pos),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| ParseError::Overflow(start))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let den = self.integer()?;
            if den == 0 {
                return Err(ParseError::BadDenominator(at));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    /// Generator indices of a blade, 1-based, in the order written.
    fn blade(&mut self) -> Result<Vec<usize>, ParseError> {
        if !self.eat(b'e') {
            return Err(self.unexpected());
        }
        let mut gens = Vec::new();
        if self.src.get(self.pos) == Some(&b'{') {
            self.pos += 1;
            loop {
                gens.push(self.integer()? as usize);
                if self.eat(b'}') {
                    break;
                }
                if !self.eat(b',') {
                    return Err(self.unexpected());
                }
            }
        } else {
            while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
                gens.push((d - b'0') as usize);
                self.pos += 1;
            }
        }
        Ok(gens)
    }

    fn term(&mut self, sig: &Signature) -> Result<Multivector, ParseError> {
        match self.peek() {
            Some(b'e') => blade_value(sig, &self.blade()?),
            Some(c) if c.is_ascii_digit() => {
                let c = self.rational()?;
                if self.eat(b'*') {
                    Ok(blade_value(sig, &self.blade()?)?.scale(&c))
                } else {
                    Ok(Multivector::scalar(c))
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// The product of the listed generators in `sig`.
fn blade_value(sig: &Signature, gens: &[usize]) -> Result<Multivector, ParseError> {
    let mut acc = Multivector::one();
    for &g in gens {
        if g == 0 || g > sig.n() {
            return Err(ParseError::NoSuchGenerator { index: g, n: sig.n() });
        }
        acc = sig.gp_blade_right(&acc, 1 << (g - 1));
    }
    Ok(acc)
}

/// Parses the text form of a multivector of `sig`.
pub fn parse_multivector(text: &str, sig: &Signature) -> Result<Multivector, ParseError> {
    let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
    let mut acc = Multivector::zero();
    let mut negative = cur.eat(b'-');
    if !negative {
        cur.eat(b'+');
    }
    loop {
        let t = cur.term(sig)?;
        acc = if negative { &acc - &t } else { &acc + &t };
        if cur.eat(b'+') {
            negative = false;
        } else if cur.eat(b'-') {
            negative = true;
        } else if cur.peek().is_none() {
            return Ok(acc);
        } else {
            return Err(cur.unexpected());
        }
    }
}
