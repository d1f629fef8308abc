//! The lattice-expression mini-language.
//!
//! ```text
//! Expr := Term ('+' Term)*
//! Term := Atom ['(' signed-int ')']
//! Atom := 'U' | 'E8' | 'A1' | '[' signed-int ']'
//! ```
//!
//! `+` is the orthogonal direct sum and `(n)` twists the atom by `n`.
//! Whitespace between tokens is ignored. `E8` is positive definite, so the
//! negative-definite form is written `E8(-1)`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, ParseError, Result};
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Hyperbolic,
    E8,
    A1,
    RankOne(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub atom: Atom,
    pub twist: Option<BigInt>,
}

/// Parsed form of a lattice expression. `Display` emits the canonical text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeExpr {
    pub terms: Vec<Term>,
}

impl LatticeExpr {
    pub fn parse(text: &str) -> core::result::Result<Self, ParseError> {
        let mut p = Parser { src: text, pos: 0 };
        let mut terms = vec![p.term()?];
        loop {
            p.skip_ws();
            match p.peek() {
                None => break,
                Some('+') => {
                    p.pos += 1;
                    terms.push(p.term()?);
                }
                Some(_) => return Err(p.error(&["+", "end of input"])),
            }
        }
        Ok(LatticeExpr { terms })
    }

    /// Evaluates the expression; the result is labelled with the canonical
    /// text.
    pub fn to_lattice(&self) -> Result<Lattice> {
        let mut acc = Lattice::zero();
        for term in &self.terms {
            let base = match &term.atom {
                Atom::Hyperbolic => Lattice::hyperbolic_plane(),
                Atom::E8 => Lattice::e8(),
                Atom::A1 => Lattice::a1(),
                Atom::RankOne(n) => Lattice::rank_one(n.clone())?,
            };
            let lattice = match &term.twist {
                Some(n) => base.twist(n.clone())?,
                None => base,
            };
            acc = acc.direct_sum(&lattice);
        }
        Ok(acc.with_label(self.to_string()))
    }
}

impl FromStr for LatticeExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> core::result::Result<Self, ParseError> {
        LatticeExpr::parse(s)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Hyperbolic => f.write_str("U"),
            Atom::E8 => f.write_str("E8"),
            Atom::A1 => f.write_str("A1"),
            Atom::RankOne(n) => write!(f, "[{n}]"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.atom)?;
        if let Some(n) = &self.twist {
            write!(f, "({n})")?;
        }
        Ok(())
    }
}

impl fmt::Display for LatticeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Parses and evaluates a lattice expression such as `U+U+U+[-2]`.
pub fn parse_lattice_expr(text: &str) -> Result<Lattice> {
    LatticeExpr::parse(text).map_err(Error::from)?.to_lattice()
}

const ATOM_START: &[&str] = &["U", "E8", "A1", "["];

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        ParseError {
            offset: self.pos,
            expected: expected.to_vec(),
            found: self.peek(),
        }
    }

    fn eat(&mut self, tok: &'static str) -> core::result::Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(self.error(&[tok]))
        }
    }

    fn term(&mut self) -> core::result::Result<Term, ParseError> {
        let atom = self.atom()?;
        self.skip_ws();
        let twist = if self.peek() == Some('(') {
            self.pos += 1;
            let n = self.signed_int()?;
            self.eat(")")?;
            Some(n)
        } else {
            None
        };
        Ok(Term { atom, twist })
    }

    fn atom(&mut self) -> core::result::Result<Atom, ParseError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        if rest.starts_with("E8") {
            self.pos += 2;
            Ok(Atom::E8)
        } else if rest.starts_with("A1") {
            self.pos += 2;
            Ok(Atom::A1)
        } else if rest.starts_with('U') {
            self.pos += 1;
            Ok(Atom::Hyperbolic)
        } else if rest.starts_with('[') {
            self.pos += 1;
            let n = self.signed_int()?;
            self.eat("]")?;
            Ok(Atom::RankOne(n))
        } else {
            Err(self.error(ATOM_START))
        }
    }

    fn signed_int(&mut self) -> core::result::Result<BigInt, ParseError> {
        self.skip_ws();
        let negative = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(&["integer"]));
        }
        self.pos += digits;
        let n: BigInt = self.src[start..self.pos]
            .parse()
            .expect("ascii digits always parse");
        Ok(if negative { -n } else { n })
    }
}
