//! Infix parser for both formula languages.
//!
//! ```text
//! formula  ::= iff
//! iff      ::= implies [ "<->" iff ]
//! implies  ::= or [ "->" implies ]
//! or       ::= and { "|" and }
//! and      ::= unary { "&" unary }
//! unary    ::= ("~" | "[]" | "<>") unary | primary
//! primary  ::= "(" formula ")" | atom
//! atom     ::= "eps" "(" ident "," ident ")"      (L1)
//!            | ident                              (modal)
//! ident    ::= [a-z][a-z0-9_]*
//! ```
//!
//! Unicode aliases: `¬ ∧ ∨ → ⊃ ↔ ≡ □ ◇ ε`; `!` is accepted for `~`.
//! Positions in errors are 0-based character offsets.

use std::fmt;

use thiserror::Error;

use crate::formula::{is_identifier, L1Formula, ModalFormula, NameVar, PropVar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
        };
        write!(f, "{kind} at position {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Eps,
    Ident(String),
    LParen,
    RParen,
    Comma,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Box,
    Diamond,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Eps => "'eps'".into(),
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Comma => "','".into(),
            Token::Not => "'~'".into(),
            Token::And => "'&'".into(),
            Token::Or => "'|'".into(),
            Token::Implies => "'->'".into(),
            Token::Iff => "'<->'".into(),
            Token::Box => "'[]'".into(),
            Token::Diamond => "'<>'".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let lexical = |position: usize, message: String| ParseError {
        kind: ParseErrorKind::Lexical,
        position,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let next = chars.get(i + 1).copied();
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => Token::LParen,
            ')' => Token::RParen,
            ',' => Token::Comma,
            '~' | '¬' | '!' => Token::Not,
            '&' | '∧' => Token::And,
            '|' | '∨' => Token::Or,
            '→' | '⊃' => Token::Implies,
            '↔' | '≡' => Token::Iff,
            '□' => Token::Box,
            '◇' => Token::Diamond,
            'ε' => Token::Eps,
            '-' if next == Some('>') => {
                i += 1;
                Token::Implies
            }
            '[' if next == Some(']') => {
                i += 1;
                Token::Box
            }
            '<' if next == Some('>') => {
                i += 1;
                Token::Diamond
            }
            '<' if next == Some('-') && chars.get(i + 2) == Some(&'>') => {
                i += 2;
                Token::Iff
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let word: String = chars[i..j].iter().collect();
                i = j - 1;
                if word == "eps" {
                    Token::Eps
                } else if is_identifier(&word) {
                    Token::Ident(word)
                } else {
                    return Err(lexical(
                        start,
                        format!("bad identifier {word:?} (expected [a-z][a-z0-9_]*)"),
                    ));
                }
            }
            other => return Err(lexical(start, format!("unexpected character {other:?}"))),
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::End, chars.len()));
    Ok(out)
}

pub struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

#[derive(Clone, Copy)]
enum Modality {
    Box,
    Diamond,
}

/// Language-specific pieces of the grammar.
trait Grammar: Sized {
    fn atom(p: &mut Parser) -> Result<Self, ParseError>;
    fn modal(m: Modality, x: Self, position: usize) -> Result<Self, ParseError>;
    fn not(x: Self) -> Self;
    fn or(x: Self, y: Self) -> Self;
    fn and(x: Self, y: Self) -> Self;
    fn implies(x: Self, y: Self) -> Self;
    fn iff(x: Self, y: Self) -> Self;
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn position(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            kind: ParseErrorKind::Syntax,
            position: self.position(),
            message,
        }
    }

    fn expect(&mut self, tok: Token) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {}, found {}", tok.describe(), self.peek().describe())))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Token::Ident(s) => {
                self.bump();
                Ok(s)
            }
            other => Err(self.error(format!("expected identifier, found {}", other.describe()))),
        }
    }

    fn formula<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let f = self.iff::<G>()?;
        if *self.peek() != Token::End {
            return Err(self.error(format!("unexpected {}", self.peek().describe())));
        }
        Ok(f)
    }

    fn iff<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let l = self.implies::<G>()?;
        if *self.peek() == Token::Iff {
            self.bump();
            let r = self.iff::<G>()?;
            return Ok(G::iff(l, r));
        }
        Ok(l)
    }

    fn implies<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let l = self.or::<G>()?;
        if *self.peek() == Token::Implies {
            self.bump();
            let r = self.implies::<G>()?;
            return Ok(G::implies(l, r));
        }
        Ok(l)
    }

    fn or<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let mut l = self.and::<G>()?;
        while *self.peek() == Token::Or {
            self.bump();
            let r = self.and::<G>()?;
            l = G::or(l, r);
        }
        Ok(l)
    }

    fn and<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let mut l = self.unary::<G>()?;
        while *self.peek() == Token::And {
            self.bump();
            let r = self.unary::<G>()?;
            l = G::and(l, r);
        }
        Ok(l)
    }

    fn unary<G: Grammar>(&mut self) -> Result<G, ParseError> {
        let at = self.position();
        match self.peek() {
            Token::Not => {
                self.bump();
                Ok(G::not(self.unary::<G>()?))
            }
            Token::Box => {
                self.bump();
                let x = self.unary::<G>()?;
                G::modal(Modality::Box, x, at)
            }
            Token::Diamond => {
                self.bump();
                let x = self.unary::<G>()?;
                G::modal(Modality::Diamond, x, at)
            }
            Token::LParen => {
                self.bump();
                let f = self.iff::<G>()?;
                self.expect(Token::RParen)?;
                Ok(f)
            }
            _ => G::atom(self),
        }
    }
}

impl Grammar for L1Formula {
    fn atom(p: &mut Parser) -> Result<Self, ParseError> {
        match p.peek().clone() {
            Token::Eps => {
                p.bump();
                p.expect(Token::LParen)?;
                let a = p.ident()?;
                p.expect(Token::Comma)?;
                let b = p.ident()?;
                p.expect(Token::RParen)?;
                // ident() only yields well-formed identifiers
                Ok(L1Formula::Epsilon(NameVar::new(&a).unwrap(), NameVar::new(&b).unwrap()))
            }
            Token::Ident(s) => Err(p.error(format!(
                "bare atom {s:?} is not an L1 formula (atoms have the form eps(a,b))"
            ))),
            other => Err(p.error(format!("expected formula, found {}", other.describe()))),
        }
    }

    fn modal(_: Modality, _: Self, position: usize) -> Result<Self, ParseError> {
        Err(ParseError {
            kind: ParseErrorKind::Syntax,
            position,
            message: "modal operators are not part of L1".into(),
        })
    }

    fn not(x: Self) -> Self {
        L1Formula::not(x)
    }
    fn or(x: Self, y: Self) -> Self {
        L1Formula::or(x, y)
    }
    fn and(x: Self, y: Self) -> Self {
        L1Formula::and(x, y)
    }
    fn implies(x: Self, y: Self) -> Self {
        L1Formula::implies(x, y)
    }
    fn iff(x: Self, y: Self) -> Self {
        L1Formula::iff(x, y)
    }
}

impl Grammar for ModalFormula {
    fn atom(p: &mut Parser) -> Result<Self, ParseError> {
        match p.peek().clone() {
            Token::Ident(s) => {
                p.bump();
                Ok(ModalFormula::Var(PropVar::new(&s).unwrap()))
            }
            Token::Eps => Err(p.error("epsilon atoms are not part of the modal language".into())),
            other => Err(p.error(format!("expected formula, found {}", other.describe()))),
        }
    }

    fn modal(m: Modality, x: Self, _: usize) -> Result<Self, ParseError> {
        Ok(match m {
            Modality::Box => ModalFormula::boxed(x),
            Modality::Diamond => ModalFormula::diamond(x),
        })
    }

    fn not(x: Self) -> Self {
        ModalFormula::not(x)
    }
    fn or(x: Self, y: Self) -> Self {
        ModalFormula::or(x, y)
    }
    fn and(x: Self, y: Self) -> Self {
        ModalFormula::and(x, y)
    }
    fn implies(x: Self, y: Self) -> Self {
        ModalFormula::implies(x, y)
    }
    fn iff(x: Self, y: Self) -> Self {
        ModalFormula::iff(x, y)
    }
}

pub fn parse_l1(text: &str) -> Result<L1Formula, ParseError> {
    Parser {
        tokens: lex(text)?,
        pos: 0,
    }
    .formula()
}

pub fn parse_modal(text: &str) -> Result<ModalFormula, ParseError> {
    Parser {
        tokens: lex(text)?,
        pos: 0,
    }
    .formula()
}

impl std::str::FromStr for L1Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_l1(s)
    }
}

impl std::str::FromStr for ModalFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_modal(s)
    }
}
