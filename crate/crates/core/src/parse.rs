//! Parsing of polynomial and rational-function expressions.
//!
//! The expression language is deliberately small: polynomials in `x` written
//! as sums of terms like `8x^3`, `-4`, `2.5x`, `27/16`, or `(5/4)x^2`, and
//! rational functions written as `numerator/denominator`. Whitespace is
//! insignificant. Exponents are non-negative integers; decimal literals are
//! converted exactly (`2.5` is 5/2, never a float).
//!
//! Division is the one ambiguous character, resolved structurally: a `/` at
//! parenthesis depth 0 whose neighbors are `)` and `(` splits numerator from
//! denominator, as does a lone depth-0 `/`. Anything murkier — several
//! depth-0 slashes, none of them parenthesized — is rejected with a request
//! for parentheses rather than silently guessed at. Inside a polynomial,
//! `27/16` and `(5/4)x` denote fractional coefficients; `1/2x` is `(1/2)x`.
//!
//! All positions in errors are 0-based character offsets into the original
//! input string.

use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::rational_function::RationalFunction;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// Largest exponent the parser accepts. Big enough for any sane input,
/// small enough that a typo can't allocate a gigabyte of coefficients.
pub const MAX_EXPONENT: usize = 65_536;

/// What a lexed token is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// A run of digits with at most one decimal point: `12`, `2.5`, `.5`.
    Number,
    /// The variable `x`.
    Variable,
    Plus,
    Minus,
    Slash,
    Caret,
    LParen,
    RParen,
    /// Synthetic end-of-input marker; always the last token.
    End,
}

/// One lexed token. `position` is the character offset of its first
/// character; `text` is the source slice it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub position: usize,
    pub text: &'a str,
}

/// A syntax error with the character position it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 0-based character offset into the input.
    pub position: usize,
    /// What the parser was looking for.
    pub expected: String,
    /// What it found instead.
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "expected {} at char {}, found {}",
            self.expected, self.position, self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// Errors from rational-function parsing: either a syntax error in one of
/// the sides, or a structurally valid input whose denominator is the zero
/// polynomial (a semantic error, reported separately so callers can
/// distinguish "fix your syntax" from "that function does not exist").
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprError {
    Parse(ParseError),
    DenominatorZero {
        /// Character offset where the denominator side begins.
        position: usize,
    },
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Parse(e) => e.fmt(f),
            ExprError::DenominatorZero { position } => {
                write!(f, "denominator is the zero polynomial (at char {position})")
            }
        }
    }
}

impl std::error::Error for ExprError {}

impl From<ParseError> for ExprError {
    fn from(e: ParseError) -> Self {
        ExprError::Parse(e)
    }
}

/// Splits the input into tokens, or reports the first character it cannot
/// classify. A trailing [`TokenKind::End`] token is always appended.
pub fn tokenize(input: &str) -> Result<Vec<Token<'_>>, ParseError> {
    let mut tokens = Vec::new();
    let mut iter = input.char_indices().peekable();
    let mut pos = 0usize;
    while let Some(&(byte, c)) = iter.peek() {
        if c.is_whitespace() {
            iter.next();
            pos += 1;
            continue;
        }
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            'x' => Some(TokenKind::Variable),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                position: pos,
                text: &input[byte..byte + c.len_utf8()],
            });
            iter.next();
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() || c == '.' {
            let start_byte = byte;
            let start_pos = pos;
            let mut end_byte = byte;
            let mut digits = 0usize;
            let mut seen_dot = false;
            while let Some(&(b, ch)) = iter.peek() {
                if ch.is_ascii_digit() {
                    digits += 1;
                } else if ch == '.' && !seen_dot {
                    seen_dot = true;
                } else {
                    break;
                }
                end_byte = b + ch.len_utf8();
                iter.next();
                pos += 1;
            }
            if digits == 0 {
                return Err(ParseError {
                    position: start_pos,
                    expected: "digits in a number".into(),
                    found: "'.'".into(),
                });
            }
            tokens.push(Token {
                kind: TokenKind::Number,
                position: start_pos,
                text: &input[start_byte..end_byte],
            });
            continue;
        }
        return Err(ParseError {
            position: pos,
            expected: "a number, 'x', '+', '-', '/', '^', or parentheses".into(),
            found: format!("'{c}'"),
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        position: pos,
        text: "",
    });
    Ok(tokens)
}

fn describe(t: &Token<'_>) -> String {
    match t.kind {
        TokenKind::End => "end of input".into(),
        _ => format!("'{}'", t.text),
    }
}

/// Converts a lexed number literal to an exact rational: the digits become
/// the numerator and the denominator is 10^(fraction digits).
fn decimal_to_rational(text: &str) -> Rational {
    let (int_part, frac_part) = text.split_once('.').unwrap_or((text, ""));
    let digits: String = [int_part, frac_part].concat();
    let num: BigInt = digits.parse().expect("lexer guarantees at least one digit");
    let den = BigInt::from(10u8).pow(frac_part.len() as u32);
    Rational::new(num, den).expect("a power of ten is nonzero")
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token<'a> {
        &self.tokens[self.pos]
    }

    fn advance(&mut self) {
        if self.peek().kind != TokenKind::End {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            position: t.position,
            expected: expected.into(),
            found: describe(t),
        }
    }

    fn expect(&mut self, kind: TokenKind, expected: &str) -> Result<(), ParseError> {
        if self.peek().kind == kind {
            self.advance();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    /// polynomial := [sign] term (sign term)*
    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc: Vec<Rational> = Vec::new();
        let mut negative = false;
        match self.peek().kind {
            TokenKind::Plus => self.advance(),
            TokenKind::Minus => {
                negative = true;
                self.advance();
            }
            _ => {}
        }
        loop {
            let (degree, coeff) = self.term()?;
            if acc.len() <= degree {
                acc.resize(degree + 1, Rational::zero());
            }
            let signed = if negative { -&coeff } else { coeff };
            acc[degree] = &acc[degree] + &signed;
            match self.peek().kind {
                TokenKind::Plus => {
                    negative = false;
                    self.advance();
                }
                TokenKind::Minus => {
                    negative = true;
                    self.advance();
                }
                TokenKind::End => break,
                _ => return Err(self.error("'+', '-', or end of input")),
            }
        }
        Ok(Polynomial::new(acc))
    }

    /// term := coefficient | coefficient variable | variable
    /// where variable := 'x' ['^' integer]
    fn term(&mut self) -> Result<(usize, Rational), ParseError> {
        let coeff = match self.peek().kind {
            TokenKind::Number => Some(self.coefficient()?),
            TokenKind::LParen => Some(self.paren_coefficient()?),
            _ => None,
        };
        let mut degree = 0usize;
        let mut saw_variable = false;
        if self.peek().kind == TokenKind::Variable {
            self.advance();
            saw_variable = true;
            degree = 1;
            if self.peek().kind == TokenKind::Caret {
                self.advance();
                degree = self.exponent()?;
            }
        }
        if coeff.is_none() && !saw_variable {
            return Err(self.error("a term (number, 'x', or parenthesized fraction)"));
        }
        Ok((degree, coeff.unwrap_or_else(Rational::one)))
    }

    /// coefficient := number ['/' integer]
    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let tok = self.peek().clone();
        self.advance();
        let value = decimal_to_rational(tok.text);
        if self.peek().kind != TokenKind::Slash {
            return Ok(value);
        }
        if tok.text.contains('.') {
            return Err(ParseError {
                position: tok.position,
                expected: "an integer numerator before '/'".into(),
                found: format!("'{}'", tok.text),
            });
        }
        self.advance();
        let den = self.integer("an integer denominator after '/'", true)?;
        Ok(&value / &den)
    }

    /// '(' ['-'] integer '/' integer ')'
    fn paren_coefficient(&mut self) -> Result<Rational, ParseError> {
        self.expect(TokenKind::LParen, "'('")?;
        let negative = if self.peek().kind == TokenKind::Minus {
            self.advance();
            true
        } else {
            false
        };
        let num = self.integer("an integer numerator", false)?;
        self.expect(TokenKind::Slash, "'/' in a parenthesized coefficient")?;
        let den = self.integer("an integer denominator", true)?;
        self.expect(TokenKind::RParen, "')' after the coefficient fraction")?;
        let value = &num / &den;
        Ok(if negative { -&value } else { value })
    }

    /// An integer token as a rational; `reject_zero` is set at denominator
    /// call sites, where 0 is a positioned error rather than a panic later.
    fn integer(&mut self, expected: &str, reject_zero: bool) -> Result<Rational, ParseError> {
        let t = self.peek().clone();
        if t.kind != TokenKind::Number || t.text.contains('.') {
            return Err(self.error(expected));
        }
        self.advance();
        let value: BigInt = t.text.parse().expect("lexer guarantees digits");
        if reject_zero && value.is_zero() {
            return Err(ParseError {
                position: t.position,
                expected: "a nonzero denominator".into(),
                found: "'0'".into(),
            });
        }
        Ok(Rational::from_integer(value))
    }

    fn exponent(&mut self) -> Result<usize, ParseError> {
        let t = self.peek().clone();
        if t.kind != TokenKind::Number || t.text.contains('.') {
            return Err(self.error("an integer exponent after '^'"));
        }
        let value: BigInt = t.text.parse().expect("lexer guarantees digits");
        match value.to_usize() {
            Some(e) if e <= MAX_EXPONENT => {
                self.advance();
                Ok(e)
            }
            _ => Err(ParseError {
                position: t.position,
                expected: format!("an exponent at most {MAX_EXPONENT}"),
                found: format!("'{}'", t.text),
            }),
        }
    }
}

/// Parses a polynomial in `x`. Terms may repeat a degree (`x + x` is `2x`);
/// coefficients may be integers, exact decimals, or fractions.
pub fn parse_polynomial(input: &str) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(input)?;
    Parser { tokens, pos: 0 }.polynomial()
}

/// Parses `numerator/denominator` (or a bare polynomial, taken over the
/// denominator 1). See the module docs for how the dividing `/` is chosen.
/// A denominator that parses to the zero polynomial is reported as
/// [`ExprError::DenominatorZero`].
pub fn parse_rational_function(input: &str) -> Result<RationalFunction, ExprError> {
    let chars: Vec<char> = input.chars().collect();

    // Locate depth-0 slashes and check parenthesis balance in one pass.
    let mut depth = 0i64;
    let mut slashes: Vec<usize> = Vec::new();
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError {
                        position: i,
                        expected: "'(' before this".into(),
                        found: "')'".into(),
                    }
                    .into());
                }
            }
            '/' if depth == 0 => slashes.push(i),
            _ => {}
        }
    }
    if depth > 0 {
        return Err(ParseError {
            position: chars.len(),
            expected: "')'".into(),
            found: "end of input".into(),
        }
        .into());
    }

    // A slash flanked by ')' and '(' (ignoring whitespace) is structurally a
    // division of two parenthesized sides.
    let paren_adjacent: Vec<usize> = slashes
        .iter()
        .copied()
        .filter(|&i| {
            let prev = chars[..i].iter().rev().find(|c| !c.is_whitespace());
            let next = chars[i + 1..].iter().find(|c| !c.is_whitespace());
            prev == Some(&')') && next == Some(&'(')
        })
        .collect();

    let divider = match (paren_adjacent.len(), slashes.len()) {
        (1, _) => Some(paren_adjacent[0]),
        (0, 0) => None,
        (0, 1) => Some(slashes[0]),
        _ => {
            let ambiguous = if paren_adjacent.len() > 1 {
                paren_adjacent[1]
            } else {
                slashes[1]
            };
            return Err(ParseError {
                position: ambiguous,
                expected: "a single dividing '/' (parenthesize the numerator and denominator)"
                    .into(),
                found: "'/'".into(),
            }
            .into());
        }
    };

    match divider {
        None => {
            let (numerator, _) = parse_side(input, &chars, 0, chars.len())?;
            Ok(RationalFunction::new(numerator, Polynomial::one())
                .expect("the constant 1 is nonzero"))
        }
        Some(i) => {
            let (numerator, _) = parse_side(input, &chars, 0, i)?;
            let (denominator, den_start) = parse_side(input, &chars, i + 1, chars.len())?;
            if denominator.is_zero() {
                return Err(ExprError::DenominatorZero {
                    position: den_start,
                });
            }
            Ok(RationalFunction::new(numerator, denominator)
                .expect("zero denominator was just ruled out"))
        }
    }
}

/// Parses one side of the division: trims whitespace, strips matched outer
/// parentheses, and hands the rest to the polynomial parser, mapping error
/// positions back to offsets in the original input. Returns the polynomial
/// and the character offset where the trimmed side begins.
fn parse_side(
    input: &str,
    chars: &[char],
    start: usize,
    end: usize,
) -> Result<(Polynomial, usize), ParseError> {
    let mut lo = start;
    let mut hi = end;
    loop {
        while lo < hi && chars[lo].is_whitespace() {
            lo += 1;
        }
        while hi > lo && chars[hi - 1].is_whitespace() {
            hi -= 1;
        }
        if lo == hi {
            return Err(ParseError {
                position: lo,
                expected: "a polynomial".into(),
                found: if lo >= chars.len() {
                    "end of input".into()
                } else {
                    format!("'{}'", chars[lo])
                },
            });
        }
        if chars[lo] != '(' || chars[hi - 1] != ')' {
            break;
        }
        // Strip only if the opening paren matches the closing one.
        let mut depth = 0i64;
        let mut matches_outer = true;
        for (i, c) in chars.iter().enumerate().take(hi).skip(lo) {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 && i < hi - 1 {
                        matches_outer = false;
                        break;
                    }
                }
                _ => {}
            }
        }
        if !matches_outer {
            break;
        }
        lo += 1;
        hi -= 1;
    }
    let byte_lo: usize = chars[..lo].iter().map(|c| c.len_utf8()).sum();
    let byte_hi: usize = byte_lo + chars[lo..hi].iter().map(|c| c.len_utf8()).sum::<usize>();
    let poly = parse_polynomial(&input[byte_lo..byte_hi]).map_err(|e| ParseError {
        position: e.position + lo,
        ..e
    })?;
    Ok((poly, lo))
}
