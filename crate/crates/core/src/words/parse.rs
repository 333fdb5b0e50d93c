//! Recursive-descent parser for words such as `(xy)^4(xy^2)^3xyxy^2`.
//!
//! ```text
//! expr := term+
//! term := atom ('^' uint)?
//! atom := 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Parsed words are freely reduced in `ℤ₂ ∗ ℤ₃` as they are built.

use super::{Fragment, Word, WordError};

/// Upper bound on the expanded length of a parsed expression.
const MAX_EXPANDED: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    X,
    Y,
}

impl Gen {
    fn order(self) -> u8 {
        match self {
            Gen::X => 2,
            Gen::Y => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Syllable {
    gen: Gen,
    exp: u8,
}

/// A freely reduced element of `ℤ₂ ∗ ℤ₃` as a syllable list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Reduced(Vec<Syllable>);

impl Reduced {
    fn push(&mut self, s: Syllable) {
        match self.0.last_mut() {
            Some(top) if top.gen == s.gen => {
                top.exp = (top.exp + s.exp) % s.gen.order();
                if top.exp == 0 {
                    self.0.pop();
                }
            }
            _ => self.0.push(s),
        }
    }

    fn extend(&mut self, other: &Reduced) {
        for &s in &other.0 {
            self.push(s);
        }
    }

    fn cyclically_reduce(mut self) -> Reduced {
        while self.0.len() >= 2 && self.0[0].gen == self.0[self.0.len() - 1].gen {
            let last = self.0.pop().expect("len >= 2");
            let gen = last.gen;
            let exp = (self.0[0].exp + last.exp) % gen.order();
            if exp == 0 {
                self.0.remove(0);
            } else {
                self.0[0].exp = exp;
            }
        }
        self
    }

    /// `α` sequence of an alternating list that starts with `x` and ends with `y^α`.
    fn alphas(&self) -> Option<Vec<u8>> {
        if self.0.is_empty() || self.0.len() % 2 != 0 {
            return None;
        }
        self.0
            .chunks(2)
            .map(|pair| match pair {
                [Syllable { gen: Gen::X, .. }, Syllable { gen: Gen::Y, exp }] => Some(*exp),
                _ => None,
            })
            .collect()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> WordError {
        WordError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Reduced, WordError> {
        let mut acc = Reduced::default();
        let mut seen = false;
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let t = self.term()?;
            acc.extend(&t);
            seen = true;
        }
        if !seen {
            return Err(self.error("expected 'x', 'y' or '('"));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Reduced, WordError> {
        let atom = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(atom);
        }
        self.bump();
        let n = self.uint()?;
        if n == 0 {
            return Err(self.error("exponent must be at least 1"));
        }
        if atom.0.len().saturating_mul(n) > MAX_EXPANDED {
            return Err(self.error("expression too long"));
        }
        let mut out = Reduced::default();
        for _ in 0..n {
            out.extend(&atom);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Reduced, WordError> {
        let start = self.pos;
        match self.bump() {
            Some('x') => Ok(Reduced(vec![Syllable {
                gen: Gen::X,
                exp: 1,
            }])),
            Some('y') => Ok(Reduced(vec![Syllable {
                gen: Gen::Y,
                exp: 1,
            }])),
            Some('(') => {
                let inner = self.expr()?;
                if self.bump() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) => {
                self.pos = start;
                self.skip_ws();
                Err(self.error(format!("unexpected character '{c}'")))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<usize, WordError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a non-negative integer exponent"));
        }
        let n = rest[..len]
            .parse::<usize>()
            .map_err(|_| self.error("exponent out of range"))?;
        self.pos += len;
        Ok(n)
    }

    fn parse_all(mut self) -> Result<Reduced, WordError> {
        let r = self.expr()?;
        if self.peek().is_some() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(r)
    }
}

/// Parses and cyclically reduces a word, rotating it to start with `x`.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let reduced = Parser::new(text).parse_all()?.cyclically_reduce();
    if reduced.0.is_empty() {
        return Err(WordError::Empty);
    }
    let mut syls = reduced.0;
    if syls[0].gen == Gen::Y {
        syls.rotate_left(1);
    }
    let alphas = Reduced(syls).alphas().ok_or(WordError::NotAlternating)?;
    Word::new(alphas)
}

/// Parses a linear subword of the form `x y^α ⋯ x y^α` (no cyclic reduction).
pub fn parse_fragment(text: &str) -> Result<Fragment, WordError> {
    let reduced = Parser::new(text).parse_all()?;
    if reduced.0.is_empty() {
        return Err(WordError::Empty);
    }
    let alphas = reduced.alphas().ok_or(WordError::NotSyllableAligned)?;
    Ok(Fragment::new(alphas))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_style_words() {
        assert_eq!(
            parse_word("(xy)^2xy^2xyxy^2").unwrap().alphas(),
            &[1, 1, 2, 1, 2]
        );
        assert_eq!(parse_word("xy").unwrap().alphas(), &[1]);
        assert_eq!(parse_word("yx").unwrap().alphas(), &[1]);
        assert_eq!(parse_word(" ( x y ) ^ 3 ").unwrap().alphas(), &[1, 1, 1]);
    }

    #[test]
    fn reduction_rules() {
        // x y^2 x collapses cyclically to a lone y-syllable
        assert_eq!(parse_word("xyyx"), Err(WordError::NotAlternating));
        assert_eq!(parse_word("xx"), Err(WordError::Empty));
        assert_eq!(parse_word("yyy"), Err(WordError::Empty));
        assert_eq!(parse_word("xy^4"), parse_word("xy"));
        assert_eq!(parse_word("xyxxy").unwrap().alphas(), &[2]);
        // leading and trailing y merge into y^2
        assert_eq!(parse_word("yxy^2xy").unwrap().alphas(), &[2, 2]);
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_word("xy)") {
            Err(WordError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word("x^0y") {
            Err(WordError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_word("(xy"), Err(WordError::Syntax { .. })));
        assert!(matches!(
            parse_word("xz"),
            Err(WordError::Syntax { pos: 1, .. })
        ));
        assert!(matches!(parse_word(""), Err(WordError::Syntax { .. })));
        assert!(matches!(parse_word("xy^-1"), Err(WordError::Syntax { .. })));
    }

    #[test]
    fn fragments_are_not_cyclically_reduced() {
        assert_eq!(
            parse_fragment("xy^2xy(xy^2)^3xy").unwrap().alphas(),
            &[2, 1, 2, 2, 2, 1]
        );
        assert_eq!(parse_fragment("yx"), Err(WordError::NotSyllableAligned));
        assert_eq!(parse_fragment("xyx"), Err(WordError::NotSyllableAligned));
    }
}
