use bousfield_core::{ClassExpr, Generator};
use thiserror::Error;

/// Largest accepted generator index.
pub const MAX_INDEX: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    /// Non-whitespace characters with their byte offsets.
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(o, _)| o)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.error(format!("expected '{c}', found '{got}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars[self.pos..]
            .iter()
            .map(|&(_, c)| c)
            .take(n)
            .eq(word.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.term()?;
        while self.eat('v') || self.eat('∨') {
            let rhs = self.term()?;
            lhs = ClassExpr::wedge(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('^') || self.eat('∧') {
            let rhs = self.factor()?;
            lhs = ClassExpr::smash(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ClassExpr, ParseError> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        for (word, g) in [
            ("HFp", Generator::HFp),
            ("BP", Generator::BP),
            ("0", Generator::Zero),
            ("S", Generator::Sphere),
            ("I", Generator::I),
            ("Q", Generator::Q),
        ] {
            if self.keyword(word) {
                return Ok(ClassExpr::gen(g));
            }
        }
        let make: fn(u32) -> Generator = match self.peek() {
            Some('F') => Generator::F,
            Some('T') => Generator::T,
            Some('K') => Generator::K,
            Some('E') => Generator::E,
            Some(c) => return self.error(format!("unexpected '{c}'")),
            None => return self.error("unexpected end of input"),
        };
        self.pos += 1;
        self.expect('(')?;
        let n = self.index()?;
        self.expect(')')?;
        Ok(ClassExpr::gen(make(n)))
    }

    fn index(&mut self) -> Result<u32, ParseError> {
        let start = self.offset();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = (value * 10 + u64::from(d)).min(u64::from(u32::MAX));
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return self.error("expected an index");
        }
        if value > u64::from(MAX_INDEX) {
            return Err(ParseError {
                offset: start,
                message: format!("index exceeds {MAX_INDEX}"),
            });
        }
        Ok(value as u32)
    }
}

/// Parses a class expression. `^` (or `∧`) is smash and binds tighter
/// than `v` (or `∨`), wedge; both associate to the left.
pub fn parse_expr(text: &str) -> Result<ClassExpr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.error(format!("unexpected '{c}' after expression"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn precedence() {
        assert_eq!(parse_expr("T(2) ^ K(3)").unwrap(), ClassExpr::smash(T(2), K(3)));
        assert_eq!(
            parse_expr("K(0) v K(1) ^ F(2)").unwrap(),
            ClassExpr::wedge(K(0), ClassExpr::smash(K(1), F(2)))
        );
        assert_eq!(
            parse_expr("(K(0) ∨ K(1)) ∧ F(2)").unwrap(),
            ClassExpr::smash(ClassExpr::wedge(K(0), K(1)), F(2))
        );
        assert_eq!(
            parse_expr("S v 0 v I").unwrap(),
            ClassExpr::wedge(ClassExpr::wedge(Sphere, Zero), I)
        );
        assert_eq!(parse_expr(" H F p ^BP").unwrap(), ClassExpr::smash(HFp, BP));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_expr("E(").unwrap_err().offset, 2);
        assert_eq!(parse_expr("").unwrap_err().offset, 0);
        assert_eq!(parse_expr("K(1) v").unwrap_err().offset, 6);
        assert_eq!(parse_expr("K(1))").unwrap_err().offset, 4);
        assert_eq!(parse_expr("K(65536)").unwrap(), ClassExpr::gen(K(65536)));
        let e = parse_expr("T(65537)").unwrap_err();
        assert_eq!(e.offset, 2);
        assert!(e.message.contains("exceeds"));
        assert!(parse_expr("K(99999999999999999999)").is_err());
        assert!(parse_expr("X(1)").is_err());
    }
}
