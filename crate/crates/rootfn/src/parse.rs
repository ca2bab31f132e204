//! Text input: polynomial expressions and system files.
//!
//! Expression grammar (whitespace insignificant):
//!
//! ```text
//! expr     := ('+' | '-')? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ('^' nat)? | '(' expr ')'
//! rational := nat ('/' nat)?
//! ```
//!
//! Exponentiation applies to variables only; `(x1 + x2)^2` is rejected and
//! must be expanded by the caller. Rationals are written `a` or `a/b`.
//!
//! System files are line oriented: a `vars:` line, a `field:` line (`Q` or
//! `Fp <prime>`), then one named equation per line; `#` starts a comment.
//!
//! ```text
//! # intersection of a parabola and a line
//! vars: x1 x2
//! field: Q
//! f1: x1^2 - x2
//! f2: x2 - 1
//! ```

use crate::context::VarContext;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Polynomial;
use crate::system::PolySystem;

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Number(String),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            base,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token with its byte offset, or `None` at the end.
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let at = self.base + self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((at, Tok::Number(text.into()))));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                return Ok(Some((at, Tok::Ident(text.into()))));
            }
            other => {
                return Err(Error::Parse {
                    pos: at,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((at, tok)))
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, Tok)>,
    cursor: usize,
    end: usize,
    context: &'a VarContext,
    field: &'a FieldSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.tokens.get(self.cursor)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn fail<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos,
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                }
                Tok::Minus => {
                    self.bump();
                    negate = true;
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.bump();
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let Some((pos, tok)) = self.bump() else {
            return self.fail(self.end, "expected a factor");
        };
        match tok {
            Tok::Number(num) => {
                let mut text = num;
                match self.peek() {
                    Some((p, Tok::Number(_))) => {
                        return self.fail(*p, "missing operator before number")
                    }
                    Some((p, Tok::Ident(_))) => {
                        return self.fail(*p, "missing `*` before variable")
                    }
                    Some((p, Tok::Caret)) => {
                        return self.fail(*p, "exponentiation applies to variables only")
                    }
                    _ => {}
                }
                if matches!(self.peek(), Some((_, Tok::Slash))) {
                    let (slash_pos, _) = self.bump().unwrap();
                    match self.bump() {
                        Some((_, Tok::Number(den))) => {
                            text.push('/');
                            text.push_str(&den);
                        }
                        Some((p, _)) => return self.fail(p, "expected a denominator"),
                        None => return self.fail(slash_pos, "expected a denominator"),
                    }
                }
                let value = self.field.parse_scalar(&text).map_err(|e| match e {
                    Error::DivisionByZero => Error::Parse {
                        pos,
                        msg: "zero denominator".into(),
                    },
                    other => Error::Parse {
                        pos,
                        msg: other.to_string(),
                    },
                })?;
                Ok(Polynomial::constant(self.context, self.field, value))
            }
            Tok::Ident(name) => {
                let Some(index) = self.context.index_of(&name) else {
                    return self.fail(pos, format!("undeclared variable `{name}`"));
                };
                let exponent = if matches!(self.peek(), Some((_, Tok::Caret))) {
                    self.bump();
                    let Some((epos, etok)) = self.bump() else {
                        return self.fail(self.end, "expected an exponent");
                    };
                    match etok {
                        Tok::Number(digits) => digits.parse::<u32>().map_err(|_| Error::Parse {
                            pos: epos,
                            msg: "exponent out of range".into(),
                        })?,
                        Tok::Minus => {
                            return self.fail(epos, "exponent must be a non-negative integer")
                        }
                        _ => return self.fail(epos, "expected an exponent"),
                    }
                } else {
                    1
                };
                Ok(Polynomial::x_var(self.context, self.field, index).pow(exponent))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => {}
                    Some((p, _)) => return self.fail(p, "expected `)`"),
                    None => return self.fail(self.end, "unclosed `(`"),
                }
                if let Some((p, Tok::Caret)) = self.peek() {
                    return self.fail(
                        *p,
                        "cannot exponentiate a parenthesized expression; expand it instead",
                    );
                }
                Ok(inner)
            }
            other => self.fail(pos, format!("unexpected token `{other:?}`")),
        }
    }
}

/// Parse one x-only polynomial over the given context and field.
pub fn parse_poly(src: &str, context: &VarContext, field: &FieldSpec) -> Result<Polynomial> {
    let mut tokens = Vec::new();
    let mut lexer = Lexer::new(src, 0);
    while let Some(t) = lexer.next()? {
        tokens.push(t);
    }
    let mut parser = Parser {
        tokens,
        cursor: 0,
        end: src.len(),
        context,
        field,
    };
    let poly = parser.expr()?;
    if let Some((p, tok)) = parser.peek() {
        return Err(Error::Parse {
            pos: *p,
            msg: format!("unexpected trailing token `{tok:?}`"),
        });
    }
    Ok(poly)
}

/// A parsed system file.
#[derive(Clone, Debug)]
pub struct SystemFile {
    pub context: VarContext,
    pub field: FieldSpec,
    pub equation_names: Vec<String>,
    pub system: PolySystem,
}

/// Parse the line-oriented system file format.
pub fn parse_system_file(text: &str) -> Result<SystemFile> {
    let mut context: Option<VarContext> = None;
    let mut field: Option<FieldSpec> = None;
    let mut names: Vec<String> = Vec::new();
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut offset = 0usize;
    for line in text.split('\n') {
        let line_start = offset;
        offset += line.len() + 1;
        let content = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(Error::Parse {
                pos: line_start,
                msg: "expected `key: value`".into(),
            });
        };
        let key = content[..colon].trim();
        let value = &content[colon + 1..];
        match key {
            "vars" => {
                if context.is_some() {
                    return Err(Error::Parse {
                        pos: line_start,
                        msg: "duplicate `vars:` line".into(),
                    });
                }
                let vars: Vec<String> =
                    value.split_whitespace().map(str::to_string).collect();
                context = Some(VarContext::new(vars).map_err(|e| Error::Parse {
                    pos: line_start,
                    msg: e.to_string(),
                })?);
            }
            "field" => {
                if field.is_some() {
                    return Err(Error::Parse {
                        pos: line_start,
                        msg: "duplicate `field:` line".into(),
                    });
                }
                let mut words = value.split_whitespace();
                field = Some(match (words.next(), words.next(), words.next()) {
                    (Some("Q"), None, _) => FieldSpec::rationals(),
                    (Some("Fp"), Some(p), None) => {
                        let p: u64 = p.parse().map_err(|_| Error::Parse {
                            pos: line_start,
                            msg: format!("bad modulus `{p}`"),
                        })?;
                        FieldSpec::prime_field(p).map_err(|e| Error::Parse {
                            pos: line_start,
                            msg: e.to_string(),
                        })?
                    }
                    _ => {
                        return Err(Error::Parse {
                            pos: line_start,
                            msg: "field must be `Q` or `Fp <prime>`".into(),
                        })
                    }
                });
            }
            name => {
                let (Some(ctx), Some(fld)) = (&context, &field) else {
                    return Err(Error::Parse {
                        pos: line_start,
                        msg: "declare `vars:` and `field:` before equations".into(),
                    });
                };
                let poly = parse_poly(value, ctx, fld).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: line_start + colon + 1 + pos,
                        msg,
                    },
                    other => other,
                })?;
                names.push(name.to_string());
                polys.push(poly);
            }
        }
    }
    let Some(context) = context else {
        return Err(Error::Parse {
            pos: 0,
            msg: "missing `vars:` line".into(),
        });
    };
    let Some(field) = field else {
        return Err(Error::Parse {
            pos: 0,
            msg: "missing `field:` line".into(),
        });
    };
    let system = PolySystem::new(polys).map_err(|e| Error::Parse {
        pos: 0,
        msg: e.to_string(),
    })?;
    Ok(SystemFile {
        context,
        field,
        equation_names: names,
        system,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn ctx2() -> VarContext {
        VarContext::new(vec!["x1", "x2"]).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let ctx = ctx2();
        let p = parse_poly("x1^2 - 1", &ctx, &q()).unwrap();
        assert_eq!(p.to_string(), "x1^2 - 1");
        let p = parse_poly("3/2*x1*x2", &ctx, &q()).unwrap();
        assert_eq!(p.to_string(), "3/2*x1*x2");
        let p = parse_poly("(x1 + x2)*(x1 - x2)", &ctx, &q()).unwrap();
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        let p = parse_poly("-x1 + 2", &ctx, &q()).unwrap();
        assert_eq!(p.to_string(), "-x1 + 2");
    }

    #[test]
    fn parenthesized_power_is_rejected() {
        let err = parse_poly("(x1 + x2)^2", &ctx2(), &q()).unwrap_err();
        match err {
            Error::Parse { pos, msg } => {
                assert_eq!(pos, 9);
                assert!(msg.contains("expand"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let ctx = ctx2();
        assert!(matches!(
            parse_poly("x3 + 1", &ctx, &q()),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_poly("x1 $ 1", &ctx, &q()),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            parse_poly("1/0", &ctx, &q()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly("x1^", &ctx, &q()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly("x1 x2", &ctx, &q()),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poly("", &ctx, &q()),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn prime_field_literals_reduce() {
        let ctx = ctx2();
        let f = FieldSpec::prime_field(7).unwrap();
        let p = parse_poly("10*x1 + 1/2", &ctx, &f).unwrap();
        assert_eq!(p.to_string(), "3*x1 + 4");
    }

    #[test]
    fn system_file_round_trip() {
        let text = "# a comment\nvars: x1 x2\nfield: Q\nf1: x1^2 - 1\nf2: x2^2 - x1\n";
        let sf = parse_system_file(text).unwrap();
        assert_eq!(sf.context.n(), 2);
        assert_eq!(sf.equation_names, vec!["f1", "f2"]);
        assert_eq!(sf.system.delta_f(), 2);
        // Fp variant
        let text = "vars: x1\nfield: Fp 32003\nf1: x1^2 - 1\n";
        let sf = parse_system_file(text).unwrap();
        assert_eq!(sf.field.modulus(), Some(32003));
    }

    #[test]
    fn system_file_errors() {
        assert!(parse_system_file("field: Q\nf1: x1\n").is_err());
        assert!(parse_system_file("vars: x1\nfield: Q\n").is_err()); // no equations
        assert!(parse_system_file("vars: x1\nfield: Fp 4\nf1: x1\n").is_err());
        assert!(parse_system_file("vars: x1\nfield: Q\nf1: x2\n").is_err());
        assert!(parse_system_file("vars: x1\nfield: Q\nf1: x1\nf2: x1\n").is_err());
    }
}
