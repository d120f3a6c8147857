use crate::gadgets::GadgetName;

use super::lexer::{tokenize, Tok};
use super::{DslError, DslErrorKind, Expr, ExprKind, RootRef, Span};

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

/// Parses an expression. Every node carries its source span.
pub fn parse(src: &str) -> Result<Expr, DslError> {
    let mut p = Parser { src, toks: tokenize(src)?, pos: 0 };
    let e = p.expr()?;
    p.expect(Tok::Eof, "\"(+)\" or end of input")?;
    Ok(e)
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, span: Span, kind: DslErrorKind) -> DslError {
        DslError::at(self.src, span.start, kind)
    }

    fn unexpected(&self, expected: &str) -> DslError {
        self.error(
            self.span(),
            DslErrorKind::Unexpected { expected: expected.into(), found: self.peek().describe() },
        )
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Span, DslError> {
        if *self.peek() == tok {
            Ok(self.bump().1)
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut left = self.term()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let right = self.term()?;
            let span = left.span.to(right.span);
            left = Expr { kind: ExprKind::Sum(Box::new(left), Box::new(right)), span };
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, span) = self.bump();
        let Tok::Int(k) = tok else {
            return Err(self.error(
                span,
                DslErrorKind::Unexpected { expected: "exponent".into(), found: tok.describe() },
            ));
        };
        if !matches!(base.kind, ExprKind::Atom { name: GadgetName::Path(4), .. }) {
            return Err(self.error(base.span, DslErrorKind::PowerBase));
        }
        if k == 0 {
            return Err(self.error(span, DslErrorKind::ZeroExponent));
        }
        let span = base.span.to(span);
        Ok(Expr { kind: ExprKind::Pow(Box::new(base), k), span })
    }

    fn root(&mut self) -> Result<RootRef, DslError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::Int(i) => Ok(RootRef::Id(i)),
            Tok::Name(s) => match s.as_str() {
                "a" => Ok(RootRef::A),
                "b" => Ok(RootRef::B),
                "c" => Ok(RootRef::C),
                _ => Err(self.error(span, DslErrorKind::BadRoot(s))),
            },
            other => Err(self.error(span, DslErrorKind::BadRoot(other.describe()))),
        }
    }

    /// `[root, root]` if the next token opens a bracket.
    fn roots(&mut self) -> Result<(Option<(RootRef, RootRef)>, Option<Span>), DslError> {
        if *self.peek() != Tok::LBracket {
            return Ok((None, None));
        }
        self.bump();
        let x = self.root()?;
        self.expect(Tok::Comma, "\",\"")?;
        let y = self.root()?;
        let end = self.expect(Tok::RBracket, "\"]\"")?;
        Ok((Some((x, y)), Some(end)))
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let (tok, span) = self.bump();
        match tok {
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.expect(Tok::RParen, "\")\" or \"(+)\"")?;
                let (roots, end) = self.roots()?;
                if let Some((RootRef::C, _) | (_, RootRef::C)) = roots {
                    return Err(self.error(span, DslErrorKind::BadRoot("c".into())));
                }
                let span = span.to(end.unwrap_or(close));
                Ok(Expr { kind: ExprKind::Group { inner: Box::new(inner), roots }, span })
            }
            Tok::Name(s) if s == "g6" => {
                let (tok, text_span) = self.bump();
                let Tok::Str(text) = tok else {
                    return Err(self.error(
                        text_span,
                        DslErrorKind::Unexpected { expected: "graph6 string".into(), found: tok.describe() },
                    ));
                };
                self.expect(Tok::LBracket, "\"[\"")?;
                let mut ids = [0usize; 2];
                for (i, id) in ids.iter_mut().enumerate() {
                    if i == 1 {
                        self.expect(Tok::Comma, "\",\"")?;
                    }
                    let (tok, s) = self.bump();
                    let Tok::Int(v) = tok else {
                        return Err(self.error(s, DslErrorKind::BadRoot(tok.describe())));
                    };
                    *id = v;
                }
                let end = self.expect(Tok::RBracket, "\"]\"")?;
                Ok(Expr { kind: ExprKind::Graph6 { text, roots: (ids[0], ids[1]) }, span: span.to(end) })
            }
            Tok::Name(s) => {
                let name: GadgetName =
                    s.parse().map_err(|_| self.error(span, DslErrorKind::UnknownAtom(s.clone())))?;
                let (roots, end) = self.roots()?;
                Ok(Expr { kind: ExprKind::Atom { name, roots }, span: span.to(end.unwrap_or(span)) })
            }
            other => Err(self.error(
                span,
                DslErrorKind::Unexpected { expected: "atom".into(), found: other.describe() },
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(name: GadgetName, x: RootRef, y: RootRef) -> Expr {
        Expr { kind: ExprKind::Atom { name, roots: Some((x, y)) }, span: Span::default() }
    }

    #[test]
    fn sum_of_atoms() {
        let e = parse("F6[a,b] (+) F4[a,b]").unwrap();
        let want = Expr {
            kind: ExprKind::Sum(
                Box::new(atom(GadgetName::F6, RootRef::A, RootRef::B)),
                Box::new(atom(GadgetName::F4, RootRef::A, RootRef::B)),
            ),
            span: Span::default(),
        };
        assert_eq!(e, want);
        assert_eq!(e.span, Span { start: 0, end: 19 });
    }

    #[test]
    fn left_associative_with_power() {
        let e = parse("F6[a,b] (+) F4[a,b] (+) P4^2").unwrap();
        let ExprKind::Sum(left, right) = &e.kind else { panic!() };
        assert!(matches!(left.kind, ExprKind::Sum(..)));
        assert!(matches!(right.kind, ExprKind::Pow(_, 2)));
    }

    #[test]
    fn errors() {
        let e = parse("F5[a,b]").unwrap_err();
        assert_eq!(e.kind, DslErrorKind::UnknownAtom("F5".into()));
        assert_eq!(e.to_string(), "1:1: unknown atom F5");
        let e = parse("F4 (+) K3^2").unwrap_err();
        assert_eq!((e.kind, e.offset), (DslErrorKind::PowerBase, 7));
        let e = parse("F4 (+)").unwrap_err();
        assert_eq!(e.offset, 6);
        let e = parse("(F4 (+) F3").unwrap_err();
        assert!(matches!(e.kind, DslErrorKind::Unexpected { .. }));
        let e = parse("F4[a,d]").unwrap_err();
        assert_eq!((e.kind, e.offset), (DslErrorKind::BadRoot("d".into()), 5));
        assert_eq!(parse("P4^0").unwrap_err().kind, DslErrorKind::ZeroExponent);
        assert!(parse("F4 F3").is_err());
    }

    #[test]
    fn round_trip() {
        for t in [
            "F6[a,b] (+) F4[a,b]",
            "(F6[a,b] (+) F4[a,b]) (+) P4^2",
            "F6[b,c]",
            "K3 (+) C5[0,2]",
            "(K3[a,b] (+) F7[a,b])[1,2] (+) F7[a,b]",
            "g6 \"CN\"[0,1] (+) P3",
            "F3 (+) (F4 (+) P4^3)",
        ] {
            let e = parse(t).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "{t} -> {printed}");
        }
    }
}
