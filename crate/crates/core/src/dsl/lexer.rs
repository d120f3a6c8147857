use super::{DslError, DslErrorKind, Span};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Name(String),
    Int(usize),
    Str(String),
    Plus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Name(s) => format!("name {s}"),
            Tok::Int(i) => format!("integer {i}"),
            Tok::Str(_) => "string".into(),
            Tok::Plus => "\"(+)\"".into(),
            Tok::LParen => "\"(\"".into(),
            Tok::RParen => "\")\"".into(),
            Tok::LBracket => "\"[\"".into(),
            Tok::RBracket => "\"]\"".into(),
            Tok::Comma => "\",\"".into(),
            Tok::Caret => "\"^\"".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

pub(super) fn tokenize(src: &str) -> Result<Vec<(Tok, Span)>, DslError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'(' if bytes[i..].starts_with(b"(+)") => {
                i += 3;
                Tok::Plus
            }
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'[' => {
                i += 1;
                Tok::LBracket
            }
            b']' => {
                i += 1;
                Tok::RBracket
            }
            b',' => {
                i += 1;
                Tok::Comma
            }
            b'^' => {
                i += 1;
                Tok::Caret
            }
            b'"' => {
                let close = src[i + 1..]
                    .find('"')
                    .ok_or_else(|| DslError::at(src, start, DslErrorKind::UnterminatedString))?;
                let text = src[i + 1..i + 1 + close].to_string();
                i += close + 2;
                Tok::Str(text)
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = src[start..i]
                    .parse()
                    .map_err(|_| DslError::at(src, start, DslErrorKind::IntegerOverflow))?;
                Tok::Int(v)
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                Tok::Name(src[start..i].to_string())
            }
            _ => {
                let ch = src[i..].chars().next().unwrap();
                return Err(DslError::at(src, start, DslErrorKind::UnexpectedChar(ch)));
            }
        };
        out.push((tok, Span { start, end: i }));
    }
    out.push((Tok::Eof, Span { start: src.len(), end: src.len() }));
    Ok(out)
}
