use num_bigint::BigInt;

use super::token::{Tok, Token};
use crate::fp::F32;
use crate::loc::{Diagnostic, SourceUnit};

pub struct LexOutput {
    pub tokens: Vec<Token>,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn lex(src: &SourceUnit) -> LexOutput {
    let bytes = src.text.as_bytes();
    let mut pos = 0usize;
    let mut tokens = Vec::new();
    let mut diagnostics = Vec::new();

    macro_rules! push {
        ($tok:expr, $at:expr) => {
            tokens.push(Token { tok: $tok, loc: src.loc_at($at) })
        };
    }

    while pos < bytes.len() {
        let c = bytes[pos];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => pos += 1,
            b'-' if pos + 1 < bytes.len() && bytes[pos + 1] == b'-' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            b'0'..=b'9' => {
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'_') {
                    pos += 1;
                }
                // a dot starts a real literal unless it is the `..` of a range
                let mut is_real = false;
                if pos < bytes.len()
                    && bytes[pos] == b'.'
                    && bytes.get(pos + 1).is_some_and(|b| b.is_ascii_digit())
                {
                    is_real = true;
                    pos += 1;
                    while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'_')
                    {
                        pos += 1;
                    }
                }
                if is_real
                    && pos < bytes.len()
                    && (bytes[pos] == b'e' || bytes[pos] == b'E')
                {
                    let mut p = pos + 1;
                    if p < bytes.len() && (bytes[p] == b'+' || bytes[p] == b'-') {
                        p += 1;
                    }
                    if p < bytes.len() && bytes[p].is_ascii_digit() {
                        pos = p;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                    } else {
                        diagnostics.push(Diagnostic::new(
                            src.loc_at(start),
                            "malformed literal: exponent has no digits",
                        ));
                        pos = p;
                        continue;
                    }
                }
                let text: String = src.text[start..pos].chars().filter(|&c| c != '_').collect();
                if is_real {
                    match text.parse::<f32>() {
                        Ok(v) => push!(Tok::Real(F32::from_f32(v)), start),
                        Err(_) => diagnostics.push(Diagnostic::new(
                            src.loc_at(start),
                            format!("malformed literal `{text}`"),
                        )),
                    }
                } else {
                    match text.parse::<BigInt>() {
                        Ok(v) => push!(Tok::Int(v), start),
                        Err(_) => diagnostics.push(Diagnostic::new(
                            src.loc_at(start),
                            format!("malformed literal `{text}`"),
                        )),
                    }
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                let word = &src.text[start..pos];
                push!(keyword_or_id(word), start);
            }
            b'"' => {
                let start = pos;
                pos += 1;
                let mut value = String::new();
                let mut terminated = false;
                while pos < bytes.len() {
                    match bytes[pos] {
                        b'"' => {
                            terminated = true;
                            pos += 1;
                            break;
                        }
                        b'\n' => break,
                        b => {
                            value.push(b as char);
                            pos += 1;
                        }
                    }
                }
                if terminated {
                    push!(Tok::Str(value), start);
                } else {
                    diagnostics.push(Diagnostic::new(
                        src.loc_at(start),
                        "unterminated string literal",
                    ));
                }
            }
            _ => {
                let start = pos;
                let two = if pos + 1 < bytes.len() { &bytes[pos..pos + 2] } else { &bytes[pos..] };
                let tok = match two {
                    b":=" => Some((Tok::Assign, 2)),
                    b"=>" => Some((Tok::Arrow, 2)),
                    b".." => Some((Tok::DotDot, 2)),
                    b"/=" => Some((Tok::Ne, 2)),
                    b"<=" => Some((Tok::Le, 2)),
                    b">=" => Some((Tok::Ge, 2)),
                    _ => None,
                };
                let tok = tok.or(match c {
                    b'(' => Some((Tok::LParen, 1)),
                    b')' => Some((Tok::RParen, 1)),
                    b';' => Some((Tok::Semi, 1)),
                    b':' => Some((Tok::Colon, 1)),
                    b',' => Some((Tok::Comma, 1)),
                    b'\'' => Some((Tok::Tick, 1)),
                    b'=' => Some((Tok::Eq, 1)),
                    b'<' => Some((Tok::Lt, 1)),
                    b'>' => Some((Tok::Gt, 1)),
                    b'+' => Some((Tok::Plus, 1)),
                    b'-' => Some((Tok::Minus, 1)),
                    b'*' => Some((Tok::Star, 1)),
                    b'/' => Some((Tok::Slash, 1)),
                    _ => None,
                });
                match tok {
                    Some((t, n)) => {
                        push!(t, start);
                        pos += n;
                    }
                    None => {
                        diagnostics.push(Diagnostic::new(
                            src.loc_at(start),
                            format!("unexpected character `{}`", c as char),
                        ));
                        pos += 1;
                    }
                }
            }
        }
    }
    tokens.push(Token { tok: Tok::Eof, loc: src.loc_at(src.text.len()) });
    LexOutput { tokens, diagnostics }
}

fn keyword_or_id(word: &str) -> Tok {
    match word.to_ascii_lowercase().as_str() {
        "package" => Tok::Package,
        "is" => Tok::Is,
        "end" => Tok::End,
        "subtype" => Tok::Subtype,
        "range" => Tok::Range,
        "dim" => Tok::Dim,
        "type" => Tok::Type,
        "array" => Tok::Array,
        "of" => Tok::Of,
        "function" => Tok::Function,
        "procedure" => Tok::Procedure,
        "return" => Tok::Return,
        "with" => Tok::With,
        "in" => Tok::In,
        "out" => Tok::Out,
        "begin" => Tok::Begin,
        "if" => Tok::If,
        "then" => Tok::Then,
        "else" => Tok::Else,
        "while" => Tok::While,
        "loop" => Tok::Loop,
        "pragma" => Tok::Pragma,
        "and" => Tok::And,
        "or" => Tok::Or,
        "not" => Tok::Not,
        "rem" => Tok::Rem,
        "others" => Tok::Others,
        "true" => Tok::True,
        "false" => Tok::False,
        _ => Tok::Id(word.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(text: &str) -> Vec<Tok> {
        let unit = SourceUnit::new("t.svl", text);
        let out = lex(&unit);
        assert!(out.diagnostics.is_empty(), "{:?}", out.diagnostics);
        out.tokens.into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn ranges_do_not_eat_reals() {
        assert_eq!(
            toks("0..91"),
            vec![Tok::Int(0.into()), Tok::DotDot, Tok::Int(91.into()), Tok::Eof]
        );
        assert_eq!(
            toks("1.0e-7"),
            vec![Tok::Real(F32::from_f32(1.0e-7)), Tok::Eof]
        );
        assert_eq!(
            toks("-2.023e-38"),
            vec![Tok::Minus, Tok::Real(F32::from_f32(2.023e-38)), Tok::Eof]
        );
    }

    #[test]
    fn comments_and_case_insensitive_keywords() {
        assert_eq!(
            toks("Package P IS -- comment\nEnd p;"),
            vec![
                Tok::Package,
                Tok::Id("P".into()),
                Tok::Is,
                Tok::End,
                Tok::Id("p".into()),
                Tok::Semi,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn unterminated_string_is_reported() {
        let unit = SourceUnit::new("t.svl", "\"abc");
        let out = lex(&unit);
        assert_eq!(out.diagnostics.len(), 1);
        assert!(out.diagnostics[0].message.contains("unterminated"));
    }

    #[test]
    fn malformed_exponent_is_reported() {
        let unit = SourceUnit::new("t.svl", "1.5e+ x");
        let out = lex(&unit);
        assert_eq!(out.diagnostics.len(), 1);
        assert!(out.diagnostics[0].message.contains("malformed literal"));
    }
}
