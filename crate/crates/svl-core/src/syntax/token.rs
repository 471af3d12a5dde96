use num_bigint::BigInt;

use crate::fp::F32;
use crate::loc::Loc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Id(String),
    Int(BigInt),
    Real(F32),
    Str(String),
    // keywords
    Package,
    Is,
    End,
    Subtype,
    Range,
    Dim,
    Type,
    Array,
    Of,
    Function,
    Procedure,
    Return,
    With,
    In,
    Out,
    Begin,
    If,
    Then,
    Else,
    While,
    Loop,
    Pragma,
    And,
    Or,
    Not,
    Rem,
    Others,
    True,
    False,
    // punctuation
    LParen,
    RParen,
    Semi,
    Colon,
    Comma,
    Assign, // :=
    Arrow,  // =>
    DotDot, // ..
    Tick,   // '
    Eq,
    Ne, // /=
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    Star,
    Slash,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Id(s) => format!("identifier `{s}`"),
            Tok::Int(v) => format!("integer literal {v}"),
            Tok::Real(v) => format!("real literal {v}"),
            Tok::Str(_) => "string literal".to_string(),
            Tok::Eof => "end of file".to_string(),
            Tok::Package => "`package`".into(),
            Tok::Is => "`is`".into(),
            Tok::End => "`end`".into(),
            Tok::Subtype => "`subtype`".into(),
            Tok::Range => "`range`".into(),
            Tok::Dim => "`dim`".into(),
            Tok::Type => "`type`".into(),
            Tok::Array => "`array`".into(),
            Tok::Of => "`of`".into(),
            Tok::Function => "`function`".into(),
            Tok::Procedure => "`procedure`".into(),
            Tok::Return => "`return`".into(),
            Tok::With => "`with`".into(),
            Tok::In => "`in`".into(),
            Tok::Out => "`out`".into(),
            Tok::Begin => "`begin`".into(),
            Tok::If => "`if`".into(),
            Tok::Then => "`then`".into(),
            Tok::Else => "`else`".into(),
            Tok::While => "`while`".into(),
            Tok::Loop => "`loop`".into(),
            Tok::Pragma => "`pragma`".into(),
            Tok::And => "`and`".into(),
            Tok::Or => "`or`".into(),
            Tok::Not => "`not`".into(),
            Tok::Rem => "`rem`".into(),
            Tok::Others => "`others`".into(),
            Tok::True => "`true`".into(),
            Tok::False => "`false`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Assign => "`:=`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::DotDot => "`..`".into(),
            Tok::Tick => "`'`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Ne => "`/=`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Ge => "`>=`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub loc: Loc,
}
