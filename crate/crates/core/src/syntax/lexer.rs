use super::diag::{Diagnostic, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Lowercase identifier: predicate or constant.
    Ident(String),
    /// Uppercase- or underscore-initial identifier.
    Var(String),
    /// Digits with an optional fractional part, kept verbatim.
    Number(String),
    Not,
    ColonColon,
    If,
    LParen,
    RParen,
    Comma,
    Dot,
    Slash,
    Eq,
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Var(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Not => "`not`".into(),
            Tok::ColonColon => "`::`".into(),
            Tok::If => "`:-`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;

    macro_rules! bump {
        () => {{
            if chars[i] == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            i += 1;
        }};
    }

    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump!();
            continue;
        }
        if c == '%' {
            while i < chars.len() && chars[i] != '\n' {
                bump!();
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                bump!();
            }
            let word: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: if word == "not" {
                    Tok::Not
                } else if c.is_ascii_uppercase() || c == '_' {
                    Tok::Var(word)
                } else {
                    Tok::Ident(word)
                },
                pos,
            });
            continue;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                bump!();
            }
            // A dot only continues the number when a digit follows; otherwise
            // it terminates the clause (`vertex(1).`, `p :- q(2).`).
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                bump!();
                while i < chars.len() && chars[i].is_ascii_digit() {
                    bump!();
                }
            }
            out.push(Token { tok: Tok::Number(chars[start..i].iter().collect()), pos });
            continue;
        } else {
            match c {
                ':' if chars.get(i + 1) == Some(&':') => {
                    bump!();
                    Tok::ColonColon
                }
                ':' if chars.get(i + 1) == Some(&'-') => {
                    bump!();
                    Tok::If
                }
                '\\' if chars.get(i + 1) == Some(&'+') => {
                    bump!();
                    Tok::Not
                }
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                '.' => Tok::Dot,
                '/' => Tok::Slash,
                '=' => Tok::Eq,
                other => return Err(Diagnostic::error(pos, format!("unexpected character `{other}`"))),
            }
        };
        bump!();
        out.push(Token { tok, pos });
    }
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col } });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(text: &str) -> Vec<Tok> {
        tokenize(text).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers_versus_clause_dots() {
        assert_eq!(
            toks("0.5::r. vertex(1)."),
            vec![
                Tok::Number("0.5".into()),
                Tok::ColonColon,
                Tok::Ident("r".into()),
                Tok::Dot,
                Tok::Ident("vertex".into()),
                Tok::LParen,
                Tok::Number("1".into()),
                Tok::RParen,
                Tok::Dot,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn negation_forms_and_comments() {
        assert_eq!(
            toks("p :- \\+ q, not r. % trailing\n"),
            vec![
                Tok::Ident("p".into()),
                Tok::If,
                Tok::Not,
                Tok::Ident("q".into()),
                Tok::Comma,
                Tok::Not,
                Tok::Ident("r".into()),
                Tok::Dot,
                Tok::Eof
            ]
        );
    }

    #[test]
    fn positions_are_one_based() {
        let t = tokenize("a.\n  b.").unwrap();
        assert_eq!(t[2].pos, Pos { line: 2, col: 3 });
        let err = tokenize("a.\n  $").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 3 });
    }
}
