use crate::error::HoaError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    /// `name:` at the start of a header item or `State:` in the body.
    Header(String),
    Ident(String),
    Int(usize),
    Str(String),
    Alias(String),
    Body,
    End,
    Punct(char),
    Eof,
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn err(line: usize, column: usize, message: impl Into<String>) -> HoaError {
    HoaError {
        line,
        column,
        message: message.into(),
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, HoaError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
        if chars[*i] == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
        *i += 1;
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let mut depth = 0usize;
            loop {
                if i >= chars.len() {
                    return Err(err(tl, tc, "unterminated comment"));
                }
                if chars[i] == '/' && chars.get(i + 1) == Some(&'*') {
                    depth += 1;
                    advance(&mut i, &mut line, &mut col);
                    advance(&mut i, &mut line, &mut col);
                } else if chars[i] == '*' && chars.get(i + 1) == Some(&'/') {
                    depth -= 1;
                    advance(&mut i, &mut line, &mut col);
                    advance(&mut i, &mut line, &mut col);
                    if depth == 0 {
                        break;
                    }
                } else {
                    advance(&mut i, &mut line, &mut col);
                }
            }
            continue;
        }
        let tok = if c == '"' {
            advance(&mut i, &mut line, &mut col);
            let mut s = String::new();
            loop {
                match chars.get(i) {
                    None => return Err(err(tl, tc, "unterminated string")),
                    Some('"') => {
                        advance(&mut i, &mut line, &mut col);
                        break;
                    }
                    Some('\\') => {
                        advance(&mut i, &mut line, &mut col);
                        match chars.get(i) {
                            Some(&e) => s.push(e),
                            None => return Err(err(tl, tc, "unterminated string")),
                        }
                        advance(&mut i, &mut line, &mut col);
                    }
                    Some(&ch) => {
                        s.push(ch);
                        advance(&mut i, &mut line, &mut col);
                    }
                }
            }
            Tok::Str(s)
        } else if c.is_ascii_digit() {
            let mut n: usize = 0;
            while let Some(d) = chars.get(i).and_then(|c| c.to_digit(10)) {
                n = n
                    .checked_mul(10)
                    .and_then(|n| n.checked_add(d as usize))
                    .ok_or_else(|| err(tl, tc, "integer too large"))?;
                advance(&mut i, &mut line, &mut col);
            }
            Tok::Int(n)
        } else if c == '-' && text_at(&chars, i, "--BODY--") {
            for _ in 0..8 {
                advance(&mut i, &mut line, &mut col);
            }
            Tok::Body
        } else if c == '-' && text_at(&chars, i, "--END--") {
            for _ in 0..7 {
                advance(&mut i, &mut line, &mut col);
            }
            Tok::End
        } else if c.is_ascii_alphabetic() || c == '_' || c == '@' {
            let alias = c == '@';
            if alias {
                advance(&mut i, &mut line, &mut col);
            }
            let mut s = String::new();
            while let Some(&ch) = chars.get(i) {
                if ch.is_ascii_alphanumeric() || ch == '_' || ch == '-' {
                    s.push(ch);
                    advance(&mut i, &mut line, &mut col);
                } else {
                    break;
                }
            }
            if alias {
                Tok::Alias(s)
            } else if chars.get(i) == Some(&':') {
                advance(&mut i, &mut line, &mut col);
                Tok::Header(s)
            } else {
                Tok::Ident(s)
            }
        } else if "[]{}()!&|".contains(c) {
            advance(&mut i, &mut line, &mut col);
            Tok::Punct(c)
        } else {
            return Err(err(tl, tc, format!("unexpected character {c:?}")));
        };
        out.push(Token {
            tok,
            line: tl,
            column: tc,
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

fn text_at(chars: &[char], i: usize, s: &str) -> bool {
    s.chars().enumerate().all(|(k, c)| chars.get(i + k) == Some(&c))
}
