use thiserror::Error;

use super::token::{is_keyword, Token, TokenKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("unterminated literal starting at {line}:{column}")]
    UnterminatedString { line: usize, column: usize },
    #[error("unterminated block comment starting at {line}:{column}")]
    UnterminatedBlockComment { line: usize, column: usize },
    #[error("illegal character {ch:?} at {line}:{column}")]
    IllegalCharacter { ch: char, line: usize, column: usize },
}

impl LexError {
    pub fn position(&self) -> (usize, usize) {
        match *self {
            LexError::UnterminatedString { line, column }
            | LexError::UnterminatedBlockComment { line, column }
            | LexError::IllegalCharacter { line, column, .. } => (line, column),
        }
    }
}

const OPERATORS: &[&str] = &[
    "<<=", ">>=", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "++", "--", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "::", "->", "+", "-", "*", "/", "%", "=", "<", ">", "!", "&",
    "|", "^", "~", "?", ".",
];

const PUNCTUATION: &[char] = &[';', ',', '(', ')', '{', '}', '[', ']', ':'];

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line: 1, column: 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.peek_at(i) == Some(c))
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        match c {
            '\n' => {
                self.line += 1;
                self.column = 1;
            }
            // a lone CR is a line break; CRLF counts once, on the LF
            '\r' if self.peek() != Some('\n') => {
                self.line += 1;
                self.column = 1;
            }
            '\r' => {}
            _ => self.column += 1,
        }
        Some(c)
    }

    fn bump_n(&mut self, n: usize) {
        for _ in 0..n {
            self.bump();
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            out.push(c);
            self.bump();
        }
        out
    }

    fn skip_inline_space(&mut self) {
        while matches!(self.peek(), Some(' ') | Some('\t')) {
            self.bump();
        }
    }
}

/// Splits source text into tokens. Comments and whitespace produce nothing.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut cur = Cursor::new(source);
    let mut tokens = Vec::new();

    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);

        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if cur.starts_with("//") {
            while let Some(c) = cur.peek() {
                if c == '\n' || c == '\r' {
                    break;
                }
                cur.bump();
            }
            continue;
        }
        if cur.starts_with("/*") {
            cur.bump_n(2);
            loop {
                if cur.starts_with("*/") {
                    cur.bump_n(2);
                    break;
                }
                if cur.bump().is_none() {
                    return Err(LexError::UnterminatedBlockComment { line, column });
                }
            }
            continue;
        }
        if c == '#' {
            tokens.push(lex_include(&mut cur, line, column)?);
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let word = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            let kind = if is_keyword(&word) { TokenKind::Keyword } else { TokenKind::Identifier };
            tokens.push(Token::new(kind, word, line, column));
            continue;
        }
        if c.is_ascii_digit() || (c == '.' && cur.peek_at(1).is_some_and(|d| d.is_ascii_digit())) {
            tokens.push(lex_number(&mut cur, line, column));
            continue;
        }
        if c == '"' || c == '\'' {
            tokens.push(lex_quoted(&mut cur, c, line, column)?);
            continue;
        }
        if let Some(op) = OPERATORS.iter().find(|op| cur.starts_with(op)) {
            cur.bump_n(op.chars().count());
            tokens.push(Token::new(TokenKind::Operator, *op, line, column));
            continue;
        }
        if PUNCTUATION.contains(&c) {
            cur.bump();
            tokens.push(Token::new(TokenKind::Punctuation, c.to_string(), line, column));
            continue;
        }
        return Err(LexError::IllegalCharacter { ch: c, line, column });
    }
    Ok(tokens)
}

fn lex_include(cur: &mut Cursor, line: usize, column: usize) -> Result<Token, LexError> {
    let illegal = LexError::IllegalCharacter { ch: '#', line, column };
    cur.bump();
    cur.skip_inline_space();
    if !cur.starts_with("include") {
        return Err(illegal);
    }
    cur.bump_n("include".len());
    cur.skip_inline_space();
    let close = match cur.peek() {
        Some('<') => '>',
        Some('"') => '"',
        _ => return Err(illegal),
    };
    cur.bump();
    let name = cur.take_while(|c| c != close && c != '\n' && c != '\r');
    if cur.peek() != Some(close) {
        return Err(LexError::UnterminatedString { line, column });
    }
    cur.bump();
    Ok(Token::new(TokenKind::PreprocessorInclude, name.trim(), line, column))
}

fn lex_number(cur: &mut Cursor, line: usize, column: usize) -> Token {
    let mut text = String::new();
    let mut is_float = false;

    if cur.starts_with("0x") || cur.starts_with("0X") {
        text.push_str(&cur.take_while(|c| c.is_ascii_alphanumeric()));
        return Token::new(TokenKind::IntLiteral, text, line, column);
    }

    text.push_str(&cur.take_while(|c| c.is_ascii_digit()));
    if cur.peek() == Some('.') {
        is_float = true;
        text.push('.');
        cur.bump();
        text.push_str(&cur.take_while(|c| c.is_ascii_digit()));
    }
    if matches!(cur.peek(), Some('e') | Some('E')) {
        let sign = matches!(cur.peek_at(1), Some('+') | Some('-'));
        let digit_at = if sign { 2 } else { 1 };
        if cur.peek_at(digit_at).is_some_and(|d| d.is_ascii_digit()) {
            is_float = true;
            cur.bump_n(digit_at);
            text.push_str(&cur.chars[cur.pos - digit_at..cur.pos].iter().collect::<String>());
            text.push_str(&cur.take_while(|c| c.is_ascii_digit()));
        }
    }
    let suffix = cur.take_while(|c| matches!(c, 'u' | 'U' | 'l' | 'L' | 'f' | 'F'));
    if suffix.contains(['f', 'F']) {
        is_float = true;
    }
    text.push_str(&suffix);

    let kind = if is_float { TokenKind::FloatLiteral } else { TokenKind::IntLiteral };
    Token::new(kind, text, line, column)
}

fn lex_quoted(
    cur: &mut Cursor,
    quote: char,
    line: usize,
    column: usize,
) -> Result<Token, LexError> {
    let mut text = String::new();
    text.push(quote);
    cur.bump();
    loop {
        match cur.peek() {
            None | Some('\n') | Some('\r') => {
                return Err(LexError::UnterminatedString { line, column });
            }
            Some('\\') => {
                text.push('\\');
                cur.bump();
                match cur.peek() {
                    None | Some('\n') | Some('\r') => {
                        return Err(LexError::UnterminatedString { line, column });
                    }
                    Some(c) => {
                        text.push(c);
                        cur.bump();
                    }
                }
            }
            Some(c) => {
                text.push(c);
                cur.bump();
                if c == quote {
                    break;
                }
            }
        }
    }
    let kind = if quote == '"' { TokenKind::StringLiteral } else { TokenKind::CharLiteral };
    Ok(Token::new(kind, text, line, column))
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds_and_texts(src: &str) -> Vec<(TokenKind, String)> {
        tokenize(src).unwrap().into_iter().map(|t| (t.kind, t.text)).collect()
    }

    #[test]
    fn simple_declaration() {
        let got = kinds_and_texts("int x = 0 ;");
        let want = vec![
            (Keyword, "int".to_string()),
            (Identifier, "x".to_string()),
            (Operator, "=".to_string()),
            (IntLiteral, "0".to_string()),
            (Punctuation, ";".to_string()),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn empty_source() {
        assert!(tokenize("").unwrap().is_empty());
        assert!(tokenize("  \n\t// only a comment\n/* and a block */").unwrap().is_empty());
    }

    #[test]
    fn includes() {
        let got = kinds_and_texts("#include<iostream.h>\n#include \"conio.h\"\n# include <cmath>");
        assert_eq!(
            got,
            vec![
                (PreprocessorInclude, "iostream.h".to_string()),
                (PreprocessorInclude, "conio.h".to_string()),
                (PreprocessorInclude, "cmath".to_string()),
            ]
        );
    }

    #[test]
    fn other_directives_are_rejected() {
        assert_eq!(
            tokenize("#define N 10"),
            Err(LexError::IllegalCharacter { ch: '#', line: 1, column: 1 })
        );
    }

    #[test]
    fn positions_are_one_based() {
        let toks = tokenize("int\n  x;").unwrap();
        assert_eq!((toks[0].line, toks[0].column), (1, 1));
        assert_eq!((toks[1].line, toks[1].column), (2, 3));
        assert_eq!((toks[2].line, toks[2].column), (2, 4));
    }

    #[test]
    fn crlf_and_lone_cr() {
        let toks = tokenize("int\r\nx\ry").unwrap();
        assert_eq!(toks[1].line, 2);
        assert_eq!(toks[2].line, 3);
    }

    #[test]
    fn longest_operator_wins() {
        let got: Vec<_> = kinds_and_texts("a<<=b<<c<=d==e++").into_iter().map(|t| t.1).collect();
        assert_eq!(got, ["a", "<<=", "b", "<<", "c", "<=", "d", "==", "e", "++"]);
    }

    #[test]
    fn literals_keep_their_lexeme() {
        let got = kinds_and_texts(r#"00 0 3.14 1e5 2.5f 10UL 'a' '\n' "say \"hi\"" 0x1F"#);
        assert_eq!(
            got,
            vec![
                (IntLiteral, "00".into()),
                (IntLiteral, "0".into()),
                (FloatLiteral, "3.14".into()),
                (FloatLiteral, "1e5".into()),
                (FloatLiteral, "2.5f".into()),
                (IntLiteral, "10UL".into()),
                (CharLiteral, "'a'".into()),
                (CharLiteral, r"'\n'".into()),
                (StringLiteral, r#""say \"hi\"""#.into()),
                (IntLiteral, "0x1F".into()),
            ]
        );
    }

    #[test]
    fn library_names_lex_as_identifiers() {
        let got = kinds_and_texts("std::cout<<endl;");
        assert_eq!(got[0], (Identifier, "std".into()));
        assert_eq!(got[1], (Operator, "::".into()));
        assert_eq!(got[2], (Identifier, "cout".into()));
        assert_eq!(got[4], (Identifier, "endl".into()));
    }

    #[test]
    fn unterminated_string() {
        assert_eq!(
            tokenize("cout << \"abc\n\";"),
            Err(LexError::UnterminatedString { line: 1, column: 9 })
        );
    }

    #[test]
    fn unterminated_block_comment() {
        assert_eq!(
            tokenize("int x;\n  /* never closed"),
            Err(LexError::UnterminatedBlockComment { line: 2, column: 3 })
        );
    }

    #[test]
    fn illegal_character() {
        assert_eq!(
            tokenize("int x = 1 @ 2;"),
            Err(LexError::IllegalCharacter { ch: '@', line: 1, column: 11 })
        );
    }

    #[test]
    fn comment_markers_inside_strings_are_text() {
        let got = kinds_and_texts(r#"cout << "// not a comment /* nor this */";"#);
        assert_eq!(got[2], (StringLiteral, r#""// not a comment /* nor this */""#.into()));
    }
}
