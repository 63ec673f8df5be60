use std::fmt;

use serde::{Deserialize, Serialize};

/// Reserved words of the accepted C++ subset.
///
/// `cout`, `cin`, `endl` and `std` are deliberately absent: they are library
/// names and lex as identifiers.
pub const KEYWORDS: &[&str] = &[
    "bool", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
    "false", "float", "for", "if", "int", "long", "namespace", "return", "short", "signed",
    "switch", "true", "unsigned", "using", "void", "while",
];

/// Keywords that may appear in a type specifier.
pub const TYPE_KEYWORDS: &[&str] = &[
    "bool", "char", "const", "double", "float", "int", "long", "short", "signed", "unsigned",
    "void",
];

pub fn is_keyword(text: &str) -> bool {
    KEYWORDS.binary_search(&text).is_ok()
}

pub fn is_type_keyword(text: &str) -> bool {
    TYPE_KEYWORDS.binary_search(&text).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    FloatLiteral,
    StringLiteral,
    CharLiteral,
    Operator,
    Punctuation,
    PreprocessorInclude,
}

impl TokenKind {
    pub fn name(self) -> &'static str {
        match self {
            TokenKind::Keyword => "Keyword",
            TokenKind::Identifier => "Identifier",
            TokenKind::IntLiteral => "IntLiteral",
            TokenKind::FloatLiteral => "FloatLiteral",
            TokenKind::StringLiteral => "StringLiteral",
            TokenKind::CharLiteral => "CharLiteral",
            TokenKind::Operator => "Operator",
            TokenKind::Punctuation => "Punctuation",
            TokenKind::PreprocessorInclude => "PreprocessorInclude",
        }
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A lexeme with its source position. Positions are for diagnostics only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn new(kind: TokenKind, text: impl Into<String>, line: usize, column: usize) -> Self {
        Token { kind, text: text.into(), line, column }
    }

    pub fn atom(&self) -> Atom {
        Atom { kind: self.kind, text: self.text.clone() }
    }

    pub fn is(&self, kind: TokenKind, text: &str) -> bool {
        self.kind == kind && self.text == text
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.text)
    }
}

/// A comparison atom: a token with its position dropped.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Atom {
    pub kind: TokenKind,
    pub text: String,
}

impl Atom {
    pub fn new(kind: TokenKind, text: impl Into<String>) -> Self {
        Atom { kind, text: text.into() }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.text)
    }
}

/// The canonical atom sequence every similarity measure consumes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TokenStream {
    atoms: Vec<Atom>,
}

impl TokenStream {
    pub fn new(atoms: Vec<Atom>) -> Self {
        TokenStream { atoms }
    }

    /// Projection of raw tokens onto atoms.
    pub fn from_tokens(tokens: &[Token]) -> Self {
        TokenStream { atoms: tokens.iter().map(Token::atom).collect() }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// One atom per line, `Kind<TAB>text`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for atom in &self.atoms {
            out.push_str(atom.kind.name());
            out.push('\t');
            out.push_str(&atom.text);
            out.push('\n');
        }
        out
    }

    /// Renders the stream back to compilable-looking source text, one space
    /// between atoms. Re-lexing the result yields the same stream.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for atom in &self.atoms {
            match atom.kind {
                TokenKind::PreprocessorInclude => {
                    out.push_str("#include<");
                    out.push_str(&atom.text);
                    out.push_str(">\n");
                }
                _ => {
                    out.push_str(&atom.text);
                    out.push(if atom.text == ";" || atom.text == "{" || atom.text == "}" {
                        '\n'
                    } else {
                        ' '
                    });
                }
            }
        }
        out
    }
}

impl FromIterator<Atom> for TokenStream {
    fn from_iter<I: IntoIterator<Item = Atom>>(iter: I) -> Self {
        TokenStream { atoms: iter.into_iter().collect() }
    }
}
