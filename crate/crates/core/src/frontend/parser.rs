use std::fmt;

use thiserror::Error;

use super::ast::*;
use super::token::{is_type_keyword, Atom, Token, TokenKind};

/// Syntax error with the set of tokens that would have been accepted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: expected {}, found {found}", ExpectedList(.expected))]
pub struct ParseError {
    pub expected: Vec<String>,
    /// Lexeme found, or `end of input`.
    pub found: String,
    pub line: usize,
    pub column: usize,
}

struct ExpectedList<'a>(&'a [String]);

impl fmt::Display for ExpectedList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            [] => f.write_str("nothing"),
            [one] => f.write_str(one),
            many => write!(f, "one of {}", many.join(" ")),
        }
    }
}

pub const END_OF_INPUT: &str = "end of input";

type PResult<T> = Result<T, ParseError>;

/// Binary operator precedence table, loosest first.
const BINARY_LEVELS: &[&[&str]] = &[
    &["||"],
    &["&&"],
    &["|"],
    &["^"],
    &["&"],
    &["==", "!="],
    &["<", ">", "<=", ">="],
    &["<<", ">>"],
    &["+", "-"],
    &["*", "/", "%"],
];

const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="];
const PREFIX_OPS: &[&str] = &["!", "-", "+", "~", "++", "--", "&", "*"];

/// Parses a whole token list into a [`SyntaxTree`].
pub fn parse(tokens: &[Token]) -> Result<SyntaxTree, ParseError> {
    let mut p = Parser { tokens, pos: 0 };
    let mut items = Vec::new();
    while !p.at_end() {
        items.push(p.item()?);
    }
    Ok(SyntaxTree { root: Program { items } })
}

struct Parser<'t> {
    tokens: &'t [Token],
    pos: usize,
}

impl<'t> Parser<'t> {
    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.pos)
    }

    fn peek_at(&self, offset: usize) -> Option<&'t Token> {
        self.tokens.get(self.pos + offset)
    }

    fn check(&self, kind: TokenKind, text: &str) -> bool {
        self.peek().is_some_and(|t| t.is(kind, text))
    }

    fn check_punct(&self, text: &str) -> bool {
        self.check(TokenKind::Punctuation, text)
    }

    fn check_op(&self, text: &str) -> bool {
        self.check(TokenKind::Operator, text)
    }

    fn check_kw(&self, text: &str) -> bool {
        self.check(TokenKind::Keyword, text)
    }

    fn advance(&mut self) -> &'t Token {
        let tok = &self.tokens[self.pos];
        self.pos += 1;
        tok
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        let expected = expected.iter().map(|s| s.to_string()).collect();
        match self.peek() {
            Some(tok) => ParseError {
                expected,
                found: tok.text.clone(),
                line: tok.line,
                column: tok.column,
            },
            None => {
                let (line, column) = self
                    .tokens
                    .last()
                    .map(|t| (t.line, t.column + t.text.chars().count()))
                    .unwrap_or((1, 1));
                ParseError { expected, found: END_OF_INPUT.to_string(), line, column }
            }
        }
    }

    fn expect(&mut self, kind: TokenKind, text: &str) -> PResult<&'t Token> {
        if self.check(kind, text) {
            Ok(self.advance())
        } else {
            Err(self.error(&[text]))
        }
    }

    fn expect_punct(&mut self, text: &str) -> PResult<()> {
        self.expect(TokenKind::Punctuation, text).map(|_| ())
    }

    fn expect_ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Identifier => Ok(self.advance().text.clone()),
            _ => Err(self.error(&["identifier"])),
        }
    }

    // ---- declarations ----

    fn item(&mut self) -> PResult<Item> {
        let tok = self.peek().expect("item called at end of input");
        if tok.kind == TokenKind::PreprocessorInclude {
            self.advance();
            return Ok(Item::Include(tok.text.clone()));
        }
        if self.check_kw("using") {
            self.advance();
            self.expect(TokenKind::Keyword, "namespace")?;
            let name = self.expect_ident()?;
            self.expect_punct(";")?;
            return Ok(Item::UsingNamespace(name));
        }
        if !self.starts_declaration() {
            return Err(self.error(&["#include", "using", "type"]));
        }
        let ty = self.type_spec()?;
        if self.peek().is_some_and(|t| t.kind == TokenKind::Identifier)
            && self.peek_at(1).is_some_and(|t| t.is(TokenKind::Punctuation, "("))
        {
            let name = self.advance().text.clone();
            return self.function_rest(ty, name).map(Item::Function);
        }
        let decl = self.var_decl_rest(ty)?;
        self.expect_punct(";")?;
        Ok(Item::Global(decl))
    }

    /// A type keyword, or `Ident Ident` such as `string name`.
    fn starts_declaration(&self) -> bool {
        match self.peek() {
            Some(t) if t.kind == TokenKind::Keyword => is_type_keyword(&t.text),
            Some(t) if t.kind == TokenKind::Identifier => {
                self.peek_at(1).is_some_and(|n| n.kind == TokenKind::Identifier)
            }
            _ => false,
        }
    }

    fn type_spec(&mut self) -> PResult<TypeSpec> {
        let mut words = Vec::new();
        while let Some(t) = self.peek() {
            if t.kind == TokenKind::Keyword && is_type_keyword(&t.text) {
                words.push(self.advance().atom());
            } else {
                break;
            }
        }
        if words.is_empty() {
            match self.peek() {
                Some(t) if t.kind == TokenKind::Identifier => words.push(self.advance().atom()),
                _ => return Err(self.error(&["type"])),
            }
        }
        Ok(TypeSpec { words })
    }

    fn function_rest(&mut self, return_type: TypeSpec, name: String) -> PResult<FunctionDef> {
        self.expect_punct("(")?;
        let params = if self.check_punct(")") {
            ParamList::Empty
        } else if self.check_kw("void") && self.peek_at(1).is_some_and(|t| t.is(TokenKind::Punctuation, ")")) {
            self.advance();
            ParamList::Void
        } else {
            let mut params = vec![self.param()?];
            while self.check_punct(",") {
                self.advance();
                params.push(self.param()?);
            }
            ParamList::Params(params)
        };
        self.expect_punct(")")?;
        let body = if self.check_punct(";") {
            self.advance();
            None
        } else if self.check_punct("{") {
            Some(self.block()?)
        } else {
            return Err(self.error(&[";", "{"]));
        };
        Ok(FunctionDef { return_type, name, params, body })
    }

    fn param(&mut self) -> PResult<Param> {
        let ty = self.type_spec()?;
        let by_ref = if self.check_op("&") {
            self.advance();
            true
        } else {
            false
        };
        let name = match self.peek() {
            Some(t) if t.kind == TokenKind::Identifier => Some(self.advance().text.clone()),
            _ => None,
        };
        let dims = self.dims()?;
        Ok(Param { ty, by_ref, name, dims })
    }

    fn dims(&mut self) -> PResult<Vec<Option<Expr>>> {
        let mut dims = Vec::new();
        while self.check_punct("[") {
            self.advance();
            if self.check_punct("]") {
                dims.push(None);
            } else {
                dims.push(Some(self.expression()?));
            }
            self.expect_punct("]")?;
        }
        Ok(dims)
    }

    fn var_decl_rest(&mut self, ty: TypeSpec) -> PResult<VarDecl> {
        let mut declarators = vec![self.declarator()?];
        while self.check_punct(",") {
            self.advance();
            declarators.push(self.declarator()?);
        }
        Ok(VarDecl { ty, declarators })
    }

    fn declarator(&mut self) -> PResult<Declarator> {
        let name = self.expect_ident()?;
        let dims = self.dims()?;
        let init = if self.check_op("=") {
            self.advance();
            if self.check_punct("{") {
                self.advance();
                let mut values = Vec::new();
                if !self.check_punct("}") {
                    values.push(self.assignment()?);
                    while self.check_punct(",") {
                        self.advance();
                        values.push(self.assignment()?);
                    }
                }
                self.expect_punct("}")?;
                Some(Initializer::List(values))
            } else {
                Some(Initializer::Expr(self.assignment()?))
            }
        } else {
            None
        };
        Ok(Declarator { name, dims, init })
    }

    // ---- statements ----

    fn block(&mut self) -> PResult<Block> {
        self.expect_punct("{")?;
        let mut stmts = Vec::new();
        while !self.check_punct("}") {
            if self.at_end() {
                return Err(self.error(&["}"]));
            }
            stmts.push(self.statement()?);
        }
        self.advance();
        Ok(Block { stmts })
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let Some(tok) = self.peek() else {
            return Err(self.error(&["statement"]));
        };
        if tok.kind == TokenKind::Keyword {
            match tok.text.as_str() {
                "if" => return self.if_stmt(),
                "switch" => return self.switch_stmt(),
                "for" => return self.for_stmt(),
                "while" => return self.while_stmt(),
                "do" => return self.do_while_stmt(),
                "return" => {
                    self.advance();
                    let value = if self.check_punct(";") { None } else { Some(self.expression()?) };
                    self.expect_punct(";")?;
                    return Ok(Stmt::Return(value));
                }
                "break" | "continue" => {
                    self.advance();
                    self.expect_punct(";")?;
                    return Ok(if tok.text == "break" { Stmt::Break } else { Stmt::Continue });
                }
                "case" => {
                    self.advance();
                    let value = self.conditional()?;
                    self.expect_punct(":")?;
                    return Ok(Stmt::Case(value));
                }
                "default" => {
                    self.advance();
                    self.expect_punct(":")?;
                    return Ok(Stmt::Default);
                }
                _ => {}
            }
        }
        if tok.is(TokenKind::Punctuation, "{") {
            return self.block().map(Stmt::Block);
        }
        if tok.is(TokenKind::Punctuation, ";") {
            self.advance();
            return Ok(Stmt::Empty);
        }
        if self.starts_declaration() {
            let ty = self.type_spec()?;
            let decl = self.var_decl_rest(ty)?;
            self.expect_punct(";")?;
            return Ok(Stmt::Decl(decl));
        }
        let expr = self.expression()?;
        self.expect_punct(";")?;
        Ok(Stmt::Expr(expr))
    }

    fn paren_condition(&mut self) -> PResult<Expr> {
        self.expect_punct("(")?;
        let cond = self.expression()?;
        self.expect_punct(")")?;
        Ok(cond)
    }

    fn if_stmt(&mut self) -> PResult<Stmt> {
        self.advance();
        let cond = self.paren_condition()?;
        let then_branch = Box::new(self.statement()?);
        let else_branch = if self.check_kw("else") {
            self.advance();
            Some(Box::new(self.statement()?))
        } else {
            None
        };
        Ok(Stmt::If { cond, then_branch, else_branch })
    }

    fn switch_stmt(&mut self) -> PResult<Stmt> {
        self.advance();
        let scrutinee = self.paren_condition()?;
        let body = self.block()?;
        Ok(Stmt::Switch { scrutinee, body })
    }

    fn for_stmt(&mut self) -> PResult<Stmt> {
        self.advance();
        self.expect_punct("(")?;
        let init = if self.check_punct(";") {
            ForInit::Empty
        } else if self.starts_declaration() {
            let ty = self.type_spec()?;
            ForInit::Decl(self.var_decl_rest(ty)?)
        } else {
            ForInit::Expr(self.expression()?)
        };
        self.expect_punct(";")?;
        let cond = if self.check_punct(";") { None } else { Some(self.expression()?) };
        self.expect_punct(";")?;
        let step = if self.check_punct(")") { None } else { Some(self.expression()?) };
        self.expect_punct(")")?;
        let body = Box::new(self.statement()?);
        Ok(Stmt::For { init, cond, step, body })
    }

    fn while_stmt(&mut self) -> PResult<Stmt> {
        self.advance();
        let cond = self.paren_condition()?;
        let body = Box::new(self.statement()?);
        Ok(Stmt::While { cond, body })
    }

    fn do_while_stmt(&mut self) -> PResult<Stmt> {
        self.advance();
        let body = Box::new(self.statement()?);
        self.expect(TokenKind::Keyword, "while")?;
        let cond = self.paren_condition()?;
        self.expect_punct(";")?;
        Ok(Stmt::DoWhile { body, cond })
    }

    // ---- expressions ----

    fn expression(&mut self) -> PResult<Expr> {
        let first = self.assignment()?;
        if !self.check_punct(",") {
            return Ok(first);
        }
        let mut parts = vec![first];
        while self.check_punct(",") {
            self.advance();
            parts.push(self.assignment()?);
        }
        Ok(Expr::Comma(parts))
    }

    fn assignment(&mut self) -> PResult<Expr> {
        let target = self.conditional()?;
        if let Some(op) = self.peek().filter(|t| {
            t.kind == TokenKind::Operator && ASSIGN_OPS.contains(&t.text.as_str())
        }) {
            self.advance();
            let value = self.assignment()?;
            return Ok(Expr::assign(&op.text, target, value));
        }
        Ok(target)
    }

    fn conditional(&mut self) -> PResult<Expr> {
        let cond = self.binary(0)?;
        if !self.check_op("?") {
            return Ok(cond);
        }
        self.advance();
        let then_value = self.expression()?;
        self.expect_punct(":")?;
        let else_value = self.conditional()?;
        Ok(Expr::Conditional {
            cond: Box::new(cond),
            then_value: Box::new(then_value),
            else_value: Box::new(else_value),
        })
    }

    fn binary(&mut self, level: usize) -> PResult<Expr> {
        if level == BINARY_LEVELS.len() {
            return self.unary();
        }
        let mut lhs = self.binary(level + 1)?;
        while let Some(op) = self.peek().filter(|t| {
            t.kind == TokenKind::Operator && BINARY_LEVELS[level].contains(&t.text.as_str())
        }) {
            self.advance();
            let rhs = self.binary(level + 1)?;
            lhs = Expr::binary(&op.text, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if let Some(op) = self
            .peek()
            .filter(|t| t.kind == TokenKind::Operator && PREFIX_OPS.contains(&t.text.as_str()))
        {
            self.advance();
            let operand = self.unary()?;
            return Ok(Expr::Unary { op: op.text.clone(), operand: Box::new(operand) });
        }
        self.postfix()
    }

    fn postfix(&mut self) -> PResult<Expr> {
        let mut expr = self.primary()?;
        loop {
            if self.check_op("++") || self.check_op("--") {
                let op = self.advance().text.clone();
                expr = Expr::Postfix { op, operand: Box::new(expr) };
            } else if self.check_punct("[") {
                self.advance();
                let index = self.expression()?;
                self.expect_punct("]")?;
                expr = Expr::Index { base: Box::new(expr), index: Box::new(index) };
            } else if self.check_punct("(") {
                self.advance();
                let mut args = Vec::new();
                if !self.check_punct(")") {
                    args.push(self.assignment()?);
                    while self.check_punct(",") {
                        self.advance();
                        args.push(self.assignment()?);
                    }
                }
                self.expect_punct(")")?;
                expr = Expr::Call { callee: Box::new(expr), args };
            } else if self.check_op(".") || self.check_op("->") {
                let op = self.advance().text.clone();
                let name = self.expect_ident()?;
                expr = Expr::Member { base: Box::new(expr), op, name };
            } else {
                return Ok(expr);
            }
        }
    }

    fn primary(&mut self) -> PResult<Expr> {
        const EXPECTED: &[&str] = &["identifier", "literal", "("];
        let Some(tok) = self.peek() else {
            return Err(self.error(EXPECTED));
        };
        match tok.kind {
            TokenKind::Identifier => {
                self.advance();
                if !self.check_op("::") {
                    return Ok(Expr::Var(tok.text.clone()));
                }
                let mut path = vec![tok.text.clone()];
                while self.check_op("::") {
                    self.advance();
                    path.push(self.expect_ident()?);
                }
                Ok(Expr::Scoped(path))
            }
            TokenKind::IntLiteral
            | TokenKind::FloatLiteral
            | TokenKind::StringLiteral
            | TokenKind::CharLiteral => {
                self.advance();
                Ok(Expr::Literal(tok.atom()))
            }
            TokenKind::Keyword if tok.text == "true" || tok.text == "false" => {
                self.advance();
                Ok(Expr::Literal(Atom::new(TokenKind::Keyword, tok.text.clone())))
            }
            TokenKind::Punctuation if tok.text == "(" => {
                self.advance();
                let inner = self.expression()?;
                self.expect_punct(")")?;
                Ok(Expr::Paren(Box::new(inner)))
            }
            _ => Err(self.error(EXPECTED)),
        }
    }
}
