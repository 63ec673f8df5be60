//! Syntax tree for the accepted C++ teaching subset.
//!
//! Nodes keep every lexeme that varies between programs (names, literals,
//! operators, type words). Fixed punctuation is implied by the node kind, so
//! linearization can rebuild the exact token sequence without storing it.

use super::token::Atom;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxTree {
    pub root: Program,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Program {
    pub items: Vec<Item>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    /// `#include<name>` or `#include "name"`.
    Include(String),
    /// `using namespace <name>;`
    UsingNamespace(String),
    Function(FunctionDef),
    Global(VarDecl),
}

/// A sequence of type words, e.g. `unsigned long` or `const int` or `string`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeSpec {
    pub words: Vec<Atom>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionDef {
    pub return_type: TypeSpec,
    pub name: String,
    pub params: ParamList,
    /// `None` for a prototype terminated by `;`.
    pub body: Option<Block>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamList {
    /// `()`
    Empty,
    /// `(void)`
    Void,
    Params(Vec<Param>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub ty: TypeSpec,
    pub by_ref: bool,
    pub name: Option<String>,
    pub dims: Vec<Option<Expr>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarDecl {
    pub ty: TypeSpec,
    pub declarators: Vec<Declarator>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Declarator {
    pub name: String,
    /// Array dimensions; `None` for `[]`.
    pub dims: Vec<Option<Expr>>,
    pub init: Option<Initializer>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Initializer {
    Expr(Expr),
    /// `{ a, b, c }`
    List(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Block {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForInit {
    Empty,
    Decl(VarDecl),
    Expr(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Block(Block),
    Decl(VarDecl),
    Expr(Expr),
    Empty,
    If { cond: Expr, then_branch: Box<Stmt>, else_branch: Option<Box<Stmt>> },
    Switch { scrutinee: Expr, body: Block },
    Case(Expr),
    Default,
    For { init: ForInit, cond: Option<Expr>, step: Option<Expr>, body: Box<Stmt> },
    While { cond: Expr, body: Box<Stmt> },
    DoWhile { body: Box<Stmt>, cond: Expr },
    Return(Option<Expr>),
    Break,
    Continue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Var(String),
    /// `std::cout` and friends, stored as path segments.
    Scoped(Vec<String>),
    /// Numeric, string, char literals and `true`/`false`.
    Literal(Atom),
    Paren(Box<Expr>),
    Unary { op: String, operand: Box<Expr> },
    Postfix { op: String, operand: Box<Expr> },
    Binary { op: String, lhs: Box<Expr>, rhs: Box<Expr> },
    Assign { op: String, target: Box<Expr>, value: Box<Expr> },
    Conditional { cond: Box<Expr>, then_value: Box<Expr>, else_value: Box<Expr> },
    Index { base: Box<Expr>, index: Box<Expr> },
    Call { callee: Box<Expr>, args: Vec<Expr> },
    Member { base: Box<Expr>, op: String, name: String },
    Comma(Vec<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Expr {
        Expr::Var(name.to_string())
    }

    pub fn binary(op: &str, lhs: Expr, rhs: Expr) -> Expr {
        Expr::Binary { op: op.to_string(), lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }

    pub fn assign(op: &str, target: Expr, value: Expr) -> Expr {
        Expr::Assign { op: op.to_string(), target: Box::new(target), value: Box::new(value) }
    }
}
