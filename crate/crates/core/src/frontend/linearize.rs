//! Depth-first serialization of a [`SyntaxTree`] into comparison atoms, and a
//! stable indented dump of the tree for debugging.

use std::fmt::Write;

use super::ast::*;
use super::token::{Atom, TokenKind, TokenStream};

/// Serializes the tree back into the atom sequence it was parsed from.
pub fn linearize(tree: &SyntaxTree) -> TokenStream {
    let mut out = Emitter::default();
    for item in &tree.root.items {
        out.item(item);
    }
    TokenStream::new(out.atoms)
}

#[derive(Default)]
struct Emitter {
    atoms: Vec<Atom>,
}

impl Emitter {
    fn push(&mut self, kind: TokenKind, text: &str) {
        self.atoms.push(Atom::new(kind, text));
    }

    fn punct(&mut self, text: &str) {
        self.push(TokenKind::Punctuation, text);
    }

    fn op(&mut self, text: &str) {
        self.push(TokenKind::Operator, text);
    }

    fn kw(&mut self, text: &str) {
        self.push(TokenKind::Keyword, text);
    }

    fn ident(&mut self, text: &str) {
        self.push(TokenKind::Identifier, text);
    }

    fn item(&mut self, item: &Item) {
        match item {
            Item::Include(name) => self.push(TokenKind::PreprocessorInclude, name),
            Item::UsingNamespace(name) => {
                self.kw("using");
                self.kw("namespace");
                self.ident(name);
                self.punct(";");
            }
            Item::Function(f) => self.function(f),
            Item::Global(decl) => {
                self.var_decl(decl);
                self.punct(";");
            }
        }
    }

    fn type_spec(&mut self, ty: &TypeSpec) {
        self.atoms.extend(ty.words.iter().cloned());
    }

    fn function(&mut self, f: &FunctionDef) {
        self.type_spec(&f.return_type);
        self.ident(&f.name);
        self.punct("(");
        match &f.params {
            ParamList::Empty => {}
            ParamList::Void => self.kw("void"),
            ParamList::Params(params) => {
                for (i, p) in params.iter().enumerate() {
                    if i > 0 {
                        self.punct(",");
                    }
                    self.type_spec(&p.ty);
                    if p.by_ref {
                        self.op("&");
                    }
                    if let Some(name) = &p.name {
                        self.ident(name);
                    }
                    self.dims(&p.dims);
                }
            }
        }
        self.punct(")");
        match &f.body {
            Some(body) => self.block(body),
            None => self.punct(";"),
        }
    }

    fn dims(&mut self, dims: &[Option<Expr>]) {
        for dim in dims {
            self.punct("[");
            if let Some(e) = dim {
                self.expr(e);
            }
            self.punct("]");
        }
    }

    fn var_decl(&mut self, decl: &VarDecl) {
        self.type_spec(&decl.ty);
        for (i, d) in decl.declarators.iter().enumerate() {
            if i > 0 {
                self.punct(",");
            }
            self.ident(&d.name);
            self.dims(&d.dims);
            match &d.init {
                None => {}
                Some(Initializer::Expr(e)) => {
                    self.op("=");
                    self.expr(e);
                }
                Some(Initializer::List(values)) => {
                    self.op("=");
                    self.punct("{");
                    self.comma_list(values);
                    self.punct("}");
                }
            }
        }
    }

    fn comma_list(&mut self, values: &[Expr]) {
        for (i, v) in values.iter().enumerate() {
            if i > 0 {
                self.punct(",");
            }
            self.expr(v);
        }
    }

    fn block(&mut self, block: &Block) {
        self.punct("{");
        for s in &block.stmts {
            self.stmt(s);
        }
        self.punct("}");
    }

    fn paren(&mut self, e: &Expr) {
        self.punct("(");
        self.expr(e);
        self.punct(")");
    }

    fn stmt(&mut self, stmt: &Stmt) {
        match stmt {
            Stmt::Block(b) => self.block(b),
            Stmt::Decl(d) => {
                self.var_decl(d);
                self.punct(";");
            }
            Stmt::Expr(e) => {
                self.expr(e);
                self.punct(";");
            }
            Stmt::Empty => self.punct(";"),
            Stmt::If { cond, then_branch, else_branch } => {
                self.kw("if");
                self.paren(cond);
                self.stmt(then_branch);
                if let Some(e) = else_branch {
                    self.kw("else");
                    self.stmt(e);
                }
            }
            Stmt::Switch { scrutinee, body } => {
                self.kw("switch");
                self.paren(scrutinee);
                self.block(body);
            }
            Stmt::Case(value) => {
                self.kw("case");
                self.expr(value);
                self.punct(":");
            }
            Stmt::Default => {
                self.kw("default");
                self.punct(":");
            }
            Stmt::For { init, cond, step, body } => {
                self.kw("for");
                self.punct("(");
                match init {
                    ForInit::Empty => {}
                    ForInit::Decl(d) => self.var_decl(d),
                    ForInit::Expr(e) => self.expr(e),
                }
                self.punct(";");
                if let Some(c) = cond {
                    self.expr(c);
                }
                self.punct(";");
                if let Some(s) = step {
                    self.expr(s);
                }
                self.punct(")");
                self.stmt(body);
            }
            Stmt::While { cond, body } => {
                self.kw("while");
                self.paren(cond);
                self.stmt(body);
            }
            Stmt::DoWhile { body, cond } => {
                self.kw("do");
                self.stmt(body);
                self.kw("while");
                self.paren(cond);
                self.punct(";");
            }
            Stmt::Return(value) => {
                self.kw("return");
                if let Some(v) = value {
                    self.expr(v);
                }
                self.punct(";");
            }
            Stmt::Break => {
                self.kw("break");
                self.punct(";");
            }
            Stmt::Continue => {
                self.kw("continue");
                self.punct(";");
            }
        }
    }

    fn expr(&mut self, e: &Expr) {
        match e {
            Expr::Var(name) => self.ident(name),
            Expr::Scoped(path) => {
                for (i, seg) in path.iter().enumerate() {
                    if i > 0 {
                        self.op("::");
                    }
                    self.ident(seg);
                }
            }
            Expr::Literal(atom) => self.atoms.push(atom.clone()),
            Expr::Paren(inner) => self.paren(inner),
            Expr::Unary { op, operand } => {
                self.op(op);
                self.expr(operand);
            }
            Expr::Postfix { op, operand } => {
                self.expr(operand);
                self.op(op);
            }
            Expr::Binary { op, lhs, rhs } | Expr::Assign { op, target: lhs, value: rhs } => {
                self.expr(lhs);
                self.op(op);
                self.expr(rhs);
            }
            Expr::Conditional { cond, then_value, else_value } => {
                self.expr(cond);
                self.op("?");
                self.expr(then_value);
                self.punct(":");
                self.expr(else_value);
            }
            Expr::Index { base, index } => {
                self.expr(base);
                self.punct("[");
                self.expr(index);
                self.punct("]");
            }
            Expr::Call { callee, args } => {
                self.expr(callee);
                self.punct("(");
                self.comma_list(args);
                self.punct(")");
            }
            Expr::Member { base, op, name } => {
                self.expr(base);
                self.op(op);
                self.ident(name);
            }
            Expr::Comma(parts) => self.comma_list(parts),
        }
    }
}

/// Indented tree dump, one node per line, two spaces per depth level.
pub fn dump_tree(tree: &SyntaxTree) -> String {
    let mut d = Dumper::default();
    d.line(0, "Program");
    for item in &tree.root.items {
        d.item(1, item);
    }
    d.out
}

#[derive(Default)]
struct Dumper {
    out: String,
}

fn type_text(ty: &TypeSpec) -> String {
    ty.words.iter().map(|w| w.text.as_str()).collect::<Vec<_>>().join(" ")
}

impl Dumper {
    fn line(&mut self, depth: usize, label: &str) {
        for _ in 0..depth {
            self.out.push_str("  ");
        }
        self.out.push_str(label);
        self.out.push('\n');
    }

    fn item(&mut self, depth: usize, item: &Item) {
        match item {
            Item::Include(name) => self.line(depth, &format!("Include {name}")),
            Item::UsingNamespace(name) => self.line(depth, &format!("UsingNamespace {name}")),
            Item::Function(f) => {
                let kind = if f.body.is_some() { "FunctionDef" } else { "FunctionDecl" };
                self.line(depth, &format!("{kind} {} {}", type_text(&f.return_type), f.name));
                match &f.params {
                    ParamList::Empty => self.line(depth + 1, "Params"),
                    ParamList::Void => self.line(depth + 1, "Params void"),
                    ParamList::Params(ps) => {
                        self.line(depth + 1, "Params");
                        for p in ps {
                            let mut label = format!("Param {}", type_text(&p.ty));
                            if p.by_ref {
                                label.push_str(" &");
                            }
                            if let Some(n) = &p.name {
                                let _ = write!(label, " {n}");
                            }
                            self.line(depth + 2, &label);
                            self.dims(depth + 3, &p.dims);
                        }
                    }
                }
                if let Some(body) = &f.body {
                    self.block(depth + 1, body);
                }
            }
            Item::Global(decl) => self.var_decl(depth, decl),
        }
    }

    fn dims(&mut self, depth: usize, dims: &[Option<Expr>]) {
        for dim in dims {
            match dim {
                Some(e) => {
                    self.line(depth, "Dim");
                    self.expr(depth + 1, e);
                }
                None => self.line(depth, "Dim unsized"),
            }
        }
    }

    fn var_decl(&mut self, depth: usize, decl: &VarDecl) {
        self.line(depth, &format!("VarDecl {}", type_text(&decl.ty)));
        for d in &decl.declarators {
            let kind = if d.dims.is_empty() { "Declarator" } else { "ArrayDeclarator" };
            self.line(depth + 1, &format!("{kind} {}", d.name));
            self.dims(depth + 2, &d.dims);
            match &d.init {
                None => {}
                Some(Initializer::Expr(e)) => {
                    self.line(depth + 2, "Init");
                    self.expr(depth + 3, e);
                }
                Some(Initializer::List(values)) => {
                    self.line(depth + 2, "InitList");
                    for v in values {
                        self.expr(depth + 3, v);
                    }
                }
            }
        }
    }

    fn block(&mut self, depth: usize, block: &Block) {
        self.line(depth, "Block");
        for s in &block.stmts {
            self.stmt(depth + 1, s);
        }
    }

    fn opt_expr(&mut self, depth: usize, e: &Option<Expr>) {
        match e {
            Some(e) => self.expr(depth, e),
            None => self.line(depth, "Empty"),
        }
    }

    fn stmt(&mut self, depth: usize, stmt: &Stmt) {
        match stmt {
            Stmt::Block(b) => self.block(depth, b),
            Stmt::Decl(d) => self.var_decl(depth, d),
            Stmt::Expr(e) => {
                self.line(depth, "ExprStmt");
                self.expr(depth + 1, e);
            }
            Stmt::Empty => self.line(depth, "EmptyStmt"),
            Stmt::If { cond, then_branch, else_branch } => {
                self.line(depth, if else_branch.is_some() { "IfElse" } else { "If" });
                self.expr(depth + 1, cond);
                self.stmt(depth + 1, then_branch);
                if let Some(e) = else_branch {
                    self.stmt(depth + 1, e);
                }
            }
            Stmt::Switch { scrutinee, body } => {
                self.line(depth, "Switch");
                self.expr(depth + 1, scrutinee);
                self.block(depth + 1, body);
            }
            Stmt::Case(v) => {
                self.line(depth, "Case");
                self.expr(depth + 1, v);
            }
            Stmt::Default => self.line(depth, "Default"),
            Stmt::For { init, cond, step, body } => {
                self.line(depth, "For");
                match init {
                    ForInit::Empty => self.line(depth + 1, "Empty"),
                    ForInit::Decl(d) => self.var_decl(depth + 1, d),
                    ForInit::Expr(e) => self.expr(depth + 1, e),
                }
                self.opt_expr(depth + 1, cond);
                self.opt_expr(depth + 1, step);
                self.stmt(depth + 1, body);
            }
            Stmt::While { cond, body } => {
                self.line(depth, "While");
                self.expr(depth + 1, cond);
                self.stmt(depth + 1, body);
            }
            Stmt::DoWhile { body, cond } => {
                self.line(depth, "DoWhile");
                self.stmt(depth + 1, body);
                self.expr(depth + 1, cond);
            }
            Stmt::Return(v) => {
                self.line(depth, "Return");
                if let Some(v) = v {
                    self.expr(depth + 1, v);
                }
            }
            Stmt::Break => self.line(depth, "Break"),
            Stmt::Continue => self.line(depth, "Continue"),
        }
    }

    fn expr(&mut self, depth: usize, e: &Expr) {
        match e {
            Expr::Var(name) => self.line(depth, &format!("Var {name}")),
            Expr::Scoped(path) => self.line(depth, &format!("Scoped {}", path.join("::"))),
            Expr::Literal(atom) => self.line(depth, &format!("Literal {} {}", atom.kind, atom.text)),
            Expr::Paren(inner) => {
                self.line(depth, "Paren");
                self.expr(depth + 1, inner);
            }
            Expr::Unary { op, operand } => {
                self.line(depth, &format!("Unary {op}"));
                self.expr(depth + 1, operand);
            }
            Expr::Postfix { op, operand } => {
                self.line(depth, &format!("Postfix {op}"));
                self.expr(depth + 1, operand);
            }
            Expr::Binary { op, lhs, rhs } => {
                self.line(depth, &format!("Binary {op}"));
                self.expr(depth + 1, lhs);
                self.expr(depth + 1, rhs);
            }
            Expr::Assign { op, target, value } => {
                self.line(depth, &format!("Assign {op}"));
                self.expr(depth + 1, target);
                self.expr(depth + 1, value);
            }
            Expr::Conditional { cond, then_value, else_value } => {
                self.line(depth, "Conditional");
                self.expr(depth + 1, cond);
                self.expr(depth + 1, then_value);
                self.expr(depth + 1, else_value);
            }
            Expr::Index { base, index } => {
                self.line(depth, "Index");
                self.expr(depth + 1, base);
                self.expr(depth + 1, index);
            }
            Expr::Call { callee, args } => {
                self.line(depth, "Call");
                self.expr(depth + 1, callee);
                for a in args {
                    self.expr(depth + 1, a);
                }
            }
            Expr::Member { base, op, name } => {
                self.line(depth, &format!("Member {op}{name}"));
                self.expr(depth + 1, base);
            }
            Expr::Comma(parts) => {
                self.line(depth, "Comma");
                for p in parts {
                    self.expr(depth + 1, p);
                }
            }
        }
    }
}
