//! Family specs with `file:` patterns and construction expressions.
//!
//! A graph reference is a generator token (`K3`, `P4`, `C5`, `S3`), a
//! nested construction, or a path to a graph file. Constructions:
//! `attach(G, F@root)`, `cart(G, F)`, `subdiv(G, h)`, `extremalG(k,q,t)`
//! and `extremalH(k,q,t)`.

use std::path::Path;

use isolation_core::constructions::{
    attach_rooted_copies, cartesian_product, extremal_h, extremal_path_of_cliques, subdivide, RootedPattern,
};
use isolation_core::family::{generator_graph, split_scaled};
use isolation_core::{BaseFamily, Error, FamilySpec, Graph};

use crate::error::Result;
use crate::io::read_graph;

fn syntax(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// Parses `[t*]base` where base may also be `file:<edge-list path>`.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let (t, base) = split_scaled(text)?;
    let base = match base.strip_prefix("file:") {
        Some(path) => BaseFamily::Pattern(read_graph(Path::new(path), None)?),
        None => base.parse()?,
    };
    Ok(FamilySpec::new(base)?.scaled(t)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Call(String, Vec<Expr>),
    Atom(String),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Expr, Error> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if matches!(c, '(' | ')' | ',') {
                break;
            }
            self.pos += c.len_utf8();
        }
        let head = self.text[start..self.pos].trim().to_string();
        if head.is_empty() {
            return Err(syntax(&self.text[start..], "expected a graph or construction"));
        }
        if self.peek() != Some('(') {
            return Ok(Expr::Atom(head));
        }
        self.pos += 1;
        let mut args = Vec::new();
        loop {
            args.push(self.expr()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(Expr::Call(head, args));
                }
                _ => return Err(syntax(&head, "unclosed argument list")),
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, Error> {
    let mut parser = Parser { text, pos: 0 };
    let expr = parser.expr()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(syntax(&text[parser.pos..], "trailing input"));
    }
    Ok(expr)
}

fn atom<'e>(expr: &'e Expr, what: &str) -> Result<&'e str, Error> {
    match expr {
        Expr::Atom(a) => Ok(a),
        Expr::Call(name, _) => Err(syntax(name, format!("expected {what}, found a construction"))),
    }
}

fn count(expr: &Expr) -> Result<usize, Error> {
    let a = atom(expr, "a count")?;
    a.parse().map_err(|_| syntax(a, "expected a non-negative integer"))
}

fn arity(name: &str, args: &[Expr], n: usize) -> Result<(), Error> {
    if args.len() != n {
        return Err(syntax(name, format!("takes {n} arguments, got {}", args.len())));
    }
    Ok(())
}

fn graph_ref(token: &str) -> Result<Graph> {
    if let Ok(BaseFamily::Generator(kind, k)) = token.parse::<BaseFamily>() {
        return Ok(generator_graph(kind, k)?);
    }
    read_graph(Path::new(token), None)
}

pub fn eval(expr: &Expr) -> Result<Graph> {
    let (name, args) = match expr {
        Expr::Atom(token) => return graph_ref(token),
        Expr::Call(name, args) => (name.as_str(), args.as_slice()),
    };
    let graph = match name {
        "attach" => {
            arity(name, args, 2)?;
            let rooted = atom(&args[1], "F@root")?;
            let (pattern, root) = rooted
                .rsplit_once('@')
                .ok_or_else(|| syntax(rooted, "expected F@root"))?;
            let root: usize = root.trim().parse().map_err(|_| syntax(rooted, "bad root"))?;
            let rp = RootedPattern::new(graph_ref(pattern.trim())?, root)?;
            attach_rooted_copies(&eval(&args[0])?, &rp)?
        }
        "cart" => {
            arity(name, args, 2)?;
            cartesian_product(&eval(&args[0])?, &eval(&args[1])?)?
        }
        "subdiv" => {
            arity(name, args, 2)?;
            subdivide(&eval(&args[0])?, count(&args[1])?)
        }
        "extremalG" | "extremalH" => {
            arity(name, args, 3)?;
            let (k, q, t) = (count(&args[0])?, count(&args[1])?, count(&args[2])?);
            if name == "extremalG" {
                extremal_path_of_cliques(k, q, t)?
            } else {
                extremal_h(k, q, t)?
            }
        }
        other => return Err(syntax(other, "unknown construction").into()),
    };
    Ok(graph)
}

pub fn construct(text: &str) -> Result<Graph> {
    eval(&parse_expr(text)?)
}
