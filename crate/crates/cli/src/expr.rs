//! Expression syntax tree and its canonical text form.

use std::fmt;

use dendexp_core::Coeff;

/// Parsed expression. `Int` literals are nonnegative; negation is `Neg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Gen(String),
    Int(Coeff),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Prec(Box<Expr>, Box<Expr>),
    Succ(Box<Expr>, Box<Expr>),
    ExpL(Box<Expr>),
    ExpR(Box<Expr>),
    Log(Box<Expr>),
    Brace(Vec<Expr>, Box<Expr>),
    PreLie(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

impl Expr {
    pub fn gen(name: &str) -> Expr {
        Expr::Gen(name.to_string())
    }

    pub fn int(v: u64) -> Expr {
        Expr::Int(Coeff::from(v))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write_sum(&mut out);
        out
    }

    fn write_sum(&self, out: &mut String) {
        match self {
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_sum(out);
                out.push_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                });
                b.write_product(out);
            }
            _ => self.write_product(out),
        }
    }

    fn write_product(&self, out: &mut String) {
        match self {
            Expr::Mul(a, b) => {
                match **a {
                    Expr::Mul(..) => a.write_product(out),
                    _ => a.write_atom(out),
                }
                out.push_str(" * ");
                b.write_atom(out);
            }
            Expr::Prec(a, b) | Expr::Succ(a, b) => {
                a.write_atom(out);
                out.push_str(if matches!(self, Expr::Prec(..)) {
                    " < "
                } else {
                    " > "
                });
                b.write_atom(out);
            }
            _ => self.write_atom(out),
        }
    }

    fn write_atom(&self, out: &mut String) {
        match self {
            Expr::Gen(name) => out.push_str(name),
            Expr::Int(c) => out.push_str(&c.to_string()),
            Expr::Neg(a) => {
                out.push('-');
                a.write_atom(out);
            }
            Expr::ExpL(a) | Expr::ExpR(a) | Expr::Log(a) => {
                out.push_str(match self {
                    Expr::ExpL(_) => "e(",
                    Expr::ExpR(_) => "e'(",
                    _ => "L(",
                });
                a.write_sum(out);
                out.push(')');
            }
            Expr::Brace(xs, y) => {
                out.push_str("brace(");
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    x.write_sum(out);
                }
                out.push_str("; ");
                y.write_sum(out);
                out.push(')');
            }
            Expr::PreLie(a, b) => {
                out.push_str("prelie(");
                a.write_sum(out);
                out.push_str(", ");
                b.write_sum(out);
                out.push(')');
            }
            _ => {
                out.push('(');
                self.write_sum(out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
