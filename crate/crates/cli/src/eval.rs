//! Evaluation of expressions as truncated series.

use dendexp_core::{AlgebraError, DendSeries, Generator, Result, Ring};

use crate::expr::Expr;

/// Evaluate `e` in the series ring truncated above degree `max_degree`.
///
/// Integers are multiples of the unit. `<`, `>`, brace and prelie need
/// operands without constant term.
pub fn eval(e: &Expr, max_degree: usize, ring: Ring) -> Result<DendSeries> {
    if max_degree == 0 {
        return Err(AlgebraError::InvalidArgument(
            "truncation degree must be at least 1".into(),
        ));
    }
    Evaluator { max_degree, ring }.eval(e)
}

struct Evaluator {
    max_degree: usize,
    ring: Ring,
}

fn unit_free(s: &DendSeries, op: &str) -> Result<()> {
    if s.unit_coeff().is_zero() {
        Ok(())
    } else {
        Err(AlgebraError::UndefinedUnitProduct(format!(
            "operand of {op} has constant term {}",
            s.unit_coeff()
        )))
    }
}

impl Evaluator {
    fn eval(&self, e: &Expr) -> Result<DendSeries> {
        match e {
            Expr::Gen(name) => {
                DendSeries::generator(&Generator::new(name)?, self.max_degree, self.ring)
            }
            Expr::Int(c) => DendSeries::scalar(c.clone(), self.max_degree, self.ring),
            Expr::Add(a, b) => self.eval(a)?.add(&self.eval(b)?),
            Expr::Sub(a, b) => self.eval(a)?.sub(&self.eval(b)?),
            Expr::Mul(a, b) => self.eval(a)?.mul(&self.eval(b)?),
            Expr::Prec(a, b) => {
                let (a, b) = self.operands(a, b, "<")?;
                a.prec(&b)
            }
            Expr::Succ(a, b) => {
                let (a, b) = self.operands(a, b, ">")?;
                a.succ(&b)
            }
            Expr::PreLie(a, b) => {
                let (a, b) = self.operands(a, b, "prelie")?;
                a.succ(&b)?.sub(&b.prec(&a)?)
            }
            Expr::ExpL(a) => self.eval(a)?.exp_left(),
            Expr::ExpR(a) => self.eval(a)?.exp_right(),
            Expr::Log(a) => self.eval(a)?.log_nd(),
            Expr::Neg(a) => Ok(self.eval(a)?.neg()),
            Expr::Brace(xs, y) => {
                let xs = xs
                    .iter()
                    .map(|x| {
                        let s = self.eval(x)?;
                        unit_free(&s, "brace")?;
                        Ok(s)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let y = self.eval(y)?;
                unit_free(&y, "brace")?;
                brace(&xs, &y)
            }
        }
    }

    fn operands(&self, a: &Expr, b: &Expr, op: &str) -> Result<(DendSeries, DendSeries)> {
        let a = self.eval(a)?;
        let b = self.eval(b)?;
        unit_free(&a, op)?;
        unit_free(&b, op)?;
        Ok((a, b))
    }
}

/// Brace product on truncated series, same expansion as on elements.
fn brace(xs: &[DendSeries], y: &DendSeries) -> Result<DendSeries> {
    let n = xs.len();
    let mut total = DendSeries::zero(y.max_degree(), y.ring())?;
    for i in 0..=n {
        let mut term = y.clone();
        if i > 0 {
            let mut left = xs[i - 1].clone();
            for x in xs[..i - 1].iter().rev() {
                left = x.prec(&left)?;
            }
            term = left.succ(&term)?;
        }
        if i < n {
            let mut right = xs[i].clone();
            for x in &xs[i + 1..] {
                right = right.succ(x)?;
            }
            term = term.prec(&right)?;
        }
        total = if (n - i) % 2 == 1 {
            total.sub(&term)?
        } else {
            total.add(&term)?
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use dendexp_core::{Coeff, DendElem};

    fn ev(src: &str, n: usize) -> Result<DendSeries> {
        eval(&parse(src).unwrap(), n, Ring::Integers)
    }

    #[test]
    fn examples() {
        let one = DendSeries::unit(10, Ring::Integers).unwrap();
        assert_eq!(ev("e(x)*e'(0-x)", 10).unwrap(), one);
        assert_eq!(ev("e'(-x)*e(x)", 10).unwrap(), one);
        let x = DendSeries::generator(&Generator::named("x"), 8, Ring::Integers).unwrap();
        assert_eq!(ev("L(e(x)-1)", 8).unwrap(), x);
        for src in ["1<x", "x>2", "(1+x)<y", "brace(x;1)", "prelie(1,x)"] {
            assert!(
                matches!(ev(src, 4), Err(AlgebraError::UndefinedUnitProduct(_))),
                "{src}"
            );
        }
        assert!(ev("e(1+x)", 4).is_err());
        assert!(ev("x", 0).is_err());
    }

    #[test]
    fn brace_matches_elements() {
        let r = Ring::Integers;
        let g = |n: &str| DendElem::generator(&Generator::named(n), r);
        let expect = DendElem::brace(&[g("x"), g("y")], &g("z")).unwrap();
        let got = ev("brace(x, y; z)", 5).unwrap();
        assert_eq!(got, DendSeries::from_elem(&expect, 5).unwrap());
        assert_eq!(
            ev("brace(x; y)", 3).unwrap(),
            ev("prelie(x, y)", 3).unwrap()
        );
    }

    #[test]
    fn integers_scale_the_unit() {
        let s = ev("3 - 2*x*x", 3).unwrap();
        assert_eq!(s.unit_coeff(), &Coeff::from(3i64));
        assert!(s.component(1).is_zero());
        assert_eq!(s.component(2).len(), 2);
    }

    #[test]
    fn truncation() {
        let s = ev("x*x*x", 2).unwrap();
        assert!(s.is_zero());
    }
}
