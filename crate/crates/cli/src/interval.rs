//! Intervals whose endpoints are linear in the graph order, e.g. `[0,n-3)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use qdist_core::exact::int;
use qdist_core::{Interval, Rational};

/// `coef * n + constant`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Linear {
    pub coef: i64,
    pub constant: Rational,
}

impl Linear {
    pub fn eval(&self, n: usize) -> Rational {
        int(self.coef * n as i64) + &self.constant
    }

    fn parse_term(term: &str) -> Result<Linear, String> {
        let bad = || format!("cannot read `{term}` as an endpoint term");
        if let Some(coef) = term.strip_suffix('n') {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let coef = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
            return Ok(Linear { coef, constant: Rational::zero() });
        }
        let constant = match term.split_once('/') {
            Some((p, q)) => {
                let (p, q): (i64, i64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
                if q == 0 {
                    return Err(format!("zero denominator in `{term}`"));
                }
                Rational::new(p.into(), q.into())
            }
            None => int(term.parse().map_err(|_| bad())?),
        };
        Ok(Linear { coef: 0, constant })
    }
}

impl FromStr for Linear {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err("empty endpoint".into());
        }
        let mut acc = Linear { coef: 0, constant: Rational::zero() };
        let mut rest = text.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if first => (false, rest),
                _ => return Err(format!("expected `+` or `-` in `{s}`")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            if end == 0 {
                return Err(format!("missing term in `{s}`"));
            }
            let term = Linear::parse_term(&body[..end])?;
            if negative {
                acc.coef -= term.coef;
                acc.constant -= term.constant;
            } else {
                acc.coef += term.coef;
                acc.constant += term.constant;
            }
            rest = &body[end..];
            first = false;
        }
        Ok(acc)
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coef {
            0 => return write!(f, "{}", self.constant),
            1 => f.write_str("n")?,
            -1 => f.write_str("-n")?,
            k => write!(f, "{k}n")?,
        }
        if self.constant.is_positive() {
            write!(f, "+{}", self.constant)?;
        } else if self.constant.is_negative() {
            write!(f, "-{}", -&self.constant)?;
        }
        Ok(())
    }
}

/// An interval with symbolic endpoints, resolved against a graph order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicInterval {
    pub lo: Linear,
    pub hi: Linear,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl SymbolicInterval {
    pub fn resolve(&self, n: usize) -> Result<Interval, String> {
        Interval::try_new(self.lo.eval(n), self.hi.eval(n), self.lo_closed, self.hi_closed)
            .map_err(|e| format!("{self} at n = {n}: {e}"))
    }
}

impl FromStr for SymbolicInterval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let lo_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(format!("interval `{s}` must start with `[` or `(`")),
        };
        let hi_closed = match t.chars().last() {
            Some(']') if t.len() > 1 => true,
            Some(')') if t.len() > 1 => false,
            _ => return Err(format!("interval `{s}` must end with `]` or `)`")),
        };
        let inner = &t[1..t.len() - 1];
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| format!("interval `{s}` needs two endpoints separated by `,`"))?;
        let iv = SymbolicInterval { lo: lo.parse()?, hi: hi.parse()?, lo_closed, hi_closed };
        // with equal slopes the order of the ends does not depend on n
        if iv.lo.coef == iv.hi.coef {
            if iv.lo.constant > iv.hi.constant {
                return Err(format!("interval `{s}` has lower end above upper end"));
            }
            if iv.lo.constant == iv.hi.constant && !(lo_closed && hi_closed) {
                return Err(format!("interval `{s}` is empty"));
            }
        }
        Ok(iv)
    }
}

impl fmt::Display for SymbolicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}
