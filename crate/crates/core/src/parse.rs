//! Infix expressions over the rings, and gradings.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INT)?
//! atom  := INT | NAME | NAME '[' INT ']' | '(' expr ')'
//! ```
//!
//! Coefficient names are `xi`, `kappa`, `e`, `g`, `u[n]` and `t[n]`; every
//! other name must be a generator of the target ring.

use crate::error::{Error, Result};
use crate::grading::GradingBT2;
use crate::hcoeff::HCoeff;
use crate::rings::bt1::{self, Bt1Elem};
use crate::rings::bt2::{self, Bt2Elem};
use crate::rings::bu2::{self, Bu2Elem};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Name(String),
    Sym(char),
}

fn parse_err(pos: usize, msg: impl Into<String>, expected: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
        expected: expected.into(),
    }
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let cs: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < cs.len() {
        let (pos, c) = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].1.is_ascii_digit() {
                i += 1;
            }
            let end = cs.get(i).map_or(s.len(), |x| x.0);
            let n = s[pos..end]
                .parse()
                .map_err(|_| parse_err(cs[start].0, "integer too large", "an integer below 2^63"))?;
            out.push((pos, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < cs.len() && (cs[i].1.is_ascii_alphanumeric() || cs[i].1 == '_') {
                i += 1;
            }
            let end = cs.get(i).map_or(s.len(), |x| x.0);
            out.push((pos, Tok::Name(s[pos..end].to_string())));
        } else if "+-*^()[]".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(parse_err(pos, format!("unexpected character `{c}`"), "a name, integer, operator or parenthesis"));
        }
    }
    Ok(out)
}

/// Parsed syntax tree. Names keep their source position for error reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Name { pos: usize, name: String, index: Option<u32> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.len, |t| t.0)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&self, expected: &str) -> Error {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Name(n)) => format!("`{n}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        parse_err(self.pos(), format!("found {found}"), expected)
    }

    fn int(&mut self) -> Result<i64> {
        match self.peek() {
            Some(&Tok::Int(n)) => {
                self.at += 1;
                Ok(n)
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn small(&mut self) -> Result<u32> {
        let pos = self.pos();
        let n = self.int()?;
        u32::try_from(n).map_err(|_| parse_err(pos, format!("exponent {n} too large"), "an exponent below 2^32"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut x = self.term()?;
        loop {
            if self.eat('+') {
                x = Expr::Add(Box::new(x), Box::new(self.term()?));
            } else if self.eat('-') {
                x = Expr::Sub(Box::new(x), Box::new(self.term()?));
            } else {
                return Ok(x);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut x = self.unary()?;
        while self.eat('*') {
            x = Expr::Mul(Box::new(x), Box::new(self.unary()?));
        }
        Ok(x)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            return Ok(Expr::Pow(Box::new(base), self.small()?));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                let index = if self.eat('[') {
                    let k = self.small()?;
                    self.expect(']')?;
                    Some(k)
                } else {
                    None
                };
                Ok(Expr::Name { pos, name, index })
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let x = self.expr()?;
                self.expect(')')?;
                Ok(x)
            }
            _ => Err(self.unexpected("a name, integer, `-` or `(`")),
        }
    }
}

/// Parses an expression without interpreting names.
pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(s)?,
        at: 0,
        len: s.len(),
    };
    let x = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(x)
}

/// A ring that expressions can be evaluated in.
pub trait Algebra: Clone {
    const RING: &'static str;
    fn generator_names() -> &'static [&'static str];
    fn generator(i: usize) -> Self;
    fn coefficient(c: HCoeff) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Result<Self>;
}

impl Algebra for HCoeff {
    const RING: &'static str = "H";
    fn generator_names() -> &'static [&'static str] {
        &[]
    }
    fn generator(_: usize) -> Self {
        unreachable!("ℍ has no ring generators")
    }
    fn coefficient(c: HCoeff) -> Self {
        c
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Result<Self> {
        self.mul(o)
    }
}

impl Algebra for Bt1Elem {
    const RING: &'static str = "bt1";
    fn generator_names() -> &'static [&'static str] {
        &bt1::NAMES
    }
    fn generator(i: usize) -> Self {
        Bt1Elem::gen(i)
    }
    fn coefficient(c: HCoeff) -> Self {
        Bt1Elem::h(c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Result<Self> {
        self.mul(o)
    }
}

impl Algebra for Bt2Elem {
    const RING: &'static str = "bt2";
    fn generator_names() -> &'static [&'static str] {
        &bt2::NAMES
    }
    fn generator(i: usize) -> Self {
        Bt2Elem::gen(i)
    }
    fn coefficient(c: HCoeff) -> Self {
        Bt2Elem::h(c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Result<Self> {
        self.mul(o)
    }
}

impl Algebra for Bu2Elem {
    const RING: &'static str = "bu2";
    fn generator_names() -> &'static [&'static str] {
        &bu2::NAMES
    }
    fn generator(i: usize) -> Self {
        Bu2Elem::gen(i)
    }
    fn coefficient(c: HCoeff) -> Self {
        Bu2Elem::h(c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn minus(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn times(&self, o: &Self) -> Result<Self> {
        self.mul(o)
    }
}

fn coefficient_atom(name: &str, index: Option<u32>) -> Option<Result<HCoeff>> {
    Some(match (name, index) {
        ("xi", None) => Ok(HCoeff::xi()),
        ("kappa", None) => Ok(HCoeff::kappa()),
        ("e", None) => Ok(HCoeff::e()),
        ("g", None) => Ok(HCoeff::g()),
        ("u", Some(n)) => Ok(HCoeff::u(n)),
        ("t", Some(n)) => HCoeff::t(n),
        _ => return None,
    })
}

/// Evaluates a syntax tree in the ring `A`.
pub fn eval<A: Algebra>(x: &Expr) -> Result<A> {
    match x {
        Expr::Int(n) => Ok(A::coefficient(HCoeff::int(*n))),
        Expr::Name { pos, name, index } => {
            if let Some(c) = coefficient_atom(name, *index) {
                return c.map(A::coefficient);
            }
            let names = A::generator_names();
            match names.iter().position(|n| n == name) {
                Some(i) if index.is_none() => Ok(A::generator(i)),
                _ => {
                    let mut expected: Vec<&str> = names.to_vec();
                    expected.extend(["xi", "kappa", "e", "g", "u[n]", "t[n]"]);
                    Err(parse_err(
                        *pos,
                        format!("unknown name `{name}` in {}", A::RING),
                        expected.join(", "),
                    ))
                }
            }
        }
        Expr::Neg(a) => Ok(A::coefficient(HCoeff::zero()).minus(&eval(a)?)),
        Expr::Add(a, b) => Ok(eval::<A>(a)?.plus(&eval(b)?)),
        Expr::Sub(a, b) => Ok(eval::<A>(a)?.minus(&eval(b)?)),
        Expr::Mul(a, b) => eval::<A>(a)?.times(&eval(b)?),
        Expr::Pow(a, k) => {
            let base: A = eval(a)?;
            let mut out = A::coefficient(HCoeff::int(1));
            for _ in 0..*k {
                out = out.times(&base)?;
            }
            Ok(out)
        }
    }
}

/// Parses and evaluates in one step.
pub fn parse<A: Algebra>(s: &str) -> Result<A> {
    if s.trim().is_empty() {
        return Err(parse_err(0, "empty expression", "an expression"));
    }
    eval(&parse_expr(s)?)
}

/// Parses a grading such as `W01+W10`, `2+2s-W00` or `3*W11 - 2*sigma`.
/// `s` and `sigma` denote σ, `Wij` denotes `Ωᵢⱼ`, and a bare integer is a
/// multiple of 1.
pub fn parse_grading(s: &str) -> Result<GradingBT2> {
    if s.trim().is_empty() {
        return Err(parse_err(0, "empty grading", "a grading"));
    }
    let mut raw = [0i64; 6];
    let toks = lex(s)?;
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = 1;
        match &toks[i].1 {
            Tok::Sym('+') if !first => i += 1,
            Tok::Sym('-') => {
                sign = -1;
                i += 1;
            }
            _ if first => {}
            _ => return Err(parse_err(toks[i].0, "missing operator", "`+` or `-`")),
        }
        first = false;
        let pos = toks.get(i).map_or(s.len(), |t| t.0);
        let mut coeff = 1;
        let mut saw_int = false;
        if let Some((_, Tok::Int(n))) = toks.get(i) {
            coeff = *n;
            saw_int = true;
            i += 1;
            if let Some((_, Tok::Sym('*'))) = toks.get(i) {
                i += 1;
            }
        }
        let slot = match toks.get(i) {
            Some((_, Tok::Name(n))) => {
                let k = match n.as_str() {
                    "s" | "sigma" => 1,
                    "W00" => 2,
                    "W01" => 3,
                    "W10" => 4,
                    "W11" => 5,
                    _ => {
                        return Err(parse_err(toks[i].0, format!("unknown grading symbol `{n}`"), "s, sigma, W00, W01, W10, W11"))
                    }
                };
                i += 1;
                k
            }
            _ if saw_int => 0,
            _ => return Err(parse_err(pos, "missing term", "an integer, s, sigma or Wij")),
        };
        raw[slot] += sign * coeff;
    }
    Ok(GradingBT2::from_raw(raw[0], raw[1], raw[2], raw[3], raw[4], raw[5]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let x: Bt2Elem = parse("z00 + z01*z10^2").unwrap();
        let want = Bt2Elem::gen(bt2::Z00).add(&Bt2Elem::mono(HCoeff::int(1), &[(bt2::Z01, 1), (bt2::Z10, 2)]).unwrap());
        assert_eq!(x, want);
        let y: Bt2Elem = parse("-(z00 - 2)*3").unwrap();
        assert_eq!(y, Bt2Elem::int(6).sub(&Bt2Elem::gen(bt2::Z00).scale_int(3).unwrap()));
    }

    #[test]
    fn coefficients() {
        let x: HCoeff = parse("(1 - kappa)^2").unwrap();
        assert_eq!(x, HCoeff::int(1));
        let y: Bt2Elem = parse("u[1]*z00*z01*cw1").unwrap();
        assert_eq!(y, crate::classes::eps1());
    }

    #[test]
    fn errors_carry_position() {
        match parse::<Bt2Elem>("z00 * ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse::<Bt2Elem>("z00 + zz") {
            Err(Error::Parse { pos, msg, .. }) => {
                assert_eq!(pos, 6);
                assert!(msg.contains("zz"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse::<Bt2Elem>("(z00"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse::<Bt2Elem>("z00 z01"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse::<Bt2Elem>(""), Err(Error::Parse { .. })));
        assert!(matches!(parse::<Bt2Elem>("z00 # 1"), Err(Error::Parse { pos: 4, .. })));
    }

    #[test]
    fn gradings() {
        let g = parse_grading("W01+W10").unwrap();
        assert_eq!(g, GradingBT2::omega(0, 1) + GradingBT2::omega(1, 0));
        let h = parse_grading("2 + 2s - W11").unwrap();
        assert_eq!(h, GradingBT2::from_raw(2, 2, 0, 0, 0, -1));
        assert_eq!(parse_grading("0").unwrap(), GradingBT2::ZERO);
        assert_eq!(parse_grading("-3*sigma").unwrap(), GradingBT2::from_raw(0, -3, 0, 0, 0, 0));
        assert!(parse_grading("W02").is_err());
        assert!(parse_grading("W01 W10").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["z00*cT", "cT*cxT", "(z00 + u[1]*cw1)^3", "t[2]*z00^2*z01*z10*cw1*cw2 - e^2"] {
            let x: Bt2Elem = parse(s).unwrap();
            let y: Bt2Elem = parse(&x.to_string()).unwrap();
            assert_eq!(x, y, "{s} printed as {x}");
        }
    }
}
