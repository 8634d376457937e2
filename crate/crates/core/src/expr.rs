//! Ideal expressions: lexsegment atoms, explicit generator sets, sums and
//! intersections.
//!
//! ```text
//! monomial := ("x" INT)+ | "{" INT ("," INT)* "}"
//! atom     := "Li(" monomial ")" | "Lf(" monomial ")" | "L(" monomial "," monomial ")"
//!           | "Inq(" INT ")" | "{" monomial ("," monomial)* "}" | "(" expr ")"
//! expr     := term ("+" term)*        term := atom ("&" atom)*
//! ```
//!
//! `&` (intersection) binds tighter than `+` (sum); both associate to the
//! left. Whitespace between tokens is ignored.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::lexseg::LexSpec;
use crate::monomials::{Ring, SqfMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Initial(SqfMonomial),
    Final(SqfMonomial),
    Segment(SqfMonomial, SqfMonomial),
    Stratum(usize),
    Set(Vec<SqfMonomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Atom(Atom),
    Sum(Box<IdealExpr>, Box<IdealExpr>),
    Intersection(Box<IdealExpr>, Box<IdealExpr>),
}

impl Atom {
    /// The segment this atom denotes, if it is one.
    pub fn as_segment(&self, ring: Ring) -> Option<LexSpec> {
        match *self {
            Atom::Initial(v) => LexSpec::initial(v).ok(),
            Atom::Final(u) => LexSpec::final_(u).ok(),
            Atom::Segment(u, v) => LexSpec::new(u, v).ok(),
            Atom::Stratum(q) => LexSpec::new(ring.stratum_max(q).ok()?, ring.stratum_min(q).ok()?).ok(),
            Atom::Set(_) => None,
        }
    }

    fn eval(&self, ring: Ring) -> Result<MonomialIdeal> {
        match self {
            Atom::Set(gens) => MonomialIdeal::minimalize(ring, gens.iter().copied()),
            Atom::Stratum(q) => MonomialIdeal::all_of_degree(ring, *q),
            _ => Ok(self.as_segment(ring).expect("validated at parse time").build()),
        }
    }
}

impl IdealExpr {
    pub fn eval(&self, ring: Ring) -> Result<MonomialIdeal> {
        match self {
            IdealExpr::Atom(a) => a.eval(ring),
            IdealExpr::Sum(a, b) => a.eval(ring)?.sum(&b.eval(ring)?),
            IdealExpr::Intersection(a, b) => a.eval(ring)?.intersect(&b.eval(ring)?),
        }
    }

    /// The segment when the whole expression is a single segment atom.
    pub fn as_segment(&self, ring: Ring) -> Option<LexSpec> {
        match self {
            IdealExpr::Atom(a) => a.as_segment(ring),
            _ => None,
        }
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: SqfMonomial) -> fmt::Result {
    if m.is_one() {
        // only reachable for hand-built ASTs; the grammar has no unit token
        return f.write_str("{}");
    }
    write!(f, "{}", m)
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Initial(v) => {
                f.write_str("Li(")?;
                write_monomial(f, *v)?;
                f.write_str(")")
            }
            Atom::Final(u) => {
                f.write_str("Lf(")?;
                write_monomial(f, *u)?;
                f.write_str(")")
            }
            Atom::Segment(u, v) => {
                f.write_str("L(")?;
                write_monomial(f, *u)?;
                f.write_str(", ")?;
                write_monomial(f, *v)?;
                f.write_str(")")
            }
            Atom::Stratum(q) => write!(f, "Inq({q})"),
            Atom::Set(gens) => {
                f.write_str("{")?;
                for (k, g) in gens.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write_monomial(f, *g)?;
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Atom(a) => write!(f, "{a}"),
            IdealExpr::Sum(a, b) => {
                write!(f, "{a} + ")?;
                match **b {
                    IdealExpr::Sum(..) => write!(f, "({b})"),
                    _ => write!(f, "{b}"),
                }
            }
            IdealExpr::Intersection(a, b) => {
                for (k, side) in [a, b].into_iter().enumerate() {
                    if k > 0 {
                        f.write_str(" & ")?;
                    }
                    let wrap = match **side {
                        IdealExpr::Sum(..) => true,
                        IdealExpr::Intersection(..) => k == 1,
                        IdealExpr::Atom(_) => false,
                    };
                    if wrap {
                        write!(f, "({side})")?;
                    } else {
                        write!(f, "{side}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses `text` for the ring with `n` variables.
pub fn parse(text: &str, n: usize) -> Result<IdealExpr> {
    let ring = Ring::new(n)?;
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        self.error_at(self.pos, message)
    }

    fn error_at(&self, offset: usize, message: &str) -> Error {
        Error::Syntax { offset, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn expr(&mut self) -> Result<IdealExpr> {
        let mut acc = self.term()?;
        while self.eat("+") {
            acc = IdealExpr::Sum(Box::new(acc), Box::new(self.term()?));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<IdealExpr> {
        let mut acc = self.atom()?;
        while self.eat("&") {
            acc = IdealExpr::Intersection(Box::new(acc), Box::new(self.atom()?));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<IdealExpr> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let atom = if self.eat("Li(") {
            let v = self.monomial()?;
            self.expect(")")?;
            Atom::Initial(v)
        } else if self.eat("Lf(") {
            let u = self.monomial()?;
            self.expect(")")?;
            Atom::Final(u)
        } else if self.eat("L(") {
            let u = self.monomial()?;
            self.expect(",")?;
            let v = self.monomial()?;
            self.expect(")")?;
            if u.degree() != v.degree() {
                return Err(Error::DegreeMismatch(u.degree(), v.degree()));
            }
            LexSpec::new(u, v)?;
            Atom::Segment(u, v)
        } else if self.eat("Inq(") {
            let q = self.int()?;
            self.expect(")")?;
            if q == 0 || q > self.ring.n() {
                return Err(Error::DegreeOutOfRange { degree: q, n: self.ring.n() });
            }
            Atom::Stratum(q)
        } else if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        } else if self.eat("{") {
            let mut gens = vec![self.monomial()?];
            while self.eat(",") {
                gens.push(self.monomial()?);
            }
            self.expect("}")?;
            Atom::Set(gens)
        } else {
            return Err(self.error_at(start, "expected Li(, Lf(, L(, Inq(, '{' or '('"));
        };
        if let Atom::Initial(m) | Atom::Final(m) = atom {
            if m.is_one() {
                return Err(self.error_at(start, "segment monomial must have positive degree"));
            }
        }
        Ok(IdealExpr::Atom(atom))
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error_at(start, "integer too large"))
    }

    fn monomial(&mut self) -> Result<SqfMonomial> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut indices = Vec::new();
        match self.peek() {
            Some(b'x') => {
                while self.src.get(self.pos) == Some(&b'x') {
                    self.pos += 1;
                    let at = self.pos;
                    if !self.src.get(at).is_some_and(u8::is_ascii_digit) {
                        return Err(self.error_at(at, "expected a variable index after 'x'"));
                    }
                    indices.push((at, self.int()?));
                }
            }
            Some(b'{') => {
                self.pos += 1;
                loop {
                    self.skip_ws();
                    indices.push((self.pos, self.int()?));
                    if !self.eat(",") {
                        break;
                    }
                }
                self.expect("}")?;
            }
            _ => return Err(self.error_at(start, "expected a monomial")),
        }
        let mut seen = 0u64;
        for &(at, i) in &indices {
            if i == 0 || i > self.ring.n() {
                return Err(Error::IndexOutOfRange { index: i, n: self.ring.n() });
            }
            if seen & (1 << (i - 1)) != 0 {
                return Err(self.error_at(at, "repeated variable in a squarefree monomial"));
            }
            seen |= 1 << (i - 1);
        }
        SqfMonomial::new(self.ring, indices.into_iter().map(|(_, i)| i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, s: &[usize]) -> SqfMonomial {
        SqfMonomial::new(Ring::new(n).unwrap(), s.iter().copied()).unwrap()
    }

    #[test]
    fn atoms() {
        let e = parse("L(x1x3, x2x3)", 4).unwrap();
        assert_eq!(e, IdealExpr::Atom(Atom::Segment(m(4, &[1, 3]), m(4, &[2, 3]))));
        assert_eq!(e.as_segment(Ring::new(4).unwrap()).unwrap().q(), 2);
        assert_eq!(parse("Li({2,3})", 4).unwrap(), parse("Li(x2x3)", 4).unwrap());
        assert_eq!(parse("{x1x2, {3}}", 4).unwrap(), IdealExpr::Atom(Atom::Set(vec![m(4, &[1, 2]), m(4, &[3])])));
        assert_eq!(parse("Inq(2)", 4).unwrap().eval(Ring::new(4).unwrap()).unwrap().gens().len(), 6);
    }

    #[test]
    fn precedence() {
        let e = parse("Li(x2x3) & Lf(x1x3)", 4).unwrap();
        assert!(matches!(e, IdealExpr::Intersection(..)));
        let e = parse("Inq(3) + Li(x2x3) & Lf(x1x3)", 4).unwrap();
        let IdealExpr::Sum(_, rhs) = &e else { panic!("{e:?}") };
        assert!(matches!(**rhs, IdealExpr::Intersection(..)));
        let e = parse("Inq(1) + Inq(2) + Inq(3)", 4).unwrap();
        let IdealExpr::Sum(lhs, _) = &e else { panic!() };
        assert!(matches!(**lhs, IdealExpr::Sum(..)));
    }

    #[test]
    fn bridge_identity_through_expressions() {
        let ring = Ring::new(4).unwrap();
        let a = parse("L(x1x3, x2x3)", 4).unwrap().eval(ring).unwrap();
        let b = parse("Li(x2x3) & Lf(x1x3)", 4).unwrap().eval(ring).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors() {
        assert_eq!(parse("L(x1, x2x3)", 4), Err(Error::DegreeMismatch(1, 2)));
        assert_eq!(parse("Li(x5)", 4), Err(Error::IndexOutOfRange { index: 5, n: 4 }));
        assert!(matches!(parse("Li(x2x3", 4), Err(Error::Syntax { offset: 7, .. })));
        assert!(matches!(parse("Lq(x1)", 4), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse("Li(x1x1)", 4), Err(Error::Syntax { offset: 6, .. })));
        assert!(matches!(parse("Li(x2) +", 4), Err(Error::Syntax { offset: 8, .. })));
        assert!(matches!(parse("L(x2x3, x1x2)", 4), Err(Error::EmptySegment(..))));
        assert!(matches!(parse("Inq(5)", 4), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn printing() {
        for text in ["L(x1x3, x2x3)", "Li(x2x3) & Lf(x1x3) + Inq(2)", "(Inq(1) + Inq(2)) & {x1x2, x3}", "Inq(1) + (Inq(2) + Inq(3))"] {
            let e = parse(text, 4).unwrap();
            assert_eq!(e.to_string(), text);
            assert_eq!(parse(&e.to_string(), 4).unwrap(), e);
        }
    }
}
