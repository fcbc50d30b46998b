//! Sparse bivariate polynomials over Q with exact rational coefficients.
//!
//! `Poly` is the ambient ring K[x,y] with K = Q. Values are immutable after
//! construction and every operation is a pure function, so they can be used
//! freely across threads. Terms are kept in canonical form: no zero
//! coefficients, keyed by graded-lexicographic monomial order with x > y.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rat = BigRational;

/// Largest exponent allowed per variable. Exceeding it aborts: it signals
/// runaway intermediate blowup, not a representable answer.
pub const DEGREE_CAP: u32 = 1 << 16;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// n/d as a reduced rational. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// x^i * y^j.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub fn new(i: u32, j: u32) -> Self {
        assert!(
            i <= DEGREE_CAP && j <= DEGREE_CAP,
            "degree cap {DEGREE_CAP} exceeded: x^{i} y^{j}"
        );
        Monomial { i, j }
    }

    pub fn one() -> Self {
        Monomial { i: 0, j: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.i + self.j
    }

    fn checked_mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.i + other.i, self.j + other.j)
    }

    fn pow(&self, n: u32) -> Monomial {
        Monomial::new(
            self.i.checked_mul(n).expect("exponent overflow"),
            self.j.checked_mul(n).expect("exponent overflow"),
        )
    }
}

// Graded lexicographic with x > y: total degree first, then x-exponent.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.i).cmp(&(other.degree(), other.i))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse bivariate polynomial over Q.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Poly::monomial(Monomial::new(1, 0), Rat::one()),
            Var::Y => Poly::monomial(Monomial::new(0, 1), Rat::one()),
        }
    }

    pub fn x() -> Self {
        Poly::var(Var::X)
    }

    pub fn y() -> Self {
        Poly::var(Var::Y)
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// The constant value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term under grlex.
    pub fn leading_term(&self) -> Option<(Monomial, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Sum of all terms of maximal total degree.
    pub fn leading_form(&self) -> Result<Poly> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// self * c * x^i y^j.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, v)| (mm.checked_mul(m), v * c))
                .collect(),
        }
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            match v {
                Var::X if m.i > 0 => {
                    out.add_term(Monomial::new(m.i - 1, m.j), c * rat_int(m.i as i64))
                }
                Var::Y if m.j > 0 => {
                    out.add_term(Monomial::new(m.i, m.j - 1), c * rat_int(m.j as i64))
                }
                _ => {}
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Poly {
        if n == 0 {
            return Poly::one();
        }
        if let Some((m, c)) = self.single_term() {
            return Poly::monomial(m.pow(n), num::pow::pow(c.clone(), n as usize));
        }
        let mut base = self.clone();
        let mut n = n;
        let mut acc: Option<Poly> = None;
        loop {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => &a * &base,
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = &base * &base;
        }
        acc.unwrap()
    }

    fn single_term(&self) -> Option<(Monomial, &Rat)> {
        if self.terms.len() == 1 {
            self.leading_term()
        } else {
            None
        }
    }

    /// The image of self under the ring map x -> px, y -> py.
    pub fn substitute(&self, px: &Poly, py: &Poly) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        // Monomial images stay monomials; handle them term by term.
        if px.num_terms() <= 1 && py.num_terms() <= 1 {
            let mut out = Poly::zero();
            for (m, c) in &self.terms {
                let part = px.pow(m.i) * py.pow(m.j);
                out += &part.scale(c);
            }
            return out;
        }
        // Group by x-exponent, evaluate each row at py, then Horner over px.
        let mut rows: BTreeMap<u32, BTreeMap<u32, Rat>> = BTreeMap::new();
        for (m, c) in &self.terms {
            rows.entry(m.i).or_default().insert(m.j, c.clone());
        }
        let evaluated: BTreeMap<u32, Poly> = rows
            .into_iter()
            .map(|(i, row)| (i, horner_scalar(&row, py)))
            .collect();
        horner_poly(&evaluated, px)
    }
}

/// Horner evaluation of a scalar-coefficient univariate polynomial at `at`.
fn horner_scalar(coeffs: &BTreeMap<u32, Rat>, at: &Poly) -> Poly {
    let max = *coeffs.keys().next_back().expect("nonempty");
    let mut acc = Poly::zero();
    for e in (0..=max).rev() {
        if !acc.is_zero() {
            acc = &acc * at;
        }
        if let Some(c) = coeffs.get(&e) {
            acc += &Poly::constant(c.clone());
        }
    }
    acc
}

/// Horner evaluation with polynomial coefficients.
fn horner_poly(coeffs: &BTreeMap<u32, Poly>, at: &Poly) -> Poly {
    let max = *coeffs.keys().next_back().expect("nonempty");
    let mut acc = Poly::zero();
    for e in (0..=max).rev() {
        if !acc.is_zero() {
            acc = &acc * at;
        }
        if let Some(c) = coeffs.get(&e) {
            acc += c;
        }
    }
    acc
}

/// Jacobian determinant p_x q_y - p_y q_x.
pub fn jac(p: &Poly, q: &Poly) -> Poly {
    &(&p.partial(Var::X) * &q.partial(Var::Y)) - &(&p.partial(Var::Y) * &q.partial(Var::X))
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// Product with denominators cleared once per operand: integer coefficient
// accumulation avoids a gcd per term product, which dominates otherwise.
impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = self.single_term() {
            return rhs.mul_term(&m, c);
        }
        if let Some((m, c)) = rhs.single_term() {
            return self.mul_term(&m, c);
        }
        let (pa, da) = int_cleared(self);
        let (qa, db) = int_cleared(rhs);
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &pa {
            for (m2, c2) in &qa {
                let m = m1.checked_mul(m2);
                let prod = c1 * c2;
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                }
            }
        }
        let denom = da * db;
        let mut terms = BTreeMap::new();
        for (m, c) in acc {
            if !c.is_zero() {
                terms.insert(m, BigRational::new(c, denom.clone()));
            }
        }
        Poly { terms }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn int_cleared(p: &Poly) -> (Vec<(Monomial, BigInt)>, BigInt) {
    let mut d = BigInt::one();
    for c in p.terms.values() {
        d = d.lcm(c.denom());
    }
    let v = p
        .terms
        .iter()
        .map(|(m, c)| (*m, c.numer() * (&d / c.denom())))
        .collect();
    (v, d)
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

impl Poly {
    /// Parse the documented grammar: terms joined by `+`/`-`; a term is an
    /// optional rational coefficient and variable powers, `*` optional.
    pub fn parse(text: &str) -> Result<Poly> {
        Parser {
            s: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }

    /// Render with the given variable names (used for u,v witnesses and
    /// univariate certificates).
    pub fn render_named(&self, xn: &str, yn: &str) -> String {
        let mut out = String::new();
        self.fmt_with(&mut out, xn, yn).expect("string write");
        out
    }

    fn fmt_with<W: fmt::Write>(&self, f: &mut W, xn: &str, yn: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &Rat)> = self.terms.iter().collect();
        // Display order: lexicographic with x dominant, descending.
        terms.sort_by(|a, b| (b.0.i, b.0.j).cmp(&(a.0.i, a.0.j)));
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                let mut lead = false;
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    lead = true;
                }
                if m.i > 0 {
                    if lead {
                        f.write_str("*")?;
                    }
                    f.write_str(xn)?;
                    if m.i > 1 {
                        write!(f, "^{}", m.i)?;
                    }
                    lead = true;
                }
                if m.j > 0 {
                    if lead {
                        f.write_str("*")?;
                    }
                    f.write_str(yn)?;
                    if m.j > 1 {
                        write!(f, "^{}", m.j)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x", "y")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn parse(mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = if first {
                match self.peek() {
                    Some(b'+') => {
                        self.bump();
                        false
                    }
                    Some(b'-') => {
                        self.bump();
                        true
                    }
                    _ => false,
                }
            } else {
                match self.peek() {
                    None => break,
                    Some(b'+') => {
                        self.bump();
                        false
                    }
                    Some(b'-') => {
                        self.bump();
                        true
                    }
                    _ => return self.err("expected '+' or '-' between terms"),
                }
            };
            first = false;
            let term = self.parse_term()?;
            if negative {
                acc -= &term;
            } else {
                acc += &term;
            }
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Poly> {
        let mut coef = Rat::one();
        let mut i: u64 = 0;
        let mut j: u64 = 0;
        let mut have_factor = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') => {
                    self.bump();
                    i += self.parse_exponent()?;
                    have_factor = true;
                }
                Some(b'y') => {
                    self.bump();
                    j += self.parse_exponent()?;
                    have_factor = true;
                }
                Some(c) if c.is_ascii_digit() => {
                    coef *= self.parse_rational()?;
                    have_factor = true;
                }
                _ => {
                    if !have_factor {
                        return self.err("expected a coefficient or variable");
                    }
                    return self.err("expected a factor");
                }
            }
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    // a factor must follow
                }
                Some(b'x') | Some(b'y') => {}
                Some(c) if c.is_ascii_digit() => {}
                _ => break,
            }
        }
        if i > DEGREE_CAP as u64 || j > DEGREE_CAP as u64 {
            return self.err("exponent exceeds degree cap");
        }
        Ok(Poly::monomial(Monomial::new(i as u32, j as u32), coef))
    }

    fn parse_exponent(&mut self) -> Result<u64> {
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.bump();
            self.skip_ws();
            let n = self.parse_uint()?;
            if n > DEGREE_CAP as u64 {
                return self.err("exponent exceeds degree cap");
            }
            Ok(n)
        } else {
            Ok(1)
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        digits.parse::<u64>().or_else(|_| self.err("integer too large"))
    }

    fn parse_bigint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(digits.parse::<BigInt>().expect("digit run"))
    }

    fn parse_rational(&mut self) -> Result<Rat> {
        let numer = self.parse_bigint()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.bump();
            self.skip_ws();
            let denom = self.parse_bigint()?;
            if denom.is_zero() {
                return self.err("zero denominator");
            }
            Ok(BigRational::new(numer, denom))
        } else {
            Ok(BigRational::from_integer(numer))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn add_cancellation() {
        assert_eq!(&p("x + y") + &p("x - y"), p("2*x"));
    }

    #[test]
    fn add_identity() {
        let q = p("3*x^2*y - 1/2");
        assert_eq!(&q + &Poly::zero(), q);
    }

    #[test]
    fn add_disjoint_supports() {
        assert_eq!(&p("x^2") + &p("y^2"), p("x^2 + y^2"));
    }

    #[test]
    fn mul_difference_of_squares() {
        assert_eq!(&p("x + y") * &p("x - y"), p("x^2 - y^2"));
    }

    #[test]
    fn mul_identity() {
        let q = p("x^3 - 2/7*y + 5");
        assert_eq!(&q * &Poly::one(), q);
    }

    #[test]
    fn mul_schoolbook_expansion() {
        // (x + y^2)^2 expanded by hand: x^2 + 2xy^2 + y^4.
        let expected = Poly::from_terms([
            (Monomial::new(2, 0), rat_int(1)),
            (Monomial::new(1, 2), rat_int(2)),
            (Monomial::new(0, 4), rat_int(1)),
        ]);
        assert_eq!(&p("x + y^2") * &p("x + y^2"), expected);
    }

    #[test]
    fn partials() {
        assert_eq!(p("x + y^2").partial(Var::X), Poly::one());
        assert_eq!(p("x + y^2").partial(Var::Y), p("2*y"));
        assert_eq!(p("x^3*y^2").partial(Var::Y), p("2*x^3*y"));
    }

    #[test]
    fn jacobian_values() {
        assert_eq!(jac(&p("x + y^2"), &p("y")), Poly::one());
        assert_eq!(jac(&p("x + y"), &p("x - y")), Poly::constant(rat_int(-2)));
        let q = p("x^2*y - 3*x + 1/3");
        assert_eq!(jac(&q, &q), Poly::zero());
    }

    #[test]
    fn substitution() {
        // alpha fixes x + y
        assert_eq!(p("x + y").substitute(&Poly::y(), &Poly::x()), p("x + y"));
        // x^2 at x -> x + y^2 (hand-expanded oracle)
        assert_eq!(
            p("x^2").substitute(&p("x + y^2"), &Poly::y()),
            p("x^2 + 2*x*y^2 + y^4")
        );
        // identity substitution
        let q = p("x^3*y - 1/2*x + 7*y^2");
        assert_eq!(q.substitute(&Poly::x(), &Poly::y()), q);
    }

    #[test]
    fn leading_forms() {
        assert_eq!(p("x + y^2").leading_form().unwrap(), p("y^2"));
        assert_eq!(p("x^2 + x*y + 3").leading_form().unwrap(), p("x^2 + x*y"));
        assert_eq!(p("5").leading_form().unwrap(), p("5"));
        assert_eq!(Poly::zero().leading_form(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            p("x + y^2"),
            Poly::from_terms([
                (Monomial::new(1, 0), rat_int(1)),
                (Monomial::new(0, 2), rat_int(1)),
            ])
        );
        assert_eq!(
            p("-1/2*x*y + 3"),
            Poly::from_terms([
                (Monomial::new(1, 1), rat(-1, 2)),
                (Monomial::new(0, 0), rat_int(3)),
            ])
        );
        assert!(matches!(Poly::parse("x^"), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("x ++ y"), Err(Error::Syntax { .. })));
        assert!(matches!(Poly::parse("1/0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn parse_error_position() {
        match Poly::parse("x^") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn render_canonical() {
        assert_eq!(p("2*x*y^2 - 1/2 + x^2").to_string(), "x^2 + 2*x*y^2 - 1/2");
        assert_eq!(p("y - x^2 - x").to_string(), "-x^2 - x + y");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("x - y^2").to_string(), "x - y^2");
    }

    #[test]
    fn render_parse_roundtrip_simple() {
        for s in ["x^2 + 2*x*y^2 - 1/2", "-x + y", "0", "7", "x*y", "1/3*y^4 - x"] {
            let q = p(s);
            assert_eq!(Poly::parse(&q.to_string()).unwrap(), q);
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let q = p("x - 2*y + 1");
        let mut acc = Poly::one();
        for _ in 0..5 {
            acc = &acc * &q;
        }
        assert_eq!(q.pow(5), acc);
    }
}
