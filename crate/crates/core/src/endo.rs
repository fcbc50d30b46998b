//! Endomorphisms of K[x,y] given by the image pair (P, Q).
//!
//! No Jacobian condition is assumed on a general `Endo`; the interesting
//! subclasses (involutions, maps with unit Jacobian, intertwining maps) are
//! tested by predicates. Composition follows (f o g)(p) = f(g(p)).

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::poly::{jac, rat, Monomial, Poly, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct Endo {
    p: Poly,
    q: Poly,
}

impl Endo {
    pub fn new(p: Poly, q: Poly) -> Self {
        Endo { p, q }
    }

    /// Image of x.
    pub fn p(&self) -> &Poly {
        &self.p
    }

    /// Image of y.
    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn identity() -> Self {
        Endo::new(Poly::x(), Poly::y())
    }

    /// The exchange involution: x -> y, y -> x.
    pub fn alpha() -> Self {
        Endo::new(Poly::y(), Poly::x())
    }

    /// x -> x, y -> -y.
    pub fn beta() -> Self {
        Endo::new(Poly::x(), -&Poly::y())
    }

    pub fn minus_identity() -> Self {
        Endo::new(-&Poly::x(), -&Poly::y())
    }

    pub fn is_identity(&self) -> bool {
        *self == Endo::identity()
    }

    /// max(deg P, deg Q); 0 when both images are constant.
    pub fn degree(&self) -> u32 {
        self.p
            .degree()
            .unwrap_or(0)
            .max(self.q.degree().unwrap_or(0))
    }

    /// Apply the ring map to an element: substitute x -> P, y -> Q.
    pub fn apply(&self, w: &Poly) -> Poly {
        w.substitute(&self.p, &self.q)
    }

    /// (self o inner): first inner, then self.
    pub fn compose(&self, inner: &Endo) -> Endo {
        Endo::new(self.apply(inner.p()), self.apply(inner.q()))
    }

    /// Jac(P, Q).
    pub fn jacobian(&self) -> Poly {
        jac(&self.p, &self.q)
    }

    /// True iff Jac(P, Q) is a nonzero constant.
    pub fn is_jacobian_unit(&self) -> bool {
        self.jacobian().as_constant().is_some_and(|c| !c.is_zero())
    }

    /// True iff self o self is the identity. The identity map itself is
    /// accepted (order dividing 2); callers needing order exactly 2 must
    /// exclude it separately.
    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    /// Parse `P = <poly>; Q = <poly>`, or one of the built-in names
    /// `alpha`, `beta`, `id`.
    pub fn parse(text: &str) -> Result<Endo> {
        match text.trim() {
            "alpha" => return Ok(Endo::alpha()),
            "beta" => return Ok(Endo::beta()),
            "id" => return Ok(Endo::identity()),
            _ => {}
        }
        let err = |msg: &str| Error::Syntax {
            pos: 0,
            msg: msg.to_string(),
        };
        let mut parts = text.splitn(2, ';');
        let first = parts.next().ok_or_else(|| err("expected 'P = ...; Q = ...'"))?;
        let second = parts
            .next()
            .ok_or_else(|| err("expected ';' separating P and Q"))?;
        let p = parse_assignment(first, "P")?;
        let q = parse_assignment(second, "Q")?;
        Ok(Endo::new(p, q))
    }
}

fn parse_assignment(part: &str, name: &str) -> Result<Poly> {
    let trimmed = part.trim();
    let rest = trimmed
        .strip_prefix(name)
        .ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("expected '{name} = <poly>', got '{trimmed}'"),
        })?
        .trim_start();
    let rhs = rest.strip_prefix('=').ok_or_else(|| Error::Syntax {
        pos: 0,
        msg: format!("expected '=' after {name}"),
    })?;
    Poly::parse(rhs)
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P = {}; Q = {}", self.p, self.q)
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endo({self})")
    }
}

/// True iff f gamma = delta f (both sides as compositions). With
/// gamma = delta this is the gamma-endomorphism test.
pub fn intertwines(f: &Endo, gamma: &Endo, delta: &Endo) -> Result<bool> {
    if !gamma.is_involution() || !delta.is_involution() {
        return Err(Error::NotInvolution);
    }
    Ok(f.compose(gamma) == delta.compose(f))
}

/// Decomposition of w into a symmetric and a skew-symmetric part with
/// respect to an involution eps: s = (w + eps(w))/2, k = (w - eps(w))/2.
pub struct SymSkewSplit {
    pub s: Poly,
    pub k: Poly,
    pub wrt: Endo,
}

pub fn sym_skew_split(w: &Poly, eps: &Endo) -> Result<SymSkewSplit> {
    if !eps.is_involution() {
        return Err(Error::NotInvolution);
    }
    let ew = eps.apply(w);
    let half = rat(1, 2);
    let s = (w + &ew).scale(&half);
    let k = (w - &ew).scale(&half);
    debug_assert_eq!(&(&s + &k), w);
    debug_assert_eq!(eps.apply(&s), s);
    debug_assert_eq!(eps.apply(&k), -&k);
    Ok(SymSkewSplit {
        s,
        k,
        wrt: eps.clone(),
    })
}

/// Closed form of Jac(x^i y^j + x^j y^i, x^k y^l + x^l y^k):
/// (li - kj)(x^{k+i-1} y^{j+l-1} - x^{j+l-1} y^{k+i-1})
///   + (ik - jl)(x^{i+l-1} y^{j+k-1} - x^{j+k-1} y^{i+l-1}).
/// Coefficients are evaluated first; a vanishing coefficient suppresses its
/// monomials, so the exponent-minus-one never underflows.
pub fn jac_parity_formula(i: u32, j: u32, k: u32, l: u32) -> Poly {
    let (i, j, k, l) = (i as i64, j as i64, k as i64, l as i64);
    let mut out = Poly::zero();
    let c1 = l * i - k * j;
    if c1 != 0 {
        out += &skew_pair(c1, (k + i - 1) as u32, (j + l - 1) as u32);
    }
    let c2 = i * k - j * l;
    if c2 != 0 {
        out += &skew_pair(c2, (i + l - 1) as u32, (j + k - 1) as u32);
    }
    out
}

/// c * (x^a y^b - x^b y^a); zero when a = b.
fn skew_pair(c: i64, a: u32, b: u32) -> Poly {
    if a == b {
        return Poly::zero();
    }
    let c = crate::poly::rat_int(c);
    Poly::from_terms([
        (Monomial::new(a, b), c.clone()),
        (Monomial::new(b, a), -c),
    ])
}

/// Symmetrize a polynomial with respect to alpha: w + alpha(w).
pub fn symmetrize(w: &Poly) -> Poly {
    w + &Endo::alpha().apply(w)
}

/// Skew part builder with respect to alpha: w - alpha(w).
pub fn skew_symmetrize(w: &Poly) -> Poly {
    w - &Endo::alpha().apply(w)
}

/// True iff alpha(w) = w.
pub fn is_alpha_symmetric(w: &Poly) -> bool {
    Endo::alpha().apply(w) == *w
}

/// True iff alpha(w) = -w.
pub fn is_alpha_skew(w: &Poly) -> bool {
    Endo::alpha().apply(w) == -w
}

/// Check a constant is a nonzero scalar.
pub fn nonzero_constant(p: &Poly) -> Option<Rat> {
    p.as_constant().filter(|c| !c.is_zero())
}

#[allow(unused_imports)]
use num::traits::Pow;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn e(s: &str) -> Endo {
        Endo::parse(s).unwrap()
    }

    #[test]
    fn compose_alpha_twice_is_identity() {
        let a = Endo::alpha();
        assert!(a.compose(&a).is_identity());
    }

    #[test]
    fn compose_alpha_with_triangular() {
        let f = e("P = x + y^2; Q = y");
        let got = Endo::alpha().compose(&f);
        assert_eq!(got, e("P = y + x^2; Q = x"));
    }

    #[test]
    fn compose_identity_neutral() {
        let f = e("P = x + y^2; Q = y");
        assert_eq!(f.compose(&Endo::identity()), f);
        assert_eq!(Endo::identity().compose(&f), f);
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Endo::alpha().apply(&p("x^2")), p("y^2"));
        assert_eq!(e("P = x + y^2; Q = y").apply(&Poly::x()), p("x + y^2"));
        // (x+y, x-y) applied to xy, by substitution: (x+y)(x-y) = x^2 - y^2
        assert_eq!(e("P = x + y; Q = x - y").apply(&p("x*y")), p("x^2 - y^2"));
    }

    #[test]
    fn jacobian_examples() {
        assert_eq!(e("P = x + y^2; Q = y").jacobian(), Poly::one());
        assert_eq!(
            e("P = x + y; Q = x - y").jacobian(),
            Poly::constant(rat_int(-2))
        );
        assert_eq!(e("P = x^2; Q = y").jacobian(), p("2*x"));
    }

    #[test]
    fn jacobian_unit_examples() {
        assert!(e("P = x + y^2; Q = y").is_jacobian_unit());
        assert!(!e("P = x^2; Q = y").is_jacobian_unit());
        assert!(!Endo::new(Poly::x(), Poly::zero()).is_jacobian_unit());
    }

    #[test]
    fn involution_examples() {
        assert!(Endo::alpha().is_involution());
        assert!(Endo::beta().is_involution());
        assert!(Endo::identity().is_involution());
        let f = e("P = x + y^2; Q = y");
        assert!(!f.is_involution());
        // its square, by the substitution oracle
        assert_eq!(f.compose(&f), e("P = x + 2*y^2; Q = y"));
    }

    #[test]
    fn intertwines_examples() {
        let f = e("P = x + y^2; Q = y");
        let b = Endo::beta();
        assert!(intertwines(&f, &b, &b).unwrap());
        let h = e("P = x + y; Q = x - y");
        let a = Endo::alpha();
        assert!(!intertwines(&h, &a, &a).unwrap());
        assert!(intertwines(&Endo::identity(), &a, &a).unwrap());
        assert_eq!(
            intertwines(&f, &e("P = x + y^2; Q = y"), &a),
            Err(Error::NotInvolution)
        );
    }

    #[test]
    fn sym_skew_split_examples() {
        let a = Endo::alpha();
        let split = sym_skew_split(&p("x^2"), &a).unwrap();
        assert_eq!(split.s, p("1/2*x^2 + 1/2*y^2"));
        assert_eq!(split.k, p("1/2*x^2 - 1/2*y^2"));

        let split = sym_skew_split(&p("x + y"), &a).unwrap();
        assert_eq!(split.s, p("x + y"));
        assert!(split.k.is_zero());

        let split = sym_skew_split(&p("y + x^3"), &Endo::beta()).unwrap();
        assert_eq!(split.s, p("x^3"));
        assert_eq!(split.k, p("y"));
    }

    #[test]
    fn sym_skew_split_idempotent() {
        let a = Endo::alpha();
        let w = p("x^3 - 2*x*y + y - 5");
        let split = sym_skew_split(&w, &a).unwrap();
        let again_s = sym_skew_split(&split.s, &a).unwrap();
        assert_eq!(again_s.s, split.s);
        assert!(again_s.k.is_zero());
        let again_k = sym_skew_split(&split.k, &a).unwrap();
        assert!(again_k.s.is_zero());
        assert_eq!(again_k.k, split.k);
    }

    #[test]
    fn parity_formula_examples() {
        // both arguments equal x + y
        assert!(jac_parity_formula(1, 0, 0, 1).is_zero());
        assert_eq!(jac_parity_formula(1, 0, 2, 0), p("2*y - 2*x"));
        assert!(jac_parity_formula(0, 0, 0, 0).is_zero());
    }

    #[test]
    fn parity_formula_exhaustive_up_to_8() {
        for i in 0..=8u32 {
            for j in 0..=8u32 {
                for k in 0..=8u32 {
                    for l in 0..=8u32 {
                        let a = Poly::from_terms([
                            (Monomial::new(i, j), rat_int(1)),
                            (Monomial::new(j, i), rat_int(1)),
                        ]);
                        let b = Poly::from_terms([
                            (Monomial::new(k, l), rat_int(1)),
                            (Monomial::new(l, k), rat_int(1)),
                        ]);
                        assert_eq!(
                            jac_parity_formula(i, j, k, l),
                            jac(&a, &b),
                            "mismatch at ({i},{j},{k},{l})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chain_rule_on_small_maps() {
        let f = e("P = x + y^2; Q = y");
        let g = e("P = 2*x + 3*y; Q = x + 2*y");
        let lhs = f.compose(&g).jacobian();
        let rhs = &f.apply(&g.jacobian()) * &f.jacobian();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_endo_formats() {
        assert_eq!(e("alpha"), Endo::alpha());
        assert_eq!(e("beta"), Endo::beta());
        assert_eq!(e("id"), Endo::identity());
        assert_eq!(
            e("P = x + y^2; Q = y"),
            Endo::new(p("x + y^2"), Poly::y())
        );
        assert!(Endo::parse("P = x").is_err());
        assert!(Endo::parse("Q = x; P = y").is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(
            e("P = x + y^2; Q = y").to_string(),
            "P = x + y^2; Q = y"
        );
        assert_eq!(Endo::beta().to_string(), "P = x; Q = -y");
    }
}
