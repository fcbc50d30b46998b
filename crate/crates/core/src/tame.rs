//! Tame decomposition of plane automorphisms into affine and triangular
//! (de Jonquieres) factors, factor-wise inversion, and constructive
//! classification of involutions up to conjugation by the exchange
//! involution alpha.
//!
//! Decomposition peels leading forms: while some component has degree > 1,
//! the larger-degree component's leading form must be a scalar multiple of a
//! power of the smaller one's, and subtracting that multiple strictly drops
//! the degree. A stall on a map whose Jacobian is a nonzero constant is
//! reported as `JCCandidate` and never silently ignored: by Jung-van der
//! Kulk every plane automorphism is tame, so such a stall would exhibit a
//! Jacobian-conjecture counterexample.

use num::{One, Signed, Zero};

use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::poly::{rat, Monomial, Poly, Rat};

/// A tame factor: an invertible affine map or a triangular map
/// x -> a*x + p(y), y -> c*y + d with a, c nonzero (the additive constant of
/// the x-image is absorbed into p).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Elementary {
    Affine {
        m: [[Rat; 2]; 2],
        t: [Rat; 2],
    },
    Triangular {
        a: Rat,
        c: Rat,
        d: Rat,
        /// Coefficients of p(y), dense, low-to-high.
        p: Vec<Rat>,
    },
}

fn det(m: &[[Rat; 2]; 2]) -> Rat {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

impl Elementary {
    pub fn affine(m: [[Rat; 2]; 2], t: [Rat; 2]) -> Self {
        assert!(!det(&m).is_zero(), "affine factor must be invertible");
        Elementary::Affine { m, t }
    }

    pub fn triangular(a: Rat, c: Rat, d: Rat, mut p: Vec<Rat>) -> Self {
        assert!(!a.is_zero() && !c.is_zero(), "triangular factor must be invertible");
        while p.last().is_some_and(Rat::is_zero) {
            p.pop();
        }
        Elementary::Triangular { a, c, d, p }
    }

    /// The exchange map x <-> y as an affine factor.
    pub fn swap() -> Self {
        Elementary::affine(
            [
                [Rat::zero(), Rat::one()],
                [Rat::one(), Rat::zero()],
            ],
            [Rat::zero(), Rat::zero()],
        )
    }

    pub fn translation(t: [Rat; 2]) -> Self {
        Elementary::affine([[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]], t)
    }

    pub fn to_endo(&self) -> Endo {
        match self {
            Elementary::Affine { m, t } => Endo::new(
                Poly::from_terms([
                    (Monomial::new(1, 0), m[0][0].clone()),
                    (Monomial::new(0, 1), m[0][1].clone()),
                    (Monomial::new(0, 0), t[0].clone()),
                ]),
                Poly::from_terms([
                    (Monomial::new(1, 0), m[1][0].clone()),
                    (Monomial::new(0, 1), m[1][1].clone()),
                    (Monomial::new(0, 0), t[1].clone()),
                ]),
            ),
            Elementary::Triangular { a, c, d, p } => Endo::new(
                Poly::from_terms(
                    std::iter::once((Monomial::new(1, 0), a.clone())).chain(
                        p.iter()
                            .enumerate()
                            .map(|(k, ck)| (Monomial::new(0, k as u32), ck.clone())),
                    ),
                ),
                Poly::from_terms([
                    (Monomial::new(0, 1), c.clone()),
                    (Monomial::new(0, 0), d.clone()),
                ]),
            ),
        }
    }

    pub fn inverse(&self) -> Elementary {
        match self {
            Elementary::Affine { m, t } => {
                let dt = det(m);
                let mi = [
                    [&m[1][1] / &dt, -(&m[0][1] / &dt)],
                    [-(&m[1][0] / &dt), &m[0][0] / &dt],
                ];
                let ti = [
                    -(&(&mi[0][0] * &t[0]) + &(&mi[0][1] * &t[1])),
                    -(&(&mi[1][0] * &t[0]) + &(&mi[1][1] * &t[1])),
                ];
                Elementary::Affine { m: mi, t: ti }
            }
            Elementary::Triangular { a, c, d, p } => {
                // y = (y' - d)/c, x = (x' - p((y' - d)/c))/a
                let arg = Poly::from_terms([
                    (Monomial::new(0, 1), Rat::one() / c),
                    (Monomial::new(0, 0), -(d / c)),
                ]);
                let p_poly = Poly::from_terms(
                    p.iter()
                        .enumerate()
                        .map(|(k, ck)| (Monomial::new(0, k as u32), ck.clone())),
                );
                let comp = p_poly.substitute(&Poly::x(), &arg).scale(&(-(Rat::one() / a)));
                let coeffs = univariate_y_coeffs(&comp).expect("univariate in y");
                Elementary::triangular(
                    Rat::one() / a,
                    Rat::one() / c,
                    -(d / c),
                    coeffs,
                )
            }
        }
    }

    /// The (constant) Jacobian of the factor.
    pub fn jacobian(&self) -> Rat {
        match self {
            Elementary::Affine { m, .. } => det(m),
            Elementary::Triangular { a, c, .. } => a * c,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Elementary::Affine { m, t } => {
                m[0][0].is_one()
                    && m[1][1].is_one()
                    && m[0][1].is_zero()
                    && m[1][0].is_zero()
                    && t[0].is_zero()
                    && t[1].is_zero()
            }
            Elementary::Triangular { a, c, d, p } => {
                a.is_one() && c.is_one() && d.is_zero() && p.is_empty()
            }
        }
    }

    /// View as an affine map when possible (triangular with deg p <= 1).
    fn as_affine(&self) -> Option<([[Rat; 2]; 2], [Rat; 2])> {
        match self {
            Elementary::Affine { m, t } => Some((m.clone(), t.clone())),
            Elementary::Triangular { a, c, d, p } => {
                if p.len() > 2 {
                    return None;
                }
                let p0 = p.first().cloned().unwrap_or_else(Rat::zero);
                let p1 = p.get(1).cloned().unwrap_or_else(Rat::zero);
                Some((
                    [[a.clone(), p1], [Rat::zero(), c.clone()]],
                    [p0, d.clone()],
                ))
            }
        }
    }

    /// View as a triangular map when possible (affine with zero x-coefficient
    /// in the y-image).
    fn as_triangular(&self) -> Option<(Rat, Rat, Rat, Vec<Rat>)> {
        match self {
            Elementary::Triangular { a, c, d, p } => {
                Some((a.clone(), c.clone(), d.clone(), p.clone()))
            }
            Elementary::Affine { m, t } => {
                if !m[1][0].is_zero() {
                    return None;
                }
                let mut p = vec![t[0].clone(), m[0][1].clone()];
                while p.last().is_some_and(Rat::is_zero) {
                    p.pop();
                }
                Some((m[0][0].clone(), m[1][1].clone(), t[1].clone(), p))
            }
        }
    }
}

fn univariate_y_coeffs(p: &Poly) -> Option<Vec<Rat>> {
    let mut out: Vec<Rat> = Vec::new();
    for (m, c) in p.terms() {
        if m.i != 0 {
            return None;
        }
        let j = m.j as usize;
        if out.len() <= j {
            out.resize(j + 1, Rat::zero());
        }
        out[j] = c.clone();
    }
    while out.last().is_some_and(Rat::is_zero) {
        out.pop();
    }
    Some(out)
}

fn affine_from_endo(e: &Endo) -> Option<Elementary> {
    let coeff = |p: &Poly, i: u32, j: u32| p.coeff(&Monomial::new(i, j));
    if e.p().degree().unwrap_or(0) > 1 || e.q().degree().unwrap_or(0) > 1 {
        return None;
    }
    let m = [
        [coeff(e.p(), 1, 0), coeff(e.p(), 0, 1)],
        [coeff(e.q(), 1, 0), coeff(e.q(), 0, 1)],
    ];
    if det(&m).is_zero() {
        return None;
    }
    let t = [coeff(e.p(), 0, 0), coeff(e.q(), 0, 0)];
    Some(Elementary::Affine { m, t })
}

fn triangular_from_endo(e: &Endo) -> Option<Elementary> {
    // Q = c y + d
    let mut c = Rat::zero();
    let mut d = Rat::zero();
    for (m, v) in e.q().terms() {
        match (m.i, m.j) {
            (0, 1) => c = v.clone(),
            (0, 0) => d = v.clone(),
            _ => return None,
        }
    }
    // P = a x + p(y)
    let mut a = Rat::zero();
    let mut p: Vec<Rat> = Vec::new();
    for (m, v) in e.p().terms() {
        match (m.i, m.j) {
            (1, 0) => a = v.clone(),
            (0, j) => {
                let j = j as usize;
                if p.len() <= j {
                    p.resize(j + 1, Rat::zero());
                }
                p[j] = v.clone();
            }
            _ => return None,
        }
    }
    if a.is_zero() || c.is_zero() {
        return None;
    }
    Some(Elementary::triangular(a, c, d, p))
}

fn elementary_from_endo(e: &Endo) -> Option<Elementary> {
    affine_from_endo(e).or_else(|| triangular_from_endo(e))
}

/// Outermost-first factor list; composing left to right reproduces the
/// source map exactly.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub factors: Vec<Elementary>,
}

impl Factorization {
    pub fn compose(&self) -> Endo {
        let mut acc = Endo::identity();
        for e in &self.factors {
            acc = acc.compose(&e.to_endo());
        }
        acc
    }

    /// The inverse map, composed factor-wise: reversed, inverted factors.
    pub fn inverse_endo(&self) -> Endo {
        let mut acc = Endo::identity();
        for e in self.factors.iter().rev() {
            acc = acc.compose(&e.inverse().to_endo());
        }
        acc
    }

    /// Product of the factors' constant Jacobians; equals the Jacobian of
    /// the composed map by the chain rule.
    pub fn jacobian(&self) -> Rat {
        self.factors
            .iter()
            .fold(Rat::one(), |acc, e| acc * e.jacobian())
    }
}

fn merge_pair(outer: &Elementary, inner: &Elementary) -> Option<Elementary> {
    if outer.as_affine().is_some() && inner.as_affine().is_some() {
        let e = outer.to_endo().compose(&inner.to_endo());
        return affine_from_endo(&e);
    }
    if outer.as_triangular().is_some() && inner.as_triangular().is_some() {
        let e = outer.to_endo().compose(&inner.to_endo());
        return triangular_from_endo(&e);
    }
    None
}

/// Drop identity factors and merge adjacent factors that lie in a common
/// factor group, until the word strictly alternates.
fn normalize_word(factors: Vec<Elementary>) -> Vec<Elementary> {
    let mut word = factors;
    loop {
        let mut changed = false;
        let mut out: Vec<Elementary> = Vec::new();
        for e in word {
            if e.is_identity() {
                changed = true;
                continue;
            }
            if let Some(last) = out.last() {
                if let Some(merged) = merge_pair(last, &e) {
                    out.pop();
                    if !merged.is_identity() {
                        out.push(merged);
                    }
                    changed = true;
                    continue;
                }
            }
            out.push(e);
        }
        word = out;
        if !changed {
            return word;
        }
    }
}

/// Tame decomposition. On a stall, reports `NotAnAutomorphism` with a
/// diagnostic, or `JCCandidate` when the input had a constant nonzero
/// Jacobian.
pub fn decompose(f: &Endo) -> Result<Factorization> {
    let original = f.clone();
    let stall = |detail: String| -> Error {
        if original.is_jacobian_unit() {
            Error::JCCandidate {
                p: original.p().to_string(),
                q: original.q().to_string(),
            }
        } else {
            Error::NotAnAutomorphism { detail }
        }
    };

    let mut g = f.clone();
    // Inverses of the peeled-off factors, innermost last.
    let mut tail: Vec<Elementary> = Vec::new();
    let limit = 8 * (f.degree() as usize) + 32;
    let mut steps = 0usize;
    loop {
        steps += 1;
        assert!(steps <= limit, "tame decomposition failed to terminate");
        let dp = match g.p().degree() {
            Some(d) => d,
            None => return Err(stall("image of x is zero".into())),
        };
        let dq = match g.q().degree() {
            Some(d) => d,
            None => return Err(stall("image of y is zero".into())),
        };
        if dp <= 1 && dq <= 1 {
            let aff = affine_from_endo(&g)
                .ok_or_else(|| stall("affine part is singular".into()))?;
            let mut factors = Vec::new();
            if !aff.is_identity() {
                factors.push(aff);
            }
            factors.extend(tail.into_iter().rev());
            let fact = Factorization {
                factors: normalize_word(factors),
            };
            debug_assert_eq!(fact.compose(), original);
            return Ok(fact);
        }
        if dp < dq {
            // exchange the components; alpha is self-inverse
            g = g.compose(&Endo::alpha());
            tail.push(Elementary::swap());
            continue;
        }
        if dq == 0 {
            return Err(stall("image of y is constant".into()));
        }
        if dp % dq != 0 {
            return Err(stall(format!(
                "degree stall: deg P = {dp} is not a multiple of deg Q = {dq}"
            )));
        }
        let m = dp / dq;
        let lp = g.p().leading_form().expect("deg >= 1");
        let lq = g.q().leading_form().expect("deg >= 1");
        let lqm = lq.pow(m);
        let (mlp, clp) = lp.leading_term().expect("nonzero");
        let (mlq, clq) = lqm.leading_term().expect("nonzero");
        if mlp != mlq {
            return Err(stall(format!(
                "degree stall: leading forms not proportional at degrees ({dp},{dq})"
            )));
        }
        let c = clp / clq;
        if lp != lqm.scale(&c) {
            return Err(stall(format!(
                "degree stall: leading forms not proportional at degrees ({dp},{dq})"
            )));
        }
        // Peel: P := P - c Q^m = (g o e)(x) for e = (x - c y^m, y); record
        // e^{-1} = (x + c y^m, y).
        let newp = g.p() - &g.q().pow(m).scale(&c);
        debug_assert!(newp.degree().unwrap_or(0) < dp);
        g = Endo::new(newp, g.q().clone());
        let mut pc = vec![Rat::zero(); m as usize + 1];
        pc[m as usize] = c;
        tail.push(Elementary::triangular(Rat::one(), Rat::one(), Rat::zero(), pc));
    }
}

/// Above this degree product, verifying f o f^{-1} = id by brute composition
/// is replaced by factor-wise checks (each elementary times its inverse).
const FULL_CHECK_LIMIT: u64 = 600;

/// Inverse automorphism via factor-wise inversion of the tame decomposition.
pub fn invert(f: &Endo) -> Result<Endo> {
    let fact = decompose(f)?;
    let inv = fact.inverse_endo();
    for e in &fact.factors {
        debug_assert!(e.to_endo().compose(&e.inverse().to_endo()).is_identity());
    }
    if (f.degree() as u64) * (inv.degree() as u64) <= FULL_CHECK_LIMIT {
        assert!(f.compose(&inv).is_identity(), "inverse failed f o f^-1 = id");
        assert!(inv.compose(f).is_identity(), "inverse failed f^-1 o f = id");
    }
    Ok(inv)
}

pub fn is_automorphism(f: &Endo) -> bool {
    decompose(f).is_ok()
}

/// Conjugacy class of an involution: the identity, the antipode (-x, -y),
/// or a conjugate g^{-1} alpha g of the exchange involution.
#[derive(Clone, Debug)]
pub enum InvolutionClass {
    Identity,
    MinusIdentity,
    AlphaConjugate { conjugator: Endo },
}

/// Degree up to which is_involution is checked by direct composition.
const BRUTE_INVOLUTION_DEG: u32 = 16;

/// Exact involution test that stays feasible for high-degree conjugates:
/// small maps are squared directly, large ones are classified (a successful
/// classification proves gamma = w^{-1} tau w with tau^2 = id).
pub fn involution_verified(gamma: &Endo) -> bool {
    if gamma.degree() <= BRUTE_INVOLUTION_DEG {
        return gamma.is_involution();
    }
    classify_involution(gamma).is_ok()
}

struct Conjugation {
    /// Outermost-first word for w; the running invariant is
    /// gamma = w^{-1} o cur o w.
    word: Vec<Elementary>,
}

impl Conjugation {
    fn new() -> Self {
        Conjugation { word: Vec::new() }
    }

    /// Record cur' = u o cur o u^{-1}.
    fn push(&mut self, u: Elementary) {
        self.word.insert(0, u);
    }

    fn endo(&self) -> Endo {
        let mut acc = Endo::identity();
        for e in &self.word {
            acc = acc.compose(&e.to_endo());
        }
        acc
    }

    fn inverse_endo(&self) -> Endo {
        let mut acc = Endo::identity();
        for e in self.word.iter().rev() {
            acc = acc.compose(&e.inverse().to_endo());
        }
        acc
    }
}

fn conjugate_elem(u: &Elementary, cur: &Elementary) -> Option<Elementary> {
    let e = u
        .to_endo()
        .compose(&cur.to_endo())
        .compose(&u.inverse().to_endo());
    elementary_from_endo(&e)
}

/// Primitive integer kernel vector of a singular rational 2x2 matrix.
fn kernel_vector(m: [[Rat; 2]; 2]) -> [Rat; 2] {
    debug_assert!(det(&m).is_zero());
    let row = if !m[0][0].is_zero() || !m[0][1].is_zero() {
        [m[0][0].clone(), m[0][1].clone()]
    } else {
        [m[1][0].clone(), m[1][1].clone()]
    };
    debug_assert!(!row[0].is_zero() || !row[1].is_zero());
    normalize_vec([-row[1].clone(), row[0].clone()])
}

fn normalize_vec(v: [Rat; 2]) -> [Rat; 2] {
    use num::bigint::BigInt;
    use num::Integer;
    let d: BigInt = v[0].denom().lcm(v[1].denom());
    let n0 = v[0].numer() * (&d / v[0].denom());
    let n1 = v[1].numer() * (&d / v[1].denom());
    let g = n0.gcd(&n1);
    let (mut n0, mut n1) = if g.is_zero() { (n0, n1) } else { (&n0 / &g, &n1 / &g) };
    let lead_negative = if !n0.is_zero() {
        n0.is_negative()
    } else {
        n1.is_negative()
    };
    if lead_negative {
        n0 = -n0;
        n1 = -n1;
    }
    [
        Rat::from_integer(n0),
        Rat::from_integer(n1),
    ]
}

fn primitive_matrix(m: [[Rat; 2]; 2]) -> [[Rat; 2]; 2] {
    use num::bigint::BigInt;
    use num::Integer;
    let mut d = BigInt::one();
    for row in &m {
        for v in row {
            d = d.lcm(v.denom());
        }
    }
    let ints: Vec<BigInt> = m
        .iter()
        .flatten()
        .map(|v| v.numer() * (&d / v.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    let sign = ints
        .iter()
        .find(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .unwrap_or(false);
    let scale = if sign { -g } else { g };
    let vals: Vec<Rat> = ints.iter().map(|v| Rat::from_integer(v / &scale)).collect();
    [
        [vals[0].clone(), vals[1].clone()],
        [vals[2].clone(), vals[3].clone()],
    ]
}

/// Classify an affine involution (given as an Elementary with unit square),
/// pushing the needed conjugations. Returns the final class tag.
fn classify_affine_residual(
    cur: Elementary,
    conj: &mut Conjugation,
) -> Result<InvolutionClassTag> {
    let (mut m, mut t) = cur.as_affine().expect("affine residual");
    // Strip the translation: conjugating by the shift v -> v - t/2 moves an
    // affine involution onto its linear part.
    if !t[0].is_zero() || !t[1].is_zero() {
        let half = rat(-1, 2);
        let u = Elementary::translation([&t[0] * &half, &t[1] * &half]);
        let cur2 = conjugate_elem(&u, &Elementary::Affine { m: m.clone(), t: t.clone() })
            .ok_or(Error::NotInvolution)?;
        let (m2, t2) = cur2.as_affine().expect("still affine");
        if !t2[0].is_zero() || !t2[1].is_zero() {
            return Err(Error::NotInvolution);
        }
        conj.push(u);
        m = m2;
        t = t2;
    }
    let _ = t;
    let is_id = m[0][0].is_one() && m[1][1].is_one() && m[0][1].is_zero() && m[1][0].is_zero();
    if is_id {
        return Ok(InvolutionClassTag::Identity);
    }
    let minus_one = -Rat::one();
    let is_minus = m[0][0] == minus_one && m[1][1] == minus_one && m[0][1].is_zero() && m[1][0].is_zero();
    if is_minus {
        return Ok(InvolutionClassTag::MinusIdentity);
    }
    // Eigenvalues are {1, -1}: build G = S*T with S = [v+ | v-] and
    // T = [[1,1],[1,-1]]; then G alpha G^{-1} equals the linear part, so
    // conjugating by G lands exactly on alpha.
    let vp = kernel_vector([
        [&m[0][0] - &Rat::one(), m[0][1].clone()],
        [m[1][0].clone(), &m[1][1] - &Rat::one()],
    ]);
    let vm = kernel_vector([
        [&m[0][0] + &Rat::one(), m[0][1].clone()],
        [m[1][0].clone(), &m[1][1] + &Rat::one()],
    ]);
    let g = primitive_matrix([
        [&vp[0] + &vm[0], &vp[0] - &vm[0]],
        [&vp[1] + &vm[1], &vp[1] - &vm[1]],
    ]);
    let u = Elementary::affine(g, [Rat::zero(), Rat::zero()]);
    let conjugated = conjugate_elem(&u, &Elementary::Affine { m, t: [Rat::zero(), Rat::zero()] })
        .ok_or(Error::NotInvolution)?;
    if conjugated.to_endo() != Endo::alpha() {
        return Err(Error::NotInvolution);
    }
    conj.push(u);
    Ok(InvolutionClassTag::Alpha)
}

enum InvolutionClassTag {
    Identity,
    MinusIdentity,
    Alpha,
}

fn classify_triangular_residual(
    cur: Elementary,
    conj: &mut Conjugation,
) -> Result<InvolutionClassTag> {
    let mut cur = cur;
    let (_, c, d, _) = cur.as_triangular().expect("triangular residual");
    // Kill d when c = -1 by shifting y; c = 1 forces d = 0 for involutions.
    if !d.is_zero() {
        if c == -Rat::one() {
            let u = Elementary::translation([Rat::zero(), -(&d / &rat(2, 1))]);
            cur = conjugate_elem(&u, &cur).ok_or(Error::NotInvolution)?;
            let (_, _, d2, _) = cur.as_triangular().ok_or(Error::NotInvolution)?;
            if !d2.is_zero() {
                return Err(Error::NotInvolution);
            }
            conj.push(u);
        } else {
            return Err(Error::NotInvolution);
        }
    }
    // Kill p by conjugating with x -> x +- p(y)/2.
    let (a, c, _, p) = cur.as_triangular().expect("triangular");
    if !p.is_empty() {
        let half: Vec<Rat> = p.iter().map(|v| v / rat(2, 1)).collect();
        let mut done = false;
        for q in [
            half.clone(),
            half.iter().map(|v| -v.clone()).collect::<Vec<_>>(),
        ] {
            let u = Elementary::triangular(Rat::one(), Rat::one(), Rat::zero(), q);
            if let Some(next) = conjugate_elem(&u, &cur) {
                if let Some((_, _, _, p2)) = next.as_triangular() {
                    if p2.iter().all(Rat::is_zero) {
                        cur = next;
                        conj.push(u);
                        done = true;
                        break;
                    }
                }
            }
        }
        if !done {
            return Err(Error::NotInvolution);
        }
    }
    // Residual is the diagonal linear map (a x, c y).
    let diag = Elementary::affine(
        [[a, Rat::zero()], [Rat::zero(), c]],
        [Rat::zero(), Rat::zero()],
    );
    let _ = cur;
    classify_affine_residual(diag, conj)
}

/// Classify an involution as Identity, MinusIdentity, or a conjugate of
/// alpha with an explicit conjugator g satisfying gamma = g^{-1} alpha g.
///
/// The word of the tame decomposition is shortened by cyclic conjugation
/// until at most one factor remains (finite-order elements of the amalgam
/// conjugate into a factor), then the remaining affine or triangular
/// involution is normalized by a closed-form case analysis. The conjugator
/// invariant is asserted on every call; for inputs too large to square
/// directly, a successful classification is itself the involution proof.
pub fn classify_involution(gamma: &Endo) -> Result<InvolutionClass> {
    if gamma.is_identity() {
        return Ok(InvolutionClass::Identity);
    }
    if *gamma == Endo::minus_identity() {
        return Ok(InvolutionClass::MinusIdentity);
    }
    if *gamma == Endo::alpha() {
        return Ok(InvolutionClass::AlphaConjugate {
            conjugator: Endo::identity(),
        });
    }
    let verified_small = gamma.degree() <= BRUTE_INVOLUTION_DEG;
    if verified_small && !gamma.is_involution() {
        return Err(Error::NotInvolution);
    }
    let fact = match decompose(gamma) {
        Ok(f) => f,
        Err(Error::NotAnAutomorphism { .. }) => return Err(Error::NotInvolution),
        Err(e) => return Err(e),
    };
    let mut word = normalize_word(fact.factors);
    let mut conj = Conjugation::new();
    let limit = 2 * word.len() + 4;
    let mut rotations = 0usize;
    while word.len() >= 2 {
        let first = word[0].clone();
        let last = word.last().expect("nonempty");
        if merge_pair(last, &first).is_none() {
            // Cyclically reduced of length >= 2: infinite order in the
            // amalgam, so not an involution. If the input was already
            // verified to square to the identity this contradicts the
            // amalgam structure and must abort loudly.
            assert!(
                !verified_small,
                "amalgam violation: verified involution failed to cyclically reduce"
            );
            return Err(Error::NotInvolution);
        }
        rotations += 1;
        assert!(
            rotations <= limit || !verified_small,
            "amalgam violation: involution word did not shorten within {limit} rotations"
        );
        if rotations > limit {
            return Err(Error::NotInvolution);
        }
        word.remove(0);
        word.push(first.clone());
        conj.push(first.inverse());
        word = normalize_word(word);
    }
    let tag = match word.pop() {
        None => InvolutionClassTag::Identity,
        Some(res) => {
            let res_endo = res.to_endo();
            if !res_endo.is_involution() {
                return Err(Error::NotInvolution);
            }
            if res.as_affine().is_some() {
                classify_affine_residual(res, &mut conj)?
            } else {
                classify_triangular_residual(res, &mut conj)?
            }
        }
    };
    let w = conj.endo();
    let w_inv = conj.inverse_endo();
    let target = match tag {
        InvolutionClassTag::Identity => Endo::identity(),
        InvolutionClassTag::MinusIdentity => Endo::minus_identity(),
        InvolutionClassTag::Alpha => Endo::alpha(),
    };
    // gamma = w^{-1} o target o w, exactly.
    let rebuilt = w_inv.compose(&target).compose(&w);
    assert!(
        rebuilt == *gamma,
        "classification conjugator is unsound: rebuilt {rebuilt} != input"
    );
    Ok(match tag {
        InvolutionClassTag::Identity => InvolutionClass::Identity,
        InvolutionClassTag::MinusIdentity => InvolutionClass::MinusIdentity,
        InvolutionClassTag::Alpha => InvolutionClass::AlphaConjugate { conjugator: w },
    })
}

/// The conjugator g with gamma = g^{-1} alpha g; errors with
/// `NotConjugateToAlpha` on the other two classes.
pub fn conjugate_to_alpha(gamma: &Endo) -> Result<Endo> {
    match classify_involution(gamma)? {
        InvolutionClass::AlphaConjugate { conjugator } => Ok(conjugator),
        _ => Err(Error::NotConjugateToAlpha),
    }
}
