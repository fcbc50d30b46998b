//! Subalgebra membership R in K[P,Q] with explicit witnesses, via Groebner
//! elimination in K[x,y,u,v], and the constructive univariate case R in K[A]
//! by leading-form peeling.
//!
//! The elimination order is a block order: monomials are compared first by
//! their {x,y} part (grlex) and then by their {u,v} part (grlex), so any
//! monomial containing x or y dominates every pure u,v monomial. The normal
//! form of R modulo the graph ideal <u - P, v - Q> then lies in K[u,v]
//! exactly when R is a member, and that normal form is the witness.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rat};

/// Total-degree guardrail for Buchberger intermediates. Witness extraction
/// (normal forms of members) is not capped by this: witness degrees can
/// legitimately exceed the basis degrees by a factor of the inverse degree.
pub const GROEBNER_DEGREE_CAP: u32 = 64;

/// Monomial in x, y, u, v.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono4 {
    pub e: [u32; 4],
}

impl Mono4 {
    pub fn one() -> Self {
        Mono4 { e: [0; 4] }
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().sum()
    }

    fn xy_key(&self) -> (u32, u32) {
        (self.e[0] + self.e[1], self.e[0])
    }

    fn uv_key(&self) -> (u32, u32) {
        (self.e[2] + self.e[3], self.e[2])
    }

    pub fn is_uv_only(&self) -> bool {
        self.e[0] == 0 && self.e[1] == 0
    }

    fn mul(&self, o: &Mono4) -> Mono4 {
        let mut e = [0u32; 4];
        for k in 0..4 {
            e[k] = self.e[k].checked_add(o.e[k]).expect("exponent overflow");
        }
        Mono4 { e }
    }

    fn divides(&self, o: &Mono4) -> bool {
        (0..4).all(|k| self.e[k] <= o.e[k])
    }

    fn div(&self, o: &Mono4) -> Mono4 {
        let mut e = [0u32; 4];
        for k in 0..4 {
            e[k] = self.e[k] - o.e[k];
        }
        Mono4 { e }
    }

    fn lcm(&self, o: &Mono4) -> Mono4 {
        let mut e = [0u32; 4];
        for k in 0..4 {
            e[k] = self.e[k].max(o.e[k]);
        }
        Mono4 { e }
    }
}

impl Ord for Mono4 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.xy_key(), self.uv_key()).cmp(&(other.xy_key(), other.uv_key()))
    }
}

impl PartialOrd for Mono4 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in K[x,y,u,v].
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Poly4 {
    terms: BTreeMap<Mono4, Rat>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Poly4::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0u32; 4];
        e[k] = 1;
        Poly4::term(Mono4 { e }, Rat::one())
    }

    pub fn term(m: Mono4, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly4 { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono4, &Rat)> {
        self.terms.iter()
    }

    /// Embed a bivariate polynomial in the x,y slots.
    pub fn from_xy(p: &Poly) -> Self {
        Poly4 {
            terms: p
                .terms()
                .map(|(m, c)| (Mono4 { e: [m.i, m.j, 0, 0] }, c.clone()))
                .collect(),
        }
    }

    /// Extract a bivariate polynomial from the u,v slots; `None` if any
    /// term involves x or y.
    pub fn to_uv(&self) -> Option<Poly> {
        if !self.terms.keys().all(Mono4::is_uv_only) {
            return None;
        }
        Some(Poly::from_terms(self.terms.iter().map(|(m, c)| {
            (Monomial::new(m.e[2], m.e[3]), c.clone())
        })))
    }

    pub fn leading(&self) -> Option<(Mono4, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.keys().map(Mono4::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Mono4, c: Rat) {
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

    fn sub_scaled(&mut self, other: &Poly4, m: &Mono4, c: &Rat) {
        for (mm, cc) in &other.terms {
            self.add_term(mm.mul(m), -(cc * c));
        }
    }

    fn make_monic(&mut self) {
        if let Some((_, lc)) = self.leading() {
            let lc = lc.clone();
            if !lc.is_one() {
                for c in self.terms.values_mut() {
                    *c /= lc.clone();
                }
            }
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = ["x", "y", "u", "v"];
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut s = String::new();
            if c.is_negative() {
                s.push_str(if parts.is_empty() { "-" } else { "- " });
            } else if !parts.is_empty() {
                s.push_str("+ ");
            }
            let mag = c.abs();
            let mut lead = false;
            if !mag.is_one() || m.degree() == 0 {
                s.push_str(&mag.to_string());
                lead = true;
            }
            for (k, name) in names.iter().enumerate() {
                if m.e[k] > 0 {
                    if lead {
                        s.push('*');
                    }
                    s.push_str(name);
                    if m.e[k] > 1 {
                        s.push_str(&format!("^{}", m.e[k]));
                    }
                    lead = true;
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }
}

/// Fully reduce `f` against `basis`; the basis must be monic. `cap`, when
/// present, bounds the total degree of any reducer product and aborts with
/// `DegreeCapExceeded` beyond it.
fn normal_form(mut f: Poly4, basis: &[Poly4], cap: Option<u32>) -> Result<Poly4> {
    let mut remainder = Poly4::zero();
    'outer: while let Some((lm, lc)) = f.leading() {
        for g in basis {
            let (glm, _) = g.leading().expect("nonzero basis element");
            if glm.divides(&lm) {
                let quot = lm.div(&glm);
                if let Some(cap) = cap {
                    let bound = quot.degree() + g.max_total_degree();
                    if bound > cap {
                        return Err(Error::DegreeCapExceeded { degree: bound, cap });
                    }
                }
                let coef = lc.clone();
                f.sub_scaled(g, &quot, &coef);
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the remainder
        let c = f.terms.remove(&lm).expect("leading present");
        remainder.terms.insert(lm, c);
    }
    Ok(remainder)
}

/// Reduced Groebner basis of the ideal generated by `gens` with respect to
/// the block elimination order. Deterministic: normal selection strategy,
/// full reduction, pairs ordered by lcm degree then lcm then indices;
/// output is monic and sorted by leading monomial, descending.
pub fn groebner(gens: &[Poly4]) -> Result<Vec<Poly4>> {
    let mut basis: Vec<Poly4> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut g = g.clone();
            g.make_monic();
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pairs: BTreeSet<(u32, Mono4, usize, usize)> = BTreeSet::new();
    let enqueue = |pairs: &mut BTreeSet<(u32, Mono4, usize, usize)>,
                       basis: &[Poly4],
                       i: usize,
                       j: usize| {
        let (li, _) = basis[i].leading().unwrap();
        let (lj, _) = basis[j].leading().unwrap();
        let l = li.lcm(&lj);
        pairs.insert((l.degree(), l, i, j));
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            enqueue(&mut pairs, &basis, i, j);
        }
    }

    while let Some(entry) = pairs.iter().next().cloned() {
        pairs.remove(&entry);
        let (_, l, i, j) = entry;
        let (li, _) = basis[i].leading().unwrap();
        let (lj, _) = basis[j].leading().unwrap();
        // Buchberger's product criterion: coprime leading monomials.
        if l == li.mul(&lj) {
            continue;
        }
        if l.degree() > GROEBNER_DEGREE_CAP {
            return Err(Error::DegreeCapExceeded {
                degree: l.degree(),
                cap: GROEBNER_DEGREE_CAP,
            });
        }
        // S-polynomial of two monic elements.
        let mut s = Poly4::zero();
        s.sub_scaled(&basis[j], &l.div(&lj), &-Rat::one());
        s.sub_scaled(&basis[i], &l.div(&li), &Rat::one());
        let mut r = normal_form(s, &basis, Some(GROEBNER_DEGREE_CAP))?;
        if !r.is_zero() {
            r.make_monic();
            basis.push(r);
            let k = basis.len() - 1;
            for idx in 0..k {
                enqueue(&mut pairs, &basis, idx, k);
            }
        }
    }

    // Inter-reduce to the reduced basis.
    loop {
        let mut changed = false;
        let mut idx = 0;
        while idx < basis.len() {
            let elem = basis[idx].clone();
            let rest: Vec<Poly4> = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let mut reduced = normal_form(elem.clone(), &rest, None)?;
            reduced.make_monic();
            if reduced != elem {
                changed = true;
                if reduced.is_zero() {
                    basis.remove(idx);
                    continue;
                }
                basis[idx] = reduced;
            }
            idx += 1;
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| b.leading().unwrap().0.cmp(&a.leading().unwrap().0));
    basis.dedup();
    Ok(basis)
}

/// Membership witness: R = phi(P, Q) with phi stored as a bivariate
/// polynomial whose x-slot stands for u and y-slot for v. `reduced` is true
/// when phi is the Groebner normal form (as opposed to a certificate built
/// directly from a constructive identity).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembershipWitness {
    pub phi: Poly,
    pub reduced: bool,
}

impl MembershipWitness {
    /// Evaluate the witness at (P, Q); reproduces R exactly when sound.
    pub fn eval(&self, p: &Poly, q: &Poly) -> Poly {
        self.phi.substitute(p, q)
    }

    /// Render in the symbols u, v.
    pub fn render(&self) -> String {
        self.phi.render_named("u", "v")
    }
}

/// Precomputed elimination basis for a fixed generator pair (P, Q); reuse it
/// to answer many membership queries against the same subalgebra.
pub struct MembershipContext {
    gb: Vec<Poly4>,
}

impl MembershipContext {
    pub fn new(p: &Poly, q: &Poly) -> Result<Self> {
        let gen_u = &Poly4::var(2) - &Poly4::from_xy(p);
        let gen_v = &Poly4::var(3) - &Poly4::from_xy(q);
        let gb = groebner(&[gen_u, gen_v])?;
        Ok(MembershipContext { gb })
    }

    pub fn basis(&self) -> &[Poly4] {
        &self.gb
    }

    /// Witness for R in K[P,Q], or `None` when R is not a member.
    pub fn witness(&self, r: &Poly) -> Result<Option<MembershipWitness>> {
        let nf = normal_form(Poly4::from_xy(r), &self.gb, None)?;
        Ok(nf.to_uv().map(|phi| MembershipWitness { phi, reduced: true }))
    }
}

impl std::ops::Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

/// Decide R in K[P,Q]; on success the returned witness satisfies
/// phi(P, Q) = R exactly.
pub fn in_subalgebra(r: &Poly, p: &Poly, q: &Poly) -> Result<Option<MembershipWitness>> {
    MembershipContext::new(p, q)?.witness(r)
}

/// Coefficients of a univariate H(t), dense, low-to-high; the witness for
/// the constructive statement R = H(A).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniWitness {
    pub coeffs: Vec<Rat>,
}

impl UniWitness {
    /// Horner evaluation of H at a bivariate argument.
    pub fn eval(&self, a: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            if !acc.is_zero() {
                acc = &acc * a;
            }
            acc += &Poly::constant(c.clone());
        }
        acc
    }

    pub fn render(&self) -> String {
        Poly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::new(e as u32, 0), c.clone())),
        )
        .render_named("t", "")
    }
}

/// Constructive univariate membership R in K[A] by leading-form peeling:
/// while the leading form of R matches c * leading_form(A)^m, subtract
/// c * A^m; any mismatch reports a non-member. For nonconstant A with
/// Jac(A, R) = 0 and Jac(A, B) a nonzero constant for some B, the peeling
/// provably succeeds, which is the constructive shadow of Cheng-McKay-Wang.
pub fn wang_membership(a: &Poly, r: &Poly) -> Option<UniWitness> {
    if a.is_constant() {
        // K[A] = K: members are exactly the constants.
        return r.as_constant().map(|c| UniWitness {
            coeffs: if c.is_zero() { vec![] } else { vec![c] },
        });
    }
    let da = a.degree().expect("nonconstant");
    let la = a.leading_form().expect("nonconstant");
    let mut cur = r.clone();
    let mut coeffs: Vec<Rat> = Vec::new();
    while !cur.is_zero() {
        let dr = cur.degree().expect("nonzero");
        if dr % da != 0 {
            return None;
        }
        let m = dr / da;
        let lr = cur.leading_form().expect("nonzero");
        let lam = la.pow(m);
        let (m_lr, c_lr) = lr.leading_term().expect("nonzero");
        let (m_la, c_la) = lam.leading_term().expect("nonzero");
        if m_lr != m_la {
            return None;
        }
        let c = c_lr / c_la;
        if lr != lam.scale(&c) {
            return None;
        }
        cur -= &a.pow(m).scale(&c);
        if coeffs.len() <= m as usize {
            coeffs.resize(m as usize + 1, Rat::zero());
        }
        coeffs[m as usize] = c;
        debug_assert!(cur.degree().unwrap_or(0) < dr || cur.is_zero());
    }
    Some(UniWitness { coeffs })
}

/// sigma_0, the involution on T = K[P,Q] exchanging P and Q, applied to a
/// verified member R: with R = phi(P, Q), returns phi(Q, P). Well-defined
/// only when Jac(P, Q) is a nonzero constant (then T is a polynomial ring
/// in P, Q).
pub fn sigma0_apply(f: &Endo, r: &Poly) -> Result<Poly> {
    if !f.is_jacobian_unit() {
        return Err(Error::JacobianNotUnit);
    }
    match in_subalgebra(r, f.p(), f.q())? {
        None => Err(Error::NotInImage),
        Some(w) => Ok(w.phi.substitute(f.q(), f.p())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn uv(s: &str) -> Poly {
        // witness polynomials written with x standing for u, y for v
        Poly::parse(s).unwrap()
    }

    #[test]
    fn groebner_linear_generators() {
        let gens = [
            &Poly4::var(2) - &Poly4::from_xy(&Poly::x()),
            &Poly4::var(3) - &Poly4::from_xy(&Poly::y()),
        ];
        let gb = groebner(&gens).unwrap();
        assert_eq!(gb.len(), 2);
        // x - u and y - v, monic in x resp. y
        let expected_x = &Poly4::from_xy(&Poly::x()) - &Poly4::var(2);
        let expected_y = &Poly4::from_xy(&Poly::y()) - &Poly4::var(3);
        assert_eq!(gb[0], expected_x);
        assert_eq!(gb[1], expected_y);
    }

    #[test]
    fn groebner_single_generator() {
        let gens = [&Poly4::var(2) - &Poly4::from_xy(&p("x^2"))];
        let gb = groebner(&gens).unwrap();
        assert_eq!(gb.len(), 1);
        assert_eq!(gb[0], &Poly4::from_xy(&p("x^2")) - &Poly4::var(2));
    }

    #[test]
    fn groebner_hand_checked_linear_change() {
        // <u - (x+y), v - (x-y)>: x - (u+v)/2 and y - (u-v)/2 lie in the ideal.
        let ctx = MembershipContext::new(&p("x + y"), &p("x - y")).unwrap();
        let wx = ctx.witness(&Poly::x()).unwrap().unwrap();
        assert_eq!(wx.phi, uv("1/2*x + 1/2*y"));
        let wy = ctx.witness(&Poly::y()).unwrap().unwrap();
        assert_eq!(wy.phi, uv("1/2*x - 1/2*y"));
        assert_eq!(wx.eval(&p("x + y"), &p("x - y")), Poly::x());
        assert_eq!(wy.eval(&p("x + y"), &p("x - y")), Poly::y());
    }

    #[test]
    fn membership_triangular_example() {
        let w = in_subalgebra(&Poly::x(), &p("x + y^2"), &Poly::y())
            .unwrap()
            .unwrap();
        assert_eq!(w.phi, uv("x - y^2"));
        assert_eq!(w.render(), "u - v^2");
        assert_eq!(w.eval(&p("x + y^2"), &Poly::y()), Poly::x());
    }

    #[test]
    fn membership_negative_parity_obstruction() {
        assert!(in_subalgebra(&Poly::x(), &p("x^2"), &Poly::y())
            .unwrap()
            .is_none());
    }

    #[test]
    fn membership_generator_is_member() {
        for (pp, qq) in [
            (p("x + y^2"), p("y")),
            (p("2*x + 3*y"), p("x + 2*y")),
            (p("x^2 - y"), p("x + 1")),
        ] {
            let w = in_subalgebra(&pp, &pp, &qq).unwrap().unwrap();
            assert_eq!(w.phi, Poly::x(), "phi should be u for P = {pp}");
            assert_eq!(w.eval(&pp, &qq), pp);
        }
    }

    #[test]
    fn wang_examples() {
        // A = x + y^2, R = (x+y^2)^2 - 3 -> H(t) = t^2 - 3
        let a = p("x + y^2");
        let r = p("x^2 + 2*x*y^2 + y^4 - 3");
        let h = wang_membership(&a, &r).unwrap();
        assert_eq!(h.coeffs, vec![rat_int(-3), rat_int(0), rat_int(1)]);
        assert_eq!(h.render(), "t^2 - 3");
        assert_eq!(h.eval(&a), r);

        assert!(wang_membership(&Poly::x(), &Poly::y()).is_none());

        let h = wang_membership(&a, &p("5")).unwrap();
        assert_eq!(h.coeffs, vec![rat_int(5)]);
    }

    #[test]
    fn wang_zero_and_fractional() {
        let a = p("x^2 - y");
        assert_eq!(wang_membership(&a, &Poly::zero()).unwrap().coeffs, vec![]);
        let r = &a.scale(&rat(1, 3)) + &Poly::constant(rat(2, 7));
        let h = wang_membership(&a, &r).unwrap();
        assert_eq!(h.coeffs, vec![rat(2, 7), rat(1, 3)]);
    }

    #[test]
    fn wang_agrees_with_elimination_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xA11CE);
        for case in 0..200 {
            // random nonconstant A of degree <= 4, H of degree <= 5
            let a = loop {
                let cand = crate::corpus::random_poly(&mut rng, 4, 5, 4);
                if !cand.is_constant() {
                    break cand;
                }
            };
            let hdeg = rng.gen_range(0..=5);
            let coeffs: Vec<Rat> = (0..=hdeg)
                .map(|_| rat_int(rng.gen_range(-5..=5)))
                .collect();
            let h = UniWitness { coeffs };
            let r = h.eval(&a);
            let recovered = wang_membership(&a, &r);
            let by_elim = in_subalgebra(&r, &a, &Poly::zero()).unwrap();
            assert_eq!(
                recovered.is_some(),
                by_elim.is_some(),
                "disagreement on case {case}: A = {a}, R = {r}"
            );
            let recovered = recovered.unwrap();
            assert_eq!(recovered.eval(&a), r);
        }
    }

    #[test]
    fn sigma0_examples() {
        let f = Endo::new(p("x + y^2"), Poly::y());
        // sigma0(x) = Q - P^2 = y - (x+y^2)^2
        let got = sigma0_apply(&f, &Poly::x()).unwrap();
        let expected = &Poly::y() - &p("x + y^2").pow(2);
        assert_eq!(got, expected);
        // sigma0 is an involution on members
        let back = sigma0_apply(&f, &got).unwrap();
        assert_eq!(back, Poly::x());

        // sigma0(P) = Q
        assert_eq!(sigma0_apply(&f, &p("x + y^2")).unwrap(), Poly::y());

        // non-member errors
        assert_eq!(
            sigma0_apply(&Endo::new(p("x^2"), Poly::y()), &Poly::x()),
            Err(Error::JacobianNotUnit)
        );
        let f2 = Endo::new(p("x + y^2"), Poly::y());
        // x*noise with noise chosen so the witness is absent: x is a member
        // here, so use a map whose image misses x instead.
        let f3 = Endo::new(p("x + y^3"), Poly::y());
        assert!(sigma0_apply(&f3, &p("x + y^3")).is_ok());
        assert_eq!(sigma0_apply(&f2, &Poly::x()).unwrap(), got);
    }

    #[test]
    fn sigma0_not_in_image() {
        // f = (2x, 3y) scaled: image is all of K[x,y]; pick a genuinely
        // non-surjective Jacobian-unit map instead: none exists, so test the
        // error path with a unit-Jacobian f whose image is proper... it
        // cannot be: unit Jacobian + tame corpus are surjective. Use the
        // degenerate trick: query against K[P,Q] for f = (x, y + x^2) with
        // R chosen outside? That f is invertible too. The honest error-path
        // test: restrict to K[x^2, y] via a NON-unit f is blocked by the
        // precondition, so exercise NotInImage through the context instead.
        let ctx = MembershipContext::new(&p("x^2"), &Poly::y()).unwrap();
        assert!(ctx.witness(&Poly::x()).unwrap().is_none());
    }

    #[test]
    fn witness_soundness_random() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pp = p("x + y^2");
        let qq = p("y + 1");
        let ctx = MembershipContext::new(&pp, &qq).unwrap();
        for _ in 0..40 {
            let r = crate::corpus::random_poly(&mut rng, 5, 6, 5);
            if let Some(w) = ctx.witness(&r).unwrap() {
                assert_eq!(w.eval(&pp, &qq), r, "unsound witness for {r}");
            }
        }
    }
}
