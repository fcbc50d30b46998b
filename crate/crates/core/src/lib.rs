//! Exact computer algebra for polynomial endomorphisms of Q[x,y].
//!
//! The crate implements, over the rationals:
//!
//! - sparse bivariate polynomial arithmetic with derivatives, substitution,
//!   Jacobians and leading forms ([`poly`]);
//! - endomorphisms and involutions of K[x,y]: composition, intertwining,
//!   symmetric/skew decomposition and a closed-form Jacobian parity formula
//!   ([`endo`]);
//! - subalgebra membership R in K[P,Q] with explicit witnesses via Groebner
//!   elimination, and the constructive univariate case R in K[A] ([`membership`]);
//! - tame (affine/triangular) decomposition, inversion, and constructive
//!   conjugation of involutions to the exchange involution ([`tame`]);
//! - certificate-producing invertibility procedures built from the above
//!   ([`conditions`]);
//! - a seeded random corpus of tame automorphisms and a property-test driver
//!   ([`corpus`], [`suite`]).
//!
//! Everything is exact: no floating point anywhere. All values are immutable
//! and all operations are pure functions, safe to run concurrently. With the
//! default `parallel` feature the suite driver fans cases out with rayon; a
//! sequential fallback is always compiled in.

pub mod conditions;
pub mod corpus;
pub mod endo;
pub mod error;
pub mod membership;
pub mod poly;
pub mod suite;
pub mod tame;

pub use conditions::{
    check_extension, check_restriction, find_gamma_delta, invert_via_generalized,
    invert_via_sk, invert_via_symmetry, involution_from_alpha, is_generalized,
    reduce_to_alpha_endo, symmetrize_to_alpha, symmetry_case, AlphaReduction, GammaDeltaPair,
    GeneralizedBranch, GeneralizedCert, Parity, RestrictionCert, SymmetryCase,
};
pub use corpus::{random_poly, random_tame, CorpusEntry, CorpusParams};
pub use endo::{intertwines, jac_parity_formula, sym_skew_split, Endo, SymSkewSplit};
pub use error::{Error, Result};
pub use membership::{
    groebner, in_subalgebra, sigma0_apply, wang_membership, MembershipContext,
    MembershipWitness, Poly4, UniWitness,
};
pub use poly::{jac, rat, rat_int, Monomial, Poly, Rat, Var};
pub use suite::{run_suite, run_suite_with, ExecMode, PropertyReport, Report};
pub use tame::{
    classify_involution, conjugate_to_alpha, decompose, invert, involution_verified,
    is_automorphism, Elementary, Factorization, InvolutionClass,
};
