//! Seeded random corpus of tame automorphisms with ground-truth
//! factorizations.
//!
//! The generator is ChaCha8 seeded from a 64-bit integer, so corpora are
//! byte-identical across runs and platforms for the same parameters. A test
//! pins the raw stream of the generator as the reference vector.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::endo::Endo;
use crate::error::{Error, Result};
use crate::poly::{rat_int, Monomial, Poly, Rat};
use crate::tame::{Elementary, Factorization};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub count: usize,
    pub max_factors: usize,
    pub max_tri_degree: u32,
    pub coeff_height: i64,
    pub seed: u64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            count: 200,
            max_factors: 4,
            max_tri_degree: 4,
            coeff_height: 8,
            seed: 1,
        }
    }
}

impl CorpusParams {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidParams {
                msg: "count must be positive".into(),
            });
        }
        if self.coeff_height < 1 {
            return Err(Error::InvalidParams {
                msg: "coeff_height must be positive".into(),
            });
        }
        if self.max_tri_degree == 0 {
            return Err(Error::InvalidParams {
                msg: "max_tri_degree must be positive".into(),
            });
        }
        Ok(())
    }
}

pub struct CorpusEntry {
    pub endo: Endo,
    pub ground_truth: Factorization,
    /// Derivation record: seed, index, and the factor kinds drawn.
    pub seed_path: String,
}

/// Deterministic corpus of random tame automorphisms. Each entry composes
/// random invertible affine and triangular factors with coefficients bounded
/// by `coeff_height`; the composed map and its factor list are returned
/// together. `max_factors = 0` is the degenerate request: every entry is the
/// identity with an empty factor list.
pub fn random_tame(params: &CorpusParams) -> Result<Vec<CorpusEntry>> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut entries = Vec::with_capacity(params.count);
    for idx in 0..params.count {
        let n = if params.max_factors == 0 {
            0
        } else {
            rng.gen_range(1..=params.max_factors)
        };
        let mut factors = Vec::with_capacity(n);
        let mut kinds = String::new();
        for _ in 0..n {
            if rng.gen_range(0..2) == 0 {
                kinds.push('A');
                factors.push(random_affine(&mut rng, params.coeff_height));
            } else {
                kinds.push('T');
                factors.push(random_triangular(
                    &mut rng,
                    params.max_tri_degree,
                    params.coeff_height,
                ));
            }
        }
        let ground_truth = Factorization { factors };
        let endo = ground_truth.compose();
        debug_assert!(
            endo.is_jacobian_unit(),
            "corpus entry must have a unit Jacobian"
        );
        entries.push(CorpusEntry {
            endo,
            ground_truth,
            seed_path: format!("seed={}/entry={}/kinds={}", params.seed, idx, kinds),
        });
    }
    Ok(entries)
}

fn sample(rng: &mut ChaCha8Rng, height: i64) -> i64 {
    rng.gen_range(-height..=height)
}

fn sample_nonzero(rng: &mut ChaCha8Rng, height: i64) -> i64 {
    loop {
        let v = sample(rng, height);
        if v != 0 {
            return v;
        }
    }
}

fn random_affine(rng: &mut ChaCha8Rng, height: i64) -> Elementary {
    loop {
        let m = [
            [rat_int(sample(rng, height)), rat_int(sample(rng, height))],
            [rat_int(sample(rng, height)), rat_int(sample(rng, height))],
        ];
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if det.is_zero() {
            continue;
        }
        let t = [rat_int(sample(rng, height)), rat_int(sample(rng, height))];
        return Elementary::affine(m, t);
    }
}

fn random_triangular(rng: &mut ChaCha8Rng, max_degree: u32, height: i64) -> Elementary {
    let a = rat_int(sample_nonzero(rng, height));
    let c = rat_int(sample_nonzero(rng, height));
    let d = rat_int(sample(rng, height));
    let deg = rng.gen_range(1..=max_degree) as usize;
    let mut p: Vec<Rat> = (0..deg).map(|_| rat_int(sample(rng, height))).collect();
    p.push(rat_int(sample_nonzero(rng, height)));
    Elementary::triangular(a, c, d, p)
}

/// Random sparse polynomial for property suites: up to `max_terms` terms of
/// total degree <= `max_deg` with integer coefficients in [-height, height].
pub fn random_poly<R: Rng>(rng: &mut R, max_deg: u32, height: i64, max_terms: usize) -> Poly {
    let n = rng.gen_range(0..=max_terms);
    let mut p = Poly::zero();
    for _ in 0..n {
        let i = rng.gen_range(0..=max_deg);
        let j = rng.gen_range(0..=(max_deg - i));
        let c = rng.gen_range(-height..=height);
        p += &Poly::monomial(Monomial::new(i, j), rat_int(c));
    }
    p
}

/// Random nonzero polynomial.
pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    max_deg: u32,
    height: i64,
    max_terms: usize,
) -> Poly {
    loop {
        let p = random_poly(rng, max_deg, height, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random rational with numerator in [-height, height] and denominator in
/// [1, height].
pub fn random_rat<R: Rng>(rng: &mut R, height: i64) -> Rat {
    crate::poly::rat(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

#[allow(unused_imports)]
use num::Signed;
