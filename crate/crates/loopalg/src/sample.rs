//! Seeded random homogeneous elements.

use std::collections::BTreeMap;

use loopalg_core::{Element, LoopElement, LoopModel, Monomial, PresentedAlgebra, Ring, Scalar, Tensor};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliResult;

fn small_rational(num: i64, den: i64) -> Scalar {
    Scalar::parse(Ring::Rationals, &format!("{}/{}", num, den)).expect("nonzero denominator")
}

/// Basis monomials grouped by degree.
#[derive(Clone, Debug)]
pub struct Pool<T> {
    degrees: Vec<(i64, Vec<T>)>,
}

impl<T: Clone> Pool<T> {
    pub fn new(by_degree: BTreeMap<i64, Vec<T>>) -> Self {
        Pool { degrees: by_degree.into_iter().filter(|(_, v)| !v.is_empty()).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.iter().map(|(d, _)| *d)
    }
}

/// Loop basis pairs of bounded word length inside `window`.
pub fn loop_pool(model: &LoopModel, max_len: u32, window: (i64, i64)) -> CliResult<Pool<(Monomial, Monomial)>> {
    let mut by_degree: BTreeMap<i64, Vec<_>> = BTreeMap::new();
    for pair in model.loop_basis_by_word_length(max_len)? {
        let d = model.pair_degree(&pair);
        if d >= window.0 && d <= window.1 {
            by_degree.entry(d).or_default().push(pair);
        }
    }
    Ok(Pool::new(by_degree))
}

pub fn monomial_pool(alg: &PresentedAlgebra, monomials: Vec<Monomial>) -> Pool<Monomial> {
    let mut by_degree: BTreeMap<i64, Vec<_>> = BTreeMap::new();
    for m in monomials {
        by_degree.entry(alg.monomial_degree(&m)).or_default().push(m);
    }
    Pool::new(by_degree)
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A small nonzero coefficient.
    pub fn coefficient(&mut self, ring: Ring) -> Scalar {
        match ring {
            Ring::GF2 => Scalar::one(ring),
            Ring::Integers => {
                let n = self.rng.gen_range(1..=3) * if self.rng.gen_bool(0.5) { -1 } else { 1 };
                Scalar::from_i64(ring, n)
            }
            Ring::Rationals => {
                let n = self.rng.gen_range(1..=4) * if self.rng.gen_bool(0.5) { -1 } else { 1 };
                small_rational(n, self.rng.gen_range(1..=3))
            }
        }
    }

    fn pick<'p, T>(&mut self, pool: &'p Pool<T>, degree: Option<i64>) -> (i64, &'p [T]) {
        let (d, items) = match degree {
            Some(d) => pool.degrees.iter().find(|(k, _)| *k == d).expect("degree present in pool"),
            None => pool.degrees.choose(&mut self.rng).expect("nonempty pool"),
        };
        (*d, items.as_slice())
    }

    /// Homogeneous loop element with one to three terms, possibly zero after
    /// torsion reduction.
    pub fn loop_element(&mut self, model: &LoopModel, pool: &Pool<(Monomial, Monomial)>) -> CliResult<LoopElement> {
        let (_, items) = self.pick(pool, None);
        let k = self.rng.gen_range(1..=3.min(items.len()));
        let mut t = Tensor::zero();
        for pair in items.choose_multiple(&mut self.rng, k) {
            t.add_term(pair.0.clone(), pair.1.clone(), self.coefficient(model.ring()));
        }
        Ok(model.normalize(&t)?)
    }

    pub fn element(&mut self, alg: &PresentedAlgebra, pool: &Pool<Monomial>) -> CliResult<Element> {
        let (_, items) = self.pick(pool, None);
        let k = self.rng.gen_range(1..=3.min(items.len()));
        let mut e = Element::zero();
        for m in items.choose_multiple(&mut self.rng, k) {
            e.add_term(m.clone(), self.coefficient(alg.ring()));
        }
        Ok(alg.normal_form(&e)?)
    }

    pub fn monomial<'p>(&mut self, pool: &'p Pool<Monomial>) -> &'p Monomial {
        let (_, items) = self.pick(pool, None);
        items.choose(&mut self.rng).expect("nonempty degree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopalg_core::catalog::{build, ModelId};

    #[test]
    fn deterministic_and_homogeneous() {
        let model = build(ModelId::SoOddQ(2)).unwrap();
        let pool = loop_pool(&model, 3, (-24, 24)).unwrap();
        let run = |seed| {
            let mut s = Sampler::new(seed);
            (0..20).map(|_| s.loop_element(&model, &pool).unwrap()).collect::<Vec<_>>()
        };
        let a = run(7);
        assert_eq!(a, run(7));
        assert_ne!(a, run(8));
        for e in &a {
            assert!(model.degree_of(e).sign_degree().is_ok());
        }
    }
}
