//! Coproducts, counits, homology suspension and graded derivations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graded::{Element, ElementDegree, Monomial};
use crate::quotient::PresentedAlgebra;
use crate::scalar::Scalar;
use crate::tensor::{Tensor, TensorAlgebra};

/// Coproduct and counit values on the generators of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfStructure {
    coproducts: Vec<Tensor>,
    counits: Vec<Scalar>,
}

impl HopfStructure {
    pub fn new(alg: &PresentedAlgebra, coproducts: Vec<Tensor>, counits: Vec<Scalar>) -> Result<HopfStructure> {
        let gens = alg.generators();
        if coproducts.len() < gens.len() {
            return Err(Error::MissingCoproduct(gens[coproducts.len()].name.clone()));
        }
        if coproducts.len() > gens.len() {
            return Err(Error::InvalidHopfData("more coproduct values than generators".into()));
        }
        if counits.len() != gens.len() {
            return Err(Error::InvalidHopfData("one counit value per generator required".into()));
        }
        let sq = TensorAlgebra::square(alg);
        let mut normalized = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            let eps = &counits[i];
            if eps.ring() != alg.ring() {
                return Err(Error::RingMismatch { left: alg.ring(), right: eps.ring() });
            }
            if g.degree != 0 && !eps.is_zero() {
                return Err(Error::InvalidHopfData(format!("counit of `{}` must vanish", g.name)));
            }
            if g.degree == 0 && !(eps.is_zero() || eps.is_one()) {
                return Err(Error::InvalidHopfData(format!("counit of `{}` must be 0 or 1", g.name)));
            }
            let d = sq.normalize(&coproducts[i])?;
            match sq.degree_of(&d) {
                ElementDegree::Exact(k) if k == g.degree => {}
                _ => return Err(Error::InvalidHopfData(format!("coproduct of `{}` has the wrong degree", g.name))),
            }
            normalized.push(d);
        }
        let h = HopfStructure { coproducts: normalized, counits };
        for (i, spec) in gens.iter().enumerate() {
            let g = alg.gen(i);
            let d = h.coproduct(alg, &g)?;
            if h.counit_left(alg, &d)? != g || h.counit_right(alg, &d)? != g {
                return Err(Error::InvalidHopfData(format!("counit axiom fails on `{}`", spec.name)));
            }
        }
        Ok(h)
    }

    pub fn generator_coproduct(&self, index: usize) -> &Tensor {
        &self.coproducts[index]
    }

    pub fn generator_counit(&self, index: usize) -> &Scalar {
        &self.counits[index]
    }

    pub fn counits(&self) -> &[Scalar] {
        &self.counits
    }

    pub fn monomial_coproduct(&self, alg: &PresentedAlgebra, m: &Monomial) -> Result<Tensor> {
        let sq = TensorAlgebra::square(alg);
        let mut out = sq.one();
        for (i, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                out = sq.mul(&out, &self.coproducts[i])?;
            }
        }
        Ok(out)
    }

    /// Multiplicative extension of the generator coproducts.
    pub fn coproduct(&self, alg: &PresentedAlgebra, e: &Element) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for (m, c) in e.terms() {
            out.add_assign(&self.monomial_coproduct(alg, m)?.scale(c));
        }
        TensorAlgebra::square(alg).normalize(&out)
    }

    pub fn monomial_counit(&self, alg: &PresentedAlgebra, m: &Monomial) -> Scalar {
        let mut out = Scalar::one(alg.ring());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                out = &out * &self.counits[i].pow(e);
            }
        }
        out
    }

    pub fn counit(&self, alg: &PresentedAlgebra, e: &Element) -> Scalar {
        let mut out = Scalar::zero(alg.ring());
        for (m, c) in e.terms() {
            out = &out + &(c * &self.monomial_counit(alg, m));
        }
        out
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self, alg: &PresentedAlgebra, t: &Tensor) -> Result<Element> {
        let mut out = Element::zero();
        for ((l, r), c) in t.terms() {
            out.add_term(r.clone(), c * &self.monomial_counit(alg, l));
        }
        alg.normal_form(&out)
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self, alg: &PresentedAlgebra, t: &Tensor) -> Result<Element> {
        let mut out = Element::zero();
        for ((l, r), c) in t.terms() {
            out.add_term(l.clone(), c * &self.monomial_counit(alg, r));
        }
        alg.normal_form(&out)
    }

    /// `(D ⊗ id)D(e)` and `(id ⊗ D)D(e)` as maps on triples.
    pub fn iterated_coproducts(&self, alg: &PresentedAlgebra, e: &Element) -> Result<(Triple, Triple)> {
        let d = self.coproduct(alg, e)?;
        let mut left = Triple::new();
        let mut right = Triple::new();
        for ((a, b), c) in d.terms() {
            for ((a1, a2), c1) in self.monomial_coproduct(alg, a)?.terms() {
                add_triple(&mut left, (a1.clone(), a2.clone(), b.clone()), c * c1);
            }
            for ((b1, b2), c2) in self.monomial_coproduct(alg, b)?.terms() {
                add_triple(&mut right, (a.clone(), b1.clone(), b2.clone()), c * c2);
            }
        }
        Ok((reduce_triple_torsion(alg, left), reduce_triple_torsion(alg, right)))
    }

    pub fn is_coassociative_on(&self, alg: &PresentedAlgebra, e: &Element) -> Result<bool> {
        let (l, r) = self.iterated_coproducts(alg, e)?;
        Ok(l == r)
    }

    pub fn is_cocommutative_on(&self, alg: &PresentedAlgebra, e: &Element) -> Result<bool> {
        let d = self.coproduct(alg, e)?;
        Ok(TensorAlgebra::square(alg).swap(&d) == d)
    }

    pub fn satisfies_counit_on(&self, alg: &PresentedAlgebra, e: &Element) -> Result<bool> {
        let e = alg.normal_form(e)?;
        let d = self.coproduct(alg, &e)?;
        Ok(self.counit_left(alg, &d)? == e && self.counit_right(alg, &d)? == e)
    }
}

pub type Triple = BTreeMap<(Monomial, Monomial, Monomial), Scalar>;

fn add_triple(t: &mut Triple, key: (Monomial, Monomial, Monomial), c: Scalar) {
    let entry = t.entry(key.clone()).or_insert_with(|| Scalar::zero(c.ring()));
    *entry = &*entry + &c;
    if entry.is_zero() {
        t.remove(&key);
    }
}

// slots come from normalized coproducts already; only torsion can remain
fn reduce_triple_torsion(alg: &PresentedAlgebra, t: Triple) -> Triple {
    let mut out = Triple::new();
    for ((a, b, c), coeff) in t {
        let modulus = [&a, &b, &c].iter().filter_map(|m| alg.torsion_modulus(m)).reduce(|x, y| x.gcd(&y));
        let coeff = match modulus {
            Some(m) => coeff.reduce_mod(&m),
            None => coeff,
        };
        if !coeff.is_zero() {
            out.insert((a, b, c), coeff);
        }
    }
    out
}

/// Declared primitives of `H(G)`; torsion primitives carry their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitive {
    pub name: String,
    pub degree: i64,
    pub torsion: Option<u32>,
}

impl Primitive {
    pub fn new(name: impl Into<String>, degree: i64) -> Primitive {
        Primitive { name: name.into(), degree, torsion: None }
    }

    pub fn with_torsion(name: impl Into<String>, degree: i64, order: u32) -> Primitive {
        Primitive { name: name.into(), degree, torsion: Some(order) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveBasis {
    pub primitives: Vec<Primitive>,
}

impl PrimitiveBasis {
    pub fn new(primitives: Vec<Primitive>) -> PrimitiveBasis {
        PrimitiveBasis { primitives }
    }

    pub fn len(&self) -> usize {
        self.primitives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primitives.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.primitives.iter().position(|p| p.name == name)
    }

    pub fn has_torsion(&self) -> bool {
        self.primitives.iter().any(|p| p.torsion.is_some())
    }

    /// Reduces torsion coordinates into `[0, order)`.
    pub fn reduce(&self, mut coords: Vec<Scalar>) -> Vec<Scalar> {
        for (c, p) in coords.iter_mut().zip(&self.primitives) {
            if let Some(order) = p.torsion {
                *c = c.reduce_mod(&order.into());
            }
        }
        coords
    }

    pub fn format(&self, coords: &[Scalar]) -> String {
        let pieces = coords
            .iter()
            .zip(&self.primitives)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, p)| (c.clone(), p.name.clone()));
        crate::graded::format_linear_combination(pieces)
    }
}

/// Suspension values on generators, as coordinates over a [`PrimitiveBasis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionMap {
    values: Vec<Vec<Scalar>>,
}

impl SuspensionMap {
    pub fn new(
        alg: &PresentedAlgebra,
        basis: &PrimitiveBasis,
        values: Vec<Vec<Scalar>>,
    ) -> Result<SuspensionMap> {
        if values.len() != alg.ngens() {
            return Err(Error::InvalidHopfData("one suspension value per generator required".into()));
        }
        for (g, v) in alg.generators().iter().zip(&values) {
            if v.len() != basis.len() {
                return Err(Error::InvalidHopfData(format!("suspension of `{}` has the wrong length", g.name)));
            }
            for (c, p) in v.iter().zip(&basis.primitives) {
                if !c.is_zero() && p.degree != g.degree + 1 {
                    return Err(Error::InvalidHopfData(format!(
                        "suspension of `{}` hits `{}` of degree {}",
                        g.name, p.name, p.degree
                    )));
                }
            }
        }
        Ok(SuspensionMap { values })
    }

    pub fn generator_value(&self, index: usize) -> &[Scalar] {
        &self.values[index]
    }

    /// `σ(g₁^{e₁}⋯) = Σ_j e_j ε(g_j)^{e_j-1} σ(g_j) Π_{l≠j} ε(g_l)^{e_l}`.
    pub fn suspend_monomial(&self, alg: &PresentedAlgebra, hopf: &HopfStructure, basis: &PrimitiveBasis, m: &Monomial) -> Vec<Scalar> {
        let ring = alg.ring();
        let mut out = vec![Scalar::zero(ring); basis.len()];
        let exps = m.exponents();
        for (j, &ej) in exps.iter().enumerate() {
            if ej == 0 {
                continue;
            }
            let mut factor = &Scalar::from_i64(ring, ej as i64) * &hopf.generator_counit(j).pow(ej - 1);
            for (l, &el) in exps.iter().enumerate() {
                if l != j && el > 0 {
                    factor = &factor * &hopf.generator_counit(l).pow(el);
                }
            }
            if factor.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&self.values[j]) {
                *o = &*o + &(&factor * v);
            }
        }
        out
    }

    pub fn suspend(&self, alg: &PresentedAlgebra, hopf: &HopfStructure, basis: &PrimitiveBasis, e: &Element) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(alg.ring()); basis.len()];
        for (m, c) in e.terms() {
            for (o, v) in out.iter_mut().zip(self.suspend_monomial(alg, hopf, basis, m)) {
                *o = &*o + &(c * &v);
            }
        }
        basis.reduce(out)
    }
}

/// Graded derivation given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub degree: i64,
    pub values: Vec<Element>,
}

impl Derivation {
    pub fn new(alg: &PresentedAlgebra, degree: i64, values: Vec<Element>) -> Result<Derivation> {
        if values.len() != alg.ngens() {
            return Err(Error::InvalidHopfData("one derivation value per generator required".into()));
        }
        let mut normalized = Vec::with_capacity(values.len());
        for (g, v) in alg.generators().iter().zip(values) {
            let v = alg.normal_form(&v)?;
            match alg.degree_of(&v) {
                ElementDegree::Any => {}
                ElementDegree::Exact(d) if d == g.degree + degree => {}
                _ => {
                    return Err(Error::InvalidHopfData(format!(
                        "derivation value on `{}` must have degree {}",
                        g.name,
                        g.degree + degree
                    )))
                }
            }
            normalized.push(v);
        }
        Ok(Derivation { degree, values: normalized })
    }

    pub fn zero(alg: &PresentedAlgebra, degree: i64) -> Derivation {
        Derivation { degree, values: vec![Element::zero(); alg.ngens()] }
    }

    /// Leibniz rule over the factors of `m` in canonical order.
    pub fn apply_monomial(&self, alg: &PresentedAlgebra, m: &Monomial) -> Result<Element> {
        let ring = alg.ring();
        let mut out = Element::zero();
        let mut prefix = alg.unit();
        let exps = m.exponents();
        for (i, &e) in exps.iter().enumerate() {
            for k in 0..e {
                let value = &self.values[i];
                if !value.is_zero() {
                    let mut suffix = exps.to_vec();
                    suffix[..i].iter_mut().for_each(|x| *x = 0);
                    suffix[i] = e - k - 1;
                    let suffix = Element::monomial(Monomial::from_exponents(suffix), Scalar::one(ring));
                    let neg = self.degree % 2 != 0 && alg.monomial_degree(&prefix) % 2 != 0;
                    let p = Element::monomial(prefix.clone(), Scalar::sign(ring, neg));
                    let term = alg.free().mul_free(&alg.free().mul_free(&p, value), &suffix);
                    out.add_assign(&term);
                }
                prefix = Monomial::from_exponents({
                    let mut v = prefix.exponents().to_vec();
                    v[i] += 1;
                    v
                });
            }
        }
        alg.normal_form(&out)
    }

    pub fn apply(&self, alg: &PresentedAlgebra, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (m, c) in e.terms() {
            out.add_assign(&self.apply_monomial(alg, m)?.scale(c));
        }
        alg.normal_form(&out)
    }

    /// Rules (and exterior squares) on which the derivation is inconsistent.
    pub fn welldefinedness_failures(&self, alg: &PresentedAlgebra) -> Result<Vec<String>> {
        let mut failures = Vec::new();
        for r in alg.rewrites() {
            let lhs = self.apply_monomial(alg, &r.lhs)?;
            let rhs = self.apply(alg, &r.rhs)?;
            if lhs != rhs {
                failures.push(format!(
                    "{} -> {}: {} vs {}",
                    alg.format_monomial(&r.lhs),
                    alg.format_element(&r.rhs),
                    alg.format_element(&lhs),
                    alg.format_element(&rhs)
                ));
            }
        }
        for (i, g) in alg.generators().iter().enumerate() {
            if !g.is_exterior() {
                continue;
            }
            let x = alg.gen(i);
            let v = &self.values[i];
            let neg = self.degree % 2 != 0 && g.degree % 2 != 0;
            let square = alg.free().mul_free(v, &x).add(&alg.free().mul_free(&x, v).scale(&Scalar::sign(alg.ring(), neg)));
            if !alg.normal_form(&square)?.is_zero() {
                failures.push(format!("{}^2 -> 0", g.name));
            }
        }
        Ok(failures)
    }
}

/// `∂_i(a) = Σ ⟨pⁱ, σ(a₍₁₎)⟩ a₍₂₎`.
pub fn partial_from_definition(
    alg: &PresentedAlgebra,
    hopf: &HopfStructure,
    suspension: &SuspensionMap,
    basis: &PrimitiveBasis,
    i: usize,
    a: &Element,
) -> Result<Element> {
    if i >= basis.len() {
        return Err(Error::UnknownPrimitive(i));
    }
    let d = hopf.coproduct(alg, a)?;
    let mut out = Element::zero();
    for ((a1, a2), c) in d.terms() {
        let coords = basis.reduce(suspension.suspend_monomial(alg, hopf, basis, a1));
        let pairing = &coords[i];
        if !pairing.is_zero() {
            out.add_term(a2.clone(), c * pairing);
        }
    }
    alg.normal_form(&out)
}

/// Rules on which the coproduct or the suspension is inconsistent.
pub fn structure_welldefinedness_failures(
    alg: &PresentedAlgebra,
    hopf: &HopfStructure,
    suspension: &SuspensionMap,
    basis: &PrimitiveBasis,
) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let ring = alg.ring();
    for r in alg.rewrites() {
        let lhs = Element::monomial(r.lhs.clone(), Scalar::one(ring));
        let name = alg.format_monomial(&r.lhs);
        if hopf.coproduct(alg, &lhs)? != hopf.coproduct(alg, &r.rhs)? {
            failures.push(format!("coproduct does not respect {} -> {}", name, alg.format_element(&r.rhs)));
        }
        let sl = suspension.suspend(alg, hopf, basis, &lhs);
        let sr = suspension.suspend(alg, hopf, basis, &r.rhs);
        if sl != sr {
            failures.push(format!(
                "suspension does not respect {} -> {}: {} vs {}",
                name,
                alg.format_element(&r.rhs),
                basis.format(&sl),
                basis.format(&sr)
            ));
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GeneratorSpec as G;
    use crate::quotient::RewriteRule;
    use crate::scalar::Ring;

    struct Rp3 {
        alg: PresentedAlgebra,
        hopf: HopfStructure,
        basis: PrimitiveBasis,
        susp: SuspensionMap,
    }

    fn rp3(sigma_v: i64) -> Rp3 {
        let ring = Ring::Integers;
        let alg = PresentedAlgebra::new(
            ring,
            vec![G::polynomial("u", 2), G::polynomial("v", 0)],
            vec![RewriteRule::new(Monomial::from_exponents(vec![0, 2]), Element::monomial(Monomial::one(2), Scalar::one(ring)))],
            vec![],
        )
        .unwrap();
        let one = alg.one();
        let (u, v) = (alg.gen(0), alg.gen(1));
        let hopf = HopfStructure::new(
            &alg,
            vec![Tensor::pure(&u, &one).add(&Tensor::pure(&one, &u)), Tensor::pure(&v, &v)],
            vec![Scalar::zero(ring), Scalar::one(ring)],
        )
        .unwrap();
        let basis = PrimitiveBasis::new(vec![Primitive::with_torsion("rho", 1, 2), Primitive::new("fund", 3)]);
        let z = |n| Scalar::from_i64(ring, n);
        let susp = SuspensionMap::new(&alg, &basis, vec![vec![z(0), z(2)], vec![z(sigma_v), z(0)]]).unwrap();
        Rp3 { alg, hopf, basis, susp }
    }

    fn uv(_: &Rp3, i: u32, j: u32) -> Element {
        Element::monomial(Monomial::from_exponents(vec![i, j]), Scalar::one(Ring::Integers))
    }

    #[test]
    fn coproducts() {
        let r = rp3(1);
        let sq = TensorAlgebra::square(&r.alg);
        let d = r.hopf.coproduct(&r.alg, &uv(&r, 2, 0)).unwrap();
        let z = |n| Scalar::from_i64(Ring::Integers, n);
        let mut expected = Tensor::pure(&uv(&r, 2, 0), &r.alg.one());
        expected.add_assign(&Tensor::pure(&uv(&r, 1, 0), &uv(&r, 1, 0)).scale(&z(2)));
        expected.add_assign(&Tensor::pure(&r.alg.one(), &uv(&r, 2, 0)));
        assert_eq!(d, expected);
        assert_eq!(r.hopf.coproduct(&r.alg, &uv(&r, 0, 1)).unwrap(), Tensor::pure(&uv(&r, 0, 1), &uv(&r, 0, 1)));
        assert_eq!(r.hopf.coproduct(&r.alg, &r.alg.one()).unwrap(), sq.one());
        for (i, j) in [(0, 0), (1, 1), (3, 1), (2, 0)] {
            let e = uv(&r, i, j);
            assert!(r.hopf.is_coassociative_on(&r.alg, &e).unwrap());
            assert!(r.hopf.is_cocommutative_on(&r.alg, &e).unwrap());
            assert!(r.hopf.satisfies_counit_on(&r.alg, &e).unwrap());
        }
    }

    #[test]
    fn suspension_on_rp3() {
        let r = rp3(1);
        let z = |n| Scalar::from_i64(Ring::Integers, n);
        let s = |i, j| r.susp.suspend(&r.alg, &r.hopf, &r.basis, &uv(&r, i, j));
        assert_eq!(s(0, 1), vec![z(1), z(0)]);
        assert_eq!(s(1, 0), vec![z(0), z(2)]);
        assert_eq!(s(1, 1), vec![z(0), z(2)]);
        assert_eq!(s(2, 1), vec![z(0), z(0)]);
        assert_eq!(s(0, 0), vec![z(0), z(0)]);
        // sigma(v^2) = 2 rho = 0
        let v2 = Element::monomial(Monomial::from_exponents(vec![0, 2]), z(1));
        assert_eq!(r.susp.suspend(&r.alg, &r.hopf, &r.basis, &v2), vec![z(0), z(0)]);
        assert!(structure_welldefinedness_failures(&r.alg, &r.hopf, &r.susp, &r.basis).unwrap().is_empty());
    }

    #[test]
    fn non_torsion_suspension_is_rejected() {
        let mut r = rp3(1);
        r.basis = PrimitiveBasis::new(vec![Primitive::new("rho", 1), Primitive::new("fund", 3)]);
        let failures = structure_welldefinedness_failures(&r.alg, &r.hopf, &r.susp, &r.basis).unwrap();
        assert_eq!(failures.len(), 1);
    }

    #[test]
    fn counit_must_vanish_in_positive_degree() {
        let r = rp3(1);
        let one = r.alg.one();
        let u = r.alg.gen(0);
        let v = r.alg.gen(1);
        let ring = Ring::Integers;
        let bad = HopfStructure::new(
            &r.alg,
            vec![Tensor::pure(&u, &one).add(&Tensor::pure(&one, &u)), Tensor::pure(&v, &v)],
            vec![Scalar::one(ring), Scalar::one(ring)],
        );
        assert!(matches!(bad, Err(Error::InvalidHopfData(_))));
    }

    #[test]
    fn derivation_signs() {
        let ring = Ring::Rationals;
        let alg = PresentedAlgebra::new(ring, vec![G::exterior("beta3", -3), G::exterior("beta7", -7)], vec![], vec![]).unwrap();
        let delta1 = Derivation::new(&alg, 3, vec![alg.one(), Element::zero()]).unwrap();
        let prod = alg.mul(&alg.gen(0), &alg.gen(1)).unwrap();
        assert_eq!(delta1.apply(&alg, &prod).unwrap(), alg.gen(1));
        let delta2 = Derivation::new(&alg, 7, vec![Element::zero(), alg.one()]).unwrap();
        assert_eq!(delta2.apply(&alg, &prod).unwrap(), alg.gen(0).neg());
        assert!(delta1.apply(&alg, &alg.one()).unwrap().is_zero());
        assert!(delta1.welldefinedness_failures(&alg).unwrap().is_empty());
        assert!(Derivation::new(&alg, 2, vec![alg.one(), Element::zero()]).is_err());
    }

    #[test]
    fn definition_partial_on_rp3_rational_shadow() {
        let r = rp3(0);
        // with rho ignored, the fund coordinate of sigma(u^2 v) pairs u⊗uv
        let d = partial_from_definition(&r.alg, &r.hopf, &r.susp, &r.basis, 1, &uv(&r, 2, 1)).unwrap();
        assert_eq!(d, uv(&r, 1, 1).scale(&Scalar::from_i64(Ring::Integers, 4)));
        assert_eq!(
            partial_from_definition(&r.alg, &r.hopf, &r.susp, &r.basis, 5, &uv(&r, 0, 0)).unwrap_err(),
            Error::UnknownPrimitive(5)
        );
    }
}
