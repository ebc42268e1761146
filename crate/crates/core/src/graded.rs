//! Free graded-commutative algebras on a finite, ordered generator list.
//!
//! Monomials are exponent vectors aligned with the generator list; the list
//! order is the canonical factor order, and moving factors into that order
//! costs the usual Koszul sign. Exterior generators square to zero regardless
//! of the parity of their degree.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Polynomial,
    Exterior,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i64,
    pub kind: GeneratorKind,
}

impl GeneratorSpec {
    pub fn polynomial(name: impl Into<String>, degree: i64) -> Self {
        GeneratorSpec { name: name.into(), degree, kind: GeneratorKind::Polynomial }
    }

    pub fn exterior(name: impl Into<String>, degree: i64) -> Self {
        GeneratorSpec { name: name.into(), degree, kind: GeneratorKind::Exterior }
    }

    pub fn is_exterior(&self) -> bool {
        self.kind == GeneratorKind::Exterior
    }
}

/// Exponent vector. Never stores an exterior exponent above one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(ngens: usize) -> Monomial {
        Monomial(vec![0; ngens])
    }

    pub fn generator(ngens: usize, index: usize) -> Monomial {
        let mut exps = vec![0; ngens];
        exps[index] = 1;
        Monomial(exps)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Monomial {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of factors, counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn cofactor_in(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime_to(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

}

/// Sparse linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn monomial(m: Monomial, coeff: Scalar) -> Element {
        let mut e = Element::zero();
        e.add_term(m, coeff);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Element {
        let mut e = Element::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, coeff);
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Element) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), s * c)))
    }

    pub(crate) fn pop_last(&mut self) -> Option<(Monomial, Scalar)> {
        self.terms.pop_last()
    }

    pub(crate) fn map_coefficients(self, mut f: impl FnMut(&Monomial, Scalar) -> Scalar) -> Element {
        Element::from_terms(self.terms.into_iter().map(|(m, c)| {
            let c = f(&m, c);
            (m, c)
        }))
    }
}

/// Degree of an element; the zero element is homogeneous of every degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementDegree {
    Any,
    Exact(i64),
    Mixed,
}

impl ElementDegree {
    /// Degree to use in sign computations; zero elements count as degree 0.
    pub fn sign_degree(self) -> Result<i64> {
        match self {
            ElementDegree::Any => Ok(0),
            ElementDegree::Exact(d) => Ok(d),
            ElementDegree::Mixed => Err(Error::NonHomogeneous),
        }
    }
}

/// The free graded-commutative algebra on an ordered list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebra {
    ring: Ring,
    generators: Vec<GeneratorSpec>,
    odd: Vec<bool>,
}

impl FreeAlgebra {
    pub fn new(ring: Ring, generators: Vec<GeneratorSpec>) -> Result<FreeAlgebra> {
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(Error::InvalidPresentation(alloc::format!("`{}` is not a valid generator name", g.name)));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidPresentation(alloc::format!("duplicate generator `{}`", g.name)));
            }
            // Over Z and Q graded commutativity forces 2g^2 = 0 for odd g; we
            // require the square-zero relation to be explicit.
            if g.degree % 2 != 0 && !ring.is_char_two() && !g.is_exterior() {
                return Err(Error::InvalidPresentation(alloc::format!(
                    "odd generator `{}` must be exterior over {}",
                    g.name, ring
                )));
            }
        }
        let odd = generators.iter().map(|g| g.degree % 2 != 0).collect();
        Ok(FreeAlgebra { ring, generators, odd })
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Builds a monomial from `(generator name, exponent)` pairs.
    pub fn monomial_from_pairs(&self, pairs: &[(&str, u32)]) -> Result<Monomial> {
        let mut m = self.unit();
        for (name, e) in pairs {
            let i = self.generator_index(name).ok_or_else(|| Error::UnknownGenerator((*name).to_string()))?;
            m.0[i] += e;
        }
        Ok(m)
    }

    pub fn unit(&self) -> Monomial {
        Monomial::one(self.ngens())
    }

    pub fn one(&self) -> Element {
        Element::monomial(self.unit(), Scalar::one(self.ring))
    }

    pub fn gen(&self, index: usize) -> Element {
        Element::monomial(Monomial::generator(self.ngens(), index), Scalar::one(self.ring))
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        Scalar::from_i64(self.ring, n)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        m.exponents()
            .iter()
            .zip(&self.generators)
            .map(|(&e, g)| e as i64 * g.degree)
            .sum()
    }

    pub fn degree_of(&self, e: &Element) -> ElementDegree {
        let mut degree = None;
        for (m, _) in e.terms() {
            let d = self.monomial_degree(m);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return ElementDegree::Mixed,
                _ => {}
            }
        }
        degree.map_or(ElementDegree::Any, ElementDegree::Exact)
    }

    pub fn homogeneous_parts(&self, e: &Element) -> BTreeMap<i64, Element> {
        let mut parts: BTreeMap<i64, Element> = BTreeMap::new();
        for (m, c) in e.terms() {
            parts.entry(self.monomial_degree(m)).or_default().add_term(m.clone(), c.clone());
        }
        parts
    }

    /// Parity of the Koszul sign picked up by sorting `m1 * m2` into canonical order.
    pub fn koszul_negative(&self, m1: &Monomial, m2: &Monomial) -> bool {
        if self.ring.is_char_two() {
            return false;
        }
        // odd factors of m1 sitting strictly to the right of index j
        let mut odd_right = 0u64;
        let mut parity = 0u64;
        for j in (0..self.ngens()).rev() {
            if self.odd[j] {
                parity += m2.exponent(j) as u64 * odd_right;
                odd_right += m1.exponent(j) as u64;
            }
        }
        parity % 2 == 1
    }

    pub fn koszul_sign(&self, m1: &Monomial, m2: &Monomial) -> Scalar {
        Scalar::sign(self.ring, self.koszul_negative(m1, m2))
    }

    /// `m1 * m2` as `(negative, monomial)`, or `None` when an exterior square appears.
    pub fn mul_monomials(&self, m1: &Monomial, m2: &Monomial) -> Option<(bool, Monomial)> {
        let mut exps = Vec::with_capacity(self.ngens());
        for (i, g) in self.generators.iter().enumerate() {
            let e = m1.exponent(i) + m2.exponent(i);
            if g.is_exterior() && e > 1 {
                return None;
            }
            exps.push(e);
        }
        Some((self.koszul_negative(m1, m2), Monomial(exps)))
    }

    pub fn mul_free(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                if let Some((neg, m)) = self.mul_monomials(m1, m2) {
                    let c = c1 * c2;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// No exterior generator appears more than once.
    pub fn is_valid_monomial(&self, m: &Monomial) -> bool {
        m.len() == self.ngens() && self.generators.iter().zip(m.exponents()).all(|(g, &e)| !g.is_exterior() || e <= 1)
    }

    pub fn is_odd_generator(&self, index: usize) -> bool {
        self.odd[index]
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.generators[i].name);
            if e > 1 {
                let _ = write!(out, "^{}", e);
            }
        }
        out
    }

    /// Terms ordered by degree, then by exponent vector.
    pub fn sorted_terms<'a>(&self, e: &'a Element) -> Vec<(&'a Monomial, &'a Scalar)> {
        let mut terms: Vec<_> = e.terms().collect();
        terms.sort_by(|a, b| self.monomial_degree(a.0).cmp(&self.monomial_degree(b.0)).then_with(|| a.0.cmp(b.0)));
        terms
    }

    pub fn format_element(&self, e: &Element) -> String {
        let pieces = self
            .sorted_terms(e)
            .into_iter()
            .map(|(m, c)| (c.clone(), self.format_monomial(m)));
        format_linear_combination(pieces)
    }
}

/// Joins `(coefficient, body)` pairs as `2*x - y + 1/2*z`.
pub fn format_linear_combination(pieces: impl IntoIterator<Item = (Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, body) in pieces {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if mag.is_one() {
            out.push_str(&body);
        } else if body == "1" {
            let _ = write!(out, "{}", mag);
        } else {
            let _ = write!(out, "{}*{}", mag, body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
