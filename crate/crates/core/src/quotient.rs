//! Quotients of free graded-commutative algebras by monomial rewrite rules.
//!
//! Each rule `lhs -> rhs` replaces any monomial divisible by `lhs`. Rules
//! must have pairwise coprime leading monomials (in practice pure powers of
//! distinct generators, plus the Laurent relation `x*xinv -> 1` and square
//! free monomial relations such as `a*b -> 0`). Integer torsion is handled by
//! reducing the coefficients of monomials that contain a torsion generator.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graded::{Element, ElementDegree, FreeAlgebra, GeneratorSpec, Monomial};
use crate::linalg::{Echelon, SparseRow};
use crate::scalar::{Ring, Scalar};

pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Element,
}

impl RewriteRule {
    pub fn new(lhs: Monomial, rhs: Element) -> RewriteRule {
        RewriteRule { lhs, rhs }
    }
}

/// Coefficients of monomials containing `pattern` are taken mod `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionRule {
    pub modulus: u32,
    pub pattern: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedAlgebra {
    free: FreeAlgebra,
    rewrites: Vec<RewriteRule>,
    torsions: Vec<TorsionRule>,
    step_limit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceFailure {
    pub rules: (usize, usize),
    pub monomial: Monomial,
    pub left: Element,
    pub right: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub pairs_checked: usize,
    pub failures: Vec<ConfluenceFailure>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.failures.is_empty()
    }
}

impl PresentedAlgebra {
    /// Validated presentation with pairwise coprime leading monomials.
    pub fn new(
        ring: Ring,
        generators: Vec<GeneratorSpec>,
        rewrites: Vec<RewriteRule>,
        torsions: Vec<TorsionRule>,
    ) -> Result<PresentedAlgebra> {
        let alg = Self::with_overlapping_rules(ring, generators, rewrites, torsions)?;
        for (i, r) in alg.rewrites.iter().enumerate() {
            for s in &alg.rewrites[..i] {
                if !r.lhs.is_coprime_to(&s.lhs) {
                    return Err(Error::InvalidPresentation(format!(
                        "leading monomials `{}` and `{}` overlap",
                        alg.free.format_monomial(&s.lhs),
                        alg.free.format_monomial(&r.lhs)
                    )));
                }
            }
        }
        alg.check_degree_zero_bounds()?;
        Ok(alg)
    }

    /// Same checks as [`PresentedAlgebra::new`] except that leading monomials
    /// may overlap and degree-0 generators may be unbounded. Intended for
    /// experimenting with confluence.
    pub fn with_overlapping_rules(
        ring: Ring,
        generators: Vec<GeneratorSpec>,
        rewrites: Vec<RewriteRule>,
        torsions: Vec<TorsionRule>,
    ) -> Result<PresentedAlgebra> {
        let free = FreeAlgebra::new(ring, generators)?;
        let n = free.ngens();
        for r in &rewrites {
            let bad_shape = r.lhs.len() != n || r.rhs.terms().any(|(m, _)| m.len() != n);
            if bad_shape {
                return Err(Error::InvalidPresentation("rule does not match the generator list".to_string()));
            }
            if r.lhs.is_one() {
                return Err(Error::InvalidPresentation("rule with unit leading monomial".to_string()));
            }
            let lhs_text = free.format_monomial(&r.lhs);
            if !free.is_valid_monomial(&r.lhs) || r.rhs.terms().any(|(m, _)| !free.is_valid_monomial(m)) {
                return Err(Error::InvalidPresentation(format!("rule `{}` uses an exterior square", lhs_text)));
            }
            if r.rhs.terms().any(|(_, c)| c.ring() != ring) {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: r.rhs.terms().next().map(|(_, c)| c.ring()).unwrap_or(ring),
                });
            }
            match free.degree_of(&r.rhs) {
                ElementDegree::Any => {}
                ElementDegree::Exact(d) if d == free.monomial_degree(&r.lhs) => {}
                _ => {
                    return Err(Error::InvalidPresentation(format!("rule for `{}` is not homogeneous", lhs_text)));
                }
            }
        }
        for t in &torsions {
            if ring != Ring::Integers {
                return Err(Error::InvalidPresentation("torsion rules require integer coefficients".to_string()));
            }
            if t.modulus < 2 {
                return Err(Error::InvalidPresentation("torsion modulus must be at least 2".to_string()));
            }
            if t.pattern >= n {
                return Err(Error::InvalidPresentation("torsion pattern out of range".to_string()));
            }
        }
        Ok(PresentedAlgebra { free, rewrites, torsions, step_limit: DEFAULT_STEP_LIMIT })
    }

    pub fn with_step_limit(mut self, limit: usize) -> PresentedAlgebra {
        self.step_limit = limit;
        self
    }

    fn check_degree_zero_bounds(&self) -> Result<()> {
        for (i, g) in self.free.generators().iter().enumerate() {
            if g.degree != 0 || g.is_exterior() || self.power_bound(i).is_some() || self.laurent_partner(i).is_some() {
                continue;
            }
            return Err(Error::InvalidPresentation(format!(
                "degree-0 generator `{}` needs a rule bounding its exponent",
                g.name
            )));
        }
        Ok(())
    }

    pub fn free(&self) -> &FreeAlgebra {
        &self.free
    }

    pub fn ring(&self) -> Ring {
        self.free.ring()
    }

    pub fn generators(&self) -> &[GeneratorSpec] {
        self.free.generators()
    }

    pub fn ngens(&self) -> usize {
        self.free.ngens()
    }

    pub fn rewrites(&self) -> &[RewriteRule] {
        &self.rewrites
    }

    pub fn torsions(&self) -> &[TorsionRule] {
        &self.torsions
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.free.generator_index(name)
    }

    pub fn one(&self) -> Element {
        self.free.one()
    }

    pub fn unit(&self) -> Monomial {
        self.free.unit()
    }

    pub fn gen(&self, index: usize) -> Element {
        self.free.gen(index)
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.free.scalar(n)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> i64 {
        self.free.monomial_degree(m)
    }

    pub fn degree_of(&self, e: &Element) -> ElementDegree {
        self.free.degree_of(e)
    }

    /// `k` when some rule has leading monomial `g^k` for generator `index`.
    pub fn power_bound(&self, index: usize) -> Option<u32> {
        self.rewrites.iter().find_map(|r| match r.lhs.pure_power() {
            Some((i, k)) if i == index => Some(k),
            _ => None,
        })
    }

    /// Partner of a degree-0 generator in a rule `g*h -> unit`.
    pub fn laurent_partner(&self, index: usize) -> Option<usize> {
        self.rewrites.iter().find_map(|r| {
            let exps = r.lhs.exponents();
            let support: Vec<usize> = (0..exps.len()).filter(|&i| exps[i] > 0).collect();
            if support.len() != 2 || exps[support[0]] != 1 || exps[support[1]] != 1 {
                return None;
            }
            if !support.contains(&index) || support.iter().any(|&i| self.free.generators()[i].degree != 0) {
                return None;
            }
            let unit_rhs = r.rhs.len() == 1 && r.rhs.terms().all(|(m, c)| m.is_one() && c.inv().is_ok());
            if !unit_rhs {
                return None;
            }
            Some(if support[0] == index { support[1] } else { support[0] })
        })
    }

    /// Largest exponent a normal monomial can carry, when bounded.
    pub fn exponent_cap(&self, index: usize) -> Option<u32> {
        if self.free.generators()[index].is_exterior() {
            return Some(1);
        }
        self.power_bound(index).map(|k| k - 1)
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.free.is_valid_monomial(m) && !self.rewrites.iter().any(|r| r.lhs.divides(m))
    }

    /// Applies rule `rule` once to a monomial divisible by its leading monomial.
    pub fn rewrite_once(&self, m: &Monomial, rule: usize) -> Element {
        let r = &self.rewrites[rule];
        let q = r.lhs.cofactor_in(m);
        let (neg, _) = self.free.mul_monomials(&r.lhs, &q).expect("rule applies to a valid monomial");
        let mut out = Element::zero();
        for (t, c) in r.rhs.terms() {
            if let Some((neg2, tm)) = self.free.mul_monomials(t, &q) {
                out.add_term(tm, if neg ^ neg2 { -c } else { c.clone() });
            }
        }
        out
    }

    fn normal_form_with_first(&self, e: &Element, first: Option<(Monomial, usize)>) -> Result<Element> {
        let mut work = e.clone();
        let mut out = Element::zero();
        let mut steps = 0usize;
        if let Some((m, rule)) = first {
            work.add_assign(&self.rewrite_once(&m, rule));
        }
        while let Some((m, c)) = work.pop_last() {
            if !self.free.is_valid_monomial(&m) {
                continue;
            }
            match self.rewrites.iter().position(|r| r.lhs.divides(&m)) {
                None => out.add_term(m, c),
                Some(rule) => {
                    steps += 1;
                    if steps > self.step_limit {
                        return Err(Error::PresentationDiverges { steps: self.step_limit });
                    }
                    work.add_assign(&self.rewrite_once(&m, rule).scale(&c));
                }
            }
        }
        Ok(self.reduce_torsion(out))
    }

    pub fn normal_form(&self, e: &Element) -> Result<Element> {
        self.normal_form_with_first(e, None)
    }

    /// Gcd of the torsion moduli triggered by `m`, if any.
    pub fn torsion_modulus(&self, m: &Monomial) -> Option<BigInt> {
        self.torsions
            .iter()
            .filter(|t| m.exponent(t.pattern) > 0)
            .map(|t| BigInt::from(t.modulus))
            .reduce(|a, b| a.gcd(&b))
    }

    fn reduce_torsion(&self, e: Element) -> Element {
        if self.torsions.is_empty() {
            return e;
        }
        e.map_coefficients(|m, c| match self.torsion_modulus(m) {
            Some(modulus) => c.reduce_mod(&modulus),
            None => c,
        })
    }

    /// Product in the quotient.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.normal_form(&self.free.mul_free(a, b))
    }

    pub fn pow(&self, a: &Element, k: u32) -> Result<Element> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    /// Normal monomials of degree `d`, in canonical order.
    pub fn basis_in_degree(&self, d: i64) -> Result<Vec<Monomial>> {
        let caps: Vec<Option<u32>> = (0..self.ngens()).map(|i| self.exponent_cap(i)).collect();
        let mut out = enumerate_degree(&self.free, &caps, d)?;
        out.retain(|m| self.is_normal(m));
        Ok(out)
    }

    pub fn hilbert_dimension(&self, d: i64) -> Result<usize> {
        Ok(self.basis_in_degree(d)?.len())
    }

    /// Normal monomials with at most `max_len` factors, in canonical order.
    pub fn monomials_up_to_length(&self, max_len: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.ngens()];
        self.collect_short(0, max_len, &mut exps, &mut out);
        out.sort();
        out
    }

    fn collect_short(&self, i: usize, budget: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == exps.len() {
            let m = Monomial::from_exponents(exps.clone());
            if self.is_normal(&m) {
                out.push(m);
            }
            return;
        }
        let cap = self.exponent_cap(i).map_or(budget, |c| c.min(budget));
        for e in 0..=cap {
            exps[i] = e;
            self.collect_short(i + 1, budget - e, exps, out);
        }
        exps[i] = 0;
    }

    /// Dimension of the degree-`d` piece computed by row reduction of the
    /// relation ideal inside the free algebra, without using normal forms.
    ///
    /// Degree-0 generators bounded by `g^k -> rhs` are truncated at exponent
    /// `k - 1 + e`, where `e` is the largest exponent of `g` in any relation;
    /// reducing `g` first keeps every rewrite inside that box.
    pub fn oracle_dimension(&self, d: i64) -> Result<usize> {
        let ring = self.ring();
        if !ring.is_field() {
            return Err(Error::UnsupportedRing(ring));
        }
        let relations: Vec<Element> = self
            .rewrites
            .iter()
            .map(|r| Element::monomial(r.lhs.clone(), Scalar::one(ring)).sub(&r.rhs))
            .collect();
        let mut caps = Vec::with_capacity(self.ngens());
        for (i, g) in self.generators().iter().enumerate() {
            let cap = if g.is_exterior() {
                Some(1)
            } else if g.degree == 0 {
                let k = self.power_bound(i).ok_or_else(|| {
                    Error::UnsupportedPresentation(format!("degree-0 generator `{}` is not power-bounded", g.name))
                })?;
                let most = relations
                    .iter()
                    .flat_map(|r| r.terms().map(|(m, _)| m.exponent(i)))
                    .max()
                    .unwrap_or(0);
                Some(k - 1 + most)
            } else {
                None
            };
            caps.push(cap);
        }
        let in_box = |m: &Monomial| (0..m.len()).all(|i| caps[i].is_none_or(|c| m.exponent(i) <= c));

        let columns: BTreeMap<Monomial, usize> =
            enumerate_degree(&self.free, &caps, d)?.into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = Echelon::new(ring)?;
        for (rule, r) in self.rewrites.iter().zip(&relations) {
            let dr = self.monomial_degree(&rule.lhs);
            for m in enumerate_degree(&self.free, &caps, d - dr)? {
                let prod = self.free.mul_free(&Element::monomial(m, Scalar::one(ring)), r);
                if prod.terms().any(|(pm, _)| !in_box(pm)) {
                    continue;
                }
                let row: SparseRow = prod.terms().map(|(pm, c)| (columns[pm], c.clone())).collect();
                ech.insert(row)?;
            }
        }
        Ok(columns.len() - ech.rank())
    }

    /// Resolves every critical pair (and its products with one generator)
    /// whose degree lies in `window` and compares the two normal forms.
    pub fn check_local_confluence(&self, window: (i64, i64)) -> Result<ConfluenceReport> {
        let mut report = ConfluenceReport::default();
        for i in 0..self.rewrites.len() {
            for j in i + 1..self.rewrites.len() {
                let overlap = self.rewrites[i].lhs.lcm(&self.rewrites[j].lhs);
                let mut candidates = vec![overlap.clone()];
                for g in 0..self.ngens() {
                    let mut exps = overlap.exponents().to_vec();
                    exps[g] += 1;
                    candidates.push(Monomial::from_exponents(exps));
                }
                for m in candidates {
                    let deg = self.monomial_degree(&m);
                    if deg < window.0 || deg > window.1 || !self.free.is_valid_monomial(&m) {
                        continue;
                    }
                    report.pairs_checked += 1;
                    let left = self.normal_form_with_first(&Element::zero(), Some((m.clone(), i)))?;
                    let right = self.normal_form_with_first(&Element::zero(), Some((m.clone(), j)))?;
                    if left != right {
                        report.failures.push(ConfluenceFailure { rules: (i, j), monomial: m, left, right });
                    }
                }
            }
        }
        Ok(report)
    }

    pub fn format_element(&self, e: &Element) -> String {
        self.free.format_element(e)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        self.free.format_monomial(m)
    }
}

/// Monomials of degree `d` with exponent `i` at most `caps[i]` (unbounded for `None`).
pub fn enumerate_degree(free: &FreeAlgebra, caps: &[Option<u32>], d: i64) -> Result<Vec<Monomial>> {
    let gens = free.generators();
    let mut has_pos = None;
    let mut has_neg = None;
    for (i, g) in gens.iter().enumerate() {
        if caps[i].is_some() {
            continue;
        }
        if g.degree == 0 {
            return Err(Error::InfiniteDegreePiece { degree: d, generator: g.name.clone() });
        }
        if g.degree > 0 {
            has_pos = Some(i);
        } else {
            has_neg = Some(i);
        }
    }
    if let (Some(_), Some(j)) = (has_pos, has_neg) {
        return Err(Error::InfiniteDegreePiece { degree: d, generator: gens[j].name.clone() });
    }
    // reachable degree range of generators i.. ; None means unbounded
    let n = gens.len();
    let mut lo: Vec<Option<i64>> = vec![Some(0); n + 1];
    let mut hi: Vec<Option<i64>> = vec![Some(0); n + 1];
    for i in (0..n).rev() {
        let deg = gens[i].degree;
        let (l, h) = match caps[i] {
            Some(c) => {
                let span = deg * c as i64;
                (Some(span.min(0)), Some(span.max(0)))
            }
            None if deg > 0 => (Some(0), None),
            None => (None, Some(0)),
        };
        lo[i] = l.zip(lo[i + 1]).map(|(a, b)| a + b);
        hi[i] = h.zip(hi[i + 1]).map(|(a, b)| a + b);
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    let ctx = Enumeration { gens, caps, lo: &lo, hi: &hi };
    ctx.walk(0, d, &mut exps, &mut out);
    out.sort();
    Ok(out)
}

struct Enumeration<'a> {
    gens: &'a [GeneratorSpec],
    caps: &'a [Option<u32>],
    lo: &'a [Option<i64>],
    hi: &'a [Option<i64>],
}

impl Enumeration<'_> {
    fn reachable(&self, i: usize, target: i64) -> bool {
        self.lo[i].is_none_or(|l| l <= target) && self.hi[i].is_none_or(|h| target <= h)
    }

    fn walk(&self, i: usize, remaining: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.gens.len() {
            if remaining == 0 {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        if !self.reachable(i, remaining) {
            return;
        }
        let deg = self.gens[i].degree;
        let max_e = match self.caps[i] {
            Some(c) => c as i64,
            // lo/hi of the tail are finite here because unbounded generators share a sign
            None if deg > 0 => (remaining - self.lo[i + 1].unwrap_or(0)).div_euclid(deg),
            None => (self.hi[i + 1].unwrap_or(0) - remaining).div_euclid(-deg),
        };
        for e in 0..=max_e.max(-1) {
            let rest = remaining - e * deg;
            if self.reachable(i + 1, rest) {
                exps[i] = e as u32;
                self.walk(i + 1, rest, exps, out);
            }
        }
        exps[i] = 0;
    }
}
