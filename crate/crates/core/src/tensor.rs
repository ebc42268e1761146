//! Tensor products `A ⊗ B` of two presented algebras.
//!
//! Used both for the coproduct target `A ⊗ A` and for the loop algebra
//! `H(ΩG) ⊗ ℍ(G)`. Multiplication follows
//! `(a⊗x)(a'⊗x') = (-1)^{|x||a'|} aa' ⊗ xx'`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::Result;
use crate::graded::{format_linear_combination, Element, ElementDegree, Monomial};
use crate::quotient::PresentedAlgebra;
use crate::scalar::Scalar;

pub type Pair = (Monomial, Monomial);

/// Sparse map `(left monomial, right monomial) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Tensor {
    terms: BTreeMap<Pair, Scalar>,
}

pub type TensorSquareElement = Tensor;
pub type LoopElement = Tensor;

impl Tensor {
    pub fn zero() -> Tensor {
        Tensor::default()
    }

    pub fn basis(left: Monomial, right: Monomial, coeff: Scalar) -> Tensor {
        let mut t = Tensor::zero();
        t.add_term(left, right, coeff);
        t
    }

    /// Bilinear `a ⊗ x`.
    pub fn pure(a: &Element, x: &Element) -> Tensor {
        let mut t = Tensor::zero();
        for (m, c) in a.terms() {
            for (n, d) in x.terms() {
                t.add_term(m.clone(), n.clone(), c * d);
            }
        }
        t
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

    pub fn terms(&self) -> impl Iterator<Item = (&Pair, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &Monomial, right: &Monomial) -> Option<&Scalar> {
        self.terms.get(&(left.clone(), right.clone()))
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c = &*c + &coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Tensor) {
        for ((l, r), c) in other.terms() {
            self.add_term(l.clone(), r.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Tensor {
        Tensor { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero();
        for ((l, r), c) in self.terms() {
            out.add_term(l.clone(), r.clone(), s * c);
        }
        out
    }
}

/// The pair of algebras a [`Tensor`] lives over.
#[derive(Clone, Copy, Debug)]
pub struct TensorAlgebra<'a> {
    pub left: &'a PresentedAlgebra,
    pub right: &'a PresentedAlgebra,
}

impl<'a> TensorAlgebra<'a> {
    pub fn new(left: &'a PresentedAlgebra, right: &'a PresentedAlgebra) -> Self {
        TensorAlgebra { left, right }
    }

    pub fn square(alg: &'a PresentedAlgebra) -> Self {
        TensorAlgebra { left: alg, right: alg }
    }

    pub fn one(&self) -> Tensor {
        Tensor::basis(self.left.unit(), self.right.unit(), Scalar::one(self.left.ring()))
    }

    pub fn pair_degree(&self, pair: &Pair) -> i64 {
        self.left.monomial_degree(&pair.0) + self.right.monomial_degree(&pair.1)
    }

    pub fn degree_of(&self, t: &Tensor) -> ElementDegree {
        let mut degree = None;
        for (pair, _) in t.terms() {
            let d = self.pair_degree(pair);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => return ElementDegree::Mixed,
                _ => {}
            }
        }
        degree.map_or(ElementDegree::Any, ElementDegree::Exact)
    }

    pub fn homogeneous_parts(&self, t: &Tensor) -> BTreeMap<i64, Tensor> {
        let mut parts: BTreeMap<i64, Tensor> = BTreeMap::new();
        for (pair, c) in t.terms() {
            parts.entry(self.pair_degree(pair)).or_default().add_term(pair.0.clone(), pair.1.clone(), c.clone());
        }
        parts
    }

    fn torsion_modulus(&self, pair: &Pair) -> Option<BigInt> {
        let moduli = self.left.torsion_modulus(&pair.0).into_iter().chain(self.right.torsion_modulus(&pair.1));
        moduli.reduce(|a, b| a.gcd(&b))
    }

    /// Normal form in each slot, with integer torsion from either side.
    pub fn normalize(&self, t: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for ((l, r), c) in t.terms() {
            let a = self.left.normal_form(&Element::monomial(l.clone(), c.clone()))?;
            let x = self.right.normal_form(&Element::monomial(r.clone(), Scalar::one(self.right.ring())))?;
            out.add_assign(&Tensor::pure(&a, &x));
        }
        Ok(self.reduce_torsion(out))
    }

    fn reduce_torsion(&self, t: Tensor) -> Tensor {
        if self.left.torsions().is_empty() && self.right.torsions().is_empty() {
            return t;
        }
        let mut out = Tensor::zero();
        for (pair, c) in t.terms {
            let c = match self.torsion_modulus(&pair) {
                Some(m) => c.reduce_mod(&m),
                None => c,
            };
            out.add_term(pair.0, pair.1, c);
        }
        out
    }

    /// Builds `a ⊗ x` and normalizes it.
    pub fn tensor(&self, a: &Element, x: &Element) -> Result<Tensor> {
        self.normalize(&Tensor::pure(a, x))
    }

    pub fn mul(&self, s: &Tensor, t: &Tensor) -> Result<Tensor> {
        let lf = self.left.free();
        let rf = self.right.free();
        let mut out = Tensor::zero();
        for ((a, x), c) in s.terms() {
            let x_odd = self.right.monomial_degree(x) % 2 != 0;
            for ((a2, x2), c2) in t.terms() {
                let Some((n1, aa)) = lf.mul_monomials(a, a2) else { continue };
                let Some((n2, xx)) = rf.mul_monomials(x, x2) else { continue };
                let twist = x_odd && self.left.monomial_degree(a2) % 2 != 0;
                let c = c * c2;
                out.add_term(aa, xx, if n1 ^ n2 ^ twist { -c } else { c });
            }
        }
        self.normalize(&out)
    }

    /// `a⊗b ↦ (-1)^{|a||b|} b⊗a`; meaningful when both slots share an algebra.
    pub fn swap(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((l, r), c) in t.terms() {
            let odd = self.left.monomial_degree(l) % 2 != 0 && self.right.monomial_degree(r) % 2 != 0;
            out.add_term(r.clone(), l.clone(), if odd { -c } else { c.clone() });
        }
        out
    }

    /// Apply linear maps slotwise: `(f ⊗ g)(a⊗x) = (-1)^{deg_g |a|} f(a) ⊗ g(x)`.
    pub fn map_slots(
        &self,
        t: &Tensor,
        g_degree: i64,
        mut f: impl FnMut(&Monomial) -> Result<Element>,
        mut g: impl FnMut(&Monomial) -> Result<Element>,
    ) -> Result<Tensor> {
        let mut out = Tensor::zero();
        for ((a, x), c) in t.terms() {
            let fa = f(a)?;
            if fa.is_zero() {
                continue;
            }
            let gx = g(x)?;
            let neg = g_degree % 2 != 0 && self.left.monomial_degree(a) % 2 != 0;
            let coeff = if neg { -c } else { c.clone() };
            out.add_assign(&Tensor::pure(&fa, &gx).scale(&coeff));
        }
        self.normalize(&out)
    }

    /// Terms ordered by total degree, then by the pair of exponent vectors.
    pub fn format(&self, t: &Tensor) -> String {
        let mut terms: Vec<_> = t.terms().collect();
        terms.sort_by(|a, b| self.pair_degree(a.0).cmp(&self.pair_degree(b.0)).then_with(|| a.0.cmp(b.0)));
        let pieces = terms.into_iter().map(|((l, r), c)| {
            let body = alloc::format!("{} (x) {}", self.left.format_monomial(l), self.right.format_monomial(r));
            (c.clone(), body)
        });
        format_linear_combination(pieces)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GeneratorSpec as G;
    use crate::quotient::RewriteRule;
    use crate::scalar::Ring;
    use alloc::vec;

    fn s3() -> (PresentedAlgebra, PresentedAlgebra) {
        let ring = Ring::Integers;
        let omega = PresentedAlgebra::new(ring, vec![G::polynomial("u", 2)], vec![], vec![]).unwrap();
        let base = PresentedAlgebra::new(ring, vec![G::exterior("a", -3)], vec![], vec![]).unwrap();
        (omega, base)
    }

    #[test]
    fn exterior_square_in_loop_product() {
        let (omega, base) = s3();
        let t = TensorAlgebra::new(&omega, &base);
        let ua = t.tensor(&omega.gen(0), &base.gen(0)).unwrap();
        assert!(t.mul(&ua, &ua).unwrap().is_zero());
        assert_eq!(t.mul(&t.one(), &ua).unwrap(), ua);
        assert_eq!(t.format(&ua), "u (x) a");
    }

    #[test]
    fn koszul_twist_in_square() {
        let ring = Ring::Rationals;
        let alg = PresentedAlgebra::new(
            ring,
            vec![G::exterior("p", 1), G::exterior("q", 3)],
            vec![RewriteRule::new(Monomial::from_exponents(vec![1, 1]), Element::zero())],
            vec![],
        )
        .unwrap();
        let t = TensorAlgebra::square(&alg);
        let one = alg.one();
        let p1 = t.tensor(&one, &alg.gen(0)).unwrap();
        let q1 = t.tensor(&alg.gen(1), &one).unwrap();
        // (1⊗p)(q⊗1) = -(q⊗p)
        let prod = t.mul(&p1, &q1).unwrap();
        assert_eq!(prod, t.tensor(&alg.gen(1), &alg.gen(0)).unwrap().neg());
        assert_eq!(t.swap(&t.swap(&prod)), prod);
        assert_eq!(t.format(&prod), "-q (x) p");
    }

    #[test]
    fn torsion_on_either_side() {
        let ring = Ring::Integers;
        let omega = PresentedAlgebra::new(ring, vec![G::polynomial("u", 2)], vec![], vec![]).unwrap();
        let base = PresentedAlgebra::new(
            ring,
            vec![G::exterior("b", -2)],
            vec![],
            vec![crate::quotient::TorsionRule { modulus: 2, pattern: 0 }],
        )
        .unwrap();
        let t = TensorAlgebra::new(&omega, &base);
        let ub = t.tensor(&omega.gen(0), &base.gen(0)).unwrap();
        assert!(t.normalize(&ub.scale(&Scalar::from_i64(ring, 4))).unwrap().is_zero());
        assert_eq!(t.normalize(&ub.scale(&Scalar::from_i64(ring, 3))).unwrap(), ub);
    }
}
