//! Ready-made loop models: `S¹`, `S³`, `ℝP³` over `ℤ`, and `SO(n)` over `ℚ`
//! and `ℤ₂`, together with their closed-form `Δ` tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bv::{LoopModel, LoopModelParts, PrimitiveAction};
use crate::error::{Error, Result};
use crate::graded::{Element, GeneratorSpec as G, Monomial};
use crate::hopf::{Derivation, Primitive, PrimitiveBasis};
use crate::quotient::{PresentedAlgebra, RewriteRule, TorsionRule};
use crate::scalar::{Ring, Scalar};
use crate::tensor::{LoopElement, Tensor};

pub const DEFAULT_MAX_M: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelId {
    CircleZ,
    S3Z,
    Rp3Z,
    /// `ℝP³` with rational coefficients; the 2-torsion classes vanish.
    Rp3Q,
    SoOddQ(u32),
    SoEvenQ(u32),
    SoOddF2(u32),
    SoEvenF2(u32),
}

impl ModelId {
    /// The three low-dimensional integral models and the four `SO` families
    /// for `m = 1..=max_m`.
    pub fn catalog(max_m: u32) -> Vec<ModelId> {
        let mut out = vec![ModelId::CircleZ, ModelId::S3Z, ModelId::Rp3Z];
        for m in 1..=max_m {
            out.extend([ModelId::SoOddQ(m), ModelId::SoEvenQ(m), ModelId::SoOddF2(m), ModelId::SoEvenF2(m)]);
        }
        out
    }

    pub fn m(&self) -> Option<u32> {
        match *self {
            ModelId::SoOddQ(m) | ModelId::SoEvenQ(m) | ModelId::SoOddF2(m) | ModelId::SoEvenF2(m) => Some(m),
            _ => None,
        }
    }

    pub fn ring(&self) -> Ring {
        match self {
            ModelId::CircleZ | ModelId::S3Z | ModelId::Rp3Z => Ring::Integers,
            ModelId::Rp3Q | ModelId::SoOddQ(_) | ModelId::SoEvenQ(_) => Ring::Rationals,
            ModelId::SoOddF2(_) | ModelId::SoEvenF2(_) => Ring::GF2,
        }
    }

    pub fn is_so(&self) -> bool {
        self.m().is_some()
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::CircleZ => f.write_str("Circle_Z"),
            ModelId::S3Z => f.write_str("S3_Z"),
            ModelId::Rp3Z => f.write_str("RP3_Z"),
            ModelId::Rp3Q => f.write_str("RP3_Q"),
            ModelId::SoOddQ(m) => write!(f, "SO_odd_Q({})", m),
            ModelId::SoEvenQ(m) => write!(f, "SO_even_Q({})", m),
            ModelId::SoOddF2(m) => write!(f, "SO_odd_F2({})", m),
            ModelId::SoEvenF2(m) => write!(f, "SO_even_F2({})", m),
        }
    }
}

impl FromStr for ModelId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ModelId> {
        let s = s.trim();
        match s {
            "Circle_Z" => return Ok(ModelId::CircleZ),
            "S3_Z" => return Ok(ModelId::S3Z),
            "RP3_Z" => return Ok(ModelId::Rp3Z),
            "RP3_Q" => return Ok(ModelId::Rp3Q),
            _ => {}
        }
        let unknown = || Error::InvalidModel(format!("unknown model `{}`", s));
        let (family, rest) = s.split_once('(').ok_or_else(unknown)?;
        let m: u32 = rest.strip_suffix(')').ok_or_else(unknown)?.trim().parse().map_err(|_| unknown())?;
        match family {
            "SO_odd_Q" => Ok(ModelId::SoOddQ(m)),
            "SO_even_Q" => Ok(ModelId::SoEvenQ(m)),
            "SO_odd_F2" => Ok(ModelId::SoOddF2(m)),
            "SO_even_F2" => Ok(ModelId::SoEvenF2(m)),
            _ => Err(unknown()),
        }
    }
}

pub fn build(id: ModelId) -> Result<LoopModel> {
    build_with_limit(id, DEFAULT_MAX_M)
}

pub fn build_with_limit(id: ModelId, max_m: u32) -> Result<LoopModel> {
    if let Some(m) = id.m() {
        if m == 0 || m > max_m {
            return Err(Error::InvalidModel(format!("{}: m must lie in 1..={}", id, max_m)));
        }
    }
    let parts = match id {
        ModelId::CircleZ => circle()?,
        ModelId::S3Z => s3()?,
        ModelId::Rp3Z => rp3_integral()?,
        ModelId::Rp3Q => rp3_rational()?,
        ModelId::SoOddQ(m) => so_rational(m, false)?,
        ModelId::SoEvenQ(m) => so_rational(m, true)?,
        ModelId::SoOddF2(m) => so_mod_two(m, false)?,
        ModelId::SoEvenF2(m) => so_mod_two(m, true)?,
    };
    LoopModel::new(parts)
}

/// `ℝP³` with coefficients extended to `ℚ`.
pub fn rp3_rational_model() -> Result<LoopModel> {
    build(ModelId::Rp3Q)
}

fn mono(n: usize, pairs: &[(usize, u32)]) -> Monomial {
    let mut exps = vec![0u32; n];
    for &(i, e) in pairs {
        exps[i] += e;
    }
    Monomial::from_exponents(exps)
}

fn elem(ring: Ring, n: usize, terms: &[(i64, &[(usize, u32)])]) -> Element {
    Element::from_terms(terms.iter().map(|(c, pairs)| (mono(n, pairs), Scalar::from_i64(ring, *c))))
}

fn primitive_coproduct(alg: &PresentedAlgebra, i: usize) -> Tensor {
    Tensor::pure(&alg.gen(i), &alg.one()).add(&Tensor::pure(&alg.one(), &alg.gen(i)))
}

fn grouplike_coproduct(alg: &PresentedAlgebra, i: usize) -> Tensor {
    Tensor::pure(&alg.gen(i), &alg.gen(i))
}

fn ints(ring: Ring, values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| Scalar::from_i64(ring, v)).collect()
}

/// Derivation sending generator `i` to the unit and every other generator to zero.
fn dual_derivation(alg: &PresentedAlgebra, degree: i64, target: usize) -> Derivation {
    let values = (0..alg.ngens()).map(|k| if k == target { alg.one() } else { Element::zero() }).collect();
    Derivation { degree, values }
}

fn circle() -> Result<LoopModelParts> {
    let ring = Ring::Integers;
    let omega = PresentedAlgebra::new(
        ring,
        vec![G::polynomial("x", 0), G::polynomial("xinv", 0)],
        vec![RewriteRule::new(mono(2, &[(0, 1), (1, 1)]), elem(ring, 2, &[(1, &[])]))],
        vec![],
    )?;
    let base = PresentedAlgebra::new(ring, vec![G::exterior("a", -1)], vec![], vec![])?;
    let partial = Derivation { degree: 0, values: vec![omega.gen(0), omega.gen(1).neg()] };
    Ok(LoopModelParts {
        name: ModelId::CircleZ.to_string(),
        coproducts: vec![grouplike_coproduct(&omega, 0), grouplike_coproduct(&omega, 1)],
        counits: ints(ring, &[1, 1]),
        suspension: vec![ints(ring, &[1]), ints(ring, &[-1])],
        actions: vec![PrimitiveAction::Derivation(dual_derivation(&base, 1, 0))],
        closed_form_partials: Some(vec![partial]),
        primitives: PrimitiveBasis::new(vec![Primitive::new("s1", 1)]),
        dim: 1,
        omega,
        base,
    })
}

fn s3() -> Result<LoopModelParts> {
    let ring = Ring::Integers;
    let omega = PresentedAlgebra::new(ring, vec![G::polynomial("u", 2)], vec![], vec![])?;
    let base = PresentedAlgebra::new(ring, vec![G::exterior("a", -3)], vec![], vec![])?;
    Ok(LoopModelParts {
        name: ModelId::S3Z.to_string(),
        coproducts: vec![primitive_coproduct(&omega, 0)],
        counits: ints(ring, &[0]),
        suspension: vec![ints(ring, &[1])],
        actions: vec![PrimitiveAction::Derivation(dual_derivation(&base, 3, 0))],
        closed_form_partials: Some(vec![dual_derivation(&omega, -2, 0)]),
        primitives: PrimitiveBasis::new(vec![Primitive::new("s3", 3)]),
        dim: 3,
        omega,
        base,
    })
}

fn rp3_omega(ring: Ring) -> Result<PresentedAlgebra> {
    PresentedAlgebra::new(
        ring,
        vec![G::polynomial("u", 2), G::polynomial("v", 0)],
        vec![RewriteRule::new(mono(2, &[(1, 2)]), elem(ring, 2, &[(1, &[])]))],
        vec![],
    )
}

fn rp3_integral() -> Result<LoopModelParts> {
    let ring = Ring::Integers;
    let omega = rp3_omega(ring)?;
    // b has even degree but squares to zero in Λ[a,b]
    let base = PresentedAlgebra::new(
        ring,
        vec![G::exterior("a", -3), G::exterior("b", -2)],
        vec![RewriteRule::new(mono(2, &[(0, 1), (1, 1)]), Element::zero())],
        vec![TorsionRule { modulus: 2, pattern: 1 }],
    )?;
    let a = mono(2, &[(0, 1)]);
    let rho = BTreeMap::from([(a.clone(), base.gen(1))]);
    let fund = BTreeMap::from([(a, base.one())]);
    Ok(LoopModelParts {
        name: ModelId::Rp3Z.to_string(),
        coproducts: vec![primitive_coproduct(&omega, 0), grouplike_coproduct(&omega, 1)],
        counits: ints(ring, &[0, 1]),
        suspension: vec![ints(ring, &[0, 2]), ints(ring, &[1, 0])],
        actions: vec![PrimitiveAction::Table(rho), PrimitiveAction::Table(fund)],
        closed_form_partials: None,
        primitives: PrimitiveBasis::new(vec![Primitive::with_torsion("rho", 1, 2), Primitive::new("fund", 3)]),
        dim: 3,
        omega,
        base,
    })
}

fn rp3_rational() -> Result<LoopModelParts> {
    let ring = Ring::Rationals;
    let omega = rp3_omega(ring)?;
    let base = PresentedAlgebra::new(ring, vec![G::exterior("a", -3)], vec![], vec![])?;
    let partial = Derivation { degree: -2, values: vec![omega.one().scale(&Scalar::from_i64(ring, 2)), Element::zero()] };
    Ok(LoopModelParts {
        name: ModelId::Rp3Q.to_string(),
        coproducts: vec![primitive_coproduct(&omega, 0), grouplike_coproduct(&omega, 1)],
        counits: ints(ring, &[0, 1]),
        suspension: vec![ints(ring, &[2]), ints(ring, &[0])],
        actions: vec![PrimitiveAction::Derivation(dual_derivation(&base, 3, 0))],
        closed_form_partials: Some(vec![partial]),
        primitives: PrimitiveBasis::new(vec![Primitive::new("fund", 3)]),
        dim: 3,
        omega,
        base,
    })
}

/// `D(g_i) = Σ_j g_{i-j} ⊗ g_j` over the indices `offset..offset+len`.
fn divided_power_coproduct(alg: &PresentedAlgebra, offset: usize, i: usize) -> Tensor {
    let mut t = Tensor::zero();
    for j in 0..=i {
        t.add_assign(&Tensor::pure(&alg.gen(offset + i - j), &alg.gen(offset + j)));
    }
    t
}

/// Least power of two `r` with `(2i-1)·r ≥ bound`.
pub fn truncation_height(i: u32, bound: u32) -> u32 {
    let mut r = 1;
    while (2 * i - 1) * r < bound {
        r *= 2;
    }
    r
}

fn so_rational(m: u32, even: bool) -> Result<LoopModelParts> {
    let ring = Ring::Rationals;
    let mu = m as usize;
    let nalpha = 2 * mu;
    let n = nalpha + usize::from(even);
    let mut gens: Vec<G> = (0..nalpha).map(|i| G::polynomial(format!("alpha{}", i), 2 * i as i64)).collect();
    if even {
        gens.push(G::polynomial("eps", 2 * m as i64));
    }
    let mut rules = vec![RewriteRule::new(mono(n, &[(0, 2)]), elem(ring, n, &[(1, &[])]))];
    for i in 1..mu {
        let mut rhs = Element::zero();
        for k in 1..=i {
            let c = if k % 2 == 1 { 2 } else { -2 };
            rhs.add_assign(&elem(ring, n, &[(c, &[(i - k, 1), (i + k, 1)])]));
        }
        rules.push(RewriteRule::new(mono(n, &[(i, 2)]), rhs));
    }
    let omega = PresentedAlgebra::new(ring, gens, rules, vec![])?;

    let mut base_gens: Vec<G> = (1..=mu).map(|i| G::exterior(format!("beta{}", 4 * i - 1), -(4 * i as i64 - 1))).collect();
    let mut prims: Vec<Primitive> = (1..=mu).map(|i| Primitive::new(format!("a{}", 4 * i - 1), 4 * i as i64 - 1)).collect();
    if even {
        base_gens.push(G::exterior(format!("gamma{}", 2 * m + 1), -(2 * m as i64 + 1)));
        prims.push(Primitive::new(format!("b{}", 2 * m + 1), 2 * m as i64 + 1));
    }
    let base = PresentedAlgebra::new(ring, base_gens, vec![], vec![])?;
    let np = prims.len();

    let mut coproducts: Vec<Tensor> = (0..nalpha).map(|i| divided_power_coproduct(&omega, 0, i)).collect();
    let mut counits = vec![Scalar::zero(ring); n];
    counits[0] = Scalar::one(ring);
    let mut suspension = vec![vec![Scalar::zero(ring); np]; n];
    for i in 1..=mu {
        suspension[2 * i - 1][i - 1] = Scalar::one(ring);
    }
    if even {
        coproducts.push(primitive_coproduct(&omega, nalpha));
        suspension[nalpha][mu] = Scalar::one(ring);
    }

    let mut actions = Vec::with_capacity(np);
    let mut partials = Vec::with_capacity(np);
    for i in 1..=mu {
        actions.push(PrimitiveAction::Derivation(dual_derivation(&base, 4 * i as i64 - 1, i - 1)));
        let shift = 2 * i - 1;
        let values = (0..n)
            .map(|j| if j < nalpha && j >= shift { omega.gen(j - shift) } else { Element::zero() })
            .collect();
        partials.push(Derivation { degree: 2 - 4 * i as i64, values });
    }
    if even {
        actions.push(PrimitiveAction::Derivation(dual_derivation(&base, 2 * m as i64 + 1, mu)));
        partials.push(dual_derivation(&omega, -2 * m as i64, nalpha));
    }
    let dim = if even { (m + 1) * (2 * m + 1) } else { m * (2 * m + 1) };
    let id = if even { ModelId::SoEvenQ(m) } else { ModelId::SoOddQ(m) };
    Ok(LoopModelParts {
        name: id.to_string(),
        omega,
        coproducts,
        counits,
        suspension,
        base,
        dim,
        primitives: PrimitiveBasis::new(prims),
        actions,
        closed_form_partials: Some(partials),
    })
}

fn so_mod_two(m: u32, even: bool) -> Result<LoopModelParts> {
    let ring = Ring::GF2;
    let mu = m as usize;
    // a_0..a_{m-1} (plus a_m when even), then b_0..b_{m-1}
    let na = mu + usize::from(even);
    let n = na + mu;
    let b = |j: usize| na + j;
    let mut gens: Vec<G> = (0..na).map(|i| G::polynomial(format!("a{}", i), 2 * i as i64)).collect();
    gens.extend((0..mu).map(|i| G::polynomial(format!("b{}", i), 2 * (mu + i) as i64)));

    let mut rules = vec![RewriteRule::new(mono(n, &[(0, 2)]), elem(ring, n, &[(1, &[])]))];
    for i in 1..mu {
        let rhs = if 2 * i < mu {
            Element::zero()
        } else {
            let k = 2 * i - mu;
            let mut rhs = Element::zero();
            for j in 0..=k {
                rhs.add_assign(&elem(ring, n, &[(1, &[(b(j), 1), (k - j, 1)])]));
            }
            rhs
        };
        rules.push(RewriteRule::new(mono(n, &[(i, 2)]), rhs));
    }
    let omega = PresentedAlgebra::new(ring, gens, rules, vec![])?;

    let top = if even { mu + 1 } else { mu };
    let bound = if even { 2 * m + 2 } else { 2 * m + 1 };
    let mut base_gens = Vec::with_capacity(top);
    let mut base_rules = Vec::with_capacity(top);
    for i in 1..=top {
        base_gens.push(G::polynomial(format!("c{}", 2 * i - 1), -(2 * i as i64 - 1)));
        let r = truncation_height(i as u32, bound);
        base_rules.push(RewriteRule::new(mono(top, &[(i - 1, r)]), Element::zero()));
    }
    let base = PresentedAlgebra::new(ring, base_gens, base_rules, vec![])?;
    let prims: Vec<Primitive> = (1..=top).map(|i| Primitive::new(format!("q{}", 2 * i - 1), 2 * i as i64 - 1)).collect();

    let mut coproducts: Vec<Tensor> = (0..na).map(|i| divided_power_coproduct(&omega, 0, i)).collect();
    for i in 0..mu {
        let mut t = Tensor::zero();
        for j in 0..=i {
            t.add_assign(&Tensor::pure(&omega.gen(b(i - j)), &omega.gen(j)));
            t.add_assign(&Tensor::pure(&omega.gen(j), &omega.gen(b(i - j))));
        }
        coproducts.push(t);
    }
    let mut counits = vec![Scalar::zero(ring); n];
    counits[0] = Scalar::one(ring);
    let mut suspension = vec![vec![Scalar::zero(ring); top]; n];
    for (i, row) in suspension.iter_mut().enumerate().take(na) {
        row[i] = Scalar::one(ring);
    }

    let mut actions = Vec::with_capacity(top);
    let mut partials = Vec::with_capacity(top);
    for i in 1..=top {
        actions.push(PrimitiveAction::Derivation(dual_derivation(&base, 2 * i as i64 - 1, i - 1)));
        let shift = i - 1;
        let mut values = Vec::with_capacity(n);
        for j in 0..na {
            values.push(if j >= shift { omega.gen(j - shift) } else { Element::zero() });
        }
        for j in 0..mu {
            values.push(if j >= shift { omega.gen(b(j - shift)) } else { Element::zero() });
        }
        partials.push(Derivation { degree: 2 - 2 * i as i64, values });
    }
    let dim = if even { (m + 1) * (2 * m + 1) } else { m * (2 * m + 1) };
    let id = if even { ModelId::SoEvenF2(m) } else { ModelId::SoOddF2(m) };
    Ok(LoopModelParts {
        name: id.to_string(),
        omega,
        coproducts,
        counits,
        suspension,
        base,
        dim,
        primitives: PrimitiveBasis::new(prims),
        actions,
        closed_form_partials: Some(partials),
    })
}

fn pair(ring: Ring, left: Monomial, right: Monomial, c: i64) -> LoopElement {
    Tensor::basis(left, right, Scalar::from_i64(ring, c))
}

/// Closed-form `Δ` values on a generating family, written directly from the
/// index formulas rather than computed by the engine.
pub fn golden_delta_table(id: ModelId) -> Result<Vec<(LoopElement, LoopElement)>> {
    if let Some(m) = id.m() {
        if m == 0 || m > DEFAULT_MAX_M {
            return Err(Error::InvalidModel(format!("{}: m must lie in 1..={}", id, DEFAULT_MAX_M)));
        }
    }
    let ring = id.ring();
    let mut rows = Vec::new();
    match id {
        ModelId::CircleZ => {
            for i in -8i64..=8 {
                let xi = if i >= 0 { mono(2, &[(0, i as u32)]) } else { mono(2, &[(1, (-i) as u32)]) };
                rows.push((pair(ring, xi.clone(), mono(1, &[(0, 1)]), 1), pair(ring, xi.clone(), mono(1, &[]), i)));
                rows.push((pair(ring, xi, mono(1, &[]), 1), Tensor::zero()));
            }
        }
        ModelId::S3Z => {
            for i in 0u32..=8 {
                let expect = if i == 0 { Tensor::zero() } else { pair(ring, mono(1, &[(0, i - 1)]), mono(1, &[]), i as i64) };
                rows.push((pair(ring, mono(1, &[(0, i)]), mono(1, &[(0, 1)]), 1), expect));
                rows.push((pair(ring, mono(1, &[(0, i)]), mono(1, &[]), 1), Tensor::zero()));
            }
        }
        ModelId::Rp3Z | ModelId::Rp3Q => {
            let integral = id == ModelId::Rp3Z;
            let nb = if integral { 2 } else { 1 };
            for i in 0u32..=8 {
                for j in 0u32..=1 {
                    let uv = mono(2, &[(0, i), (1, j)]);
                    let mut expect = Tensor::zero();
                    if i > 0 {
                        expect.add_assign(&pair(ring, mono(2, &[(0, i - 1), (1, j)]), mono(nb, &[]), 2 * i as i64));
                    }
                    if integral && j > 0 {
                        expect.add_assign(&pair(ring, uv.clone(), mono(nb, &[(1, 1)]), j as i64));
                    }
                    rows.push((pair(ring, uv.clone(), mono(nb, &[(0, 1)]), 1), expect));
                    if integral {
                        rows.push((pair(ring, uv.clone(), mono(nb, &[(1, 1)]), 1), Tensor::zero()));
                    }
                    rows.push((pair(ring, uv, mono(nb, &[]), 1), Tensor::zero()));
                }
            }
        }
        ModelId::SoOddQ(m) | ModelId::SoEvenQ(m) => {
            let even = matches!(id, ModelId::SoEvenQ(_));
            let mu = m as usize;
            let n = 2 * mu + usize::from(even);
            let nb = mu + usize::from(even);
            for j in 0..2 * mu {
                rows.push((pair(ring, mono(n, &[(j, 1)]), mono(nb, &[]), 1), Tensor::zero()));
                for i in 1..=mu {
                    let expect = if j + 1 >= 2 * i {
                        pair(ring, mono(n, &[(j + 1 - 2 * i, 1)]), mono(nb, &[]), 1)
                    } else {
                        Tensor::zero()
                    };
                    rows.push((pair(ring, mono(n, &[(j, 1)]), mono(nb, &[(i - 1, 1)]), 1), expect));
                }
                if even {
                    rows.push((pair(ring, mono(n, &[(j, 1)]), mono(nb, &[(mu, 1)]), 1), Tensor::zero()));
                }
            }
            if even {
                let eps = mono(n, &[(2 * mu, 1)]);
                rows.push((pair(ring, eps.clone(), mono(nb, &[(mu, 1)]), 1), pair(ring, mono(n, &[]), mono(nb, &[]), 1)));
                for i in 0..mu {
                    rows.push((pair(ring, eps.clone(), mono(nb, &[(i, 1)]), 1), Tensor::zero()));
                }
            }
        }
        ModelId::SoOddF2(m) | ModelId::SoEvenF2(m) => {
            let even = matches!(id, ModelId::SoEvenF2(_));
            let mu = m as usize;
            let na = mu + usize::from(even);
            let n = na + mu;
            let top = if even { mu + 1 } else { mu };
            // (generator index, family offset, index within family)
            let family: Vec<(usize, usize, usize)> =
                (0..na).map(|j| (j, 0, j)).chain((0..mu).map(|j| (na + j, na, j))).collect();
            for &(g, offset, j) in &family {
                rows.push((pair(ring, mono(n, &[(g, 1)]), mono(top, &[]), 1), Tensor::zero()));
                for i in 1..=top {
                    let expect = if j + 1 >= i {
                        pair(ring, mono(n, &[(offset + j + 1 - i, 1)]), mono(top, &[]), 1)
                    } else {
                        Tensor::zero()
                    };
                    rows.push((pair(ring, mono(n, &[(g, 1)]), mono(top, &[(i - 1, 1)]), 1), expect));
                }
            }
        }
    }
    Ok(rows)
}

/// Human-readable summary of a model's data.
pub fn describe(model: &LoopModel) -> String {
    let omega = model.omega();
    let base = model.base();
    let mut out = String::new();
    let gens = |alg: &PresentedAlgebra| {
        alg.generators().iter().map(|g| format!("{}[{}]", g.name, g.degree)).collect::<Vec<_>>().join(", ")
    };
    out += &format!("model {} over {}, dim {}\n", model.name(), model.ring(), model.dim());
    out += &format!("loop side generators: {}\n", gens(omega));
    for r in omega.rewrites() {
        out += &format!("  {} -> {}\n", omega.format_monomial(&r.lhs), omega.format_element(&r.rhs));
    }
    out += &format!("base generators: {}\n", gens(base));
    for r in base.rewrites() {
        out += &format!("  {} -> {}\n", base.format_monomial(&r.lhs), base.format_element(&r.rhs));
    }
    for t in base.torsions() {
        out += &format!("  {}*{} = 0\n", t.modulus, base.generators()[t.pattern].name);
    }
    out += "coproduct, counit, suspension:\n";
    let sq = crate::tensor::TensorAlgebra::square(omega);
    for (i, g) in omega.generators().iter().enumerate() {
        out += &format!(
            "  D({}) = {}; eps = {}; sigma = {}\n",
            g.name,
            sq.format(model.hopf().generator_coproduct(i)),
            model.hopf().generator_counit(i),
            model.primitives().format(model.suspension().generator_value(i))
        );
    }
    out += "primitives:\n";
    for (p, a) in model.primitives().primitives.iter().zip(model.actions()) {
        let torsion = p.torsion.map(|t| format!(", order {}", t)).unwrap_or_default();
        let kind = match a {
            PrimitiveAction::Derivation(_) => "derivation",
            PrimitiveAction::Table(_) => "table",
        };
        out += &format!("  {}[{}{}] acts by {}\n", p.name, p.degree, torsion, kind);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bv::PartialSource;

    #[test]
    fn ids_round_trip() {
        for id in ModelId::catalog(3).into_iter().chain([ModelId::Rp3Q]) {
            assert_eq!(id.to_string().parse::<ModelId>().unwrap(), id);
        }
        assert!("SO_odd_Q".parse::<ModelId>().is_err());
        assert!("Torus".parse::<ModelId>().is_err());
        assert_eq!(ModelId::catalog(3).len(), 15);
    }

    #[test]
    fn m_limit() {
        assert!(build(ModelId::SoOddQ(0)).is_err());
        assert!(build(ModelId::SoOddQ(7)).is_err());
        assert!(build_with_limit(ModelId::SoOddQ(2), 1).is_err());
    }

    #[test]
    fn truncation_heights() {
        // (2i-1)·r ≥ 2m+1, r a power of two
        assert_eq!(truncation_height(1, 3), 4);
        assert_eq!(truncation_height(1, 5), 8);
        assert_eq!(truncation_height(2, 5), 2);
        assert_eq!(truncation_height(2, 4), 2);
        assert_eq!(truncation_height(3, 5), 1);
    }

    #[test]
    fn every_catalog_model_builds() {
        for id in ModelId::catalog(3).into_iter().chain([ModelId::Rp3Q]) {
            let model = build(id).unwrap_or_else(|e| panic!("{}: {}", id, e));
            assert_eq!(model.name(), id.to_string());
        }
    }

    #[test]
    fn so3_rational_shape() {
        let model = build(ModelId::SoOddQ(1)).unwrap();
        let names: Vec<_> = model.omega().generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["alpha0", "alpha1"]);
        assert_eq!(model.base().generators()[0].degree, -3);
        assert_eq!(model.primitives().primitives[0].name, "a3");
    }

    #[test]
    fn golden_tables_match_engine() {
        for id in ModelId::catalog(2).into_iter().chain([ModelId::Rp3Q]) {
            let model = build(id).unwrap();
            for (input, expect) in golden_delta_table(id).unwrap() {
                assert_eq!(model.bv_delta(&input).unwrap(), expect, "{} on {}", id, model.format(&input));
            }
        }
    }

    #[test]
    fn so5_rational_example() {
        let model = build(ModelId::SoOddQ(2)).unwrap();
        let e = model.basis_element(&mono(4, &[(1, 1)]), &mono(2, &[(0, 1)]));
        let expect = model.basis_element(&mono(4, &[(0, 1)]), &mono(2, &[]));
        assert_eq!(model.bv_delta_derivation_form(&e, PartialSource::Definition).unwrap(), expect);
        assert_eq!(model.bv_delta_derivation_form(&e, PartialSource::ClosedForm).unwrap(), expect);
    }

    #[test]
    fn rp3_has_no_derivation_path() {
        let model = build(ModelId::Rp3Z).unwrap();
        assert!(matches!(
            model.bv_delta_derivation_form(&model.one(), PartialSource::Definition),
            Err(Error::DerivationPathUnavailable(_))
        ));
    }
}
