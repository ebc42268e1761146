//! The loop algebra `H(ΩG) ⊗ ℍ(G)` with its loop product and BV operator.
//!
//! `Δ` is available by two routes: directly from the coproduct, suspension
//! and primitive actions (`Δ(a⊗x) = Σ a₍₁₎ ⊗ σ(a₍₂₎)x`), and as
//! `Σ ∂ᵢ ⊗ δᵢ` with each `∂ᵢ` either reconstructed from its definition or
//! taken from closed-form data.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graded::{Element, ElementDegree, Monomial};
use crate::hopf::{partial_from_definition, structure_welldefinedness_failures, Derivation, HopfStructure, PrimitiveBasis, SuspensionMap};
use crate::linalg::Echelon;
use crate::quotient::PresentedAlgebra;
use crate::scalar::{Ring, Scalar};
use crate::tensor::{LoopElement, Pair, Tensor, TensorAlgebra};

/// How a primitive of `H(G)` acts on `ℍ(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimitiveAction {
    Derivation(Derivation),
    /// Values on base monomials; missing entries act as zero.
    Table(BTreeMap<Monomial, Element>),
}

impl PrimitiveAction {
    pub fn apply(&self, base: &PresentedAlgebra, x: &Element) -> Result<Element> {
        match self {
            PrimitiveAction::Derivation(d) => d.apply(base, x),
            PrimitiveAction::Table(table) => {
                let mut out = Element::zero();
                for (m, c) in x.terms() {
                    if let Some(v) = table.get(m) {
                        out.add_assign(&v.scale(c));
                    }
                }
                base.normal_form(&out)
            }
        }
    }
}

/// Which `∂ᵢ` the derivation form of `Δ` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartialSource {
    Definition,
    ClosedForm,
}

/// Unvalidated ingredients of a [`LoopModel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopModelParts {
    pub name: String,
    pub omega: PresentedAlgebra,
    pub coproducts: Vec<Tensor>,
    pub counits: Vec<Scalar>,
    pub suspension: Vec<Vec<Scalar>>,
    pub base: PresentedAlgebra,
    pub dim: u32,
    pub primitives: PrimitiveBasis,
    pub actions: Vec<PrimitiveAction>,
    pub closed_form_partials: Option<Vec<Derivation>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopModel {
    name: String,
    omega: PresentedAlgebra,
    hopf: HopfStructure,
    suspension: SuspensionMap,
    base: PresentedAlgebra,
    dim: u32,
    primitives: PrimitiveBasis,
    actions: Vec<PrimitiveAction>,
    closed_form_partials: Option<Vec<Derivation>>,
}

/// Outcome of an exhaustive or sampled check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }
}

impl LoopModel {
    /// Validates every load-time invariant, including that the coproduct,
    /// suspension and all derivations respect the rewrite rules.
    pub fn new(parts: LoopModelParts) -> Result<LoopModel> {
        let model = Self::assemble(parts)?;
        let mut failures = structure_welldefinedness_failures(&model.omega, &model.hopf, &model.suspension, &model.primitives)?;
        for (action, p) in model.actions.iter().zip(&model.primitives.primitives) {
            if let PrimitiveAction::Derivation(d) = action {
                for f in d.welldefinedness_failures(&model.base)? {
                    failures.push(format!("action of {}: {}", p.name, f));
                }
            }
        }
        if let Some(partials) = &model.closed_form_partials {
            for (d, p) in partials.iter().zip(&model.primitives.primitives) {
                for f in d.welldefinedness_failures(&model.omega)? {
                    failures.push(format!("closed-form partial for {}: {}", p.name, f));
                }
            }
        }
        if let Some(first) = failures.into_iter().next() {
            return Err(Error::InvalidModel(first));
        }
        Ok(model)
    }

    /// Shape, degree and counit checks only; structure maps are not checked
    /// against the relations. Used to build deliberately broken models.
    pub fn new_unchecked(parts: LoopModelParts) -> Result<LoopModel> {
        Self::assemble(parts)
    }

    fn assemble(parts: LoopModelParts) -> Result<LoopModel> {
        let LoopModelParts { name, omega, coproducts, counits, suspension, base, dim, primitives, actions, closed_form_partials } =
            parts;
        let ring = omega.ring();
        if base.ring() != ring {
            return Err(Error::RingMismatch { left: ring, right: base.ring() });
        }
        for g in omega.generators() {
            if g.degree < 0 || g.degree % 2 != 0 {
                return Err(Error::InvalidModel(format!("loop-space generator `{}` must have even degree >= 0", g.name)));
            }
        }
        let mut lowest = 0i64;
        for (i, g) in base.generators().iter().enumerate() {
            if g.degree > 0 {
                return Err(Error::InvalidModel(format!("base generator `{}` must have degree <= 0", g.name)));
            }
            let cap = base
                .exponent_cap(i)
                .ok_or_else(|| Error::InvalidModel(format!("base generator `{}` is not nilpotent", g.name)))?;
            lowest += g.degree * cap as i64;
        }
        let top = -(dim as i64);
        if base.hilbert_dimension(top)? == 0 {
            return Err(Error::InvalidModel(format!("base has no class in degree {}", top)));
        }
        for d in lowest..top {
            if base.hilbert_dimension(d)? != 0 {
                return Err(Error::InvalidModel(format!("base has classes below degree {}", top)));
            }
        }
        let hopf = HopfStructure::new(&omega, coproducts, counits)?;
        let suspension = SuspensionMap::new(&omega, &primitives, suspension)?;
        if actions.len() != primitives.len() {
            return Err(Error::InvalidModel("one action per primitive required".to_string()));
        }
        let mut checked_actions = Vec::with_capacity(actions.len());
        for (action, p) in actions.into_iter().zip(&primitives.primitives) {
            let action = match action {
                PrimitiveAction::Derivation(d) => {
                    if d.degree != p.degree {
                        return Err(Error::InvalidModel(format!("action of `{}` must have degree {}", p.name, p.degree)));
                    }
                    PrimitiveAction::Derivation(Derivation::new(&base, d.degree, d.values)?)
                }
                PrimitiveAction::Table(table) => {
                    let mut checked = BTreeMap::new();
                    for (m, v) in table {
                        if !base.is_normal(&m) {
                            return Err(Error::InvalidModel(format!("action table of `{}` has a non-normal key", p.name)));
                        }
                        let v = base.normal_form(&v)?;
                        match base.degree_of(&v) {
                            ElementDegree::Any => {}
                            ElementDegree::Exact(d) if d == base.monomial_degree(&m) + p.degree => {}
                            _ => {
                                return Err(Error::InvalidModel(format!("action table of `{}` is not homogeneous", p.name)))
                            }
                        }
                        checked.insert(m, v);
                    }
                    PrimitiveAction::Table(checked)
                }
            };
            checked_actions.push(action);
        }
        let closed_form_partials = match closed_form_partials {
            None => None,
            Some(ps) => {
                if ps.len() != primitives.len() {
                    return Err(Error::InvalidModel("one closed-form partial per primitive required".to_string()));
                }
                let mut out = Vec::with_capacity(ps.len());
                for (d, p) in ps.into_iter().zip(&primitives.primitives) {
                    if d.degree != 1 - p.degree {
                        return Err(Error::InvalidModel(format!("partial for `{}` must have degree {}", p.name, 1 - p.degree)));
                    }
                    out.push(Derivation::new(&omega, d.degree, d.values)?);
                }
                Some(out)
            }
        };
        Ok(LoopModel {
            name,
            omega,
            hopf,
            suspension,
            base,
            dim,
            primitives,
            actions: checked_actions,
            closed_form_partials,
        })
    }

    pub fn into_parts(self) -> LoopModelParts {
        let coproducts = (0..self.omega.ngens()).map(|i| self.hopf.generator_coproduct(i).clone()).collect();
        let suspension = (0..self.omega.ngens()).map(|i| self.suspension.generator_value(i).to_vec()).collect();
        LoopModelParts {
            name: self.name,
            counits: self.hopf.counits().to_vec(),
            coproducts,
            suspension,
            omega: self.omega,
            base: self.base,
            dim: self.dim,
            primitives: self.primitives,
            actions: self.actions,
            closed_form_partials: self.closed_form_partials,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> Ring {
        self.omega.ring()
    }

    pub fn omega(&self) -> &PresentedAlgebra {
        &self.omega
    }

    pub fn base(&self) -> &PresentedAlgebra {
        &self.base
    }

    pub fn hopf(&self) -> &HopfStructure {
        &self.hopf
    }

    pub fn suspension(&self) -> &SuspensionMap {
        &self.suspension
    }

    pub fn primitives(&self) -> &PrimitiveBasis {
        &self.primitives
    }

    pub fn actions(&self) -> &[PrimitiveAction] {
        &self.actions
    }

    pub fn closed_form_partials(&self) -> Option<&[Derivation]> {
        self.closed_form_partials.as_deref()
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn loop_algebra(&self) -> TensorAlgebra<'_> {
        TensorAlgebra::new(&self.omega, &self.base)
    }

    pub fn one(&self) -> LoopElement {
        self.loop_algebra().one()
    }

    pub fn tensor(&self, a: &Element, x: &Element) -> Result<LoopElement> {
        self.loop_algebra().tensor(a, x)
    }

    pub fn basis_element(&self, a: &Monomial, x: &Monomial) -> LoopElement {
        Tensor::basis(a.clone(), x.clone(), Scalar::one(self.ring()))
    }

    pub fn degree_of(&self, e: &LoopElement) -> ElementDegree {
        self.loop_algebra().degree_of(e)
    }

    pub fn pair_degree(&self, pair: &Pair) -> i64 {
        self.loop_algebra().pair_degree(pair)
    }

    pub fn normalize(&self, e: &LoopElement) -> Result<LoopElement> {
        self.loop_algebra().normalize(e)
    }

    pub fn format(&self, e: &LoopElement) -> String {
        self.loop_algebra().format(e)
    }

    pub fn loop_product(&self, e1: &LoopElement, e2: &LoopElement) -> Result<LoopElement> {
        self.loop_algebra().mul(e1, e2)
    }

    /// Suspension of a loop-space element, as primitive coordinates.
    pub fn suspend(&self, a: &Element) -> Vec<Scalar> {
        self.suspension.suspend(&self.omega, &self.hopf, &self.primitives, a)
    }

    pub fn coproduct(&self, a: &Element) -> Result<Tensor> {
        self.hopf.coproduct(&self.omega, a)
    }

    /// `Δ(a⊗x) = Σ a₍₁₎ ⊗ σ(a₍₂₎)x`.
    pub fn bv_delta(&self, e: &LoopElement) -> Result<LoopElement> {
        let ring = self.ring();
        let mut out = Tensor::zero();
        for ((a, x), c) in e.terms() {
            let d = self.hopf.monomial_coproduct(&self.omega, a)?;
            let xe = Element::monomial(x.clone(), Scalar::one(ring));
            let mut acted: Vec<Option<Element>> = vec![None; self.primitives.len()];
            for ((a1, a2), c2) in d.terms() {
                let coords = self.primitives.reduce(self.suspension.suspend_monomial(&self.omega, &self.hopf, &self.primitives, a2));
                for (i, v) in coords.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    if acted[i].is_none() {
                        acted[i] = Some(self.actions[i].apply(&self.base, &xe)?);
                    }
                    let y = acted[i].as_ref().expect("filled above");
                    let left = Element::monomial(a1.clone(), &(c * c2) * v);
                    out.add_assign(&Tensor::pure(&left, y));
                }
            }
        }
        self.normalize(&out)
    }

    /// Errors unless the `Σ ∂ᵢ ⊗ δᵢ` form is meaningful for this model:
    /// field coefficients or torsion-free integral data, odd primitives, and
    /// primitives acting by derivations.
    pub fn derivation_path_available(&self) -> Result<()> {
        let ring = self.ring();
        if !ring.is_field() && (self.primitives.has_torsion() || !self.base.torsions().is_empty() || !self.omega.torsions().is_empty()) {
            return Err(Error::DerivationPathUnavailable(format!("{} has torsion over {}", self.name, ring)));
        }
        for (p, a) in self.primitives.primitives.iter().zip(&self.actions) {
            if p.degree % 2 == 0 {
                return Err(Error::DerivationPathUnavailable(format!("primitive `{}` has even degree", p.name)));
            }
            if !matches!(a, PrimitiveAction::Derivation(_)) {
                return Err(Error::DerivationPathUnavailable(format!("primitive `{}` does not act by a derivation", p.name)));
            }
        }
        Ok(())
    }

    /// `∂ᵢ(a)` from the coproduct, the suspension and the dual pairing.
    pub fn partial_from_definition(&self, i: usize, a: &Element) -> Result<Element> {
        self.derivation_path_available()?;
        partial_from_definition(&self.omega, &self.hopf, &self.suspension, &self.primitives, i, a)
    }

    pub fn partial(&self, source: PartialSource, i: usize, a: &Element) -> Result<Element> {
        match source {
            PartialSource::Definition => self.partial_from_definition(i, a),
            PartialSource::ClosedForm => {
                let partials = self
                    .closed_form_partials
                    .as_ref()
                    .ok_or_else(|| Error::DerivationPathUnavailable(format!("{} has no closed-form partials", self.name)))?;
                let d = partials.get(i).ok_or(Error::UnknownPrimitive(i))?;
                d.apply(&self.omega, a)
            }
        }
    }

    /// `Δ = Σ ∂ᵢ ⊗ δᵢ`, with the Koszul sign `(-1)^{|δᵢ||a|}`.
    pub fn bv_delta_derivation_form(&self, e: &LoopElement, source: PartialSource) -> Result<LoopElement> {
        self.derivation_path_available()?;
        let ring = self.ring();
        let mut out = Tensor::zero();
        for ((a, x), c) in e.terms() {
            let ae = Element::monomial(a.clone(), Scalar::one(ring));
            let xe = Element::monomial(x.clone(), c.clone());
            let a_odd = self.omega.monomial_degree(a) % 2 != 0;
            for (i, action) in self.actions.iter().enumerate() {
                let da = self.partial(source, i, &ae)?;
                if da.is_zero() {
                    continue;
                }
                let dx = action.apply(&self.base, &xe)?;
                let neg = a_odd && self.primitives.primitives[i].degree % 2 != 0;
                out.add_assign(&Tensor::pure(&da, &dx).scale(&Scalar::sign(ring, neg)));
            }
        }
        self.normalize(&out)
    }

    /// Every normal base monomial, in degree order.
    pub fn base_basis(&self) -> Result<Vec<Monomial>> {
        let mut out = Vec::new();
        for d in (-(self.dim as i64)..=0).rev() {
            out.extend(self.base.basis_in_degree(d)?);
        }
        Ok(out)
    }

    /// Basis pairs with at most `max_len` loop-space factors.
    pub fn loop_basis_by_word_length(&self, max_len: u32) -> Result<Vec<Pair>> {
        let base = self.base_basis()?;
        let mut out = Vec::new();
        for a in self.omega.monomials_up_to_length(max_len) {
            for x in &base {
                out.push((a.clone(), x.clone()));
            }
        }
        Ok(out)
    }

    pub fn loop_basis_in_degree(&self, d: i64) -> Result<Vec<Pair>> {
        let mut out = Vec::new();
        for k in -(self.dim as i64)..=0 {
            let xs = self.base.basis_in_degree(k)?;
            if xs.is_empty() {
                continue;
            }
            for a in self.omega.basis_in_degree(d - k)? {
                for x in &xs {
                    out.push((a.clone(), x.clone()));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn loop_hilbert_dimension(&self, d: i64) -> Result<usize> {
        Ok(self.loop_basis_in_degree(d)?.len())
    }

    /// `Δ(Δ(e)) = 0` and `|Δe| = |e| + 1` on basis pairs of bounded word
    /// length whose degree lies in `window`.
    pub fn check_delta_squared(&self, max_len: u32, window: (i64, i64)) -> Result<CheckReport> {
        let mut report = CheckReport::default();
        for pair in self.loop_basis_by_word_length(max_len)? {
            let deg = self.pair_degree(&pair);
            if deg < window.0 || deg > window.1 {
                continue;
            }
            report.cases += 1;
            let e = self.basis_element(&pair.0, &pair.1);
            let d1 = self.bv_delta(&e)?;
            match self.degree_of(&d1) {
                ElementDegree::Any => {}
                ElementDegree::Exact(k) if k == deg + 1 => {}
                _ => report.failures.push(format!("delta does not raise the degree of {}", self.format(&e))),
            }
            let d2 = self.bv_delta(&d1)?;
            if !d2.is_zero() {
                report.failures.push(format!("delta^2({}) = {}", self.format(&e), self.format(&d2)));
            }
        }
        Ok(report)
    }

    fn homogeneous_degree(&self, e: &LoopElement) -> Result<i64> {
        self.degree_of(e).sign_degree()
    }

    /// Both sides of the seven-term identity.
    pub fn seven_term_sides(&self, a: &LoopElement, b: &LoopElement, c: &LoopElement) -> Result<(LoopElement, LoopElement)> {
        let ring = self.ring();
        let da = self.homogeneous_degree(a)?;
        let db = self.homogeneous_degree(b)?;
        self.homogeneous_degree(c)?;
        let sign = |k: i64| Scalar::sign(ring, k.rem_euclid(2) == 1);
        let mul = |x: &LoopElement, y: &LoopElement| self.loop_product(x, y);
        let delta = |x: &LoopElement| self.bv_delta(x);

        let ab = mul(a, b)?;
        let bc = mul(b, c)?;
        let ac = mul(a, c)?;
        let abc = mul(&ab, c)?;
        let lhs = delta(&abc)?;

        let mut rhs = mul(&delta(&ab)?, c)?;
        rhs.add_assign(&mul(a, &delta(&bc)?)?.scale(&sign(da)));
        rhs.add_assign(&mul(b, &delta(&ac)?)?.scale(&sign((da - 1) * db)));
        rhs.add_assign(&mul(&mul(&delta(a)?, b)?, c)?.neg());
        rhs.add_assign(&mul(&mul(a, &delta(b)?)?, c)?.scale(&sign(da)).neg());
        rhs.add_assign(&mul(&ab, &delta(c)?)?.scale(&sign(da + db)).neg());
        Ok((lhs, self.normalize(&rhs)?))
    }

    pub fn check_seven_term(&self, a: &LoopElement, b: &LoopElement, c: &LoopElement) -> Result<bool> {
        let (lhs, rhs) = self.seven_term_sides(a, b, c)?;
        Ok(lhs == rhs)
    }

    /// `{a,b} = (-1)^{|a|}(Δ(ab) - (Δa)b - (-1)^{|a|} a(Δb))`.
    pub fn bracket(&self, a: &LoopElement, b: &LoopElement) -> Result<LoopElement> {
        let ring = self.ring();
        let da = self.homogeneous_degree(a)?;
        self.homogeneous_degree(b)?;
        let s = Scalar::sign(ring, da.rem_euclid(2) == 1);
        let mut inner = self.bv_delta(&self.loop_product(a, b)?)?;
        inner.add_assign(&self.loop_product(&self.bv_delta(a)?, b)?.neg());
        inner.add_assign(&self.loop_product(a, &self.bv_delta(b)?)?.scale(&s).neg());
        self.normalize(&inner.scale(&s))
    }

    fn delta_rank(&self, d: i64) -> Result<usize> {
        let source = self.loop_basis_in_degree(d)?;
        let target: BTreeMap<Pair, usize> =
            self.loop_basis_in_degree(d + 1)?.into_iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut ech = Echelon::new(self.ring())?;
        for pair in source {
            let image = self.bv_delta(&self.basis_element(&pair.0, &pair.1))?;
            let row = image
                .terms()
                .map(|(p, c)| {
                    target
                        .get(p)
                        .map(|&i| (i, c.clone()))
                        .ok_or_else(|| Error::InvalidModel("delta left the normal basis".to_string()))
                })
                .collect::<Result<_>>()?;
            ech.insert(row)?;
        }
        Ok(ech.rank())
    }

    /// Degree `d ↦ (dim ker Δ_d, dim im Δ_{d-1})` over a field.
    pub fn delta_homology_dimensions(&self, window: (i64, i64)) -> Result<BTreeMap<i64, (usize, usize)>> {
        if !self.ring().is_field() {
            return Err(Error::UnsupportedRing(self.ring()));
        }
        let mut out = BTreeMap::new();
        let mut prev_rank = self.delta_rank(window.0 - 1)?;
        for d in window.0..=window.1 {
            let rank = self.delta_rank(d)?;
            out.insert(d, (self.loop_hilbert_dimension(d)? - rank, prev_rank));
            prev_rank = rank;
        }
        Ok(out)
    }
}
