//! JSON model files.
//!
//! Scalars are `{"Z": "<n>"}`, `{"Q": "<n>/<d>"}` or `{"F2": 0|1}`; monomials
//! are objects mapping generator names to exponents; elements are lists of
//! `{monomial, coeff}`.

use std::collections::BTreeMap;

use loopalg_core::catalog::ModelId;
use loopalg_core::{
    Derivation, Element, GeneratorKind, GeneratorSpec, LoopElement, LoopModel, LoopModelParts, Monomial, PresentedAlgebra,
    Primitive, PrimitiveAction, PrimitiveBasis, RewriteRule, Ring, Scalar, Tensor, TorsionRule,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScalarJson {
    Z(String),
    Q(String),
    F2(u8),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: i64,
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub monomial: BTreeMap<String, u32>,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub left: BTreeMap<String, u32>,
    pub right: BTreeMap<String, u32>,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RewriteJson {
    pub lhs: BTreeMap<String, u32>,
    pub rhs: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionJson {
    pub modulus: u32,
    pub pattern: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub ring: String,
    pub generators: Vec<GeneratorJson>,
    pub rewrites: Vec<RewriteJson>,
    pub torsions: Vec<TorsionJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimitiveJson {
    pub name: String,
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torsion: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub degree: i64,
    /// Value on each generator, in generator order.
    pub values: Vec<Vec<TermJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub monomial: BTreeMap<String, u32>,
    pub value: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionJson {
    Derivation(DerivationJson),
    Table { entries: Vec<TableEntryJson> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub name: String,
    pub dim: u32,
    pub omega: AlgebraJson,
    pub base: AlgebraJson,
    pub coproducts: Vec<Vec<TensorTermJson>>,
    pub counits: Vec<ScalarJson>,
    pub primitives: Vec<PrimitiveJson>,
    /// Primitive coordinates of the suspension of each loop-space generator.
    pub suspension: Vec<Vec<ScalarJson>>,
    pub actions: Vec<ActionJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form_partials: Option<Vec<DerivationJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRowJson {
    pub input: Vec<TensorTermJson>,
    pub delta: Vec<TensorTermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenJson {
    pub model: String,
    pub rows: Vec<GoldenRowJson>,
}

pub fn scalar_to_json(s: &Scalar) -> ScalarJson {
    match s {
        Scalar::Int(n) => ScalarJson::Z(n.to_string()),
        Scalar::Rat(q) => ScalarJson::Q(format!("{}/{}", q.numer(), q.denom())),
        Scalar::F2(b) => ScalarJson::F2(u8::from(*b)),
    }
}

pub fn scalar_from_json(ring: Ring, s: &ScalarJson) -> CliResult<Scalar> {
    let value = match s {
        ScalarJson::Z(n) => Scalar::parse(Ring::Integers, n)?,
        ScalarJson::Q(q) => {
            if !q.contains('/') {
                return Err(CliError::Model(format!("rational scalar `{}` must be written n/d", q)));
            }
            Scalar::parse(Ring::Rationals, q)?
        }
        ScalarJson::F2(b) if *b <= 1 => Scalar::from_i64(Ring::GF2, i64::from(*b)),
        ScalarJson::F2(b) => return Err(CliError::Model(format!("F2 scalar must be 0 or 1, got {}", b))),
    };
    if value.ring() != ring {
        return Err(CliError::Model(format!("scalar over {} in a model over {}", value.ring(), ring)));
    }
    Ok(value)
}

fn monomial_to_json(alg: &PresentedAlgebra, m: &Monomial) -> BTreeMap<String, u32> {
    alg.generators()
        .iter()
        .zip(m.exponents())
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| (g.name.clone(), e))
        .collect()
}

fn monomial_from_json(alg: &PresentedAlgebra, m: &BTreeMap<String, u32>) -> CliResult<Monomial> {
    monomial_from_names(alg.generators(), m)
}

fn monomial_from_names(gens: &[GeneratorSpec], m: &BTreeMap<String, u32>) -> CliResult<Monomial> {
    let mut exps = vec![0u32; gens.len()];
    for (name, &e) in m {
        let i = gens
            .iter()
            .position(|g| g.name == *name)
            .ok_or_else(|| CliError::Model(format!("unknown generator `{}`", name)))?;
        exps[i] = e;
    }
    Ok(Monomial::from_exponents(exps))
}

pub fn element_to_json(alg: &PresentedAlgebra, e: &Element) -> Vec<TermJson> {
    e.terms().map(|(m, c)| TermJson { monomial: monomial_to_json(alg, m), coeff: scalar_to_json(c) }).collect()
}

pub fn element_from_json(alg: &PresentedAlgebra, terms: &[TermJson]) -> CliResult<Element> {
    element_from_names(alg.ring(), alg.generators(), terms)
}

fn element_from_names(ring: Ring, gens: &[GeneratorSpec], terms: &[TermJson]) -> CliResult<Element> {
    let mut e = Element::zero();
    for t in terms {
        e.add_term(monomial_from_names(gens, &t.monomial)?, scalar_from_json(ring, &t.coeff)?);
    }
    Ok(e)
}

pub fn tensor_to_json(left: &PresentedAlgebra, right: &PresentedAlgebra, t: &Tensor) -> Vec<TensorTermJson> {
    t.terms()
        .map(|((l, r), c)| TensorTermJson {
            left: monomial_to_json(left, l),
            right: monomial_to_json(right, r),
            coeff: scalar_to_json(c),
        })
        .collect()
}

pub fn tensor_from_json(left: &PresentedAlgebra, right: &PresentedAlgebra, terms: &[TensorTermJson]) -> CliResult<Tensor> {
    let mut t = Tensor::zero();
    for term in terms {
        t.add_term(
            monomial_from_json(left, &term.left)?,
            monomial_from_json(right, &term.right)?,
            scalar_from_json(left.ring(), &term.coeff)?,
        );
    }
    Ok(t)
}

pub fn algebra_to_json(alg: &PresentedAlgebra) -> AlgebraJson {
    AlgebraJson {
        ring: alg.ring().short_name().to_string(),
        generators: alg
            .generators()
            .iter()
            .map(|g| GeneratorJson {
                name: g.name.clone(),
                degree: g.degree,
                kind: if g.is_exterior() { "exterior" } else { "polynomial" }.to_string(),
            })
            .collect(),
        rewrites: alg
            .rewrites()
            .iter()
            .map(|r| RewriteJson { lhs: monomial_to_json(alg, &r.lhs), rhs: element_to_json(alg, &r.rhs) })
            .collect(),
        torsions: alg
            .torsions()
            .iter()
            .map(|t| TorsionJson { modulus: t.modulus, pattern: alg.generators()[t.pattern].name.clone() })
            .collect(),
    }
}

pub fn algebra_from_json(a: &AlgebraJson) -> CliResult<PresentedAlgebra> {
    let ring = Ring::from_short_name(&a.ring).ok_or_else(|| CliError::Model(format!("unknown ring `{}`", a.ring)))?;
    let mut gens = Vec::with_capacity(a.generators.len());
    for g in &a.generators {
        let kind = match g.kind.as_str() {
            "polynomial" => GeneratorKind::Polynomial,
            "exterior" => GeneratorKind::Exterior,
            other => return Err(CliError::Model(format!("unknown generator kind `{}`", other))),
        };
        gens.push(GeneratorSpec { name: g.name.clone(), degree: g.degree, kind });
    }
    let mut rules = Vec::with_capacity(a.rewrites.len());
    for r in &a.rewrites {
        rules.push(RewriteRule::new(monomial_from_names(&gens, &r.lhs)?, element_from_names(ring, &gens, &r.rhs)?));
    }
    let mut torsions = Vec::with_capacity(a.torsions.len());
    for t in &a.torsions {
        let pattern = gens
            .iter()
            .position(|g| g.name == t.pattern)
            .ok_or_else(|| CliError::Model(format!("unknown torsion pattern `{}`", t.pattern)))?;
        torsions.push(TorsionRule { modulus: t.modulus, pattern });
    }
    Ok(PresentedAlgebra::new(ring, gens, rules, torsions)?)
}

fn derivation_to_json(alg: &PresentedAlgebra, d: &Derivation) -> DerivationJson {
    DerivationJson { degree: d.degree, values: d.values.iter().map(|v| element_to_json(alg, v)).collect() }
}

fn derivation_from_json(alg: &PresentedAlgebra, d: &DerivationJson) -> CliResult<Derivation> {
    let values = d.values.iter().map(|v| element_from_json(alg, v)).collect::<CliResult<_>>()?;
    Ok(Derivation { degree: d.degree, values })
}

pub fn model_to_json(model: &LoopModel) -> ModelJson {
    let omega = model.omega();
    let base = model.base();
    let n = omega.ngens();
    ModelJson {
        name: model.name().to_string(),
        dim: model.dim(),
        omega: algebra_to_json(omega),
        base: algebra_to_json(base),
        coproducts: (0..n).map(|i| tensor_to_json(omega, omega, model.hopf().generator_coproduct(i))).collect(),
        counits: model.hopf().counits().iter().map(scalar_to_json).collect(),
        primitives: model
            .primitives()
            .primitives
            .iter()
            .map(|p| PrimitiveJson { name: p.name.clone(), degree: p.degree, torsion: p.torsion })
            .collect(),
        suspension: (0..n).map(|i| model.suspension().generator_value(i).iter().map(scalar_to_json).collect()).collect(),
        actions: model
            .actions()
            .iter()
            .map(|a| match a {
                PrimitiveAction::Derivation(d) => ActionJson::Derivation(derivation_to_json(base, d)),
                PrimitiveAction::Table(table) => ActionJson::Table {
                    entries: table
                        .iter()
                        .map(|(m, v)| TableEntryJson { monomial: monomial_to_json(base, m), value: element_to_json(base, v) })
                        .collect(),
                },
            })
            .collect(),
        closed_form_partials: model
            .closed_form_partials()
            .map(|ps| ps.iter().map(|d| derivation_to_json(omega, d)).collect()),
    }
}

pub fn model_parts_from_json(j: &ModelJson) -> CliResult<LoopModelParts> {
    let omega = algebra_from_json(&j.omega)?;
    let base = algebra_from_json(&j.base)?;
    let ring = omega.ring();
    let coproducts = j.coproducts.iter().map(|t| tensor_from_json(&omega, &omega, t)).collect::<CliResult<_>>()?;
    let counits = j.counits.iter().map(|c| scalar_from_json(ring, c)).collect::<CliResult<_>>()?;
    let suspension = j
        .suspension
        .iter()
        .map(|row| row.iter().map(|c| scalar_from_json(ring, c)).collect::<CliResult<Vec<_>>>())
        .collect::<CliResult<_>>()?;
    let primitives = PrimitiveBasis::new(
        j.primitives
            .iter()
            .map(|p| match p.torsion {
                Some(t) => Primitive::with_torsion(p.name.clone(), p.degree, t),
                None => Primitive::new(p.name.clone(), p.degree),
            })
            .collect(),
    );
    let mut actions = Vec::with_capacity(j.actions.len());
    for a in &j.actions {
        actions.push(match a {
            ActionJson::Derivation(d) => PrimitiveAction::Derivation(derivation_from_json(&base, d)?),
            ActionJson::Table { entries } => {
                let mut table = BTreeMap::new();
                for e in entries {
                    table.insert(monomial_from_json(&base, &e.monomial)?, element_from_json(&base, &e.value)?);
                }
                PrimitiveAction::Table(table)
            }
        });
    }
    let closed_form_partials = match &j.closed_form_partials {
        None => None,
        Some(ps) => Some(ps.iter().map(|d| derivation_from_json(&omega, d)).collect::<CliResult<_>>()?),
    };
    Ok(LoopModelParts {
        name: j.name.clone(),
        omega,
        coproducts,
        counits,
        suspension,
        base,
        dim: j.dim,
        primitives,
        actions,
        closed_form_partials,
    })
}

pub fn model_from_json(j: &ModelJson) -> CliResult<LoopModel> {
    Ok(LoopModel::new(model_parts_from_json(j)?)?)
}

pub fn model_to_string(model: &LoopModel) -> String {
    serde_json::to_string_pretty(&model_to_json(model)).expect("model JSON serializes")
}

pub fn model_from_str(text: &str) -> CliResult<LoopModel> {
    let j: ModelJson = serde_json::from_str(text)?;
    model_from_json(&j)
}

pub fn loop_element_to_json(model: &LoopModel, e: &LoopElement) -> Vec<TensorTermJson> {
    tensor_to_json(model.omega(), model.base(), e)
}

pub fn golden_to_json(id: ModelId, model: &LoopModel) -> CliResult<GoldenJson> {
    let rows = loopalg_core::catalog::golden_delta_table(id)?
        .iter()
        .map(|(input, delta)| GoldenRowJson {
            input: loop_element_to_json(model, input),
            delta: loop_element_to_json(model, delta),
        })
        .collect();
    Ok(GoldenJson { model: id.to_string(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use loopalg_core::catalog::build;

    #[test]
    fn scalar_encoding() {
        let q = Scalar::parse(Ring::Rationals, "-3/4").unwrap();
        assert_eq!(serde_json::to_string(&scalar_to_json(&q)).unwrap(), r#"{"Q":"-3/4"}"#);
        let z = Scalar::from_i64(Ring::Integers, 12);
        assert_eq!(serde_json::to_string(&scalar_to_json(&z)).unwrap(), r#"{"Z":"12"}"#);
        let f = Scalar::one(Ring::GF2);
        assert_eq!(serde_json::to_string(&scalar_to_json(&f)).unwrap(), r#"{"F2":1}"#);
        let back: ScalarJson = serde_json::from_str(r#"{"Q":"6/8"}"#).unwrap();
        assert_eq!(scalar_from_json(Ring::Rationals, &back).unwrap(), Scalar::parse(Ring::Rationals, "3/4").unwrap());
        assert!(scalar_from_json(Ring::Integers, &back).is_err());
        assert!(scalar_from_json(Ring::GF2, &ScalarJson::F2(2)).is_err());
    }

    #[test]
    fn catalog_round_trips() {
        for id in ModelId::catalog(2).into_iter().chain([ModelId::Rp3Q]) {
            let model = build(id).unwrap();
            let text = model_to_string(&model);
            let back = model_from_str(&text).unwrap();
            assert_eq!(back, model, "{}", id);
            assert_eq!(model_to_string(&back), text, "{}", id);
        }
    }

    #[test]
    fn rejects_broken_files() {
        let model = build(ModelId::S3Z).unwrap();
        let mut j = model_to_json(&model);
        j.suspension[0][0] = ScalarJson::Z("5".into());
        j.dim = 4;
        assert!(model_from_json(&j).is_err());
        assert!(model_from_str("{").is_err());
    }
}
