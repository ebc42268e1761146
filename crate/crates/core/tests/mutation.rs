//! A model with one corrupted coproduct sign must be caught.

use std::ops::Neg;

use loopalg_core::catalog::build;
use loopalg_core::{Error, LoopModel, ModelId, PresentedAlgebra, Tensor};

/// Negates every term of `t` whose two sides both have positive degree.
fn flip_cross_terms(t: &Tensor, alg: &PresentedAlgebra) -> Tensor {
    let mut out = Tensor::zero();
    for ((l, r), c) in t.terms() {
        let c = if alg.monomial_degree(l) > 0 && alg.monomial_degree(r) > 0 { c.neg() } else { c.clone() };
        out.add_term(l.clone(), r.clone(), c);
    }
    out
}

fn corrupted() -> loopalg_core::LoopModelParts {
    let model = build(ModelId::SoOddQ(3)).unwrap();
    let g = model.omega().generator_index("alpha2").unwrap();
    let mut parts = model.clone().into_parts();
    let flipped = flip_cross_terms(&parts.coproducts[g], model.omega());
    assert_ne!(flipped, parts.coproducts[g]);
    parts.coproducts[g] = flipped;
    parts
}

#[test]
fn validation_rejects_corrupted_coproduct() {
    assert!(matches!(LoopModel::new(corrupted()), Err(Error::InvalidModel(_))));
}

#[test]
fn delta_squared_detects_corrupted_coproduct() {
    let model = LoopModel::new_unchecked(corrupted()).unwrap();
    let report = model.check_delta_squared(3, (-100, 100)).unwrap();
    assert!(!report.passed());
    let clean = build(ModelId::SoOddQ(3)).unwrap().check_delta_squared(3, (-100, 100)).unwrap();
    assert!(clean.passed());
}
