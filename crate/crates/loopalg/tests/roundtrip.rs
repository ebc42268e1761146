use loopalg::json::{model_from_str, model_to_string};
use loopalg::parse::parse_loop;
use loopalg_core::catalog::{build, rp3_rational_model};
use loopalg_core::{LoopModel, ModelId, Scalar, Tensor};
use proptest::prelude::*;

fn models() -> Vec<LoopModel> {
    let mut out: Vec<_> = ModelId::catalog(2).into_iter().map(|id| build(id).unwrap()).collect();
    out.push(rp3_rational_model().unwrap());
    out
}

#[test]
fn model_files_round_trip() {
    for m in models() {
        let text = model_to_string(&m);
        let back = model_from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(model_to_string(&back), text);
    }
}

#[test]
fn reloaded_models_compute_the_same_delta() {
    for m in models() {
        let back = model_from_str(&model_to_string(&m)).unwrap();
        for (x, a) in m.loop_basis_by_word_length(2).unwrap() {
            let e = m.basis_element(&x, &a);
            assert_eq!(m.bv_delta(&e).unwrap(), back.bv_delta(&e).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parse_inverts_format(
        which in 0usize..12,
        picks in prop::collection::vec((any::<prop::sample::Index>(), -5i64..=5), 1..4),
    ) {
        let all = models();
        let m = &all[which % all.len()];
        let basis = m.loop_basis_by_word_length(3).unwrap();
        let mut t = Tensor::zero();
        for (i, c) in &picks {
            let (x, a) = i.get(&basis);
            t.add_term(x.clone(), a.clone(), Scalar::from_i64(m.ring(), *c));
        }
        let e = m.normalize(&t).unwrap();
        let text = m.format(&e);
        prop_assert_eq!(parse_loop(&text, m).unwrap(), e);
    }
}
