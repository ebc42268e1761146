//! Verification suites. Each check returns a [`CheckReport`]; `verify`
//! runs them all and wraps each in a timed [`Outcome`].

use std::time::Instant;

use loopalg_core::hopf::structure_welldefinedness_failures;
use loopalg_core::tensor::TensorAlgebra;
use loopalg_core::{CheckReport, Element, Monomial, LoopElement, LoopModel, PartialSource, PresentedAlgebra, PrimitiveAction, Scalar};
use serde::Serialize;

use crate::error::CliResult;
use crate::sample::{loop_pool, monomial_pool, Pool, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub window: (i64, i64),
    pub word_length: u32,
    pub seed: u64,
    /// Random cases per randomized check.
    pub cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { window: (-24, 24), word_length: 3, seed: 0, cases: 100 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub check: String,
    pub model: String,
    pub window: [i64; 2],
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    pub elapsed_ms: u128,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sign(ring: loopalg_core::Ring, k: i64) -> Scalar {
    Scalar::sign(ring, k.rem_euclid(2) == 1)
}

fn degree(model: &LoopModel, e: &LoopElement) -> i64 {
    model.degree_of(e).sign_degree().unwrap_or(0)
}

fn fail(report: &mut CheckReport, msg: String) {
    report.failures.push(msg);
}

/// `Δ² = 0` and the degree shift on basis pairs.
pub fn delta_squared(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<CheckReport> {
    Ok(model.check_delta_squared(cfg.word_length, cfg.window)?)
}

/// Both `Δ` routes agree on each element; the closed-form partials are
/// compared too when the model carries them.
pub fn path_agreement_on(model: &LoopModel, elems: &[LoopElement]) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    let closed = model.closed_form_partials().is_some();
    for e in elems {
        report.cases += 1;
        let eq1 = model.bv_delta(e)?;
        let def = model.bv_delta_derivation_form(e, PartialSource::Definition)?;
        if eq1 != def {
            fail(&mut report, format!("{}: eq1 {} vs definition {}", model.format(e), model.format(&eq1), model.format(&def)));
        }
        if closed {
            let cf = model.bv_delta_derivation_form(e, PartialSource::ClosedForm)?;
            if eq1 != cf {
                fail(&mut report, format!("{}: eq1 {} vs closed form {}", model.format(e), model.format(&eq1), model.format(&cf)));
            }
        }
    }
    Ok(report)
}

pub fn basis_elements(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<Vec<LoopElement>> {
    Ok(model
        .loop_basis_by_word_length(cfg.word_length)?
        .into_iter()
        .filter(|p| {
            let d = model.pair_degree(p);
            d >= cfg.window.0 && d <= cfg.window.1
        })
        .map(|(a, x)| model.basis_element(&a, &x))
        .collect())
}

pub fn path_agreement(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<CheckReport> {
    path_agreement_on(model, &basis_elements(model, cfg)?)
}

/// `∂ᵢ` rebuilt from the coproduct and suspension equals the closed form on
/// every generator and on random short monomials.
pub fn partial_reconstruction(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    let omega = model.omega();
    let mut inputs: Vec<Element> = (0..omega.ngens()).map(|i| omega.gen(i)).collect();
    let pool = monomial_pool(omega, omega.monomials_up_to_length(cfg.word_length));
    let mut sampler = Sampler::new(cfg.seed);
    for _ in 0..cfg.cases {
        inputs.push(Element::monomial(sampler.monomial(&pool).clone(), Scalar::one(model.ring())));
    }
    for a in &inputs {
        for i in 0..model.primitives().len() {
            report.cases += 1;
            let def = model.partial(PartialSource::Definition, i, a)?;
            let cf = model.partial(PartialSource::ClosedForm, i, a)?;
            if def != cf {
                fail(
                    &mut report,
                    format!(
                        "partial {} of {}: definition {} vs closed form {}",
                        model.primitives().primitives[i].name,
                        omega.format_element(a),
                        omega.format_element(&def),
                        omega.format_element(&cf)
                    ),
                );
            }
        }
    }
    Ok(report)
}

pub fn seven_term_on(model: &LoopModel, triples: &[(LoopElement, LoopElement, LoopElement)]) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    for (a, b, c) in triples {
        report.cases += 1;
        let (lhs, rhs) = model.seven_term_sides(a, b, c)?;
        if lhs != rhs {
            fail(
                &mut report,
                format!(
                    "({}, {}, {}): {} vs {}",
                    model.format(a),
                    model.format(b),
                    model.format(c),
                    model.format(&lhs),
                    model.format(&rhs)
                ),
            );
        }
    }
    Ok(report)
}

pub fn random_loop_triples(
    model: &LoopModel,
    cfg: &SuiteConfig,
    count: usize,
) -> CliResult<Vec<(LoopElement, LoopElement, LoopElement)>> {
    let pool = loop_pool(model, cfg.word_length, cfg.window)?;
    let mut s = Sampler::new(cfg.seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push((s.loop_element(model, &pool)?, s.loop_element(model, &pool)?, s.loop_element(model, &pool)?));
    }
    Ok(out)
}

/// `e₁e₂ = (-1)^{|e₁||e₂|} e₂e₁` and associativity of the loop product.
pub fn loop_product_laws(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<(CheckReport, CheckReport)> {
    let ring = model.ring();
    let mut comm = CheckReport::default();
    let mut assoc = CheckReport::default();
    for (a, b, c) in random_loop_triples(model, cfg, cfg.cases)? {
        comm.cases += 1;
        let ab = model.loop_product(&a, &b)?;
        let ba = model.loop_product(&b, &a)?.scale(&sign(ring, degree(model, &a) * degree(model, &b)));
        if ab != ba {
            fail(&mut comm, format!("{} and {} do not graded-commute", model.format(&a), model.format(&b)));
        }
        assoc.cases += 1;
        let left = model.loop_product(&ab, &c)?;
        let right = model.loop_product(&a, &model.loop_product(&b, &c)?)?;
        if left != right {
            fail(&mut assoc, format!("({})({})({}) is not associative", model.format(&a), model.format(&b), model.format(&c)));
        }
    }
    Ok((comm, assoc))
}

/// `{a,bc} = {a,b}c + (-1)^{(|a|-1)|b|} b{a,c}` and `{e, 1⊗1} = 0`.
pub fn bracket_leibniz(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<CheckReport> {
    let ring = model.ring();
    let mut report = CheckReport::default();
    let one = model.one();
    for (a, b, c) in random_loop_triples(model, cfg, cfg.cases)? {
        report.cases += 1;
        let lhs = model.bracket(&a, &model.loop_product(&b, &c)?)?;
        let mut rhs = model.loop_product(&model.bracket(&a, &b)?, &c)?;
        let s = sign(ring, (degree(model, &a) - 1) * degree(model, &b));
        rhs.add_assign(&model.loop_product(&b, &model.bracket(&a, &c)?)?.scale(&s));
        if lhs != model.normalize(&rhs)? {
            fail(&mut report, format!("bracket is not a derivation on ({}, {}, {})", model.format(&a), model.format(&b), model.format(&c)));
        }
        if !model.bracket(&a, &one)?.is_zero() {
            fail(&mut report, format!("{{{}, 1}} is nonzero", model.format(&a)));
        }
    }
    Ok(report)
}

#[allow(clippy::too_many_arguments)]
fn leibniz_for(
    alg: &PresentedAlgebra,
    degree: i64,
    apply: &dyn Fn(&Element) -> CliResult<Element>,
    sampler: &mut Sampler,
    pool: &Pool<Monomial>,
    cases: usize,
    label: &str,
    report: &mut CheckReport,
) -> CliResult<()> {
    let ring = alg.ring();
    for _ in 0..cases {
        report.cases += 1;
        let x = sampler.element(alg, pool)?;
        let y = sampler.element(alg, pool)?;
        let x_deg = alg.degree_of(&x).sign_degree().unwrap_or(0);
        let lhs = apply(&alg.mul(&x, &y)?)?;
        let mut rhs = alg.mul(&apply(&x)?, &y)?;
        rhs.add_assign(&alg.mul(&x, &apply(&y)?)?.scale(&sign(ring, degree * x_deg)));
        if lhs != alg.normal_form(&rhs)? {
            fail(report, format!("{} fails Leibniz on {} and {}", label, alg.format_element(&x), alg.format_element(&y)));
        }
    }
    Ok(())
}

/// Every derivation in the model obeys the graded Leibniz rule: primitive
/// actions on the base, closed-form partials and reconstructed partials on
/// the loop side.
pub fn leibniz(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    let mut sampler = Sampler::new(cfg.seed ^ 0x5eed);
    let omega = model.omega();
    let base = model.base();
    let base_pool = monomial_pool(base, model.base_basis()?);
    let omega_pool = monomial_pool(omega, omega.monomials_up_to_length(cfg.word_length));
    let nprims = model.primitives().len().max(1);
    let per = cfg.cases.div_ceil(nprims);

    for (action, p) in model.actions().iter().zip(&model.primitives().primitives) {
        if let PrimitiveAction::Derivation(d) = action {
            let f = |x: &Element| -> CliResult<Element> { Ok(d.apply(base, x)?) };
            leibniz_for(base, d.degree, &f, &mut sampler, &base_pool, per, &format!("action of {}", p.name), &mut report)?;
        }
    }
    if let Some(partials) = model.closed_form_partials() {
        for (d, p) in partials.iter().zip(&model.primitives().primitives) {
            let f = |a: &Element| -> CliResult<Element> { Ok(d.apply(omega, a)?) };
            leibniz_for(omega, d.degree, &f, &mut sampler, &omega_pool, per, &format!("closed-form partial {}", p.name), &mut report)?;
        }
    }
    if model.derivation_path_available().is_ok() {
        for (i, p) in model.primitives().primitives.iter().enumerate() {
            let f = |a: &Element| -> CliResult<Element> { Ok(model.partial_from_definition(i, a)?) };
            leibniz_for(omega, 1 - p.degree, &f, &mut sampler, &omega_pool, per, &format!("reconstructed partial {}", p.name), &mut report)?;
        }
    }
    Ok(report)
}

/// Coassociativity, cocommutativity, the counit axiom and multiplicativity
/// of the coproduct on random loop-side elements.
pub fn hopf_laws(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<[CheckReport; 4]> {
    let omega = model.omega();
    let hopf = model.hopf();
    let sq = TensorAlgebra::square(omega);
    let pool = monomial_pool(omega, omega.monomials_up_to_length(cfg.word_length));
    let mut s = Sampler::new(cfg.seed ^ 0xc0de);
    let [mut coassoc, mut cocomm, mut counit, mut mult] = [(); 4].map(|_| CheckReport::default());
    for _ in 0..cfg.cases {
        let a = s.element(omega, &pool)?;
        let b = s.element(omega, &pool)?;
        let shown = omega.format_element(&a);
        coassoc.cases += 1;
        if !hopf.is_coassociative_on(omega, &a)? {
            fail(&mut coassoc, format!("coproduct is not coassociative on {}", shown));
        }
        cocomm.cases += 1;
        if !hopf.is_cocommutative_on(omega, &a)? {
            fail(&mut cocomm, format!("coproduct is not cocommutative on {}", shown));
        }
        counit.cases += 1;
        if !hopf.satisfies_counit_on(omega, &a)? {
            fail(&mut counit, format!("counit axiom fails on {}", shown));
        }
        mult.cases += 1;
        let lhs = hopf.coproduct(omega, &omega.mul(&a, &b)?)?;
        let rhs = sq.mul(&hopf.coproduct(omega, &a)?, &hopf.coproduct(omega, &b)?)?;
        if lhs != rhs {
            fail(&mut mult, format!("D is not multiplicative on {} and {}", shown, omega.format_element(&b)));
        }
    }
    Ok([coassoc, cocomm, counit, mult])
}

/// Coproduct, suspension and all derivations respect every rewrite rule.
pub fn welldefinedness(model: &LoopModel) -> CliResult<CheckReport> {
    let mut report = CheckReport { cases: model.omega().rewrites().len() + model.base().rewrites().len(), failures: vec![] };
    report.failures.extend(structure_welldefinedness_failures(model.omega(), model.hopf(), model.suspension(), model.primitives())?);
    for action in model.actions() {
        if let PrimitiveAction::Derivation(d) = action {
            report.failures.extend(d.welldefinedness_failures(model.base())?);
        }
    }
    if let Some(ps) = model.closed_form_partials() {
        for d in ps {
            report.failures.extend(d.welldefinedness_failures(model.omega())?);
        }
    }
    Ok(report)
}

/// Normal-form dimensions equal the row-reduction oracle on both factors.
pub fn hilbert_oracle(model: &LoopModel, window: (i64, i64)) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    for (side, alg) in [("loop side", model.omega()), ("base", model.base())] {
        for d in window.0..=window.1 {
            report.cases += 1;
            let h = alg.hilbert_dimension(d)?;
            let o = alg.oracle_dimension(d)?;
            if h != o {
                fail(&mut report, format!("{} degree {}: normal forms {} vs oracle {}", side, d, h, o));
            }
        }
    }
    Ok(report)
}

pub fn confluence(model: &LoopModel, window: (i64, i64)) -> CliResult<CheckReport> {
    let mut report = CheckReport::default();
    for (side, alg) in [("loop side", model.omega()), ("base", model.base())] {
        let r = alg.check_local_confluence(window)?;
        report.cases += r.pairs_checked;
        for f in r.failures {
            fail(&mut report, format!("{}: {:?}", side, f));
        }
    }
    Ok(report)
}

fn timed(
    name: &str,
    model: &LoopModel,
    window: (i64, i64),
    f: impl FnOnce() -> CliResult<CheckReport>,
) -> CliResult<Outcome> {
    let start = Instant::now();
    let r = f()?;
    Ok(Outcome {
        check: name.to_string(),
        model: model.name().to_string(),
        window: [window.0, window.1],
        cases: r.cases,
        failures: r.failures,
        skipped: None,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn skipped(name: &str, model: &LoopModel, window: (i64, i64), why: String) -> Outcome {
    Outcome {
        check: name.to_string(),
        model: model.name().to_string(),
        window: [window.0, window.1],
        cases: 0,
        failures: vec![],
        skipped: Some(why),
        elapsed_ms: 0,
    }
}

/// The full invariant suite; deterministic for a fixed configuration.
pub fn verify(model: &LoopModel, cfg: &SuiteConfig) -> CliResult<Vec<Outcome>> {
    let w = cfg.window;
    let mut out = vec![
        timed("well_definedness", model, w, || welldefinedness(model))?,
        timed("confluence", model, w, || confluence(model, w))?,
    ];
    if model.ring().is_field() {
        out.push(timed("hilbert_oracle", model, w, || hilbert_oracle(model, w))?);
    } else {
        out.push(skipped("hilbert_oracle", model, w, "oracle needs field coefficients".into()));
    }
    out.push(timed("delta_squared", model, w, || delta_squared(model, cfg))?);
    match model.derivation_path_available() {
        Ok(()) => out.push(timed("path_agreement", model, w, || path_agreement(model, cfg))?),
        Err(e) => out.push(skipped("path_agreement", model, w, e.to_string())),
    }
    if model.derivation_path_available().is_ok() && model.closed_form_partials().is_some() {
        out.push(timed("partial_reconstruction", model, w, || partial_reconstruction(model, cfg))?);
    } else {
        out.push(skipped("partial_reconstruction", model, w, "no closed-form partials to compare".into()));
    }
    out.push(timed("seven_term", model, w, || seven_term_on(model, &random_loop_triples(model, cfg, cfg.cases)?))?);
    let start = Instant::now();
    let (comm, assoc) = loop_product_laws(model, cfg)?;
    let elapsed = start.elapsed().as_millis();
    for (name, r) in [("graded_commutativity", comm), ("associativity", assoc)] {
        out.push(Outcome {
            check: name.into(),
            model: model.name().into(),
            window: [w.0, w.1],
            cases: r.cases,
            failures: r.failures,
            skipped: None,
            elapsed_ms: elapsed,
        });
    }
    out.push(timed("bracket_leibniz", model, w, || bracket_leibniz(model, cfg))?);
    out.push(timed("leibniz", model, w, || leibniz(model, cfg))?);
    let start = Instant::now();
    let hopf = hopf_laws(model, cfg)?;
    let elapsed = start.elapsed().as_millis();
    for (name, r) in ["coassociativity", "cocommutativity", "counit", "coproduct_multiplicative"].into_iter().zip(hopf) {
        out.push(Outcome {
            check: name.into(),
            model: model.name().into(),
            window: [w.0, w.1],
            cases: r.cases,
            failures: r.failures,
            skipped: None,
            elapsed_ms: elapsed,
        });
    }
    Ok(out)
}
