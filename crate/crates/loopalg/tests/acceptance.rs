//! Acceptance suite. Runs every criterion at exact tolerance and prints one
//! PASS/FAIL line each; exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use loopalg::suite::{
    basis_elements, bracket_leibniz, hopf_laws, leibniz, loop_product_laws, partial_reconstruction, path_agreement_on,
    random_loop_triples, seven_term_on, welldefinedness, SuiteConfig,
};
use loopalg_core::catalog::{build, rp3_rational_model};
use loopalg_core::{golden_delta_table, CheckReport, Element, LoopElement, LoopModel, ModelId, Scalar};

const MAX_M: u32 = 3;
const WIDE: (i64, i64) = (-1_000_000, 1_000_000);

type Triple = (LoopElement, LoopElement, LoopElement);

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Option<Duration>,
    run: fn(&mut Shared) -> anyhow::Result<CheckReport>,
}

/// Elements exercised by criteria 1 to 3, keyed by model name, for the path
/// agreement criterion.
#[derive(Default)]
struct Shared {
    tested: Vec<(String, Vec<LoopElement>)>,
}

impl Shared {
    fn record(&mut self, model: &LoopModel, elems: impl IntoIterator<Item = LoopElement>) {
        let name = model.name().to_string();
        let slot = match self.tested.iter().position(|(n, _)| *n == name) {
            Some(i) => i,
            None => {
                self.tested.push((name, Vec::new()));
                self.tested.len() - 1
            }
        };
        self.tested[slot].1.extend(elems);
    }

    fn record_triples(&mut self, model: &LoopModel, triples: &[Triple]) -> anyhow::Result<()> {
        let mut out = Vec::new();
        for (a, b, c) in triples {
            let ab = model.loop_product(a, b)?;
            out.extend([a.clone(), b.clone(), c.clone(), model.loop_product(&ab, c)?]);
            out.push(ab);
            out.push(model.loop_product(b, c)?);
            out.push(model.loop_product(a, c)?);
        }
        self.record(model, out);
        Ok(())
    }
}

fn catalog() -> Vec<ModelId> {
    ModelId::catalog(MAX_M)
}

fn so_models() -> Vec<ModelId> {
    catalog().into_iter().filter(|id| id.is_so()).collect()
}

fn field_models() -> anyhow::Result<Vec<LoopModel>> {
    let mut out = Vec::new();
    for id in catalog().into_iter().filter(|id| id.ring().is_field()) {
        out.push(build(id)?);
    }
    out.push(rp3_rational_model()?);
    Ok(out)
}

fn tag(report: &mut CheckReport, model: &str, other: CheckReport) {
    report.cases += other.cases;
    report.failures.extend(other.failures.into_iter().map(|f| format!("{}: {}", model, f)));
}

fn golden(shared: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    for id in [ModelId::CircleZ, ModelId::S3Z, ModelId::Rp3Z] {
        let model = build(id)?;
        let table = golden_delta_table(id)?;
        let mut r = CheckReport::default();
        for (input, expected) in &table {
            r.cases += 1;
            let got = model.bv_delta(input)?;
            if got != *expected {
                r.failures.push(format!(
                    "delta({}) = {}, table says {}",
                    model.format(input),
                    model.format(&got),
                    model.format(expected)
                ));
            }
        }
        shared.record(&model, table.into_iter().map(|(i, _)| i));
        tag(&mut report, model.name(), r);
    }
    Ok(report)
}

fn delta_squared(shared: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    let cfg = SuiteConfig { window: WIDE, word_length: 3, ..SuiteConfig::default() };
    for id in catalog() {
        let model = build(id)?;
        tag(&mut report, model.name(), model.check_delta_squared(3, WIDE)?);
        shared.record(&model, basis_elements(&model, &cfg)?);
    }
    Ok(report)
}

/// All basis elements whose loop-side exponents are at most 3.
fn small_basis(model: &LoopModel) -> anyhow::Result<Vec<LoopElement>> {
    let max_len = 3 * model.omega().ngens() as u32;
    Ok(model
        .loop_basis_by_word_length(max_len)?
        .into_iter()
        .filter(|(x, _)| x.exponents().iter().all(|&e| e <= 3))
        .map(|(x, a)| model.basis_element(&x, &a))
        .collect())
}

fn seven_term(shared: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    for id in [ModelId::CircleZ, ModelId::S3Z, ModelId::Rp3Z] {
        let model = build(id)?;
        let basis = small_basis(&model)?;
        let mut triples = Vec::with_capacity(basis.len().pow(3));
        for a in &basis {
            for b in &basis {
                for c in &basis {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        tag(&mut report, model.name(), seven_term_on(&model, &triples)?);
        shared.record_triples(&model, &triples)?;
    }
    for id in so_models() {
        let model = build(id)?;
        let cfg = SuiteConfig { window: WIDE, word_length: 3, seed: 7, cases: 200 };
        let triples = random_loop_triples(&model, &cfg, 200)?;
        tag(&mut report, model.name(), seven_term_on(&model, &triples)?);
        shared.record_triples(&model, &triples)?;
    }
    Ok(report)
}

fn path_agreement(shared: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    let mut covered = 0;
    for (name, elems) in &shared.tested {
        let id: ModelId = name.parse()?;
        if !(id.ring().is_field() || matches!(id, ModelId::CircleZ | ModelId::S3Z)) {
            continue;
        }
        covered += 1;
        let model = build(id)?;
        let mut seen = HashSet::new();
        let distinct: Vec<_> = elems.iter().filter(|e| seen.insert(*e)).cloned().collect();
        tag(&mut report, name, path_agreement_on(&model, &distinct)?);
    }
    let expected = 2 + so_models().len();
    if covered != expected {
        report.failures.push(format!("covered {} models, expected {}", covered, expected));
    }
    Ok(report)
}

fn reconstruction(_: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    let cfg = SuiteConfig { window: WIDE, word_length: 3, seed: 11, cases: 200 };
    for id in so_models() {
        let model = build(id)?;
        tag(&mut report, model.name(), partial_reconstruction(&model, &cfg)?);
    }
    Ok(report)
}

/// Coefficients of `c / Π(1 - t^k)` up to `top`, by repeated prefix sums.
fn expand_series(c: usize, ks: &[usize], top: usize) -> Vec<usize> {
    let mut coeffs = vec![0; top + 1];
    coeffs[0] = c;
    for &k in ks {
        for d in k..=top {
            coeffs[d] += coeffs[d - k];
        }
    }
    coeffs
}

fn hilbert(_: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    for model in field_models()? {
        let mut r = CheckReport::default();
        for (side, alg) in [("loop side", model.omega()), ("base", model.base())] {
            for d in -20..=20 {
                r.cases += 1;
                let (h, o) = (alg.hilbert_dimension(d)?, alg.oracle_dimension(d)?);
                if h != o {
                    r.failures.push(format!("{} degree {}: {} vs oracle {}", side, d, h, o));
                }
            }
        }
        tag(&mut report, model.name(), r);
    }
    for (id, ks) in [(ModelId::SoEvenF2(1), &[2, 4][..]), (ModelId::SoEvenF2(2), &[2, 4, 6][..])] {
        let model = build(id)?;
        let series = expand_series(2, ks, 20);
        let mut r = CheckReport::default();
        for (d, &want) in series.iter().enumerate() {
            r.cases += 1;
            let got = model.omega().hilbert_dimension(d as i64)?;
            if got != want {
                r.failures.push(format!("loop side degree {}: {} vs series {}", d, got, want));
            }
        }
        tag(&mut report, model.name(), r);
    }
    Ok(report)
}

fn well_defined(_: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    for id in catalog() {
        let model = build(id)?;
        tag(&mut report, model.name(), welldefinedness(&model)?);
    }
    let rp3 = build(ModelId::Rp3Z)?;
    let v = rp3.omega().generator_index("v").expect("v");
    let v2 = Element::monomial(
        loopalg_core::Monomial::from_exponents((0..rp3.omega().ngens()).map(|i| if i == v { 2 } else { 0 }).collect()),
        Scalar::one(rp3.ring()),
    );
    report.cases += 1;
    let s = rp3.suspend(&v2);
    if s.iter().any(|c| !c.is_zero()) {
        report.failures.push(format!("RP3_Z: sigma(v^2) = {}, expected 0", rp3.primitives().format(&s)));
    }
    Ok(report)
}

fn so3_rp3(_: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    let so3 = build(ModelId::SoOddQ(1))?;
    let rp3 = rp3_rational_model()?;
    for d in -3..=12 {
        report.cases += 1;
        let (a, b) = (so3.loop_hilbert_dimension(d)?, rp3.loop_hilbert_dimension(d)?);
        if a != b {
            report.failures.push(format!("degree {}: dimensions {} vs {}", d, a, b));
        }
    }
    let (ha, hb) = (so3.delta_homology_dimensions((-3, 12))?, rp3.delta_homology_dimensions((-3, 12))?);
    report.cases += ha.len();
    for d in -3..=12 {
        if ha.get(&d) != hb.get(&d) {
            report.failures.push(format!("degree {}: delta homology {:?} vs {:?}", d, ha.get(&d), hb.get(&d)));
        }
    }
    Ok(report)
}

fn structural(_: &mut Shared) -> anyhow::Result<CheckReport> {
    let mut report = CheckReport::default();
    let mut models = Vec::new();
    for id in catalog() {
        models.push(build(id)?);
    }
    models.push(rp3_rational_model()?);
    let cfg = SuiteConfig { window: (-24, 24), word_length: 3, seed: 2024, cases: 500 };
    for model in &models {
        let (comm, assoc) = loop_product_laws(model, &cfg)?;
        let [coassoc, cocomm, counit, _] = hopf_laws(model, &cfg)?;
        for (name, r) in [
            ("graded commutativity", comm),
            ("associativity", assoc),
            ("Leibniz", leibniz(model, &cfg)?),
            ("bracket Leibniz", bracket_leibniz(model, &cfg)?),
            ("coassociativity", coassoc),
            ("cocommutativity", cocomm),
            ("counit", counit),
        ] {
            tag(&mut report, &format!("{} {}", model.name(), name), r);
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "golden delta tables", budget: Some(Duration::from_secs(5)), run: golden },
        Criterion { id: 2, title: "delta squared vanishes", budget: Some(Duration::from_secs(180)), run: delta_squared },
        Criterion { id: 3, title: "seven-term identity", budget: Some(Duration::from_secs(180)), run: seven_term },
        Criterion { id: 4, title: "path agreement", budget: None, run: path_agreement },
        Criterion { id: 5, title: "partial reconstruction", budget: None, run: reconstruction },
        Criterion { id: 6, title: "Hilbert oracle and series", budget: Some(Duration::from_secs(120)), run: hilbert },
        Criterion { id: 7, title: "well-definedness", budget: None, run: well_defined },
        Criterion { id: 8, title: "SO(3) against RP3", budget: None, run: so3_rp3 },
        Criterion { id: 9, title: "structural property suites", budget: None, run: structural },
    ];
    let mut shared = Shared::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)(&mut shared);
        let elapsed = start.elapsed();
        let (cases, mut failures) = match result {
            Ok(r) => (r.cases, r.failures),
            Err(e) => (0, vec![format!("error: {:#}", e)]),
        };
        if let Some(b) = c.budget {
            if elapsed > b {
                failures.push(format!("took {:.1} s, budget {} s", elapsed.as_secs_f64(), b.as_secs()));
            }
        }
        if cases == 0 && failures.is_empty() {
            failures.push("no cases ran".into());
        }
        let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!(
            "{} criterion {}: {} ({} cases, {} failures, {:.2} s)",
            verdict,
            c.id,
            c.title,
            cases,
            failures.len(),
            elapsed.as_secs_f64()
        );
        for f in failures.iter().take(8) {
            println!("    {}", f);
        }
        if failures.len() > 8 {
            println!("    ... {} more", failures.len() - 8);
        }
        if !failures.is_empty() {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
