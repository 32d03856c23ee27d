//! The bundled checks behind the command-line tool and the acceptance tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::gca::Element;
use crate::homotopy::sampling::{check_fundamental_theorems, extension_trial};
use crate::homotopy::{
    relative_d, AlgebraicHomotopy, DgaMorphism, ExtensionData, HomotopyError, IntervalElement,
    RelativeData,
};
use crate::io::{self, parse_file, ModelFile, ParseErrorKind};
use crate::lie::{verify_jacobi_lemmas, verify_nonvanishing};
use crate::model::sampler;
use crate::model::{table_cells, Classification, ExponentReport, MinimalModel};
use crate::report::{Check, Report, Status};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random models for the filtration, step and weight checks.
    pub corpus_size: usize,
    pub corpus_max_degree: u32,
    /// Random interval elements per bundled model.
    pub interval_samples: usize,
    /// Random extension problems per model.
    pub extension_trials: usize,
    pub whitehead_max_k: u32,
    pub whitehead_max_c: u32,
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            corpus_size: 100,
            corpus_max_degree: 5,
            interval_samples: 200,
            extension_trials: 3,
            whitehead_max_k: 6,
            whitehead_max_c: 3,
        }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

/// The six reference models.
pub fn bundled_models() -> Vec<MinimalModel> {
    io::bundled()
        .into_iter()
        .map(|f| f.primary().clone())
        .collect()
}

/// The randomized corpus for `cfg`.
pub fn random_corpus(cfg: &SuiteConfig) -> Vec<MinimalModel> {
    sampler::corpus(cfg.seed, cfg.corpus_size, cfg.corpus_max_degree)
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

// ---------------------------------------------------------------------------
// per-model checks

/// `d² = 0`, minimality and the nilpotence condition.
pub fn validate(m: &MinimalModel) -> Check {
    let r = m.validate();
    Check::group(
        format!("validate {}", m.name()),
        "minimal Sullivan model",
        vec![
            Check::new(
                "d^2 = 0",
                Status::of(r.d_squared.is_empty()),
                "d squares to zero",
            )
            .witness(json!({ "generators": r.d_squared })),
            Check::new(
                "minimality",
                Status::of(r.minimality.is_empty()),
                "d lands in word length ≥ 2",
            )
            .witness(json!({ "generators": r.minimality })),
            Check::new(
                "nilpotence",
                Status::of(r.nilpotence.exhausted),
                "V is exhausted by Z(r) = d⁻¹(∧Z(r−1))",
            )
            .witness(json!({ "tower_dims": r.nilpotence.dims(), "outside": r.nilpotence.missing })),
        ],
    )
}

pub fn classify(m: &MinimalModel) -> Check {
    let Some(c) = m.classification() else {
        return Check::new(
            format!("classify {}", m.name()),
            Status::Fail,
            "nilpotency class",
        )
        .note("the cautious filtration does not exhaust V");
    };
    let steps: Value = match m.adapted() {
        Ok(a) => (0..a.model.universe().len())
            .map(|g| (a.model.id(g).to_string(), json!(a.step(g))))
            .collect::<serde_json::Map<_, _>>()
            .into(),
        Err(e) => json!(e.to_string()),
    };
    Check::new(
        format!("classify {}", m.name()),
        Status::Info,
        "classification",
    )
    .witness(json!({
        "classification": c.label(),
        "class": c.class,
        "simply_connected": c.simply_connected,
        "coformal": c.coformal,
        "steps": steps,
    }))
}

/// The cautious filtration and its comparison with the naive one.
pub fn filtration(m: &MinimalModel) -> Check {
    let cautious = m.cautious_filtration();
    let naive = m.naive_filtration();
    let dims: serde_json::Map<String, Value> = cautious
        .degrees
        .iter()
        .filter(|(_, f)| f.dim() > 0)
        .map(|(n, f)| {
            (
                n.to_string(),
                json!(f.levels.iter().map(|s| s.dim()).collect::<Vec<_>>()),
            )
        })
        .collect();
    let diffs = cautious.differences(naive);
    Check::group(
        format!("filtration {}", m.name()),
        "",
        vec![
            Check::new(
                "cautious filtration",
                Status::Info,
                "dimensions of Cⁿ(J), J = 1, 2, …",
            )
            .witness(json!({ "dims": dims, "class": cautious.class() })),
            Check::new(
                "naive = cautious",
                Status::of(diffs.is_empty()),
                "the naive and cautious filtrations agree for all n and J",
            )
            .witness(json!({ "differences": diffs })),
        ],
    )
}

pub fn weights(m: &MinimalModel) -> Check {
    let declared = match m.weights() {
        Ok(w) => json!(w
            .iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<std::collections::BTreeMap<_, _>>()),
        Err(e) => json!(e.to_string()),
    };
    let mut children =
        vec![Check::new("weights", Status::Info, "declared basis").witness(declared)];
    match m.weight_bounds() {
        Ok(r) => {
            let rows: Vec<Value> = r
                .generators
                .iter()
                .map(|g| {
                    json!({
                        "generator": g.generator, "degree": g.degree, "step": g.step, "weight": g.weight,
                        "bounds": g.checks.iter().map(|c| json!({"name": c.name, "bound": c.bound, "holds": c.holds})).collect::<Vec<_>>(),
                    })
                })
                .collect();
            children.push(
                Check::new(
                    "weight bounds",
                    Status::of(r.passed()),
                    "weight bounds in the step-adapted basis",
                )
                .witness(json!({ "class": r.class, "coformal": r.coformal, "generators": rows })),
            );
        }
        Err(e) => children.push(Check::new("weight bounds", Status::Fail, "").note(e.to_string())),
    }
    if let Ok(l) = m.light_factor_check() {
        children.push(
            Check::new(
                "light factor",
                if l.holds() {
                    Status::Info
                } else {
                    Status::Flagged
                },
                "optional sharpening",
            )
            .witness(json!({ "applicable": l.applicable, "counterexamples": l.counterexamples })),
        );
    }
    Check::group(format!("weights {}", m.name()), "", children)
}

fn linear(a: u32, b: u32) -> String {
    match (a, b) {
        (0, _) => b.to_string(),
        (1, 0) => "n".into(),
        (_, 0) => format!("{a}n"),
        (1, _) => format!("n+{b}"),
        _ => format!("{a}n+{b}"),
    }
}

fn shifted(a: u32) -> String {
    match a {
        0 => "0".into(),
        1 => "n-1".into(),
        _ => format!("{a}(n-1)"),
    }
}

/// Volume exponents for the model's class, symbolically and at `ns`.
pub fn bounds(m: &MinimalModel, ns: &[u32]) -> Check {
    let Some(cl) = m.classification() else {
        return Check::new(format!("bounds {}", m.name()), Status::Fail, "")
            .note("model is not nilpotent");
    };
    let c = cl.class;
    let report = ExponentReport::new(cl, ns.iter().copied());
    let symbolic_upper = |source: &str| match source {
        "simply connected" => linear(2, 0),
        "simple" => linear(2, 1),
        "coformal" => linear(c + 1, 0),
        _ => linear(4 * c - 1, 0),
    };
    let first = report.rows.first();
    let mut children = Vec::new();
    if let Some(row) = first {
        children.push(
            Check::new("upper exponent", Status::Info, row.upper_source).witness(json!({
                "formula": symbolic_upper(row.upper_source),
                "values": report.rows.iter().map(|r| (r.n.to_string(), json!(r.upper))).collect::<serde_json::Map<_,_>>(),
            })),
        );
        if let Some(src) = row.lower_source {
            let formula = if src == "simply connected" {
                shifted(2)
            } else {
                shifted(c + 1)
            };
            children.push(Check::new("lower exponent", Status::Info, src).witness(json!({
                "formula": formula,
                "values": report.rows.iter().map(|r| (r.n.to_string(), json!(r.lower))).collect::<serde_json::Map<_,_>>(),
            })));
        }
        if row.lower_printed.is_some() {
            children.push(
                Check::new("printed lower alternative", Status::Flagged, "coformal lower cell as printed in the table")
                    .witness(json!({
                        "formula": shifted(c - 1),
                        "values": report.rows.iter().map(|r| (r.n.to_string(), json!(r.lower_printed))).collect::<serde_json::Map<_,_>>(),
                    }))
                    .note(format!("differs from the constructed lower bound {}", shifted(c + 1))),
            );
            children.push(
                Check::new("printed upper alternative", Status::Flagged, "coformal upper cell as printed in the table")
                    .witness(json!({
                        "formula": linear(c - 1, 0),
                        "values": report.rows.iter().map(|r| (r.n.to_string(), json!(r.upper_printed))).collect::<serde_json::Map<_,_>>(),
                    }))
                    .note(format!("lies below the printed lower bound {}", shifted(c + 1))),
            );
        }
        if !cl.simply_connected {
            children.push(
                Check::new("conjecture", Status::Flagged, "conjectured exponent for c-step nilpotent targets").witness(json!({
                    "formula": format!("3nc = {}", linear(3 * c, 0)),
                    "values": report.rows.iter().map(|r| (r.n.to_string(), json!(r.conjecture))).collect::<serde_json::Map<_,_>>(),
                })),
            );
        }
    }
    Check::group(format!("bounds {}", m.name()), "", children)
        .note(format!("classification: {}", cl.label()))
}

/// Integration identities and random extension problems over the model.
pub fn homotopy_check(m: &MinimalModel, seed: u64, samples: usize, trials: usize) -> Check {
    let mut r = rng(seed, 6);
    let ft = check_fundamental_theorems(&mut r, m.cdga(), samples);
    let mut outcomes = Vec::new();
    let mut ok = true;
    for _ in 0..trials {
        match extension_trial(&mut r, m.cdga()) {
            Ok(Some(t)) => {
                ok &= t.passed();
                outcomes.push(json!({"slot": t.slot, "cocycle": t.cocycle, "known_solution": t.known_solution, "solved": t.solved}));
            }
            Ok(None) => break,
            Err(HomotopyError::NotTriangular) => break,
            Err(e) => {
                ok = false;
                outcomes.push(json!(e.to_string()));
            }
        }
    }
    Check::group(
        format!("homotopy-check {}", m.name()),
        "",
        vec![
            Check::new(
                "fundamental theorems",
                Status::of(ft.passed()),
                "d∫₀¹u + ∫₀¹du = u|₁ − u|₀ and d∫₀ᵗu + ∫₀ᵗdu = u − u|₀⊗1",
            )
            .witness(json!({ "samples": ft.samples, "failures": ft.failures })),
            Check::new(
                "extension problems",
                Status::of(ok),
                "d(O(z)) = 0 and the extension formulas",
            )
            .witness(json!({ "truncation": m.universe().truncation(), "trials": outcomes })),
        ],
    )
}

/// The relative obstruction of the two-map example: `φ(x) = u`, `ψ(x) = 2u`,
/// `μ` the augmentation.
pub fn relative_example() -> Check {
    let file = parse_file(io::fixture("relative").unwrap().text).expect("bundled example parses");
    relative_from_file(&file)
}

pub fn relative_from_file(file: &ModelFile) -> Check {
    let name = "relative obstruction";
    let (Some(phi), Some(psi), Some(mu)) = (
        file.morphism("phi"),
        file.morphism("psi"),
        file.morphism("mu"),
    ) else {
        return Check::new(name, Status::Fail, "").note("file needs morphisms phi, psi and mu");
    };
    let src = phi.source();
    let slot: Vec<usize> = (0..src.universe().len()).collect();
    let hom = AlgebraicHomotopy::empty(src, phi.target());
    let zero = IntervalElement::zero(mu.target().universe());
    let chi = match AlgebraicHomotopy::new(src, mu.target(), vec![Some(zero); slot.len()]) {
        Ok(c) => c,
        Err(e) => return Check::new(name, Status::Fail, "").note(e.to_string()),
    };
    let data = RelativeData {
        phi,
        psi,
        homotopy: &hom,
        mu,
        chi: &chi,
        slot: &slot,
    };
    match data.relative_obstruction() {
        Ok(obs) => {
            let cocycle = obs.iter().all(|o| {
                relative_d(mu, &o.cochain)
                    .map(|r| r.is_zero())
                    .unwrap_or(false)
            });
            let expected = psi.apply(&Element::generator(src.universe(), 0)).unwrap()
                - phi.apply(&Element::generator(src.universe(), 0)).unwrap();
            let value_ok = obs[0].cochain.b == expected && obs[0].cochain.c.is_zero();
            let nonzero = obs.iter().any(|o| !o.vanishes);
            Check::new(
                name,
                Status::of(cocycle && value_ok && nonzero),
                "O(z) = (ψ(z) − φ(z) − ∫₀¹Φ(dz); ∫₀¹χ(z)) is a nonzero class",
            )
            .witness(json!({
                "obstruction": obs.iter().map(|o| json!({"generator": o.generator, "B": o.cochain.b.to_string(), "C": o.cochain.c.to_string(), "vanishes": o.vanishes})).collect::<Vec<_>>(),
                "cocycle": cocycle,
                "truncation": phi.target().universe().truncation(),
            }))
        }
        Err(e) => Check::new(name, Status::Fail, "").note(e.to_string()),
    }
}

/// `O(z) = (0, u)` for the slot `z ↦ u` over the ground field, and its
/// extension.
pub fn ground_slot_example() -> Check {
    let file = parse_file(
        "model Z maxdeg 2\ngen z deg 2\n\nmodel B maxdeg 2\ngen u deg 2\n\nmorphism g from Z to B\nmap z = u\nend\n",
    )
    .expect("inline example parses");
    let g = file.morphism("g").unwrap();
    let f = g.restrict(&[]);
    let eta = DgaMorphism::identity(g.target());
    let phi = AlgebraicHomotopy::empty(g.source(), g.target());
    let data = ExtensionData {
        f: &f,
        eta: &eta,
        g,
        phi: &phi,
        slot: &[0],
    };
    let name = "obstruction over the ground field";
    match (data.obstruction_cochain(), data.find_extension()) {
        (Ok(o), Ok(Some(ext))) => {
            let u = g.image(0).unwrap();
            let ok = o[0].cochain.b.is_zero() && &o[0].cochain.c == u && ext.f.image(0) == Some(u);
            Check::new(name, Status::of(ok), "O(z) = (f(dz), g(z) + ∫₀¹Φ(dz))").witness(json!({
                "B": o[0].cochain.b.to_string(), "C": o[0].cochain.c.to_string(),
                "extension": ext.f.image(0).map(ToString::to_string),
            }))
        }
        (Err(e), _) | (_, Err(e)) => Check::new(name, Status::Fail, "").note(e.to_string()),
        (_, Ok(None)) => Check::new(name, Status::Fail, "").note("no extension found"),
    }
}

pub fn whitehead(c: u32, k_max: u32) -> Check {
    let lemmas = verify_jacobi_lemmas(k_max, c);
    let nonvanishing = verify_nonvanishing(k_max, c);
    let failures: Vec<Value> = lemmas
        .failures()
        .into_iter()
        .map(|f| json!({"identity": f.identity, "k": f.k, "j": f.j}))
        .collect();
    let rows: Vec<Value> = nonvanishing
        .rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k, "words": r.words, "direct": r.direct, "retraction": r.retraction,
                "ratio": r.ratio.as_ref().map(crate::rational::format_rational),
                "weight": r.weight.as_ref().ok(), "expected_weight": (c + 1) * (r.k - 1),
            })
        })
        .collect();
    Check::group(
        format!("whitehead c={c} k≤{k_max}"),
        "",
        vec![
            Check::new(
                "bracket identities",
                Status::of(lemmas.passed()),
                "[t,ζ(k,c)] = 0 and ζ(k,j) = [α_j,ζ(k−1,c)]",
            )
            .witness(json!({ "checked": lemmas.checks.len(), "failures": failures })),
            Check::new(
                "nonvanishing",
                Status::of(nonvanishing.passed()),
                "ζ(k,c) ≠ 0, directly and after retraction",
            )
            .witness(json!(rows.clone())),
            Check::new(
                "scaling weights",
                Status::of(nonvanishing.weights_match()),
                "wt ζ(k,c) = (c+1)(k−1)",
            )
            .witness(json!(rows
                .iter()
                .map(|r| json!([r["k"], r["weight"], r["expected_weight"]]))
                .collect::<Vec<_>>())),
        ],
    )
}

// ---------------------------------------------------------------------------
// acceptance criteria

/// Criterion 1: bundled models validate; each fixture fails for its own
/// reason.
pub fn criterion_validation() -> Check {
    let mut children: Vec<Check> = bundled_models().iter().map(validate).collect();
    let broken = parse_file(io::fixture("broken").unwrap().text);
    let broken_ok = matches!(&broken, Err(e) if e.0.len() == 1 && e.0[0].line == 5 && e.0[0].kind == ParseErrorKind::NotMinimal("z".into()));
    children.push(
        Check::new(
            "broken.sm rejected",
            Status::of(broken_ok),
            "a linear term violates minimality",
        )
        .witness(json!(broken.err().map(|e| e.to_string()))),
    );
    let so3 = parse_file(io::fixture("so3").unwrap().text)
        .expect("so3 parses")
        .primary()
        .validate();
    let so3_ok = so3.d_squared.is_empty() && so3.minimality.is_empty() && !so3.nilpotence.exhausted;
    children.push(
        Check::new(
            "so3.sm not nilpotent",
            Status::of(so3_ok),
            "nilpotence fails, d² = 0 and minimality hold",
        )
        .witness(json!({ "outside": so3.nilpotence.missing })),
    );
    let d2 = parse_file(io::fixture("d-squared").unwrap().text)
        .expect("d-squared parses")
        .primary()
        .validate();
    children.push(
        Check::new(
            "d-squared.sm has d² ≠ 0",
            Status::of(d2.d_squared == ["w"]),
            "d(dw) ≠ 0 is detected at w",
        )
        .witness(json!({ "generators": d2.d_squared })),
    );
    Check::group("1. model validation", "", children)
}

/// Criterion 2: naive and cautious filtrations agree, exactly.
pub fn criterion_filtrations(models: &[MinimalModel]) -> Check {
    let mut low = Vec::new();
    let mut high = Vec::new();
    for m in models {
        let d = m.cautious_filtration().differences(m.naive_filtration());
        let (one, rest): (Vec<_>, Vec<_>) = d.into_iter().partition(|(n, _)| *n == 1);
        if !one.is_empty() {
            low.push(json!({"model": m.name(), "levels": one.iter().map(|(_, j)| j).collect::<Vec<_>>()}));
        }
        if !rest.is_empty() {
            high.push(json!({"model": m.name(), "differences": rest}));
        }
    }
    let total = models.len();
    Check::group(
        "2. naive = cautious filtration",
        "the naive and cautious filtrations agree for all n and J",
        vec![
            Check::new("degree 1", Status::of(low.is_empty()), "V¹ ∧ W̃(J−1) versus C¹(J−1) ∧ C¹(J−1)")
                .witness(json!({ "models": total, "differing": low.len(), "examples": low.iter().take(5).collect::<Vec<_>>() })),
            Check::new("degrees ≥ 2", Status::of(high.is_empty()), "")
                .witness(json!({ "models": total, "differing": high.len(), "examples": high.iter().take(5).collect::<Vec<_>>() })),
        ],
    )
}

/// Criterion 3: δ injective, `d_nil` blocks within `i + j ≤ J`, and the
/// coformal refinement.
pub fn criterion_step_bounds(models: &[MinimalModel]) -> Check {
    let mut bad = Vec::new();
    let mut coformal = 0;
    for m in models {
        match m.adapted() {
            Ok(a) => {
                let delta = a.delta_violations();
                let blocks = a.step_bounds();
                coformal += blocks.coformal_checked as usize;
                if !delta.is_empty() || !blocks.passed() {
                    bad.push(json!({
                        "model": m.name(),
                        "delta": delta.iter().map(|v| json!({"degree": v.degree, "step": v.step, "dim": v.dim, "rank": v.rank})).collect::<Vec<_>>(),
                        "blocks": blocks.violations.iter().chain(&blocks.coformal_violations).map(|v| json!({"generator": v.generator, "step": v.step, "block": [v.block.0, v.block.1], "bound": v.bound})).collect::<Vec<_>>(),
                    }));
                }
            }
            Err(e) => bad.push(json!({"model": m.name(), "error": e.to_string()})),
        }
    }
    Check::new(
        "3. δ-injectivity and block bounds",
        Status::of(bad.is_empty()),
        "δ: E¹(J) → E¹(1) ∧ E¹(J−1) injective; d_nil blocks satisfy i + j ≤ J; coformal: i₁ + i₂ ≤ J + c",
    )
    .witness(json!({ "models": models.len(), "coformal_models": coformal, "failures": bad }))
}

/// Criterion 4: the weight bounds.
pub fn criterion_weights(models: &[MinimalModel]) -> Check {
    let mut bad = Vec::new();
    let mut counts = std::collections::BTreeMap::<&str, usize>::new();
    for m in models {
        match m.weight_bounds() {
            Ok(r) => {
                for g in &r.generators {
                    for c in &g.checks {
                        *counts.entry(c.name).or_default() += 1;
                    }
                }
                for (g, c) in r.failures() {
                    bad.push(json!({"model": m.name(), "generator": g, "bound": c.name, "value": c.bound}));
                }
            }
            Err(e) => bad.push(json!({"model": m.name(), "error": e.to_string()})),
        }
    }
    Check::new(
        "4. weight bounds",
        Status::of(bad.is_empty()),
        "wt(v) bounded by degree, step and class",
    )
    .witness(json!({ "models": models.len(), "comparisons": counts, "failures": bad }))
}

/// Criterion 5: the exponent table at `(n, c) ∈ {2..5} × {1..4}`.
pub fn criterion_exponents() -> Check {
    let mut bad = Vec::new();
    let mut cells = 0;
    for n in 2..=5u32 {
        for c in 1..=4u32 {
            let t = table_cells(n, c);
            let expected = [
                ("simply connected upper", t.simply_connected_upper, 2 * n),
                (
                    "simply connected lower",
                    t.simply_connected_lower,
                    2 * (n - 1),
                ),
                ("simple upper", t.simple_upper, 2 * n + 1),
                ("nilpotent upper", t.nilpotent_upper, (4 * c - 1) * n),
                ("coformal upper", t.coformal_upper, (c + 1) * n),
                ("coformal lower", t.coformal_lower, (c + 1) * (n - 1)),
                (
                    "printed coformal lower",
                    t.coformal_lower_printed,
                    (c - 1) * (n - 1),
                ),
                ("conjecture", t.conjecture, 3 * n * c),
            ];
            for (name, got, want) in expected {
                cells += 1;
                if got != want {
                    bad.push(json!({"cell": name, "n": n, "c": c, "got": got, "want": want}));
                }
            }
            let pick = |sc, cf| {
                ExponentReport::new(
                    Classification {
                        simply_connected: sc,
                        class: c,
                        coformal: cf,
                    },
                    [n],
                )
                .rows[0]
                    .clone()
            };
            let general = pick(false, false);
            let cof = pick(false, true);
            let mut row_checks = vec![
                ("general upper", general.upper, (4 * c - 1) * n),
                ("general conjecture", general.conjecture, 3 * n * c),
                ("coformal lower", cof.lower.unwrap_or(0), (c + 1) * (n - 1)),
                (
                    "coformal printed lower",
                    cof.lower_printed.unwrap_or(0),
                    (c - 1) * (n - 1),
                ),
            ];
            if c == 1 {
                let sc = pick(true, false);
                row_checks.push(("simply connected upper", sc.upper, 2 * n));
                row_checks.push(("simply connected lower", sc.lower.unwrap_or(0), 2 * (n - 1)));
                row_checks[0].2 = 2 * n + 1;
            }
            row_checks.push((
                "coformal upper",
                cof.upper,
                ((c + 1) * n).min(general.upper),
            ));
            for (name, got, want) in row_checks {
                cells += 1;
                if got != want {
                    bad.push(json!({"row": name, "n": n, "c": c, "got": got, "want": want}));
                }
            }
        }
    }
    Check::new("5. exponent table", Status::of(bad.is_empty()), "upper 2n, 2n+1, (4c−1)n, (c+1)n; lower 2(n−1), (c+1)(n−1)")
        .witness(json!({ "comparisons": cells, "failures": bad }))
        .note("printed coformal cells (c−1)(n−1) and (c−1)n and the conjecture 3nc are reported as flagged alternatives")
}

/// Criterion 6: both integration identities on random interval elements.
pub fn criterion_fundamental(cfg: &SuiteConfig, models: &[MinimalModel]) -> Check {
    let children = models
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let r = check_fundamental_theorems(
                &mut rng(cfg.seed, 100 + i as u64),
                m.cdga(),
                cfg.interval_samples,
            );
            Check::new(m.name(), Status::of(r.passed()), "")
                .witness(json!({ "samples": r.samples, "failures": r.failures }))
        })
        .collect();
    Check::group(
        "6. fundamental theorems",
        "d∫₀¹u + ∫₀¹du = u|₁ − u|₀ and d∫₀ᵗu + ∫₀ᵗdu = u − u|₀⊗1",
        children,
    )
}

/// Criterion 7: cocycle condition, extension round trips and the two-map
/// example.
pub fn criterion_obstruction(cfg: &SuiteConfig, models: &[MinimalModel]) -> Check {
    let mut r = rng(cfg.seed, 7);
    let mut instances = 0;
    let mut bad = Vec::new();
    for m in models {
        for _ in 0..cfg.extension_trials {
            match extension_trial(&mut r, m.cdga()) {
                Ok(Some(t)) => {
                    instances += 1;
                    if !t.passed() {
                        bad.push(json!({"model": m.name(), "slot": t.slot, "cocycle": t.cocycle, "known_solution": t.known_solution, "solved": t.solved}));
                    }
                }
                Ok(None) | Err(HomotopyError::NotTriangular) => break,
                Err(e) => bad.push(json!({"model": m.name(), "error": e.to_string()})),
            }
        }
    }
    Check::group(
        "7. obstruction calculus",
        "",
        vec![
            Check::new(
                "sampled extension problems",
                Status::of(bad.is_empty() && instances > 0),
                "d(O(z)) = 0; Φ̃ restricts to g and η∘f̃",
            )
            .witness(json!({ "instances": instances, "failures": bad })),
            ground_slot_example(),
            relative_example(),
        ],
    )
}

/// Criterion 8: the bracket identities for `2 ≤ k ≤ 6`, `1 ≤ c ≤ 3`.
pub fn criterion_whitehead(cfg: &SuiteConfig) -> Check {
    Check::group(
        "8. Whitehead brackets",
        "",
        (1..=cfg.whitehead_max_c)
            .map(|c| whitehead(c, cfg.whitehead_max_k))
            .collect(),
    )
}

/// Criteria 1 to 8 on the bundled models and the seeded random corpus.
pub fn selftest(cfg: &SuiteConfig) -> Report {
    let bundled = bundled_models();
    let mut all = bundled.clone();
    all.extend(random_corpus(cfg));
    let some_random: Vec<MinimalModel> = bundled
        .iter()
        .cloned()
        .chain(all[bundled.len()..].iter().take(20).cloned())
        .collect();
    Report::new(
        "selftest",
        vec![
            criterion_validation(),
            criterion_filtrations(&all),
            criterion_step_bounds(&all),
            criterion_weights(&all),
            criterion_exponents(),
            criterion_fundamental(cfg, &bundled),
            criterion_obstruction(cfg, &some_random),
            criterion_whitehead(cfg),
        ],
    )
    .with_seed(cfg.seed)
}
