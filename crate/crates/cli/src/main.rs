use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sullivan::io::{self, parse_file, ModelFile};
use sullivan::model::MinimalModel;
use sullivan::report::{Check, Report, Status};
use sullivan::suite::{self, SuiteConfig};

/// Checks for minimal Sullivan models: validation, filtrations, weights,
/// volume exponents, obstruction calculus and Whitehead brackets.
#[derive(Parser)]
#[command(name = "sullivan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Model file, or the name of a bundled model such as `heisenberg`.
    #[arg(long, global = true)]
    model: Option<String>,

    /// Emit the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized suites.
    #[arg(long, global = true, env = "SULLIVAN_SEED", default_value_t = suite::DEFAULT_SEED)]
    seed: u64,

    /// Keep only generators of degree at most this.
    #[arg(long, global = true)]
    truncate: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// d² = 0, minimality and nilpotence.
    Validate,
    /// Nilpotency class, simple connectivity, coformality, steps.
    Classify,
    /// Cautious filtration and comparison with the naive one.
    Filtration,
    /// Weights and their bounds.
    Weights,
    /// Upper and lower volume exponents.
    Bounds {
        /// Largest n to evaluate the exponents at.
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
    /// Integration identities, extension problems, declared maps.
    HomotopyCheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Bracket identities in the mapping-torus Lie algebra.
    Whitehead {
        #[arg(long, default_value_t = 2)]
        c: u32,
        #[arg(long, default_value_t = 6)]
        max_k: u32,
    },
    /// The full acceptance suite on bundled and random models.
    Selftest,
}

enum Failure {
    Input(String),
}

fn load(spec: Option<&str>) -> Result<ModelFile, Failure> {
    let spec = spec.ok_or_else(|| Failure::Input("--model is required for this command".into()))?;
    let text = if Path::new(spec).exists() {
        std::fs::read_to_string(spec).map_err(|e| Failure::Input(format!("{spec}: {e}")))?
    } else if let Some(f) = io::fixture(spec) {
        f.text.to_string()
    } else {
        return Err(Failure::Input(format!(
            "{}: no such file or bundled model",
            PathBuf::from(spec).display()
        )));
    };
    parse_file(&text).map_err(|e| Failure::Input(format!("{spec}:\n{e}")))
}

fn models(file: &ModelFile, truncate: Option<u32>) -> Result<Vec<MinimalModel>, Failure> {
    file.sections
        .iter()
        .map(|s| match truncate {
            Some(n) => s
                .model
                .truncated(n)
                .map_err(|e| Failure::Input(e.to_string())),
            None => Ok(s.model.clone()),
        })
        .collect()
}

fn defect_witness<T: std::fmt::Display>(defects: &[(String, T)]) -> serde_json::Value {
    defects
        .iter()
        .map(|(g, e)| (g.clone(), serde_json::Value::from(e.to_string())))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

fn declared_maps(file: &ModelFile) -> Vec<Check> {
    let mut out = Vec::new();
    for m in &file.morphisms {
        let defects = m.morphism.commutation_defects();
        out.push(
            Check::new(
                format!("morphism {}", m.name),
                Status::of(defects.is_empty()),
                "φ∘d = d∘φ",
            )
            .witness(defect_witness(&defects)),
        );
    }
    for h in &file.homotopies {
        let defects = h.homotopy.commutation_defects();
        out.push(
            Check::new(
                format!("homotopy {}", h.name),
                Status::of(defects.is_empty()),
                "Φ∘d = d∘Φ",
            )
            .witness(defect_witness(&defects)),
        );
    }
    if ["phi", "psi", "mu"]
        .iter()
        .all(|n| file.morphism(n).is_some())
    {
        out.push(suite::relative_from_file(file));
    }
    out
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let per_model = |title: &str, f: &dyn Fn(&MinimalModel) -> Check| -> Result<Report, Failure> {
        let file = load(cli.model.as_deref())?;
        let ms = models(&file, cli.truncate)?;
        let mut r = Report::new(title, ms.iter().map(f).collect());
        if let Some(t) = ms[0].universe().truncation() {
            r = r.with_truncation(t);
        }
        Ok(r)
    };
    match &cli.command {
        Command::Validate => per_model("validate", &suite::validate),
        Command::Classify => per_model("classify", &suite::classify),
        Command::Filtration => per_model("filtration", &suite::filtration),
        Command::Weights => per_model("weights", &suite::weights),
        Command::Bounds { max_n } => {
            let ns: Vec<u32> = (2..=(*max_n).max(2)).collect();
            per_model("bounds", &|m| suite::bounds(m, &ns))
        }
        Command::HomotopyCheck { samples, trials } => {
            let file = load(cli.model.as_deref())?;
            let ms = models(&file, cli.truncate)?;
            let mut checks = vec![suite::homotopy_check(&ms[0], cli.seed, *samples, *trials)];
            checks.extend(declared_maps(&file));
            let mut r = Report::new("homotopy-check", checks).with_seed(cli.seed);
            if let Some(t) = ms[0].universe().truncation() {
                r = r.with_truncation(t);
            }
            Ok(r)
        }
        Command::Whitehead { c, max_k } => {
            if *c == 0 || *max_k < 2 {
                return Err(Failure::Input("need --c ≥ 1 and --max-k ≥ 2".into()));
            }
            Ok(Report::new("whitehead", vec![suite::whitehead(*c, *max_k)]))
        }
        Command::Selftest => Ok(suite::selftest(&SuiteConfig::new(cli.seed))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
