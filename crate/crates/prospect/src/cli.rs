//! Command-line driver: `stats`, `train`, `eval` and `generate` subcommands
//! over a single JSON run configuration.
//!
//! Exit codes: 0 on success, 1 for runtime failures (bad data, training
//! errors, write failures), 2 for configuration or usage errors (unknown
//! keys, missing keys, missing input files, bad flag values).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::dataset::{
    class_mean_diff, generate_synthetic, load_csv, select_attributes, standardize, write_csv,
    AttributePreset, AttributeSchema, Dataset, Label, SyntheticConfig,
};
use crate::error::Error;
use crate::eval::{export_curve, run_learning_curve, CurveConfig, DEFAULT_FRACTIONS};
use crate::fcm::{FcmConfig, FcmInit};
use crate::growing::{grow_clusters, GrowingConfig};
use crate::hybrid::{hybrid_fit, hybrid_predict, map_clusters_to_labels, HybridConfig};
use crate::minimerror::{train_minimerror, AnnealingConfig};
use crate::minimerror_s::{train_minimerror_s, SphereSeparator, RADIUS_FLOOR};

/// Run configuration document. Unknown keys are rejected.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Input CSV (output path for `generate`).
    pub data: Option<PathBuf>,
    /// Schema JSON (written by `generate`, read by everything else).
    pub schema: Option<PathBuf>,
    /// Attribute preset I..XI applied after loading.
    pub preset: Option<String>,
    /// Training mode: plane | sphere | grow | hybrid.
    pub mode: Option<String>,
    /// Master seed; drives clustering init, splits and generation.
    pub seed: Option<u64>,
    /// Primary output path.
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub fcm: FcmSettings,
    /// Annealing overrides; when absent, `grow` uses the kernel-scale
    /// schedule and every other mode uses the standard defaults.
    pub annealing: Option<AnnealingConfig>,
    #[serde(default)]
    pub growing: GrowingSettings,
    #[serde(default)]
    pub eval: EvalSettings,
    pub generate: Option<GenerateSettings>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct FcmSettings {
    pub c: usize,
    pub phi: f64,
    pub stop_eps: f64,
    pub max_iter: usize,
}

impl Default for FcmSettings {
    fn default() -> Self {
        let d = FcmConfig::default();
        FcmSettings {
            c: d.c,
            phi: d.phi,
            stop_eps: d.stop_eps,
            max_iter: d.max_iter,
        }
    }
}

impl FcmSettings {
    fn to_config(&self, seed: u64) -> FcmConfig {
        FcmConfig {
            c: self.c,
            phi: self.phi,
            stop_eps: self.stop_eps,
            max_iter: self.max_iter,
            init: FcmInit::RandomMemberships,
            seed,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GrowingSettings {
    pub prune_min_size: usize,
    pub border_bounds: Option<Vec<(f64, f64)>>,
    pub max_classes: usize,
}

impl Default for GrowingSettings {
    fn default() -> Self {
        let d = GrowingConfig::default();
        GrowingSettings {
            prune_min_size: d.prune_min_size,
            border_bounds: None,
            max_classes: d.max_classes,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EvalSettings {
    pub fractions: Vec<f64>,
    pub n_trials: usize,
    pub standardize_whole_corpus: bool,
    /// Curve CSV path; defaults to the report path with a .csv extension.
    pub curve_out: Option<PathBuf>,
}

impl Default for EvalSettings {
    fn default() -> Self {
        EvalSettings {
            fractions: DEFAULT_FRACTIONS.to_vec(),
            n_trials: 20,
            standardize_whole_corpus: false,
            curve_out: None,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerateSettings {
    pub n_per_class: usize,
    pub n_quant: usize,
    #[serde(default)]
    pub n_qual: usize,
    pub separation: f64,
}

#[derive(Parser)]
#[command(
    name = "prospect",
    version,
    about = "Hybrid fuzzy-clustering / annealed-sphere classification toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the per-attribute squared class-mean difference table
    Stats(CommonArgs),
    /// Train a model; mode is plane, sphere, grow or hybrid
    Train(CommonArgs),
    /// Run the learning-curve evaluation and export report + curve CSV
    Eval(CommonArgs),
    /// Generate a synthetic deposit/barren dataset (CSV + schema JSON)
    Generate(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the JSON run configuration
    #[arg(long)]
    config: PathBuf,
    /// Override the configured master seed
    #[arg(long)]
    seed: Option<u64>,
    /// Override the configured attribute preset (I..XI)
    #[arg(long)]
    preset: Option<String>,
    /// Override the configured training mode
    #[arg(long)]
    mode: Option<String>,
    /// Override the configured output path
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn runtime(e: Error) -> Failure {
    Failure {
        code: 1,
        message: e.to_string(),
    }
}

type CmdResult = Result<(), Failure>;

/// Parses argv and runs the selected command, returning the process exit
/// code. Usage errors from the argument parser itself also exit with 2.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Stats(args) => cmd_stats(args),
        Command::Train(args) => cmd_train(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Generate(args) => cmd_generate(args),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn load_config(args: &CommonArgs) -> Result<RunConfig, Failure> {
    if !args.config.exists() {
        return Err(usage(format!(
            "config file `{}` does not exist",
            args.config.display()
        )));
    }
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| usage(format!("cannot read config: {e}")))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid config: {e}")))
}

fn require<T>(value: Option<T>, key: &str) -> Result<T, Failure> {
    value.ok_or_else(|| usage(format!("missing config key `{key}`")))
}

fn require_input(path: &Path, key: &str) -> Result<(), Failure> {
    if path.exists() {
        Ok(())
    } else {
        Err(usage(format!(
            "config key `{key}` points to `{}`, which does not exist",
            path.display()
        )))
    }
}

fn effective_seed(args: &CommonArgs, config: &RunConfig) -> u64 {
    args.seed.or(config.seed).unwrap_or(0)
}

fn effective_out(args: &CommonArgs, config: &RunConfig) -> Result<PathBuf, Failure> {
    require(args.out.clone().or_else(|| config.out.clone()), "out")
}

/// Loads the input CSV through the schema and applies the preset, if any.
fn load_input(args: &CommonArgs, config: &RunConfig) -> Result<(Dataset, AttributeSchema), Failure> {
    let data_path = require(config.data.clone(), "data")?;
    let schema_path = require(config.schema.clone(), "schema")?;
    require_input(&data_path, "data")?;
    require_input(&schema_path, "schema")?;
    let schema = AttributeSchema::load_json(&schema_path).map_err(runtime)?;
    let mut data = load_csv(&data_path, &schema).map_err(runtime)?;
    if let Some(name) = args.preset.clone().or_else(|| config.preset.clone()) {
        let preset: AttributePreset = name
            .parse()
            .map_err(|e: Error| usage(e.to_string()))?;
        data = select_attributes(&data, &preset.indices()).map_err(runtime)?;
    }
    Ok((data, schema))
}

fn write_json<T: serde::Serialize>(value: &T, path: &Path) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| runtime(Error::Json(e)))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| runtime(Error::Io(e)))?;
    Ok(())
}

fn cmd_stats(args: &CommonArgs) -> CmdResult {
    let config = load_config(args)?;
    let (data, _) = load_input(args, &config)?;
    let diffs = class_mean_diff(&data).map_err(runtime)?;
    println!("attribute\tvalue");
    for (attr, value) in data.schema().attributes().iter().zip(&diffs) {
        println!("{}\t{}", attr.name, value);
    }
    Ok(())
}

fn cmd_train(args: &CommonArgs) -> CmdResult {
    let config = load_config(args)?;
    let mode = require(args.mode.clone().or_else(|| config.mode.clone()), "mode")?;
    let out = effective_out(args, &config)?;
    let seed = effective_seed(args, &config);
    let (raw, schema) = load_input(args, &config)?;
    let (data, _params) = standardize(&raw).map_err(runtime)?;
    let annealing = config.annealing.clone().unwrap_or_else(|| {
        if mode == "grow" {
            GrowingConfig::kernel_annealing()
        } else {
            AnnealingConfig::default()
        }
    });

    match mode.as_str() {
        "plane" => {
            let (plane, diag) = train_minimerror(&data, &annealing).map_err(runtime)?;
            let summary = diag.summary();
            let doc = serde_json::json!({
                "w": plane.weights(),
                "schema_hash": schema.fingerprint(),
                "config": annealing,
                "diagnostics": summary,
            });
            write_json(&doc, &out)?;
            println!(
                "plane: {} epochs (best {}), {} training errors -> {}",
                summary.epochs_run,
                summary.best_epoch,
                summary.training_errors,
                out.display()
            );
        }
        "sphere" => {
            let labels = data.require_labels().map_err(runtime)?;
            let inside: Vec<&[f64]> = data
                .patterns()
                .iter()
                .zip(&labels)
                .filter(|(_, &l)| l == Label::Minus)
                .map(|(p, _)| p.values.as_slice())
                .collect();
            if inside.is_empty() {
                return Err(runtime(Error::InsufficientData(
                    "sphere mode needs at least one -1 (barren) pattern to seed the center".into(),
                )));
            }
            let mut center = vec![0.0; data.dim()];
            for values in &inside {
                for (c, v) in center.iter_mut().zip(*values) {
                    *c += v / inside.len() as f64;
                }
            }
            let radius = inside
                .iter()
                .map(|v| crate::math::squared_distance(v, &center).sqrt())
                .fold(0.0, f64::max)
                .max(RADIUS_FLOOR);
            let init = SphereSeparator::new(center, radius).map_err(runtime)?;
            let (sphere, diag) = train_minimerror_s(&data, &init, &annealing).map_err(runtime)?;
            let summary = diag.summary();
            let doc = serde_json::json!({
                "center": sphere.center(),
                "radius": sphere.radius(),
                "config": annealing,
            });
            write_json(&doc, &out)?;
            println!(
                "sphere: {} epochs (best {}), {} training errors -> {}",
                summary.epochs_run,
                summary.best_epoch,
                summary.training_errors,
                out.display()
            );
        }
        "grow" => {
            let growing = GrowingConfig {
                annealing,
                prune_min_size: config.growing.prune_min_size,
                border_bounds: config.growing.border_bounds.clone(),
                max_classes: config.growing.max_classes,
                seed,
            };
            let model = grow_clusters(&data, &growing).map_err(runtime)?;
            write_json(&model.classes().to_vec(), &out)?;
            println!("grow: {} classes -> {}", model.n_classes(), out.display());
        }
        "hybrid" => {
            let hybrid = HybridConfig {
                fcm: config.fcm.to_config(seed),
                annealing,
            };
            let mut model = hybrid_fit(&data, &hybrid).map_err(runtime)?;
            if data.is_fully_labeled() && !data.is_empty() {
                let truth = data.require_labels().map_err(runtime)?;
                let predicted: Vec<usize> = data
                    .patterns()
                    .iter()
                    .map(|p| hybrid_predict(&model, p))
                    .collect();
                let mapping = map_clusters_to_labels(&predicted, &truth, model.class_count())
                    .map_err(runtime)?;
                model.label_map = Some(mapping);
            }
            write_json(&model, &out)?;
            println!(
                "hybrid: {} spheres -> {}",
                model.class_count(),
                out.display()
            );
        }
        other => {
            return Err(usage(format!(
                "unknown mode `{other}` (expected plane, sphere, grow or hybrid)"
            )))
        }
    }
    Ok(())
}

fn cmd_eval(args: &CommonArgs) -> CmdResult {
    let config = load_config(args)?;
    let out = effective_out(args, &config)?;
    let seed = effective_seed(args, &config);
    let (data, _) = load_input(args, &config)?;
    let curve = CurveConfig {
        fractions: config.eval.fractions.clone(),
        n_trials: config.eval.n_trials,
        base_seed: seed,
        hybrid: HybridConfig {
            fcm: config.fcm.to_config(seed),
            annealing: config.annealing.clone().unwrap_or_default(),
        },
        standardize_whole_corpus: config.eval.standardize_whole_corpus,
    };
    let report = run_learning_curve(&data, &curve).map_err(runtime)?;
    write_json(&report, &out)?;
    let curve_path = config
        .eval
        .curve_out
        .clone()
        .unwrap_or_else(|| out.with_extension("csv"));
    export_curve(&report, &curve_path).map_err(runtime)?;
    println!(
        "eval: {} fractions, {} trials, {} failures -> {} / {}",
        report.aggregates.len(),
        report.trials.len(),
        report.failures.len(),
        out.display(),
        curve_path.display()
    );
    Ok(())
}

fn cmd_generate(args: &CommonArgs) -> CmdResult {
    let config = load_config(args)?;
    let settings = require(config.generate.clone(), "generate")?;
    let out = effective_out(args, &config)?;
    let seed = effective_seed(args, &config);
    let synthetic = SyntheticConfig {
        n_per_class: settings.n_per_class,
        n_quant: settings.n_quant,
        n_qual: settings.n_qual,
        separation: settings.separation,
        seed,
    };
    let data = generate_synthetic(&synthetic).map_err(runtime)?;
    write_csv(&data, &out).map_err(runtime)?;
    let schema_path = config
        .schema
        .clone()
        .unwrap_or_else(|| out.with_extension("schema.json"));
    data.schema().save_json(&schema_path).map_err(runtime)?;
    println!(
        "generate: {} patterns -> {} / {}",
        data.len(),
        out.display(),
        schema_path.display()
    );
    Ok(())
}
