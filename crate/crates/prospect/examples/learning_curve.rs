//! Learning curve: repeat the hybrid experiment over a grid of train
//! fractions with several seeded trials each, then export the aggregate
//! curve as CSV.
//!
//! ```bash
//! cargo run -p prospect --example learning_curve
//! ```

use prospect::dataset::{generate_synthetic, SyntheticConfig};
use prospect::eval::{export_curve, run_learning_curve, CurveConfig};

fn main() -> prospect::Result<()> {
    let data = generate_synthetic(&SyntheticConfig {
        n_per_class: 150,
        n_quant: 5,
        n_qual: 0,
        separation: 2.5,
        seed: 37,
    })?;

    let config = CurveConfig {
        fractions: vec![0.1, 0.3, 0.5, 0.7, 0.9],
        n_trials: 5,
        base_seed: 2,
        ..CurveConfig::default()
    };
    let report = run_learning_curve(&data, &config)?;

    println!("fraction  mean_acc  std_acc   rate(+1)  rate(-1)  trials");
    for a in &report.aggregates {
        println!(
            "{:7.2}   {:.4}    {:.4}    {:.4}    {:.4}    {}",
            a.fraction,
            a.mean_accuracy,
            a.std_accuracy,
            a.mean_rate_pos.unwrap_or(f64::NAN),
            a.mean_rate_neg.unwrap_or(f64::NAN),
            a.n_trials
        );
    }
    if !report.failures.is_empty() {
        println!("{} failed trials", report.failures.len());
    }

    let path = std::env::temp_dir().join("prospect_curve.csv");
    export_curve(&report, &path)?;
    println!("curve written to {}", path.display());
    Ok(())
}
