//! Train a Minimerror hyperplane on labeled data and watch the annealing
//! schedule: temperature decreasing, errors dropping, then the closing
//! fixed-temperature descent.
//!
//! ```bash
//! cargo run -p prospect --example train_hyperplane
//! ```

use prospect::dataset::{generate_synthetic, standardize, SyntheticConfig};
use prospect::minimerror::{predict, train_minimerror, AnnealingConfig};

fn main() -> prospect::Result<()> {
    let raw = generate_synthetic(&SyntheticConfig {
        n_per_class: 50,
        n_quant: 2,
        n_qual: 0,
        separation: 5.0,
        seed: 17,
    })?;
    let (data, _) = standardize(&raw)?;

    let (plane, diag) = train_minimerror(&data, &AnnealingConfig::default())?;
    for (i, e) in diag.epochs.iter().enumerate() {
        if i % 50 == 0 {
            println!(
                "epoch {:4}  T = {:6.3}  E = {:8.4}  errors = {:2}  {}",
                i + 1,
                e.temperature,
                e.cost,
                e.errors,
                if e.final_phase { "(final phase)" } else { "" }
            );
        }
    }
    let summary = diag.summary();
    println!(
        "done: {} epochs, snapshot from epoch {}, {} training errors",
        summary.epochs_run, summary.best_epoch, summary.training_errors
    );
    println!("weights (incl. bias): {:?}", plane.weights());

    let correct = data
        .patterns()
        .iter()
        .filter(|p| Some(predict(&plane, p)) == p.label)
        .count();
    println!("training accuracy: {}/{}", correct, data.len());
    Ok(())
}
