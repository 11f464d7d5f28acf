//! The full hybrid pipeline end to end: standardize, cluster with fuzzy
//! c-means, wrap each class in a trained sphere, map clusters to the
//! deposit/barren truth and score held-out data.
//!
//! ```bash
//! cargo run -p prospect --example hybrid_pipeline
//! ```

use prospect::dataset::{generate_synthetic, split, standardize, Label, SplitSpec, SyntheticConfig};
use prospect::eval::score;
use prospect::hybrid::{hybrid_fit, hybrid_predict, map_clusters_to_labels, HybridConfig};

fn main() -> prospect::Result<()> {
    let corpus = generate_synthetic(&SyntheticConfig {
        n_per_class: 320,
        n_quant: 5,
        n_qual: 0,
        separation: 2.5,
        seed: 31,
    })?;

    let (raw_train, raw_test) = split(&corpus, &SplitSpec::new(0.8, 1)?)?;
    let (train, params) = standardize(&raw_train)?;
    let test = params.apply(&raw_test)?;

    let model = hybrid_fit(&train, &HybridConfig::default())?;
    println!("fit {} spheres:", model.class_count());
    for (k, sphere) in model.spheres.iter().enumerate() {
        println!("  class {k}: radius {:.3}", sphere.radius());
    }

    // clusters are anonymous; name them with the training truth
    let train_truth = train.require_labels()?;
    let train_pred: Vec<usize> = train
        .patterns()
        .iter()
        .map(|p| hybrid_predict(&model, p))
        .collect();
    let mapping = map_clusters_to_labels(&train_pred, &train_truth, model.class_count())?;
    for (cluster, label) in &mapping.map {
        println!("  cluster {cluster} -> {label}");
    }

    let test_pred: Vec<Label> = test
        .patterns()
        .iter()
        .map(|p| mapping.label_of(hybrid_predict(&model, p)).unwrap_or(Label::Plus))
        .collect();
    let scores = score(&test_pred, &test.require_labels()?)?;
    println!("held-out accuracy: {:.4}", scores.accuracy);
    for (label, rate) in &scores.per_class {
        println!("  detection rate {label}: {rate:.4}");
    }
    Ok(())
}
