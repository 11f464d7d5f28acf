//! Cluster unlabeled patterns with fuzzy c-means and inspect memberships,
//! centroids and the objective.
//!
//! ```bash
//! cargo run -p prospect --example fcm_clustering
//! ```

use prospect::dataset::{generate_synthetic, SyntheticConfig};
use prospect::fcm::{fcm_fit, harden, FcmConfig};

fn main() -> prospect::Result<()> {
    let data = generate_synthetic(&SyntheticConfig {
        n_per_class: 100,
        n_quant: 2,
        n_qual: 0,
        separation: 6.0,
        seed: 3,
    })?;

    let config = FcmConfig {
        c: 2,
        phi: 2.0,
        stop_eps: 1e-4,
        seed: 5,
        ..FcmConfig::default()
    };
    let (model, memberships) = fcm_fit(&data, &config)?;
    println!(
        "converged: {} after {} iterations, J = {:.4}",
        model.converged, model.iterations, model.final_objective
    );
    for (k, c) in model.centroids.iter().enumerate() {
        println!("centroid {k}: ({:.3}, {:.3})", c[0], c[1]);
    }

    let crisp = harden(&memberships);
    let first_class = crisp.iter().filter(|&&k| k == 0).count();
    println!("hardened split: {} / {}", first_class, data.len() - first_class);
    println!(
        "fuzziest pattern row: {:?}",
        (0..data.len())
            .map(|i| memberships.row(i))
            .min_by(|a, b| {
                let spread = |r: &[f64]| (r[0] - r[1]).abs();
                spread(a).partial_cmp(&spread(b)).unwrap()
            })
            .unwrap()
    );
    Ok(())
}
