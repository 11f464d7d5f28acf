//! Discover classes without labels or a preset class count: the growing
//! clusterer seeds a sphere on the closest free pair, absorbs near-surface
//! patterns, and repeats until everything is assigned.
//!
//! ```bash
//! cargo run -p prospect --example grow_clusters
//! ```

use prospect::dataset::{generate_synthetic, SyntheticConfig};
use prospect::growing::{grow_clusters, GrowingConfig};

fn main() -> prospect::Result<()> {
    let data = generate_synthetic(&SyntheticConfig {
        n_per_class: 40,
        n_quant: 2,
        n_qual: 0,
        separation: 10.0,
        seed: 29,
    })?;

    let model = grow_clusters(&data, &GrowingConfig::default())?;
    println!("discovered K = {} classes", model.n_classes());
    for class in model.classes() {
        println!(
            "class {}: {} members, center ({:.3}, {:.3}), radius {:.3}",
            class.class_id,
            class.member_count,
            class.sphere.center()[0],
            class.sphere.center()[1],
            class.sphere.radius()
        );
    }

    // the generator labeled its two clusters; check the partition against it
    let truth = data.require_labels()?;
    let ids: Vec<usize> = model.assignments().iter().map(|a| a.unwrap()).collect();
    let direct = truth
        .iter()
        .zip(&ids)
        .filter(|(l, id)| (**l == prospect::dataset::Label::Plus) == (**id == 1))
        .count();
    let agreement = direct.max(truth.len() - direct) as f64 / truth.len() as f64;
    println!("agreement with generator truth (up to relabeling): {agreement:.3}");
    Ok(())
}
