//! Train a Minimerror-S hypersphere to separate an inner cluster (-1) from
//! a surrounding ring (+1) — a separation no hyperplane can do.
//!
//! ```bash
//! cargo run -p prospect --example train_sphere
//! ```

use prospect::dataset::{AttributeSchema, Attribute, AttributeKind, Dataset, Label, Pattern};
use prospect::minimerror::AnnealingConfig;
use prospect::minimerror_s::{sphere_predict, train_minimerror_s, SphereSeparator};
use prospect::rng::Rng64;

fn main() -> prospect::Result<()> {
    let mut rng = Rng64::new(23);
    let schema = AttributeSchema::new(
        vec![
            Attribute::new("x", AttributeKind::Quantitative),
            Attribute::new("y", AttributeKind::Quantitative),
        ],
        None,
    )?;
    let mut patterns = Vec::new();
    for _ in 0..40 {
        let angle = rng.next_f64() * std::f64::consts::TAU;
        let r = rng.next_f64();
        patterns.push(Pattern::labeled(
            vec![r * angle.cos(), r * angle.sin()],
            Label::Minus,
        ));
    }
    for _ in 0..40 {
        let angle = rng.next_f64() * std::f64::consts::TAU;
        let r = 2.5 + rng.next_f64();
        patterns.push(Pattern::labeled(
            vec![r * angle.cos(), r * angle.sin()],
            Label::Plus,
        ));
    }
    let data = Dataset::new(schema, patterns)?;

    let init = SphereSeparator::new(vec![0.5, -0.5], 2.0)?;
    let (sphere, diag) = train_minimerror_s(&data, &init, &AnnealingConfig::default())?;
    println!(
        "trained sphere: center ({:.3}, {:.3}), radius {:.3}",
        sphere.center()[0],
        sphere.center()[1],
        sphere.radius()
    );
    println!(
        "epochs: {}, best epoch: {}, training errors: {}",
        diag.epochs.len(),
        diag.best_epoch,
        diag.summary().training_errors
    );

    let errors = data
        .patterns()
        .iter()
        .filter(|p| Some(sphere_predict(&sphere, p)) != p.label)
        .count();
    println!("verified errors: {errors}/{}", data.len());
    Ok(())
}
