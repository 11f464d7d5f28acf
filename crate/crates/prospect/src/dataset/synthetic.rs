//! Synthetic deposit/barren generator.
//!
//! Stands in for proprietary site databases: two Gaussian clusters in the
//! quantitative attributes (unit per-axis variance, centroids `separation`
//! apart) plus class-skewed categorical draws for the qualitative ones.

use serde::{Deserialize, Serialize};

use crate::dataset::{Attribute, AttributeKind, AttributeSchema, Dataset, Label, Pattern};
use crate::error::{Error, Result};
use crate::rng::Rng64;

/// Parameters of [`generate_synthetic`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyntheticConfig {
    /// Patterns per class; the output holds 2x this count.
    pub n_per_class: usize,
    /// Quantitative attribute count (at least 1).
    pub n_quant: usize,
    /// Qualitative attribute count (may be 0).
    #[serde(default)]
    pub n_qual: usize,
    /// Euclidean distance between the two class centroids.
    pub separation: f64,
    #[serde(default)]
    pub seed: u64,
}

/// Category-draw probabilities per class; three categories per qualitative
/// attribute, skewed in opposite directions.
const QUAL_PROBS_PLUS: [f64; 3] = [0.5, 0.3, 0.2];
const QUAL_PROBS_MINUS: [f64; 3] = [0.2, 0.3, 0.5];

fn categorical(rng: &mut Rng64, probs: &[f64]) -> f64 {
    let u = rng.next_f64();
    let mut acc = 0.0;
    for (code, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return code as f64;
        }
    }
    (probs.len() - 1) as f64
}

/// Generates a labeled two-class dataset, deterministic under the seed.
///
/// Qualitative attributes come first in the schema (mirroring the Andes
/// layout), then the quantitative ones; class +1 patterns precede class -1.
/// The quantitative centroid of class +1 sits at `+separation / (2 sqrt(n_quant))`
/// on every axis, class -1 at the mirror point, so the centroid distance is
/// exactly `separation`.
pub fn generate_synthetic(config: &SyntheticConfig) -> Result<Dataset> {
    if config.n_per_class == 0 {
        return Err(Error::InvalidConfig("n_per_class must be at least 1".into()));
    }
    if config.n_quant == 0 {
        return Err(Error::InvalidConfig(
            "n_quant must be at least 1 (separation is carried by the quantitative attributes)"
                .into(),
        ));
    }
    if !(config.separation >= 0.0 && config.separation.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "separation must be finite and non-negative, got {}",
            config.separation
        )));
    }

    let mut attributes = Vec::with_capacity(config.n_qual + config.n_quant);
    for i in 1..=config.n_qual {
        attributes.push(Attribute::new(format!("qual{i}"), AttributeKind::Qualitative));
    }
    for i in 1..=config.n_quant {
        attributes.push(Attribute::new(format!("quant{i}"), AttributeKind::Quantitative));
    }
    let schema = AttributeSchema::new(attributes, Some("class".into()))?;

    let offset = config.separation / (2.0 * (config.n_quant as f64).sqrt());
    let mut rng = Rng64::new(config.seed);
    let mut patterns = Vec::with_capacity(2 * config.n_per_class);
    for &label in &[Label::Plus, Label::Minus] {
        let (center, probs) = match label {
            Label::Plus => (offset, &QUAL_PROBS_PLUS),
            Label::Minus => (-offset, &QUAL_PROBS_MINUS),
        };
        for _ in 0..config.n_per_class {
            let mut values = Vec::with_capacity(config.n_qual + config.n_quant);
            for _ in 0..config.n_qual {
                values.push(categorical(&mut rng, probs));
            }
            for _ in 0..config.n_quant {
                values.push(center + rng.next_normal());
            }
            patterns.push(Pattern::labeled(values, label));
        }
    }
    Dataset::new(schema, patterns)
}
