//! Hybrid unsupervised/supervised classification toolkit.
//!
//! The core idea: cluster unlabeled patterns with fuzzy c-means, then wrap
//! each discovered class in a hypersphere separator trained by Minimerror-S,
//! a deterministic-annealing gradient descent on a temperature-windowed
//! cost. The same machinery also ships standalone:
//!
//! - [`minimerror`] — supervised hyperplane training with two-temperature
//!   annealing and Hebb initialization.
//! - [`minimerror_s`] — the spherical variant (center + radius descent).
//! - [`fcm`] — fuzzy c-means: objective, closed-form updates, fit loop.
//! - [`growing`] — unsupervised growing-kernel clusterer: seeds spheres on
//!   closest pairs, absorbs near-surface patterns, prunes small classes.
//! - [`hybrid`] — the combined pipeline plus the cluster-to-label mapping.
//! - [`dataset`] — schema, CSV ingestion, standardization, attribute
//!   presets, seeded splits and a synthetic deposit/barren generator.
//! - [`eval`] — learning curves over train fractions with repeated trials.
//! - [`cli`] — the `prospect` binary (`stats`, `train`, `eval`, `generate`).
//!
//! Everything stochastic is seeded through [`rng::Rng64`], a fixed
//! xorshift* generator, so identical configurations produce byte-identical
//! artifacts.
//!
//! ```
//! use prospect::dataset::{generate_synthetic, SyntheticConfig};
//! use prospect::hybrid::{hybrid_fit, hybrid_predict, HybridConfig};
//!
//! let data = generate_synthetic(&SyntheticConfig {
//!     n_per_class: 30,
//!     n_quant: 2,
//!     n_qual: 0,
//!     separation: 8.0,
//!     seed: 1,
//! })?;
//! let model = hybrid_fit(&data, &HybridConfig::default())?;
//! let cluster = hybrid_predict(&model, &data.patterns()[0]);
//! assert!(cluster < model.class_count());
//! # Ok::<(), prospect::Error>(())
//! ```

pub mod cli;
pub mod dataset;
pub mod eval;
pub mod fcm;
pub mod growing;
pub mod hybrid;
pub mod minimerror;
pub mod minimerror_s;
pub mod rng;

mod error;
mod math;

pub use error::{Error, Result};
