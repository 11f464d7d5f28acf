//! Minimerror: binary hyperplane training by deterministic annealing.
//!
//! The cost is E = 1/2 sum_mu [1 - tanh(gamma_mu / 2T)], where the stability
//! gamma_mu = tau_mu (w . xi_mu) / sqrt(N+1) measures the signed,
//! scale-normalized distance of pattern mu to the separator. The temperature
//! T sets a window of width 2T around the hyperplane: only patterns inside
//! it contribute meaningful gradient. Training starts from the Hebb solution
//! at high temperature and slowly narrows the window, with patterns already
//! learned seen at a lower temperature T_L than the unlearned ones; a final
//! descent at T_L = T finishes the fit.
//!
//! Inputs are augmented with a constant 1 component so the separator is
//! affine; the weight norm is pinned to sqrt(N+1) after every step, which
//! keeps the stability scale meaningful across epochs.

use serde::{Deserialize, Serialize};

use crate::dataset::{Dataset, Label, Pattern};
use crate::error::{Error, Result};
use crate::math::{dot, norm, sech2};
use crate::rng::Rng64;

/// Fixed seed for the random fallback direction when the Hebb sum cancels
/// exactly; keeps training deterministic without a seed parameter.
const HEBB_FALLBACK_SEED: u64 = 0x4845_4242; // "HEBB"

/// Annealing schedule and step size shared by the plane and sphere trainers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AnnealingConfig {
    /// Gradient-descent learning rate (epsilon).
    pub learning_rate: f64,
    /// Starting temperature T.
    pub t_initial: f64,
    /// Ratio T_L / T applied to already-learned patterns, in (0, 1].
    pub t_ratio: f64,
    /// Temperature decrement per epoch.
    pub delta_t: f64,
    /// Floor temperature; reaching it ends the annealing phase.
    pub t_min: f64,
    /// Cap on total epochs (annealing plus final descent).
    pub max_epochs: usize,
}

impl Default for AnnealingConfig {
    fn default() -> Self {
        AnnealingConfig {
            learning_rate: 0.02,
            t_initial: 10.0,
            t_ratio: 0.3,
            delta_t: 0.05,
            t_min: 0.01,
            max_epochs: 1000,
        }
    }
}

impl AnnealingConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("learning_rate", self.learning_rate),
            ("t_initial", self.t_initial),
            ("t_ratio", self.t_ratio),
            ("delta_t", self.delta_t),
            ("t_min", self.t_min),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if self.t_ratio > 1.0 {
            return Err(Error::InvalidConfig(format!(
                "t_ratio must lie in (0, 1], got {}",
                self.t_ratio
            )));
        }
        if self.t_min >= self.t_initial {
            return Err(Error::InvalidConfig(format!(
                "t_min ({}) must be below t_initial ({})",
                self.t_min, self.t_initial
            )));
        }
        if self.max_epochs == 0 {
            return Err(Error::InvalidConfig("max_epochs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Separating hyperplane over bias-augmented inputs: N feature weights plus
/// a bias weight over the constant input 1. Norm pinned to sqrt(N+1).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    w: Vec<f64>,
}

impl Hyperplane {
    /// Builds from raw weights (length N+1), rescaling to the sqrt(N+1) norm.
    pub fn from_weights(w: Vec<f64>) -> Result<Self> {
        if w.len() < 2 {
            return Err(Error::InvalidConfig(
                "hyperplane needs at least one feature weight plus the bias".into(),
            ));
        }
        if w.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidConfig("hyperplane weights must be finite".into()));
        }
        let n = norm(&w);
        if n == 0.0 {
            return Err(Error::InvalidConfig("hyperplane weights must not all be zero".into()));
        }
        let scale = (w.len() as f64).sqrt() / n;
        Ok(Hyperplane {
            w: w.into_iter().map(|v| v * scale).collect(),
        })
    }

    /// Weights including the trailing bias component.
    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    /// Feature dimension N (excludes the bias component).
    pub fn dim(&self) -> usize {
        self.w.len() - 1
    }

    /// w . (xi, 1)
    fn raw_score(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len() + 1, self.w.len());
        dot(&self.w[..values.len()], values) + self.w[values.len()]
    }

    fn renormalize(&mut self) {
        let scale = (self.w.len() as f64).sqrt() / norm(&self.w);
        for v in &mut self.w {
            *v *= scale;
        }
    }
}

/// One training epoch as recorded in the diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpochRecord {
    pub temperature: f64,
    pub cost: f64,
    pub errors: usize,
    /// True for the closing descent at T_L = T.
    pub final_phase: bool,
}

/// Per-epoch trace plus the stabilities of the returned separator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainDiagnostics {
    pub epochs: Vec<EpochRecord>,
    /// Stability of every pattern under the returned separator.
    pub final_stabilities: Vec<f64>,
    /// 1-based epoch whose snapshot was returned.
    pub best_epoch: usize,
    /// True when the Hebb sum cancelled and a seeded random direction was
    /// used instead. Always false for sphere training.
    pub hebb_fallback: bool,
}

/// Summary block embedded in model files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagnosticsSummary {
    pub epochs_run: usize,
    pub best_epoch: usize,
    pub training_errors: usize,
    pub final_cost: f64,
    pub hebb_fallback: bool,
}

impl TrainDiagnostics {
    pub fn summary(&self) -> DiagnosticsSummary {
        let errors = self
            .final_stabilities
            .iter()
            .filter(|&&g| g <= 0.0)
            .count();
        DiagnosticsSummary {
            epochs_run: self.epochs.len(),
            best_epoch: self.best_epoch,
            training_errors: errors,
            final_cost: self.epochs.last().map_or(f64::NAN, |e| e.cost),
            hebb_fallback: self.hebb_fallback,
        }
    }
}

fn require_binary_labels(data: &Dataset) -> Result<Vec<Label>> {
    if data.is_empty() {
        return Err(Error::InsufficientData("training needs at least one pattern".into()));
    }
    data.require_labels()
}

pub(crate) fn hebb_init_flagged(data: &Dataset) -> Result<(Hyperplane, bool)> {
    let labels = require_binary_labels(data)?;
    let dim = data.dim() + 1;
    let mut w = vec![0.0; dim];
    for (p, l) in data.patterns().iter().zip(&labels) {
        let tau = l.value();
        for (t, &v) in w.iter_mut().zip(&p.values) {
            *t += tau * v;
        }
        w[dim - 1] += tau;
    }
    if norm(&w) == 0.0 {
        let mut rng = Rng64::new(HEBB_FALLBACK_SEED);
        let w: Vec<f64> = (0..dim).map(|_| rng.next_normal()).collect();
        return Ok((Hyperplane::from_weights(w)?, true));
    }
    Ok((Hyperplane::from_weights(w)?, false))
}

/// Hebb's rule: w = sum_mu tau_mu (xi_mu, 1), rescaled to norm sqrt(N+1).
/// This is the exact minimizer of the cost in the high-temperature limit.
/// An exactly cancelling sum falls back to a fixed-seed random direction.
pub fn hebb_init(data: &Dataset) -> Result<Hyperplane> {
    hebb_init_flagged(data).map(|(plane, _)| plane)
}

/// Stability gamma = tau (w . (xi, 1)) / sqrt(N+1); positive iff the
/// pattern is correctly classified.
pub fn stability(plane: &Hyperplane, pattern: &Pattern) -> Result<f64> {
    if pattern.values.len() != plane.dim() {
        return Err(Error::DimensionMismatch(format!(
            "pattern has {} values, plane expects {}",
            pattern.values.len(),
            plane.dim()
        )));
    }
    let label = pattern
        .label
        .ok_or_else(|| Error::LabelsRequired("stability needs a labeled pattern".into()))?;
    Ok(label.value() * plane.raw_score(&pattern.values) / (plane.w.len() as f64).sqrt())
}

/// E = 1/2 sum_mu [1 - tanh(gamma_mu / 2T)] at a single temperature.
pub fn cost(data: &Dataset, plane: &Hyperplane, temperature: f64) -> Result<f64> {
    if temperature.is_nan() || temperature <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    let mut e = 0.0;
    for p in data.patterns() {
        let g = stability(plane, p)?;
        e += 0.5 * (1.0 - (g / (2.0 * temperature)).tanh());
    }
    Ok(e)
}

/// Gradient of the two-temperature cost: each pattern is evaluated at
/// `t_learned` when its stability is positive and at `t_unlearned`
/// otherwise. The per-pattern term is
/// `-tau (xi, 1) / (4 T sqrt(N+1)) * sech^2(gamma / 2T)`.
pub fn gradient(
    data: &Dataset,
    plane: &Hyperplane,
    t_unlearned: f64,
    t_learned: f64,
) -> Result<Vec<f64>> {
    if !(t_unlearned > 0.0 && t_learned > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "temperatures must be positive, got T = {t_unlearned}, T_L = {t_learned}"
        )));
    }
    let dim = plane.w.len();
    let root = (dim as f64).sqrt();
    let mut g = vec![0.0; dim];
    for p in data.patterns() {
        let gamma = stability(plane, p)?;
        let t = if gamma > 0.0 { t_learned } else { t_unlearned };
        let coeff = -p.label.expect("checked by stability").value() * sech2(gamma / (2.0 * t))
            / (4.0 * t * root);
        for (t_acc, &v) in g.iter_mut().zip(&p.values) {
            *t_acc += coeff * v;
        }
        g[dim - 1] += coeff;
    }
    Ok(g)
}

/// sign(w . (xi, 1)); a pattern exactly on the plane maps to +1.
pub fn predict(plane: &Hyperplane, pattern: &Pattern) -> Label {
    assert_eq!(
        pattern.values.len(),
        plane.dim(),
        "pattern dimension does not match the plane"
    );
    Label::from_sign(plane.raw_score(&pattern.values))
}

fn count_errors(data: &Dataset, labels: &[Label], plane: &Hyperplane) -> usize {
    data.patterns()
        .iter()
        .zip(labels)
        .filter(|(p, &l)| predict(plane, p) != l)
        .count()
}

/// Convergence threshold of the closing fixed-temperature descent.
const FINAL_PHASE_COST_EPS: f64 = 1e-8;

/// Trains from the Hebb initialization: full-batch gradient steps with
/// renormalization, temperature annealed from `t_initial` down to `t_min`,
/// then a final descent at T_L = T until the cost stalls. Returns the
/// best-epoch snapshot (fewest training errors, then lowest cost).
pub fn train_minimerror(
    data: &Dataset,
    config: &AnnealingConfig,
) -> Result<(Hyperplane, TrainDiagnostics)> {
    config.validate()?;
    let labels = require_binary_labels(data)?;
    let (mut plane, hebb_fallback) = hebb_init_flagged(data)?;

    let mut epochs = Vec::new();
    let mut best: Option<(usize, f64, usize, Hyperplane)> = None; // errors, cost, epoch, snapshot
    let mut temperature = config.t_initial;
    let mut final_phase = false;
    let mut prev_cost = f64::INFINITY;

    let mut epoch = 0;
    while epoch < config.max_epochs {
        let t_learned = if final_phase {
            temperature
        } else {
            config.t_ratio * temperature
        };
        let g = gradient(data, &plane, temperature, t_learned)?;
        for (w, gv) in plane.w.iter_mut().zip(&g) {
            *w -= config.learning_rate * gv;
        }
        plane.renormalize();

        let e = cost(data, &plane, temperature)?;
        let errors = count_errors(data, &labels, &plane);
        epoch += 1;
        epochs.push(EpochRecord {
            temperature,
            cost: e,
            errors,
            final_phase,
        });
        if !e.is_finite() {
            return Err(Error::NonFiniteCost {
                epoch,
                diagnostics: Box::new(TrainDiagnostics {
                    epochs,
                    final_stabilities: Vec::new(),
                    best_epoch: 0,
                    hebb_fallback,
                }),
            });
        }
        let better = match &best {
            None => true,
            Some((be, bc, _, _)) => errors < *be || (errors == *be && e < *bc),
        };
        if better {
            best = Some((errors, e, epoch, plane.clone()));
        }

        if final_phase {
            if (prev_cost - e).abs() < FINAL_PHASE_COST_EPS {
                break;
            }
            prev_cost = e;
        } else {
            temperature -= config.delta_t;
            if temperature <= config.t_min {
                temperature = config.t_min;
                final_phase = true;
                prev_cost = f64::INFINITY;
            }
        }
    }

    let (_, _, best_epoch, best_plane) = best.expect("max_epochs >= 1 guarantees one epoch");
    let final_stabilities = data
        .patterns()
        .iter()
        .map(|p| stability(&best_plane, p))
        .collect::<Result<Vec<f64>>>()?;
    Ok((
        best_plane,
        TrainDiagnostics {
            epochs,
            final_stabilities,
            best_epoch,
            hebb_fallback,
        },
    ))
}
