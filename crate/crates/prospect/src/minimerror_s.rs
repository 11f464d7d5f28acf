//! Minimerror-S: hypersphere separators trained by deterministic annealing.
//!
//! Same cost as the hyperplane trainer, but the stability is spherical:
//! gamma_s = tau (||xi - w||^2 - rho^2) / (2 rho sqrt(N)) for a sphere of
//! center w and radius rho. The convention is tau = -1 inside the sphere
//! (boundary included) and tau = +1 outside, so gamma_s is positive exactly
//! for correctly classified patterns and reduces to a signed distance near
//! the surface. Descent runs jointly on (w, rho) under the same
//! two-temperature annealing schedule and closing T_L = T pass.

use serde::{Deserialize, Serialize};

use crate::dataset::{Dataset, Label, Pattern};
use crate::error::{Error, Result};
use crate::math::{sech2, squared_distance};
use crate::minimerror::{AnnealingConfig, EpochRecord, TrainDiagnostics};

/// Smallest admissible radius; the trainer clamps descent steps here and
/// kernel seeding uses it for coincident pattern pairs.
pub const RADIUS_FLOOR: f64 = 1e-6;

/// How many consecutive floor-pinned epochs count as a collapsed sphere.
const MAX_FLOOR_EPOCHS: usize = 10;

/// A hypersphere separator: center w and radius rho > 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereSeparator {
    center: Vec<f64>,
    radius: f64,
}

impl SphereSeparator {
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        if center.is_empty() || center.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidConfig(
                "sphere center must be non-empty and finite".into(),
            ));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "sphere radius must be positive and finite, got {radius}"
            )));
        }
        Ok(SphereSeparator { center, radius })
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }
}

/// Inside-signed score (rho^2 - ||xi - w||^2) / (2 rho sqrt(N)): positive
/// inside the sphere, zero on the surface, negative outside. This is the
/// stability a pattern would have if it were labeled -1.
pub fn inside_score(sphere: &SphereSeparator, values: &[f64]) -> f64 {
    assert_eq!(values.len(), sphere.dim(), "pattern dimension mismatch");
    let d2 = squared_distance(values, &sphere.center);
    (sphere.radius * sphere.radius - d2) / (2.0 * sphere.radius * (sphere.dim() as f64).sqrt())
}

/// gamma_s = tau (||xi - w||^2 - rho^2) / (2 rho sqrt(N)).
pub fn spherical_stability(sphere: &SphereSeparator, pattern: &Pattern) -> Result<f64> {
    if pattern.values.len() != sphere.dim() {
        return Err(Error::DimensionMismatch(format!(
            "pattern has {} values, sphere expects {}",
            pattern.values.len(),
            sphere.dim()
        )));
    }
    let label = pattern
        .label
        .ok_or_else(|| Error::LabelsRequired("spherical stability needs a labeled pattern".into()))?;
    Ok(-label.value() * inside_score(sphere, &pattern.values))
}

/// -1 if the pattern is inside or on the border of the sphere, else +1.
pub fn sphere_predict(sphere: &SphereSeparator, pattern: &Pattern) -> Label {
    if inside_score(sphere, &pattern.values) >= 0.0 {
        Label::Minus
    } else {
        Label::Plus
    }
}

/// E = 1/2 sum_mu [1 - tanh(gamma_s / 2T)] at a single temperature.
pub fn sphere_cost(data: &Dataset, sphere: &SphereSeparator, temperature: f64) -> Result<f64> {
    if temperature.is_nan() || temperature <= 0.0 {
        return Err(Error::InvalidConfig(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    let mut e = 0.0;
    for p in data.patterns() {
        let g = spherical_stability(sphere, p)?;
        e += 0.5 * (1.0 - (g / (2.0 * temperature)).tanh());
    }
    Ok(e)
}

/// Gradient of the two-temperature cost with respect to (center, radius).
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGradient {
    pub center: Vec<f64>,
    pub radius: f64,
}

/// Each pattern is evaluated at `t_learned` when gamma_s > 0, else at
/// `t_unlearned`. With s = sech^2(gamma_s / 2T) / 4T the terms are
/// dE/dw_j = s tau (xi_j - w_j) / (rho sqrt(N)) and
/// dE/drho = s tau (rho^2 + ||xi - w||^2) / (2 sqrt(N) rho^2).
pub fn sphere_gradient(
    data: &Dataset,
    sphere: &SphereSeparator,
    t_unlearned: f64,
    t_learned: f64,
) -> Result<SphereGradient> {
    if !(t_unlearned > 0.0 && t_learned > 0.0) {
        return Err(Error::InvalidConfig(format!(
            "temperatures must be positive, got T = {t_unlearned}, T_L = {t_learned}"
        )));
    }
    let n = sphere.dim();
    let root = (n as f64).sqrt();
    let rho = sphere.radius;
    let mut g_center = vec![0.0; n];
    let mut g_radius = 0.0;
    for p in data.patterns() {
        let gamma = spherical_stability(sphere, p)?;
        let t = if gamma > 0.0 { t_learned } else { t_unlearned };
        let s = sech2(gamma / (2.0 * t)) / (4.0 * t);
        let tau = p.label.expect("checked by spherical_stability").value();
        let d2 = squared_distance(&p.values, &sphere.center);
        for ((g, &xi), &w) in g_center.iter_mut().zip(&p.values).zip(&sphere.center) {
            *g += s * tau * (xi - w) / (rho * root);
        }
        g_radius += s * tau * (rho * rho + d2) / (2.0 * root * rho * rho);
    }
    Ok(SphereGradient {
        center: g_center,
        radius: g_radius,
    })
}

fn count_errors(data: &Dataset, labels: &[Label], sphere: &SphereSeparator) -> usize {
    data.patterns()
        .iter()
        .zip(labels)
        .filter(|(p, &l)| sphere_predict(sphere, p) != l)
        .count()
}

const FINAL_PHASE_COST_EPS: f64 = 1e-8;

/// [`train_minimerror_s`] with optional per-attribute bounds on the center.
///
/// When bounds are given the center is clamped into the box after every
/// step. From the first epoch where the box binds, an unclamped twin of the
/// sphere is trained alongside; as soon as the clamped sphere misclassifies
/// more training patterns than the twin, the restriction is dropped for the
/// remainder of this run and training continues from the twin.
pub fn train_bounded(
    data: &Dataset,
    init: &SphereSeparator,
    config: &AnnealingConfig,
    bounds: Option<&[(f64, f64)]>,
) -> Result<(SphereSeparator, TrainDiagnostics)> {
    config.validate()?;
    if data.is_empty() {
        return Err(Error::InsufficientData("training needs at least one pattern".into()));
    }
    let labels = data.require_labels()?;
    if init.dim() != data.dim() {
        return Err(Error::DimensionMismatch(format!(
            "init sphere has dimension {}, data has {}",
            init.dim(),
            data.dim()
        )));
    }
    if let Some(b) = bounds {
        if b.len() != data.dim() {
            return Err(Error::InvalidConfig(format!(
                "{} bound pairs for dimension {}",
                b.len(),
                data.dim()
            )));
        }
        if b.iter().any(|(lo, hi)| lo > hi || !lo.is_finite() || !hi.is_finite()) {
            return Err(Error::InvalidConfig("center bounds must be finite with min <= max".into()));
        }
    }

    let mut sphere = init.clone();
    let mut clamp_active = bounds.is_some();
    // unclamped twin, spawned the first time the box binds
    let mut shadow: Option<SphereSeparator> = None;
    let mut floor_streak = 0usize;
    let mut epochs = Vec::new();
    let mut best: Option<(usize, f64, usize, SphereSeparator)> = None;
    let mut temperature = config.t_initial;
    let mut final_phase = false;
    let mut prev_cost = f64::INFINITY;

    // dE/drho scales like 1/rho^2, so a fixed-rate step overshoots small
    // spheres; keep each epoch within a factor of 2 of the current radius
    let step = |sphere: &mut SphereSeparator, g: &SphereGradient, rate: f64| -> bool {
        let raw = sphere.radius - rate * g.radius;
        let stepped = raw.clamp(0.5 * sphere.radius, 2.0 * sphere.radius);
        sphere.radius = stepped.max(RADIUS_FLOOR);
        for (w, gv) in sphere.center.iter_mut().zip(&g.center) {
            *w -= rate * gv;
        }
        stepped <= RADIUS_FLOOR
    };

    let mut epoch = 0;
    while epoch < config.max_epochs {
        let t_learned = if final_phase {
            temperature
        } else {
            config.t_ratio * temperature
        };
        let g = sphere_gradient(data, &sphere, temperature, t_learned)?;
        let pinned = step(&mut sphere, &g, config.learning_rate);
        if pinned {
            floor_streak += 1;
        } else {
            floor_streak = 0;
        }

        if clamp_active {
            let b = bounds.expect("clamp_active implies bounds");
            let unclamped = sphere.center.clone();
            for (v, &(lo, hi)) in sphere.center.iter_mut().zip(b) {
                *v = v.clamp(lo, hi);
            }
            if shadow.is_none() && sphere.center != unclamped {
                shadow = Some(SphereSeparator {
                    center: unclamped,
                    radius: sphere.radius,
                });
            } else if let Some(twin) = &mut shadow {
                let tg = sphere_gradient(data, twin, temperature, t_learned)?;
                step(twin, &tg, config.learning_rate);
            }
            if let Some(twin) = &shadow {
                if count_errors(data, &labels, &sphere) > count_errors(data, &labels, twin) {
                    // the restriction costs accuracy: neglect it from here on
                    sphere = twin.clone();
                    clamp_active = false;
                    shadow = None;
                }
            }
        }

        let e = sphere_cost(data, &sphere, temperature)?;
        let errors = count_errors(data, &labels, &sphere);
        epoch += 1;
        epochs.push(EpochRecord {
            temperature,
            cost: e,
            errors,
            final_phase,
        });
        let diagnostics_so_far = |epochs: Vec<EpochRecord>| TrainDiagnostics {
            epochs,
            final_stabilities: Vec::new(),
            best_epoch: 0,
            hebb_fallback: false,
        };
        if !e.is_finite() {
            return Err(Error::NonFiniteCost {
                epoch,
                diagnostics: Box::new(diagnostics_so_far(epochs)),
            });
        }
        if floor_streak > MAX_FLOOR_EPOCHS {
            return Err(Error::DegenerateSphere {
                epochs: floor_streak,
                diagnostics: Box::new(diagnostics_so_far(epochs)),
            });
        }
        let better = match &best {
            None => true,
            Some((be, bc, _, _)) => errors < *be || (errors == *be && e < *bc),
        };
        if better {
            best = Some((errors, e, epoch, sphere.clone()));
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

    let (_, _, best_epoch, best_sphere) = best.expect("max_epochs >= 1 guarantees one epoch");
    let final_stabilities = data
        .patterns()
        .iter()
        .map(|p| spherical_stability(&best_sphere, p))
        .collect::<Result<Vec<f64>>>()?;
    Ok((
        best_sphere,
        TrainDiagnostics {
            epochs,
            final_stabilities,
            best_epoch,
            hebb_fallback: false,
        },
    ))
}

/// Trains the sphere that best separates the -1-labeled patterns (inside)
/// from the +1-labeled ones (outside), starting from `init`. Returns the
/// best-epoch snapshot.
pub fn train_minimerror_s(
    data: &Dataset,
    init: &SphereSeparator,
    config: &AnnealingConfig,
) -> Result<(SphereSeparator, TrainDiagnostics)> {
    train_bounded(data, init, config, None)
}
