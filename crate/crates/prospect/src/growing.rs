//! Unsupervised growing-kernel clustering.
//!
//! Classes are discovered one at a time: seed a small sphere on the closest
//! pair of unassigned patterns, label everything inside -1 and outside +1,
//! train Minimerror-S, then repeatedly absorb outside patterns that sit
//! close enough to the trained surface and retrain, until nothing more is
//! absorbed. The final inside patterns become a class and the procedure
//! repeats on what is left; small classes are pruned at the end, their
//! members reassigned to the nearest surviving sphere.

use serde::{Deserialize, Serialize};

use crate::dataset::{Dataset, Label};
use crate::error::{Error, Result};
use crate::math::{sech2, squared_distance};
use crate::minimerror::AnnealingConfig;
use crate::minimerror_s::{
    inside_score, sphere_predict, train_bounded, SphereSeparator, RADIUS_FLOOR,
};

/// Growing-clusterer parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowingConfig {
    pub annealing: AnnealingConfig,
    /// Classes with fewer members are pruned and their patterns reassigned.
    pub prune_min_size: usize,
    /// Optional per-attribute (min, max) box constraining sphere centers.
    pub border_bounds: Option<Vec<(f64, f64)>>,
    /// Safety cap on the number of discovered classes.
    pub max_classes: usize,
    /// Reserved for interface stability; the procedure itself is
    /// deterministic (ties break on pattern order).
    pub seed: u64,
}

impl GrowingConfig {
    /// Annealing schedule matched to kernel-sized spheres on standardized
    /// data. Seed kernels are tiny and badly outnumbered by their outside
    /// patterns, so the window must start narrow: at high temperature the
    /// cost genuinely prefers collapsing the kernel over keeping its two
    /// seed members.
    pub fn kernel_annealing() -> AnnealingConfig {
        AnnealingConfig {
            learning_rate: 0.01,
            t_initial: 0.2,
            t_ratio: 0.3,
            delta_t: 0.002,
            t_min: 0.002,
            max_epochs: 1000,
        }
    }
}

impl Default for GrowingConfig {
    fn default() -> Self {
        GrowingConfig {
            annealing: GrowingConfig::kernel_annealing(),
            prune_min_size: 3,
            border_bounds: None,
            max_classes: 1024,
            seed: 0,
        }
    }
}

/// One discovered class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterClass {
    pub class_id: usize,
    #[serde(flatten)]
    pub sphere: SphereSeparator,
    pub member_count: usize,
}

/// Discovered spheres (class ids 1..K) plus the per-pattern assignment.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterModel {
    classes: Vec<ClusterClass>,
    assignments: Vec<Option<usize>>,
}

impl ClusterModel {
    pub fn classes(&self) -> &[ClusterClass] {
        &self.classes
    }

    /// Pattern index -> class id (1-based), None while unassigned.
    pub fn assignments(&self) -> &[Option<usize>] {
        &self.assignments
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    fn recount(&mut self) {
        for class in &mut self.classes {
            class.member_count = self
                .assignments
                .iter()
                .filter(|a| **a == Some(class.class_id))
                .count();
        }
    }
}

/// The unassigned pair with the smallest Euclidean distance; ties break on
/// the smallest first index, then the smallest second.
pub fn closest_unassigned_pair(data: &Dataset, assigned: &[bool]) -> Result<(usize, usize, f64)> {
    if assigned.len() != data.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} assignment flags for {} patterns",
            assigned.len(),
            data.len()
        )));
    }
    let unassigned: Vec<usize> = (0..data.len()).filter(|&i| !assigned[i]).collect();
    if unassigned.len() < 2 {
        return Err(Error::InsufficientData(
            "need at least 2 unassigned patterns to seed a kernel".into(),
        ));
    }
    let mut best: Option<(usize, usize, f64)> = None;
    for (a, &i) in unassigned.iter().enumerate() {
        for &j in &unassigned[a + 1..] {
            let d2 = squared_distance(
                &data.patterns()[i].values,
                &data.patterns()[j].values,
            );
            if best.is_none_or(|(_, _, bd)| d2 < bd) {
                best = Some((i, j, d2));
            }
        }
    }
    let (i, j, d2) = best.expect("at least one pair exists");
    Ok((i, j, d2.sqrt()))
}

/// Initial kernel sphere for a seed pair: centered at the midpoint with
/// radius 3/2 of the pair distance (floored for coincident pairs).
pub fn init_kernel(a: &crate::dataset::Pattern, b: &crate::dataset::Pattern) -> SphereSeparator {
    let center: Vec<f64> = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| (x + y) / 2.0)
        .collect();
    let rho = squared_distance(&a.values, &b.values).sqrt();
    let radius = (1.5 * rho).max(RADIUS_FLOOR);
    SphereSeparator::new(center, radius).expect("midpoint of finite patterns is finite")
}

/// Labels the eligible patterns against a sphere: -1 inside or on the
/// border, +1 elsewhere. Output order follows `eligible`.
pub fn label_by_sphere(data: &Dataset, sphere: &SphereSeparator, eligible: &[usize]) -> Vec<Label> {
    eligible
        .iter()
        .map(|&i| sphere_predict(sphere, &data.patterns()[i]))
        .collect()
}

/// Threshold on |gamma_s| below which an outside pattern is absorbed:
/// 1/cosh^2(gamma_s) > 1/2, i.e. |gamma_s| < arccosh(sqrt 2) ~ 0.8814.
pub fn absorb_candidates(data: &Dataset, sphere: &SphereSeparator, outside: &[usize]) -> Vec<usize> {
    outside
        .iter()
        .copied()
        .filter(|&i| {
            let gamma = inside_score(sphere, &data.patterns()[i].values).abs();
            sech2(gamma) > 0.5
        })
        .collect()
}

/// Clamps a center into the per-attribute box.
pub fn clamp_center(w: &[f64], bounds: &[(f64, f64)]) -> Vec<f64> {
    debug_assert_eq!(w.len(), bounds.len());
    w.iter()
        .zip(bounds)
        .map(|(v, &(lo, hi))| v.clamp(lo, hi))
        .collect()
}

/// Runs the full growing procedure and prunes small classes.
pub fn grow_clusters(data: &Dataset, config: &GrowingConfig) -> Result<ClusterModel> {
    if data.len() < 2 {
        return Err(Error::InsufficientData(
            "growing needs at least 2 patterns".into(),
        ));
    }
    config.annealing.validate()?;
    if let Some(b) = &config.border_bounds {
        if b.len() != data.dim() {
            return Err(Error::InvalidConfig(format!(
                "{} border bounds for dimension {}",
                b.len(),
                data.dim()
            )));
        }
    }

    let mut assignments: Vec<Option<usize>> = vec![None; data.len()];
    let mut classes: Vec<ClusterClass> = Vec::new();

    loop {
        let eligible: Vec<usize> = (0..data.len()).filter(|&i| assignments[i].is_none()).collect();
        if eligible.len() < 2 {
            if let Some(&last) = eligible.first() {
                // a lone leftover becomes its own (floor-radius) class
                push_class(
                    &mut classes,
                    &mut assignments,
                    config.max_classes,
                    SphereSeparator::new(data.patterns()[last].values.clone(), RADIUS_FLOOR)?,
                    vec![last],
                )?;
            }
            break;
        }

        let assigned_mask: Vec<bool> = assignments.iter().map(|a| a.is_some()).collect();
        let (i, j, _rho) = closest_unassigned_pair(data, &assigned_mask)?;
        let mut sphere = init_kernel(&data.patterns()[i], &data.patterns()[j]);
        let mut labels = label_by_sphere(data, &sphere, &eligible);

        loop {
            let sub = subset_with_labels(data, &eligible, &labels)?;
            let (trained, _diag) = train_bounded(
                &sub,
                &sphere,
                &config.annealing,
                config.border_bounds.as_deref(),
            )?;
            sphere = trained;
            let outside: Vec<usize> = eligible
                .iter()
                .enumerate()
                .filter(|&(pos, &idx)| {
                    labels[pos] == Label::Plus
                        && sphere_predict(&sphere, &data.patterns()[idx]) == Label::Plus
                })
                .map(|(_, &idx)| idx)
                .collect();
            let absorbed = absorb_candidates(data, &sphere, &outside);
            if absorbed.is_empty() {
                break;
            }
            for idx in absorbed {
                let pos = eligible.iter().position(|&e| e == idx).expect("absorbed from eligible");
                labels[pos] = Label::Minus;
            }
        }
        debug_assert!({
            let outside: Vec<usize> = eligible
                .iter()
                .enumerate()
                .filter(|&(pos, &idx)| {
                    labels[pos] == Label::Plus
                        && sphere_predict(&sphere, &data.patterns()[idx]) == Label::Plus
                })
                .map(|(_, &idx)| idx)
                .collect();
            absorb_candidates(data, &sphere, &outside).is_empty()
        });

        // everything the final sphere holds joins the class; the seed pair
        // is always taken so the unassigned count strictly decreases
        let mut members: Vec<usize> = eligible
            .iter()
            .copied()
            .filter(|&idx| sphere_predict(&sphere, &data.patterns()[idx]) == Label::Minus)
            .collect();
        for seed in [i, j] {
            if !members.contains(&seed) {
                members.push(seed);
            }
        }
        push_class(&mut classes, &mut assignments, config.max_classes, sphere, members)?;
    }

    let model = ClusterModel {
        classes,
        assignments,
    };
    prune(data, model, config.prune_min_size)
}

fn push_class(
    classes: &mut Vec<ClusterClass>,
    assignments: &mut [Option<usize>],
    max_classes: usize,
    sphere: SphereSeparator,
    members: Vec<usize>,
) -> Result<()> {
    if classes.len() >= max_classes {
        let mut partial = ClusterModel {
            classes: classes.clone(),
            assignments: assignments.to_vec(),
        };
        partial.recount();
        return Err(Error::MaxClassesExceeded {
            max_classes,
            partial: Box::new(partial),
        });
    }
    let class_id = classes.len() + 1;
    let member_count = members.len();
    for idx in members {
        assignments[idx] = Some(class_id);
    }
    classes.push(ClusterClass {
        class_id,
        sphere,
        member_count,
    });
    Ok(())
}

fn subset_with_labels(data: &Dataset, indices: &[usize], labels: &[Label]) -> Result<Dataset> {
    let patterns = indices
        .iter()
        .zip(labels)
        .map(|(&i, &l)| crate::dataset::Pattern::labeled(data.patterns()[i].values.clone(), l))
        .collect();
    Dataset::new(data.schema().clone(), patterns)
}

/// Removes classes with fewer than `min_size` members; their patterns move
/// to the surviving sphere with the highest inside-signed stability. Class
/// ids are re-compacted to 1..K.
pub fn prune(data: &Dataset, model: ClusterModel, min_size: usize) -> Result<ClusterModel> {
    if min_size == 0 {
        return Ok(model);
    }
    if data.len() != model.assignments.len() {
        return Err(Error::DimensionMismatch(format!(
            "model covers {} patterns, data has {}",
            model.assignments.len(),
            data.len()
        )));
    }
    let survivors: Vec<&ClusterClass> = model
        .classes
        .iter()
        .filter(|c| c.member_count >= min_size)
        .collect();
    if survivors.is_empty() {
        return Err(Error::AllClassesPruned { min_size });
    }
    if survivors.len() == model.classes.len() {
        return Ok(model);
    }
    // old id -> new id for survivors, in original order
    let mut new_id = vec![None; model.classes.len() + 1];
    for (rank, class) in survivors.iter().enumerate() {
        new_id[class.class_id] = Some(rank + 1);
    }
    let assignments: Vec<Option<usize>> = model
        .assignments
        .iter()
        .enumerate()
        .map(|(i, a)| {
            match a {
                Some(old) => match new_id[*old] {
                    Some(id) => Some(id),
                    None => {
                        // orphan: nearest surviving sphere by stability
                        let values = &data.patterns()[i].values;
                        let best = survivors
                            .iter()
                            .enumerate()
                            .max_by(|(_, a), (_, b)| {
                                inside_score(&a.sphere, values)
                                    .partial_cmp(&inside_score(&b.sphere, values))
                                    .expect("finite scores")
                            })
                            .map(|(rank, _)| rank + 1)
                            .expect("survivors is non-empty");
                        Some(best)
                    }
                },
                None => None,
            }
        })
        .collect();
    let classes: Vec<ClusterClass> = survivors
        .into_iter()
        .enumerate()
        .map(|(rank, c)| ClusterClass {
            class_id: rank + 1,
            sphere: c.sphere.clone(),
            member_count: 0,
        })
        .collect();
    let mut model = ClusterModel {
        classes,
        assignments,
    };
    model.recount();
    Ok(model)
}
