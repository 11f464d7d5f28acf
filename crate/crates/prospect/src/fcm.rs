//! Fuzzy c-means clustering.
//!
//! Minimizes J = sum_i sum_k m_ik^phi * d^2(xi_i, c_k) over memberships m
//! (rows constrained to sum to 1) and centroids c, by alternating the two
//! closed-form updates until the membership matrix stops moving.

use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::math::squared_distance;
use crate::rng::Rng64;

/// Membership initialization strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcmInit {
    /// Seeded uniform rows, normalized to sum 1.
    RandomMemberships,
    /// Crisp rows built from the given per-pattern class indices (0-based).
    HardPartition(Vec<usize>),
}

/// Fit parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FcmConfig {
    /// Desired class count; 2 <= c < n at fit time.
    pub c: usize,
    /// Fuzziness exponent; > 1. Values near 1 give hard partitions, large
    /// values blur all classes toward 1/c.
    pub phi: f64,
    /// Stop once max |M_t - M_{t-1}| falls below this.
    pub stop_eps: f64,
    pub max_iter: usize,
    pub init: FcmInit,
    pub seed: u64,
}

impl Default for FcmConfig {
    fn default() -> Self {
        FcmConfig {
            c: 2,
            phi: 2.0,
            stop_eps: 1e-3,
            max_iter: 300,
            init: FcmInit::RandomMemberships,
            seed: 0,
        }
    }
}

impl FcmConfig {
    fn validate(&self, n: usize) -> Result<()> {
        if self.c < 2 {
            return Err(Error::InvalidConfig(format!("c must be at least 2, got {}", self.c)));
        }
        if n <= self.c {
            return Err(Error::InsufficientData(format!(
                "need more patterns ({n}) than classes ({})",
                self.c
            )));
        }
        if self.phi.is_nan() || self.phi <= 1.0 {
            return Err(Error::InvalidConfig(format!("phi must exceed 1, got {}", self.phi)));
        }
        if self.stop_eps.is_nan() || self.stop_eps <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "stop_eps must be positive, got {}",
                self.stop_eps
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

/// n x c fuzzy membership matrix; every row sums to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipMatrix {
    n: usize,
    c: usize,
    m: Vec<f64>, // row-major
}

impl MembershipMatrix {
    /// Builds from rows, validating the range and row-sum invariants.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidConfig("membership matrix needs at least one row".into()));
        }
        let c = rows[0].len();
        let mut m = Vec::with_capacity(n * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!(
                    "membership row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > 1e-9 {
                return Err(Error::InvalidConfig(format!(
                    "membership row {i} sums to {sum}, expected 1"
                )));
            }
            for &v in row {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::InvalidConfig(format!(
                        "membership {v} in row {i} outside [0, 1]"
                    )));
                }
                m.push(v);
            }
        }
        Ok(MembershipMatrix { n, c, m })
    }

    pub fn n_patterns(&self) -> usize {
        self.n
    }

    pub fn n_classes(&self) -> usize {
        self.c
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.m[i * self.c + k]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.m[i * self.c..(i + 1) * self.c]
    }

    fn max_abs_diff(&self, other: &MembershipMatrix) -> f64 {
        self.m
            .iter()
            .zip(&other.m)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Fitted model summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FcmModel {
    pub c: usize,
    pub phi: f64,
    pub centroids: Vec<Vec<f64>>,
    pub final_objective: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn check_dims(data: &Dataset, centroids: &[Vec<f64>]) -> Result<()> {
    for (k, c) in centroids.iter().enumerate() {
        if c.len() != data.dim() {
            return Err(Error::DimensionMismatch(format!(
                "centroid {k} has dimension {}, data has {}",
                c.len(),
                data.dim()
            )));
        }
    }
    Ok(())
}

/// The clustering objective J for a given state.
pub fn fcm_objective(
    data: &Dataset,
    centroids: &[Vec<f64>],
    m: &MembershipMatrix,
    phi: f64,
) -> Result<f64> {
    check_dims(data, centroids)?;
    if m.n_patterns() != data.len() || m.n_classes() != centroids.len() {
        return Err(Error::DimensionMismatch(format!(
            "membership matrix is {}x{}, expected {}x{}",
            m.n_patterns(),
            m.n_classes(),
            data.len(),
            centroids.len()
        )));
    }
    let mut j = 0.0;
    for (i, p) in data.patterns().iter().enumerate() {
        for (k, c) in centroids.iter().enumerate() {
            j += m.get(i, k).powf(phi) * squared_distance(&p.values, c);
        }
    }
    Ok(j)
}

/// The membership update that minimizes J at fixed centroids:
/// `m_ik = [ sum_j (d_ik / d_ij)^(2/(phi-1)) ]^-1` with squared Euclidean
/// distances. A pattern coincident with one or more centroids splits its
/// whole membership equally among them.
pub fn update_memberships(
    data: &Dataset,
    centroids: &[Vec<f64>],
    phi: f64,
) -> Result<MembershipMatrix> {
    check_dims(data, centroids)?;
    let c = centroids.len();
    if c < 2 {
        return Err(Error::InvalidConfig("membership update needs c >= 2".into()));
    }
    if phi.is_nan() || phi <= 1.0 {
        return Err(Error::InvalidConfig(format!("phi must exceed 1, got {phi}")));
    }
    let exponent = 1.0 / (phi - 1.0); // applied to squared-distance ratios
    let mut m = Vec::with_capacity(data.len() * c);
    for p in data.patterns() {
        let d2: Vec<f64> = centroids
            .iter()
            .map(|ck| squared_distance(&p.values, ck))
            .collect();
        let coincident = d2.iter().filter(|&&d| d == 0.0).count();
        if coincident > 0 {
            let share = 1.0 / coincident as f64;
            m.extend(d2.iter().map(|&d| if d == 0.0 { share } else { 0.0 }));
        } else {
            for &dk in &d2 {
                let denom: f64 = d2.iter().map(|&dj| (dk / dj).powf(exponent)).sum();
                m.push(1.0 / denom);
            }
        }
    }
    Ok(MembershipMatrix {
        n: data.len(),
        c,
        m,
    })
}

/// The centroid update that minimizes J at fixed memberships:
/// `c_k = sum_i m_ik^phi xi_i / sum_i m_ik^phi`.
pub fn update_centroids(data: &Dataset, m: &MembershipMatrix, phi: f64) -> Result<Vec<Vec<f64>>> {
    if m.n_patterns() != data.len() {
        return Err(Error::DimensionMismatch(format!(
            "membership matrix has {} rows, data has {} patterns",
            m.n_patterns(),
            data.len()
        )));
    }
    let dim = data.dim();
    let mut centroids = vec![vec![0.0; dim]; m.n_classes()];
    let mut mass = vec![0.0; m.n_classes()];
    for (i, p) in data.patterns().iter().enumerate() {
        for k in 0..m.n_classes() {
            let w = m.get(i, k).powf(phi);
            mass[k] += w;
            for (t, &v) in centroids[k].iter_mut().zip(&p.values) {
                *t += w * v;
            }
        }
    }
    for (k, (c, &w)) in centroids.iter_mut().zip(&mass).enumerate() {
        if w <= 0.0 {
            return Err(Error::DegenerateClass {
                class: k,
                iteration: 0,
            });
        }
        for t in c.iter_mut() {
            *t /= w;
        }
    }
    Ok(centroids)
}

fn initial_memberships(config: &FcmConfig, n: usize) -> Result<MembershipMatrix> {
    match &config.init {
        FcmInit::RandomMemberships => {
            let mut rng = Rng64::new(config.seed);
            let mut m = Vec::with_capacity(n * config.c);
            for _ in 0..n {
                let row: Vec<f64> = (0..config.c).map(|_| rng.next_f64()).collect();
                let sum: f64 = row.iter().sum();
                if sum > 0.0 {
                    m.extend(row.iter().map(|v| v / sum));
                } else {
                    m.extend(std::iter::repeat_n(1.0 / config.c as f64, config.c));
                }
            }
            Ok(MembershipMatrix { n, c: config.c, m })
        }
        FcmInit::HardPartition(labels) => {
            if labels.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "{} initial labels for {n} patterns",
                    labels.len()
                )));
            }
            let mut counts = vec![0usize; config.c];
            let mut m = vec![0.0; n * config.c];
            for (i, &k) in labels.iter().enumerate() {
                if k >= config.c {
                    return Err(Error::InvalidConfig(format!(
                        "initial label {k} out of range for c = {}",
                        config.c
                    )));
                }
                counts[k] += 1;
                m[i * config.c + k] = 1.0;
            }
            if let Some(empty) = counts.iter().position(|&v| v == 0) {
                return Err(Error::DegenerateClass {
                    class: empty,
                    iteration: 0,
                });
            }
            Ok(MembershipMatrix { n, c: config.c, m })
        }
    }
}

/// Runs the alternating fit: centroids from the current memberships, then
/// fresh memberships, until `max |M_t - M_{t-1}| < stop_eps` or `max_iter`.
pub fn fcm_fit(data: &Dataset, config: &FcmConfig) -> Result<(FcmModel, MembershipMatrix)> {
    config.validate(data.len())?;
    let mut m = initial_memberships(config, data.len())?;
    let mut centroids = Vec::new();
    let mut converged = false;
    let mut iterations = 0;
    for t in 1..=config.max_iter {
        iterations = t;
        centroids = update_centroids(data, &m, config.phi).map_err(|e| match e {
            Error::DegenerateClass { class, .. } => Error::DegenerateClass {
                class,
                iteration: t,
            },
            other => other,
        })?;
        let next = update_memberships(data, &centroids, config.phi)?;
        let delta = next.max_abs_diff(&m);
        m = next;
        if delta < config.stop_eps {
            converged = true;
            break;
        }
    }
    let final_objective = fcm_objective(data, &centroids, &m, config.phi)?;
    Ok((
        FcmModel {
            c: config.c,
            phi: config.phi,
            centroids,
            final_objective,
            iterations,
            converged,
        },
        m,
    ))
}

/// Crisp labels by row-wise argmax; ties go to the smallest class index.
pub fn harden(m: &MembershipMatrix) -> Vec<usize> {
    (0..m.n_patterns())
        .map(|i| {
            let row = m.row(i);
            let mut best = 0;
            for (k, &v) in row.iter().enumerate().skip(1) {
                if v > row[best] {
                    best = k;
                }
            }
            best
        })
        .collect()
}
