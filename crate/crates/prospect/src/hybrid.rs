//! The hybrid pipeline: fuzzy c-means proposes the classes, Minimerror-S
//! fits one hypersphere per class.
//!
//! The clusterer runs on the unlabeled features and fixes the class count
//! up front. Each class is then wrapped one-vs-rest (-1 for its members,
//! +1 for the rest), the sphere is seeded on the class centroid with a
//! radius reaching its farthest member, and trained. Prediction picks the
//! sphere with the highest inside-signed stability, so patterns outside
//! every sphere (or inside several) still classify.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dataset::{Dataset, Label, Pattern};
use crate::error::{Error, Result};
use crate::fcm::{fcm_fit, harden, FcmConfig};
use crate::math::squared_distance;
use crate::minimerror::AnnealingConfig;
use crate::minimerror_s::{inside_score, train_minimerror_s, SphereSeparator, RADIUS_FLOOR};

/// Pipeline parameters; `fcm.c` is the class count.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HybridConfig {
    pub fcm: FcmConfig,
    pub annealing: AnnealingConfig,
}

/// Majority-vote mapping from cluster indices to binary labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterLabelMap {
    /// Cluster index -> majority label.
    pub map: BTreeMap<usize, Label>,
    /// Clusters that had no members and could not be mapped.
    pub unmapped: Vec<usize>,
}

impl ClusterLabelMap {
    pub fn label_of(&self, cluster: usize) -> Option<Label> {
        self.map.get(&cluster).copied()
    }
}

/// One sphere per fuzzy class, plus the centroids that seeded them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HybridModelRepr", into = "HybridModelRepr")]
pub struct HybridModel {
    pub spheres: Vec<SphereSeparator>,
    pub centroids: Vec<Vec<f64>>,
    pub phi: f64,
    pub class_names: Option<Vec<String>>,
    /// Cluster -> deposit/barren mapping, when truth labels were available.
    pub label_map: Option<ClusterLabelMap>,
}

#[derive(Serialize, Deserialize)]
struct FcmBundle {
    centroids: Vec<Vec<f64>>,
    phi: f64,
}

#[derive(Serialize, Deserialize)]
struct HybridModelRepr {
    fcm: FcmBundle,
    spheres: Vec<SphereSeparator>,
    mapping: Option<ClusterLabelMap>,
    class_names: Option<Vec<String>>,
}

impl TryFrom<HybridModelRepr> for HybridModel {
    type Error = Error;
    fn try_from(r: HybridModelRepr) -> Result<Self> {
        if r.spheres.len() != r.fcm.centroids.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spheres for {} centroids",
                r.spheres.len(),
                r.fcm.centroids.len()
            )));
        }
        Ok(HybridModel {
            spheres: r.spheres,
            centroids: r.fcm.centroids,
            phi: r.fcm.phi,
            class_names: r.class_names,
            label_map: r.mapping,
        })
    }
}

impl From<HybridModel> for HybridModelRepr {
    fn from(m: HybridModel) -> Self {
        HybridModelRepr {
            fcm: FcmBundle {
                centroids: m.centroids,
                phi: m.phi,
            },
            spheres: m.spheres,
            mapping: m.label_map,
            class_names: m.class_names,
        }
    }
}

impl HybridModel {
    pub fn class_count(&self) -> usize {
        self.spheres.len()
    }
}

/// Clusters the features with fuzzy c-means, hardens the memberships, and
/// trains one one-vs-rest sphere per class. Labels on the input, if any,
/// are ignored.
pub fn hybrid_fit(data: &Dataset, config: &HybridConfig) -> Result<HybridModel> {
    let c = config.fcm.c;
    let (model, memberships) = fcm_fit(data, &config.fcm)?;
    let crisp = harden(&memberships);

    let mut spheres = Vec::with_capacity(c);
    for k in 0..c {
        let members: Vec<usize> = (0..data.len()).filter(|&i| crisp[i] == k).collect();
        if members.is_empty() {
            return Err(Error::EmptyClass { class: k });
        }
        let centroid = &model.centroids[k];
        let radius = members
            .iter()
            .map(|&i| squared_distance(&data.patterns()[i].values, centroid).sqrt())
            .fold(0.0, f64::max)
            .max(RADIUS_FLOOR);
        let init = SphereSeparator::new(centroid.clone(), radius)?;
        let labels: Vec<Label> = crisp
            .iter()
            .map(|&ci| if ci == k { Label::Minus } else { Label::Plus })
            .collect();
        let one_vs_rest = data.with_labels(&labels)?;
        let (sphere, _diag) = train_minimerror_s(&one_vs_rest, &init, &config.annealing)?;
        spheres.push(sphere);
    }
    Ok(HybridModel {
        spheres,
        centroids: model.centroids,
        phi: model.phi,
        class_names: None,
        label_map: None,
    })
}

/// Class of the sphere with the highest inside-signed score
/// (rho_k^2 - ||xi - w_k||^2) / (2 rho_k sqrt(N)); ties break on the
/// smallest class index.
pub fn hybrid_predict(model: &HybridModel, pattern: &Pattern) -> usize {
    assert!(!model.spheres.is_empty(), "model has no spheres");
    let mut best = 0;
    let mut best_score = inside_score(&model.spheres[0], &pattern.values);
    for (k, sphere) in model.spheres.iter().enumerate().skip(1) {
        let s = inside_score(sphere, &pattern.values);
        if s > best_score {
            best = k;
            best_score = s;
        }
    }
    best
}

/// Maps each cluster to the majority truth label among its members; ties go
/// to +1 (deposit). Clusters without members are reported as unmapped.
pub fn map_clusters_to_labels(
    predicted: &[usize],
    truth: &[Label],
    n_clusters: usize,
) -> Result<ClusterLabelMap> {
    if predicted.len() != truth.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} predictions for {} truth labels",
            predicted.len(),
            truth.len()
        )));
    }
    if predicted.is_empty() {
        return Err(Error::InsufficientData("cluster mapping needs at least one pattern".into()));
    }
    let mut plus = vec![0usize; n_clusters];
    let mut minus = vec![0usize; n_clusters];
    for (&k, &l) in predicted.iter().zip(truth) {
        if k >= n_clusters {
            return Err(Error::InvalidConfig(format!(
                "cluster index {k} out of range for {n_clusters} clusters"
            )));
        }
        match l {
            Label::Plus => plus[k] += 1,
            Label::Minus => minus[k] += 1,
        }
    }
    let mut map = BTreeMap::new();
    let mut unmapped = Vec::new();
    for k in 0..n_clusters {
        if plus[k] + minus[k] == 0 {
            unmapped.push(k);
        } else if plus[k] >= minus[k] {
            map.insert(k, Label::Plus);
        } else {
            map.insert(k, Label::Minus);
        }
    }
    Ok(ClusterLabelMap { map, unmapped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::{
        generate_synthetic, Attribute, AttributeKind, AttributeSchema, SyntheticConfig,
    };
    use crate::fcm::FcmInit;

    fn unlabeled(points: &[&[f64]]) -> Dataset {
        let dim = points[0].len();
        let schema = AttributeSchema::new(
            (0..dim)
                .map(|i| Attribute::new(format!("x{i}"), AttributeKind::Quantitative))
                .collect(),
            None,
        )
        .unwrap();
        Dataset::new(
            schema,
            points.iter().map(|p| Pattern::unlabeled(p.to_vec())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn fit_wraps_each_cluster_in_its_own_sphere() {
        let data = generate_synthetic(&SyntheticConfig {
            n_per_class: 50,
            n_quant: 2,
            n_qual: 0,
            separation: 10.0,
            seed: 157,
        })
        .unwrap();
        let config = HybridConfig {
            fcm: FcmConfig {
                seed: 11,
                ..FcmConfig::default()
            },
            ..HybridConfig::default()
        };
        let model = hybrid_fit(&data, &config).unwrap();
        assert_eq!(model.class_count(), 2);

        // recompute the fcm classes the same way the fit does
        let (_, memberships) = fcm_fit(&data, &config.fcm).unwrap();
        let crisp = harden(&memberships);
        for k in 0..2 {
            let own: Vec<usize> = (0..data.len()).filter(|&i| crisp[i] == k).collect();
            let other: Vec<usize> = (0..data.len()).filter(|&i| crisp[i] != k).collect();
            let inside = |idx: &[usize]| {
                idx.iter()
                    .filter(|&&i| inside_score(&model.spheres[k], &data.patterns()[i].values) >= 0.0)
                    .count() as f64
                    / idx.len() as f64
            };
            assert!(inside(&own) >= 0.95, "class {k} holds {}", inside(&own));
            assert!(inside(&other) <= 0.05, "class {k} leaks {}", inside(&other));
        }
    }

    #[test]
    fn fit_on_distinct_points_centers_spheres_on_them() {
        let data = unlabeled(&[&[0.0, 0.0], &[5.0, 5.0], &[0.0, 0.0], &[5.0, 5.0]]);
        let config = HybridConfig {
            fcm: FcmConfig {
                init: FcmInit::HardPartition(vec![0, 1, 0, 1]),
                ..FcmConfig::default()
            },
            ..HybridConfig::default()
        };
        let model = hybrid_fit(&data, &config).unwrap();
        let targets = [[0.0, 0.0], [5.0, 5.0]];
        for (sphere, target) in model.spheres.iter().zip(&targets) {
            let drift = squared_distance(sphere.center(), target).sqrt();
            assert!(drift < 0.5, "sphere drifted {drift} from {target:?}");
        }
    }

    #[test]
    fn fit_is_deterministic() {
        let data = generate_synthetic(&SyntheticConfig {
            n_per_class: 30,
            n_quant: 3,
            n_qual: 0,
            separation: 6.0,
            seed: 163,
        })
        .unwrap();
        let config = HybridConfig {
            fcm: FcmConfig {
                seed: 29,
                ..FcmConfig::default()
            },
            ..HybridConfig::default()
        };
        let a = hybrid_fit(&data, &config).unwrap();
        let b = hybrid_fit(&data, &config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn fit_supports_more_than_two_classes() {
        // three tight clusters on a triangle
        let mut rng = crate::rng::Rng64::new(59);
        let centers = [[0.0, 0.0], [12.0, 0.0], [6.0, 10.0]];
        let mut pts = Vec::new();
        for c in &centers {
            for _ in 0..25 {
                pts.push(vec![c[0] + rng.next_normal(), c[1] + rng.next_normal()]);
            }
        }
        let refs: Vec<&[f64]> = pts.iter().map(|p| p.as_slice()).collect();
        let data = unlabeled(&refs);
        let config = HybridConfig {
            fcm: FcmConfig {
                c: 3,
                seed: 61,
                ..FcmConfig::default()
            },
            ..HybridConfig::default()
        };
        let model = hybrid_fit(&data, &config).unwrap();
        assert_eq!(model.class_count(), 3);
        // every generator cluster should map onto one distinct predicted class
        let mut seen = std::collections::BTreeSet::new();
        for (g, c) in centers.iter().enumerate() {
            let members = (0..25).map(|i| g * 25 + i);
            let mut votes = [0usize; 3];
            for i in members {
                votes[hybrid_predict(&model, &data.patterns()[i])] += 1;
            }
            let majority = votes.iter().enumerate().max_by_key(|(_, &v)| v).unwrap().0;
            assert!(votes[majority] >= 24, "cluster at {c:?} scattered: {votes:?}");
            seen.insert(majority);
        }
        assert_eq!(seen.len(), 3);
    }

    #[test]
    fn fit_reports_an_empty_hardened_class() {
        // three coincident points: both centroids collapse, the membership
        // tie goes to class 0 and class 1 ends up empty
        let data = unlabeled(&[&[1.0], &[1.0], &[1.0]]);
        let config = HybridConfig::default();
        match hybrid_fit(&data, &config) {
            Err(Error::EmptyClass { class: 1 }) => {}
            other => panic!("expected empty class, got {other:?}"),
        }
    }

    #[test]
    fn predict_prefers_the_containing_sphere() {
        let model = HybridModel {
            spheres: vec![
                SphereSeparator::new(vec![0.0, 0.0], 1.0).unwrap(),
                SphereSeparator::new(vec![10.0, 0.0], 1.0).unwrap(),
            ],
            centroids: vec![vec![0.0, 0.0], vec![10.0, 0.0]],
            phi: 2.0,
            class_names: None,
            label_map: None,
        };
        assert_eq!(hybrid_predict(&model, &Pattern::unlabeled(vec![0.0, 0.0])), 0);
        assert_eq!(hybrid_predict(&model, &Pattern::unlabeled(vec![10.0, 0.1])), 1);
    }

    #[test]
    fn predict_tie_takes_the_smaller_index() {
        let model = HybridModel {
            spheres: vec![
                SphereSeparator::new(vec![-1.0], 1.0).unwrap(),
                SphereSeparator::new(vec![1.0], 1.0).unwrap(),
            ],
            centroids: vec![vec![-1.0], vec![1.0]],
            phi: 2.0,
            class_names: None,
            label_map: None,
        };
        // the midpoint scores identically for both spheres
        assert_eq!(hybrid_predict(&model, &Pattern::unlabeled(vec![0.0])), 0);
    }

    #[test]
    fn predict_matches_score_scan_oracle() {
        let mut rng = crate::rng::Rng64::new(167);
        let model = HybridModel {
            spheres: vec![
                SphereSeparator::new(vec![0.0, 1.0], 1.5).unwrap(),
                SphereSeparator::new(vec![3.0, -1.0], 0.8).unwrap(),
            ],
            centroids: vec![vec![0.0, 1.0], vec![3.0, -1.0]],
            phi: 2.0,
            class_names: None,
            label_map: None,
        };
        for _ in 0..100 {
            let values: Vec<f64> = (0..2).map(|_| 4.0 * rng.next_normal()).collect();
            let got = hybrid_predict(&model, &Pattern::unlabeled(values.clone()));
            let scores: Vec<f64> = model
                .spheres
                .iter()
                .map(|s| inside_score(s, &values))
                .collect();
            let expect = if scores[0] >= scores[1] { 0 } else { 1 };
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn prediction_consistent_for_patterns_inside_exactly_one_sphere() {
        let data = generate_synthetic(&SyntheticConfig {
            n_per_class: 40,
            n_quant: 2,
            n_qual: 0,
            separation: 10.0,
            seed: 173,
        })
        .unwrap();
        let config = HybridConfig {
            fcm: FcmConfig {
                seed: 31,
                ..FcmConfig::default()
            },
            ..HybridConfig::default()
        };
        let model = hybrid_fit(&data, &config).unwrap();
        let mut checked = 0;
        for p in data.patterns() {
            let inside: Vec<usize> = (0..model.class_count())
                .filter(|&k| inside_score(&model.spheres[k], &p.values) > 0.0)
                .collect();
            if inside.len() == 1 {
                assert_eq!(hybrid_predict(&model, p), inside[0]);
                checked += 1;
            }
        }
        assert!(checked > 0, "no strictly-inside patterns to check");
    }

    #[test]
    fn argmax_unchanged_when_all_radii_scale() {
        let spheres = [
            SphereSeparator::new(vec![0.0], 1.0).unwrap(),
            SphereSeparator::new(vec![6.0], 1.0).unwrap(),
        ];
        let scaled = [
            SphereSeparator::new(vec![0.0], 3.0).unwrap(),
            SphereSeparator::new(vec![6.0], 3.0).unwrap(),
        ];
        // strictly inside sphere 0, outside sphere 1 under both scalings
        let p = [0.5];
        let pick = |set: &[SphereSeparator; 2]| {
            if inside_score(&set[0], &p) >= inside_score(&set[1], &p) {
                0
            } else {
                1
            }
        };
        assert_eq!(pick(&spheres), pick(&scaled));
        assert!(inside_score(&spheres[0], &p) > 0.0 && inside_score(&spheres[1], &p) < 0.0);
        assert!(inside_score(&scaled[0], &p) > 0.0 && inside_score(&scaled[1], &p) < 0.0);
    }

    #[test]
    fn cluster_mapping_majority_and_ties() {
        // cluster 0: 9 deposits, 1 barren; cluster 1: 5/5 tie
        let predicted: Vec<usize> = std::iter::repeat_n(0, 10)
            .chain(std::iter::repeat_n(1, 10))
            .collect();
        let mut truth = vec![Label::Plus; 9];
        truth.push(Label::Minus);
        truth.extend(vec![Label::Plus; 5]);
        truth.extend(vec![Label::Minus; 5]);
        let mapping = map_clusters_to_labels(&predicted, &truth, 2).unwrap();
        assert_eq!(mapping.label_of(0), Some(Label::Plus));
        assert_eq!(mapping.label_of(1), Some(Label::Plus)); // tie -> deposit
        assert!(mapping.unmapped.is_empty());
    }

    #[test]
    fn cluster_mapping_reports_empty_clusters() {
        let predicted = vec![0, 0, 0];
        let truth = vec![Label::Minus, Label::Minus, Label::Plus];
        let mapping = map_clusters_to_labels(&predicted, &truth, 3).unwrap();
        assert_eq!(mapping.label_of(0), Some(Label::Minus));
        assert_eq!(mapping.unmapped, vec![1, 2]);
    }

    #[test]
    fn cluster_mapping_matches_counting_oracle() {
        let mut rng = crate::rng::Rng64::new(179);
        let predicted: Vec<usize> = (0..60).map(|_| rng.next_index(3)).collect();
        let truth: Vec<Label> = (0..60)
            .map(|_| if rng.next_f64() < 0.5 { Label::Plus } else { Label::Minus })
            .collect();
        let mapping = map_clusters_to_labels(&predicted, &truth, 3).unwrap();
        for k in 0..3 {
            let members: Vec<Label> = predicted
                .iter()
                .zip(&truth)
                .filter(|(p, _)| **p == k)
                .map(|(_, &t)| t)
                .collect();
            if members.is_empty() {
                assert!(mapping.unmapped.contains(&k));
            } else {
                let plus = members.iter().filter(|l| **l == Label::Plus).count();
                let expect = if plus * 2 >= members.len() { Label::Plus } else { Label::Minus };
                assert_eq!(mapping.label_of(k), Some(expect), "cluster {k}");
            }
        }
    }

    #[test]
    fn cluster_mapping_rejects_mismatched_lengths() {
        assert!(map_clusters_to_labels(&[0], &[], 1).is_err());
    }

    #[test]
    fn model_serializes_as_a_bundle() {
        let model = HybridModel {
            spheres: vec![SphereSeparator::new(vec![0.0], 1.0).unwrap()],
            centroids: vec![vec![0.0]],
            phi: 2.0,
            class_names: None,
            label_map: Some(ClusterLabelMap {
                map: BTreeMap::from([(0, Label::Plus)]),
                unmapped: vec![],
            }),
        };
        let v: serde_json::Value = serde_json::to_value(&model).unwrap();
        assert_eq!(v["fcm"]["phi"], 2.0);
        assert!(v["fcm"]["centroids"].is_array());
        assert!(v["spheres"].is_array());
        assert_eq!(v["mapping"]["map"]["0"], "+1");
        let back: HybridModel = serde_json::from_value(v).unwrap();
        assert_eq!(back, model);
    }
}
