//! Pattern schema, ingestion, preprocessing and splits.
//!
//! A [`Dataset`] is an ordered list of [`Pattern`]s conforming to an
//! [`AttributeSchema`]. Attributes are either quantitative (standardizable
//! reals) or qualitative (categories encoded as integer codes at ingestion
//! and passed through untouched by every preprocessing step). Patterns may
//! carry a binary class label in {-1, +1}.

mod io;
mod presets;
mod synthetic;

pub use io::{load_csv, write_csv};
pub use presets::AttributePreset;
pub use synthetic::{generate_synthetic, SyntheticConfig};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng64;

/// Whether an attribute holds category codes or measured reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AttributeKind {
    Qualitative,
    Quantitative,
}

/// A named input column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attribute {
    pub name: String,
    pub kind: AttributeKind,
}

impl Attribute {
    pub fn new(name: impl Into<String>, kind: AttributeKind) -> Self {
        Attribute {
            name: name.into(),
            kind,
        }
    }
}

/// Binary class label, +1 or -1.
///
/// In the deposit-prospection vocabulary +1 is a *deposit* (site holding at
/// least one metal) and -1 is *barren*; the trainers only care about the
/// sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Label {
    /// The label as the signed value used in the cost functions.
    pub fn value(self) -> f64 {
        match self {
            Label::Plus => 1.0,
            Label::Minus => -1.0,
        }
    }

    /// Classifies a raw score: non-negative maps to +1.
    pub fn from_sign(x: f64) -> Label {
        if x >= 0.0 {
            Label::Plus
        } else {
            Label::Minus
        }
    }

    pub fn flip(self) -> Label {
        match self {
            Label::Plus => Label::Minus,
            Label::Minus => Label::Plus,
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Plus => write!(f, "+1"),
            Label::Minus => write!(f, "-1"),
        }
    }
}

/// One input pattern: encoded feature values plus an optional class label.
#[derive(Debug, Clone, PartialEq)]
pub struct Pattern {
    pub values: Vec<f64>,
    pub label: Option<Label>,
}

impl Pattern {
    pub fn labeled(values: Vec<f64>, label: Label) -> Self {
        Pattern {
            values,
            label: Some(label),
        }
    }

    pub fn unlabeled(values: Vec<f64>) -> Self {
        Pattern {
            values,
            label: None,
        }
    }
}

/// Ordered attribute list plus the optional name of the class column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SchemaRepr", into = "SchemaRepr")]
pub struct AttributeSchema {
    attributes: Vec<Attribute>,
    target_column: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct SchemaRepr {
    attributes: Vec<Attribute>,
    #[serde(default)]
    target: Option<String>,
}

impl TryFrom<SchemaRepr> for AttributeSchema {
    type Error = Error;
    fn try_from(r: SchemaRepr) -> Result<Self> {
        AttributeSchema::new(r.attributes, r.target)
    }
}

impl From<AttributeSchema> for SchemaRepr {
    fn from(s: AttributeSchema) -> Self {
        SchemaRepr {
            attributes: s.attributes,
            target: s.target_column,
        }
    }
}

impl AttributeSchema {
    pub fn new(attributes: Vec<Attribute>, target_column: Option<String>) -> Result<Self> {
        if attributes.is_empty() {
            return Err(Error::InvalidSchema("at least one attribute required".into()));
        }
        for (i, a) in attributes.iter().enumerate() {
            if attributes[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidSchema(format!(
                    "duplicate attribute name `{}`",
                    a.name
                )));
            }
        }
        if let Some(t) = &target_column {
            if attributes.iter().any(|a| &a.name == t) {
                return Err(Error::InvalidSchema(format!(
                    "target column `{t}` must not be listed among the feature attributes"
                )));
            }
        }
        Ok(AttributeSchema {
            attributes,
            target_column,
        })
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attributes
    }

    pub fn target_column(&self) -> Option<&str> {
        self.target_column.as_deref()
    }

    /// Number of attributes (the pattern dimension N).
    pub fn len(&self) -> usize {
        self.attributes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.attributes.is_empty()
    }

    pub fn load_json(path: impl AsRef<std::path::Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn save_json(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Stable 64-bit FNV-1a fingerprint over names, kinds and target.
    /// Recorded in model files so a model can be matched to its schema.
    pub fn fingerprint(&self) -> String {
        let mut h: u64 = 0xCBF2_9CE4_8422_2325;
        let mut eat = |bytes: &[u8]| {
            for &b in bytes {
                h ^= b as u64;
                h = h.wrapping_mul(0x0000_0100_0000_01B3);
            }
        };
        for a in &self.attributes {
            eat(a.name.as_bytes());
            eat(match a.kind {
                AttributeKind::Qualitative => b"|q|",
                AttributeKind::Quantitative => b"|n|",
            });
        }
        if let Some(t) = &self.target_column {
            eat(b"->");
            eat(t.as_bytes());
        }
        format!("{h:016x}")
    }
}

/// A schema plus the patterns conforming to it.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    schema: AttributeSchema,
    patterns: Vec<Pattern>,
}

impl Dataset {
    pub fn new(schema: AttributeSchema, patterns: Vec<Pattern>) -> Result<Self> {
        let n = schema.len();
        for (i, p) in patterns.iter().enumerate() {
            if p.values.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "pattern {i} has {} values, schema expects {n}",
                    p.values.len()
                )));
            }
            if let Some(j) = p.values.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "pattern {i} has a non-finite value in attribute `{}`",
                    schema.attributes()[j].name
                )));
            }
        }
        Ok(Dataset { schema, patterns })
    }

    pub fn schema(&self) -> &AttributeSchema {
        &self.schema
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    /// Number of patterns (P).
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Pattern dimension (N).
    pub fn dim(&self) -> usize {
        self.schema.len()
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.patterns.iter().all(|p| p.label.is_some())
    }

    /// Labels of every pattern, or an error naming the first unlabeled one.
    pub fn require_labels(&self) -> Result<Vec<Label>> {
        self.patterns
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.label
                    .ok_or_else(|| Error::LabelsRequired(format!("pattern {i} is unlabeled")))
            })
            .collect()
    }

    /// Same patterns with labels replaced (used by the one-vs-rest wrappers).
    pub fn with_labels(&self, labels: &[Label]) -> Result<Dataset> {
        if labels.len() != self.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} labels for {} patterns",
                labels.len(),
                self.len()
            )));
        }
        let patterns = self
            .patterns
            .iter()
            .zip(labels)
            .map(|(p, &l)| Pattern::labeled(p.values.clone(), l))
            .collect();
        Dataset::new(self.schema.clone(), patterns)
    }
}

/// Per-attribute centering/scaling statistics, fitted on a training set and
/// reusable on held-out data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StandardizationParams {
    entries: Vec<ColumnStats>,
}

/// Statistics of one quantitative attribute.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnStats {
    /// 0-based attribute position in the schema.
    pub index: usize,
    pub name: String,
    pub mean: f64,
    pub std: f64,
}

impl StandardizationParams {
    pub fn entries(&self) -> &[ColumnStats] {
        &self.entries
    }

    /// Applies the stored transform to another dataset with the same schema.
    /// Zero-std attributes are centered only.
    pub fn apply(&self, data: &Dataset) -> Result<Dataset> {
        for e in &self.entries {
            let attr = data.schema.attributes().get(e.index).ok_or_else(|| {
                Error::DimensionMismatch(format!("standardization index {} out of range", e.index))
            })?;
            if attr.name != e.name || attr.kind != AttributeKind::Quantitative {
                return Err(Error::InvalidSchema(format!(
                    "standardization params were fitted on a different schema (attribute `{}`)",
                    e.name
                )));
            }
        }
        let mut patterns = data.patterns.clone();
        for p in &mut patterns {
            for e in &self.entries {
                let x = p.values[e.index] - e.mean;
                p.values[e.index] = if e.std > 0.0 { x / e.std } else { x };
            }
        }
        Dataset::new(data.schema.clone(), patterns)
    }
}

/// Centers each quantitative attribute and divides by its population
/// standard deviation; qualitative attributes are not modified. Returns the
/// fitted parameters so the same transform can be replayed on test data.
pub fn standardize(data: &Dataset) -> Result<(Dataset, StandardizationParams)> {
    if data.is_empty() {
        return Err(Error::InsufficientData(
            "standardize needs at least one pattern".into(),
        ));
    }
    let n = data.len() as f64;
    let mut entries = Vec::new();
    for (j, attr) in data.schema.attributes().iter().enumerate() {
        if attr.kind != AttributeKind::Quantitative {
            continue;
        }
        let mean = data.patterns.iter().map(|p| p.values[j]).sum::<f64>() / n;
        let var = data
            .patterns
            .iter()
            .map(|p| {
                let d = p.values[j] - mean;
                d * d
            })
            .sum::<f64>()
            / n;
        entries.push(ColumnStats {
            index: j,
            name: attr.name.clone(),
            mean,
            std: var.sqrt(),
        });
    }
    let params = StandardizationParams { entries };
    let out = params.apply(data)?;
    Ok((out, params))
}

/// Restricts the dataset to the given 1-based attribute indices, in the
/// given order. The label column is carried through unchanged.
pub fn select_attributes(data: &Dataset, indices: &[usize]) -> Result<Dataset> {
    let n = data.dim();
    if indices.is_empty() {
        return Err(Error::InvalidConfig("empty attribute selection".into()));
    }
    for (pos, &ix) in indices.iter().enumerate() {
        if ix == 0 || ix > n {
            return Err(Error::InvalidConfig(format!(
                "attribute index {ix} out of range 1..={n}"
            )));
        }
        if indices[..pos].contains(&ix) {
            return Err(Error::InvalidConfig(format!("duplicate attribute index {ix}")));
        }
    }
    let attributes = indices
        .iter()
        .map(|&ix| data.schema.attributes()[ix - 1].clone())
        .collect();
    let schema = AttributeSchema::new(attributes, data.schema.target_column.clone())?;
    let patterns = data
        .patterns
        .iter()
        .map(|p| Pattern {
            values: indices.iter().map(|&ix| p.values[ix - 1]).collect(),
            label: p.label,
        })
        .collect();
    Dataset::new(schema, patterns)
}

/// Per-attribute squared difference of the class means, computed on a
/// standardized copy of the data. Large values flag attributes that
/// discriminate between the two classes.
pub fn class_mean_diff(data: &Dataset) -> Result<Vec<f64>> {
    let labels = data.require_labels()?;
    let (std_data, _) = standardize(data)?;
    let mut acc = vec![(0.0f64, 0usize, 0.0f64, 0usize); data.dim()];
    for (p, &l) in std_data.patterns.iter().zip(&labels) {
        for (j, &v) in p.values.iter().enumerate() {
            match l {
                Label::Plus => {
                    acc[j].0 += v;
                    acc[j].1 += 1;
                }
                Label::Minus => {
                    acc[j].2 += v;
                    acc[j].3 += 1;
                }
            }
        }
    }
    if acc[0].1 == 0 || acc[0].3 == 0 {
        let missing = if acc[0].1 == 0 { Label::Plus } else { Label::Minus };
        return Err(Error::InsufficientData(format!(
            "class {missing} is absent from the data"
        )));
    }
    Ok(acc
        .into_iter()
        .map(|(sp, np, sm, nm)| {
            let d = sp / np as f64 - sm / nm as f64;
            d * d
        })
        .collect())
}

/// Train/test split request.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub train_fraction: f64,
    pub seed: u64,
}

impl SplitSpec {
    pub fn new(train_fraction: f64, seed: u64) -> Result<Self> {
        if !(train_fraction > 0.0 && train_fraction <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "train_fraction must lie in (0, 1], got {train_fraction}"
            )));
        }
        Ok(SplitSpec {
            train_fraction,
            seed,
        })
    }
}

/// Splits into train and test by a seeded uniform shuffle. The train size is
/// `round(train_fraction * P)` (half-up); the complement becomes the test
/// set. The same seed always produces the same split.
pub fn split(data: &Dataset, spec: &SplitSpec) -> Result<(Dataset, Dataset)> {
    SplitSpec::new(spec.train_fraction, spec.seed)?;
    if spec.train_fraction < 1.0 && data.len() < 2 {
        return Err(Error::InsufficientData(
            "splitting with train_fraction < 1 needs at least 2 patterns".into(),
        ));
    }
    let p = data.len();
    let k = ((spec.train_fraction * p as f64).round() as usize).min(p);
    let mut order: Vec<usize> = (0..p).collect();
    let mut rng = Rng64::new(spec.seed);
    rng.shuffle(&mut order);
    let take = |ixs: &[usize]| -> Result<Dataset> {
        Dataset::new(
            data.schema.clone(),
            ixs.iter().map(|&i| data.patterns[i].clone()).collect(),
        )
    };
    Ok((take(&order[..k])?, take(&order[k..])?))
}
