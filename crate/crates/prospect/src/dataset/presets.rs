//! Named attribute subsets of the 25-attribute Andes GIS layout
//! (attributes 1-8 qualitative, 9-25 quantitative).

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The eleven attribute-subset presets, identified by roman numerals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AttributePreset {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl AttributePreset {
    pub const ALL: [AttributePreset; 11] = [
        AttributePreset::I,
        AttributePreset::II,
        AttributePreset::III,
        AttributePreset::IV,
        AttributePreset::V,
        AttributePreset::VI,
        AttributePreset::VII,
        AttributePreset::VIII,
        AttributePreset::IX,
        AttributePreset::X,
        AttributePreset::XI,
    ];

    /// 1-based attribute indices selected by this preset.
    pub fn indices(self) -> Vec<usize> {
        match self {
            AttributePreset::I => (1..=25).collect(),
            AttributePreset::II => (1..=8).collect(),
            AttributePreset::III => (9..=25).collect(),
            AttributePreset::IV => vec![11, 12, 13, 14],
            AttributePreset::V => vec![11, 12, 13, 25],
            AttributePreset::VI => vec![3, 5, 6, 7],
            AttributePreset::VII => vec![11, 12, 13, 14, 25],
            AttributePreset::VIII => vec![11, 12, 13, 20, 25],
            AttributePreset::IX => vec![3, 5, 6, 7, 11, 12, 13, 25],
            AttributePreset::X => vec![11, 12, 13, 14, 18, 19, 20, 21, 23, 24],
            AttributePreset::XI => vec![11, 12, 13, 14, 18, 19, 20, 21, 23, 24, 25],
        }
    }

    /// Dimension of the selected subset.
    pub fn dim(self) -> usize {
        self.indices().len()
    }

    /// Expected (qualitative, quantitative) attribute counts under the
    /// Andes layout where attributes 1-8 are qualitative.
    pub fn kind_counts(self) -> (usize, usize) {
        let qual = self.indices().iter().filter(|&&i| i <= 8).count();
        (qual, self.dim() - qual)
    }
}

impl std::fmt::Display for AttributePreset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AttributePreset::I => "I",
            AttributePreset::II => "II",
            AttributePreset::III => "III",
            AttributePreset::IV => "IV",
            AttributePreset::V => "V",
            AttributePreset::VI => "VI",
            AttributePreset::VII => "VII",
            AttributePreset::VIII => "VIII",
            AttributePreset::IX => "IX",
            AttributePreset::X => "X",
            AttributePreset::XI => "XI",
        };
        write!(f, "{s}")
    }
}

impl FromStr for AttributePreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_uppercase().as_str() {
            "I" => Ok(AttributePreset::I),
            "II" => Ok(AttributePreset::II),
            "III" => Ok(AttributePreset::III),
            "IV" => Ok(AttributePreset::IV),
            "V" => Ok(AttributePreset::V),
            "VI" => Ok(AttributePreset::VI),
            "VII" => Ok(AttributePreset::VII),
            "VIII" => Ok(AttributePreset::VIII),
            "IX" => Ok(AttributePreset::IX),
            "X" => Ok(AttributePreset::X),
            "XI" => Ok(AttributePreset::XI),
            other => Err(Error::InvalidConfig(format!(
                "unknown attribute preset `{other}` (expected I..XI)"
            ))),
        }
    }
}
