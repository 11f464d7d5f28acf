//! Rank attributes by how well they discriminate deposits from barrens
//! (squared difference of the standardized class means), then cut the
//! dataset down to a named attribute preset.
//!
//! ```bash
//! cargo run -p prospect --example attribute_stats
//! ```

use prospect::dataset::{
    class_mean_diff, generate_synthetic, select_attributes, AttributePreset, SyntheticConfig,
};

fn main() -> prospect::Result<()> {
    // 25 attributes in the classic layout: 8 qualitative, 17 quantitative
    let data = generate_synthetic(&SyntheticConfig {
        n_per_class: 300,
        n_quant: 17,
        n_qual: 8,
        separation: 2.5,
        seed: 11,
    })?;

    let diffs = class_mean_diff(&data)?;
    println!("attribute\tvalue");
    for (attr, value) in data.schema().attributes().iter().zip(&diffs) {
        println!("{}\t{value:.5}", attr.name);
    }

    for preset in [AttributePreset::II, AttributePreset::VII, AttributePreset::XI] {
        let subset = select_attributes(&data, &preset.indices())?;
        let (qual, quant) = preset.kind_counts();
        println!(
            "preset {preset}: N = {} ({qual} qualitative, {quant} quantitative)",
            subset.dim()
        );
    }
    Ok(())
}
