//! Generate a synthetic deposit/barren dataset and write it to disk as
//! CSV + schema JSON, the same formats the `prospect` binary consumes.
//!
//! ```bash
//! cargo run -p prospect --example generate_data
//! ```

use prospect::dataset::{generate_synthetic, write_csv, SyntheticConfig};

fn main() -> prospect::Result<()> {
    let config = SyntheticConfig {
        n_per_class: 200,
        n_quant: 5,
        n_qual: 3,
        separation: 3.0,
        seed: 7,
    };
    let data = generate_synthetic(&config)?;
    println!(
        "generated {} patterns, {} attributes ({} qualitative)",
        data.len(),
        data.dim(),
        config.n_qual
    );

    let dir = std::env::temp_dir();
    let csv_path = dir.join("prospect_sites.csv");
    let schema_path = dir.join("prospect_sites.schema.json");
    write_csv(&data, &csv_path)?;
    data.schema().save_json(&schema_path)?;
    println!("wrote {}", csv_path.display());
    println!("wrote {}", schema_path.display());
    Ok(())
}
