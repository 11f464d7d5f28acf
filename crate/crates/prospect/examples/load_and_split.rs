//! Ingest a CSV through a schema (qualitative categories become integer
//! codes, `deposit`/`barren` tokens become labels), standardize the
//! training side of a seeded split and apply the same transform to the
//! held-out side.
//!
//! ```bash
//! cargo run -p prospect --example load_and_split
//! ```

use std::io::Write;

use prospect::dataset::{
    load_csv, split, standardize, Attribute, AttributeKind, AttributeSchema, SplitSpec,
};

fn main() -> prospect::Result<()> {
    let csv = "\
rock,depth,grade,class
granite,120.5,0.8,deposit
basalt,80.0,0.1,barren
granite,200.0,1.4,deposit
schist,55.2,0.05,barren
basalt,95.0,0.3,barren
granite,170.3,1.1,deposit
";
    let path = std::env::temp_dir().join("prospect_sites_demo.csv");
    std::fs::File::create(&path)?.write_all(csv.as_bytes())?;

    let schema = AttributeSchema::new(
        vec![
            Attribute::new("rock", AttributeKind::Qualitative),
            Attribute::new("depth", AttributeKind::Quantitative),
            Attribute::new("grade", AttributeKind::Quantitative),
        ],
        Some("class".into()),
    )?;
    let data = load_csv(&path, &schema)?;
    println!("loaded {} patterns, dimension {}", data.len(), data.dim());
    for p in data.patterns().iter().take(3) {
        println!("  values {:?} label {:?}", p.values, p.label);
    }

    let (raw_train, raw_test) = split(&data, &SplitSpec::new(0.67, 9)?)?;
    let (train, params) = standardize(&raw_train)?;
    let test = params.apply(&raw_test)?;
    println!("train {} / test {}", train.len(), test.len());
    for stats in params.entries() {
        println!(
            "  {}: mean {:.3}, std {:.3}",
            stats.name, stats.mean, stats.std
        );
    }
    println!("first standardized test pattern: {:?}", test.patterns()[0].values);
    Ok(())
}
