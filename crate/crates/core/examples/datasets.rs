//! Write the default datasets (ζ_w and χ families, residue curves) as CSV
//! into a directory, default `datasets/`.
//!
//! `cargo run --release --example datasets -- out_dir`

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use zetaw::scan::{run_scan, write_csv, ScanKind, ScanSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "datasets".into()));
    std::fs::create_dir_all(&dir)?;
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    for kind in [
        ScanKind::ZetaFamily,
        ScanKind::ChiFamily,
        ScanKind::Residue0,
        ScanKind::Residue0Inv,
    ] {
        let spec = ScanSpec::defaults(kind);
        let records = run_scan(&spec, threads)?;
        let path = dir.join(format!("{kind}.csv"));
        write_csv(kind, &records, BufWriter::new(File::create(&path)?))?;
        println!("{}: {} rows", path.display(), records.len());
    }
    Ok(())
}
