//! Writes one figure preset as CSV and SVG.
//!
//! cargo run --release --example figure -- circle-60 out/circle-60

use std::path::PathBuf;

use expinterp::cli::{figure, FigurePreset, Format, RowKind, PRESET_IDS};

fn main() -> expinterp::Result<()> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "circle-60".into());
    let stem = PathBuf::from(args.next().unwrap_or_else(|| id.clone()));
    let preset = FigurePreset::from_id(&id).inspect_err(|_| eprintln!("known presets: {}", PRESET_IDS.join(", ")))?;
    let art = figure(&preset, 1024)?;
    for f in [Format::Csv, Format::Svg] {
        let path = stem.with_extension(f.extension());
        std::fs::write(&path, art.render(f))?;
        println!("wrote {}", path.display());
    }
    println!("{} zeros, {} poles", art.count(RowKind::Zero), art.count(RowKind::Pole));
    Ok(())
}
