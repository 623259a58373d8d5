//! Reads a scheme from JSON (or uses a built-in one), solves it and prints zeros and poles.
//!
//! cargo run --example scheme_json -- path/to/scheme.json

use expinterp::interp::{solve_interpolant, InterpolationScheme};

const BUILTIN: &str = r#"{
  "n1": 2,
  "n2": 2,
  "points": [
    {"re": "0.5", "im": "0", "mult": 2},
    {"re": "-0.25", "im": "0.75", "mult": 1},
    {"re": "-0.25", "im": "-0.75", "mult": 1},
    {"re": "1", "im": "0", "mult": 1}
  ]
}"#;

fn main() -> expinterp::Result<()> {
    let prec = 256;
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => BUILTIN.to_string(),
    };
    let scheme = InterpolationScheme::from_json(&text, prec)?;
    println!(
        "type ({}, {}), {} conditions, hash {}",
        scheme.n1(),
        scheme.n2(),
        scheme.total(),
        &scheme.hash()[..16]
    );
    let r = solve_interpolant(&scheme, prec)?;
    println!("residual {:.3e}", r.residual_check().to_f64());
    let zp = r.zeros_poles()?;
    for z in &zp.zeros {
        println!("zero {}", z.to_c64());
    }
    for p in &zp.poles {
        println!("pole {}", p.to_c64());
    }
    Ok(())
}
