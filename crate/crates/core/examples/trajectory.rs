//! The limit curves and limit measures, written as CSV to stdout.
//!
//! cargo run --example trajectory > curves.csv

use expinterp::geom::{c0_f64, gamma1, limit_measures, trace_gamma2, TraceOptions};

fn main() -> expinterp::Result<()> {
    let g2 = trace_gamma2(&TraceOptions::default())?;
    let (mu_p, mu_q) = limit_measures(200)?;
    eprintln!(
        "c0 = {:.10}, |gamma1| = {}, |gamma2| = {}, masses {:.9} {:.9}",
        c0_f64(),
        gamma1().len(),
        g2.len(),
        mu_p.mass(),
        mu_q.mass()
    );
    println!("curve,re,im,weight");
    for z in gamma1().iter().step_by(20) {
        println!("gamma1,{},{},", z.re, z.im);
    }
    for z in g2.iter().step_by(20) {
        println!("gamma2,{},{},", z.re, z.im);
    }
    for (z, w) in mu_p.nodes.iter().zip(&mu_p.weights) {
        println!("mu_p,{},{},{}", z.re, z.im, w);
    }
    Ok(())
}
