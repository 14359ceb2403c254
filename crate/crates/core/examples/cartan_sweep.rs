//! Sweep the main inequality for the conic against four lines and list the
//! radii where it fails, if any.

use nevlab::harness::{exceptional_set, log_spaced, sweep, HyperplaneConfig};
use nevlab::nevanlinna::QuadratureOptions;
use nevlab::CurveLift;

fn main() -> nevlab::Result<()> {
    let x = CurveLift::parse(&["1", "z", "z^2"])?;
    let config = HyperplaneConfig::parse(
        &[&["1", "1", "1"], &["1", "-1", "1"], &["2", "1", "1"], &["1", "1", "2"]],
        2,
    )?;
    let radii = log_spaced(2.0, 100.0, 12)?;
    let report = sweep(&x, &config, &radii, &QuadratureOptions::default())?;
    println!("{:>10} {:>12} {:>12} {:>12}", "r", "lhs", "rhs", "margin");
    for rec in &report.records {
        let m = rec.margin;
        println!("{:>10.4} {:>12.6} {:>12.6} {:>12.6}", m.r, m.lhs, m.rhs, m.margin);
    }
    let bad = exceptional_set(&report.margins());
    println!("violations at {:?}, grid mass {}", bad.radii, bad.measure);
    println!("all converged: {}", report.all_converged());
    Ok(())
}
