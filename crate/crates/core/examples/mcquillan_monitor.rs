//! The derivative-height monitor for a ramified curve, with the
//! ramification counting function beside it.

use nevlab::harness::{log_spaced, mcquillan_monitor, HyperplaneConfig};
use nevlab::nevanlinna::QuadratureOptions;
use nevlab::CurveLift;

fn main() -> nevlab::Result<()> {
    let x = CurveLift::parse(&["1", "z^2"])?;
    let config = HyperplaneConfig::parse(&[&["1", "0"], &["0", "1"], &["1", "1"]], 1)?;
    let radii = log_spaced(2.0, 100.0, 8)?;
    println!("{:>10} {:>12} {:>12} {:>12}", "r", "M(r)", "N_Ram", "log r");
    for rec in mcquillan_monitor(&x, &config, &radii, &QuadratureOptions::default())? {
        let r = rec.margin.r;
        println!(
            "{r:>10.4} {:>12.8} {:>12.8} {:>12.8}",
            rec.margin.lhs,
            rec.n_ram,
            r.ln()
        );
    }
    Ok(())
}
