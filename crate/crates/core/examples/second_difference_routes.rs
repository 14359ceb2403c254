//! Second differences of proximity against second differences of height,
//! once directly and once through the two-row inequality on X^d.

use nevlab::harness::{log_spaced, verify_second_differences, HyperplaneConfig};
use nevlab::nevanlinna::QuadratureOptions;
use nevlab::CurveLift;

fn main() -> nevlab::Result<()> {
    let x = CurveLift::parse(&["1", "z", "z^2 + i*z^3"])?;
    let config = HyperplaneConfig::parse(
        &[&["1", "0", "0"], &["0", "1", "0"], &["0", "0", "1"], &["1", "1", "1"]],
        x.n(),
    )?;
    let radii = log_spaced(2.0, 50.0, 6)?;
    let records = verify_second_differences(&x, &config, &radii, &QuadratureOptions::default())?;
    println!("{:>2} {:>8} {:>12} {:>12} {:>10}", "d", "r", "margin", "route", "diff");
    for rec in &records {
        println!(
            "{:>2} {:>8.3} {:>12.8} {:>12.8} {:>10.2e}",
            rec.d,
            rec.margin.r,
            rec.margin.margin,
            rec.route.margin,
            rec.route_diff()
        );
    }
    Ok(())
}
