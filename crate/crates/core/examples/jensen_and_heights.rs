//! Circle averages of log|p| against log|p(0)| plus the counting function,
//! and the heights of the associated curves of the conic.

use nevlab::exterior::WedgeVector;
use nevlab::nevanlinna::{counting, height_bar, height_t, QuadratureOptions};
use nevlab::{CurveLift, GaussPoly};

fn main() -> nevlab::Result<()> {
    let opts = QuadratureOptions::default();
    let p: GaussPoly = "z^3 - (1/2)i*z + 1/4".parse()?;
    let divisor = p.roots()?;
    let scalar = WedgeVector::scalar(0, p.clone());
    println!("{:>6} {:>16} {:>16}", "r", "circle average", "Jensen");
    for r in [0.25, 0.5, 1.0, 2.0, 10.0] {
        let bar = height_bar(&scalar, r, &opts)?;
        let jensen = p.coeff(0).to_complex().norm().ln() + counting(&divisor, r)?;
        println!("{r:>6} {:>16.12} {jensen:>16.12}", bar.value);
    }

    let conic = CurveLift::parse(&["1", "z", "z^2"])?;
    for d in 0..=conic.n() + 1 {
        let t = height_t(&conic, d, 10.0, &opts)?;
        println!("T_{d}(10) = {:.12} ({} nodes)", t.value, t.quadrature_nodes);
    }
    Ok(())
}
