//! Weil functions of hyperplanes, the tuple selector, and the generalized
//! Weil function with its logarithmic-derivative bound.

use nevlab::harness::HyperplaneConfig;
use nevlab::nevanlinna::{mu, pointwise_logderiv_check, select_tuple, weil};
use nevlab::CurveLift;
use num_complex::Complex64;

fn main() -> nevlab::Result<()> {
    let x = CurveLift::parse(&["1", "z", "z^2"])?;
    let config = HyperplaneConfig::parse(
        &[&["1", "1", "1"], &["1", "-1", "1"], &["2", "1", "1"], &["1", "1", "2"]],
        2,
    )?;
    let forms: Vec<Vec<Complex64>> = config
        .forms()
        .iter()
        .map(|f| f.iter().map(|c| c.to_complex()).collect())
        .collect();

    for z in [
        Complex64::new(0.0, 1.0),
        Complex64::new(-0.5, 0.8),
        Complex64::new(3.0, 0.0),
    ] {
        let v: Vec<Complex64> = x.coords().iter().map(|c| c.eval(z)).collect();
        let lambdas: Vec<f64> = forms.iter().map(|f| weil(f, &v)).collect();
        let sel = select_tuple(&lambdas, config.tuples());
        let tuple = config.tuple_forms(sel.tuple);
        let m = mu(&x, &tuple, z)?;
        let bound = pointwise_logderiv_check(&x, &tuple, z)?;
        println!("z = {z}");
        println!("  lambdas {:.6?}", lambdas);
        println!("  tuple {:?} with sum {:.6}", config.tuples()[sel.tuple], sel.value);
        println!("  mu = {:.6} in chart {}", m.value, m.chart);
        println!("  bound: {:.6} <= {:.6}", bound.lhs, bound.rhs);
    }
    Ok(())
}
