//! Plücker coordinates of a wedge of rows and the pairing with a decomposable
//! form, computed through coordinates and through a determinant.

use nevlab::exterior::{pair, pair_poly, pair_rows, pluecker_relations_check, wedge_rows, MultiIndex, WedgeForm};
use nevlab::GaussPoly;
use num_complex::Complex64;

fn row(coords: &[&str]) -> Vec<GaussPoly> {
    coords.iter().map(|s| s.parse().unwrap()).collect()
}

fn main() -> nevlab::Result<()> {
    let rows = vec![row(&["1", "z", "z^2", "z^3"]), row(&["0", "1", "2*z", "3*z^2"])];
    let x = wedge_rows(&rows, 3)?;
    for (index, coord) in MultiIndex::all(3, 2).iter().zip(x.coords()) {
        println!("X_{:?} = {coord}", index.elements());
    }
    println!("Plücker relations hold: {}", pluecker_relations_check(&x));

    let form = WedgeForm::new(
        vec![
            vec!["1".parse()?, "1".parse()?, "0".parse()?, "0".parse()?],
            vec!["0".parse()?, "i".parse()?, "1".parse()?, "-1".parse()?],
        ],
        3,
    )?;
    println!("F(X) = {}", pair_poly(&form, &x)?);
    let z = Complex64::new(0.7, -1.3);
    println!("by coordinates: {:.15}", pair(&form, &x, z)?);
    println!("by determinant: {:.15}", pair_rows(&form, &rows, z)?);
    Ok(())
}
