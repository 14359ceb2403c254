//! Exact arithmetic over Q(i): parsing, gcd, squarefree parts and roots.

use nevlab::GaussPoly;

fn main() -> nevlab::Result<()> {
    let p: GaussPoly = "z^4 - 2*z^3 + 2*z^2 - 2*z + 1".parse()?;
    let q: GaussPoly = "z^3 - z^2 + z - 1".parse()?;
    println!("p = {p}");
    println!("q = {q}");
    println!("gcd(p, q) = {}", p.gcd(&q)?);
    println!("p' = {}", p.derivative());

    for (factor, multiplicity) in p.squarefree_decomposition()? {
        println!("squarefree factor {factor} with multiplicity {multiplicity}");
    }

    let roots = p.roots()?;
    println!("ord at 0: {}", roots.ord_at_zero());
    for (rho, m) in roots.points() {
        println!("root {:.12} {:+.12}i with multiplicity {m}", rho.re, rho.im);
    }

    let g: GaussPoly = "1/2 + (1/3)i*z^2".parse()?;
    println!("{g} at z = 1+i: {}", g.eval(num_complex::Complex64::new(1.0, 1.0)));
    Ok(())
}
