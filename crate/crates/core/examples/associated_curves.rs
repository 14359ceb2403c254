//! The associated curves of a lift, their derivatives, and the ramification
//! divisor by two independent constructions.

use nevlab::CurveLift;

fn main() -> nevlab::Result<()> {
    let x = CurveLift::parse(&["1", "z^2", "z^3 + z"])?;
    let family = x.family();
    for d in 0..=x.n() + 1 {
        let level = family.level(d);
        let coords: Vec<String> = level.coords().iter().map(ToString::to_string).collect();
        println!("X^{d} = [{}]", coords.join(", "));
    }
    println!("Wronskian = {}", x.wronskian());

    for d in 1..=x.n() {
        let lhs = x.associated(d)?.derivative();
        let rhs = x.leibniz_partner(d)?;
        println!("d = {d}: derivative matches partner wedge: {}", lhs == rhs);
    }

    println!("ramification from gcd of X^2: {}", x.ramification_gcd()?);
    println!("ramification from charts:     {}", x.ramification_gcd_by_charts()?);

    match CurveLift::parse(&["1", "z", "2*z"])?.ensure_nondegenerate() {
        Ok(()) => println!("unexpected: (1, z, 2z) is nondegenerate"),
        Err(e) => println!("(1, z, 2z): {e}"),
    }
    Ok(())
}
