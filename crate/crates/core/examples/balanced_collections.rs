//! Distance-one pair collections of d-subsets, their incidence counts, and
//! the telescoping sum they feed.

use nevlab::harness::{balanced_check, distance_one_collection, telescoping_identity};

fn main() -> nevlab::Result<()> {
    for (n, d) in [(2, 1), (3, 2), (4, 2)] {
        let c = distance_one_collection(n, d)?;
        println!("n = {n}, d = {d}: {} pairs", c.len());
        println!("  intersections {:?}", c.intersection_counts());
        println!("  unions        {:?}", c.union_counts());
    }

    let cycle = [(0, 1), (1, 2), (2, 0)];
    let path = [(0, 1), (1, 2)];
    println!("cycle balanced: {}", balanced_check(&cycle, 2).balanced);
    println!(
        "path balanced:  {} {:?}",
        balanced_check(&path, 2).balanced,
        balanced_check(&path, 2).counts
    );

    let a = [0.3, -1.2, 2.5, 0.0, 4.1, -0.7];
    let (lhs, rhs) = telescoping_identity(&a, 4)?;
    println!("telescoping: {lhs} vs {rhs}");
    Ok(())
}
