//! The permanent as a sum over involutions of X, against brute force.

use scottper::exact::Polynomial;
use scottper::oracle::{
    brute_permanent, enumerate_involutions, find_roots, involution_count, involution_sum,
};

fn main() -> scottper::Result<()> {
    println!("involutions of 4 points:");
    for inv in enumerate_involutions(4) {
        let pairs: Vec<String> = inv
            .transpositions()
            .map(|(i, j)| format!("({i} {j})"))
            .collect();
        println!("  {:?}  {}", inv.pairing(), pairs.join(" "));
    }
    println!(
        "counts: {:?}\n",
        (1..=10).map(involution_count).collect::<Vec<_>>()
    );

    let p = Polynomial::from_ints(&[3, -1, 0, 2, 0, 1]);
    let q = Polynomial::from_ints(&[-2, 1, 1, 0, 0, 0, 1]);
    let (x, y) = (find_roots(&p)?, find_roots(&q)?);
    let inv = involution_sum(&x, &y)?;
    let brute = brute_permanent(&x, &y)?;
    println!("P = {p}\nQ = {}", q.render("y"));
    println!("involution sum = {inv:.12}");
    println!("brute force    = {brute:.12}");
    Ok(())
}
