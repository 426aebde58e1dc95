//! Broken-diagonal numerators for P = x^n - 1 and P = x^(n-1) + ... + 1.

use scottper::exact::{int, resultant, Polynomial, RationalMatrix};
use scottper::fes::{fes, fes_matrix, fes_tilde, fes_tilde_matrix, special_resultant};
use scottper::scott::scott_permanent;

fn show(name: &str, m: &RationalMatrix) {
    println!("{name}:");
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:>5}")).collect();
        println!("  {}", row.join(""));
    }
}

fn main() -> scottper::Result<()> {
    let q = Polynomial::from_ints(&[2, -1, 5, 3, 1]);
    println!("Q = {}\n", q.render("y"));

    let n = 3;
    show("Fes matrix, n = 3", &fes_matrix(&q, n)?);
    let p = Polynomial::power_minus_one(n);
    let res = resultant(&p, &q)?;
    let per = fes(&q, n)? / &res;
    assert_eq!(&per, scott_permanent(&p, &q)?.rational());
    println!("  Fes = {}, Res = {res}, PER = {per}\n", fes(&q, n)?);

    show(
        "Fes~ matrix, n = 4 (P = x^3 + x^2 + x + 1)",
        &fes_tilde_matrix(&q, 4)?,
    );
    let p = Polynomial::all_ones(4);
    let res = resultant(&p, &q)?;
    let per = fes_tilde(&q, 4)? / &res;
    assert_eq!(&per, scott_permanent(&p, &q)?.rational());
    println!("  Fes~ = {}, Res = {res}, PER = {per}\n", fes_tilde(&q, 4)?);

    // Res(y^5 - 2, 3y^2 - 7) without a Sylvester matrix.
    let closed = special_resultant(&int(1), &int(2), &int(3), &int(7), 5, 2)?;
    let sylvester = resultant(
        &Polynomial::from_ints(&[-2, 0, 0, 0, 0, 1]),
        &Polynomial::from_ints(&[-7, 0, 3]),
    )?;
    println!("Res(y^5 - 2, 3y^2 - 7): binomial formula {closed}, Sylvester {sylvester}");
    Ok(())
}
