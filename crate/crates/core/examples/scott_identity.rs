//! Scott's permanent over the n-th roots of unity and of -1:
//! per(1/(x_i - y_j)) for X = zeros of x^n - 1, Y = zeros of y^n + 1.

use scottper::exact::{int, Polynomial};
use scottper::oracle::{brute_permanent, find_roots};
use scottper::scott::{numerator_matrix, scott_permanent};

fn main() -> scottper::Result<()> {
    println!(
        "{:>2}  {:>22}  {:>24}",
        "n", "exact", "brute force over roots"
    );
    for n in 1..=9 {
        let p = Polynomial::power_minus_one(n);
        let q = Polynomial::from_terms([(n, int(1)), (0, int(1))]);
        let exact = scott_permanent(&p, &q)?;
        let brute = brute_permanent(&find_roots(&p)?, &find_roots(&q)?)?;
        println!(
            "{n:>2}  {:>22}  {:>24.12}",
            exact.value.to_string(),
            brute.re
        );
    }

    // The numerator behind the n = 3 value.
    let p = Polynomial::power_minus_one(3);
    let q = Polynomial::from_ints(&[1, 0, 0, 1]);
    println!("\nH(X)E(Y) for x^3 - 1, y^3 + 1:");
    let he = numerator_matrix(&p, &q)?;
    for i in 0..he.rows() {
        let row: Vec<String> = he.row(i).iter().map(|v| format!("{v:>3}")).collect();
        println!("  [{}]", row.join(" "));
    }
    Ok(())
}
