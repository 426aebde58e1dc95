//! PER(x^n - 1, y^(2n) + y^n + 1) = (-1)^(n+1) n!, through the general
//! determinant formula and through the broken-diagonal one.

use scottper::exact::{int, Polynomial};
use scottper::fes::{per_via_fes, PKind};
use scottper::scott::scott_permanent;

fn main() -> scottper::Result<()> {
    for n in 1..=7 {
        let p = Polynomial::power_minus_one(n);
        let q = Polynomial::from_terms([(2 * n, int(1)), (n, int(1)), (0, int(1))]);
        let general = scott_permanent(&p, &q)?;
        let fes = per_via_fes(PKind::PowerMinusOne, n, &q)?;
        assert_eq!(general.value, fes.value);
        println!(
            "n = {n}: {:>6}   (Q = {})",
            general.value.to_string(),
            q.render("y")
        );
    }
    Ok(())
}
