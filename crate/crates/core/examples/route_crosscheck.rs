//! Every applicable route on a few pairs, with the pairwise agreement table.

use scottper::exact::Polynomial;
use scottper::scott::Value;
use scottper::verify::verify;

fn main() {
    let pairs = [
        (
            Polynomial::power_minus_one(3),
            Polynomial::from_ints(&[1, 0, 0, 0, 1]),
        ),
        (
            Polynomial::all_ones(4),
            Polynomial::from_ints(&[2, -1, 0, 3, 1]),
        ),
        (
            Polynomial::from_ints(&[1, 1, 1]),
            Polynomial::from_ints(&[5, 0, 1]),
        ),
        (
            Polynomial::from_ints(&[-1, 0, 1]),
            Polynomial::from_ints(&[1, 0, -1]),
        ),
    ];
    for (p, q) in &pairs {
        println!("P = {}, Q = {}", p.render("x"), q.render("y"));
        let report = verify(p, q);
        for (outcome, row) in report.routes.iter().zip(&report.agreement) {
            let cells: String = row
                .iter()
                .map(|a| match a {
                    Some(true) => '=',
                    Some(false) => 'x',
                    None => '.',
                })
                .collect();
            let value = match &outcome.result {
                Ok(r) => match r.value {
                    Value::Approx(z) => format!("{:.10} {:+.1e}i", z.re, z.im),
                    Value::Exact(_) => r.value.to_string(),
                },
                Err(e) => format!("error: {e}"),
            };
            println!("  {:<14} {cells}  {value}", outcome.route.to_string());
        }
        println!("  all agree: {}\n", report.all_agree());
    }
}
