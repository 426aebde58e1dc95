//! Walks the closed-form catalog: for each entry, evaluate at the last point
//! of its grid and compare with the general route.

use scottper::catalog::{entries, identities, involution_identity_check};
use scottper::scott::scott_permanent;

fn main() -> scottper::Result<()> {
    for entry in entries() {
        let Some(params) = entry.grid().pop() else {
            continue;
        };
        let (p, q) = entry.family(&params)?;
        let closed = entry.closed_form(&params)?;
        let general = scott_permanent(&p, &q)?;
        let mark = if &closed == general.rational() {
            "ok"
        } else {
            "MISMATCH"
        };
        println!(
            "{:<6} {:<28} {:>22}  {mark}",
            entry.id,
            params.to_string(),
            closed.to_string()
        );
        println!("       P = {}, Q = {}", p.render("x"), q.render("y"));
    }

    println!();
    for ident in identities() {
        let n = if ident.odd_only { 5 } else { 4 };
        let r = involution_identity_check(ident.id, n)?;
        println!(
            "{:<6} n = {n}: sum = {:.10}, expected {}",
            r.id, r.computed_re, r.expected
        );
    }
    Ok(())
}
