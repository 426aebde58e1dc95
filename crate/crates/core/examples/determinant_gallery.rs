//! Structured determinants with product formulas, evaluated both ways.

use scottper::exact::{exact_det, int, rat};
use scottper::gallery::{gallery_closed_form, gallery_matrix, GalleryCase};

fn main() -> scottper::Result<()> {
    let cases = [
        GalleryCase::Prop6 {
            r: 2,
            x: (1..=6).map(int).collect(),
            y: (1..=6).map(|k| rat(k, 3)).collect(),
        },
        GalleryCase::Thm7 {
            n: 4,
            a: int(1),
            b: rat(1, 2),
            c: int(-2),
            d: int(3),
            e: rat(5, 4),
        },
        GalleryCase::Thm8 {
            n: 5,
            m: rat(2, 3),
            a: int(3),
        },
        GalleryCase::Cor9 { n: 5, a: rat(1, 2) },
    ];
    for case in &cases {
        let m = gallery_matrix(case)?;
        println!("{} ({}x{}):", case.id(), m.rows(), m.cols());
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:>6}")).collect();
            println!("  {}", row.join(""));
        }
        let det = exact_det(&m)?;
        let closed = gallery_closed_form(case)?;
        println!("  det = {det}, product formula = {closed}\n");
    }
    Ok(())
}
