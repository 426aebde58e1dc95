use scottper::catalog::entries;
use scottper::scott::scott_permanent;

#[test]
fn every_grid_point_matches_theorem1() {
    let mut failures = Vec::new();
    for entry in entries() {
        let grid = entry.grid();
        assert!(!grid.is_empty(), "{} has an empty grid", entry.id);
        for p in grid {
            let (pp, qq) = entry.family(&p).unwrap();
            let want = scott_permanent(&pp, &qq).unwrap();
            let got = entry.closed_form(&p).unwrap();
            if &got != want.rational() {
                failures.push(format!(
                    "{} {p}: closed {got} vs theorem1 {}",
                    entry.id,
                    want.rational()
                ));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "{} failures:\n{}",
        failures.len(),
        failures.join("\n")
    );
}
