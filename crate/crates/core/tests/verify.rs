use wmin_core::verify::*;

#[test]
fn all_samples_pass() {
    let mut flagged = std::collections::BTreeSet::new();
    let mut failures = Vec::new();
    for s in default_samples() {
        for c in run_sample(&s) {
            match c.status {
                Status::Fail => failures.push(format!("{s}: {} ({})", c.name, c.witness)),
                Status::Flagged => {
                    flagged.insert(c.name.clone());
                }
                Status::Pass => {}
            }
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert_eq!(flagged.into_iter().collect::<Vec<_>>(), ["table2/collapsing-root", "table2/u1"]);
}

