//! Acceptance suite: runs every verification check at its pinned tolerance
//! and prints one pass/fail line per criterion.

use clifsig::selftest::{run_all, FaultInjection};

#[test]
fn acceptance_criteria() {
    let results = run_all(FaultInjection::default());
    let mut failed = Vec::new();
    for r in &results {
        println!(
            "{}: {} (residual {:.3e}, tolerance {:.1e}) - {}",
            r.check,
            r.status.to_uppercase(),
            r.residual,
            r.tolerance,
            r.detail
        );
        if !r.passed() {
            failed.push(r.check);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
