//! The acceptance suite. Prints one pass/fail line per criterion, then
//! requires that the failing checks are exactly the known discrepancies with
//! the published values, so that any new failure or any silent fix shows up.
//! Built without the test harness so the lines always reach the output.

use std::collections::BTreeSet;
use std::process::ExitCode;

use reflex_cli::catalog::Catalog;
use reflex_cli::suite::{run_criterion, CRITERIA};

/// (criterion, check name) pairs that are expected to mismatch.
const KNOWN_FAILURES: &[(u8, &str)] = &[
    // the printed (a - d)n vanishes for G(4,2,n), orbit s; the computed value is n
    (3, "G(4,2,3) s reflexponents"),
    (3, "G(4,2,4) s reflexponents"),
    // the published t-rows of G(6,3,3) and G(4,2,4) differ from the computed
    // fake degrees of the extended representation
    (5, "G(6,3,3) t reflexponents"),
    (5, "G(4,2,4) t reflexponents"),
    // the printed affine product lacks the factor prod [r]_{q^delta_i} / [r]_q
    (8, "C2 alcove sum = printed product to q^20"),
    (8, "C3 alcove sum = printed product to q^20"),
    (8, "B3 alcove sum = printed product to q^20"),
    (8, "G2 alcove sum = printed product to q^20"),
    (8, "F4 alcove sum = printed product to q^12"),
];

fn main() -> ExitCode {
    let mut catalog = Catalog::default();
    let mut failing = BTreeSet::new();
    let mut empty = Vec::new();
    for &(n, _) in CRITERIA.iter() {
        let outcome = run_criterion(n, &mut catalog);
        println!("{}", outcome.summary_line());
        if outcome.checks.is_empty() {
            empty.push(n);
        }
        for c in outcome.failures() {
            failing.insert((n, c.name.clone()));
        }
    }
    let known: BTreeSet<(u8, String)> = KNOWN_FAILURES.iter().map(|&(n, s)| (n, s.to_string())).collect();
    let unexpected: Vec<_> = failing.difference(&known).collect();
    let fixed: Vec<_> = known.difference(&failing).collect();
    let mut ok = true;
    if !empty.is_empty() {
        eprintln!("criteria with no checks: {empty:?}");
        ok = false;
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        ok = false;
    }
    if !fixed.is_empty() {
        eprintln!("known discrepancies no longer reproduced: {fixed:?}");
        ok = false;
    }
    if ok {
        println!("acceptance: failing checks are exactly the {} known discrepancies", known.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
