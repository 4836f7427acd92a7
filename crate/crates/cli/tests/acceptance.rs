//! Runs every acceptance criterion at its stated tolerance and prints one
//! PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

use knightpaths_cli::checks;

fn main() {
    let suite: [fn() -> checks::CheckOutcome; 9] = [
        checks::table_fixtures,
        checks::list_fixtures,
        checks::cross_engine,
        checks::bijection_round_trips,
        checks::kernel_certificates,
        checks::valuation_law,
        checks::asymptotic_convergence,
        checks::step_refinement,
        checks::tiling_equinumerosity,
    ];
    let mut failed = 0;
    for criterion in suite {
        let outcome = criterion();
        println!("{}", outcome.summary_line());
        for note in &outcome.notes {
            println!("    {note}");
        }
        for failure in outcome.failures.iter().skip(1) {
            println!("    also failed: {failure}");
        }
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
