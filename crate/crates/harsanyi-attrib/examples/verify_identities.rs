//! Run the full identity suite against a table and print the scorecard.
//!
//! The verifier re-derives everything the crate computes through independent
//! slow routes — per-mask transform definitions, order-averaged Shapley and
//! Banzhaf values, brute-force reconstruction — and checks the exact
//! decomposition identities on top, across fixed, learned, and random
//! splits. It is the same machinery behind `harsanyi verify`. Run with:
//!
//! ```text
//! cargo run --example verify_identities
//! ```

use harsanyi_attrib::{verify_identities, verify_passed, GameKind, GameSpec, Result, RunConfig};

fn main() -> Result<()> {
    // Any table works; identities are supposed to hold universally. Use a
    // mixed planted game so the learned split has something to find.
    let table = harsanyi_attrib::synth_game(
        &GameSpec {
            n: 6,
            seed: 1,
            kind: GameKind::PlantedMixed {
                and_plants: vec![(0b000111, 1.0), (0b010010, -0.4)],
                or_plants: vec![(0b101000, 0.9)],
            },
        },
        harsanyi_attrib::DEFAULT_N_CAP,
    )?;

    let report = verify_identities(&table, &RunConfig::default())?;

    println!(
        "verifying a {}-variable table across {} splits:\n",
        report["meta"]["n"], report["meta"]["splits_tested"]
    );
    for check in report["identities"].as_array().unwrap() {
        println!(
            "  {:<38} max error {:>12} (tol {:>8})  {}",
            check["name"].as_str().unwrap(),
            format!("{:.3e}", check["max_error"].as_f64().unwrap()),
            format!("{:.0e}", check["tolerance"].as_f64().unwrap()),
            if check["pass"].as_bool().unwrap() { "ok" } else { "FAIL" },
        );
    }

    if verify_passed(&report) {
        println!("\nall identities hold.");
        Ok(())
    } else {
        println!("\nsome identity failed — this table is a bug report.");
        std::process::exit(1);
    }
}
