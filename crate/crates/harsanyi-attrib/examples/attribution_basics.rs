//! Per-variable Shapley and Banzhaf attributions from interaction spectra.
//!
//! The Shapley value of a variable is the sum of every interaction it takes
//! part in, divided evenly among the participants; the Banzhaf value uses
//! weight 1/2^(|T|−1) instead. Both equal their classical marginal-average
//! definitions, and neither depends on how the game was split between the
//! AND and OR routes. Run with:
//!
//! ```text
//! cargo run --example attribution_basics
//! ```

use harsanyi_attrib::{
    banzhaf_direct, shapley_direct, AndOrSplit, AttributionVector, GameKind, GameSpec,
    InteractionSpectrum, LatticeVector, Result, DEFAULT_N_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let spec = GameSpec {
        n: 5,
        seed: 12,
        kind: GameKind::Random,
    };
    let table = harsanyi_attrib::synth_game(&spec, DEFAULT_N_CAP)?;

    // Any γ defines a valid split; take an arbitrary one to make the point
    // that attributions do not care.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let gamma: Vec<f64> = (0..table.values().len())
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();
    let split = AndOrSplit::with_gamma(table.clone(), LatticeVector::from_vec(table.n(), gamma)?)?;
    let spectrum = InteractionSpectrum::from_split(&split);
    let attribution = AttributionVector::compute(&spectrum);

    // Cross-check against the direct definitions computed straight from the
    // value table (exponential-cost averages, feasible at this size).
    let phi_direct = shapley_direct(table.values())?;
    let banzhaf_ref = banzhaf_direct(table.values())?;

    println!("random 5-variable game, arbitrary split:");
    println!(
        "  {:<9} {:>12} {:>12} {:>12} {:>12}",
        "variable", "shapley", "shapley ref", "banzhaf", "banzhaf ref"
    );
    for i in 0..table.n() {
        println!(
            "  {:<9} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            table.label(i),
            attribution.phi()[i],
            phi_direct[i],
            attribution.banzhaf()[i],
            banzhaf_ref[i],
        );
    }

    // Shapley values are efficient: they add up to v(N) − v(∅) exactly.
    let span = table.grand_value() - table.baseline();
    println!("\n  sum of shapley values: {:.6}", attribution.phi_total());
    println!("  v(N) - v(empty)      : {span:.6}");

    let max_err = (0..table.n())
        .map(|i| (attribution.phi()[i] - phi_direct[i]).abs())
        .fold(0.0_f64, f64::max);
    println!("  max |spectrum route - direct definition|: {max_err:.3e}");
    Ok(())
}
