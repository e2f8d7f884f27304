//! Why a coalition's attribution differs from the sum of its members' —
//! and the exact accounting of the gap.
//!
//! A coalition S is attributed φ(S) = Σ_{T ⊇ S} (|S|/|T|)·I(T): only
//! interactions that contain *all* of S pay into it. Each member's own
//! Shapley value additionally collects interactions that straddle the
//! boundary of S. The difference is not noise; it equals, term for term, the
//! allocated mass of the partially overlapping interactions:
//!
//! ```text
//! φ(S) = Σ_{i∈S} φ(i) − Σ_{∅ ≠ T∩S ≠ S} (|T∩S|/|T|)·I(T)
//! ```
//!
//! Run with:
//!
//! ```text
//! cargo run --example coalition_conflict
//! ```

use harsanyi_attrib::{
    conflict_decomposition, per_variable_decomposition, split_fixed, CoalitionMask, FixedMode,
    GameKind, GameSpec, InteractionSpectrum, Result, ValueTable, DEFAULT_N_CAP,
};

fn main() -> Result<()> {
    // The smallest game that shows the conflict: v = [0, 1, 1, 3], explained
    // through joint-presence interactions I({0}) = I({1}) = I({0,1}) = 1.
    let table = ValueTable::from_values(2, vec![0.0, 1.0, 1.0, 3.0])?;
    let spectrum = InteractionSpectrum::from_split(&split_fixed(table, FixedMode::AndOnly));
    let pair = CoalitionMask::new(0b11, 2)?;
    let report = conflict_decomposition(&spectrum, pair)?;

    println!("game [0, 1, 1, 3], and-only split, coalition S = {{0, 1}}:");
    println!("  varphi(S)        = {}", report.varphi);
    println!("  sum of phi(i)    = {}", report.shapley_sum);
    println!("  overlap residual = {}", report.partial_overlap_residual);
    println!("  identity: {} = {} - {}", report.varphi, report.shapley_sum, report.partial_overlap_residual);
    println!("\n  residual, term by term:");
    for term in &report.per_term_breakdown {
        println!(
            "    T = {:<8} weight {:.4} -> contributes {:+.4}",
            term.mask.describe(),
            term.weight,
            term.contribution,
        );
    }
    println!(
        "  each singleton interaction overlaps S in one of its one members,\n  \
         so each contributes its full unit to the members but nothing to S.\n"
    );

    // A larger mixed game: the same accounting holds for every coalition and
    // every split; here the overlap terms have both signs.
    let spec = GameSpec {
        n: 6,
        seed: 5,
        kind: GameKind::PlantedMixed {
            and_plants: vec![(0b000111, 1.0), (0b011000, -0.6)],
            or_plants: vec![(0b110001, 0.8)],
        },
    };
    let table = harsanyi_attrib::synth_game(&spec, DEFAULT_N_CAP)?;
    let spectrum = InteractionSpectrum::from_split(&split_fixed(table, FixedMode::Balanced));
    let s = CoalitionMask::new(0b000011, 6)?;
    let report = conflict_decomposition(&spectrum, s)?;

    println!("planted 6-variable game, balanced split, S = {}:", s.describe());
    println!("  varphi(S)        = {:+.4}", report.varphi);
    println!("  sum of phi(i)    = {:+.4}", report.shapley_sum);
    println!("  overlap residual = {:+.4}", report.partial_overlap_residual);
    println!("  largest boundary terms:");
    let mut terms = report.per_term_breakdown.clone();
    terms.sort_by(|a, b| b.contribution.abs().total_cmp(&a.contribution.abs()));
    for term in terms.iter().take(5) {
        println!(
            "    T = {:<14} weight {:.4} -> {:+.4}",
            term.mask.describe(),
            term.weight,
            term.contribution,
        );
    }

    // Zooming into one member: its equal share of varphi(S) plus its own
    // boundary terms reassembles exactly its Shapley value.
    let phi = harsanyi_attrib::shapley_from_interactions(&spectrum);
    for i in s.members() {
        let (share, boundary) = per_variable_decomposition(&spectrum, s, i)?;
        println!(
            "  variable {i}: share {share:+.4} + boundary {boundary:+.4} = {:+.4} (phi = {:+.4})",
            share + boundary,
            phi[i],
        );
    }
    Ok(())
}
