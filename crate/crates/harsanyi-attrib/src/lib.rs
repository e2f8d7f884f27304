//! Harsanyi AND/OR interaction spectra and attribution reports for
//! cooperative games given as explicit value tables.
//!
//! A game assigns a value v(S) to every subset S of n variables (a dense
//! table of 2^n numbers). This crate decomposes such a game into
//! *AND interactions* — joint-presence effects, the classical Harsanyi
//! dividends — and *OR interactions* — any-presence effects — via a
//! parameterized split v = v_and + v_or, optionally learning the split
//! that makes the combined spectrum sparsest. From the spectrum it derives
//! Shapley, Banzhaf, and coalition attributions, and decomposes the exact
//! conflict between a coalition's joint attribution and the sum of its
//! members' individual ones.
//!
//! The decomposition identities are the point of the crate, so everything
//! is verified two ways: fast lattice transforms against literal
//! from-the-definition oracles ([`oracle`]), and every attribution identity
//! numerically on demand (the `verify` command and the test suite).
//!
//! # Quick start
//!
//! ```
//! use harsanyi_attrib::{
//!     coalition_attribution, conflict_decomposition, shapley_from_interactions, split_fixed,
//!     CoalitionMask, FixedMode, InteractionSpectrum, ValueTable,
//! };
//!
//! // v(∅)=0, v({0})=1, v({1})=1, v({0,1})=3
//! let table = ValueTable::from_values(2, vec![0.0, 1.0, 1.0, 3.0])?;
//! let split = split_fixed(table, FixedMode::AndOnly);
//! let spectrum = InteractionSpectrum::from_split(&split);
//!
//! // Per-variable Shapley values.
//! let phi = shapley_from_interactions(&spectrum);
//! assert!((phi[0] - 1.5).abs() < 1e-12 && (phi[1] - 1.5).abs() < 1e-12);
//!
//! // The coalition {0,1} as a whole is credited less than φ(0) + φ(1):
//! // the two singleton effects straddle its boundary.
//! let both = CoalitionMask::full(2);
//! let report = conflict_decomposition(&spectrum, both)?;
//! assert!((report.varphi - 1.0).abs() < 1e-12);
//! assert!((report.shapley_sum - 3.0).abs() < 1e-12);
//! assert!((report.partial_overlap_residual - 2.0).abs() < 1e-12);
//! assert_eq!(coalition_attribution(&spectrum, both)?, report.varphi);
//! # Ok::<(), harsanyi_attrib::Error>(())
//! ```
//!
//! # Where to look
//!
//! The `examples/` directory is the guided tour — one runnable program per
//! capability:
//!
//! * `spectrum_basics` — value tables, splits, and the two spectra.
//! * `learn_sparse_split` — the γ optimizer against the fixed modes.
//! * `attribution_basics` — Shapley/Banzhaf from interactions vs the
//!   direct marginal forms.
//! * `coalition_conflict` — φ(S), the partial-overlap residual, and the
//!   per-variable decomposition.
//! * `efficiency_decomposition` — splitting v(N) − v(∅) around a
//!   coalition.
//! * `synthetic_games` — the planted game families and what their spectra
//!   look like.
//! * `table_io` — JSON/CSV ingestion and canonical serialization.
//! * `verify_identities` — the whole identity suite on a random game.
//!
//! Run one with `cargo run --example spectrum_basics`.
//!
//! A thin `harsanyi` binary exposes the same pipelines as subcommands
//! (`interactions`, `attribute`, `coalition`, `verify`, `synth`) producing
//! deterministic JSON reports; see the README.
//!
//! # Module map
//!
//! * [`lattice`] — subset masks, dense per-subset vectors, fast Möbius /
//!   zeta transforms.
//! * [`game`] — value-table ingestion, validation, synthesis.
//! * [`split`] — the γ-parameterized AND/OR split and the sparsity
//!   optimizer.
//! * [`interaction`] — the two spectra and universal-matching
//!   reconstruction.
//! * [`attribution`] — Shapley/Banzhaf/coalition values and the conflict,
//!   per-variable, and efficiency decompositions.
//! * [`oracle`] — slow from-the-definition reference implementations.
//! * [`report`] — deterministic JSON reports for the CLI.

pub mod attribution;
pub mod error;
pub mod game;
pub mod interaction;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod split;

pub use attribution::{
    banzhaf_from_interactions, coalition_attribution, conflict_decomposition, efficiency_report,
    per_variable_decomposition, shapley_from_interactions, AttributionVector, ConflictReport,
    ConflictTerm, EfficiencyReport,
};
pub use error::{Error, Result};
pub use game::{parse_coalition, synth_game, GameKind, GameSpec, TableFormat, ValueTable};
pub use interaction::{
    and_interactions, and_interactions_of, or_interactions, or_interactions_of, reconstruct_all,
    reconstruct_value, reconstruction_max_error, InteractionSpectrum,
};
pub use lattice::{
    mobius_transform, reflect, supersets_of, zeta_transform, CoalitionMask, LatticeVector,
    DEFAULT_N_CAP, MAX_SUPPORTED_N,
};
pub use oracle::{
    banzhaf_direct, harsanyi_and_direct, harsanyi_or_direct, mobius_naive, shapley_direct,
    shapley_permutation_average, zeta_naive, ORACLE_N_CAP,
};
pub use report::{
    attribute_report, cmd_attribute, cmd_coalition, cmd_interactions, cmd_synth, cmd_verify,
    coalition_report, interactions_report, render_json, verify_identities, verify_passed,
    RunConfig, REPORT_SCHEMA,
};
pub use split::{
    optimize_gamma, sparsity_loss, split_fixed, AndOrSplit, FixedLosses, FixedMode,
    OptimizeResult, OptimizerConfig, SplitMode,
};
