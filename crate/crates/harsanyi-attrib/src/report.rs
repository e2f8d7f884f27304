//! Report construction and rendering for the command-line surface.
//!
//! Every command produces a `serde_json::Value` tree tagged with
//! `"schema": "harsanyi-attrib/1"` and an echo of the resolved
//! configuration. Rendering is deterministic: keys keep insertion order and
//! floats are always written with 17 significant digits, so identical
//! inputs yield byte-identical reports.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::attribution::{
    banzhaf_from_interactions, coalition_attribution, conflict_decomposition, efficiency_report,
    per_variable_decomposition, shapley_from_interactions,
};
use crate::error::{Error, Result};
use crate::game::{parse_coalition, synth_game, GameSpec, TableFormat, ValueTable};
use crate::interaction::{
    and_interactions, or_interactions, reconstruction_max_error, InteractionSpectrum,
};
use crate::lattice::{
    mobius_transform, zeta_transform, CoalitionMask, LatticeVector, DEFAULT_N_CAP,
};
use crate::oracle::{
    banzhaf_direct, harsanyi_and_direct, harsanyi_or_direct, mobius_naive, shapley_direct,
    zeta_naive, ORACLE_N_CAP,
};
use crate::split::{
    optimize_gamma, sparsity_loss, split_fixed, AndOrSplit, FixedMode, OptimizerConfig, SplitMode,
};

/// Schema tag stamped into every report.
pub const REPORT_SCHEMA: &str = "harsanyi-attrib/1";

/// Formats a float with 17 significant digits (exact round-trip), the fixed
/// rendering used in all emitted JSON.
pub(crate) fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders a JSON tree with the crate's canonical float formatting.
/// `pretty` selects an indented layout; compact has no extra whitespace.
pub fn render_json(value: &Value, pretty: bool) -> String {
    let mut out = String::new();
    write_value(value, pretty, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(value: &Value, pretty: bool, depth: usize, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = num.as_u64() {
                out.push_str(&u.to_string());
            } else {
                out.push_str(&fmt_float(num.as_f64().expect("finite float")));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("string serializes"));
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                if pretty {
                    out.push('\n');
                    out.push_str(&"  ".repeat(depth + 1));
                }
                write_value(item, pretty, depth + 1, out);
            }
            if pretty {
                out.push('\n');
                out.push_str(&"  ".repeat(depth));
            }
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (i, (key, item)) in map.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                if pretty {
                    out.push('\n');
                    out.push_str(&"  ".repeat(depth + 1));
                }
                out.push_str(&serde_json::to_string(key).expect("string serializes"));
                out.push(':');
                if pretty {
                    out.push(' ');
                }
                write_value(item, pretty, depth + 1, out);
            }
            if pretty {
                out.push('\n');
                out.push_str(&"  ".repeat(depth));
            }
            out.push('}');
        }
    }
}

/// Resolved settings of one command invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub format: TableFormat,
    pub n_override: Option<usize>,
    pub mode: SplitMode,
    /// Raw `--coalition` arguments, parsed against n once the table is
    /// loaded.
    pub coalitions: Vec<String>,
    pub optimizer: OptimizerConfig,
    pub prune: f64,
    pub output: Option<PathBuf>,
    pub emit_plot_data: bool,
    /// Variable-count cap (default 24, overridable via environment).
    pub cap: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            input: None,
            format: TableFormat::Json,
            n_override: None,
            mode: SplitMode::Balanced,
            coalitions: Vec::new(),
            optimizer: OptimizerConfig::default(),
            prune: 0.0,
            output: None,
            emit_plot_data: false,
            cap: DEFAULT_N_CAP,
        }
    }
}

impl RunConfig {
    /// Reads and validates the input table.
    pub fn load_table(&self) -> Result<ValueTable> {
        let path = self.input.as_ref().ok_or_else(|| {
            Error::InvalidConfig("an input value table is required (--input)".into())
        })?;
        let file = std::fs::File::open(path)?;
        ValueTable::load(
            std::io::BufReader::new(file),
            self.format,
            self.n_override,
            self.cap,
        )
    }

    fn config_echo(&self, command: &str) -> Value {
        let path_str = |p: &Option<PathBuf>| -> Value {
            match p {
                Some(p) => json!(p.display().to_string()),
                None => Value::Null,
            }
        };
        let mut echo = Map::new();
        echo.insert("command".into(), json!(command));
        echo.insert("input".into(), path_str(&self.input));
        echo.insert(
            "format".into(),
            json!(match self.format {
                TableFormat::Json => "json",
                TableFormat::Csv => "csv",
            }),
        );
        echo.insert(
            "n_override".into(),
            self.n_override.map_or(Value::Null, |n| json!(n)),
        );
        echo.insert("mode".into(), json!(self.mode.as_str()));
        echo.insert("coalitions".into(), json!(self.coalitions));
        echo.insert("prune".into(), json!(self.prune));
        echo.insert("seed".into(), json!(self.optimizer.seed));
        if self.mode == SplitMode::Learned {
            echo.insert(
                "optimizer".into(),
                json!({
                    "max_iters": self.optimizer.max_iters,
                    "step0": self.optimizer.step0.map_or(Value::Null, |s| json!(s)),
                    "decay": self.optimizer.decay,
                    "tol": self.optimizer.tol,
                }),
            );
        }
        echo.insert("output".into(), path_str(&self.output));
        echo.insert("emit_plot_data".into(), json!(self.emit_plot_data));
        echo.insert("cap".into(), json!(self.cap));
        Value::Object(echo)
    }

    /// Builds the split the configured mode asks for, together with the
    /// "meta" report section describing it.
    fn resolve_split(&self, table: &ValueTable) -> Result<(AndOrSplit, Value)> {
        let mut meta = Map::new();
        meta.insert("n".into(), json!(table.n()));
        meta.insert("mode".into(), json!(self.mode.as_str()));
        meta.insert("baseline".into(), json!(table.baseline()));
        let split = match self.mode.fixed() {
            Some(fixed) => {
                let split = split_fixed(table.clone(), fixed);
                meta.insert("loss".into(), json!(sparsity_loss(&split)));
                split
            }
            None => {
                let result = optimize_gamma(table, &self.optimizer)?;
                meta.insert("loss".into(), json!(result.loss));
                meta.insert("iterations".into(), json!(result.iterations));
                meta.insert(
                    "fixed_losses".into(),
                    json!({
                        "and_only": result.fixed_losses.and_only,
                        "or_only": result.fixed_losses.or_only,
                        "balanced": result.fixed_losses.balanced,
                    }),
                );
                result.split
            }
        };
        Ok((split, Value::Object(meta)))
    }
}

fn report_shell(command: &str, cfg: &RunConfig) -> Map<String, Value> {
    let mut root = Map::new();
    root.insert("schema".into(), json!(REPORT_SCHEMA));
    root.insert("config".into(), cfg.config_echo(command));
    root
}

/// The `interactions` report: both spectra (pruned and sorted by combined
/// magnitude), the sparsity loss, and the reconstruction error.
pub fn interactions_report(table: &ValueTable, cfg: &RunConfig) -> Result<Value> {
    let (split, meta) = cfg.resolve_split(table)?;
    let spectrum = InteractionSpectrum::from_split(&split);

    let mut entries: Vec<(usize, f64, f64)> = (1..spectrum.len())
        .map(|m| (m, spectrum.i_and()[m], spectrum.i_or()[m]))
        .filter(|&(_, a, o)| a.abs().max(o.abs()) >= cfg.prune)
        .collect();
    entries.sort_by(|x, y| {
        let kx = x.1.abs() + x.2.abs();
        let ky = y.1.abs() + y.2.abs();
        ky.total_cmp(&kx).then(x.0.cmp(&y.0))
    });

    let n = table.n();
    let rows: Vec<Value> = entries
        .iter()
        .map(|&(m, a, o)| {
            let mask = CoalitionMask::new(m as u64, n).expect("mask in range");
            json!({
                "mask": m as u64,
                "members": mask.describe(),
                "i_and": a,
                "i_or": o,
            })
        })
        .collect();

    let mut root = report_shell("interactions", cfg);
    root.insert("meta".into(), meta);
    root.insert("interactions".into(), Value::Array(rows));
    root.insert(
        "reconstruction_max_error".into(),
        json!(reconstruction_max_error(&spectrum, table.values())),
    );
    if cfg.emit_plot_data {
        let bars: Vec<Value> = entries
            .iter()
            .map(|&(m, a, o)| {
                let mask = CoalitionMask::new(m as u64, n).expect("mask in range");
                json!({"label": mask.describe(), "value": a + o})
            })
            .collect();
        root.insert("bars".into(), Value::Array(bars));
    }
    Ok(Value::Object(root))
}

/// The `attribute` report: Shapley and Banzhaf values, with identity checks
/// against the direct marginal forms whenever the oracle cap allows.
pub fn attribute_report(table: &ValueTable, cfg: &RunConfig) -> Result<Value> {
    let (split, meta) = cfg.resolve_split(table)?;
    let spectrum = InteractionSpectrum::from_split(&split);
    let phi = shapley_from_interactions(&spectrum);
    let banzhaf = banzhaf_from_interactions(&spectrum);

    let per_variable = |values: &[f64]| -> Vec<Value> {
        values
            .iter()
            .enumerate()
            .map(|(i, v)| json!({"variable": i, "label": table.label(i), "value": v}))
            .collect()
    };

    let mut root = report_shell("attribute", cfg);
    root.insert("meta".into(), meta);
    root.insert("shapley".into(), Value::Array(per_variable(&phi)));
    root.insert("banzhaf".into(), Value::Array(per_variable(&banzhaf)));
    root.insert("shapley_total".into(), json!(phi.iter().sum::<f64>()));

    if table.n() <= ORACLE_N_CAP {
        let phi_direct = shapley_direct(table.values())?;
        let b_direct = banzhaf_direct(table.values())?;
        let max_err = |a: &[f64], b: &[f64]| -> f64 {
            a.iter()
                .zip(b)
                .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
        };
        root.insert(
            "identity_checks".into(),
            json!({
                "shapley_max_err": max_err(&phi, &phi_direct),
                "banzhaf_max_err": max_err(&banzhaf, &b_direct),
            }),
        );
    }

    if cfg.emit_plot_data {
        let bars: Vec<Value> = phi
            .iter()
            .enumerate()
            .map(|(i, v)| json!({"label": table.label(i), "value": v}))
            .collect();
        root.insert("bars".into(), Value::Array(bars));
    }
    Ok(Value::Object(root))
}

/// The `coalition` report: conflict and efficiency decompositions for each
/// requested coalition.
pub fn coalition_report(table: &ValueTable, cfg: &RunConfig) -> Result<Value> {
    if cfg.coalitions.is_empty() {
        return Err(Error::InvalidConfig(
            "at least one --coalition is required".into(),
        ));
    }
    let masks: Vec<CoalitionMask> = cfg
        .coalitions
        .iter()
        .map(|text| parse_coalition(text, table.n()))
        .collect::<Result<_>>()?;

    let (split, meta) = cfg.resolve_split(table)?;
    let spectrum = InteractionSpectrum::from_split(&split);

    let mut sections = Vec::with_capacity(masks.len());
    for mask in masks {
        let conflict = conflict_decomposition(&spectrum, mask)?;
        let eff = efficiency_report(&spectrum, mask)?;
        let shares: Vec<Value> = mask
            .members()
            .map(|i| {
                let (share, residual_i) = per_variable_decomposition(&spectrum, mask, i)
                    .expect("member of the coalition");
                json!({
                    "variable": i,
                    "label": table.label(i),
                    "share": share,
                    "residual": residual_i,
                })
            })
            .collect();
        let terms: Vec<Value> = conflict
            .per_term_breakdown
            .iter()
            .filter(|t| t.contribution.abs() > 1e-12)
            .map(|t| {
                json!({
                    "mask": t.mask.bits(),
                    "members": t.mask.describe(),
                    "weight": t.weight,
                    "contribution": t.contribution,
                })
            })
            .collect();
        sections.push(json!({
            "mask": mask.bits(),
            "members": mask.describe(),
            "varphi": conflict.varphi,
            "shapley_sum": conflict.shapley_sum,
            "residual": conflict.partial_overlap_residual,
            "terms": terms,
            "per_variable": shares,
            "efficiency": {
                "varphi": eff.varphi,
                "outside_phi": eff.outside_phi,
                "residual": eff.residual,
                "total": eff.total,
                "target": eff.target,
                "max_abs_error": eff.max_abs_error(),
            },
        }));
    }

    let mut root = report_shell("coalition", cfg);
    root.insert("meta".into(), meta);
    root.insert("coalitions".into(), Value::Array(sections));
    if cfg.emit_plot_data {
        let bars: Vec<Value> = root["coalitions"]
            .as_array()
            .expect("built above")
            .iter()
            .flat_map(|c| {
                let members = c["members"].as_str().expect("string").to_string();
                [
                    json!({"label": format!("varphi {members}"), "value": c["varphi"]}),
                    json!({"label": format!("shapley_sum {members}"), "value": c["shapley_sum"]}),
                    json!({"label": format!("residual {members}"), "value": c["residual"]}),
                ]
            })
            .collect();
        root.insert("bars".into(), Value::Array(bars));
    }
    Ok(Value::Object(root))
}

struct IdentityCheck {
    name: &'static str,
    max_error: f64,
    tolerance: f64,
}

impl IdentityCheck {
    fn pass(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

fn random_gamma(n: usize, rng: &mut ChaCha8Rng) -> LatticeVector {
    let data: Vec<f64> = (0..1usize << n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    LatticeVector::from_vec(n, data).expect("valid shape")
}

/// The `verify` report: every identity the engine is built on, evaluated on
/// the given table under all fixed modes, a learned split, and random γ
/// draws. The identities hold for *any* table, so this checks the engine,
/// not the data.
pub fn verify_identities(table: &ValueTable, cfg: &RunConfig) -> Result<Value> {
    let n = table.n();
    if n > ORACLE_N_CAP {
        return Err(Error::CapExceeded {
            n,
            cap: ORACLE_N_CAP,
        });
    }
    let v = table.values();
    let len = v.len();
    let scale = v.max_abs().max(1.0);
    let tol = 1e-9 * scale;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.optimizer.seed);

    // Splits under test: the three fixed modes, one learned split, and
    // five random γ draws.
    let mut splits: Vec<AndOrSplit> = vec![
        split_fixed(table.clone(), FixedMode::AndOnly),
        split_fixed(table.clone(), FixedMode::OrOnly),
        split_fixed(table.clone(), FixedMode::Balanced),
    ];
    let optimized = optimize_gamma(table, &cfg.optimizer)?;
    splits.push(optimized.split.clone());
    for _ in 0..5 {
        splits.push(AndOrSplit::with_gamma(table.clone(), random_gamma(n, &mut rng))?);
    }
    let spectra: Vec<InteractionSpectrum> =
        splits.iter().map(InteractionSpectrum::from_split).collect();

    // Coalitions to quantify over: everything when small, a deterministic
    // sample when the lattice is large.
    let coalitions: Vec<CoalitionMask> = if n <= 6 {
        (1..len as u64)
            .map(|bits| CoalitionMask::new(bits, n).expect("in range"))
            .collect()
    } else {
        let mut masks = std::collections::BTreeSet::new();
        while masks.len() < 256 {
            let bits = rng.gen_range(1..len as u64);
            masks.insert(bits);
        }
        masks
            .into_iter()
            .map(|bits| CoalitionMask::new(bits, n).expect("in range"))
            .collect()
    };

    let mut checks: Vec<IdentityCheck> = Vec::new();

    // Fast transforms against the literal submask-loop forms.
    {
        let mut err = 0.0f64;
        let fast_m = mobius_transform(v);
        let naive_m = mobius_naive(v)?;
        let fast_z = zeta_transform(v);
        let naive_z = zeta_naive(v)?;
        for m in 0..len {
            err = err.max((fast_m[m] - naive_m[m]).abs());
            err = err.max((fast_z[m] - naive_z[m]).abs());
        }
        checks.push(IdentityCheck {
            name: "fast_vs_naive_transforms",
            max_error: err,
            tolerance: 1e-12 * scale,
        });
    }

    // Spectra against the alternating-sign definitions.
    {
        let mut err = 0.0f64;
        for split in &splits {
            let i_and = and_interactions(split);
            let i_or = or_interactions(split);
            let naive_and = harsanyi_and_direct(&split.v_and())?;
            let naive_or = harsanyi_or_direct(&split.v_or())?;
            for m in 0..len {
                err = err.max((i_and[m] - naive_and[m]).abs());
                err = err.max((i_or[m] - naive_or[m]).abs());
            }
        }
        checks.push(IdentityCheck {
            name: "spectra_vs_naive_definitions",
            max_error: err,
            tolerance: tol,
        });
    }

    // Reconstruction of every masked output from every spectrum.
    {
        let mut err = 0.0f64;
        for spectrum in &spectra {
            err = err.max(reconstruction_max_error(spectrum, v));
        }
        checks.push(IdentityCheck {
            name: "universal_matching",
            max_error: err,
            tolerance: tol,
        });
    }

    // Interaction-form Shapley/Banzhaf against the direct marginal sums.
    let phi_direct = shapley_direct(v)?;
    let b_direct = banzhaf_direct(v)?;
    {
        let mut err_phi = 0.0f64;
        let mut err_b = 0.0f64;
        for spectrum in &spectra {
            let phi = shapley_from_interactions(spectrum);
            let b = banzhaf_from_interactions(spectrum);
            for i in 0..n {
                err_phi = err_phi.max((phi[i] - phi_direct[i]).abs());
                err_b = err_b.max((b[i] - b_direct[i]).abs());
            }
        }
        checks.push(IdentityCheck {
            name: "shapley_reformulation",
            max_error: err_phi,
            tolerance: tol,
        });
        checks.push(IdentityCheck {
            name: "banzhaf_reformulation",
            max_error: err_b,
            tolerance: tol,
        });
    }

    // φ({i}) must reproduce φ(i) exactly.
    {
        let mut err = 0.0f64;
        for spectrum in &spectra {
            let phi = shapley_from_interactions(spectrum);
            for i in 0..n {
                let varphi = coalition_attribution(
                    spectrum,
                    CoalitionMask::singleton(i, n).expect("in range"),
                )?;
                err = err.max((varphi - phi[i]).abs());
            }
        }
        checks.push(IdentityCheck {
            name: "singleton_coalition_equals_shapley",
            max_error: err,
            tolerance: 1e-12 * scale,
        });
    }

    // Conflict, per-variable, and efficiency decompositions.
    {
        let mut err_conflict = 0.0f64;
        let mut err_pervar = 0.0f64;
        let mut err_eff = 0.0f64;
        let target = table.grand_value() - table.baseline();
        for spectrum in &spectra {
            let phi = shapley_from_interactions(spectrum);
            for &mask in &coalitions {
                let conflict = conflict_decomposition(spectrum, mask)?;
                err_conflict = err_conflict.max(
                    (conflict.varphi
                        - (conflict.shapley_sum - conflict.partial_overlap_residual))
                        .abs(),
                );
                for i in mask.members() {
                    let (share, residual_i) = per_variable_decomposition(spectrum, mask, i)?;
                    err_pervar = err_pervar.max((share + residual_i - phi[i]).abs());
                }
                let eff = efficiency_report(spectrum, mask)?;
                err_eff = err_eff.max((eff.total - target).abs());
            }
        }
        checks.push(IdentityCheck {
            name: "conflict_decomposition",
            max_error: err_conflict,
            tolerance: tol,
        });
        checks.push(IdentityCheck {
            name: "per_variable_decomposition",
            max_error: err_pervar,
            tolerance: tol,
        });
        checks.push(IdentityCheck {
            name: "efficiency_decomposition",
            max_error: err_eff,
            tolerance: tol,
        });
    }

    // Σ φ(i) = v(N) − v(∅).
    {
        let mut err = 0.0f64;
        let target = table.grand_value() - table.baseline();
        for spectrum in &spectra {
            let phi = shapley_from_interactions(spectrum);
            err = err.max((phi.iter().sum::<f64>() - target).abs());
        }
        checks.push(IdentityCheck {
            name: "shapley_efficiency",
            max_error: err,
            tolerance: tol,
        });
    }

    // Additivity: split the table into two random summands with split γ.
    {
        let mut err = 0.0f64;
        for _ in 0..3 {
            let v1_data: Vec<f64> = (0..len).map(|_| rng.gen_range(-scale..scale)).collect();
            let v1 = LatticeVector::from_vec(n, v1_data).expect("valid shape");
            let v2 = v.axpby(1.0, &v1, -1.0)?;
            let v_sum = v1.axpby(1.0, &v2, 1.0)?;
            let g1 = random_gamma(n, &mut rng);
            let g2 = random_gamma(n, &mut rng);
            let g_sum = g1.axpby(1.0, &g2, 1.0)?;

            let s1 = InteractionSpectrum::from_split(&AndOrSplit::with_gamma(
                ValueTable::from_values(n, v1.as_slice().to_vec())?,
                g1,
            )?);
            let s2 = InteractionSpectrum::from_split(&AndOrSplit::with_gamma(
                ValueTable::from_values(n, v2.as_slice().to_vec())?,
                g2,
            )?);
            let s12 = InteractionSpectrum::from_split(&AndOrSplit::with_gamma(
                ValueTable::from_values(n, v_sum.as_slice().to_vec())?,
                g_sum,
            )?);
            let phi1 = shapley_from_interactions(&s1);
            let phi2 = shapley_from_interactions(&s2);
            let phi12 = shapley_from_interactions(&s12);
            for i in 0..n {
                err = err.max((phi12[i] - phi1[i] - phi2[i]).abs());
            }
            for &mask in coalitions.iter().take(32) {
                let a = coalition_attribution(&s12, mask)?;
                let b = coalition_attribution(&s1, mask)? + coalition_attribution(&s2, mask)?;
                err = err.max((a - b).abs());
            }
        }
        checks.push(IdentityCheck {
            name: "additivity_under_table_split",
            max_error: err,
            tolerance: tol,
        });
    }

    // The learned split must not lose to any closed-form mode.
    {
        let gap = (optimized.loss - optimized.fixed_losses.min()).max(0.0);
        checks.push(IdentityCheck {
            name: "learned_loss_at_most_fixed_modes",
            max_error: gap,
            tolerance: 1e-9,
        });
        let monotone = optimized
            .best_loss_history
            .windows(2)
            .all(|w| w[1] <= w[0]);
        checks.push(IdentityCheck {
            name: "best_loss_history_nonincreasing",
            max_error: if monotone { 0.0 } else { 1.0 },
            tolerance: 0.0,
        });
    }

    let all_pass = checks.iter().all(IdentityCheck::pass);
    let rows: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "max_error": c.max_error,
                "tolerance": c.tolerance,
                "pass": c.pass(),
            })
        })
        .collect();

    let mut root = report_shell("verify", cfg);
    root.insert("meta".into(), json!({"n": n, "splits_tested": splits.len()}));
    root.insert("identities".into(), Value::Array(rows));
    root.insert("pass".into(), json!(all_pass));
    Ok(Value::Object(root))
}

/// Loads the input table and builds the `interactions` report.
pub fn cmd_interactions(cfg: &RunConfig) -> Result<Value> {
    interactions_report(&cfg.load_table()?, cfg)
}

/// Loads the input table and builds the `attribute` report.
pub fn cmd_attribute(cfg: &RunConfig) -> Result<Value> {
    attribute_report(&cfg.load_table()?, cfg)
}

/// Loads the input table and builds the `coalition` report.
pub fn cmd_coalition(cfg: &RunConfig) -> Result<Value> {
    coalition_report(&cfg.load_table()?, cfg)
}

/// Loads the input table and runs the identity suite on it.
pub fn cmd_verify(cfg: &RunConfig) -> Result<Value> {
    verify_identities(&cfg.load_table()?, cfg)
}

/// Builds the synthetic table a `synth` invocation asks for.
pub fn cmd_synth(spec: &GameSpec, cap: usize) -> Result<ValueTable> {
    synth_game(spec, cap)
}

/// Extracts the overall pass flag of a verify report.
pub fn verify_passed(report: &Value) -> bool {
    report["pass"].as_bool().unwrap_or(false)
}
