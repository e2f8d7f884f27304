//! Value-table ingestion, validation, serialization, and synthetic game
//! construction.
//!
//! A cooperative game on n variables is an explicit table v: 2^N → ℝ. The
//! table is opaque data here — how the values were produced (model masking,
//! hand construction, synthesis) is out of scope. v(∅) is kept exactly as
//! ingested; nothing is re-centered.

use std::io::Read;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{check_n, CoalitionMask, LatticeVector};
use crate::report::fmt_float;

/// File format for value tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Csv,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::Parse(format!(
                "unknown table format `{other}` (expected `json` or `csv`)"
            ))),
        }
    }
}

/// A validated cooperative game: one value per subset of the n variables.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueTable {
    values: LatticeVector,
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct TableFile {
    n: usize,
    values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl ValueTable {
    /// Wraps a dense table. The vector length fixes n; labels, when given,
    /// must name every variable.
    pub fn new(values: LatticeVector, labels: Option<Vec<String>>) -> Result<Self> {
        if let Some(ref l) = labels {
            if l.len() != values.n() {
                return Err(Error::BadWeightCount {
                    expected: values.n(),
                    got: l.len(),
                });
            }
        }
        Ok(Self { values, labels })
    }

    pub fn from_values(n: usize, values: Vec<f64>) -> Result<Self> {
        Ok(Self {
            values: LatticeVector::from_vec(n, values)?,
            labels: None,
        })
    }

    pub fn n(&self) -> usize {
        self.values.n()
    }

    pub fn values(&self) -> &LatticeVector {
        &self.values
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Name for variable i: the ingested label, or `x{i}`.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("x{i}"),
        }
    }

    pub fn value(&self, s: CoalitionMask) -> f64 {
        self.values.get(s)
    }

    /// v(∅), the all-masked baseline.
    pub fn baseline(&self) -> f64 {
        self.values[0]
    }

    /// v(N), the all-present output.
    pub fn grand_value(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// Parses a table from JSON or CSV bytes.
    ///
    /// JSON: `{"n": 2, "values": [0, 1, 1, 3], "labels": ["a", "b"]}` with
    /// `labels` optional and `values` indexed by mask.
    ///
    /// CSV: `mask,value` rows (decimal mask), header row optional. When
    /// `n_override` is absent, n is inferred from the largest mask seen
    /// (rounded up to the next power of two). Every mask in [0, 2^n) must
    /// appear exactly once.
    pub fn load(
        mut source: impl Read,
        format: TableFormat,
        n_override: Option<usize>,
        cap: usize,
    ) -> Result<Self> {
        let mut text = String::new();
        source.read_to_string(&mut text)?;
        match format {
            TableFormat::Json => Self::from_json_str(&text, cap),
            TableFormat::Csv => Self::from_csv_str(&text, n_override, cap),
        }
    }

    pub fn from_json_str(text: &str, cap: usize) -> Result<Self> {
        let file: TableFile = serde_json::from_str(text)?;
        check_n(file.n, cap)?;
        let values = LatticeVector::from_vec(file.n, file.values)?;
        Self::new(values, file.labels)
    }

    pub fn from_csv_str(text: &str, n_override: Option<usize>, cap: usize) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .flexible(false)
            .from_reader(text.as_bytes());

        let mut pairs: Vec<(u64, f64)> = Vec::new();
        for (row, record) in reader.records().enumerate() {
            let record = record?;
            if record.len() != 2 {
                return Err(Error::Parse(format!(
                    "csv row {} has {} fields (expected `mask,value`)",
                    row + 1,
                    record.len()
                )));
            }
            let mask_field = &record[0];
            let mask: u64 = match mask_field.parse() {
                Ok(m) => m,
                // A single leading non-numeric row is an optional header.
                Err(_) if row == 0 => continue,
                Err(_) => {
                    return Err(Error::Parse(format!(
                        "csv row {}: bad mask `{mask_field}`",
                        row + 1
                    )))
                }
            };
            let value: f64 = record[1].parse().map_err(|_| {
                Error::Parse(format!("csv row {}: bad value `{}`", row + 1, &record[1]))
            })?;
            pairs.push((mask, value));
        }

        let max_mask = pairs.iter().map(|&(m, _)| m).max().unwrap_or(0);
        let n = match n_override {
            Some(n) => n,
            // Smallest n with 2^n > max_mask, and at least one variable.
            None => {
                let mut n = 1;
                while (max_mask >> n) != 0 {
                    n += 1;
                }
                n
            }
        };
        check_n(n, cap)?;
        let len = 1usize << n;

        let mut values = vec![f64::NAN; len];
        let mut seen = vec![false; len];
        for (mask, value) in pairs {
            if mask >= len as u64 {
                return Err(Error::MaskOutOfRange { mask, n });
            }
            if seen[mask as usize] {
                return Err(Error::DuplicateMask { mask });
            }
            seen[mask as usize] = true;
            if !value.is_finite() {
                return Err(Error::NonFinite { mask });
            }
            values[mask as usize] = value;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::MissingMask {
                mask: missing as u64,
            });
        }
        Self::from_values(n, values)
    }

    /// Canonical single-line JSON encoding. Floats are rendered at 17
    /// significant digits, so equal tables produce byte-identical files.
    pub fn to_json_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\"n\":{}", self.n()));
        out.push_str(",\"values\":[");
        for (i, v) in self.values.as_slice().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&fmt_float(*v));
        }
        out.push(']');
        if let Some(labels) = &self.labels {
            out.push_str(",\"labels\":[");
            for (i, l) in labels.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&serde_json::to_string(l).expect("string serializes"));
            }
            out.push(']');
        }
        out.push_str("}\n");
        out
    }
}

/// Recipe for a synthetic game.
#[derive(Debug, Clone, PartialEq)]
pub struct GameSpec {
    pub n: usize,
    pub seed: u64,
    pub kind: GameKind,
}

/// The synthetic families used by tests, demos, and `synth`.
#[derive(Debug, Clone, PartialEq)]
pub enum GameKind {
    /// v(S) = Σ_{i∈S} w_i.
    Linear { weights: Vec<f64> },
    /// v(S) = Σ_k c_k · [S ⊇ T_k]: a sparse planted AND spectrum.
    PlantedAnd { plants: Vec<(u64, f64)> },
    /// v(S) = Σ_k c_k · [S ∩ T_k ≠ ∅]: a sparse planted OR structure.
    PlantedOr { plants: Vec<(u64, f64)> },
    /// Sum of a planted AND part and a planted OR part.
    PlantedMixed {
        and_plants: Vec<(u64, f64)>,
        or_plants: Vec<(u64, f64)>,
    },
    /// i.i.d. uniform values in [−1, 1], fully determined by the seed.
    Random,
}

fn check_plants(plants: &[(u64, f64)], n: usize) -> Result<()> {
    for &(mask, _) in plants {
        if mask == 0 {
            return Err(Error::EmptyPlantedMask);
        }
        if mask >= (1u64 << n) {
            return Err(Error::MaskOutOfRange { mask, n });
        }
    }
    Ok(())
}

fn add_planted_and(values: &mut [f64], plants: &[(u64, f64)]) {
    for &(t, c) in plants {
        for (s, v) in values.iter_mut().enumerate() {
            if s as u64 & t == t {
                *v += c;
            }
        }
    }
}

fn add_planted_or(values: &mut [f64], plants: &[(u64, f64)]) {
    for &(t, c) in plants {
        for (s, v) in values.iter_mut().enumerate() {
            if s as u64 & t != 0 {
                *v += c;
            }
        }
    }
}

/// Builds the value table a [`GameSpec`] describes. Deterministic: the same
/// spec (seed included) always yields a bit-identical table.
pub fn synth_game(spec: &GameSpec, cap: usize) -> Result<ValueTable> {
    check_n(spec.n, cap)?;
    let n = spec.n;
    let len = 1usize << n;
    let mut values = vec![0.0; len];
    match &spec.kind {
        GameKind::Linear { weights } => {
            if weights.len() != n {
                return Err(Error::BadWeightCount {
                    expected: n,
                    got: weights.len(),
                });
            }
            for (s, v) in values.iter_mut().enumerate() {
                // fold from +0.0: the std Sum identity is -0.0, which would
                // leak a negative zero into v(∅).
                *v = (0..n)
                    .filter(|i| (s >> i) & 1 == 1)
                    .fold(0.0, |acc, i| acc + weights[i]);
            }
        }
        GameKind::PlantedAnd { plants } => {
            check_plants(plants, n)?;
            add_planted_and(&mut values, plants);
        }
        GameKind::PlantedOr { plants } => {
            check_plants(plants, n)?;
            add_planted_or(&mut values, plants);
        }
        GameKind::PlantedMixed {
            and_plants,
            or_plants,
        } => {
            check_plants(and_plants, n)?;
            check_plants(or_plants, n)?;
            add_planted_and(&mut values, and_plants);
            add_planted_or(&mut values, or_plants);
        }
        GameKind::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            for v in values.iter_mut() {
                *v = rng.gen_range(-1.0..=1.0);
            }
        }
    }
    ValueTable::from_values(n, values)
}

/// Parses a coalition given as comma-separated 0-indexed variable indices,
/// e.g. `"0,2"` → {0,2}.
pub fn parse_coalition(text: &str, n: usize) -> Result<CoalitionMask> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    let mut bits: u64 = 0;
    for part in trimmed.split(',') {
        let part = part.trim();
        let index: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable index `{part}` in coalition")))?;
        if index >= n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        if (bits >> index) & 1 == 1 {
            return Err(Error::DuplicateIndex { index });
        }
        bits |= 1 << index;
    }
    CoalitionMask::new(bits, n)
}
