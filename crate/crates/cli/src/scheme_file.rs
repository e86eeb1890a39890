//! JSON scheme format.
//!
//! ```json
//! {
//!   "label": "...", "n": 2, "m": 1,
//!   "states": { "00": {"amplitudes": [[re, im], ...]}, "01": {"matrix": [[[re, im], ...], ...]} },
//!   "povms": [ {"e0": [[[re, im], ...], ...]} ]
//! }
//! ```
//!
//! `e1` is always derived as `I − e0`. Every state key must be an `n`-bit
//! string and all `2^n` keys must be present.

use std::collections::BTreeMap;
use std::path::Path;

use qrac_core::bits::{format_bits, parse_bits_exact};
use qrac_core::schemes::MAX_BITS;
use qrac_core::{BinaryPovm, CMatrix, DensityMatrix, PureState, QracScheme, C64};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub type JsonMatrix = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<JsonMatrix>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PovmEntry {
    pub e0: JsonMatrix,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub label: String,
    pub n: usize,
    pub m: usize,
    pub states: BTreeMap<String, StateEntry>,
    pub povms: Vec<PovmEntry>,
}

fn to_json_matrix(m: &CMatrix) -> JsonMatrix {
    m.rows()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

fn invariant(path: &str, e: qrac_core::QracError) -> CliError {
    CliError::Invariant(format!("{path}: {e}"))
}

fn from_json_matrix(path: &str, rows: &JsonMatrix, dim: usize) -> CliResult<CMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(CliError::Malformed(format!(
            "{path}: expected a {dim}x{dim} matrix"
        )));
    }
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|[re, im]| C64::new(*re, *im)).collect())
        .collect();
    CMatrix::from_rows(rows).map_err(|e| CliError::Malformed(format!("{path}: {e}")))
}

impl SchemeFile {
    /// Stores every state as a density matrix, which round-trips exactly.
    pub fn from_scheme(scheme: &QracScheme) -> Self {
        let states = scheme
            .states()
            .iter()
            .enumerate()
            .map(|(x, rho)| {
                (
                    format_bits(x, scheme.n()),
                    StateEntry {
                        amplitudes: None,
                        matrix: Some(to_json_matrix(rho.matrix())),
                    },
                )
            })
            .collect();
        let povms = scheme
            .povms()
            .iter()
            .map(|p| PovmEntry {
                e0: to_json_matrix(p.e0()),
            })
            .collect();
        Self {
            label: scheme.label().to_string(),
            n: scheme.n(),
            m: scheme.m(),
            states,
            povms,
        }
    }

    pub fn to_scheme(&self) -> CliResult<QracScheme> {
        let (n, m) = (self.n, self.m);
        if n == 0 || n > MAX_BITS {
            return Err(CliError::Malformed(format!(
                "n: {n} outside 1..={MAX_BITS}"
            )));
        }
        if m == 0 || m > 8 {
            return Err(CliError::Malformed(format!("m: {m} outside 1..=8")));
        }
        let dim = 1usize << m;
        let mut slots: Vec<Option<DensityMatrix>> = vec![None; 1 << n];
        for (key, entry) in &self.states {
            let path = format!("states.{key:?}");
            let x = parse_bits_exact(key, n)
                .map_err(|_| CliError::Malformed(format!("{path}: key is not a {n}-bit string")))?;
            let rho = match (&entry.amplitudes, &entry.matrix) {
                (Some(amps), None) => {
                    if amps.len() != dim {
                        return Err(CliError::Malformed(format!(
                            "{path}.amplitudes: expected {dim} entries, got {}",
                            amps.len()
                        )));
                    }
                    let amps = amps.iter().map(|[re, im]| C64::new(*re, *im)).collect();
                    PureState::new(amps)
                        .map_err(|e| invariant(&format!("{path}.amplitudes"), e))?
                        .outer_product()
                }
                (None, Some(rows)) => {
                    let mpath = format!("{path}.matrix");
                    let mat = from_json_matrix(&mpath, rows, dim)?;
                    DensityMatrix::new(mat).map_err(|e| invariant(&mpath, e))?
                }
                _ => {
                    return Err(CliError::Malformed(format!(
                        "{path}: exactly one of \"amplitudes\" or \"matrix\" is required"
                    )))
                }
            };
            slots[x] = Some(rho);
        }
        let states = slots
            .into_iter()
            .enumerate()
            .map(|(x, s)| {
                s.ok_or_else(|| {
                    CliError::Malformed(format!("states: missing key {:?}", format_bits(x, n)))
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        if self.povms.len() != n {
            return Err(CliError::Malformed(format!(
                "povms: expected {n} entries, got {}",
                self.povms.len()
            )));
        }
        let povms = self
            .povms
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let path = format!("povms[{i}].e0");
                let e0 = from_json_matrix(&path, &p.e0, dim)?;
                BinaryPovm::from_e0(e0).map_err(|e| invariant(&path, e))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(QracScheme::new(self.label.clone(), n, m, states, povms)?)
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn load(path: &Path) -> CliResult<QracScheme> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)?.to_scheme()
    }
}
