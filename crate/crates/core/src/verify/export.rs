//! Windowed action matrices in the canonical basis, serialized as JSON with
//! exact `p/q` entries.

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{format_pq, parse_rational, Rational};
use crate::linear::{crs_via_composition, generators, Cached, GlModule, LinComb};

use super::config::{Config, Target};
use super::window_shifts;

/// An operator to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    /// `E_lm`
    Generator(usize, usize),
    /// `c_rs`
    Casimir(usize, usize),
}

impl Operator {
    pub fn name(self) -> String {
        match self {
            Operator::Generator(l, m) => format!("E_{l}{m}"),
            Operator::Casimir(r, s) => format!("c_{r}{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// Sparse matrix; column `j` is the image of `basis[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionMatrix {
    pub name: String,
    pub entries: Vec<MatrixEntry>,
    /// Nonzero image terms whose symbol lies outside the window.
    pub dropped: usize,
}

impl ActionMatrix {
    pub fn to_map(&self) -> Result<BTreeMap<(usize, usize), Rational>> {
        self.entries
            .iter()
            .map(|e| Ok(((e.row, e.col), parse_rational(&e.value)?)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportedAction {
    pub frame: String,
    pub window: i64,
    pub basis: Vec<String>,
    pub matrices: Vec<ActionMatrix>,
}

impl ExportedAction {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let out: ExportedAction = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        for m in &out.matrices {
            m.to_map()?;
        }
        Ok(out)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.to_json()? + "\n")?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn matrix(&self, name: &str) -> Option<&ActionMatrix> {
        self.matrices.iter().find(|m| m.name == name)
    }
}

/// Tabulates each operator on `basis`.
pub fn export_action<M: GlModule>(
    module: &M,
    frame: String,
    window: i64,
    basis: &[M::Basis],
    ops: &[Operator],
) -> Result<ExportedAction> {
    let index: HashMap<&M::Basis, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let cached = Cached::new(module);
    let mut matrices = Vec::with_capacity(ops.len());
    for &op in ops {
        let columns: Vec<LinComb<M::Basis>> = basis
            .par_iter()
            .map(|b| {
                let x = LinComb::basis(b.clone());
                match op {
                    Operator::Generator(l, m) => cached.act(l, m, &x),
                    Operator::Casimir(r, s) => crs_via_composition(&cached, r, s, &x),
                }
            })
            .collect::<Result<_>>()?;
        let mut entries = Vec::new();
        let mut dropped = 0;
        for (col, image) in columns.iter().enumerate() {
            for (b, c) in image.iter() {
                match index.get(b) {
                    Some(&row) => entries.push(MatrixEntry { row, col, value: format_pq(c) }),
                    None => dropped += 1,
                }
            }
        }
        entries.sort_by_key(|e| (e.row, e.col));
        matrices.push(ActionMatrix { name: op.name(), entries, dropped });
    }
    Ok(ExportedAction {
        frame,
        window,
        basis: basis.iter().map(|b| b.to_string()).collect(),
        matrices,
    })
}

/// All generators plus `c_22`, and `c_k2` on a singular frame.
pub fn default_operators(n: usize, k: Option<usize>) -> Vec<Operator> {
    let mut ops: Vec<Operator> = generators(n).into_iter().map(|(l, m)| Operator::Generator(l, m)).collect();
    ops.push(Operator::Casimir(2, 2));
    if let Some(k) = k.filter(|&k| k != 2) {
        ops.push(Operator::Casimir(k, 2));
    }
    ops
}

/// Tabulates the configured module on its window.
pub fn export_from_config(config: &Config) -> Result<ExportedAction> {
    let target = config.target()?;
    match &target {
        Target::Generic(m) => export_action(
            m,
            target.describe(),
            config.window,
            &window_shifts(config.n, config.window),
            &default_operators(config.n, None),
        ),
        Target::Singular(m) => export_action(
            m,
            target.describe(),
            config.window,
            &m.window_symbols(config.window),
            &default_operators(config.n, Some(m.frame().k())),
        ),
    }
}

/// Writes `matrices.json` into `dir` and returns its path.
pub fn write_export(exported: &ExportedAction, dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join("matrices.json");
    exported.write(&path)?;
    Ok(path)
}
