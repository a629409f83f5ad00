//! Manifest loading and validation. Manifests are TOML; rationals are
//! strings like "3/4" so exactness survives the trip, and floats are
//! permitted only for `step` and `tolerance`.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use sesqui_core::engine::DeltaPair;
use sesqui_core::{identifiers, parse_poly, Frame, FrameAlgebra, Rat, Symbols, VectorFieldExpr};

use crate::CliError;

pub const JET_ORDER: usize = 4;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// Entries `[i, j, k, "p/q"]` (1-based): the e_k-coefficient of
    /// [e_i, e_j]. Omitted entries are zero; the antisymmetric counterpart
    /// is filled in automatically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<(usize, usize, usize, String)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub algebra: AlgebraSection,
    #[serde(default = "default_mode")]
    pub mode: String,
    pub field: Vec<String>,
    pub delta1: String,
    pub delta2: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jet_direction: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    /// Variation direction V for `variation-test`, as rational literals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<String>>,
    /// Optional assertion: "vector-field" or "map".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
}

fn default_mode() -> String {
    "left_invariant".to_string()
}

/// A validated manifest: the geometry package, the field, and the deltas.
#[derive(Debug)]
pub struct LoadedManifest {
    pub manifest: Manifest,
    pub frame: Frame,
    pub field: VectorFieldExpr,
    pub deltas: DeltaPair,
}

pub fn parse_manifest(text: &str) -> Result<Manifest, CliError> {
    toml::from_str(text).map_err(|e| CliError::input(format!("manifest parse error: {e}")))
}

/// Canonical printing; `parse_manifest(print_manifest(m)) == m`.
pub fn print_manifest(m: &Manifest) -> String {
    toml::to_string(m).expect("manifest serialization")
}

fn build_algebra(section: &AlgebraSection) -> Result<FrameAlgebra, CliError> {
    match (&section.preset, &section.dim, &section.brackets) {
        (Some(name), None, None) => match name.as_str() {
            "nil" => Ok(FrameAlgebra::nil()),
            "sol" => Ok(FrameAlgebra::sol()),
            other => Err(CliError::input(format!(
                "unknown preset `{other}` (available: nil, sol)"
            ))),
        },
        (None, Some(dim), Some(brackets)) => {
            let mut entries = Vec::with_capacity(brackets.len());
            for &(i, j, k, ref v) in brackets {
                for (label, idx) in [("i", i), ("j", j), ("k", k)] {
                    if idx == 0 || idx > *dim {
                        return Err(CliError::input(format!(
                            "bracket index {label} = {idx} out of range 1..={dim}"
                        )));
                    }
                }
                let value = Rat::from_str(v)
                    .map_err(|e| CliError::input(format!("bracket coefficient `{v}`: {e}")))?;
                entries.push((i - 1, j - 1, k - 1, value));
            }
            FrameAlgebra::from_brackets(*dim, &entries).map_err(|e| CliError::input(e.to_string()))
        }
        (None, Some(_), None) | (None, None, Some(_)) => Err(CliError::input(
            "an explicit algebra needs both `dim` and `brackets`".to_string(),
        )),
        (Some(_), _, _) => Err(CliError::input(
            "give either `preset` or an explicit `dim` + `brackets`, not both".to_string(),
        )),
        (None, None, None) => Err(CliError::input(
            "the [algebra] section needs `preset` or `dim` + `brackets`".to_string(),
        )),
    }
}

fn is_jet_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next() == Some('f') && {
        let rest: String = chars.collect();
        !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit())
    }
}

/// Validates the manifest and assembles the frame, the field expression,
/// and the delta pair.
pub fn load_manifest(m: Manifest) -> Result<LoadedManifest, CliError> {
    let algebra = build_algebra(&m.algebra)?;
    let dim = algebra.dim();
    if m.field.len() != dim {
        return Err(CliError::input(format!(
            "field has {} coefficients, the algebra has dimension {dim}",
            m.field.len()
        )));
    }

    let frame = match m.mode.as_str() {
        "left_invariant" => {
            let mut names: BTreeSet<String> = BTreeSet::new();
            for literal in &m.field {
                for ident in identifiers(literal)
                    .map_err(|e| CliError::input(format!("field literal `{literal}`: {e}")))?
                {
                    if is_jet_symbol(&ident) {
                        return Err(CliError::input(format!(
                            "jet symbol `{ident}` is not allowed in left_invariant mode; \
                             constant symbols and jet variables cannot be mixed"
                        )));
                    }
                    names.insert(ident);
                }
            }
            let symbols = Symbols::new(names.into_iter().collect::<Vec<_>>());
            Frame::left_invariant(algebra, symbols).map_err(|e| CliError::input(e.to_string()))?
        }
        "jet" => {
            let direction = m.jet_direction.ok_or_else(|| {
                CliError::input("jet mode requires `jet_direction` (1-based frame index)")
            })?;
            if direction == 0 || direction > dim {
                return Err(CliError::input(format!(
                    "jet_direction {direction} out of range 1..={dim}"
                )));
            }
            for literal in &m.field {
                for ident in identifiers(literal)
                    .map_err(|e| CliError::input(format!("field literal `{literal}`: {e}")))?
                {
                    if !is_jet_symbol(&ident) {
                        return Err(CliError::input(format!(
                            "symbol `{ident}` is not a jet variable; jet mode admits only \
                             f0..f{JET_ORDER}"
                        )));
                    }
                }
            }
            Frame::jet(algebra, direction - 1, JET_ORDER, &[])
                .map_err(|e| CliError::input(e.to_string()))?
        }
        other => {
            return Err(CliError::input(format!(
                "unknown mode `{other}` (expected left_invariant or jet)"
            )))
        }
    };

    let coeffs = m
        .field
        .iter()
        .map(|literal| {
            parse_poly(literal, &frame.symbols)
                .map_err(|e| CliError::input(format!("field literal `{literal}`: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let field = VectorFieldExpr::new(coeffs);

    let deltas = parse_delta_pair(&m.delta1, &m.delta2)?;

    Ok(LoadedManifest {
        manifest: m,
        frame,
        field,
        deltas,
    })
}

pub fn parse_rat(text: &str, what: &str) -> Result<Rat, CliError> {
    Rat::from_str(text).map_err(|e| CliError::input(format!("{what} `{text}`: {e}")))
}

pub fn parse_delta_pair(d1: &str, d2: &str) -> Result<DeltaPair, CliError> {
    let delta1 = parse_rat(d1, "delta1")?;
    let delta2 = parse_rat(d2, "delta2")?;
    DeltaPair::new(delta1, delta2).map_err(|e| CliError::input(e.to_string()))
}

pub fn parse_direction(m: &Manifest, dim: usize) -> Result<Vec<Rat>, CliError> {
    let lits = m.direction.as_ref().ok_or_else(|| {
        CliError::input("variation-test requires a `direction` list in the manifest")
    })?;
    if lits.len() != dim {
        return Err(CliError::input(format!(
            "direction has {} entries, the algebra has dimension {dim}",
            lits.len()
        )));
    }
    lits.iter()
        .map(|l| parse_rat(l, "direction entry"))
        .collect()
}

/// The field coefficients as numbers, required by `variation-test`.
pub fn numeric_field(loaded: &LoadedManifest) -> Result<Vec<f64>, CliError> {
    loaded
        .field
        .coeffs()
        .iter()
        .map(|p| {
            if p.is_constant() {
                Ok(p.constant_term().to_f64())
            } else {
                Err(CliError::input(
                    "variation-test requires a numeric field (constant coefficients)".to_string(),
                ))
            }
        })
        .collect()
}
