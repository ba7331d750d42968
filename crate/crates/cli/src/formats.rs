//! JSON file formats for Seifert matrices, framed linking matrices and LMO
//! wheel data. All numbers are exact rational strings such as `"-1"` or `"1/2"`.

use std::collections::BTreeMap;
use std::path::Path;

use nabla_core::mmr::{nu_wheels, LmoWheelData};
use nabla_core::seifert::SeifertMatrix;
use nabla_core::surgery::FramedLinkMatrix;
use nabla_core::wheels::{WheelIndex, WheelSeries};
use nabla_core::{RatMatrix, Rational};
use serde::{Deserialize, Serialize};

use crate::parse::parse_rational;
use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeifertFile {
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkingFile {
    pub labels: Vec<String>,
    pub surgery: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

/// Wheel coefficients are keyed `"w2"`, `"w4"`, ...
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LmoWheelFile {
    pub order: usize,
    pub h1_order: u64,
    pub knot_wheels: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_wheels: Option<BTreeMap<String, String>>,
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

pub fn rational_matrix(rows: &[Vec<String>]) -> Result<RatMatrix, CliError> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    parse_rational(s).map_err(|e| {
                        CliError::Format(format!("matrix entry ({i}, {j}) {s:?}: {e}"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.is_empty() {
        return Ok(RatMatrix::zeros(0, 0));
    }
    Ok(RatMatrix::from_rows(parsed)?)
}

fn render_matrix(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

impl SeifertFile {
    pub fn from_matrix(v: &SeifertMatrix, components: usize, name: Option<String>) -> Self {
        SeifertFile {
            matrix: render_matrix(v.entries()),
            components: Some(components),
            name,
        }
    }

    pub fn seifert(&self) -> Result<SeifertMatrix, CliError> {
        Ok(SeifertMatrix::new(rational_matrix(&self.matrix)?)?)
    }

    pub fn components(&self) -> usize {
        self.components.unwrap_or(1)
    }
}

impl LinkingFile {
    pub fn framed_link(&self) -> Result<FramedLinkMatrix, CliError> {
        let surgery: Vec<&str> = self.surgery.iter().map(String::as_str).collect();
        Ok(FramedLinkMatrix::new(
            self.labels.clone(),
            &surgery,
            rational_matrix(&self.matrix)?,
        )?)
    }
}

fn wheel_map(w: &WheelSeries) -> BTreeMap<String, String> {
    w.coefficients()
        .map(|(i, a)| (format!("w{}", i.index()), a.to_string()))
        .collect()
}

fn wheel_series(order: usize, map: &BTreeMap<String, String>) -> Result<WheelSeries, CliError> {
    let mut out = WheelSeries::new(order);
    for (key, value) in map {
        let index = key
            .strip_prefix('w')
            .and_then(|n| n.parse::<u32>().ok())
            .and_then(WheelIndex::new)
            .ok_or_else(|| {
                CliError::Format(format!("bad wheel key {key:?}; expected w2, w4, ..."))
            })?;
        if index.degree() > order {
            return Err(CliError::Format(format!(
                "wheel {key} exceeds order {order}"
            )));
        }
        let a: Rational =
            parse_rational(value).map_err(|e| CliError::Format(format!("{key}: {e}")))?;
        out.set(index, a);
    }
    Ok(out)
}

impl LmoWheelFile {
    pub fn from_data(d: &LmoWheelData) -> Self {
        LmoWheelFile {
            order: d.order,
            h1_order: d.h1_order,
            knot_wheels: wheel_map(&d.knot_wheels),
            nu_wheels: Some(wheel_map(&d.nu_wheels)),
        }
    }

    /// A missing `nu_wheels` entry stands for the universal value.
    pub fn data(&self) -> Result<LmoWheelData, CliError> {
        let nu = match &self.nu_wheels {
            Some(m) => wheel_series(self.order, m)?,
            None => nu_wheels(self.order),
        };
        Ok(LmoWheelData {
            knot_wheels: wheel_series(self.order, &self.knot_wheels)?,
            nu_wheels: nu,
            h1_order: self.h1_order,
            order: self.order,
        })
    }
}
