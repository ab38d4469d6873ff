//! The on-disk manifold format: one JSON object with the genus and the four
//! gluing blocks.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::IntMatrix;
use crate::splitting::{validate, GluingData, SplittingError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldFile {
    pub genus: usize,
    #[serde(rename = "R")]
    pub r: Vec<Vec<i64>>,
    #[serde(rename = "P")]
    pub p: Vec<Vec<i64>>,
    #[serde(rename = "S")]
    pub s: Vec<Vec<i64>>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("input is not UTF-8 JSON: {0}")]
    Malformed(String),
    #[error("block {block} must be {genus}x{genus}")]
    Dimension { block: &'static str, genus: usize },
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("entry of block {block} does not fit in a 64-bit integer")]
    EntryOverflow { block: &'static str },
    #[error(transparent)]
    Invalid(SplittingError),
}

impl ManifoldFile {
    pub fn from_gluing(g: &GluingData, name: Option<String>) -> Result<Self, FileError> {
        let rows = |m: &IntMatrix, block: &'static str| -> Result<Vec<Vec<i64>>, FileError> {
            m.to_rows()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|x| x.to_i64().ok_or(FileError::EntryOverflow { block }))
                        .collect()
                })
                .collect()
        };
        Ok(ManifoldFile {
            genus: g.genus(),
            r: rows(g.r(), "R")?,
            p: rows(g.p(), "P")?,
            s: rows(g.s(), "S")?,
            q: rows(g.q(), "Q")?,
            name,
        })
    }

    /// Checks shapes only; relations are checked by [`ManifoldFile::to_gluing`].
    pub fn blocks(&self) -> Result<[IntMatrix; 4], FileError> {
        if self.genus == 0 {
            return Err(FileError::ZeroGenus);
        }
        let g = self.genus;
        let block = |rows: &Vec<Vec<i64>>, block: &'static str| {
            if rows.len() != g || rows.iter().any(|r| r.len() != g) {
                return Err(FileError::Dimension { block, genus: g });
            }
            let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
            Ok(IntMatrix::new(g, g, entries).expect("shape checked"))
        };
        Ok([
            block(&self.r, "R")?,
            block(&self.p, "P")?,
            block(&self.s, "S")?,
            block(&self.q, "Q")?,
        ])
    }

    pub fn to_gluing(&self) -> Result<GluingData, FileError> {
        let [r, p, s, q] = self.blocks()?;
        validate(r, p, s, q).map_err(FileError::Invalid)
    }

    /// Compact JSON followed by a newline.
    pub fn to_canonical_string(&self) -> String {
        let mut out = serde_json::to_string(self).expect("plain data serializes");
        out.push('\n');
        out
    }
}

/// Parses and validates a manifold file.
pub fn parse_manifold(bytes: &[u8]) -> Result<(ManifoldFile, GluingData), FileError> {
    let text = std::str::from_utf8(bytes).map_err(|e| FileError::Malformed(e.to_string()))?;
    let file: ManifoldFile =
        serde_json::from_str(text).map_err(|e| FileError::Malformed(e.to_string()))?;
    let g = file.to_gluing()?;
    Ok((file, g))
}
