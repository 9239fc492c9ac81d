//! JSON channel files:
//!
//! ```json
//! {"dim_in": 2, "dim_out": 2, "kraus": [[[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]]}
//! ```
//!
//! `kraus` is a list of `dim_out × dim_in` matrices given row by row, each
//! complex entry a `[re, im]` pair. Numbers are written in shortest
//! round-trip form, so `load ∘ save` is bit-exact.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// Trace-preservation tolerance on ingestion. Looser than the internal
/// tolerance so that externally produced data is admitted.
pub const INGEST_TP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelFile {
    pub dim_in: usize,
    pub dim_out: usize,
    pub kraus: Vec<Vec<Vec<[f64; 2]>>>,
}

impl ChannelFile {
    pub fn from_channel(ch: &KrausChannel) -> Self {
        let kraus = ch
            .kraus()
            .iter()
            .map(|k| {
                (0..k.rows())
                    .map(|r| (0..k.cols()).map(|c| [k[(r, c)].re, k[(r, c)].im]).collect())
                    .collect()
            })
            .collect();
        Self { dim_in: ch.dim_in(), dim_out: ch.dim_out(), kraus }
    }

    /// Shape checks with per-field diagnostics, then the ingestion CPT check.
    pub fn to_channel(&self) -> Result<KrausChannel> {
        if self.dim_in == 0 || self.dim_out == 0 {
            return Err(Error::Format("dim_in and dim_out must be positive".into()));
        }
        if self.kraus.is_empty() {
            return Err(Error::Format("field `kraus` is empty".into()));
        }
        let mut ops = Vec::with_capacity(self.kraus.len());
        for (k, rows) in self.kraus.iter().enumerate() {
            if rows.len() != self.dim_out {
                return Err(Error::Format(format!(
                    "kraus[{k}] has {} rows, expected dim_out = {}",
                    rows.len(),
                    self.dim_out
                )));
            }
            let mut data = Vec::with_capacity(self.dim_out * self.dim_in);
            for (r, row) in rows.iter().enumerate() {
                if row.len() != self.dim_in {
                    return Err(Error::Format(format!(
                        "kraus[{k}][{r}] has {} entries, expected dim_in = {}",
                        row.len(),
                        self.dim_in
                    )));
                }
                data.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
            }
            let m = ComplexMatrix::new(self.dim_out, self.dim_in, data).map_err(|e| match e {
                Error::NonFinite { row, col } => {
                    Error::Format(format!("kraus[{k}][{row}][{col}] is not finite"))
                }
                other => other,
            })?;
            ops.push(m);
        }
        KrausChannel::new_cpt(self.dim_in, self.dim_out, ops, INGEST_TP_TOL)
    }
}

pub fn parse_channel(json: &str) -> Result<KrausChannel> {
    let file: ChannelFile = serde_json::from_str(json).map_err(|e| Error::Format(e.to_string()))?;
    file.to_channel()
}

pub fn render_channel(ch: &KrausChannel) -> String {
    let mut s = serde_json::to_string_pretty(&ChannelFile::from_channel(ch)).expect("finite entries serialize");
    s.push('\n');
    s
}

pub fn load_channel(path: impl AsRef<Path>) -> Result<KrausChannel> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_channel(&text).map_err(|e| match e {
        Error::Format(msg) => Error::Format(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn save_channel(ch: &KrausChannel, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_channel(ch))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn malformed_json_is_format_error() {
        let err = parse_channel("{\"dim_in\": 2,").unwrap_err();
        match err {
            Error::Format(msg) => assert!(msg.contains("line 1"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn wrong_row_count_names_field() {
        let err = parse_channel(r#"{"dim_in": 1, "dim_out": 2, "kraus": [[[[1.0, 0.0]]]]}"#).unwrap_err();
        match err {
            Error::Format(msg) => assert!(msg.contains("kraus[0]"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_field_rejected() {
        let json = r#"{"dim_in": 1, "dim_out": 1, "kraus": [[[[1.0, 0.0]]]], "extra": 1}"#;
        assert!(matches!(parse_channel(json), Err(Error::Format(_))));
    }

    #[test]
    fn sub_normalized_channel_reports_residual() {
        let s = 0.9f64.sqrt();
        let json = format!(r#"{{"dim_in": 2, "dim_out": 2, "kraus": [[[[{s}, 0.0], [0.0, 0.0]], [[0.0, 0.0], [{s}, 0.0]]]]}}"#);
        match parse_channel(&json).unwrap_err() {
            Error::Validation { residual } => assert!((residual - 0.1).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn identity_parses() {
        let json = r#"{"dim_in": 2, "dim_out": 2, "kraus": [[[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]]}"#;
        assert_eq!(parse_channel(json).unwrap(), KrausChannel::identity(2));
    }
}
