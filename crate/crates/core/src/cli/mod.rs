//! Library side of the `qcap` command-line tool: depolarizing scans to CSV,
//! anti-degradability verification, PPT reports and channel contamination
//! of JSON channel files.
//!
//! Exit statuses are stable:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage error (bad flags or parameter ranges) |
//! | 2 | file format, validation or i/o error |
//! | 3 | out of domain: no anti-degrading map for `x < 1/2` |
//! | 4 | a numerical identity check failed its tolerance |

mod channel_file;
mod reports;
mod scan;

use std::path::Path;

pub use channel_file::{
    load_channel, parse_channel, render_channel, save_channel, ChannelFile, INGEST_TP_TOL,
};
pub use reports::{ppt_report, verify, PptReport, VerifyReport};
pub use scan::{
    format_float, scan_depolarizing, scan_grid, scan_to_csv_string, write_scan_csv, ScanConfig, ScanRecord,
    CSV_HEADER, MAX_SCAN_DIM, MIN_SCAN_DIM,
};

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::families::contaminate;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const FORMAT: i32 = 2;
    pub const OUT_OF_DOMAIN: i32 = 3;
    pub const CHECK_FAILED: i32 = 4;
}

/// Exit status for an error surfaced by a command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) => exit::USAGE,
        Error::ParameterDomain(_) => exit::OUT_OF_DOMAIN,
        Error::Format(_) | Error::Validation { .. } | Error::Io(_) => exit::FORMAT,
        Error::Dimension(_)
        | Error::Hermiticity(_)
        | Error::NotPositive(_)
        | Error::Normalization(_)
        | Error::NonFinite { .. } => exit::FORMAT,
    }
}

/// Loads `input`, prepends depolarizing noise of strength `x` and writes the
/// result to `output`.
pub fn contaminate_file(input: impl AsRef<Path>, x: f64, output: impl AsRef<Path>) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Usage(format!("--x must be in [0, 1], got {x}")));
    }
    let lambda = load_channel(input)?;
    if !lambda.is_square() {
        return Err(Error::Format(format!(
            "contamination needs dim_in = dim_out, file has {} -> {}",
            lambda.dim_in(),
            lambda.dim_out()
        )));
    }
    if lambda.dim_out() < 2 {
        return Err(Error::Format("contamination needs dimension at least 2".into()));
    }
    let noisy = contaminate(&lambda, x)?;
    save_channel(&noisy, output)?;
    Ok(noisy)
}
