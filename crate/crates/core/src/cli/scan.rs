use std::io::Write;

use rayon::prelude::*;

use crate::analysis::{
    antidegradability_residual, is_ppt, maximize_coherent_information, ppt_spectrum, OptimizerConfig,
    ANTIDEGRADABLE_THRESHOLD,
};
use crate::error::{Error, Result};
use crate::families::{depolarizing, NoiseParameter};

pub const CSV_HEADER: &str = "d,x,residual,min_ppt_eig,ppt,antidegradable_constructible,coherent_info";

pub const MIN_SCAN_DIM: usize = 2;
pub const MAX_SCAN_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub d: usize,
    pub x_start: f64,
    pub x_end: f64,
    pub steps: usize,
    pub with_coherent_info: bool,
    /// Grid point `k` runs the optimizer with base seed `seed + k`.
    pub seed: u64,
    pub parallel: bool,
}

impl ScanConfig {
    pub fn new(d: usize, x_start: f64, x_end: f64, steps: usize) -> Self {
        Self { d, x_start, x_end, steps, with_coherent_info: false, seed: 0, parallel: true }
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_SCAN_DIM..=MAX_SCAN_DIM).contains(&self.d) {
            return Err(Error::Usage(format!(
                "--dim must be in {MIN_SCAN_DIM}..={MAX_SCAN_DIM}, got {}",
                self.d
            )));
        }
        if !(0.0 <= self.x_start && self.x_start <= self.x_end && self.x_end <= 1.0) {
            return Err(Error::Usage(format!(
                "need 0 <= x-start <= x-end <= 1, got [{}, {}]",
                self.x_start, self.x_end
            )));
        }
        if self.steps == 0 {
            return Err(Error::Usage("--steps must be at least 1".into()));
        }
        Ok(())
    }
}

/// One row of a depolarizing scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub d: usize,
    pub x: f64,
    /// Anti-degradability residual; absent where the map cannot be built.
    pub residual: Option<f64>,
    pub min_ppt_eig: f64,
    pub ppt: bool,
    pub coherent_info: Option<f64>,
    pub antidegradable_constructible: bool,
}

/// `x_start + k·(x_end − x_start)/(steps − 1)` with both endpoints exact; a
/// single point at `x_start` when `steps == 1`.
pub fn scan_grid(x_start: f64, x_end: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![x_start],
        n => (0..n)
            .map(|k| {
                if k == n - 1 {
                    x_end
                } else {
                    x_start + k as f64 * (x_end - x_start) / (n - 1) as f64
                }
            })
            .collect(),
    }
}

fn scan_point(cfg: &ScanConfig, index: usize, x: f64) -> Result<ScanRecord> {
    let p = NoiseParameter::new(cfg.d, x)?;
    let channel = depolarizing(p);
    let min_ppt_eig = ppt_spectrum(&channel)?[0];
    let constructible = x >= ANTIDEGRADABLE_THRESHOLD;
    let residual = if constructible { Some(antidegradability_residual(p)?) } else { None };
    let coherent_info = if cfg.with_coherent_info {
        let opt = OptimizerConfig {
            seed: cfg.seed.wrapping_add(index as u64),
            parallel: cfg.parallel,
            ..OptimizerConfig::default()
        };
        Some(maximize_coherent_information(&channel, &opt)?.value)
    } else {
        None
    };
    Ok(ScanRecord {
        d: cfg.d,
        x,
        residual,
        min_ppt_eig,
        ppt: is_ppt(min_ppt_eig),
        coherent_info,
        antidegradable_constructible: constructible,
    })
}

/// Evaluates every grid point, concurrently when `cfg.parallel`; records come
/// back in grid order.
pub fn scan_depolarizing(cfg: &ScanConfig) -> Result<Vec<ScanRecord>> {
    cfg.validate()?;
    let grid = scan_grid(cfg.x_start, cfg.x_end, cfg.steps);
    if cfg.parallel {
        grid.par_iter().enumerate().map(|(k, &x)| scan_point(cfg, k, x)).collect()
    } else {
        grid.iter().enumerate().map(|(k, &x)| scan_point(cfg, k, x)).collect()
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn format_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn format_opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

pub fn write_scan_csv<W: Write>(records: &[ScanRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.d,
            format_float(r.x),
            format_opt(r.residual),
            format_float(r.min_ppt_eig),
            r.ppt,
            r.antidegradable_constructible,
            format_opt(r.coherent_info),
        )?;
    }
    Ok(())
}

pub fn scan_to_csv_string(cfg: &ScanConfig) -> Result<String> {
    let records = scan_depolarizing(cfg)?;
    let mut buf = Vec::new();
    write_scan_csv(&records, &mut buf)?;
    Ok(String::from_utf8(buf).expect("ascii csv"))
}
