use std::fmt::Write as _;

use crate::analysis::{
    analytic_ppt_spectrum, antidegradability_residual, is_ppt, ppt_spectrum, ppt_threshold, PptSpectrum,
    ANTIDEGRADABLE_THRESHOLD,
};
use crate::channels::CHANNEL_EQ_TOL;
use crate::error::{Error, Result};
use crate::families::{
    antidegrading_map, complement_coherence, d_delta_squared, depolarizing, depolarizing_complement,
    AntiDegradingParams, NoiseParameter,
};

use super::exit;

fn noise_parameter(d: usize, x: f64) -> Result<NoiseParameter> {
    NoiseParameter::new(d, x).map_err(|e| Error::Usage(e.to_string()))
}

/// Outcome of checking `𝒩 ∘ 𝒟ₓᶜ = 𝒟ₓ` at one `(d, x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub d: usize,
    pub x: f64,
    pub d_delta_sq: f64,
    pub xi: f64,
    /// `None` below the anti-degradability threshold.
    pub params: Option<AntiDegradingParams>,
    pub depolarizing_kraus: usize,
    pub complement_kraus: usize,
    pub antidegrading_kraus: Option<usize>,
    pub residual: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.residual.is_some_and(|r| r < CHANNEL_EQ_TOL)
    }

    pub fn exit_code(&self) -> i32 {
        match self.residual {
            None => exit::OUT_OF_DOMAIN,
            Some(_) if self.passed() => exit::SUCCESS,
            Some(_) => exit::CHECK_FAILED,
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "depolarizing channel d = {}, x = {}", self.d, self.x);
        let _ = writeln!(s, "  xi          = {:.17e}", self.xi);
        let _ = writeln!(s, "  d*delta^2   = {:.17e}", self.d_delta_sq);
        let _ = writeln!(s, "  kraus count: channel {}, complement {}", self.depolarizing_kraus, self.complement_kraus);
        match (&self.params, self.residual) {
            (Some(p), Some(r)) => {
                let _ = writeln!(s, "  beta        = {:.17e}", p.beta);
                let _ = writeln!(s, "  delta       = {:.17e}", p.delta);
                let _ = writeln!(
                    s,
                    "  anti-degrading map: {} Kraus operators",
                    self.antidegrading_kraus.unwrap_or_default()
                );
                let _ = writeln!(s, "  Choi residual |N o Dc - D|_F = {r:.3e} (tolerance {CHANNEL_EQ_TOL:e})");
                let verdict = if self.passed() { "anti-degradable: identity holds" } else { "identity FAILED" };
                let _ = writeln!(s, "  {verdict}");
            }
            _ => {
                let _ = writeln!(
                    s,
                    "  not constructible: d*delta^2 < 0 requires x >= {ANTIDEGRADABLE_THRESHOLD}"
                );
            }
        }
        s
    }
}

pub fn verify(d: usize, x: f64) -> Result<VerifyReport> {
    let p = noise_parameter(d, x)?;
    let params = match AntiDegradingParams::solve(p) {
        Ok(params) => Some(params),
        Err(Error::ParameterDomain(_)) => None,
        Err(e) => return Err(e),
    };
    let (antidegrading_kraus, residual) = if params.is_some() {
        (Some(antidegrading_map(p)?.num_kraus()), Some(antidegradability_residual(p)?))
    } else {
        (None, None)
    };
    Ok(VerifyReport {
        d,
        x,
        d_delta_sq: d_delta_squared(x),
        xi: complement_coherence(p),
        params,
        depolarizing_kraus: depolarizing(p).num_kraus(),
        complement_kraus: depolarizing_complement(p).num_kraus(),
        antidegrading_kraus,
        residual,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PptReport {
    pub numeric: Vec<f64>,
    pub analytic: PptSpectrum,
    pub threshold: f64,
}

impl PptReport {
    pub fn min_eigenvalue(&self) -> f64 {
        self.numeric[0]
    }

    pub fn ppt(&self) -> bool {
        is_ppt(self.min_eigenvalue())
    }

    /// Largest element-wise gap between the numeric and closed-form spectra.
    pub fn max_deviation(&self) -> f64 {
        self.numeric.iter().zip(&self.analytic.eigenvalues).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    pub fn render(&self) -> String {
        let a = &self.analytic;
        let mut s = String::new();
        let _ = writeln!(s, "partial-transposed Choi spectrum, d = {}, x = {}", a.d, a.x);
        let _ = writeln!(s, "  symmetric     (1-x)+x/d  = {:.17e}  x{}", a.sym_value, a.sym_multiplicity());
        let _ = writeln!(s, "  antisymmetric -(1-x)+x/d = {:.17e}  x{}", a.antisym_value, a.antisym_multiplicity());
        let _ = writeln!(s, "  numeric min eigenvalue   = {:.17e}", self.min_eigenvalue());
        let _ = writeln!(s, "  max |numeric - analytic| = {:.3e}", self.max_deviation());
        let _ = writeln!(s, "  PPT (entanglement binding): {}", self.ppt());
        let _ = writeln!(s, "  PPT threshold d/(d+1)    = {:.17e}", self.threshold);
        let _ = writeln!(s, "  anti-degradable from x   = {ANTIDEGRADABLE_THRESHOLD}");
        s
    }
}

pub fn ppt_report(d: usize, x: f64) -> Result<PptReport> {
    let p = noise_parameter(d, x)?;
    Ok(PptReport {
        numeric: ppt_spectrum(&depolarizing(p))?,
        analytic: analytic_ppt_spectrum(p),
        threshold: ppt_threshold(d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_boundary() {
        let r = verify(4, 0.5).unwrap();
        assert_eq!(r.exit_code(), exit::SUCCESS);
        let p = r.params.unwrap();
        assert_eq!(p.delta, 0.0);
        assert!((p.beta - 1.0).abs() < 1e-15);
    }

    #[test]
    fn verify_full_noise() {
        let r = verify(2, 1.0).unwrap();
        assert_eq!(r.exit_code(), exit::SUCCESS);
        assert_eq!(r.params.unwrap().beta, 0.0);
        assert!((r.d_delta_sq - 1.0).abs() < 1e-15);
    }

    #[test]
    fn verify_below_threshold() {
        let r = verify(3, 0.4).unwrap();
        assert_eq!(r.exit_code(), exit::OUT_OF_DOMAIN);
        assert!((r.d_delta_sq + 0.5).abs() < 1e-15);
        assert!(r.render().contains("not constructible"));
    }

    #[test]
    fn verify_bad_parameters_are_usage_errors() {
        assert!(matches!(verify(1, 0.5), Err(Error::Usage(_))));
        assert!(matches!(verify(2, 1.5), Err(Error::Usage(_))));
    }

    #[test]
    fn ppt_report_matches() {
        let r = ppt_report(3, 0.75).unwrap();
        assert!(r.max_deviation() < 1e-10);
        assert!(r.min_eigenvalue().abs() < 1e-12);
        assert!(r.ppt());
    }
}
