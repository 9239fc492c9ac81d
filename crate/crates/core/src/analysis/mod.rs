//! Diagnostics on channels: partial-transpose spectra and the PPT threshold,
//! the anti-degradability residual, and coherent information with its
//! numerical maximization.

mod coherent;
mod optimizer;
mod spectrum;

pub use coherent::{coherent_information, finite_difference_gradient, CoherentInformation};
pub use optimizer::{
    maximize_coherent_information, CoherentInfoResult, GradientMode, OptimizerConfig, MAX_OPTIMIZER_DIM,
};
pub use spectrum::{
    analytic_ppt_spectrum, antidegradability_residual, is_ppt, ppt_spectrum, ppt_threshold, PptSpectrum,
    ANTIDEGRADABLE_THRESHOLD, PPT_TOL,
};
