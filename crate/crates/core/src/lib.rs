//! # qcap
//!
//! Numerical toolkit for the zero-capacity region of the `d`-dimensional
//! depolarizing channel `𝒟ₓ(ρ) = (1−x)ρ + x·tr(ρ)·I/d`.
//!
//! - [`matcore`]: dense complex matrices, partial trace/transpose, Hermitian
//!   eigendecomposition, von Neumann entropy.
//! - [`channels`]: Kraus channels, composition, Choi matrices, Stinespring
//!   isometries, complementary channels.
//! - [`families`]: the depolarizing channel, its closed-form complement, the
//!   explicit anti-degrading map (exists exactly for `x ≥ 1/2`), the qutrit
//!   transpose-depolarizing channel, and noise contamination `𝒟ₓ ∘ Λ`.
//! - [`analysis`]: PPT spectra and the `d/(d+1)` threshold, anti-degradability
//!   residuals, coherent information and its maximization.
//! - [`cli`]: scans, reports and channel-file I/O behind the `qcap` binary.
//!
//! Runnable walkthroughs live in `crates/core/examples/`:
//!
//! ```bash
//! cargo run -p qcap --example depolarizing_channel
//! cargo run -p qcap --example complementary_channel
//! cargo run -p qcap --example antidegrading_map
//! cargo run -p qcap --example ppt_threshold
//! cargo run -p qcap --release --example coherent_information
//! cargo run -p qcap --release --example contaminated_channel
//! cargo run -p qcap --example transpose_depolarizing
//! cargo run -p qcap --example scan_csv
//! ```
//!
//! ```
//! use qcap::analysis::antidegradability_residual;
//! use qcap::families::NoiseParameter;
//!
//! let p = NoiseParameter::new(3, 0.6).unwrap();
//! assert!(antidegradability_residual(p).unwrap() < 1e-9);
//! ```

pub mod analysis;
pub mod channels;
pub mod cli;
pub mod error;
pub mod families;
pub mod matcore;

pub use error::{DomainViolation, Error, Result};
