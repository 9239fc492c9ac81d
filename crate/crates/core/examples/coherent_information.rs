//! Maximizes one-shot coherent information of the qubit depolarizing channel
//! across the noise range. Values are single-letter: zero is a consistency
//! witness, not a capacity proof.
//!
//! Best run in release mode.

use qcap::analysis::{coherent_information, maximize_coherent_information, OptimizerConfig};
use qcap::families::{depolarizing, NoiseParameter};
use qcap::matcore::DensityMatrix;

fn main() -> qcap::Result<()> {
    let d = 2;
    let cfg = OptimizerConfig::with_seed(42);
    println!("{:>5} {:>14} {:>14} {:>6}", "x", "max I_c", "I_c(I/d)", "iters");
    for k in 0..=10 {
        let x = k as f64 / 10.0;
        let ch = depolarizing(NoiseParameter::new(d, x)?);
        let best = maximize_coherent_information(&ch, &cfg)?;
        let mixed = coherent_information(&ch, &DensityMatrix::maximally_mixed(d))?;
        println!("{x:>5.2} {:>14.6e} {:>14.6e} {:>6}", best.value, mixed, best.iterations);
    }
    Ok(())
}
