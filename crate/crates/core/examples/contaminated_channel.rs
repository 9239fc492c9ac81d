//! Any channel followed by depolarizing noise with x >= 1/2 inherits the
//! anti-degrading map of the noise. Random qubit channels, contaminated at
//! x = 0.6, all end up with non-positive one-shot coherent information.
//!
//! Best run in release mode.

use qcap::analysis::{maximize_coherent_information, OptimizerConfig};
use qcap::channels::{compose, KrausChannel};
use qcap::families::{antidegrading_map, contaminate, depolarizing_complement, NoiseParameter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qcap::Result<()> {
    let x = 0.6;
    let p = NoiseParameter::new(2, x)?;
    let recover = compose(&antidegrading_map(p)?, &depolarizing_complement(p))?;
    let cfg = OptimizerConfig::with_seed(42);
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    for n_kraus in [1, 2, 3, 4] {
        let lambda = KrausChannel::random(2, 2, n_kraus, &mut rng);
        let noisy = contaminate(&lambda, x)?;
        let lifted = compose(&recover, &lambda)?;
        let residual = lifted.choi().distance(&noisy.choi())?;
        let before = maximize_coherent_information(&lambda, &cfg)?.value;
        let after = maximize_coherent_information(&noisy, &cfg)?.value;
        println!(
            "{n_kraus} Kraus ops: max I_c {before:+.6} -> {after:+.3e}, lifted identity residual {residual:.2e}"
        );
    }
    Ok(())
}
