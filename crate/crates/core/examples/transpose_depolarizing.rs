//! The qutrit transpose-depolarizing channel and its lift of an arbitrary channel.

use qcap::analysis::{is_ppt, ppt_spectrum};
use qcap::channels::{compose, KrausChannel};
use qcap::families::transpose_depolarizing;
use qcap::matcore::DensityMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qcap::Result<()> {
    for x in [0.0, 0.25, 0.5, 4.0 / 7.0, 0.75, 1.0] {
        let ch = transpose_depolarizing(x, 3)?;
        let min = ppt_spectrum(&ch)?[0];
        println!(
            "x = {x:.4}: {} Kraus ops, TP residual {:.1e}, min PPT eig {min:+.6}, PPT {}",
            ch.num_kraus(),
            ch.validate_cpt().tp_residual,
            is_ppt(min)
        );
    }

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let phi = KrausChannel::random(3, 3, 2, &mut rng);
    let lifted = compose(&transpose_depolarizing(0.6, 3)?, &phi)?;
    let rho = DensityMatrix::random(3, &mut rng);
    let out = lifted.apply(rho.as_matrix())?;
    println!("lifted channel: {} Kraus ops, output trace {:.12}", lifted.num_kraus(), out.trace().re);
    Ok(())
}
