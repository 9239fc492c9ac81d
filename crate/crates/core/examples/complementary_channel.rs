//! The closed-form complement of the depolarizing channel against the one
//! read off a Stinespring dilation.

use qcap::families::{depolarizing, depolarizing_complement, NoiseParameter};
use qcap::matcore::{frobenius_distance, DensityMatrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qcap::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in [2, 3, 4] {
        for x in [0.0, 0.3, 0.5, 1.0] {
            let p = NoiseParameter::new(d, x)?;
            let closed = depolarizing_complement(p);
            let iso = depolarizing(p).stinespring();
            let rho = DensityMatrix::random(d, &mut rng);
            let a = closed.apply(rho.as_matrix())?;
            let b = iso.environment(rho.as_matrix())?;
            let choi = closed.choi().distance(&depolarizing(p).complementary().choi())?;
            println!(
                "d={d} x={x:.1}: env dim {:>2}, state gap {:.2e}, Choi gap {:.2e}",
                iso.dim_env,
                frobenius_distance(&a, &b)?,
                choi
            );
        }
    }
    Ok(())
}
