//! Constructs the anti-degrading map for x >= 1/2, checks `N o Dc = D`, and
//! shows the construction failing just below the threshold.

use qcap::analysis::antidegradability_residual;
use qcap::families::{antidegrading_map, AntiDegradingParams, NoiseParameter};

fn main() -> qcap::Result<()> {
    let d = 3;
    println!("{:>6} {:>10} {:>10} {:>10} {:>8} {:>10}", "x", "beta", "delta", "d*delta^2", "kraus", "residual");
    for x in [0.5, 0.6, 0.75, 0.9, 1.0] {
        let p = NoiseParameter::new(d, x)?;
        let params = AntiDegradingParams::solve(p)?;
        let n = antidegrading_map(p)?;
        println!(
            "{x:>6.2} {:>10.6} {:>10.6} {:>10.6} {:>8} {:>10.2e}",
            params.beta,
            params.delta,
            params.d_delta_sq(),
            n.num_kraus(),
            antidegradability_residual(p)?
        );
    }

    let below = NoiseParameter::new(d, 0.5 - 1e-6)?;
    match antidegrading_map(below) {
        Ok(_) => println!("unexpected: map built below threshold"),
        Err(e) => println!("x = 0.5 - 1e-6: {e}"),
    }
    Ok(())
}
