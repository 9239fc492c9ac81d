//! Partial-transposed Choi spectrum of the depolarizing channel and the
//! d/(d+1) entanglement-binding threshold next to the x = 1/2 boundary.

use qcap::analysis::{analytic_ppt_spectrum, is_ppt, ppt_spectrum, ppt_threshold, ANTIDEGRADABLE_THRESHOLD};
use qcap::families::{depolarizing, NoiseParameter};

fn main() -> qcap::Result<()> {
    println!("{:>3} {:>10} {:>14}", "d", "ppt from", "anti-deg from");
    for d in 2..=8 {
        println!("{d:>3} {:>10.6} {:>14}", ppt_threshold(d), ANTIDEGRADABLE_THRESHOLD);
    }

    let d = 2;
    println!("\nd = {d}:");
    for k in 0..=10 {
        let x = k as f64 / 10.0;
        let p = NoiseParameter::new(d, x)?;
        let numeric = ppt_spectrum(&depolarizing(p))?;
        let analytic = analytic_ppt_spectrum(p);
        println!(
            "  x = {x:.1}: min eig {:+.6} (closed form {:+.6}), PPT {}",
            numeric[0],
            analytic.antisym_value,
            is_ppt(numeric[0])
        );
    }
    Ok(())
}
