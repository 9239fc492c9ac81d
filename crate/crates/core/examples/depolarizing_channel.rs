//! Builds the depolarizing channel, checks it is CPT and applies it to a pure state.

use qcap::families::{depolarizing, depolarizing_action, NoiseParameter};
use qcap::matcore::{von_neumann_entropy, DensityMatrix};

fn main() -> qcap::Result<()> {
    let p = NoiseParameter::new(3, 0.4)?;
    let ch = depolarizing(p);
    let report = ch.validate_cpt();
    println!(
        "d = {}, x = {}: {} Kraus operators, TP residual {:.2e}",
        p.d(),
        p.x(),
        ch.num_kraus(),
        report.tp_residual
    );

    let rho = DensityMatrix::basis(3, 0);
    let out = ch.apply(rho.as_matrix())?;
    let direct = depolarizing_action(p, rho.as_matrix());
    println!("output diagonal:");
    for i in 0..3 {
        println!("  {:.6}", out[(i, i)].re);
    }
    println!("Kraus vs direct formula: {:.2e}", out.max_abs_diff(&direct)?);
    println!("output entropy: {:.6} bits", von_neumann_entropy(&out)?);

    let j = ch.choi();
    println!("Choi matrix {}x{}, trace {:.3}", j.matrix.rows(), j.matrix.cols(), j.matrix.trace().re);
    Ok(())
}
