//! Library-side version of `qcap scan-depolarizing`: a qutrit scan written as CSV to stdout.

use std::io;

use qcap::cli::{scan_depolarizing, write_scan_csv, ScanConfig};

fn main() -> qcap::Result<()> {
    let cfg = ScanConfig::new(3, 0.0, 1.0, 21);
    let records = scan_depolarizing(&cfg)?;
    write_scan_csv(&records, io::stdout().lock())?;

    let first_ppt = records.iter().find(|r| r.ppt).map(|r| r.x);
    let first_ad = records.iter().find(|r| r.antidegradable_constructible).map(|r| r.x);
    eprintln!("anti-degradable from x = {first_ad:?}, PPT from x = {first_ppt:?}");
    Ok(())
}
