//! Fine capacity sweep locating the largest gaps.

use bmsord::{gap_row, CapacityGapRow};
use rayon::prelude::*;

fn main() -> bmsord::Result<()> {
    let rows: Vec<CapacityGapRow> = (1..1000)
        .into_par_iter()
        .map(|k| gap_row(k as f64 / 1000.0))
        .collect::<bmsord::Result<_>>()?;
    let d = rows.iter().max_by(|a, b| a.d_gap.total_cmp(&b.d_gap)).unwrap();
    let u = rows.iter().max_by(|a, b| a.u_gap.total_cmp(&b.u_gap)).unwrap();
    println!("max d_gap {:.4} at c={:.3}", d.d_gap, d.c);
    println!("max u_gap {:.4} at c={:.3}", u.u_gap, u.c);
    Ok(())
}
