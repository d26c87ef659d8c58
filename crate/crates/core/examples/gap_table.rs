//! Capacities of the least degraded and least upgraded channels.

use bmsord::gap_row;

fn main() -> bmsord::Result<()> {
    println!("{:>4} {:>8} {:>8} {:>8} {:>8}", "c", "C*", "C_*", "d_gap", "u_gap");
    for k in 1..=9 {
        let r = gap_row(k as f64 / 10.0)?;
        println!(
            "{:>4.1} {:>8.4} {:>8.4} {:>8.4} {:>8.4}",
            r.c, r.c_star, r.c_under, r.d_gap, r.u_gap
        );
    }
    Ok(())
}
