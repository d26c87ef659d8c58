//! The three extremal Λ curves for one capacity.

use bmsord::{x_of_z, ExtremalProfile};

fn main() -> bmsord::Result<()> {
    let c: f64 = std::env::args().nth(1).map_or(0.5, |s| s.parse().expect("capacity"));
    let p = ExtremalProfile::new(c)?;
    println!("c={c}  eps_bsc={:.6}  z_bsc={:.6}  x_bsc={:.6}", p.eps_bsc, p.z_bsc, p.x_bsc());
    println!("{:>5} {:>9} {:>9} {:>9} {:>9}", "z", "under", "bar", "star", "x(z)");
    for i in 0..=20 {
        let z = i as f64 / 20.0;
        let x = if z >= p.z_bsc && z < 1.0 { format!("{:>9.5}", x_of_z(z)?) } else { format!("{:>9}", "-") };
        println!(
            "{z:>5.2} {:>9.5} {:>9.5} {:>9.5} {x}",
            p.lambda_under(z)?,
            p.lambda_bar(z)?,
            p.lambda_star(z)?
        );
    }
    Ok(())
}
