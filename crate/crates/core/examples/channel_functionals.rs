//! Functionals and Λ profile of a few standard channels.

use bmsord::{epsilon_bsc, lambda_profile, DiscreteChannel};

fn main() -> bmsord::Result<()> {
    let eps = epsilon_bsc(0.5)?;
    let channels = [
        ("BSC", DiscreteChannel::bsc(eps)?),
        ("BEC", DiscreteChannel::bec(0.5)?),
        ("mixed", DiscreteChannel::new([(0.3, 0.0), (0.3, 0.6), (0.4, 0.95)])?),
    ];
    println!("{:<6} {:>9} {:>9} {:>9} {:>9}", "name", "capacity", "entropy", "bhatt", "p_err");
    for (name, ch) in &channels {
        println!(
            "{name:<6} {:>9.6} {:>9.6} {:>9.6} {:>9.6}",
            ch.capacity(),
            ch.entropy(),
            ch.bhattacharyya(),
            ch.error_probability()
        );
    }

    let (_, mixed) = &channels[2];
    let pl = lambda_profile(mixed);
    println!("\nΛ breakpoints of the mixed channel:");
    for (z, v) in pl.breaks().iter().zip(pl.values()) {
        println!("  z={z:.3}  Λ={v:.4}");
    }
    println!("entropy from Λ: {:.12}", pl.entropy()?);
    println!("{}", mixed.to_json());
    Ok(())
}
