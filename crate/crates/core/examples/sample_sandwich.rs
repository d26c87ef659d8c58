//! Random channels of fixed capacity always sit between the extremal curves.

use bmsord::{lambda_eval, sample_batch, ExtremalProfile, SamplerConfig};

fn main() -> bmsord::Result<()> {
    let c = 0.4;
    let p = ExtremalProfile::new(c)?;
    let grid: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    let bounds: Vec<(f64, f64)> = grid
        .iter()
        .map(|&z| Ok((p.lambda_under(z)?, p.lambda_bar(z)?)))
        .collect::<bmsord::Result<_>>()?;

    for masses in [2, 3] {
        let channels = sample_batch(&SamplerConfig::new(c, masses, 2024), 2000)?;
        let mut worst = f64::NEG_INFINITY;
        for ch in &channels {
            for (&z, &(lo, hi)) in grid.iter().zip(&bounds) {
                let v = lambda_eval(ch, z)?;
                worst = worst.max(lo - v).max(v - hi);
            }
        }
        println!("{masses} masses: {} channels, worst bound excess {worst:.2e}", channels.len());
    }
    Ok(())
}
