//! Compare channels in the degradation order.

use bmsord::{compare, epsilon_bsc, lambda_profile, least_degraded_channel, DiscreteChannel};

fn main() -> bmsord::Result<()> {
    let c = 0.5;
    let bsc = DiscreteChannel::bsc(epsilon_bsc(c)?)?;
    let bec = DiscreteChannel::bec(1.0 - c)?;
    let bec_small = DiscreteChannel::bec(0.4)?;
    let noisier = DiscreteChannel::bsc(0.2)?;
    let least = least_degraded_channel(c)?;

    let pairs = [
        ("BSC(0.2)", &noisier, "BEC(0.4)", &bec_small),
        ("BEC(0.4)", &bec_small, "BSC(0.2)", &noisier),
        ("BSC(c=0.5)", &bsc, "BEC(c=0.5)", &bec),
        ("BSC(c=0.5)", &bsc, "least degraded", &least),
        ("BEC(c=0.5)", &bec, "least degraded", &least),
    ];
    for (na, a, nb, b) in pairs {
        let ord = compare(&lambda_profile(a), &lambda_profile(b));
        println!("{na:>14} vs {nb:<15} {}", ord.label());
    }
    Ok(())
}
