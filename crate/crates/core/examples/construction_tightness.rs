//! Three-block construction: edge counts against the predicted densities and
//! against n²/4.
//!
//! cargo run --release --example construction_tightness -- 900 135

use rainbow_mantel::build_construction;
use rainbow_mantel::constructions::{density_report, ConstructionParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let runs: Vec<ConstructionParams> = match args[..] {
        [n, block] => vec![ConstructionParams::new(n, block)?],
        [n] => vec![ConstructionParams::near_tau(n)?],
        _ => [100, 300, 900, 2000].into_iter().map(ConstructionParams::near_tau).collect::<Result<_, _>>()?,
    };

    println!("{:>6} {:>5} {:>24} {:>10} {:>9} {:>9}  beats n²/4", "n", "block", "edges", "min", "density", "target");
    for p in runs {
        let t = build_construction(&p)?;
        let r = density_report(&p, &t)?;
        assert_eq!(r.rainbow_count, 0);
        println!(
            "{:>6} {:>5} {:>24} {:>10} {:>9.6} {:>9.6}  {}",
            r.n,
            r.block,
            format!("{:?}", r.edges),
            r.min_edges,
            r.min_density,
            r.threshold,
            r.beats_quarter
        );
    }
    Ok(())
}
