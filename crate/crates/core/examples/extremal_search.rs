//! Exact values of the rainbow-extremal function for small n, and local
//! search lower bounds beyond that.
//!
//! cargo run --release --example extremal_search -- 7

use rainbow_mantel::search::{
    bipartite_lower_bound, branch_and_bound_r, exhaustive_r, local_search_r_with, LocalInit, LocalSearchConfig,
    DEFAULT_BUDGET,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: usize = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(6);

    println!("{:>3} {:>6} {:>6} {:>12} {:>10}", "n", "R(n)", "n²/4", "nodes", "seconds");
    for n in 2..=max_n {
        let out = branch_and_bound_r(n, DEFAULT_BUDGET)?;
        if n <= 4 {
            assert_eq!(exhaustive_r(n)?.value, out.value);
        }
        let mark = if out.exact { "" } else { " (lower bound)" };
        println!(
            "{n:>3} {:>6} {:>6} {:>12} {:>10.3}{mark}",
            out.value,
            bipartite_lower_bound(n),
            out.nodes_visited,
            out.wall_time.as_secs_f64()
        );
    }

    println!("\nlocal search from the construction:");
    for n in [40, 80, 120] {
        let config = LocalSearchConfig {
            seed: 1,
            iterations: 50_000,
            init: LocalInit::Construction(None),
            ..Default::default()
        };
        let out = local_search_r_with(n, &config)?;
        println!("{n:>4}: min colour {} vs n²/4 = {}", out.value, bipartite_lower_bound(n));
    }
    Ok(())
}
