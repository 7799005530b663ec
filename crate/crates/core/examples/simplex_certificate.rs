//! Box certificate for the final inequality system, with and without the
//! exact corner argument, plus the numeric checks around it.
//!
//! cargo run --release --example simplex_certificate -- 512

use rainbow_mantel::certify::{
    certify_with, check_tau_identities, corner_threshold, derived_chain_checks, final_d_bound, CertifyOptions,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let resolution: usize = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(512);

    let tau = check_tau_identities();
    println!("tau = {:.12}, tau² = {:.12}", tau.tau, tau.tau_squared);
    for (name, r) in &tau.residuals {
        println!("  {name:<34} {r:+.2e}");
    }

    for corner_rule in [false, true] {
        let cert = certify_with(&CertifyOptions { resolution, corner_rule })?;
        let e = cert.boxes_excluded_by;
        println!(
            "\nR = {resolution}, corner rule {corner_rule}: {} boxes, g1 {} g2 {} g3 {} corner {}, undecided {}",
            cert.boxes_total,
            e.g1,
            e.g2,
            e.g3,
            e.corner,
            cert.undecided.len()
        );
        if let Some(b) = cert.undecided.first() {
            println!("  e.g. a ∈ {:?}, b ∈ {:?}, c ∈ {:?}", b.a, b.b, b.c);
        }
        if let Some(b) = cert.tightest.first() {
            println!("  tightest excluded box {:?}, margin {:.2e}", b.index, b.margin);
        }
    }
    println!("\ncorner region: a > {:.6}", corner_threshold());

    for check in derived_chain_checks(200_000, 7).checks {
        println!("{:<50} {:>7} tested {:>2} failed", check.name, check.tested, check.failures);
    }
    println!("d > {:.6}", final_d_bound());
    Ok(())
}
