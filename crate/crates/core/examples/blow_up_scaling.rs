//! Blow-ups multiply edge counts by k² and ordered rainbow counts by k³.

use rainbow_mantel::constructions::ConstructionParams;
use rainbow_mantel::{build_construction, count_rainbow_triangles, GraphTriple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(label: &str, t: &GraphTriple) -> Result<(), Box<dyn std::error::Error>> {
    let base_edges = t.edge_counts();
    let base_count = count_rainbow_triangles(t);
    println!("{label}: n = {}, edges {:?}, rainbow {}", t.order(), base_edges, base_count);
    for k in 2..=4 {
        let b = t.blow_up(k)?;
        let count = count_rainbow_triangles(&b);
        assert_eq!(b.edge_counts(), base_edges.map(|e| e * k * k));
        assert_eq!(count, base_count * (k as u64).pow(3));
        println!("  k = {k}: n = {:>3}, edges {:?}, rainbow {count}", b.order(), b.edge_counts());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    report("construction", &build_construction(&ConstructionParams::new(20, 3)?)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    report("random", &GraphTriple::random(8, 0.5, &mut rng)?)?;
    Ok(())
}
