//! Runs the lemma checks at a reduced size and prints the digon case counts
//! per colour labeling.

use rainbow_mantel::lemmas::{
    classify_scene, enumerate_digon_case1, enumerate_digon_case2, run_suite, DigonShape, Labeling, SuiteConfig,
};
use rainbow_mantel::{Color, ColorSet};

fn main() {
    let config = SuiteConfig { exhaustive_max: 6, samples: 2_000, ..Default::default() };
    for row in run_suite(&config) {
        let status = if row.passed() { "ok" } else { "FAIL" };
        println!("{:<24} {:>9} checked {:>3} failed  {status}", row.name, row.checked, row.failures);
    }

    println!();
    for r in enumerate_digon_case1().iter().chain(&enumerate_digon_case2()) {
        let cases: Vec<String> = r.cases.iter().map(|(c, n)| format!("{c}:{n}")).collect();
        println!(
            "(i,j,k) = {:?}  rainbow {:>4}  triple {:>4}  disjoint-k {:>4}  {}",
            r.labeling,
            r.filtered_rainbow,
            r.filtered_triple_coloured,
            r.filtered_disjoint_k,
            cases.join(" ")
        );
    }

    // The extremal five-edge configuration between X = {0,1} and X' = {2,3}.
    let l = Labeling::new(Color::One, Color::Two, Color::Three).unwrap();
    let cross = [
        ColorSet::EMPTY,
        ColorSet::of(&[Color::One, Color::Two]),
        ColorSet::of(&[Color::One, Color::Three]),
        ColorSet::of(&[Color::One]),
    ];
    let out = classify_scene(DigonShape::SharedColour, l, cross).unwrap();
    println!("\nfive cross edges {:?}: case {}", out.cross_counts, out.case);
}
