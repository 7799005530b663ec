//! Reads a triple in the edge-list format (or uses a small built-in one),
//! counts rainbow triangles and lists digons.
//!
//! cargo run --example rainbow_check -- triple.txt

use rainbow_mantel::format::{parse_triple, read_triple_file};
use rainbow_mantel::{count_rainbow_triangles, find_rainbow_triangle, list_digons};

const SAMPLE: &str = "\
# a 5-cycle in colour 1, a chord pattern in colours 2 and 3
n 5
1 0 1
1 1 2
1 2 3
1 3 4
1 0 4
2 1 3
2 0 2
3 0 3
3 1 3
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let triple = match std::env::args().nth(1) {
        Some(path) => read_triple_file(path)?,
        None => parse_triple(SAMPLE)?,
    };
    println!("n = {}, edges = {:?}", triple.order(), triple.edge_counts());
    println!("rainbow triangles (ordered): {}", count_rainbow_triangles(&triple));
    match find_rainbow_triangle(&triple) {
        Some(w) => println!("first witness: {:?}", w.as_array()),
        None => println!("rainbow-free"),
    }
    for d in list_digons(&triple) {
        println!("digon {{{}, {}}} in colours {}", d.x, d.y, d.colors);
    }
    Ok(())
}
