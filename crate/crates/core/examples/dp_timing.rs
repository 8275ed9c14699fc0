//! Wall-clock time of the rank DP per family spec:
//! `cargo run --release --example dp_timing -- path:400 dary:2:255`

use std::time::Instant;

use tree_descent::{generate_family, poly::poly_by_rank_dp, TreeFamilySpec};

fn main() {
    for arg in std::env::args().skip(1) {
        let spec: TreeFamilySpec = match arg.parse() {
            Ok(spec) => spec,
            Err(e) => {
                eprintln!("{arg}: {e}");
                std::process::exit(2);
            }
        };
        let tree = generate_family(&spec).expect("valid spec");
        let start = Instant::now();
        let table = poly_by_rank_dp(&tree).expect("a tree");
        println!("{spec}: {:.3}s, {} coefficients", start.elapsed().as_secs_f64(), table.edges() + 1);
    }
}
