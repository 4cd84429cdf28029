//! Encode named graphs to graph6 and decode them back.

use equimatch::families::{build_family, FamilySpec};
use equimatch::graph6;

fn main() {
    let specs = [
        FamilySpec::Complete(4),
        FamilySpec::CompleteBipartite(3, 3),
        FamilySpec::Petersen,
        FamilySpec::F(6),
    ];
    for spec in specs {
        let g = build_family(&spec).expect("valid family");
        let line = graph6::encode(&g).expect("fits graph6");
        let back = graph6::decode(&line).expect("own output decodes");
        assert_eq!(back, g);
        println!(
            "{spec:<24} n={:<3} m={:<3} {line}",
            g.order(),
            g.edge_count()
        );
    }
    match graph6::decode("C") {
        Ok(_) => unreachable!(),
        Err(e) => println!("truncated input rejected: {e}"),
    }
}
