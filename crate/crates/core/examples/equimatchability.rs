//! Equimatchability, factor-criticality, independence number and the
//! regular classification for a suite of named graphs.

use equimatch::classify::{classify_regular, is_equimatchable};
use equimatch::families::{build_family, FamilySpec};
use equimatch::independence::independence_number;
use equimatch::matching::is_factor_critical;

fn main() {
    let suite = [
        FamilySpec::Complete(5),
        FamilySpec::CompleteBipartite(4, 4),
        FamilySpec::Cycle(5),
        FamilySpec::Cycle(6),
        FamilySpec::Cycle(7),
        FamilySpec::ComplementCycle(7),
        FamilySpec::F(4),
        FamilySpec::F(6),
        FamilySpec::Petersen,
        FamilySpec::Prism,
    ];
    println!(
        "{:<24} {:>3} {:>5} {:>5} {:>5}  class",
        "graph", "nu", "eqm", "fc", "alpha"
    );
    for spec in suite {
        let g = build_family(&spec).unwrap();
        let v = is_equimatchable(&g);
        println!(
            "{:<24} {:>3} {:>5} {:>5} {:>5}  {}",
            spec.to_string(),
            v.nu,
            v.equimatchable,
            is_factor_critical(&g),
            independence_number(&g).0,
            classify_regular(&g)
        );
        if let Some(w) = v.witness {
            println!("{:<24} smaller maximal matching: {:?}", "", w.edges());
        }
    }
}
