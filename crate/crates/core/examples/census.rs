//! Generate connected regular graphs up to isomorphism and compare the
//! equimatchable ones against the known short list.

use equimatch::census::{connected_regular_graphs, verify_characterization};

fn main() {
    for (n, r) in [(8, 3), (10, 3), (9, 4)] {
        let graphs = connected_regular_graphs(n, r).unwrap();
        println!("n={n} r={r}: {} connected classes", graphs.len());
    }
    for (r, n_max) in [(3, 12), (4, 9)] {
        let report = verify_characterization(r, n_max).unwrap();
        let found: Vec<String> = report
            .found
            .iter()
            .map(|f| format!("{} ({})", f.g6, f.regular_class))
            .collect();
        println!(
            "r={r} up to n={n_max}: match={} found {found:?}",
            report.ok()
        );
    }
}
