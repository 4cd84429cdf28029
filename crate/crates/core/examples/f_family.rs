//! The F_r graphs: construction, recognition under relabelling and the
//! balanced split found by removing the apex.

use equimatch::canon::isomorphic;
use equimatch::classify::classify_regular;
use equimatch::decomposition::balanced_bipartition_search;
use equimatch::families::{build_family, f_graph_apex, recognize_family, FamilySpec};

fn main() {
    for r in [2, 4, 6, 8] {
        let g = build_family(&FamilySpec::F(r)).unwrap();
        let shuffled: Vec<usize> = (0..g.order()).rev().collect();
        let h = g.permuted(&shuffled);
        println!(
            "F{r}: n={} apex={} recognized={:?} class={} relabelled-isomorphic={}",
            g.order(),
            f_graph_apex(r),
            recognize_family(&h).map(|s| s.to_string()),
            classify_regular(&h),
            isomorphic(&g, &h)
        );
        let split = balanced_bipartition_search(&g);
        if let Some(s) = split.found {
            println!(
                "      split at u={}: X={:?} Y={:?} (hypotheses hold: {})",
                s.u,
                s.x.to_vec(),
                s.y.to_vec(),
                split.hypotheses_hold
            );
        }
    }
}
