//! Maximum, maximal, perfect and isolating matchings of small graphs.

use equimatch::families::{build_family, FamilySpec};
use equimatch::matching::{
    enumerate_maximal_matchings, enumerate_minimal_isolating, enumerate_perfect_matchings,
    find_augmenting_path, maximum_matching, minimize_isolating, Matching,
};
use equimatch::{Graph, VertexSet};

fn main() {
    let pet = build_family(&FamilySpec::Petersen).unwrap();
    let m = maximum_matching(&pet);
    println!("Petersen: maximum matching {:?}", m.edges());

    let all = enumerate_maximal_matchings(&pet, usize::MAX);
    println!(
        "Petersen: {} maximal matchings, size counts {:?}",
        all.matchings.len(),
        all.size_counts
    );
    println!(
        "Petersen: {} perfect matchings",
        enumerate_perfect_matchings(&pet, 100).len()
    );

    // on the path 0-1-2-3-4-5 with 12 and 34 matched, the ends are joined by an augmenting path
    let p6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
    let start = Matching::new(&p6, &[(1, 2), (3, 4)]).unwrap();
    let path = find_augmenting_path(
        &p6,
        &start,
        VertexSet::singleton(0),
        VertexSet::singleton(5),
    )
    .unwrap()
    .expect("not maximum");
    println!(
        "P6: augmenting path {:?} -> {:?}",
        path.vertices,
        path.augment(&start).edges()
    );

    let c7 = build_family(&FamilySpec::Cycle(7)).unwrap();
    for m in enumerate_minimal_isolating(&c7, 0, 10).unwrap() {
        println!("C7: minimal matching isolating 0: {:?}", m.edges());
    }
    let wide = Matching::new(&c7, &[(1, 2), (3, 4), (5, 6)]).unwrap();
    println!(
        "C7: {:?} minimizes to {:?}",
        wide.edges(),
        minimize_isolating(&c7, &wide, 0).unwrap().edges()
    );
}
