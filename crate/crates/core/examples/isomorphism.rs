//! Canonical forms decide isomorphism: the complement of C7 against a
//! shuffled copy and against C7 itself.

use equimatch::canon::{canonical_labeling, canonicalize, isomorphic};
use equimatch::families::{build_family, FamilySpec};

fn main() {
    let g = build_family(&FamilySpec::ComplementCycle(7)).unwrap();
    let perm = [3, 6, 2, 0, 5, 1, 4];
    let h = g.permuted(&perm);
    let c7 = build_family(&FamilySpec::Cycle(7)).unwrap();
    println!(
        "same canonical form: {}",
        canonicalize(&g) == canonicalize(&h)
    );
    println!("complement-C7 ~ shuffled copy: {}", isomorphic(&g, &h));
    println!("complement-C7 ~ C7: {}", isomorphic(&g, &c7));
    let lab = canonical_labeling(&g);
    println!(
        "canonical relabelling {:?}, {} automorphism generators",
        lab.relabel,
        lab.automorphisms.len()
    );
}
