//! The isometry group of the Cantor space at finite levels: orders, distance
//! preservation, commuting conjugates and conjugacy class growth.

use conjcoarse::bergman::{
    commuting_conjugates_exhaustive, conjugacy_growth, level_order, transitivity_witness, BitSeq, Isometry,
    LimitElement,
};

fn main() {
    for n in 1..=4 {
        println!("|G_{n}| = {}", level_order(n));
    }

    let g = Isometry::generator(2, 3).compose(&Isometry::generator(1, 3));
    println!("g = {:?}, distance preserving: {}", g.table(), g.is_distance_preserving());

    for level in 1..=3 {
        let r = commuting_conjugates_exhaustive(level).unwrap();
        println!(
            "level {level}: {} triples, {} violations, {} forced commutations",
            r.triples, r.violations, r.forced_commutations
        );
    }

    let target = BitSeq::from_support(&[1, 3]);
    let w = transitivity_witness(target);
    println!("0 -> {:?} via {:?}", w.apply(BitSeq(0)).support(), w.table());

    let a = LimitElement::generator(1, 1);
    println!("class sizes of the root swap by level: {:?}", conjugacy_growth(&a, 4, 1 << 20).unwrap());
}
