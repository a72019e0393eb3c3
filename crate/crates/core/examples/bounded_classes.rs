//! Q8 × Z has commutant of order 2, so every ball meets a conjugacy class in
//! at most 2 points. A greedy coloring splits a ball of the group into two
//! parts that are discrete away from a few exceptional points.

use std::sync::Arc;

use conjcoarse::coarse::{is_n_discrete, partition_n_discrete, verify_partition, Budget, EntourageSpec};
use conjcoarse::conj::{characterization_suite, Characterization};
use conjcoarse::group::{direct_product, Element, Group, GroupRef};
use conjcoarse::zoo::{Abelian, Quaternion};

fn main() {
    let g = Arc::new(direct_product(Arc::new(Quaternion), Arc::new(Abelian::free(1))));
    let budget = Budget::default().with_radius(20);

    let ctx: GroupRef = g.clone();
    let r = characterization_suite(Characterization::BoundedClasses, &ctx, &budget);
    println!("{}: commutant {}, classes {:?}, {:?}", r.group, r.algebraic_detail, r.definitional, r.agreement);

    let e = EntourageSpec::new(g.as_ref(), g.enumerate(2));
    for n in 1..=2 {
        println!("  {n}-discrete for the radius-2 ball of movers: {:?}", is_n_discrete(g.as_ref(), &e, n, &budget).status);
    }

    let a = g.enumerate(4);
    let j = g.pair(&Quaternion::unit("j"), &Element::new(vec![0]));
    let e = EntourageSpec::new(g.as_ref(), [j]);
    let p = partition_n_discrete(g.as_ref(), &a, &e, 2).unwrap();
    let sizes: Vec<usize> = p.parts.iter().map(Vec::len).collect();
    println!(
        "{} points -> parts {:?}, {} exceptional, verified: {}",
        a.len(),
        sizes,
        p.exceptional.len(),
        verify_partition(g.as_ref(), &a, &e, &p)
    );
}
