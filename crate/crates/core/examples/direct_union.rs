//! Components of the conjugation coarse structure: conjugacy classes of a
//! finitely generated group are connected, and a set of seeds decides
//! whether the group splits as a direct union of bounded pieces.

use conjcoarse::coarse::{component, is_bounded, is_direct_union, Budget, EntourageSpec};
use conjcoarse::group::Group;
use conjcoarse::zoo::{make_group, GroupSpec, InfiniteDihedral};

fn main() {
    let budget = Budget::default();

    let s4 = make_group(&GroupSpec::symmetric(4)).unwrap().ctx;
    for g in s4.generators() {
        let v = component(s4.as_ref(), &g, &budget);
        println!("S4: component of {}: {:?} {}", s4.format(&g), v.status, v.certificate.unwrap_or_default());
    }
    let e = EntourageSpec::generating(s4.as_ref());
    println!("S4 direct union of classes: {:?}", is_direct_union(s4.as_ref(), &e, &s4.generators(), &budget).status);

    let d = InfiniteDihedral;
    let seeds = d.enumerate(20);
    let e = EntourageSpec::generating(&d);
    let v = is_direct_union(&d, &e, &seeds, &budget);
    println!("D∞: {:?}, translation classes {}", v.status, v.certificate.unwrap_or_default());
    println!("{{t^0..t^3}} bounded: {:?}", is_bounded(&d, &(0..4).map(InfiniteDihedral::t_pow).collect::<Vec<_>>(), &budget).status);
}
